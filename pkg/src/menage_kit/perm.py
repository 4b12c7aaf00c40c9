"""Permutations of ``[n] = {1, ..., n}`` in one-line form.

A :class:`Permutation` stores ``images[i - 1] = pi(i)``.  The empty
permutation (``n = 0``) is a perfectly good value: it has no fixed points,
no successions and no cycles.

Two text forms are understood::

    >>> parse("(1,5,4)(2)(3)(6)").one_line()
    '[5,2,3,1,4,6]'
    >>> str(parse("[5,2,3,1,4,6]"))
    '(1,5,4)(2)(3)(6)'
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

DEFAULT_LIMIT = 10


class ParseError(ValueError):
    pass


class LimitExceeded(ValueError):
    """Raised when a brute-force routine is asked for a size above its cap."""


def check_limit(n: int, limit: int, what: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{what} must be nonnegative, got {n}")
    if n > limit:
        raise LimitExceeded(f"{what}={n} exceeds the configured limit {limit}")


class PermStats(NamedTuple):
    """Cycle count ``f``, fixed points ``g``, successions ``h`` and
    generalized successions ``r``."""

    f: int
    g: int
    h: int
    r: int


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of [{len(images)}]: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        # skips validation; callers guarantee a bijection
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]]) -> Permutation:
        n = sum(len(c) for c in cycles)
        images = [0] * n
        for cycle in cycles:
            for a, b in zip(cycle, itertools.chain(cycle[1:], cycle[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"{i} is not in [{self.n}]")
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles, each starting at its smallest element, ordered by that element."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.images[i - 1]
            out.append(tuple(cycle))
        return out

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self.images, 1) if v == i]

    def successions(self) -> list[int]:
        """Sites ``i < n`` with ``pi(i) = i + 1``."""
        return [i for i, v in enumerate(self.images, 1) if v == i + 1]

    def generalized_successions(self) -> list[int]:
        """Sites ``i`` with ``pi(i) = i + 1 (mod n)``; includes ``i = n`` when ``pi(n) = 1``."""
        n = self.n
        return [i for i, v in enumerate(self.images, 1) if v % n == (i + 1) % n]

    def one_line(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"

    def __str__(self) -> str:
        if not self.images:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        return f"Permutation({self.one_line()})"


EMPTY = Permutation(())

_CYCLE = re.compile(r"\(([^()]*)\)")


def _ints(body: str, text: str) -> list[int]:
    body = body.strip()
    if not body:
        return []
    try:
        return [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ParseError(f"malformed permutation {text!r}: bad entry in {body!r}") from None


def _check_cover(values: list[int], text: str) -> None:
    n = len(values)
    seen = set()
    for v in values:
        if v < 1 or v > n:
            raise ParseError(f"element {v} of {text!r} is outside [{n}]")
        if v in seen:
            raise ParseError(f"element {v} appears more than once in {text!r}")
        seen.add(v)


def parse(text: str) -> Permutation:
    """Read cycle notation ``(1,5,4)(2)`` or one-line notation ``[5,2,3,1,4,6]``.

    Cycle notation must list every element of ``[n]``, fixed points included.
    ``""``, ``"()"`` and ``"[]"`` all denote the empty permutation.
    """
    s = "".join(text.split())
    if s in ("", "()", "[]"):
        return EMPTY
    if s[0] == "[":
        if s[-1] != "]":
            raise ParseError(f"malformed permutation {text!r}: missing ']'")
        values = _ints(s[1:-1], text)
        _check_cover(values, text)
        return Permutation(tuple(values))
    if s[0] == "(":
        cycles = []
        pos = 0
        for m in _CYCLE.finditer(s):
            if m.start() != pos:
                raise ParseError(f"malformed permutation {text!r} near {s[pos:m.start()]!r}")
            cycle = _ints(m.group(1), text)
            if not cycle:
                raise ParseError(f"malformed permutation {text!r}: empty cycle")
            cycles.append(cycle)
            pos = m.end()
        if pos != len(s):
            raise ParseError(f"malformed permutation {text!r} near {s[pos:]!r}")
        flat = [v for c in cycles for v in c]
        _check_cover(flat, text)
        return Permutation.from_cycles(cycles)
    raise ParseError(f"malformed permutation {text!r}: expected '(' or '['")


def format_perm(perm: Permutation, style: str = "cycle") -> str:
    if style == "cycle":
        return str(perm)
    if style == "one-line":
        return perm.one_line()
    raise ValueError(f"unknown style {style!r}")


def stats(perm: Permutation) -> PermStats:
    return PermStats(
        f=len(perm.cycles()),
        g=len(perm.fixed_points()),
        h=len(perm.successions()),
        r=len(perm.generalized_successions()),
    )


def is_straight_menage(perm: Permutation) -> bool:
    return all(v != i and v != i + 1 for i, v in enumerate(perm.images, 1))


def is_ordinary_menage(perm: Permutation) -> bool:
    n = perm.n
    return all(v != i and v % n != (i + 1) % n for i, v in enumerate(perm.images, 1))


def enumerate_sn(n: int, limit: int = DEFAULT_LIMIT) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic one-line order."""
    check_limit(n, limit)
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(images)


def delete_point(images: Sequence[int], i: int) -> tuple[int, ...]:
    """Drop position ``i`` and close the gap in the values above ``i``.

    This is the common core of fixed-point removal (``images[i-1] == i``) and
    succession gluing (``images[i-1] == i + 1``); it works equally on
    bijections ``[n] -> {2, ..., n+1}``.
    """
    return tuple(v - 1 if v > i else v for k, v in enumerate(images, 1) if k != i)
