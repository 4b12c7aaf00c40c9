"""Noncrossing partitions and nice bijections, the two Catalan families
that drive the expansion machinery.

A noncrossing partition of ``[n]`` induces a permutation whose cycles walk
each block in increasing order.  These are exactly the permutations that
reduce to the empty permutation.

A bijection ``f: [n] -> {2, ..., n+1}`` is *nice* when fixed-point removal
and succession gluing take it down to ``1 -> 2``.  Replacing a point of a
permutation by a nice bijection can always be undone by reductions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from menage_kit.perm import Permutation, check_limit, delete_point

DEFAULT_LIMIT = 10


def is_noncrossing(blocks: Iterable[Iterable[int]]) -> bool:
    label = {}
    for b, block in enumerate(blocks):
        for x in block:
            label[x] = b
    items = sorted(label)
    # p < q < p' < q' with p~p', q~q' forces p~q
    for p, q, p2, q2 in itertools.combinations(items, 4):
        if label[p] == label[p2] and label[q] == label[q2] and label[p] != label[q]:
            return False
    return True


@dataclass(frozen=True)
class NoncrossingPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {blocks} do not partition [{self.n}]")
        if not is_noncrossing(blocks):
            raise ValueError(f"partition {blocks} is crossing")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> NoncrossingPartition:
        blocks = [tuple(b) for b in blocks]
        return cls(sum(len(b) for b in blocks), tuple(blocks))

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


EMPTY_NCP = NoncrossingPartition(0, ())


def parse_partition(text: str) -> NoncrossingPartition:
    s = "".join(text.split())
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"malformed partition {text!r}")
    inner = s[1:-1]
    if not inner:
        return EMPTY_NCP
    if not (inner.startswith("{") and inner.endswith("}")):
        raise ValueError(f"malformed partition {text!r}")
    blocks = [[int(x) for x in part.split(",")] for part in inner[1:-1].split("},{")]
    return NoncrossingPartition.of(blocks)


def _set_partitions(n: int) -> Iterator[list[list[int]]]:
    # restricted growth strings, lexicographic
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(k: int, top: int):
        if k == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for x, b in enumerate(rgs, 1):
                blocks[b].append(x)
            yield blocks
            return
        for b in range(top + 2):
            rgs[k] = b
            yield from rec(k + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def enumerate_ncp(n: int, limit: int = DEFAULT_LIMIT) -> list[NoncrossingPartition]:
    """Every noncrossing partition of ``[n]``; there are ``C_n`` of them."""
    check_limit(n, limit)
    return [NoncrossingPartition(n, tuple(map(tuple, bl))) for bl in _set_partitions(n) if is_noncrossing(bl)]


def induced_permutation(eps: NoncrossingPartition) -> Permutation:
    images = [0] * eps.n
    for block in eps.blocks:
        for a, b in zip(block, block[1:] + block[:1]):
            images[a - 1] = b
    return Permutation._trusted(tuple(images))


def ncp_preimage(perm: Permutation) -> NoncrossingPartition | None:
    """The noncrossing partition inducing ``perm``, or ``None``."""
    blocks = []
    for cycle in perm.cycles():
        # cycles() starts at the minimum, so an increasing walk is already sorted
        if list(cycle) != sorted(cycle):
            return None
        blocks.append(cycle)
    if not is_noncrossing(blocks):
        return None
    return NoncrossingPartition(perm.n, tuple(blocks))


def pi1(phi: NoncrossingPartition, i: int) -> NoncrossingPartition:
    """Insert a singleton ``{i}``, shifting elements ``>= i`` up by one."""
    n = phi.n + 1
    if not 1 <= i <= n:
        raise ValueError(f"pi1: site {i} outside [{n}]")
    blocks = [tuple(x + 1 if x >= i else x for x in b) for b in phi.blocks]
    blocks.append((i,))
    return NoncrossingPartition(n, tuple(blocks))


def pi2(phi: NoncrossingPartition, i: int) -> NoncrossingPartition:
    """Split ``i`` into ``i, i+1`` inside its block, shifting elements ``> i`` up."""
    if not 1 <= i <= phi.n:
        raise ValueError(f"pi2: site {i} outside [{phi.n}]")
    blocks = []
    for b in phi.blocks:
        new = [x + 1 if x > i else x for x in b]
        if i in b:
            new.append(i + 1)
        blocks.append(tuple(new))
    return NoncrossingPartition(phi.n + 1, tuple(blocks))


def _check_bijection(images: Sequence[int]) -> tuple[int, ...]:
    images = tuple(int(v) for v in images)
    n = len(images)
    if n < 1 or sorted(images) != list(range(2, n + 2)):
        raise ValueError(f"{list(images)} is not a bijection [{n}] -> {{2,...,{n + 1}}}")
    return images


def _bijection_reductions(images: tuple[int, ...]) -> list[int]:
    return [i for i, v in enumerate(images, 1) if v == i or v == i + 1]


def reduce_bijection(images: Sequence[int], choose=None) -> tuple[int, ...]:
    """Reduce a bijection ``[n] -> {2..n+1}`` until stuck or down to ``1 -> 2``.

    ``choose`` picks a site from the applicable ones (default: smallest).
    """
    current = _check_bijection(images)
    while len(current) > 1:
        sites = _bijection_reductions(current)
        if not sites:
            break
        i = choose(sites) if choose else sites[0]
        current = delete_point(current, i)
    return current


def is_nice(images: Sequence[int]) -> bool:
    return reduce_bijection(images) == (2,)


@dataclass(frozen=True)
class NiceBijection:
    images: tuple[int, ...]

    def __post_init__(self):
        images = _check_bijection(self.images)
        if not is_nice(images):
            raise ValueError(f"{list(images)} is not a nice bijection")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def enumerate_nice(n: int, limit: int = DEFAULT_LIMIT) -> list[NiceBijection]:
    """All nice bijections ``[n] -> {2, ..., n+1}`` (``C_n`` of them), lexicographic."""
    check_limit(n, limit)
    if n < 1:
        raise ValueError("nice bijections need n >= 1")
    return [NiceBijection(p) for p in itertools.permutations(range(2, n + 2)) if is_nice(p)]


def _images(f) -> tuple[int, ...]:
    return f.images if isinstance(f, NiceBijection) else tuple(f)


def b1(f, w1: int) -> NiceBijection:
    """Insert a fixed point at ``w1``; reducing it (type 1) gives ``f`` back."""
    f = _images(f)
    s = len(f)
    # the upper end w1 = s + 1 is needed for the expansion to be exhaustive
    if not 1 < w1 <= s + 1:
        raise ValueError(f"b1: need 1 < w1 <= {s + 1}, got {w1}")
    out = []
    for x in range(1, s + 2):
        if x == w1:
            out.append(w1)
            continue
        v = f[x - 1] if x < w1 else f[x - 2]
        out.append(v + 1 if v >= w1 else v)
    return NiceBijection(tuple(out))


def b2(f, w2: int) -> NiceBijection:
    """Split ``w2`` into a succession; reducing it (type 2) gives ``f`` back."""
    f = _images(f)
    s = len(f)
    if not 1 <= w2 <= s + 1:
        raise ValueError(f"b2: need 1 <= w2 <= {s + 1}, got {w2}")
    out = []
    for x in range(1, s + 2):
        if x == w2:
            out.append(w2 + 1)
            continue
        v = f[x - 1] if x < w2 else f[x - 2]
        out.append(v + 1 if v > w2 else v)
    return NiceBijection(tuple(out))
