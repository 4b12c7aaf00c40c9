"""Reductions: removing fixed points and gluing (generalized) successions.

Each reduction maps ``S_n`` to ``S_{n-1}``:

* ``type1`` at a fixed point ``i``;
* ``type2`` at a succession ``pi(i) = i + 1`` with ``i < n``;
* ``type3`` at a generalized succession ``pi(i) = i + 1 (mod n)``; for
  ``i < n`` it coincides with ``type2``, for ``i = n`` it glues ``n`` onto ``1``.

Reducing with types {1, 2} until nothing applies yields a straight ménage
permutation; with types {1, 3}, an ordinary one.  The end result does not
depend on the order the reductions are applied in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from menage_kit.perm import EMPTY, ParseError, Permutation, delete_point, parse

KINDS = ("type1", "type2", "type3")
MODES = {"straight": ("type1", "type2"), "ordinary": ("type1", "type3")}


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    site: int
    before_n: int

    def __str__(self) -> str:
        return f"{self.kind} {self.site} {self.before_n}"


@dataclass(frozen=True)
class ReductionTrace:
    start: Permutation
    steps: tuple[ReductionStep, ...]
    result: Permutation

    def serialize(self) -> str:
        lines = [str(step) for step in self.steps]
        lines.append(str(self.result))
        return "\n".join(lines) + "\n"


def _check_site(perm: Permutation, i: int, kind: str) -> None:
    if not 1 <= i <= perm.n:
        raise ReductionError(f"{kind}: site {i} is outside [{perm.n}]")


def reduce_type1(perm: Permutation, i: int) -> Permutation:
    _check_site(perm, i, "type1")
    if perm(i) != i:
        raise ReductionError(f"type1: {i} is not a fixed point of {perm}")
    return Permutation._trusted(delete_point(perm.images, i))


def reduce_type2(perm: Permutation, i: int) -> Permutation:
    _check_site(perm, i, "type2")
    if i == perm.n or perm(i) != i + 1:
        raise ReductionError(f"type2: {{{i},{i + 1}}} is not a succession of {perm}")
    return Permutation._trusted(delete_point(perm.images, i))


def reduce_type3(perm: Permutation, i: int) -> Permutation:
    _check_site(perm, i, "type3")
    n = perm.n
    if perm(i) % n != (i + 1) % n:
        raise ReductionError(f"type3: site {i} is not a generalized succession of {perm}")
    if i < n:
        return Permutation._trusted(delete_point(perm.images, i))
    if n == 1:
        return EMPTY
    # i = n, pi(n) = 1: point n merges into point 1
    return Permutation._trusted(tuple(1 if v == n else v for v in perm.images[:-1]))


_REDUCERS = {"type1": reduce_type1, "type2": reduce_type2, "type3": reduce_type3}


def apply_step(perm: Permutation, step: ReductionStep) -> Permutation:
    if step.before_n != perm.n:
        raise ReductionError(f"step {step} expects n={step.before_n}, got n={perm.n}")
    return _REDUCERS[step.kind](perm, step.site)


def candidates(perm: Permutation, mode: str) -> list[ReductionStep]:
    """Applicable reductions, ordered by site, type1 first at equal sites."""
    try:
        kinds = MODES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None
    n = perm.n
    out = []
    for i, v in enumerate(perm.images, 1):
        if v == i:
            out.append(ReductionStep("type1", i, n))
        if kinds[1] == "type2":
            if v == i + 1:
                out.append(ReductionStep("type2", i, n))
        elif v % n == (i + 1) % n:
            out.append(ReductionStep("type3", i, n))
    return out


Policy = Callable[[Sequence[ReductionStep]], ReductionStep]


def first_policy(options: Sequence[ReductionStep]) -> ReductionStep:
    return options[0]


def random_policy(seed: int | None = None) -> Policy:
    rng = random.Random(seed)

    def choose(options: Sequence[ReductionStep]) -> ReductionStep:
        return rng.choice(options)

    return choose


def normal_form(perm: Permutation, mode: str = "straight", policy: Policy | None = None) -> ReductionTrace:
    """Reduce until no reduction of the mode's types applies.

    ``policy`` picks one step from the applicable candidates; the default
    takes the smallest site.  The result is the same for every policy.
    """
    choose = policy or first_policy
    steps = []
    current = perm
    while True:
        options = candidates(current, mode)
        if not options:
            break
        step = choose(options)
        current = apply_step(current, step)
        steps.append(step)
    return ReductionTrace(perm, tuple(steps), current)


def reduced(perm: Permutation, mode: str = "straight") -> Permutation:
    return normal_form(perm, mode).result


def replay(start: Permutation, steps: Sequence[ReductionStep]) -> Permutation:
    current = start
    for step in steps:
        current = apply_step(current, step)
    return current


def parse_trace(text: str) -> tuple[tuple[ReductionStep, ...], Permutation]:
    """Inverse of :meth:`ReductionTrace.serialize`."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines:
        raise ParseError("empty trace")
    steps = []
    for ln in lines[:-1]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] not in KINDS:
            raise ParseError(f"malformed trace record {ln!r}")
        steps.append(ReductionStep(parts[0], int(parts[1]), int(parts[2])))
    return tuple(steps), parse(lines[-1])
