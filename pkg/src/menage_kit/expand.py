"""Building every permutation that reduces to a given ménage permutation.

Straight case.  Lay the ``m`` points of ``pi`` on a line; there are ``m + 1``
gaps.  Drop an ncp-induced permutation into each gap and replace each point
by a nice bijection (a point replaced by ``f`` of size ``r`` becomes a run of
``r + 1`` points entered at the left end and left from the right end).
Every choice gives a distinct permutation, and every permutation whose
straight normal form is ``pi`` arises this way, so

    w(m, n) = [x^n] c(x)^(2m+1).

Ordinary case.  Same, but on a circle with ``m`` gaps, after which one of
the ``d_m + t_1 + 1`` points in the last gap or the first point's run is
chosen as the new ``1``:

    r(m, n) = [x^n] c'(x) c(x)^(2m-2)   (m > 0),   r(0, n) = C_n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from menage_kit.catalan import (
    NiceBijection,
    NoncrossingPartition,
    enumerate_ncp,
    enumerate_nice,
    induced_permutation,
)
from menage_kit.perm import (
    Permutation,
    check_limit,
    enumerate_sn,
    is_ordinary_menage,
    is_straight_menage,
)
from menage_kit.reduce import reduced
from menage_kit.report import Report, combine, compare
from menage_kit.series import catalan_number, catalan_series, menage_U, menage_V

BRUTE_FORCE_LIMIT = 8

Bijection = tuple[int, ...]  # images of a nice bijection; () leaves the point alone


@dataclass(frozen=True)
class ExpansionPlanStraight:
    gap_partitions: tuple[NoncrossingPartition, ...]
    point_bijections: tuple[Bijection, ...]

    @property
    def added(self) -> int:
        return sum(p.n for p in self.gap_partitions) + sum(len(f) for f in self.point_bijections)


@dataclass(frozen=True)
class ExpansionPlanOrdinary:
    gap_partitions: tuple[NoncrossingPartition, ...]
    point_bijections: tuple[Bijection, ...]
    anchor: int

    @property
    def added(self) -> int:
        return sum(p.n for p in self.gap_partitions) + sum(len(f) for f in self.point_bijections)

    @property
    def anchor_choices(self) -> int:
        return self.gap_partitions[-1].n + len(self.point_bijections[0]) + 1


def _bijection(f) -> Bijection:
    if isinstance(f, NiceBijection):
        return f.images
    return tuple(f)


def _layout(pi: Permutation, gaps, points, ring: bool) -> list[int]:
    """Place the pieces in order and return the images of the combined permutation.

    Linear order is ``gap_1, P_1, gap_2, ..., P_m, gap_{m+1}`` when ``ring``
    is false and ``P_1, gap_1, ..., P_m, gap_m`` when it is true.
    """
    m = pi.n
    pieces = []
    if ring:
        for q in range(m):
            pieces.append(("point", q))
            pieces.append(("gap", q))
    else:
        for q in range(m):
            pieces.append(("gap", q))
            pieces.append(("point", q))
        pieces.append(("gap", m))

    images: list[int] = []
    starts = [0] * m
    ends = [0] * m
    for kind, idx in pieces:
        base = len(images)  # 0-based offset of this piece
        if kind == "gap":
            sigma = induced_permutation(gaps[idx])
            images.extend(base + v for v in sigma.images)
        else:
            f = points[idx]
            starts[idx] = base + 1
            ends[idx] = base + len(f) + 1
            images.extend(base + v for v in f)
            images.append(0)  # last point of the run; filled below
    for q in range(m):
        images[ends[q] - 1] = starts[pi.images[q] - 1]
    return images


def _check_shapes(pi: Permutation, gaps, points, n_gaps: int) -> None:
    if len(gaps) != n_gaps or len(points) != pi.n:
        raise ValueError(
            f"plan shape mismatch: expected {n_gaps} gaps and {pi.n} points, "
            f"got {len(gaps)} and {len(points)}"
        )


def apply_plan_straight(pi: Permutation, plan: ExpansionPlanStraight) -> Permutation:
    if not is_straight_menage(pi):
        raise ValueError(f"{pi} is not a straight ménage permutation")
    points = tuple(_bijection(f) for f in plan.point_bijections)
    _check_shapes(pi, plan.gap_partitions, points, pi.n + 1)
    images = _layout(pi, plan.gap_partitions, points, ring=False)
    return Permutation(tuple(images))


def apply_plan_ordinary(pi: Permutation, plan: ExpansionPlanOrdinary) -> Permutation:
    if pi.n == 0:
        raise ValueError("the ordinary construction needs m > 0; use the ncp-induced permutations for m = 0")
    if not is_ordinary_menage(pi):
        raise ValueError(f"{pi} is not an ordinary ménage permutation")
    points = tuple(_bijection(f) for f in plan.point_bijections)
    _check_shapes(pi, plan.gap_partitions, points, pi.n)
    if not 0 <= plan.anchor < plan.anchor_choices:
        raise ValueError(f"anchor {plan.anchor} outside range({plan.anchor_choices})")
    images = _layout(pi, plan.gap_partitions, points, ring=True)
    L = len(images)
    # anchors run through the last gap, then the first point's run
    origin = (L - plan.gap_partitions[-1].n + plan.anchor) % L
    relabel = [((s - origin) % L) + 1 for s in range(L)]
    rotated = [0] * L
    for s, v in enumerate(images):
        rotated[relabel[s] - 1] = relabel[v - 1]
    return Permutation(tuple(rotated))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _nice_choices(r: int) -> list[Bijection]:
    return [()] if r == 0 else [f.images for f in enumerate_nice(r)]


def iter_plans_straight(m: int, n: int) -> Iterator[ExpansionPlanStraight]:
    for shape in _compositions(n, 2 * m + 1):
        d, r = shape[: m + 1], shape[m + 1 :]
        gap_opts = [enumerate_ncp(k) for k in d]
        point_opts = [_nice_choices(k) for k in r]
        for gaps in itertools.product(*gap_opts):
            for points in itertools.product(*point_opts):
                yield ExpansionPlanStraight(tuple(gaps), tuple(points))


def iter_plans_ordinary(m: int, n: int) -> Iterator[ExpansionPlanOrdinary]:
    if m == 0:
        raise ValueError("the ordinary construction needs m > 0")
    for shape in _compositions(n, 2 * m):
        d, t = shape[:m], shape[m:]
        gap_opts = [enumerate_ncp(k) for k in d]
        point_opts = [_nice_choices(k) for k in t]
        for gaps in itertools.product(*gap_opts):
            for points in itertools.product(*point_opts):
                for anchor in range(d[-1] + t[0] + 1):
                    yield ExpansionPlanOrdinary(tuple(gaps), tuple(points), anchor)


def iter_expansions(pi: Permutation, n: int, mode: str = "straight") -> Iterator[Permutation]:
    """One permutation per plan (and anchor), without deduplication."""
    if mode == "straight":
        if not is_straight_menage(pi):
            raise ValueError(f"{pi} is not a straight ménage permutation")
        for plan in iter_plans_straight(pi.n, n):
            yield apply_plan_straight(pi, plan)
    elif mode == "ordinary":
        if not is_ordinary_menage(pi):
            raise ValueError(f"{pi} is not an ordinary ménage permutation")
        if pi.n == 0:
            for eps in enumerate_ncp(n):
                yield induced_permutation(eps)
            return
        for plan in iter_plans_ordinary(pi.n, n):
            yield apply_plan_ordinary(pi, plan)
    else:
        raise ValueError(f"unknown mode {mode!r}")


def enumerate_expansions(pi: Permutation, n: int, mode: str = "straight") -> set[Permutation]:
    return set(iter_expansions(pi, n, mode))


def reducible_to(pi: Permutation, n: int, mode: str = "straight", limit: int = BRUTE_FORCE_LIMIT) -> set[Permutation]:
    """Brute force: every ``tau`` in ``S_{m+n}`` whose normal form is ``pi``."""
    check_limit(pi.n + n, limit, "m+n")
    return {tau for tau in enumerate_sn(pi.n + n, limit) if reduced(tau, mode) == pi}


def normal_form_classes(size: int, mode: str, limit: int = BRUTE_FORCE_LIMIT) -> dict[Permutation, set[Permutation]]:
    """Group all of ``S_size`` by normal form (one pass serves every ``pi``)."""
    check_limit(size, limit, "m+n")
    classes: dict[Permutation, set[Permutation]] = {}
    for tau in enumerate_sn(size, limit):
        classes.setdefault(reduced(tau, mode), set()).add(tau)
    return classes


def w_count(m: int, n: int) -> int:
    """``[x^n] c(x)^(2m+1)``."""
    coef = (catalan_series(n) ** (2 * m + 1))[n]
    return int(coef)


def r_count(m: int, n: int) -> int:
    """``[x^n] c'(x) c(x)^(2m-2)``, or ``C_n`` when ``m = 0``."""
    if m == 0:
        return catalan_number(n)
    c = catalan_series(n + 1)
    coef = (c.derivative() * c.truncate(n) ** (2 * m - 2))[n]
    return int(coef)


def w_count_by_plans(m: int, n: int) -> int:
    """Same number as :func:`w_count`, summed over plan shapes."""
    total = 0
    for shape in _compositions(n, 2 * m + 1):
        total += math.prod(catalan_number(k) for k in shape)
    return total


def r_count_by_plans(m: int, n: int) -> int:
    if m == 0:
        return catalan_number(n)
    total = 0
    for shape in _compositions(n, 2 * m):
        d, t = shape[:m], shape[m:]
        total += math.prod(catalan_number(k) for k in shape) * (d[-1] + t[0] + 1)
    return total


def verify_wmn(order: int = 10) -> Report:
    """``n! = sum_i w(i, n-i) V_i`` for every ``n <= order``."""
    lhs = [math.factorial(n) for n in range(order + 1)]
    rhs = [sum(w_count(i, n - i) * menage_V(i) for i in range(n + 1)) for n in range(order + 1)]
    plans = [[w_count_by_plans(m, n) for n in range(order + 1 - m)] for m in range(order + 1)]
    series = [[w_count(m, n) for n in range(order + 1 - m)] for m in range(order + 1)]
    parts = [compare("n! = sum w V", order, lhs, rhs)]
    parts.append(Report("w by plan shapes", order, plans == series))
    return combine("wmn", order, parts)


def verify_rmn(order: int = 10) -> Report:
    """``n! = sum_i r(i, n-i) U_i`` for every ``n <= order``."""
    lhs = [math.factorial(n) for n in range(order + 1)]
    rhs = [sum(r_count(i, n - i) * menage_U(i) for i in range(n + 1)) for n in range(order + 1)]
    plans = [[r_count_by_plans(m, n) for n in range(order + 1 - m)] for m in range(order + 1)]
    series = [[r_count(m, n) for n in range(order + 1 - m)] for m in range(order + 1)]
    parts = [compare("n! = sum r U", order, lhs, rhs)]
    parts.append(Report("r by plan shapes", order, plans == series))
    return combine("rmn", order, parts)


def verify_expansions(max_size: int, mode: str, limit: int = BRUTE_FORCE_LIMIT) -> Report:
    """Constructive sets against the brute-force classes for all sizes ``<= max_size``."""
    menage = is_straight_menage if mode == "straight" else is_ordinary_menage
    count = w_count if mode == "straight" else r_count
    parts = []
    for size in range(max_size + 1):
        classes = normal_form_classes(size, mode, limit)
        for m in range(size + 1):
            n = size - m
            for pi in enumerate_sn(m):
                if not menage(pi):
                    continue
                built = list(iter_expansions(pi, n, mode))
                ok = set(built) == classes.get(pi, set()) and len(built) == len(set(built)) == count(m, n)
                if not ok:
                    parts.append(Report(f"{mode} {pi} n={n}", size, False, detail="expansion set mismatch"))
    name = "expand-" + mode
    if parts:
        return combine(name, max_size, parts)
    return Report(name, max_size, True)

