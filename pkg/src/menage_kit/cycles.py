"""Ménage permutations counted by cycles, and colored permutations.

The identities here are polynomial in ``alpha`` (and ``t``, ``u``).  They are
checked by exact evaluation: at a fixed rational sample every side becomes a
power series in ``x`` with rational coefficients, which
:class:`~menage_kit.series.TruncatedSeries` handles exactly.  For the
single-variable cycle identities the evaluation grid ``alpha = 1..n+1``
exceeds the degree, so interpolation recovers the full coefficient table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from menage_kit.perm import (
    EMPTY,
    Permutation,
    check_limit,
    enumerate_sn,
    is_ordinary_menage,
    is_straight_menage,
    stats,
)
from menage_kit.reduce import reduce_type1, reduce_type3
from menage_kit.report import Report, combine, compare
from menage_kit.series import TruncatedSeries, X, binomial_power

BRUTE_LIMIT = 8
COLORED_LIMIT = 6
THEOREM2_LIMIT = 7

# (alpha, t, u) sample grid; fixed so that failures reproduce
SAMPLES: tuple[tuple[Fraction, Fraction, Fraction], ...] = tuple(
    (Fraction(a), Fraction(t), Fraction(u))
    for a, t, u in [
        (1, 0, 0),
        (1, -1, -1),
        (2, 1, 1),
        (3, -1, 2),
        (2, -1, -1),
        (-2, 3, -1),
        (5, 2, -3),
        (Fraction(1, 2), Fraction(-3, 4), Fraction(5, 3)),
    ]
)


def rising_factorial(alpha, n: int) -> Fraction:
    """``alpha (alpha+1) ... (alpha+n-1)``; 1 when ``n = 0``."""
    alpha = Fraction(alpha)
    out = Fraction(1)
    for k in range(n):
        out *= alpha + k
    return out


def _by_cycles(n: int, keep, limit: int) -> list[int]:
    check_limit(n, limit)
    counts = [0] * (n + 1)
    for pi in enumerate_sn(n, limit):
        if keep(pi):
            counts[len(pi.cycles())] += 1
    return counts


def straight_by_cycles(n: int, limit: int = BRUTE_LIMIT) -> list[int]:
    """Entry ``j`` counts straight ménage permutations of ``[n]`` with ``j`` cycles."""
    return _by_cycles(n, is_straight_menage, limit)


def ordinary_by_cycles(n: int, limit: int = BRUTE_LIMIT) -> list[int]:
    return _by_cycles(n, is_ordinary_menage, limit)


def cycle_table_json(n: int, kind: str, counts: Sequence[int]) -> dict:
    return {
        "n": n,
        "kind": kind,
        "counts": {str(j): counts[j] for j in range(1, n + 1)},
        "total": sum(counts),
    }


def poly_M(n: int, alpha, t, u, limit: int = BRUTE_LIMIT) -> Fraction:
    """``sum over S_n of alpha^cycles t^fixed u^successions``."""
    check_limit(n, limit)
    alpha, t, u = Fraction(alpha), Fraction(t), Fraction(u)
    total = Fraction(0)
    for pi in enumerate_sn(n, limit):
        f, g, h, _ = stats(pi)
        total += alpha**f * t**g * u**h
    return total


def poly_L(n: int, alpha, t, u, limit: int = BRUTE_LIMIT) -> Fraction:
    """Like :func:`poly_M` but ``u`` counts generalized successions."""
    check_limit(n, limit)
    alpha, t, u = Fraction(alpha), Fraction(t), Fraction(u)
    total = Fraction(0)
    for pi in enumerate_sn(n, limit):
        f, g, _, r = stats(pi)
        total += alpha**f * t**g * u**r
    return total


@dataclass(frozen=True)
class ColoredPermutation:
    base: Permutation
    red: frozenset[int]
    yellow: frozenset[int]

    def __post_init__(self):
        if not self.red <= set(self.base.fixed_points()):
            raise ValueError("red points must be fixed points")
        if not self.yellow <= set(self.base.generalized_successions()):
            raise ValueError("yellow sites must be generalized successions")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def in_A(self) -> bool:
        """Whether the wrap-around generalized succession ``{n, 1}`` is colored."""
        return self.n >= 1 and self.n in self.yellow

    def colored_successions(self) -> int:
        return sum(1 for i in self.yellow if i < self.n and self.base(i) == i + 1)

    def w1(self, alpha, t, u) -> Fraction:
        """The ``W1`` weight with the ``x^n`` factor dropped."""
        f = len(self.base.cycles())
        return Fraction(alpha) ** f * Fraction(t) ** len(self.red) * Fraction(u) ** self.colored_successions()

    def w2(self, alpha, t, u) -> Fraction:
        f = len(self.base.cycles())
        return Fraction(alpha) ** f * Fraction(t) ** len(self.red) * Fraction(u) ** len(self.yellow)


def _subsets(items: Sequence[int]) -> Iterator[frozenset[int]]:
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def enumerate_colored(n: int, limit: int = COLORED_LIMIT) -> Iterator[ColoredPermutation]:
    """Every (permutation, red subset, yellow subset) triple of size ``n``."""
    check_limit(n, limit)
    for pi in enumerate_sn(n, limit):
        fixed = pi.fixed_points()
        gen = pi.generalized_successions()
        for red in _subsets(fixed):
            for yellow in _subsets(gen):
                yield ColoredPermutation(pi, red, yellow)


def split_colored(n: int, limit: int = COLORED_LIMIT) -> tuple[list[ColoredPermutation], list[ColoredPermutation]]:
    """``(A_n, B_n)``: colorings with and without the ``{n, 1}`` site colored."""
    A, B = [], []
    for eps in enumerate_colored(n, limit):
        (A if eps.in_A else B).append(eps)
    return A, B


def strip_colors(eps: ColoredPermutation) -> Permutation:
    """Remove every red fixed point (type 1) and glue every yellow site (type 3)."""
    perm = eps.base
    red, yellow = set(eps.red), set(eps.yellow)
    while red or yellow:
        if perm.n == 0:
            break
        if red:
            i = min(red)
            perm = reduce_type1(perm, i)
            red = {j - 1 if j > i else j for j in red if j != i}
            yellow = {j - 1 if j > i else j for j in yellow if j != i}
        else:
            i = min(yellow)
            n = perm.n
            perm = reduce_type3(perm, i)
            yellow.discard(i)
            if i < n:
                red = {j - 1 if j > i else j for j in red}
                yellow = {j - 1 if j > i else j for j in yellow}
    if perm.n == 0:
        return EMPTY
    return perm


def wrap_base_cases(max_m: int = COLORED_LIMIT) -> dict[int, list[ColoredPermutation]]:
    """For each ``m``, the colorings in ``A_m`` whose colors strip to the empty permutation."""
    out = {}
    for m in range(max_m + 1):
        A, _ = split_colored(m)
        out[m] = [eps for eps in A if strip_colors(eps) == EMPTY]
    return out


def cyclic_permutation(m: int) -> Permutation:
    return Permutation(tuple(i % m + 1 for i in range(1, m + 1)))


def _poly_coefficients(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients (lowest first) of the interpolating polynomial through ``(xs, ys)``."""
    k = len(xs)
    out = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d in range(k):
            out[d] += yi * basis[d] / denom
    return out


def straight_cycles_rhs(alpha, order: int) -> TruncatedSeries:
    """``sum_k (alpha)_k x^k / ((1+x)^k (1+alpha x)^(k+1))`` at a fixed ``alpha``."""
    alpha = Fraction(alpha)
    total = TruncatedSeries.constant(0, order)
    for k in range(order + 1):
        term = binomial_power(1, -k, order) * binomial_power(alpha, -(k + 1), order)
        total = total + term.shift(k) * rising_factorial(alpha, k)
    return total


def ordinary_cycles_rhs(alpha, order: int) -> TruncatedSeries:
    alpha = Fraction(alpha)
    x = X(order)
    total = TruncatedSeries.constant(0, order)
    for k in range(order + 1):
        term = binomial_power(1, -(k + 1), order) * binomial_power(alpha, -(k + 1), order)
        total = total + term.shift(k) * rising_factorial(alpha, k)
    return (x + alpha * x * x) / (1 + x) + (1 - alpha * x * x) * total


def _verify_cycles(name: str, order: int, table, rhs_at) -> Report:
    check_limit(order, THEOREM2_LIMIT, "order")
    alphas = [Fraction(a) for a in range(1, order + 2)]
    rhs = {a: rhs_at(a, order) for a in alphas}
    parts = []
    for n in range(order + 1):
        counts = table(n)
        grid = alphas[: n + 1]
        values = [rhs[a][n] for a in grid]
        lhs_values = [sum(c * a**j for j, c in enumerate(counts)) for a in grid]
        coeffs = _poly_coefficients(grid, values)
        parts.append(compare(f"{name} n={n} values", n, lhs_values, values, "evaluation at alpha=1..n+1"))
        parts.append(compare(f"{name} n={n} coefficients", n, counts, coeffs))
    return combine(name, order, parts)


def verify_theorem2_straight(order: int = THEOREM2_LIMIT) -> Report:
    return _verify_cycles("eq5", order, straight_by_cycles, straight_cycles_rhs)


def lll_rhs(alpha, t, u, order: int) -> TruncatedSeries:
    """``sum_n x^n (alpha)_n / ((1 - alpha t x)^(n+1) (1 - u x)^n)``."""
    total = TruncatedSeries.constant(0, order)
    for n in range(order + 1):
        term = binomial_power(-alpha * t, -(n + 1), order) * binomial_power(-u, -n, order)
        total = total + term.shift(n) * rising_factorial(alpha, n)
    return total


def lemma13_rhs(alpha, t, u, order: int) -> TruncatedSeries:
    """Closed form of the ``W2`` weights over all ``A_n``."""
    x = X(order)
    total = TruncatedSeries.constant(0, order)
    for n in range(1, order + 1):
        term = binomial_power(-alpha * t, -n, order) * binomial_power(-u, -(n + 1), order)
        total = total + term.shift(n) * rising_factorial(alpha, n)
    return total * (u * x) + alpha * u * t * x + alpha * u * x / (1 - u * x)


def equation_rhs(alpha, t, u, order: int) -> TruncatedSeries:
    """Combined ``L`` generating function: B-part and A-part merged."""
    x = X(order)
    total = TruncatedSeries.constant(0, order)
    for n in range(order + 1):
        term = binomial_power(-alpha * t, -(n + 1), order) * binomial_power(-u, -(n + 1), order)
        total = total + term.shift(n) * rising_factorial(alpha, n)
    return total * (1 - alpha * t * u * x * x) + alpha * u * t * x + (alpha - 1) * u * x / (1 - u * x)


def _colored_sums(order: int, alpha, t, u):
    """Per-size sums of W1 over B, W2 over B and W2 over A, from enumeration."""
    w1_B, w2_B, w2_A = [], [], []
    for n in range(order + 1):
        A, B = split_colored(n)
        w1_B.append(sum((e.w1(alpha, t, u) for e in B), Fraction(0)))
        w2_B.append(sum((e.w2(alpha, t, u) for e in B), Fraction(0)))
        w2_A.append(sum((e.w2(alpha, t, u) for e in A), Fraction(0)))
    return w1_B, w2_B, w2_A


def verify_weight_lemma(n: int, samples: Iterable = SAMPLES) -> Report:
    """Colored sums over ``B_n`` and over all colorings against ``M`` and ``L``."""
    check_limit(n, COLORED_LIMIT)
    parts = []
    for alpha, t, u in samples:
        A, B = split_colored(n)
        w1_B = sum((e.w1(alpha, t, u) for e in B), Fraction(0))
        w2_B = sum((e.w2(alpha, t, u) for e in B), Fraction(0))
        w2_all = w2_B + sum((e.w2(alpha, t, u) for e in A), Fraction(0))
        M = poly_M(n, alpha, 1 + t, 1 + u)
        L = poly_L(n, alpha, 1 + t, 1 + u)
        tag = f"(alpha,t,u)=({alpha},{t},{u})"
        parts.append(compare(f"W1 over B_{n} = M", 0, [w1_B], [M], tag))
        parts.append(compare(f"W2 over B_{n} = M", 0, [w2_B], [M], tag))
        parts.append(compare(f"W2 over S_{n} = L", 0, [w2_all], [L], tag))
    return combine(f"weights n={n}", n, parts)


def verify_lll(order: int, samples: Iterable = SAMPLES) -> Report:
    check_limit(order, COLORED_LIMIT, "order")
    parts = []
    for alpha, t, u in samples:
        lhs = [poly_M(n, alpha, 1 + t, 1 + u) for n in range(order + 1)]
        parts.append(compare("M series", order, lhs, lll_rhs(alpha, t, u, order), f"(alpha,t,u)=({alpha},{t},{u})"))
    return combine("M series", order, parts)


def verify_kkk(order: int, samples: Iterable = SAMPLES) -> Report:
    """``W1`` over ``B_n`` against the per-permutation closed form summed over ``S_n``."""
    check_limit(order, COLORED_LIMIT, "order")
    parts = []
    for alpha, t, u in samples:
        w1_B, _, _ = _colored_sums(order, alpha, t, u)
        rhs = TruncatedSeries.constant(0, order)
        for n in range(order + 1):
            geo = binomial_power(-alpha * t, -(n + 1), order) * binomial_power(-u, -n, order)
            weight = sum((alpha ** len(pi.cycles()) for pi in enumerate_sn(n)), Fraction(0))
            rhs = rhs + geo.shift(n) * weight
        parts.append(compare("W1 over B", order, w1_B, rhs, f"(alpha,t,u)=({alpha},{t},{u})"))
    return combine("W1 over B", order, parts)


def verify_lemma13(order: int, samples: Iterable = SAMPLES) -> Report:
    """``W2`` over ``A_n`` from enumeration against its closed form."""
    check_limit(order, COLORED_LIMIT, "order")
    parts = []
    for alpha, t, u in samples:
        _, _, w2_A = _colored_sums(order, alpha, t, u)
        parts.append(compare("W2 over A", order, w2_A, lemma13_rhs(alpha, t, u, order), f"(alpha,t,u)=({alpha},{t},{u})"))
    return combine("W2 over A", order, parts)


def verify_lemma13_base_cases(max_m: int = COLORED_LIMIT) -> Report:
    cases = wrap_base_cases(max_m)
    parts = [Report("A_0 empty", 0, cases[0] == [] and split_colored(0)[0] == [])]
    if max_m >= 1:
        parts.append(Report("|A_1| = 2", 1, len(split_colored(1)[0]) == 2 and len(cases[1]) == 2))
    for m in range(2, max_m + 1):
        only = cases[m]
        ok = (
            len(only) == 1
            and only[0].base == cyclic_permutation(m)
            and only[0].yellow == frozenset(range(1, m + 1))
            and not only[0].red
        )
        parts.append(Report(f"A_{m}(empty) = fully colored cycle", m, ok))
    return combine("A_m base cases", max_m, parts)


def verify_equation(order: int, samples: Iterable = SAMPLES) -> Report:
    """``sum L_n(1+t, 1+u) x^n`` against both the two-part and merged closed forms."""
    check_limit(order, COLORED_LIMIT, "order")
    parts = []
    for alpha, t, u in samples:
        lhs = [poly_L(n, alpha, 1 + t, 1 + u) for n in range(order + 1)]
        split = lll_rhs(alpha, t, u, order) + lemma13_rhs(alpha, t, u, order)
        tag = f"(alpha,t,u)=({alpha},{t},{u})"
        parts.append(compare("L = B part + A part", order, lhs, split, tag))
        parts.append(compare("L = merged form", order, lhs, equation_rhs(alpha, t, u, order), tag))
    return combine("equation", order, parts)


def verify_theorem2_ordinary(order: int = THEOREM2_LIMIT, samples: Iterable = SAMPLES) -> Report:
    samples = tuple(samples)
    colored = min(order, COLORED_LIMIT)
    parts = [
        _verify_cycles("eq6", order, ordinary_by_cycles, ordinary_cycles_rhs),
        verify_equation(colored, samples),
        verify_lemma13(colored, samples),
    ]
    return combine("eq6", order, parts)


def verify_weights(order: int = 5, samples: Iterable = SAMPLES) -> Report:
    samples = tuple(samples)
    parts = [verify_weight_lemma(n, samples) for n in range(order + 1)]
    parts.append(verify_lll(order, samples))
    parts.append(verify_kkk(order, samples))
    parts.append(verify_lemma13(order, samples))
    parts.append(verify_lemma13_base_cases(COLORED_LIMIT))
    parts.append(verify_equation(order, samples))
    return combine("weights", order, parts)
