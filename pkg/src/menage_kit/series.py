"""Exact truncated power series over the rationals, and the identities
relating ménage numbers to Catalan numbers.

A :class:`TruncatedSeries` of order ``N`` knows the coefficients of
``x^0 .. x^N`` exactly.  Binary operations on series of different orders
truncate to the smaller one.  Differentiation loses one order.

    >>> c = catalan_series(5)
    >>> c.coeffs
    (Fraction(1, 1), Fraction(1, 1), Fraction(2, 1), Fraction(5, 1), Fraction(14, 1), Fraction(42, 1))
    >>> (1 / (1 - X(5) * c)) == c
    True
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable

from menage_kit.report import Report, combine, compare

DEFAULT_ORDER = 12


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot use {v!r} as an exact coefficient")


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_frac(v) for v in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value, order: int) -> TruncatedSeries:
        return cls([value], order)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _coerce(self, other) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            return other
        try:
            return TruncatedSeries.constant(_frac(other), self.order)
        except TypeError:
            return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-a for a in self.coeffs)

    def __sub__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            try:
                k = _frac(other)
            except TypeError:
                return NotImplemented
            return TruncatedSeries(k * a for a in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def scalar(self, k) -> TruncatedSeries:
        return self * _frac(k)

    def __pow__(self, k: int) -> TruncatedSeries:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> TruncatedSeries:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            s = sum((a[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out.append(-s * inv0)
        return TruncatedSeries(out)

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        try:
            k = _frac(other)
        except TypeError:
            return NotImplemented
        return self * (1 / k)

    def __rtruediv__(self, other) -> TruncatedSeries:
        return self.reciprocal() * _frac(other)

    def derivative(self) -> TruncatedSeries:
        """Term-wise derivative; the result has order ``N - 1`` (``0`` if ``N = 0``)."""
        if self.order == 0:
            return TruncatedSeries([0])
        return TruncatedSeries(k * a for k, a in enumerate(self.coeffs) if k > 0)

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``x^k`` keeping the order."""
        return TruncatedSeries([0] * k + list(self.coeffs), self.order)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """``self(inner(x))``; requires ``inner(0) = 0``."""
        if inner.coeffs[0] != 0:
            raise ValueError("compose needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = TruncatedSeries.constant(self.coeffs[n], n)
        for a in reversed(self.coeffs[:n]):
            result = result * inner + a
        return result

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def format(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            mono = "" if k == 0 else ("*x" if k == 1 else f"*x^{k}")
            body = f"{abs(a)}{mono}"
            if not terms:
                terms.append(body if a >= 0 else f"-{body}")
            else:
                terms.append(("+ " if a >= 0 else "- ") + body)
        return " ".join(terms) + " [truncated]"

    def to_json(self) -> str:
        return json.dumps([str(a) for a in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> TruncatedSeries:
        return cls(Fraction(s) for s in json.loads(text))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(a) for a in self.coeffs]})"

    __str__ = format


def X(order: int) -> TruncatedSeries:
    return TruncatedSeries([0, 1], order)


def binomial_power(a, k: int, order: int) -> TruncatedSeries:
    """``(1 + a x)^k`` for any integer ``k``, by the generalized binomial theorem."""
    a = _frac(a)
    out = [Fraction(1)]
    coef = Fraction(1)
    for j in range(order):
        coef = coef * (k - j) / (j + 1)
        out.append(coef * a ** (j + 1))
    return TruncatedSeries(out)


def catalan_number(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def catalan_series(order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return TruncatedSeries(catalan_number(k) for k in range(order + 1))


def factorial_series(order: int) -> TruncatedSeries:
    return TruncatedSeries(math.factorial(k) for k in range(order + 1))


def menage_V(n: int) -> int:
    """Straight ménage number."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum((-1) ** k * math.comb(2 * n - k, k) * math.factorial(n - k) for k in range(n + 1))


def menage_U(n: int) -> int:
    """Ordinary ménage number, with ``U_0 = 1`` and ``U_1 = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if n == 1:
        return 0
    total = sum(
        (-1) ** k * Fraction(2 * n, 2 * n - k) * math.comb(2 * n - k, k) * math.factorial(n - k)
        for k in range(n + 1)
    )
    if total.denominator != 1:
        raise ArithmeticError(f"U_{n} came out non-integral: {total}")
    return int(total)


def menage_U_piecewise(n: int) -> int:
    """The same numbers as :func:`menage_U` via the split binomial sum."""
    if n == 0:
        return 1
    if n == 1:
        return 0
    return menage_V(n) + sum(
        (-1) ** k * math.comb(2 * n - k - 1, k - 1) * math.factorial(n - k) for k in range(1, n + 1)
    )


def verify_theorem1_straight(order: int = DEFAULT_ORDER, V: Callable[[int], int] = menage_V) -> Report:
    """``sum n! x^n == sum V_n x^n c(x)^(2n+1)`` through ``x^order``."""
    N = order
    c = catalan_series(N)
    c2 = c * c
    rhs = TruncatedSeries.constant(0, N)
    term = c  # x^n c^(2n+1)
    for n in range(N + 1):
        rhs = rhs + term * V(n)
        term = (term * c2).shift(1)
    return compare("eq3", N, factorial_series(N), rhs)


def verify_theorem1_ordinary(order: int = DEFAULT_ORDER, U: Callable[[int], int] = menage_U) -> Report:
    """``sum n! x^n == c + c' sum_{n>=1} U_n x^n c^(2n-2)`` through ``x^order``."""
    N = order
    c = catalan_series(N)
    dc = catalan_series(N + 1).derivative()
    c2 = c * c
    inner = TruncatedSeries.constant(0, N)
    term = X(N)  # x^n c^(2n-2)
    for n in range(1, N + 1):
        inner = inner + term * U(n)
        term = (term * c2).shift(1)
    return compare("eq4", N, factorial_series(N), c + dc * inner)


def verify_lemma3(order: int = DEFAULT_ORDER, c: TruncatedSeries | None = None) -> Report:
    """The functional equations of the Catalan series.

    ``c`` may be supplied (of order ``order + 1``) to test a perturbed series.
    """
    N = order
    c_ext = c if c is not None else catalan_series(N + 1)
    dc = c_ext.derivative()
    c = c_ext.truncate(N)
    x = X(N)
    return combine(
        "lemma3",
        N,
        [
            compare("c=1/(1-xc)", N, c, 1 / (1 - x * c)),
            compare("c=1+xc^2", N, c, 1 + x * c * c),
            compare("c'=c^2+2xcc'", N, dc, c * c + 2 * x * c * dc),
            compare("c^3/(1-xc^2)=c'", N, c**3 / (1 - x * c * c), dc),
        ],
    )


def eta(k: int) -> int:
    """``(k + 1) * sum_r a_{r+1} C_{k-r}`` with ``a_{r+1} = C_r``."""
    return (k + 1) * sum(catalan_number(r) * catalan_number(k - r) for r in range(k + 1))


def verify_eta(order: int = DEFAULT_ORDER) -> Report:
    N = order
    c = catalan_series(N + 1)
    dc = c.derivative()
    etas = TruncatedSeries(eta(k) for k in range(N + 1))
    scaled = TruncatedSeries(Fraction(eta(k), k + 1) for k in range(N + 1))
    x = X(N + 1)
    return combine(
        "eta",
        N,
        [
            compare("sum eta_k/(k+1) x^k = c^2", N, scaled, c.truncate(N) ** 2),
            compare("sum eta_k x^k = (xc^2)'", N, etas, (x * c * c).derivative()),
            compare("sum eta_k x^k = c'", N, etas, dc),
        ],
    )


def catalan_substitution(order: int) -> TruncatedSeries:
    """The inner series ``z c(z)^2``, which has zero constant term."""
    c = catalan_series(order)
    return X(order) * c * c


def verify_appendix(order: int = DEFAULT_ORDER) -> Report:
    N = order
    x = X(N)
    facts = [math.factorial(n) for n in range(N + 1)]

    V_gf = TruncatedSeries(menage_V(n) for n in range(N + 1))
    v_series = TruncatedSeries.constant(0, N)
    for n in range(N + 1):
        v_series = v_series + binomial_power(1, -(2 * n + 1), N).shift(n) * facts[n]

    U_tail = TruncatedSeries([0] + [menage_U(n) for n in range(1, N + 1)])
    lhs_u = 1 + x + (1 + x) / (1 - x) * U_tail
    rhs_u = TruncatedSeries.constant(0, N)
    for n in range(N + 1):
        rhs_u = rhs_u + binomial_power(1, -2 * n, N).shift(n) * facts[n]

    sub = catalan_substitution(N)
    one_plus = (1 + x).compose(sub)
    ratio = (x * binomial_power(1, -2, N)).compose(sub)

    U_direct = TruncatedSeries(menage_U(n) for n in range(N + 1))
    U_split = TruncatedSeries(menage_U_piecewise(n) for n in range(N + 1))
    return combine(
        "appendix",
        N,
        [
            compare("V from n! x^n / (1+x)^(2n+1)", N, V_gf, v_series),
            compare("(1+x)/(1-x) form", N, lhs_u, rhs_u),
            compare("1+x -> c(z)", N, one_plus, catalan_series(N)),
            compare("x/(1+x)^2 -> z", N, ratio, x),
            compare("U piecewise", N, U_direct, U_split),
        ],
    )
