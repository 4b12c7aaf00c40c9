import itertools
from fractions import Fraction

import pytest

import oracles
from menage_kit.cycles import (
    SAMPLES,
    ColoredPermutation,
    cycle_table_json,
    cyclic_permutation,
    enumerate_colored,
    equation_rhs,
    lll_rhs,
    ordinary_by_cycles,
    ordinary_cycles_rhs,
    poly_L,
    poly_M,
    rising_factorial,
    split_colored,
    straight_by_cycles,
    straight_cycles_rhs,
    strip_colors,
    verify_equation,
    verify_kkk,
    verify_lemma13,
    verify_lemma13_base_cases,
    verify_lll,
    verify_theorem2_ordinary,
    verify_theorem2_straight,
    verify_weight_lemma,
)
from menage_kit.perm import EMPTY, LimitExceeded, Permutation, enumerate_sn, parse, stats
from menage_kit.report import compare
from menage_kit.series import menage_U, menage_V


def _oracle_table(n, pred):
    counts = [0] * (n + 1)
    for p in itertools.permutations(range(1, n + 1)):
        if pred(p):
            counts[oracles.cycles(p)] += 1
    return counts


def test_cycle_table_examples():
    assert straight_by_cycles(3) == [0, 1, 0, 0]
    assert straight_by_cycles(4) == [0, 2, 1, 0, 0]
    assert ordinary_by_cycles(3) == [0, 1, 0, 0]
    assert ordinary_by_cycles(4) == [0, 1, 1, 0, 0]
    assert ordinary_by_cycles(1) == [0, 0]
    assert straight_by_cycles(0) == [1]


@pytest.mark.parametrize("n", range(9))
def test_tables_match_oracle_and_totals(n):
    s, o = straight_by_cycles(n), ordinary_by_cycles(n)
    assert s == _oracle_table(n, oracles.straight)
    assert o == _oracle_table(n, oracles.ordinary)
    assert sum(s) == menage_V(n) and sum(o) == menage_U(n)


def test_cycle_table_json():
    doc = cycle_table_json(4, "straight", straight_by_cycles(4))
    assert doc == {"n": 4, "kind": "straight", "counts": {"1": 2, "2": 1, "3": 0, "4": 0}, "total": 3}


def test_limit():
    with pytest.raises(LimitExceeded):
        straight_by_cycles(9)
    with pytest.raises(LimitExceeded):
        list(enumerate_colored(7))


def test_rising_factorial():
    assert rising_factorial(Fraction(5, 7), 0) == 1
    assert rising_factorial(2, 3) == 24
    assert rising_factorial(1, 6) == 720


@pytest.mark.parametrize("n", range(8))
def test_cycle_polynomial_is_rising_factorial(n):
    for alpha in range(1, n + 2):
        total = sum(alpha ** len(p.cycles()) for p in enumerate_sn(n))
        assert total == rising_factorial(alpha, n)


def test_poly_examples():
    assert poly_M(3, 1, 1, 1) == 6
    assert poly_M(4, 3, 1, 1) == 360
    assert poly_L(1, 2, 0, 0) == 0
    # t = u = 0 leaves exactly the menage permutations
    for n in range(7):
        assert poly_M(n, 1, 0, 0) == menage_V(n)
        assert poly_L(n, 1, 0, 0) == menage_U(n)


def test_colored_enumeration_examples():
    assert [(c.base, c.red, c.yellow) for c in enumerate_colored(0)] == [(EMPTY, frozenset(), frozenset())]
    one = list(enumerate_colored(1))
    assert len(one) == 4
    A, B = split_colored(1)
    assert len(A) == 2 and len(B) == 2
    swap = [c for c in enumerate_colored(2) if c.base == parse("[2,1]")]
    assert len(swap) == 4


@pytest.mark.parametrize("n", range(7))
def test_colored_sizes(n):
    colorings = list(enumerate_colored(n))
    assert len(colorings) == sum(2 ** (s.g + s.r) for s in map(stats, enumerate_sn(n)))
    A, B = split_colored(n)
    assert len(A) + len(B) == len(colorings)
    assert len(A) == sum(1 for c in colorings if n >= 1 and n in c.yellow)


def test_colored_validation():
    with pytest.raises(ValueError):
        ColoredPermutation(parse("[2,1]"), frozenset({1}), frozenset())
    with pytest.raises(ValueError):
        ColoredPermutation(parse("[1,2]"), frozenset(), frozenset({1}))


def test_strip_colors():
    full = ColoredPermutation(cyclic_permutation(4), frozenset(), frozenset(range(1, 5)))
    assert strip_colors(full) == EMPTY
    eps = ColoredPermutation(parse("(1,3)(2)(4)"), frozenset({2}), frozenset())
    assert strip_colors(eps) == parse("(1,2)(3)")
    assert strip_colors(ColoredPermutation(Permutation.identity(1), frozenset(), frozenset({1}))) == EMPTY


def test_cycle_identity_spot_values():
    # n=4, alpha=2: 2*C_4^1 + 4*C_4^2 = 8 and 2*D_4^1 + 4*D_4^2 = 6
    assert straight_cycles_rhs(2, 4)[4] == 8
    assert ordinary_cycles_rhs(2, 4)[4] == 6
    assert straight_cycles_rhs(1, 4)[4] == 3
    assert ordinary_cycles_rhs(1, 3)[3] == 1
    assert straight_cycles_rhs(5, 0)[0] == 1 == ordinary_cycles_rhs(5, 0)[0]


def test_cycle_identities():
    assert verify_theorem2_straight(7)
    assert verify_theorem2_ordinary(7)


@pytest.mark.parametrize("n, sample", [(2, (1, 0, 0)), (3, (2, 1, 1)), (4, (3, -1, 2))])
def test_colored_weight_examples(n, sample):
    assert verify_weight_lemma(n, [tuple(map(Fraction, sample))])


@pytest.mark.parametrize("n", range(6))
def test_colored_weights(n):
    assert verify_weight_lemma(n)


def test_straight_weight_series_collapses():
    # alpha=1, t=u=-1: M_n(0, 0) is the straight count
    assert verify_lll(5)
    assert [poly_M(n, 1, 0, 0) for n in range(6)] == [menage_V(n) for n in range(6)]


def test_colored_series_identities():
    assert verify_kkk(5)
    assert verify_lemma13(5)
    assert verify_equation(5)
    assert verify_lemma13_base_cases(6)


def test_samples_are_fixed():
    assert len(SAMPLES) == 8 and SAMPLES[0] == (1, 0, 0)


def test_straight_weight_series_rejects_wrong_polynomial():
    # L counts generalized successions, so it must not satisfy the M identity
    alpha, t, u = SAMPLES[2]
    lhs = [poly_L(n, alpha, 1 + t, 1 + u) for n in range(5)]
    assert not compare("lll with L", 4, lhs, lll_rhs(alpha, t, u, 4))


def test_generalized_successions_are_the_right_exponent():
    # reading the L exponent as plain successions would make L = M; that fails
    for alpha, t, u in SAMPLES[2:4]:
        as_h = [poly_M(n, alpha, 1 + t, 1 + u) for n in range(6)]
        as_r = [poly_L(n, alpha, 1 + t, 1 + u) for n in range(6)]
        assert not compare("h", 5, as_h, equation_rhs(alpha, t, u, 5))
        assert compare("r", 5, as_r, equation_rhs(alpha, t, u, 5))
