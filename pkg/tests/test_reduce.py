import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from menage_kit.perm import EMPTY, Permutation, enumerate_sn, is_ordinary_menage, is_straight_menage, parse
from menage_kit.reduce import (
    ReductionError,
    ReductionStep,
    candidates,
    normal_form,
    parse_trace,
    random_policy,
    reduce_type1,
    reduce_type2,
    reduce_type3,
    replay,
)

perms = st.integers(0, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)
KINDS = {"straight": (1, 2), "ordinary": (1, 3)}


@pytest.mark.parametrize(
    "before, i, after",
    [
        ("(1,5,6,4)(2)(3)(7)", 3, "(1,4,5,3)(2)(6)"),
        ("(1)", 1, "()"),
        ("(1)(2)(3)", 2, "(1)(2)"),
    ],
)
def test_type1(before, i, after):
    assert reduce_type1(parse(before), i) == parse(after)


@pytest.mark.parametrize(
    "before, i, after",
    [
        ("(1,5,6,4)(2)(3)(7)", 5, "(1,5,4)(2)(3)(6)"),
        ("[2,1]", 1, "(1)"),
        ("(1,2,3)", 1, "(1,2)"),
    ],
)
def test_type2(before, i, after):
    assert reduce_type2(parse(before), i) == parse(after)


@pytest.mark.parametrize(
    "before, i, after",
    [
        ("(1,5,6,7)(2)(3)(4)", 7, "(1,5,6)(2)(3)(4)"),
        ("(1)", 1, "()"),
        ("[2,3,1]", 3, "[2,1]"),
    ],
)
def test_type3(before, i, after):
    assert reduce_type3(parse(before), i) == parse(after)


@pytest.mark.parametrize(
    "fn, perm, i",
    [
        (reduce_type1, "[2,1]", 1),
        (reduce_type1, "(1)(2)", 3),
        (reduce_type1, "(1)(2)", 0),
        (reduce_type2, "[2,1]", 2),
        (reduce_type2, "(1)(2)", 1),
        (reduce_type3, "(1)(2)", 1),
        (reduce_type3, "[3,1,2]", 3),
    ],
)
def test_precondition_violations_raise(fn, perm, i):
    with pytest.raises(ReductionError):
        fn(parse(perm), i)


@given(perms)
def test_reductions_match_literal_formulas(p):
    for i in p.fixed_points():
        assert reduce_type1(p, i).images == oracles.type1(p.images, i)
    for i in p.successions():
        assert reduce_type2(p, i).images == oracles.type2(p.images, i)
    for i in p.generalized_successions():
        assert reduce_type3(p, i).images == oracles.type3(p.images, i)


@given(perms)
def test_type3_agrees_with_type2_below_n(p):
    for i in p.successions():
        assert reduce_type3(p, i) == reduce_type2(p, i)


def test_normal_form_examples():
    assert normal_form(parse("(1,3)(2)(4,5,6)"), "straight").result == EMPTY
    assert normal_form(parse("(1,5,4)(2)(3)(6)"), "straight").result == parse("(1,3,2)")
    assert normal_form(parse("[2,3,1]"), "ordinary").result == EMPTY


def test_worked_reduction_chain_is_valid():
    chain = ["(1,3)(2)(4,5,6)", "(1,2)(3,4,5)", "(1)(2,3,4)", "(1,2,3)", "(1,2)", "(1)", "()"]
    for a, b in zip(chain, chain[1:]):
        a, b = parse(a), parse(b)
        assert any(
            fn(a, i) == b
            for fn, sites in ((reduce_type1, a.fixed_points()), (reduce_type2, a.successions()))
            for i in sites
        )


def test_default_policy_order():
    # identity on [1] in ordinary mode: type1 wins the tie at site 1
    options = candidates(Permutation.identity(1), "ordinary")
    assert [(s.kind, s.site) for s in options] == [("type1", 1), ("type3", 1)]
    trace = normal_form(parse("[2,1,3]"), "straight")
    assert trace.steps[0] == ReductionStep("type2", 1, 3)


@given(perms, st.sampled_from(["straight", "ordinary"]), st.integers(0, 2**32))
@settings(max_examples=200)
def test_trace_bookkeeping(p, mode, seed):
    trace = normal_form(p, mode, random_policy(seed))
    assert len(trace.steps) == p.n - trace.result.n
    assert replay(p, trace.steps) == trace.result
    assert [s.before_n for s in trace.steps] == list(range(p.n, trace.result.n, -1))
    menage = is_straight_menage if mode == "straight" else is_ordinary_menage
    assert menage(trace.result)
    allowed = {"straight": {"type1", "type2"}, "ordinary": {"type1", "type3"}}[mode]
    assert {s.kind for s in trace.steps} <= allowed


@pytest.mark.parametrize("mode", ["straight", "ordinary"])
@pytest.mark.parametrize("n", range(8))
def test_normal_form_matches_exhaustive_search(mode, n):
    for p in enumerate_sn(n):
        assert normal_form(p, mode).result.images == oracles.normal_form(p.images, KINDS[mode])


def test_trace_serialization_round_trip():
    trace = normal_form(parse("(1,5,4)(2)(3)(6)"), "straight")
    text = trace.serialize()
    assert text.splitlines()[-1] == "(1,3,2)"
    steps, result = parse_trace(text)
    assert steps == trace.steps and result == trace.result
    assert replay(trace.start, steps) == result


def test_unknown_mode():
    with pytest.raises(ValueError):
        normal_form(EMPTY, "circular")
