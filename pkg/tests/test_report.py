import pytest
from hypothesis import given
from hypothesis import strategies as st

from relacheck.domain import Problem, RejectionPattern
from relacheck.report import AggregationError, VennReport, aggregate, parse, render

SUITES = ["FUNCTIONAL", "A", "B", "C"]


def pattern(name, rejected, problem=Problem.SORT):
    return RejectionPattern(name, problem, "FUNCTIONAL" not in rejected, frozenset(rejected), {s: () for s in SUITES})


patterns_st = st.lists(
    st.builds(lambda i, r: pattern(f"c{i}", r), st.integers(0, 99), st.sets(st.sampled_from(SUITES))),
    max_size=12,
)


def test_empty_report():
    assert render(aggregate([]), "json") == '{"universe":0,"not_functional":0,"regions":{}}'


def test_counts_and_gate():
    venn = aggregate([pattern("r", []), pattern("m1", ["A"]), pattern("m2", ["A"]), pattern("f", ["FUNCTIONAL", "A"])])
    assert venn.universe == 4
    assert venn.not_functional == 1
    assert venn.regions == {frozenset(): 1, frozenset({"A"}): 2}
    assert render(venn) == '{"universe":4,"not_functional":1,"regions":{"":1,"A":2}}'


def test_text_rendering():
    venn = aggregate([pattern("r", []), pattern("m1", ["B", "A"]), pattern("m2", ["A", "B"])])
    lines = render(venn, "text").splitlines()
    assert lines[0].split() == ["2", "A,B"]
    assert lines[-2:] == ["not_functional: 0", "universe: 3"]
    with pytest.raises(ValueError):
        render(venn, "xml")


def test_mixed_problems_rejected():
    with pytest.raises(AggregationError):
        aggregate([pattern("a", []), pattern("b", [], Problem.MATCH)])


def test_different_suite_sets_rejected():
    odd = RejectionPattern("z", Problem.SORT, True, frozenset(), {"FUNCTIONAL": ()})
    with pytest.raises(AggregationError):
        aggregate([pattern("a", []), odd])


@given(patterns_st)
def test_regions_partition_universe(ps):
    venn = aggregate(ps)
    assert sum(venn.regions.values()) + venn.not_functional == venn.universe == len(ps)


@given(patterns_st, st.randoms())
def test_permutation_invariance(ps, rnd):
    shuffled = list(ps)
    rnd.shuffle(shuffled)
    assert render(aggregate(ps)) == render(aggregate(shuffled))


@given(patterns_st)
def test_json_round_trip_byte_identical(ps):
    text = render(aggregate(ps))
    assert render(parse(text)) == text
    assert parse(text) == VennReport.from_json(aggregate(ps).to_json())
