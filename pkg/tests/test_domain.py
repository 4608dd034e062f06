import pytest
from hypothesis import given
from hypothesis import strategies as st

from relacheck import problems
from relacheck.domain import (
    Case,
    MatchInstance,
    Outcome,
    Person,
    Problem,
    RejectionPattern,
    SortInstance,
    TestSuite,
    ToposortInstance,
    ValidationError,
    Verdict,
    instance_from_json,
    instance_to_json,
    suite_from_json,
    suite_to_json,
)

people = st.builds(Person, st.text(max_size=4), st.integers(-10**12, 10**12))


@given(st.lists(people, max_size=5), st.lists(people, max_size=5))
def test_sort_instance_round_trip(lst, srt):
    inst = SortInstance(lst, srt)
    assert instance_from_json(Problem.SORT, instance_to_json(inst)) == inst


def test_other_instances_round_trip():
    m = MatchInstance([[1, 0], [0, 1]], [[0, 1], [1, 0]], {(0, 1), (1, 0)})
    t = ToposortInstance({"a", "b", "z"}, [("a", "b")], ["b", "a", "q"])
    assert instance_from_json(Problem.MATCH, instance_to_json(m)) == m
    assert instance_from_json(Problem.TOPOSORT, instance_to_json(t)) == t


def test_missing_output_decodes_empty():
    inst = instance_from_json(Problem.SORT, {"lst": [{"name": "A", "age": 1}]})
    assert inst.srt == ()


def test_toposort_vertices_default_to_edge_endpoints():
    inst = instance_from_json(Problem.TOPOSORT, {"edges": [["a", "b"]], "srt": []})
    assert inst.vertices == {"a", "b"}


@pytest.mark.parametrize(
    "problem, data, field",
    [
        (Problem.SORT, {"lst": [{"name": "A", "age": "1"}]}, "person.age"),
        (Problem.SORT, {"lst": [{"name": "A", "age": True}]}, "person.age"),
        (Problem.SORT, {"lst": [{"age": 1}]}, "person"),
        (Problem.SORT, {}, "lst"),
        (Problem.MATCH, {"candidate_prefs": [[0]], "company_prefs": [[0]], "match": [[0]]}, "match"),
        (Problem.MATCH, {"candidate_prefs": [[0.5]], "company_prefs": [[0]]}, "candidate_prefs"),
        (Problem.TOPOSORT, {"edges": [["a", 1]]}, "edges"),
        (Problem.TOPOSORT, {"edges": [], "srt": "ab"}, "srt"),
    ],
)
def test_decode_errors_name_the_field(problem, data, field):
    with pytest.raises(ValidationError) as err:
        instance_from_json(problem, data)
    assert err.value.field == field


def test_suite_round_trip_for_every_shipped_suite():
    for problem in Problem:
        for suite in problems.pack(problem).suites().values():
            assert suite_from_json(problem, suite_to_json(suite)) == suite


def test_outcome_matching():
    assert Outcome.TRUE.matches(True) and not Outcome.TRUE.matches(False)
    assert Outcome.FALSE.matches(False) and not Outcome.FALSE.matches(True)
    for bad in (Outcome.ERROR, Outcome.TIMEOUT):
        assert not bad.matches(True) and not bad.matches(False)


def test_rejection_pattern_json_round_trip():
    p = RejectionPattern(
        "x", Problem.SORT, False, frozenset({"FUNCTIONAL"}),
        {"FUNCTIONAL": (Verdict(0, Outcome.TRUE), Verdict(1, Outcome.ERROR, "boom"))},
    )
    back = RejectionPattern.from_json(p.to_json())
    assert back == p
    assert back.same_result(RejectionPattern.from_json(p.to_json() | {"candidate": "y"}))


def test_person_repr():
    assert repr(Person("Ann", 3)) == "Ann@3"


def test_wire_decode_round_trip():
    inst = ToposortInstance({"a", "b"}, [("a", "b")], ["a", "b"])
    assert problems.decode("toposort", problems.encode_input(inst), problems.encode_output(inst)) == inst
    with pytest.raises(ValidationError):
        problems.decode("sort", {"lst": []})
    with pytest.raises(ValidationError):
        problems.decode("match", [])


def test_case_and_suite_are_plain_values():
    c = Case(SortInstance([], []), True)
    assert TestSuite("S", [c]).cases == (c,)
