import pytest
from hypothesis import given
from hypothesis import strategies as st

from relacheck.domain import MatchInstance, SubProperty as SP, ValidationError
from relacheck.match import (
    P_STAR,
    blocking_pairs,
    enumerate_stable_matchings,
    find_instance_violating_exactly,
    gale_shapley,
    generate_match_input,
    is_complete,
    is_stable,
    is_unique,
    match_is_valid,
    violated,
)

from oracles import has_blocking_pair, stable_matchings_brute

UNIFORM = [[0, 1], [0, 1]]


@st.composite
def pref_instances(draw, max_n=4):
    n = draw(st.integers(0, max_n))
    row = st.permutations(list(range(n)))
    cp = draw(st.lists(row, min_size=n, max_size=n))
    kp = draw(st.lists(row, min_size=n, max_size=n))
    return cp, kp


def test_p_star_has_two_stable_matchings():
    found = enumerate_stable_matchings(*P_STAR)
    assert found == {frozenset({(0, 0), (1, 1)}), frozenset({(0, 1), (1, 0)})}


def test_uniform_preferences_have_one_stable_matching():
    assert enumerate_stable_matchings(UNIFORM, UNIFORM) == {frozenset({(0, 0), (1, 1)})}


def test_blocking_pair_example():
    assert blocking_pairs(UNIFORM, UNIFORM, {(0, 1), (1, 0)}) == [(0, 0)]


def test_unrepresented_members_never_block():
    # company 1 and candidate 1 are absent, so only (0, 0) is judged
    assert is_stable(UNIFORM, UNIFORM, frozenset({(0, 0)}))
    assert violated(MatchInstance(UNIFORM, UNIFORM, {(0, 0)})) == {SP.COMPLETE}


def test_member_with_two_partners_blocks_only_over_both():
    # candidate 0 holds companies 0 and 1 and likes company 2 better than 1 only
    cp = [[0, 2, 1], [2, 0, 1], [0, 1, 2]]
    kp = [[0, 1, 2], [0, 1, 2], [0, 1, 2]]
    m = frozenset({(0, 0), (0, 1), (1, 2)})
    assert blocking_pairs(cp, kp, m) == []
    assert violated(MatchInstance(cp, kp, m)) == {SP.UNIQUE, SP.COMPLETE}


def test_empty_instance_is_valid():
    assert match_is_valid([], [], set())
    assert not match_is_valid([[0]], [[0]], set())


@pytest.mark.parametrize(
    "cp, kp, match, field",
    [
        ([[0]], [[0], [0]], (), "company_prefs"),
        ([[0, 0], [0, 1]], UNIFORM, (), "candidate_prefs[0]"),
        (UNIFORM, UNIFORM, [(0, 2)], "match"),
    ],
)
def test_validation_names_the_field(cp, kp, match, field):
    with pytest.raises(ValidationError) as err:
        violated(MatchInstance(cp, kp, match))
    assert err.value.field == field


@given(pref_instances())
def test_gale_shapley_is_valid(inst):
    cp, kp = inst
    assert match_is_valid(cp, kp, gale_shapley(cp, kp))


@given(pref_instances())
def test_enumeration_matches_brute_force(inst):
    cp, kp = inst
    found = enumerate_stable_matchings(cp, kp)
    assert found == stable_matchings_brute(cp, kp)
    assert gale_shapley(cp, kp) in found
    assert len(found) >= 1


@given(pref_instances(max_n=3))
def test_stability_agrees_with_oracle_on_perfect_matchings(inst):
    cp, kp = inst
    for m in stable_matchings_brute(cp, kp):
        assert is_stable(cp, kp, m)
        assert not has_blocking_pair(cp, kp, sorted(m))


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("target", [SP.STABLE, SP.UNIQUE, SP.COMPLETE])
def test_exact_violation_witnesses(target, n):
    inst = find_instance_violating_exactly(target, n)
    assert violated(inst) == {target}
    assert {is_stable(inst.candidate_prefs, inst.company_prefs, inst.match),
            is_unique(inst.match),
            is_complete(inst.candidate_prefs, inst.company_prefs, inst.match)} == {True, False}


def test_first_witnesses_are_fixed():
    assert find_instance_violating_exactly(SP.STABLE, 2).match == {(0, 1), (1, 0)}
    assert find_instance_violating_exactly(SP.COMPLETE, 2).match == {(0, 0)}
    assert find_instance_violating_exactly(SP.UNIQUE, 2).match == {(0, 0), (0, 1), (1, 0)}


def test_exact_violation_rejects_bad_arguments():
    with pytest.raises(ValueError):
        find_instance_violating_exactly(SP.ORDERED, 2)
    with pytest.raises(ValueError):
        find_instance_violating_exactly(SP.STABLE, 1)


def test_generator_deterministic_and_well_formed():
    cp, kp = generate_match_input(5, 11)
    assert (cp, kp) == generate_match_input(5, 11)
    assert all(sorted(r) == list(range(5)) for r in cp + kp)
    assert sum(generate_match_input(4, s) != generate_match_input(4, s + 500) for s in range(100)) >= 95
