import math
from collections import Counter
from itertools import groupby

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relacheck.domain import EnumerationLimitError, Person, SortInstance, SubProperty as SP
from relacheck.sort import (
    RELATIONAL_INPUT,
    enumerate_valid_sorts,
    generate_sort_input,
    ordered,
    reference_sort,
    sort_is_valid,
    violated,
)

from oracles import sorted_by_age_brute

people = st.builds(Person, st.sampled_from(["Ann", "Bob", "Cat"]), st.integers(-3, 4))
person_lists = st.lists(people, max_size=6)

A, B, C = Person("Ann", 1), Person("Bob", 2), Person("Cat", 2)


def test_examples():
    assert sort_is_valid([B, A], [A, B])
    assert not sort_is_valid([B, A], [B, A])
    assert sort_is_valid([], [])
    assert sort_is_valid([B, C], [C, B])
    assert not sort_is_valid([A, A, B], [A, B, B])


@pytest.mark.parametrize(
    "lst, srt, expected",
    [
        ([A, B], [A, B], set()),
        ([A, B], [B, A], {SP.ORDERED}),
        ([A, B], [A], {SP.SAME_SIZE, SP.RETAIN, SP.SAME_ELEMENTS}),
        ([A], [A, B], {SP.SAME_SIZE, SP.NO_NEW, SP.SAME_ELEMENTS}),
        ([A, B], [A, C], {SP.RETAIN, SP.NO_NEW, SP.SAME_ELEMENTS}),
        ([A], [C], {SP.RETAIN, SP.NO_NEW, SP.NOT_DISJOINT, SP.SAME_ELEMENTS}),
        ([A, A, B], [A, B, B], {SP.RETAIN, SP.NO_NEW, SP.SAME_ELEMENTS}),
        ([A, B], [A, A, B], {SP.SAME_SIZE}),
    ],
)
def test_violated_examples(lst, srt, expected):
    assert violated(SortInstance(lst, srt)) == expected


def test_relational_input_has_four_orders():
    assert len(enumerate_valid_sorts(RELATIONAL_INPUT)) == 4


def test_enumeration_bound():
    with pytest.raises(EnumerationLimitError):
        enumerate_valid_sorts([A] * 7)
    assert len(enumerate_valid_sorts([A] * 7, bound=7)) == 1


@given(person_lists)
def test_reference_sort_is_valid(lst):
    assert sort_is_valid(lst, reference_sort(lst))


@given(person_lists, person_lists)
def test_violated_empty_iff_valid(lst, srt):
    assert (not violated(SortInstance(lst, srt))) == sort_is_valid(lst, srt)


@given(person_lists, person_lists)
def test_size_and_elements_mean_multiset_equality(lst, srt):
    v = violated(SortInstance(lst, srt))
    assert (SP.SAME_SIZE not in v and SP.SAME_ELEMENTS not in v) == (Counter(lst) == Counter(srt))


@given(person_lists, person_lists)
def test_refinements_imply_same_elements(lst, srt):
    v = violated(SortInstance(lst, srt))
    if v & {SP.RETAIN, SP.NO_NEW, SP.NOT_DISJOINT}:
        assert SP.SAME_ELEMENTS in v
    if SP.SAME_ELEMENTS in v:
        assert v & {SP.RETAIN, SP.NO_NEW}
    if SP.NOT_DISJOINT in v:
        assert {SP.RETAIN, SP.NO_NEW} <= v


@given(person_lists)
def test_enumeration_matches_brute_force(lst):
    assert set(enumerate_valid_sorts(lst)) == sorted_by_age_brute(lst)


@given(person_lists)
def test_enumeration_count_formula(lst):
    # per age block: distinct arrangements of a multiset
    expected = 1
    for _, block in groupby(sorted(lst, key=lambda p: p.age), key=lambda p: p.age):
        block = list(block)
        expected *= math.factorial(len(block)) // math.prod(
            math.factorial(k) for k in Counter(block).values()
        )
    assert len(enumerate_valid_sorts(lst)) == expected


@given(st.integers(0, 30), st.integers(0, 2**32))
@settings(max_examples=50)
def test_generator_shape(n, seed):
    lst = generate_sort_input(n, seed)
    assert len(lst) == n
    assert all(p.age >= 0 for p in lst)
    assert lst == generate_sort_input(n, seed)


def test_generator_seeds_differ():
    differing = sum(generate_sort_input(8, s) != generate_sort_input(8, s + 1000) for s in range(100))
    assert differing >= 95


def test_ordered_allows_ties():
    assert ordered([B, C, B])
    assert not ordered([B, A])
