"""Sorting people by age: reference validator, enumerator, generator and suites."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from typing import Sequence

from .domain import (
    Case,
    EnumerationLimitError,
    Person,
    SortInstance,
    SubProperty,
    TestSuite,
)

DEFAULT_BOUND = 6

NAMES = ("Ann", "Bob", "Cat", "Dan", "Eve", "Fay", "Gus", "Hal", "Ivy", "Jo", "Kim", "Lou")


def same_size(lst: Sequence[Person], srt: Sequence[Person]) -> bool:
    return len(lst) == len(srt)


def retains(lst: Sequence[Person], srt: Sequence[Person]) -> bool:
    """Every person of ``lst`` shows up in ``srt``.

    On equal-length lists with equal person sets, a change in any person's
    multiplicity also counts as a retention failure; see :func:`adds_nothing_new`.
    """
    if not set(lst) <= set(srt):
        return False
    return not _reshuffled_multiplicity(lst, srt)


def adds_nothing_new(lst: Sequence[Person], srt: Sequence[Person]) -> bool:
    if not set(srt) <= set(lst):
        return False
    return not _reshuffled_multiplicity(lst, srt)


def not_disjoint(lst: Sequence[Person], srt: Sequence[Person]) -> bool:
    if not lst or not srt:
        return True
    return not set(lst).isdisjoint(srt)


def same_elements(lst: Sequence[Person], srt: Sequence[Person]) -> bool:
    return retains(lst, srt) and adds_nothing_new(lst, srt)


def ordered(srt: Sequence[Person]) -> bool:
    return all(a.age <= b.age for a, b in zip(srt, srt[1:]))


def _reshuffled_multiplicity(lst, srt) -> bool:
    # [A, A, B] vs [A, B, B]: same length, same set, different multiset.
    return len(lst) == len(srt) and set(lst) == set(srt) and Counter(lst) != Counter(srt)


def sort_is_valid(lst: Sequence[Person], srt: Sequence[Person]) -> bool:
    """True iff ``srt`` is ``lst`` rearranged into non-decreasing age order.

    Equal-age people may appear in any relative order.
    """
    return len(lst) == len(srt) and Counter(lst) == Counter(srt) and ordered(srt)


def violated(inst: SortInstance) -> set[SubProperty]:
    lst, srt = inst.lst, inst.srt
    out = set()
    if not same_size(lst, srt):
        out.add(SubProperty.SAME_SIZE)
    if not retains(lst, srt):
        out.add(SubProperty.RETAIN)
    if not adds_nothing_new(lst, srt):
        out.add(SubProperty.NO_NEW)
    if not not_disjoint(lst, srt):
        out.add(SubProperty.NOT_DISJOINT)
    if not same_elements(lst, srt):
        out.add(SubProperty.SAME_ELEMENTS)
    if not ordered(srt):
        out.add(SubProperty.ORDERED)
    return out


def reference_sort(lst: Sequence[Person]) -> list[Person]:
    return sorted(lst, key=lambda p: p.age)


def enumerate_valid_sorts(
    lst: Sequence[Person], bound: int = DEFAULT_BOUND
) -> set[tuple[Person, ...]]:
    """All distinct orderings of ``lst`` that are validly sorted.

    Built by permuting within each block of equal ages, so the work is the
    product of the block sizes' factorials rather than ``len(lst)!``.
    """
    if len(lst) > bound:
        raise EnumerationLimitError(len(lst), bound)
    blocks = [
        sorted(set(itertools.permutations(list(group))))
        for _, group in itertools.groupby(reference_sort(lst), key=lambda p: p.age)
    ]
    return {tuple(itertools.chain.from_iterable(choice)) for choice in itertools.product(*blocks)}


def generate_sort_input(n: int, seed: int) -> list[Person]:
    """``n`` random people with non-negative ages.

    Ages are drawn from ``0..2n`` so ties are common enough for inputs with
    several valid sorts to turn up regularly.
    """
    rng = random.Random(seed)
    top = max(1, 2 * n)
    return [Person(rng.choice(NAMES), rng.randint(0, top)) for _ in range(n)]


def _p(spec: str) -> Person:
    name, age = spec.split("@")
    return Person(name, int(age))


def _people(*specs: str) -> tuple[Person, ...]:
    return tuple(_p(s) for s in specs)


def _false(lst, srt) -> Case:
    return Case(SortInstance(lst, srt), False)


def _true(lst, srt) -> Case:
    return Case(SortInstance(lst, srt), True)


# Persons shared by several suites. Ages stay within 0..1000 outside the
# overreach suites so that shortcut sentinels only trip where intended.
_TRIO = _people("Bob@31", "Cat@19", "Ann@25")

RELATIONAL_INPUT = _people("Dan@28", "Ann@35", "Cat@28", "Bob@35", "Eve@40")


def build_sort_suites() -> dict[str, TestSuite]:
    a = Person("A", 42)
    len4, len7 = (a,) * 4, (a,) * 7
    pair = _people("Ann@30", "Bob@40")
    padded = _people("Ann@30", "Ann@30", "Bob@40")

    same_size_cases = [
        _false(len4, len7),
        _false(len7, len4),
        _false(pair, padded),
        _false(padded, pair),
    ]

    retain_cases = [
        _false(_TRIO, _people("Ann@25", "Bob@31", "Bob@31")),
        # differing only in age, then only in name
        _false(_people("Ann@30", "Ann@31"), _people("Ann@30", "Ann@30")),
        _false(_people("Ann@30", "Bob@30"), _people("Ann@30", "Ann@30")),
    ]
    no_new_cases = [
        _false(_people("Bob@31", "Ann@25", "Bob@31"), _people("Cat@19", "Ann@25", "Bob@31")),
        _false(_people("Ann@30", "Ann@30"), _people("Ann@30", "Ann@31")),
        _false(_people("Ann@30", "Ann@30"), _people("Ann@30", "Bob@30")),
    ]
    disjoint_cases = [
        _false(_TRIO, _people("Dan@20", "Eve@27", "Fay@33")),
        _false(pair, _people("Ann@31", "Bob@41")),
        _false(pair, _people("Cat@30", "Dan@40")),
    ]
    same_elements_cases = retain_cases + no_new_cases + disjoint_cases + [
        # one person swapped for someone differing only in age / only in name
        _false(_TRIO, _people("Cat@19", "Ann@25", "Bob@32")),
        _false(_TRIO, _people("Cat@19", "Ann@25", "Rob@31")),
        # same people, different multiplicities
        _false(padded, _people("Ann@30", "Bob@40", "Bob@40")),
    ]

    ordered_cases = [
        _false(_TRIO, _TRIO),
        _false(_TRIO, _people("Ann@25", "Bob@31", "Cat@19")),
        _false(_people("Ann@3", "Bob@3", "Cat@1"), _people("Ann@3", "Cat@1", "Bob@3")),
    ]

    relational = [_true(RELATIONAL_INPUT, srt) for srt in sorted(enumerate_valid_sorts(RELATIONAL_INPUT))]

    functional_lst = _people("Eve@52", "Ann@17", "Dan@33", "Bob@8", "Cat@26")
    functional = [
        _true(functional_lst, reference_sort(functional_lst)),
        _false(functional_lst, _people("Zed@50", "Yan@10")),
    ]

    edge = [
        _true((), ()),
        _true(_people("Ann@30"), _people("Ann@30")),
    ]

    negative = _people("Bob@3", "Ann@-5", "Cat@20")
    old = _people("Old@10000000000", "Ann@30")
    overreach_negative = [_true(negative, reference_sort(negative))]
    overreach_old = [_true(old, reference_sort(old))]

    suites = [
        TestSuite("FUNCTIONAL", functional),
        TestSuite("ENFORCE-SAME-SIZE", same_size_cases),
        TestSuite("ENFORCE-SAME-ELEMENTS", same_elements_cases),
        TestSuite("ENFORCE-RETAIN", retain_cases),
        TestSuite("ENFORCE-NO-NEW", no_new_cases),
        TestSuite("ENFORCE-NOT-DISJOINT", disjoint_cases),
        TestSuite("ENFORCE-ORDERED", ordered_cases),
        TestSuite("RELATIONAL", relational),
        TestSuite("EDGE", edge),
        TestSuite("OVERREACH-NEGATIVE-AGE", overreach_negative),
        TestSuite("OVERREACH-OLD-AGE", overreach_old),
    ]
    return {s.name: s for s in suites}
