"""Deliberately flawed validity predicates, one per documented failure mode.

Each mutant carries the exact set of suites expected to reject it. The
corpus doubles as a self-test of the suites: if a suite stops isolating its
sub-property, some mutant's observed signature drifts from its documented one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import match as m
from . import sort as s
from . import toposort as t
from .domain import Instance, MatchInstance, Problem, SortInstance, ToposortInstance


@dataclass(frozen=True)
class MutantSpec:
    name: str
    problem: Problem
    description: str
    expected_rejected_by: frozenset[str]
    predicate: Callable[[Instance], bool]


def _always(value: bool) -> Callable[[Instance], bool]:
    return lambda _: value


# --- sort -----------------------------------------------------------------

def _sort_exact(i: SortInstance) -> bool:
    return s.reference_sort(i.lst) == list(i.srt)


def _sort_checks_no_new_only(i: SortInstance) -> bool:
    # loops over srt looking each person up in lst; nobody checks the reverse
    return len(i.lst) == len(i.srt) and set(i.srt) <= set(i.lst) and s.ordered(i.srt)


def _sort_checks_retain_only(i: SortInstance) -> bool:
    return len(i.lst) == len(i.srt) and set(i.lst) <= set(i.srt) and s.ordered(i.srt)


def _sort_length_only(i: SortInstance) -> bool:
    return len(i.lst) == len(i.srt) and s.ordered(i.srt)


def _sort_size_blind(i: SortInstance) -> bool:
    return set(i.lst) == set(i.srt) and s.ordered(i.srt)


def _sort_set_elements(i: SortInstance) -> bool:
    return len(i.lst) == len(i.srt) and set(i.lst) == set(i.srt) and s.ordered(i.srt)


def _sort_order_blind(i: SortInstance) -> bool:
    return Counter(i.lst) == Counter(i.srt)


def _sort_min_sentinel(i: SortInstance) -> bool:
    prev = -1
    for p in i.srt:
        if p.age < prev:
            return False
        prev = p.age
    return Counter(i.lst) == Counter(i.srt)


def _sort_max_sentinel(i: SortInstance) -> bool:
    nxt = 1000
    for p in reversed(i.srt):
        if p.age > nxt:
            return False
        nxt = p.age
    return Counter(i.lst) == Counter(i.srt)


def _sort_empty_crash(i: SortInstance) -> bool:
    youngest = i.srt[0].age  # IndexError on an empty list
    return all(p.age >= youngest for p in i.srt) and s.sort_is_valid(i.lst, i.srt)


# --- match ----------------------------------------------------------------

def _match_exact(i: MatchInstance) -> bool:
    return m.gale_shapley(i.candidate_prefs, i.company_prefs) == i.match


def _match_no_stable(i: MatchInstance) -> bool:
    return m.is_unique(i.match) and m.is_complete(i.candidate_prefs, i.company_prefs, i.match)


def _match_no_complete(i: MatchInstance) -> bool:
    return m.is_stable(i.candidate_prefs, i.company_prefs, i.match) and m.is_unique(i.match)


def _match_no_unique(i: MatchInstance) -> bool:
    return m.is_stable(i.candidate_prefs, i.company_prefs, i.match) and m.is_complete(
        i.candidate_prefs, i.company_prefs, i.match
    )


def _match_empty_crash(i: MatchInstance) -> bool:
    favourite = i.candidate_prefs[0][0]
    return favourite >= 0 and m.match_is_valid(i.candidate_prefs, i.company_prefs, i.match)


# --- toposort -------------------------------------------------------------

def _topo_exact(i: ToposortInstance) -> bool:
    return t.kahn_sort(i.vertices, i.edges) == list(i.srt)


def _topo_rest(i: ToposortInstance) -> bool:
    return t.ordered(i.edges, i.srt) and t.no_dups(i.srt)


def _topo_checks_no_new_only(i: ToposortInstance) -> bool:
    return t.adds_nothing_new(i.vertices, i.srt) and _topo_rest(i)


def _topo_checks_retain_only(i: ToposortInstance) -> bool:
    return t.retains(i.vertices, i.srt) and _topo_rest(i)


def _topo_length_only(i: ToposortInstance) -> bool:
    return len(i.srt) == len(i.vertices) and _topo_rest(i)


def _topo_no_dup_blind(i: ToposortInstance) -> bool:
    return t.same_elements(i.vertices, i.srt) and t.ordered(i.edges, i.srt)


def _topo_order_blind(i: ToposortInstance) -> bool:
    return t.same_elements(i.vertices, i.srt) and t.no_dups(i.srt)


def _topo_key_error(i: ToposortInstance) -> bool:
    position = {v: None for v in i.vertices}
    for idx, v in enumerate(i.srt):
        if position[v] is not None:  # KeyError on a vertex the dag never had
            return False
        position[v] = idx
    return all(p is not None for p in position.values()) and t.ordered(i.edges, i.srt)


def _topo_empty_crash(i: ToposortInstance) -> bool:
    head = i.srt[0]
    return head in i.vertices and t.toposort_is_valid(i.vertices, i.edges, i.srt)


def _spec(name, problem, description, rejected_by, predicate) -> MutantSpec:
    return MutantSpec(name, problem, description, frozenset(rejected_by), predicate)


_SORT_ENFORCE = [
    "ENFORCE-SAME-SIZE",
    "ENFORCE-SAME-ELEMENTS",
    "ENFORCE-RETAIN",
    "ENFORCE-NO-NEW",
    "ENFORCE-NOT-DISJOINT",
    "ENFORCE-ORDERED",
]
_MATCH_ENFORCE = ["ENFORCE-STABLE", "ENFORCE-UNIQUE", "ENFORCE-COMPLETE"]
_TOPO_ENFORCE = [
    "ENFORCE-SAME-ELEMENTS",
    "ENFORCE-RETAIN",
    "ENFORCE-NO-NEW",
    "ENFORCE-NOT-DISJOINT",
    "ENFORCE-ORDERED",
    "ENFORCE-NO-DUPS",
]

SORT, MATCH, TOPO = Problem.SORT, Problem.MATCH, Problem.TOPOSORT

_CORPUS = [
    _spec("exact-reference-equality", SORT,
          "compares srt against the output of one particular stable sort",
          ["RELATIONAL"], _sort_exact),
    _spec("one-sided-retain", SORT,
          "checks srt adds no one new but never that everyone in lst survives",
          ["ENFORCE-RETAIN", "ENFORCE-SAME-ELEMENTS"], _sort_checks_no_new_only),
    _spec("one-sided-no-new", SORT,
          "checks everyone in lst survives but not that srt adds no one new",
          ["ENFORCE-NO-NEW", "ENFORCE-SAME-ELEMENTS"], _sort_checks_retain_only),
    _spec("length-only-elements", SORT,
          "treats equal length as proof of equal membership",
          ["ENFORCE-SAME-ELEMENTS", "ENFORCE-RETAIN", "ENFORCE-NO-NEW", "ENFORCE-NOT-DISJOINT"],
          _sort_length_only),
    _spec("size-blind", SORT,
          "compares the sets of people and the ordering, never the lengths",
          ["ENFORCE-SAME-SIZE", "ENFORCE-SAME-ELEMENTS"], _sort_size_blind),
    _spec("set-elements", SORT,
          "compares lengths and sets of people but not how often each appears",
          ["ENFORCE-SAME-ELEMENTS"], _sort_set_elements),
    _spec("order-blind", SORT,
          "checks srt is a permutation of lst and nothing about ages",
          ["ENFORCE-ORDERED"], _sort_order_blind),
    _spec("always-true", SORT, "accepts everything", ["FUNCTIONAL", *_SORT_ENFORCE], _always(True)),
    _spec("always-false", SORT, "rejects everything",
          ["FUNCTIONAL", "RELATIONAL", "EDGE", "OVERREACH-NEGATIVE-AGE", "OVERREACH-OLD-AGE"],
          _always(False)),
    _spec("negative-age-rejector", SORT,
          "ordering scan seeded with age -1 as the minimum of an empty list",
          ["OVERREACH-NEGATIVE-AGE"], _sort_min_sentinel),
    _spec("max-age-shortcut", SORT,
          "reverse ordering scan seeded with age 1000 as the maximum of an empty list",
          ["OVERREACH-OLD-AGE"], _sort_max_sentinel),
    _spec("empty-input-crasher", SORT, "indexes the first element without an emptiness check",
          ["EDGE"], _sort_empty_crash),

    _spec("exact-reference-equality", MATCH,
          "compares the match against candidate-proposing Gale-Shapley output",
          ["RELATIONAL"], _match_exact),
    _spec("ignore-stability", MATCH, "checks UNIQUE and COMPLETE only",
          ["ENFORCE-STABLE"], _match_no_stable),
    _spec("ignore-completeness", MATCH, "checks STABLE and UNIQUE only",
          ["ENFORCE-COMPLETE"], _match_no_complete),
    _spec("ignore-uniqueness", MATCH, "checks STABLE and COMPLETE only",
          ["ENFORCE-UNIQUE"], _match_no_unique),
    _spec("always-true", MATCH, "accepts everything", ["FUNCTIONAL", *_MATCH_ENFORCE], _always(True)),
    _spec("always-false", MATCH, "rejects everything", ["FUNCTIONAL", "RELATIONAL", "EDGE"],
          _always(False)),
    _spec("empty-input-crasher", MATCH, "reads the first preference row unconditionally",
          ["EDGE"], _match_empty_crash),

    _spec("exact-reference-equality", TOPO,
          "compares srt against one particular Kahn ordering",
          ["RELATIONAL"], _topo_exact),
    _spec("one-sided-retain", TOPO,
          "checks srt holds only dag vertices but not that all of them appear",
          ["ENFORCE-RETAIN", "ENFORCE-SAME-ELEMENTS"], _topo_checks_no_new_only),
    _spec("one-sided-no-new", TOPO,
          "checks every dag vertex appears in srt but not that srt holds nothing else",
          ["ENFORCE-NO-NEW", "ENFORCE-SAME-ELEMENTS"], _topo_checks_retain_only),
    _spec("length-only-elements", TOPO,
          "compares the vertex count against len(srt) instead of the identities",
          ["ENFORCE-NOT-DISJOINT", "ENFORCE-SAME-ELEMENTS"], _topo_length_only),
    _spec("no-dup-blind", TOPO, "checks SAME-ELEMENTS as sets and ORDERED, never duplicates",
          ["ENFORCE-NO-DUPS"], _topo_no_dup_blind),
    _spec("order-blind", TOPO, "checks vertices and duplicates but ignores edges",
          ["ENFORCE-ORDERED"], _topo_order_blind),
    _spec("key-error-on-new-vertex", TOPO,
          "looks srt vertices up in a dict keyed by dag vertices and crashes on strangers",
          ["FUNCTIONAL", "ENFORCE-NO-NEW", "ENFORCE-NOT-DISJOINT", "ENFORCE-SAME-ELEMENTS"],
          _topo_key_error),
    _spec("always-true", TOPO, "accepts everything", ["FUNCTIONAL", *_TOPO_ENFORCE], _always(True)),
    _spec("always-false", TOPO, "rejects everything", ["FUNCTIONAL", "RELATIONAL", "EDGE"],
          _always(False)),
    _spec("empty-input-crasher", TOPO, "indexes srt[0] without an emptiness check",
          ["EDGE"], _topo_empty_crash),
]


def mutant_corpus(problem: Problem | str) -> dict[str, MutantSpec]:
    problem = Problem(problem)
    return {spec.name: spec for spec in _CORPUS if spec.problem is problem}


def get_mutant(problem: Problem | str, name: str) -> MutantSpec:
    corpus = mutant_corpus(problem)
    if name not in corpus:
        raise KeyError(f"no mutant {name!r} for {Problem(problem).value}; known: {', '.join(sorted(corpus))}")
    return corpus[name]
