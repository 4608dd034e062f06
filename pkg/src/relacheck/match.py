"""Stable matching of candidates to companies.

Preferences are complete strict rankings over equal-size sides. A match is a
set of ``(candidate, company)`` index pairs and need not be a bijection; the
three sub-predicates below say what goes wrong when it isn't.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from typing import AbstractSet, Iterable, Iterator, Sequence

from .domain import (
    Case,
    EnumerationLimitError,
    MatchInstance,
    NotFoundError,
    SubProperty,
    TestSuite,
    ValidationError,
)

DEFAULT_BOUND = 6

Prefs = Sequence[Sequence[int]]
Pair = tuple[int, int]


def validate(candidate_prefs: Prefs, company_prefs: Prefs, match: Iterable[Pair] = ()) -> int:
    """Check the structural invariants and return ``n``."""
    n = len(candidate_prefs)
    if len(company_prefs) != n:
        raise ValidationError(
            "company_prefs", f"expected {n} rows to match candidate_prefs, got {len(company_prefs)}"
        )
    for name, prefs in (("candidate_prefs", candidate_prefs), ("company_prefs", company_prefs)):
        for i, row in enumerate(prefs):
            if sorted(row) != list(range(n)):
                raise ValidationError(f"{name}[{i}]", f"not a permutation of 0..{n - 1}: {list(row)}")
    for c, k in match:
        if not (0 <= c < n and 0 <= k < n):
            raise ValidationError("match", f"pair ({c}, {k}) out of range for n={n}")
    return n


def _ranks(prefs: Prefs) -> list[dict[int, int]]:
    return [{x: r for r, x in enumerate(row)} for row in prefs]


def _partners(match: AbstractSet[Pair]) -> tuple[dict[int, set[int]], dict[int, set[int]]]:
    of_candidate: dict[int, set[int]] = defaultdict(set)
    of_company: dict[int, set[int]] = defaultdict(set)
    for c, k in match:
        of_candidate[c].add(k)
        of_company[k].add(c)
    return of_candidate, of_company


def blocking_pairs(candidate_prefs: Prefs, company_prefs: Prefs, match: AbstractSet[Pair]) -> list[Pair]:
    """Unmatched pairs of represented members who prefer each other.

    "Prefers" means strictly over every current partner, so a member paired
    several times blocks only with someone better than all of them.
    """
    validate(candidate_prefs, company_prefs, match)
    cand_rank, comp_rank = _ranks(candidate_prefs), _ranks(company_prefs)
    of_candidate, of_company = _partners(match)
    out = []
    for c in sorted(of_candidate):
        for k in sorted(of_company):
            if (c, k) in match:
                continue
            if all(cand_rank[c][k] < cand_rank[c][j] for j in of_candidate[c]) and all(
                comp_rank[k][c] < comp_rank[k][d] for d in of_company[k]
            ):
                out.append((c, k))
    return out


def is_stable(candidate_prefs: Prefs, company_prefs: Prefs, match: AbstractSet[Pair]) -> bool:
    return not blocking_pairs(candidate_prefs, company_prefs, frozenset(match))


def is_unique(match: Iterable[Pair]) -> bool:
    match = set(match)
    candidates = [c for c, _ in match]
    companies = [k for _, k in match]
    return len(set(candidates)) == len(candidates) and len(set(companies)) == len(companies)


def is_complete(candidate_prefs: Prefs, company_prefs: Prefs, match: Iterable[Pair]) -> bool:
    n = validate(candidate_prefs, company_prefs, match)
    match = set(match)
    return {c for c, _ in match} == set(range(n)) and {k for _, k in match} == set(range(n))


def match_is_valid(candidate_prefs: Prefs, company_prefs: Prefs, match: Iterable[Pair]) -> bool:
    match = frozenset(match)
    return (
        is_stable(candidate_prefs, company_prefs, match)
        and is_unique(match)
        and is_complete(candidate_prefs, company_prefs, match)
    )


def violated(inst: MatchInstance) -> set[SubProperty]:
    cp, kp, m = inst.candidate_prefs, inst.company_prefs, inst.match
    validate(cp, kp, m)
    out = set()
    if not is_stable(cp, kp, m):
        out.add(SubProperty.STABLE)
    if not is_unique(m):
        out.add(SubProperty.UNIQUE)
    if not is_complete(cp, kp, m):
        out.add(SubProperty.COMPLETE)
    return out


def perfect_matchings(n: int) -> Iterator[frozenset[Pair]]:
    for perm in itertools.permutations(range(n)):
        yield frozenset(enumerate(perm))


def enumerate_stable_matchings(
    candidate_prefs: Prefs, company_prefs: Prefs, bound: int = DEFAULT_BOUND
) -> set[frozenset[Pair]]:
    n = validate(candidate_prefs, company_prefs)
    if n > bound:
        raise EnumerationLimitError(n, bound)
    return {m for m in perfect_matchings(n) if is_stable(candidate_prefs, company_prefs, m)}


def gale_shapley(candidate_prefs: Prefs, company_prefs: Prefs) -> frozenset[Pair]:
    """Candidate-proposing deferred acceptance (candidate-optimal matching)."""
    n = validate(candidate_prefs, company_prefs)
    comp_rank = _ranks(company_prefs)
    next_choice = [0] * n
    holder: dict[int, int] = {}
    free = list(range(n - 1, -1, -1))
    while free:
        c = free.pop()
        k = candidate_prefs[c][next_choice[c]]
        next_choice[c] += 1
        current = holder.get(k)
        if current is None:
            holder[k] = c
        elif comp_rank[k][c] < comp_rank[k][current]:
            holder[k] = c
            free.append(current)
        else:
            free.append(c)
    return frozenset((c, k) for k, c in holder.items())


def generate_match_input(n: int, seed: int) -> tuple[list[list[int]], list[list[int]]]:
    rng = random.Random(seed)

    def row() -> list[int]:
        r = list(range(n))
        rng.shuffle(r)
        return r

    candidate_prefs = [row() for _ in range(n)]
    company_prefs = [row() for _ in range(n)]
    return candidate_prefs, company_prefs


def _preference_instances(n: int) -> Iterator[tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]]:
    # Relabelling companies can turn any candidate 0 ranking into the identity,
    # so only instances with that first row are visited.
    perms = list(itertools.permutations(range(n)))
    first = (tuple(range(n)),)
    for rest in itertools.product(perms, repeat=n - 1):
        for companies in itertools.product(perms, repeat=n):
            yield first + rest, tuple(companies)


def _match_sets(n: int) -> Iterator[frozenset[Pair]]:
    # Perfect-size sets first, then one extra pair, then smaller sets.
    pairs = list(itertools.product(range(n), repeat=2))
    for size in [n, n + 1, *range(n - 1, -1, -1)]:
        for combo in itertools.combinations(pairs, size):
            yield frozenset(combo)


def search_instance(targets: AbstractSet[SubProperty], n: int) -> MatchInstance:
    """First instance, in a fixed enumeration order, violating exactly ``targets``."""
    targets = frozenset(targets)
    for cp, kp in _preference_instances(n):
        for m in _match_sets(n):
            inst = MatchInstance(cp, kp, m)
            if violated(inst) == targets:
                return inst
    raise NotFoundError(f"no {n}x{n} instance violates exactly {sorted(map(str, targets))}")


def find_instance_violating_exactly(target: SubProperty, n: int) -> MatchInstance:
    target = SubProperty(target)
    if target not in (SubProperty.STABLE, SubProperty.UNIQUE, SubProperty.COMPLETE):
        raise ValueError(f"not a matching sub-property: {target}")
    if not 2 <= n <= 4:
        raise ValueError(f"n must be between 2 and 4, got {n}")
    return search_instance({target}, n)


# Two candidates and two companies with opposed tastes: both perfect matchings are stable.
P_STAR = (((0, 1), (1, 0)), ((1, 0), (0, 1)))


def build_match_suites() -> dict[str, TestSuite]:
    enforce = {
        prop: [Case(find_instance_violating_exactly(prop, n), False) for n in (2, 3)]
        for prop in (SubProperty.STABLE, SubProperty.UNIQUE, SubProperty.COMPLETE)
    }

    relational = [
        Case(MatchInstance(*P_STAR, m), True)
        for m in sorted(enumerate_stable_matchings(*P_STAR), key=sorted)
    ]

    # Everyone shares one ranking, so the only stable matching is the diagonal.
    agreed = tuple(tuple(range(3)) for _ in range(3))
    all_bad = search_instance({SubProperty.STABLE, SubProperty.UNIQUE, SubProperty.COMPLETE}, 3)
    functional = [
        Case(MatchInstance(agreed, agreed, {(i, i) for i in range(3)}), True),
        Case(all_bad, False),
    ]

    edge = [
        Case(MatchInstance((), (), ()), True),
        Case(MatchInstance(((0,),), ((0,),), {(0, 0)}), True),
    ]

    suites = [
        TestSuite("FUNCTIONAL", functional),
        TestSuite("ENFORCE-STABLE", enforce[SubProperty.STABLE]),
        TestSuite("ENFORCE-UNIQUE", enforce[SubProperty.UNIQUE]),
        TestSuite("ENFORCE-COMPLETE", enforce[SubProperty.COMPLETE]),
        TestSuite("RELATIONAL", relational),
        TestSuite("EDGE", edge),
    ]
    return {s.name: s for s in suites}
