"""Topological sorting: reference validator, linear-extension enumerator, DAG generator, suites."""

from __future__ import annotations

import heapq
import random
from collections import Counter, defaultdict
from typing import AbstractSet, Iterable, Sequence

from .domain import (
    Case,
    CycleError,
    EnumerationLimitError,
    SubProperty,
    TestSuite,
    ToposortInstance,
    ValidationError,
)

DEFAULT_BOUND = 7

Edge = tuple[str, str]


def validate(vertices: AbstractSet[str], edges: Iterable[Edge]) -> None:
    for u, v in edges:
        for x in (u, v):
            if x not in vertices:
                raise ValidationError("edges", f"endpoint {x!r} of edge ({u!r}, {v!r}) is not a vertex")


def retains(vertices: AbstractSet[str], srt: Sequence[str]) -> bool:
    return set(vertices) <= set(srt)


def adds_nothing_new(vertices: AbstractSet[str], srt: Sequence[str]) -> bool:
    return set(srt) <= set(vertices)


def not_disjoint(vertices: AbstractSet[str], srt: Sequence[str]) -> bool:
    return not vertices or not srt or not set(vertices).isdisjoint(srt)


def same_elements(vertices: AbstractSet[str], srt: Sequence[str]) -> bool:
    return set(vertices) == set(srt)


def ordered(edges: Iterable[Edge], srt: Sequence[str]) -> bool:
    """Every occurrence of ``u`` precedes every occurrence of ``v`` for each edge.

    Edges whose endpoints are absent from ``srt`` impose nothing here; missing
    vertices are a SAME-ELEMENTS matter.
    """
    first: dict[str, int] = {}
    last: dict[str, int] = {}
    for i, x in enumerate(srt):
        first.setdefault(x, i)
        last[x] = i
    return all(
        u not in last or v not in first or last[u] < first[v]
        for u, v in edges
    )


def no_dups(srt: Sequence[str]) -> bool:
    return len(set(srt)) == len(srt)


def toposort_is_valid(vertices: AbstractSet[str], edges: Iterable[Edge], srt: Sequence[str]) -> bool:
    edges = list(edges)
    validate(vertices, edges)
    return same_elements(vertices, srt) and ordered(edges, srt) and no_dups(srt)


def violated(inst: ToposortInstance) -> set[SubProperty]:
    validate(inst.vertices, inst.edges)
    v, e, srt = inst.vertices, inst.edges, inst.srt
    out = set()
    if not same_elements(v, srt):
        out.add(SubProperty.SAME_ELEMENTS)
    if not retains(v, srt):
        out.add(SubProperty.RETAIN)
    if not adds_nothing_new(v, srt):
        out.add(SubProperty.NO_NEW)
    if not not_disjoint(v, srt):
        out.add(SubProperty.NOT_DISJOINT)
    if not ordered(e, srt):
        out.add(SubProperty.ORDERED)
    if not no_dups(srt):
        out.add(SubProperty.NO_DUPS)
    return out


def find_cycle(vertices: AbstractSet[str], edges: Iterable[Edge]) -> list[str] | None:
    """A cycle as a vertex list whose first and last entries coincide, or None."""
    succ: dict[str, list[str]] = defaultdict(list)
    for u, v in edges:
        succ[u].append(v)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = dict.fromkeys(vertices, WHITE)
    for root in sorted(vertices):
        if colour[root] != WHITE:
            continue
        path = [root]
        stack = [iter(sorted(succ[root]))]
        colour[root] = GREY
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                colour[path.pop()] = BLACK
                stack.pop()
            elif colour[nxt] == GREY:
                return path[path.index(nxt):] + [nxt]
            elif colour[nxt] == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                stack.append(iter(sorted(succ[nxt])))
    return None


def enumerate_topological_orders(
    vertices: AbstractSet[str], edges: Iterable[Edge], bound: int = DEFAULT_BOUND
) -> set[tuple[str, ...]]:
    edges = list(edges)
    validate(vertices, edges)
    if len(vertices) > bound:
        raise EnumerationLimitError(len(vertices), bound)
    cycle = find_cycle(vertices, edges)
    if cycle is not None:
        raise CycleError(cycle)

    succ: dict[str, list[str]] = defaultdict(list)
    indeg = Counter({v: 0 for v in vertices})
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1

    out: set[tuple[str, ...]] = set()
    prefix: list[str] = []

    def extend(frontier: set[str]) -> None:
        if not frontier:
            if len(prefix) == len(vertices):
                out.add(tuple(prefix))
            return
        for x in sorted(frontier):
            prefix.append(x)
            released = set()
            for y in succ[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    released.add(y)
            extend((frontier - {x}) | released)
            for y in succ[x]:
                indeg[y] += 1
            prefix.pop()

    extend({v for v in vertices if indeg[v] == 0})
    return out


def kahn_sort(vertices: AbstractSet[str], edges: Iterable[Edge]) -> list[str]:
    """One topological order, always taking the smallest available vertex."""
    edges = list(edges)
    validate(vertices, edges)
    succ: dict[str, list[str]] = defaultdict(list)
    indeg = Counter({v: 0 for v in vertices})
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1
    heap = sorted(v for v in vertices if indeg[v] == 0)
    out = []
    while heap:
        x = heapq.heappop(heap)
        out.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    if len(out) != len(vertices):
        raise CycleError(find_cycle(vertices, edges) or [])
    return out


def generate_dag(n: int, seed: int, edge_probability: float = 0.3) -> tuple[list[str], list[Edge]]:
    """Random DAG: shuffle ``n`` vertex names, then add forward edges with the given probability."""
    if not 0 <= edge_probability <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {edge_probability}")
    rng = random.Random(seed)
    order = [f"v{i}" for i in range(n)]
    rng.shuffle(order)
    edges = [
        (order[i], order[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    return sorted(order), edges


def _case(vertices: str, edges: str, srt: str, expected: bool) -> Case:
    # Compact notation: vertices "abc", edges "ab ac", srt "acb".
    es = [(e[0], e[1]) for e in edges.split()]
    return Case(ToposortInstance(set(vertices), es, list(srt)), expected)


FAN = ({"a", "b", "c"}, [("a", "b"), ("a", "c")])


def build_toposort_suites() -> dict[str, TestSuite]:
    retain = [
        _case("abcd", "ab bc", "abc", False),
        _case("abcd", "ab bc", "acd", False),
    ]
    no_new = [
        _case("abc", "ab bc", "abcx", False),
        _case("abc", "ab bc", "xabc", False),
    ]
    disjoint = [
        _case("abc", "ab ac", "xyz", False),
        _case("ab", "", "cd", False),
    ]
    same_elements_cases = retain + no_new + disjoint + [
        _case("abc", "ab", "abx", False),
    ]
    ordered_cases = [
        _case("ab", "ab", "ba", False),
        _case("abc", "ab ac", "bac", False),
        _case("abcd", "ab bc cd", "acbd", False),
    ]
    dups = [
        _case("abc", "ab", "abcc", False),
        _case("abc", "ab", "aabc", False),
        _case("abc", "ab bc", "abbc", False),
    ]
    relational = [
        Case(ToposortInstance(*FAN, order), True)
        for order in sorted(enumerate_topological_orders(*FAN))
    ]
    functional = [
        _case("abcde", "ab bc cd de", "abcde", True),
        _case("abc", "ab bc", "cbxx", False),
    ]
    edge = [
        _case("", "", "", True),
        _case("a", "", "a", True),
    ]
    suites = [
        TestSuite("FUNCTIONAL", functional),
        TestSuite("ENFORCE-SAME-ELEMENTS", same_elements_cases),
        TestSuite("ENFORCE-RETAIN", retain),
        TestSuite("ENFORCE-NO-NEW", no_new),
        TestSuite("ENFORCE-NOT-DISJOINT", disjoint),
        TestSuite("ENFORCE-ORDERED", ordered_cases),
        TestSuite("ENFORCE-NO-DUPS", dups),
        TestSuite("RELATIONAL", relational),
        TestSuite("EDGE", edge),
    ]
    return {s.name: s for s in suites}
