"""Per-problem registry tying together validators, generators, enumerators and wire encodings."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Any, Callable, Mapping

from . import match, sort, toposort
from .domain import (
    REFINEMENTS,
    TOP_LEVEL,
    Instance,
    MatchInstance,
    Problem,
    SortInstance,
    SubProperty,
    TestSuite,
    ToposortInstance,
    ValidationError,
    instance_from_json,
    instance_to_json,
    person_to_json,
)

# Keys of the instance JSON that make up the INPUT; the remaining key is the OUTPUT.
_INPUT_KEYS = {
    Problem.SORT: ("lst",),
    Problem.MATCH: ("candidate_prefs", "company_prefs"),
    Problem.TOPOSORT: ("vertices", "edges"),
}
_OUTPUT_KEY = {Problem.SORT: "srt", Problem.MATCH: "match", Problem.TOPOSORT: "srt"}


@dataclass(frozen=True)
class ProblemPack:
    problem: Problem
    is_valid: Callable[[Instance], bool]
    violated: Callable[[Instance], set[SubProperty]]
    build_suites: Callable[[], dict[str, TestSuite]]
    generate: Callable[..., Any]
    enumerate: Callable[[Instance], list[Any]]
    solve: Callable[[Instance], Any]
    small_inputs: Callable[[], list[Instance]]

    def suites(self) -> dict[str, TestSuite]:
        return _cached_suites(self.problem)


def _sort_enumerate(inst: SortInstance) -> list[list[sort.Person]]:
    return [list(s) for s in sorted(sort.enumerate_valid_sorts(inst.lst))]


def _match_enumerate(inst: MatchInstance) -> list[list[tuple[int, int]]]:
    found = match.enumerate_stable_matchings(inst.candidate_prefs, inst.company_prefs)
    return sorted(sorted(m) for m in found)


def _topo_enumerate(inst: ToposortInstance) -> list[list[str]]:
    return [list(o) for o in sorted(toposort.enumerate_topological_orders(inst.vertices, inst.edges))]


def _sort_generate(n: int, seed: int, **_: Any) -> SortInstance:
    return SortInstance(sort.generate_sort_input(n, seed), ())


def _match_generate(n: int, seed: int, **_: Any) -> MatchInstance:
    cp, kp = match.generate_match_input(n, seed)
    return MatchInstance(cp, kp, ())


def _topo_generate(n: int, seed: int, edge_prob: float = 0.3, **_: Any) -> ToposortInstance:
    vertices, edges = toposort.generate_dag(n, seed, edge_prob)
    return ToposortInstance(vertices, edges, ())


def _sort_small() -> list[SortInstance]:
    P = sort.Person
    return [
        SortInstance((), ()),
        SortInstance([P("Ann", 3)], ()),
        SortInstance([P("Bob", 2), P("Ann", 1)], ()),
        SortInstance([P("Ann", 5), P("Bob", 5), P("Cat", 1)], ()),
    ]


def _match_small() -> list[MatchInstance]:
    return [
        MatchInstance((), (), ()),
        MatchInstance([[0]], [[0]], ()),
        MatchInstance(*match.P_STAR, ()),
        MatchInstance([[0, 1], [0, 1]], [[1, 0], [1, 0]], ()),
    ]


def _topo_small() -> list[ToposortInstance]:
    return [
        ToposortInstance((), (), ()),
        ToposortInstance({"a"}, (), ()),
        ToposortInstance(*toposort.FAN, ()),
        ToposortInstance({"a", "b", "c"}, [("c", "b"), ("b", "a")], ()),
    ]


PACKS: dict[Problem, ProblemPack] = {
    Problem.SORT: ProblemPack(
        Problem.SORT,
        is_valid=lambda i: sort.sort_is_valid(i.lst, i.srt),
        violated=sort.violated,
        build_suites=sort.build_sort_suites,
        generate=_sort_generate,
        enumerate=_sort_enumerate,
        solve=lambda i: sort.reference_sort(i.lst),
        small_inputs=_sort_small,
    ),
    Problem.MATCH: ProblemPack(
        Problem.MATCH,
        is_valid=lambda i: match.match_is_valid(i.candidate_prefs, i.company_prefs, i.match),
        violated=match.violated,
        build_suites=match.build_match_suites,
        generate=_match_generate,
        enumerate=_match_enumerate,
        solve=lambda i: sorted(match.gale_shapley(i.candidate_prefs, i.company_prefs)),
        small_inputs=_match_small,
    ),
    Problem.TOPOSORT: ProblemPack(
        Problem.TOPOSORT,
        is_valid=lambda i: toposort.toposort_is_valid(i.vertices, i.edges, i.srt),
        violated=toposort.violated,
        build_suites=toposort.build_toposort_suites,
        generate=_topo_generate,
        enumerate=_topo_enumerate,
        solve=lambda i: toposort.kahn_sort(i.vertices, i.edges),
        small_inputs=_topo_small,
    ),
}


def pack(problem: Problem | str) -> ProblemPack:
    return PACKS[Problem(problem)]


@functools.lru_cache(maxsize=None)
def _cached_suites(problem: Problem) -> dict[str, TestSuite]:
    return PACKS[problem].build_suites()


def violated_sub_properties(instance: Instance) -> set[SubProperty]:
    """Sub-properties (with SAME-ELEMENTS refinements) the instance fails.

    Empty exactly when the reference validator accepts the instance.
    """
    return PACKS[instance.problem].violated(instance)


def is_valid(instance: Instance) -> bool:
    return PACKS[instance.problem].is_valid(instance)


# --- wire encodings -------------------------------------------------------

def encode_input(instance: Instance) -> Any:
    data = instance_to_json(instance)
    if instance.problem is Problem.SORT:
        return data["lst"]
    return {k: data[k] for k in _INPUT_KEYS[instance.problem]}


def encode_output(instance: Instance) -> Any:
    return instance_to_json(instance)[_OUTPUT_KEY[instance.problem]]


def encode_output_value(problem: Problem, output: Any) -> Any:
    """JSON form of a solver's output (a person list, pair collection or vertex list)."""
    problem = Problem(problem)
    if problem is Problem.SORT:
        return [person_to_json(p) for p in output]
    if problem is Problem.MATCH:
        return [list(p) for p in sorted(output)]
    return list(output)


def decode(problem: Problem | str, input_json: Any, output_json: Any = None) -> Instance:
    """Rebuild an instance from wire INPUT and OUTPUT encodings."""
    problem = Problem(problem)
    if problem is Problem.SORT:
        if not isinstance(input_json, list):
            raise ValidationError("input", "expected a list of persons")
        data = {"lst": input_json}
    else:
        if not isinstance(input_json, Mapping):
            raise ValidationError("input", "expected a JSON object")
        data = dict(input_json)
    if output_json is not None:
        data[_OUTPUT_KEY[problem]] = output_json
    return instance_from_json(problem, data)


def with_output(instance: Instance, output_json: Any) -> Instance:
    return decode(instance.problem, encode_input(instance), output_json)


__all__ = [
    "PACKS",
    "ProblemPack",
    "decode",
    "encode_input",
    "encode_output",
    "encode_output_value",
    "expected_violations",
    "is_valid",
    "pack",
    "suite_isolation_failures",
    "violated_sub_properties",
    "with_output",
]


def expected_violations(problem: Problem | str, suite_name: str) -> frozenset[SubProperty] | None:
    """What every case of an ENFORCE suite must violate, or None for other suites.

    Refinement suites pin the full set; top-level suites pin only the top-level
    part, plus "no refinements" unless the target is SAME-ELEMENTS.
    """
    if not suite_name.startswith("ENFORCE-"):
        return None
    target = SubProperty(suite_name[len("ENFORCE-"):])
    if target is SubProperty.RETAIN:
        return frozenset({SubProperty.SAME_ELEMENTS, SubProperty.RETAIN})
    if target is SubProperty.NO_NEW:
        return frozenset({SubProperty.SAME_ELEMENTS, SubProperty.NO_NEW})
    if target is SubProperty.NOT_DISJOINT:
        return frozenset(
            {SubProperty.SAME_ELEMENTS, SubProperty.RETAIN, SubProperty.NO_NEW, SubProperty.NOT_DISJOINT}
        )
    return frozenset({target})


def suite_isolation_failures(problem: Problem | str) -> list[str]:
    """Cases breaking a suite's contract; empty when every shipped suite is sound."""
    problem = Problem(problem)
    top = TOP_LEVEL[problem]
    failures = []
    for name, suite in pack(problem).suites().items():
        want = expected_violations(problem, name)
        for idx, case in enumerate(suite.cases):
            got = frozenset(violated_sub_properties(case.instance))
            if want is None:
                ok = case.expected == (not got)
                if name != "FUNCTIONAL":
                    ok = ok and case.expected
            elif want & REFINEMENTS:
                ok = got == want and not case.expected
            else:
                (target,) = want
                allowed_refinements = REFINEMENTS if target is SubProperty.SAME_ELEMENTS else frozenset()
                ok = (got & top) == want and got - top <= allowed_refinements and not case.expected
            if not ok:
                failures.append(f"{name}[{idx}]: expected={case.expected} violated={sorted(map(str, got))}")
    return failures
