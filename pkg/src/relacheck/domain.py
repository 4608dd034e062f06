"""Shared data model: instances, sub-properties, suites, verdicts and their JSON forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Mapping, Sequence, Union


class RelacheckError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(RelacheckError, ValueError):
    """A structurally malformed instance. ``field`` names the offending part."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class EnumerationLimitError(RelacheckError):
    def __init__(self, size: int, bound: int):
        super().__init__(f"input size {size} exceeds enumeration bound {bound}")
        self.size = size
        self.bound = bound


class CycleError(RelacheckError):
    def __init__(self, cycle: Sequence[str]):
        super().__init__("graph contains a cycle: " + " -> ".join(cycle))
        self.cycle = tuple(cycle)


class NotFoundError(RelacheckError):
    pass


class Problem(str, Enum):
    SORT = "sort"
    MATCH = "match"
    TOPOSORT = "toposort"


class SubProperty(str, Enum):
    SAME_SIZE = "SAME-SIZE"
    SAME_ELEMENTS = "SAME-ELEMENTS"
    ORDERED = "ORDERED"
    RETAIN = "RETAIN"
    NO_NEW = "NO-NEW"
    NOT_DISJOINT = "NOT-DISJOINT"
    STABLE = "STABLE"
    UNIQUE = "UNIQUE"
    COMPLETE = "COMPLETE"
    NO_DUPS = "NO-DUPS"

    def __str__(self) -> str:
        return self.value


TOP_LEVEL: dict[Problem, frozenset[SubProperty]] = {
    Problem.SORT: frozenset({SubProperty.SAME_SIZE, SubProperty.SAME_ELEMENTS, SubProperty.ORDERED}),
    Problem.MATCH: frozenset({SubProperty.STABLE, SubProperty.UNIQUE, SubProperty.COMPLETE}),
    Problem.TOPOSORT: frozenset({SubProperty.SAME_ELEMENTS, SubProperty.ORDERED, SubProperty.NO_DUPS}),
}

# Refinements of SAME-ELEMENTS; MATCH has none.
REFINEMENTS = frozenset({SubProperty.RETAIN, SubProperty.NO_NEW, SubProperty.NOT_DISJOINT})


@dataclass(frozen=True, order=True)
class Person:
    name: str
    age: int

    def __repr__(self) -> str:
        return f"{self.name}@{self.age}"


@dataclass(frozen=True)
class SortInstance:
    lst: tuple[Person, ...]
    srt: tuple[Person, ...]

    problem = Problem.SORT

    def __init__(self, lst: Iterable[Person], srt: Iterable[Person]):
        object.__setattr__(self, "lst", tuple(lst))
        object.__setattr__(self, "srt", tuple(srt))


@dataclass(frozen=True)
class MatchInstance:
    candidate_prefs: tuple[tuple[int, ...], ...]
    company_prefs: tuple[tuple[int, ...], ...]
    match: frozenset[tuple[int, int]]

    problem = Problem.MATCH

    def __init__(self, candidate_prefs, company_prefs, match):
        object.__setattr__(self, "candidate_prefs", tuple(tuple(r) for r in candidate_prefs))
        object.__setattr__(self, "company_prefs", tuple(tuple(r) for r in company_prefs))
        object.__setattr__(self, "match", frozenset((int(c), int(k)) for c, k in match))

    @property
    def n(self) -> int:
        return len(self.candidate_prefs)


@dataclass(frozen=True)
class ToposortInstance:
    vertices: frozenset[str]
    edges: tuple[tuple[str, str], ...]
    srt: tuple[str, ...]

    problem = Problem.TOPOSORT

    def __init__(self, vertices, edges, srt):
        edges = tuple((u, v) for u, v in edges)
        if vertices is None:
            vertices = {x for e in edges for x in e}
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "srt", tuple(srt))


Instance = Union[SortInstance, MatchInstance, ToposortInstance]


@dataclass(frozen=True)
class Case:
    instance: Instance
    expected: bool


@dataclass(frozen=True)
class TestSuite:
    name: str
    cases: tuple[Case, ...]

    __test__ = False  # keep pytest from collecting this class

    def __init__(self, name: str, cases: Iterable[Case]):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "cases", tuple(cases))


class Outcome(str, Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    ERROR = "ERROR"
    TIMEOUT = "TIMEOUT"

    def matches(self, expected: bool) -> bool:
        if self is Outcome.TRUE:
            return expected
        if self is Outcome.FALSE:
            return not expected
        return False


@dataclass(frozen=True)
class Verdict:
    index: int
    outcome: Outcome
    detail: str = field(default="", compare=False)


@dataclass(frozen=True)
class RejectionPattern:
    candidate: str
    problem: Problem
    functional_accepted: bool
    rejected_by: frozenset[str]
    verdicts: Mapping[str, tuple[Verdict, ...]] = field(default_factory=dict, hash=False)

    def to_json(self) -> dict[str, Any]:
        return {
            "candidate": self.candidate,
            "problem": self.problem.value,
            "functional_accepted": self.functional_accepted,
            "rejected_by": sorted(self.rejected_by),
            "verdicts": {
                name: [v.outcome.value for v in vs] for name, vs in sorted(self.verdicts.items())
            },
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "RejectionPattern":
        return cls(
            candidate=data["candidate"],
            problem=Problem(data["problem"]),
            functional_accepted=bool(data["functional_accepted"]),
            rejected_by=frozenset(data["rejected_by"]),
            verdicts={
                name: tuple(Verdict(i, Outcome(o)) for i, o in enumerate(vs))
                for name, vs in data.get("verdicts", {}).items()
            },
        )

    def same_result(self, other: "RejectionPattern") -> bool:
        """Equality ignoring the candidate id."""
        return self.to_json() | {"candidate": ""} == other.to_json() | {"candidate": ""}


# --- JSON encodings -------------------------------------------------------

def person_to_json(p: Person) -> dict[str, Any]:
    return {"name": p.name, "age": p.age}


def person_from_json(d: Mapping[str, Any]) -> Person:
    try:
        name, age = d["name"], d["age"]
    except (KeyError, TypeError) as e:
        raise ValidationError("person", f"expected {{name, age}}, got {d!r}") from e
    if not isinstance(name, str):
        raise ValidationError("person.name", f"expected a string, got {name!r}")
    if isinstance(age, bool) or not isinstance(age, int):
        raise ValidationError("person.age", f"expected an integer, got {age!r}")
    return Person(name, age)


def instance_to_json(inst: Instance) -> dict[str, Any]:
    if isinstance(inst, SortInstance):
        return {
            "lst": [person_to_json(p) for p in inst.lst],
            "srt": [person_to_json(p) for p in inst.srt],
        }
    if isinstance(inst, MatchInstance):
        return {
            "candidate_prefs": [list(r) for r in inst.candidate_prefs],
            "company_prefs": [list(r) for r in inst.company_prefs],
            "match": [list(p) for p in sorted(inst.match)],
        }
    if isinstance(inst, ToposortInstance):
        return {
            "vertices": sorted(inst.vertices),
            "edges": [list(e) for e in inst.edges],
            "srt": list(inst.srt),
        }
    raise TypeError(f"not an instance: {inst!r}")


def instance_from_json(problem: Problem, d: Mapping[str, Any]) -> Instance:
    """Decode an instance. Missing output fields decode as empty outputs."""
    problem = Problem(problem)
    if not isinstance(d, Mapping):
        raise ValidationError("instance", "expected a JSON object")
    if problem is Problem.SORT:
        return SortInstance(
            [person_from_json(p) for p in _list(d, "lst")],
            [person_from_json(p) for p in _list(d, "srt", required=False)],
        )
    if problem is Problem.MATCH:
        match = _list(d, "match", required=False)
        for pair in match:
            if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                raise ValidationError("match", f"expected a pair, got {pair!r}")
        return MatchInstance(
            _int_matrix(_list(d, "candidate_prefs"), "candidate_prefs"),
            _int_matrix(_list(d, "company_prefs"), "company_prefs"),
            [tuple(_int(x, "match") for x in pair) for pair in match],
        )
    edges = _list(d, "edges")
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise ValidationError("edges", f"expected a pair of strings, got {e!r}")
    vertices = d.get("vertices")
    if vertices is not None and not all(isinstance(v, str) for v in vertices):
        raise ValidationError("vertices", "vertex identifiers must be strings")
    srt = _list(d, "srt", required=False)
    if not all(isinstance(v, str) for v in srt):
        raise ValidationError("srt", "vertex identifiers must be strings")
    return ToposortInstance(vertices, edges, srt)


def suite_to_json(suite: TestSuite) -> dict[str, Any]:
    return {
        "name": suite.name,
        "cases": [
            {"instance": instance_to_json(c.instance), "expected": c.expected} for c in suite.cases
        ],
    }


def suite_from_json(problem: Problem, d: Mapping[str, Any]) -> TestSuite:
    return TestSuite(
        d["name"],
        [Case(instance_from_json(problem, c["instance"]), bool(c["expected"])) for c in d["cases"]],
    )


def _list(d: Mapping[str, Any], key: str, required: bool = True) -> list:
    if key not in d:
        if required:
            raise ValidationError(key, "missing")
        return []
    value = d[key]
    if not isinstance(value, list):
        raise ValidationError(key, f"expected a list, got {type(value).__name__}")
    return value


def _int(x: Any, name: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValidationError(name, f"expected an integer, got {x!r}")
    return x


def _int_matrix(rows: list, name: str) -> list[list[int]]:
    out = []
    for row in rows:
        if not isinstance(row, list):
            raise ValidationError(name, f"expected a list of lists, got {row!r}")
        out.append([_int(x, name) for x in row])
    return out
