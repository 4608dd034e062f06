"""Aggregate rejection patterns into region counts (the information in a Venn diagram)."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .domain import RejectionPattern, RelacheckError


class AggregationError(RelacheckError):
    pass


def region_key(suites: Iterable[str]) -> str:
    """Canonical string for a set of suite names; the empty set is ``""``."""
    return ",".join(sorted(suites))


@dataclass(frozen=True)
class VennReport:
    universe: int = 0
    not_functional: int = 0
    regions: Mapping[frozenset[str], int] = field(default_factory=dict)

    def to_json(self) -> dict:
        ordered = sorted(self.regions.items(), key=lambda kv: region_key(kv[0]))
        return {
            "universe": self.universe,
            "not_functional": self.not_functional,
            "regions": {region_key(k): v for k, v in ordered},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "VennReport":
        regions = {
            frozenset(k.split(",")) if k else frozenset(): int(v)
            for k, v in data["regions"].items()
        }
        return cls(int(data["universe"]), int(data["not_functional"]), regions)


def aggregate(patterns: Iterable[RejectionPattern]) -> VennReport:
    """Count candidates per exact set of rejecting suites.

    Candidates rejected by FUNCTIONAL are tallied separately and kept out of
    the regions.
    """
    patterns = list(patterns)
    problems = {p.problem for p in patterns}
    if len(problems) > 1:
        raise AggregationError(f"patterns mix problems: {sorted(p.value for p in problems)}")
    suite_sets = {frozenset(p.verdicts) for p in patterns if p.verdicts}
    if len(suite_sets) > 1:
        raise AggregationError("patterns were graded against different suite sets")

    regions: Counter[frozenset[str]] = Counter()
    not_functional = 0
    for p in patterns:
        if not p.functional_accepted:
            not_functional += 1
        else:
            regions[frozenset(p.rejected_by)] += 1
    return VennReport(len(patterns), not_functional, dict(regions))


def render(report: VennReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), separators=(",", ":"))
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    rows = sorted(report.regions.items(), key=lambda kv: (-kv[1], region_key(kv[0])))
    width = max([len(str(c)) for _, c in rows] + [1])
    lines = [f"{count:>{width}}  {region_key(k) or '(accepted by every suite)'}" for k, count in rows]
    lines.append(f"not_functional: {report.not_functional}")
    lines.append(f"universe: {report.universe}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> VennReport:
    return VennReport.from_json(json.loads(text))
