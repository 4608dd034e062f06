"""Command-line entry point: ``relacheck <subcommand> ...``.

Exit codes: 0 success (grading verdicts live in the output), 1 usage or input
error, 2 candidate launch failure, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import problems, report
from .domain import (
    Problem,
    RejectionPattern,
    RelacheckError,
    instance_from_json,
    suite_to_json,
)
from .harness import (
    DEFAULT_TIMEOUT_MS,
    CandidateLaunchError,
    check_implementation,
    classify,
    external_candidate,
    mutant_candidate,
    reference_candidate,
)
from .mutants import mutant_corpus

EXIT_USAGE, EXIT_LAUNCH, EXIT_INVARIANT = 1, 2, 3


class UsageError(Exception):
    pass


class InvariantError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("RELACHECK_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"RELACHECK_SEED must be an integer, got {raw!r}")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_grade(args) -> int:
    problem = Problem(args.problem)
    suite_names = None if args.suites in (None, "all") else [s.strip() for s in args.suites.split(",")]
    if args.candidate:
        candidates = [external_candidate(args.candidate, args.timeout_ms)]
    elif args.mutant:
        candidates = [mutant_candidate(problem, args.mutant)]
    elif args.reference:
        candidates = [reference_candidate(problem)]
    else:
        candidates = [mutant_candidate(problem, name) for name in mutant_corpus(problem)]

    patterns = [classify(c, problem, suite_names) for c in candidates]

    if args.format == "json":
        text = "".join(_dumps(p.to_json()) + "\n" for p in patterns)
    else:
        lines = []
        for p in patterns:
            gate = "functional" if p.functional_accepted else "NOT-FUNCTIONAL"
            rejected = ", ".join(sorted(p.rejected_by)) or "-"
            lines.append(f"{p.candidate}\t{gate}\trejected by: {rejected}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_suites(args) -> int:
    problem = Problem(args.problem)
    failures = problems.suite_isolation_failures(problem)
    if failures:
        raise InvariantError("suite isolation broken:\n  " + "\n  ".join(failures))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, suite in problems.pack(problem).suites().items():
        (out / f"{name}.json").write_text(json.dumps(suite_to_json(suite), indent=2) + "\n")
        print(out / f"{name}.json")
    return 0


def cmd_enumerate(args) -> int:
    problem = Problem(args.problem)
    try:
        data = json.loads(Path(args.instance).read_text())
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read instance {args.instance}: {e}")
    inst = instance_from_json(problem, data)
    outputs = problems.pack(problem).enumerate(inst)
    print(_dumps([problems.encode_output_value(problem, o) for o in outputs]))
    return 0


def cmd_gen(args) -> int:
    problem = Problem(args.problem)
    if args.size < 0:
        raise UsageError("--size must be non-negative")
    kwargs = {} if args.edge_prob is None else {"edge_prob": args.edge_prob}
    if args.edge_prob is not None and problem is not Problem.TOPOSORT:
        raise UsageError("--edge-prob only applies to toposort")
    inst = problems.pack(problem).generate(args.size, args.seed, **kwargs)
    print(_dumps(problems.encode_input(inst)))
    return 0


def cmd_check(args) -> int:
    result = check_implementation(
        args.impl, args.problem, args.sizes, args.trials, args.seed, args.timeout_ms
    )
    if args.format == "json":
        print(_dumps(result.to_json()))
    else:
        for t in result.trials:
            mark = "pass" if t.passed else "FAIL"
            print(f"{mark}  {t.label}  (size {t.size}){'  ' + t.diagnostic if t.diagnostic else ''}")
        print("overall:", "pass" if result.passed else "FAIL")
    return 0


def cmd_report(args) -> int:
    try:
        lines = Path(args.patterns).read_text().splitlines()
        patterns = [RejectionPattern.from_json(json.loads(line)) for line in lines if line.strip()]
    except (OSError, ValueError, KeyError) as e:
        raise UsageError(f"cannot read patterns from {args.patterns}: {e}")
    venn = report.aggregate(patterns)
    if sum(venn.regions.values()) + venn.not_functional != venn.universe:
        raise InvariantError("region counts do not sum to the universe")
    text = report.render(venn, args.format)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="relacheck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    problem_kw = dict(required=True, choices=[p.value for p in Problem])

    g = sub.add_parser("grade", help="classify a candidate validity predicate")
    g.add_argument("--problem", **problem_kw)
    who = g.add_mutually_exclusive_group(required=True)
    who.add_argument("--candidate", metavar="COMMAND", help="external program speaking the validator protocol")
    who.add_argument("--mutant", metavar="NAME")
    who.add_argument("--reference", action="store_true")
    who.add_argument("--all-mutants", action="store_true")
    g.add_argument("--suites", default="all", help="comma-separated suite names, or 'all'")
    g.add_argument("--timeout-ms", type=int, default=DEFAULT_TIMEOUT_MS)
    g.add_argument("--seed", type=int, help="accepted for uniformity; the suites are fixed")
    g.add_argument("--format", choices=["json", "text"], default="json")
    g.add_argument("--out", metavar="FILE")
    g.set_defaults(func=cmd_grade)

    s = sub.add_parser("suites", help="export all suites as JSON fixtures")
    s.add_argument("--problem", **problem_kw)
    s.add_argument("--out", required=True, metavar="DIR")
    s.set_defaults(func=cmd_suites)

    e = sub.add_parser("enumerate", help="print every valid output for an instance's input")
    e.add_argument("--problem", **problem_kw)
    e.add_argument("--instance", required=True, metavar="FILE")
    e.set_defaults(func=cmd_enumerate)

    gen = sub.add_parser("gen", help="emit a generated input")
    gen.add_argument("--problem", **problem_kw)
    gen.add_argument("--size", type=int, required=True)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--edge-prob", type=float)
    gen.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="test an implementation against generated and hand-made inputs")
    c.add_argument("--problem", **problem_kw)
    c.add_argument("--impl", required=True, metavar="COMMAND")
    c.add_argument("--sizes", type=_int_list, default=[0, 1, 5, 20])
    c.add_argument("--trials", type=int, default=3)
    c.add_argument("--seed", type=int)
    c.add_argument("--timeout-ms", type=int, default=DEFAULT_TIMEOUT_MS)
    c.add_argument("--format", choices=["json", "text"], default="text")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("report", help="aggregate rejection patterns into region counts")
    r.add_argument("--patterns", required=True, metavar="FILE", help="one RejectionPattern JSON per line")
    r.add_argument("--format", choices=["json", "text"], default="text")
    r.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return args.func(args)
    except CandidateLaunchError as e:
        print(f"relacheck: {e}", file=sys.stderr)
        return EXIT_LAUNCH
    except InvariantError as e:
        print(f"relacheck: invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except KeyError as e:
        print(f"relacheck: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, RelacheckError, ValueError) as e:
        print(f"relacheck: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
