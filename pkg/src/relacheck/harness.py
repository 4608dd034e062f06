"""Run candidate validity predicates over suites and classify them.

Candidates are either in-process callables (the reference predicate and the
mutant corpus) or external programs speaking a line-delimited JSON protocol
on stdin/stdout. External programs are driven in batch: one process per
suite, one request line per case, one response line back, matched by order.
"""

from __future__ import annotations

import hashlib
import json
import queue
import shlex
import subprocess
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, Sequence, Union

from . import problems
from .domain import (
    Case,
    Instance,
    Outcome,
    Problem,
    RejectionPattern,
    RelacheckError,
    TestSuite,
    Verdict,
)
from .mutants import get_mutant


DEFAULT_TIMEOUT_MS = 2000
FUNCTIONAL = "FUNCTIONAL"


class CandidateLaunchError(RelacheckError):
    """An external candidate could not be started at all."""


class CandidateKind(str, Enum):
    REFERENCE = "reference"
    BUILTIN_MUTANT = "builtin-mutant"
    EXTERNAL = "external"


@dataclass(frozen=True)
class Candidate:
    id: str
    kind: CandidateKind
    predicate: Callable[[Instance], bool] | None = field(default=None, compare=False)
    command: str | None = None
    timeout_ms: int = DEFAULT_TIMEOUT_MS


def reference_candidate(problem: Problem | str) -> Candidate:
    return Candidate("reference", CandidateKind.REFERENCE, problems.pack(problem).is_valid)


def mutant_candidate(problem: Problem | str, name: str) -> Candidate:
    spec = get_mutant(problem, name)
    return Candidate(f"mutant:{name}", CandidateKind.BUILTIN_MUTANT, spec.predicate)


def external_candidate(command: str, timeout_ms: int = DEFAULT_TIMEOUT_MS, id: str | None = None) -> Candidate:
    return Candidate(id or command, CandidateKind.EXTERNAL, command=command, timeout_ms=timeout_ms)


# --- external process plumbing -------------------------------------------

_EOF = object()


class _Session:
    """One running external program with a background line reader."""

    def __init__(self, command: str):
        argv = shlex.split(command)
        if not argv:
            raise CandidateLaunchError("empty candidate command")
        try:
            self.proc = subprocess.Popen(
                argv,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL,
                text=True,
                bufsize=1,
            )
        except OSError as e:
            raise CandidateLaunchError(f"cannot launch {command!r}: {e}") from e
        self.lines: queue.Queue = queue.Queue()
        self.reader = threading.Thread(target=self._pump, daemon=True)
        self.reader.start()

    def _pump(self) -> None:
        for line in self.proc.stdout:
            self.lines.put(line)
        self.lines.put(_EOF)

    def ask(self, request: Any, timeout_s: float) -> tuple[str, str]:
        """Send one request; return (status, payload) with status ok/timeout/exit."""
        try:
            self.proc.stdin.write(json.dumps(request) + "\n")
            self.proc.stdin.flush()
        except (BrokenPipeError, OSError, ValueError):
            return "exit", f"exited with code {self.proc.poll()}"
        try:
            line = self.lines.get(timeout=timeout_s)
        except queue.Empty:
            return "timeout", f"no response within {timeout_s:g}s"
        if line is _EOF:
            self.proc.wait()
            return "exit", f"exited with code {self.proc.returncode}"
        return "ok", line

    def close(self, kill: bool = False) -> None:
        try:
            if self.proc.stdin:
                self.proc.stdin.close()
        except OSError:
            pass
        if kill:
            self.proc.kill()
        try:
            self.proc.wait(timeout=1)
        except subprocess.TimeoutExpired:
            self.proc.kill()
            self.proc.wait()
        self.reader.join(timeout=1)
        if self.proc.stdout:
            self.proc.stdout.close()


def _exchange(command: str, requests: Sequence[Any], timeout_ms: int) -> list[tuple[str, str]]:
    """Stream requests to one process, restarting it after a timeout or exit."""
    results = []
    session: _Session | None = None
    try:
        for request in requests:
            if session is None:
                session = _Session(command)
            status, payload = session.ask(request, timeout_ms / 1000)
            if status != "ok":
                session.close(kill=status == "timeout")
                session = None
            results.append((status, payload))
    finally:
        if session is not None:
            session.close()
    return results


def _validator_outcome(status: str, payload: str) -> tuple[Outcome, str]:
    if status == "timeout":
        return Outcome.TIMEOUT, payload
    if status != "ok":
        return Outcome.ERROR, payload
    try:
        valid = json.loads(payload)["valid"]
    except (ValueError, KeyError, TypeError):
        return Outcome.ERROR, f"malformed response: {payload.strip()[:200]!r}"
    if valid is True:
        return Outcome.TRUE, ""
    if valid is False:
        return Outcome.FALSE, ""
    return Outcome.ERROR, f"non-boolean verdict: {valid!r}"


def validator_request(case: Case) -> dict[str, Any]:
    inst = case.instance
    return {
        "problem": inst.problem.value,
        "input": problems.encode_input(inst),
        "output": problems.encode_output(inst),
    }


# --- grading --------------------------------------------------------------

@dataclass(frozen=True)
class SuiteResult:
    name: str
    verdicts: tuple[Verdict, ...]
    accepted: bool


def _evaluate(candidate: Candidate, cases: Sequence[Case]) -> list[Verdict]:
    if candidate.kind is CandidateKind.EXTERNAL:
        answers = _exchange(candidate.command, [validator_request(c) for c in cases], candidate.timeout_ms)
        out = []
        for i, (status, payload) in enumerate(answers):
            outcome, detail = _validator_outcome(status, payload)
            out.append(Verdict(i, outcome, detail))
        return out

    out = []
    for i, case in enumerate(cases):
        try:
            result = candidate.predicate(case.instance)
        except Exception as e:  # candidate bugs become ERROR verdicts
            out.append(Verdict(i, Outcome.ERROR, f"{type(e).__name__}: {e}"))
            continue
        if result is True:
            out.append(Verdict(i, Outcome.TRUE))
        elif result is False:
            out.append(Verdict(i, Outcome.FALSE))
        else:
            out.append(Verdict(i, Outcome.ERROR, f"non-boolean result {result!r}"))
    return out


def run_suite(candidate: Candidate, suite: TestSuite) -> SuiteResult:
    verdicts = tuple(_evaluate(candidate, suite.cases))
    accepted = all(v.outcome.matches(c.expected) for v, c in zip(verdicts, suite.cases))
    return SuiteResult(suite.name, verdicts, accepted)


def classify(
    candidate: Candidate,
    problem: Problem | str,
    suite_names: Iterable[str] | None = None,
) -> RejectionPattern:
    """Grade a candidate on every suite, FUNCTIONAL first.

    Every suite runs even when FUNCTIONAL fails; the gate is applied when
    patterns are aggregated, not here.
    """
    problem = Problem(problem)
    suites = problems.pack(problem).suites()
    if suite_names is None:
        names = list(suites)
    else:
        names = list(dict.fromkeys(suite_names))
        unknown = [n for n in names if n not in suites]
        if unknown:
            raise KeyError(f"unknown suites for {problem.value}: {', '.join(unknown)}")
    names = [FUNCTIONAL] + [n for n in names if n != FUNCTIONAL]

    results = {name: run_suite(candidate, suites[name]) for name in names}
    return RejectionPattern(
        candidate=candidate.id,
        problem=problem,
        functional_accepted=results[FUNCTIONAL].accepted,
        rejected_by=frozenset(name for name, r in results.items() if not r.accepted),
        verdicts={name: r.verdicts for name, r in results.items()},
    )


# --- implementation checking ---------------------------------------------

@dataclass(frozen=True)
class TrialResult:
    label: str
    size: int
    passed: bool
    diagnostic: str = ""


@dataclass(frozen=True)
class CheckReport:
    problem: Problem
    trials: tuple[TrialResult, ...]

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.trials)

    def to_json(self) -> dict[str, Any]:
        return {
            "problem": self.problem.value,
            "passed": self.passed,
            "trials": [
                {"label": t.label, "size": t.size, "passed": t.passed, "diagnostic": t.diagnostic}
                for t in self.trials
            ],
        }


def derive_seed(seed: int, *parts: Any) -> int:
    digest = hashlib.blake2b(repr((seed, *parts)).encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _input_size(inst: Instance) -> int:
    if inst.problem is Problem.SORT:
        return len(inst.lst)
    if inst.problem is Problem.MATCH:
        return inst.n
    return len(inst.vertices)


Implementation = Union[str, Callable[[Instance], Any]]


def check_implementation(
    impl: Implementation,
    problem: Problem | str,
    sizes: Sequence[int] = (0, 1, 5, 20),
    trials: int = 3,
    seed: int = 0,
    timeout_ms: int = DEFAULT_TIMEOUT_MS,
) -> CheckReport:
    """Feed hand-crafted and generated inputs to an implementation and validate its outputs.

    ``impl`` is either a command line speaking the implementation-mode protocol
    or a callable from an input instance to an output value.
    """
    problem = Problem(problem)
    pk = problems.pack(problem)
    inputs: list[tuple[str, Instance]] = [
        (f"hand-crafted #{i}", inst) for i, inst in enumerate(pk.small_inputs())
    ]
    for size in sizes:
        for t in range(trials):
            inst = pk.generate(size, derive_seed(seed, size, t))
            inputs.append((f"size={size} trial={t}", inst))

    if isinstance(impl, str):
        requests = [{"problem": problem.value, "input": problems.encode_input(i)} for _, i in inputs]
        raw = _exchange(impl, requests, timeout_ms)
        outputs = [_implementation_output(status, payload) for status, payload in raw]
    else:
        outputs = []
        for _, inst in inputs:
            try:
                outputs.append((problems.encode_output_value(problem, impl(inst)), ""))
            except Exception as e:
                outputs.append((None, f"{type(e).__name__}: {e}"))

    results = []
    for (label, inst), (output, error) in zip(inputs, outputs):
        size = _input_size(inst)
        if error:
            results.append(TrialResult(label, size, False, error))
            continue
        if output is None:
            results.append(TrialResult(label, size, False, "output is null"))
            continue
        try:
            candidate_output = problems.with_output(inst, output)
            violated = problems.violated_sub_properties(candidate_output)
        except (RelacheckError, ValueError, TypeError) as e:
            results.append(TrialResult(label, size, False, f"malformed output: {e}"))
            continue
        if violated:
            names = ", ".join(sorted(map(str, violated)))
            results.append(TrialResult(label, size, False, f"output violates {names}"))
        else:
            results.append(TrialResult(label, size, True))
    return CheckReport(problem, tuple(results))


def _implementation_output(status: str, payload: str) -> tuple[Any, str]:
    if status != "ok":
        return None, payload
    try:
        return json.loads(payload)["output"], ""
    except (ValueError, KeyError, TypeError):
        return None, f"malformed response: {payload.strip()[:200]!r}"
