"""Validity predicates, suite builders and a grading harness for relational problems.

Three problems are covered: sorting people by age, stable matching, and
topological sorting. Each has a reference validator, an input generator, an
enumerator of every valid output, and suites that each isolate one
sub-property of the validator so that candidate validators can be graded by
which suites reject them.
"""

from .domain import (
    Case,
    MatchInstance,
    Outcome,
    Person,
    Problem,
    RejectionPattern,
    SortInstance,
    SubProperty,
    TestSuite,
    ToposortInstance,
    Verdict,
)
from .harness import (
    Candidate,
    check_implementation,
    classify,
    external_candidate,
    mutant_candidate,
    reference_candidate,
    run_suite,
)
from .match import (
    enumerate_stable_matchings,
    find_instance_violating_exactly,
    generate_match_input,
    is_complete,
    is_stable,
    is_unique,
    match_is_valid,
)
from .mutants import MutantSpec, mutant_corpus
from .problems import violated_sub_properties
from .report import VennReport, aggregate, render
from .sort import enumerate_valid_sorts, generate_sort_input, sort_is_valid
from .toposort import enumerate_topological_orders, generate_dag, toposort_is_valid

__version__ = "0.1.0"
