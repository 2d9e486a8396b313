"""Expansions of finite groups into inverse and F-inverse monoids.

The library builds, for a finite generated group, the connected and
unrestricted subgraph expansions over its Cayley graph, the closed-graph
expansion over the barred extended alphabet, the partial-action product
machinery that underlies them, and a brute-force verification harness that
checks every construction at desk scale.
"""

from .cayley import CayleyGraph, Edge, Path, Subgraph
from .closed import ClosedExpansionMonoid, f_inverse, f_map
from .closure import BarredClosure
from .expansion import ALL, CLOSED, CONNECTED, ExpansionElement, ExpansionMonoid
from .groups import (
    FiniteGroup,
    GeneratorSet,
    Letter,
    eval_word,
    extend_generators,
    from_cayley_table,
    from_permutations,
    load_group_json,
    parse_word,
    plain_generators,
)
from .invmonoid import FiniteInverseMonoid, analyze, group_as_monoid, to_table
from .partial_action import (
    PartialActionProduct,
    Premorphism,
    check_premorphism,
    mm_premorphism,
    structure_iso,
    underlying_premorphism,
)
from .report import CheckResult, Report
from .suites import SUITES, SuiteConfig, run_suites
from .terms import eval_term, parse_term
from .universal import TargetContext, canonical_morphism, closure_quotient_report
