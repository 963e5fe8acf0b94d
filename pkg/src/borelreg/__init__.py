"""
Regularity and local cohomology of monomial ideals of Borel type

``borelreg`` computes the partial regularities ``reg_t``, the partial
a*-invariants ``a*_t``, and every local-cohomology degree ``a_k(S/I)`` of a
monomial ideal ``I`` of Borel type in ``S = k[x_1, …, x_n]``.

**Features:**

- Exact monomial ideal arithmetic: minimal generators, intersections, sums,
  products, colons, saturations, truncations, and Hilbert function counts

- The irredundant irreducible decomposition ``I = ∩ m^b``, from which
  ``a_k(S/I)`` is read off directly

- Borel-type, stability, and strong stability predicates; the sequential
  chain; satiety, with a witness monomial

- Two further independent routes to the same numbers: the sequential chain
  and graded Betti numbers computed from upper Koszul simplicial complexes
  with exact linear algebra over the rationals or a prime field

- Additional routes can be plugged in through the ``borelreg.routes`` entry
  point group

- A deterministic fuzzer and a property runner that checks every algebraic
  law the computations rely on

- The ``borel`` command, emitting JSON (with ``"-inf"`` for ``−∞``) or text
  tables
"""

__version__ = "0.1.0.dev1"
__author__ = "The borelreg developers"
__license__ = "MIT"

from .borel import (
    SequentialChain,
    borel_failure_index,
    is_borel_type,
    is_stable,
    is_strongly_stable_colon,
    satiety_bg_shortcut,
    satiety_quotient,
    satiety_witness,
    sequential_chain,
)
from .config import FuzzConfig
from .decomposition import Decomposition, IrreducibleComponent, decompose
from .degrees import MINUS_INFINITY, ExtendedDegree
from .errors import (
    ConfigError,
    DegenerateIdealError,
    DimensionMismatchError,
    Error,
    ExponentOverflowError,
    InconsistencyError,
    NegativeExponentError,
    NotBorelTypeError,
    ParseError,
    PreconditionError,
    RouteError,
    ScaleGuardError,
    UnknownVariableError,
    VariableIndexError,
)
from .fuzz import fuzz_borel
from .invariants import (
    InvariantReport,
    RouteComparison,
    a_vector_chain,
    a_vector_decomposition,
    compare_routes,
    partial_astars,
    partial_regularities,
    reg_via_stable_truncation,
    report,
    strongly_stable_fast,
)
from .monomial import Monomial, MonomialIdeal
from .oracle import BettiTable, betti_table, trung_invariants
from .parser import format_ideal, parse_ideal
from .properties import run_properties

__all__ = [
    "BettiTable",
    "ConfigError",
    "Decomposition",
    "DegenerateIdealError",
    "DimensionMismatchError",
    "Error",
    "ExponentOverflowError",
    "ExtendedDegree",
    "FuzzConfig",
    "InconsistencyError",
    "InvariantReport",
    "IrreducibleComponent",
    "MINUS_INFINITY",
    "Monomial",
    "MonomialIdeal",
    "NegativeExponentError",
    "NotBorelTypeError",
    "ParseError",
    "PreconditionError",
    "RouteComparison",
    "RouteError",
    "ScaleGuardError",
    "SequentialChain",
    "UnknownVariableError",
    "VariableIndexError",
    "a_vector_chain",
    "a_vector_decomposition",
    "betti_table",
    "borel_failure_index",
    "compare_routes",
    "decompose",
    "format_ideal",
    "fuzz_borel",
    "is_borel_type",
    "is_stable",
    "is_strongly_stable_colon",
    "parse_ideal",
    "partial_astars",
    "partial_regularities",
    "reg_via_stable_truncation",
    "report",
    "run_properties",
    "satiety_bg_shortcut",
    "satiety_quotient",
    "satiety_witness",
    "sequential_chain",
    "strongly_stable_fast",
    "trung_invariants",
]
