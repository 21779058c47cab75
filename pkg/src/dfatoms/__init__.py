"""Atoms of regular languages: quotient complexity, ideal classes, witnesses.

The core objects are complete DFAs over states 1..n given as one
transformation per letter.  On top of them the package computes atoms
(non-empty intersections of complemented and uncomplemented state languages),
their quotient complexities, closed-form worst-case bounds per language class
(regular, right/left/two-sided ideal), witness families attaining those
bounds, and independent oracles for cross-checking all of it.
"""

from .atoms import (
    AtomInfo,
    AtomReport,
    PairState,
    atom_complexity,
    build_atom_dfa,
    enumerate_atoms,
    is_atom,
    reachable_pair_states,
)
from .bounds import (
    BoundsTable,
    atom_complexity_bound,
    bound_for_basis,
    build_table,
    max_atom_count,
    symmetry_check,
)
from .dfa import (
    SUBSET_OP_LIMIT,
    Dfa,
    Transformation,
    atom_bases_by_reversal,
    compose,
    distinguishability_classes,
    induced_transformation,
    minimize,
    quotient_complexity,
    reachable,
    state_language_contains,
    transition_semigroup,
)
from .dfaformat import dfa_to_dot, parse_dfa, render_dfa
from .errors import (
    CapExceededError,
    DfatomsError,
    EmptyLanguageError,
    InvalidBasisError,
    InvalidDfaError,
    LimitExceededError,
    NotAnAtomError,
    NotAnIdealError,
    ParseError,
    SizeMismatchError,
    UnknownLetterError,
)
from .harness import (
    BasisCheck,
    CrossCheckReport,
    RandomSpec,
    SweepReport,
    bound_sweep,
    cross_check,
    oracle_atom_complexity,
    random_dfa,
    reversal_quotient_complexity,
)
from .ideals import (
    IdealKind,
    accepting_sink,
    idealize,
    is_left_ideal,
    is_right_ideal,
    is_two_sided_ideal,
    refined_two_sided_bound,
    successor_sets,
)
from .witnesses import (
    WitnessClass,
    left_ideal_witness,
    regular_witness,
    right_ideal_witness,
    two_sided_ideal_witness,
    witness,
)

__version__ = "0.1.0"

__all__ = [
    "AtomInfo",
    "AtomReport",
    "BasisCheck",
    "BoundsTable",
    "CapExceededError",
    "CrossCheckReport",
    "Dfa",
    "DfatomsError",
    "EmptyLanguageError",
    "IdealKind",
    "InvalidBasisError",
    "InvalidDfaError",
    "LimitExceededError",
    "NotAnAtomError",
    "NotAnIdealError",
    "PairState",
    "ParseError",
    "RandomSpec",
    "SUBSET_OP_LIMIT",
    "SizeMismatchError",
    "SweepReport",
    "Transformation",
    "UnknownLetterError",
    "WitnessClass",
    "accepting_sink",
    "atom_bases_by_reversal",
    "atom_complexity",
    "atom_complexity_bound",
    "bound_for_basis",
    "bound_sweep",
    "build_atom_dfa",
    "build_table",
    "compose",
    "cross_check",
    "dfa_to_dot",
    "distinguishability_classes",
    "enumerate_atoms",
    "idealize",
    "induced_transformation",
    "is_atom",
    "is_left_ideal",
    "is_right_ideal",
    "is_two_sided_ideal",
    "left_ideal_witness",
    "max_atom_count",
    "minimize",
    "oracle_atom_complexity",
    "parse_dfa",
    "quotient_complexity",
    "random_dfa",
    "reachable",
    "reachable_pair_states",
    "refined_two_sided_bound",
    "regular_witness",
    "render_dfa",
    "reversal_quotient_complexity",
    "right_ideal_witness",
    "state_language_contains",
    "successor_sets",
    "symmetry_check",
    "transition_semigroup",
    "two_sided_ideal_witness",
    "witness",
]
