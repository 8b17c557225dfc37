"""Finite semihyperrings: tables, hyperideals, classification, spectra."""

from .core import (
    AxiomCheck,
    AxiomReport,
    EmptyOperandError,
    HypothesisError,
    InvalidStructureError,
    PreconditionError,
    Semihyperring,
    SizeLimitError,
    StructureError,
    Subset,
    verify_axioms,
)
from .construct import (
    FiniteTopology,
    QuotientSpec,
    SubgroupError,
    TopologyError,
    direct_product,
    from_topology,
    kq5,
    kq6,
    m3_lattice_example,
    quotient_hyperring,
    top2,
    zero1,
)
from .ideals import (
    IdealLattice,
    enumerate_hyperideals,
    ideal_generated,
    ideal_product,
    ideal_sum,
    is_hyperideal,
    is_left_hyperideal,
    is_right_hyperideal,
    is_subsemihyperring,
    left_annihilator,
    principal_left,
    principal_right,
    right_annihilator,
)
from .classify import IdealClassification, classify_ideal
from .spectrum import (
    SpectrumTopology,
    irreducible_avoiding,
    irreducible_decomposition,
    irreducible_spectrum,
    lattice_map_check,
    regular_equivalences,
    spectrum_topology,
    theta,
    verify_topology,
)
from .conformance import (
    CHECK_IDS,
    ConformanceReport,
    builtin_corpus,
    run_corpus,
    run_suite,
)
from .textio import AxiomError, ParseError, parse_structure, serialize_structure

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
