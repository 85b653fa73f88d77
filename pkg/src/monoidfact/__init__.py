"""Factorization invariants of finitely generated reduced commutative monoids."""
from .betti import BettiGraph, BettiOptions, BettiSet, betti_elements, betti_graph, to_dot
from .block import FiniteAbelianGroup, block_atoms, block_monoid
from .classify import (
    ClassificationReport,
    MasterFactorization,
    QuasiResult,
    Witness,
    classify,
    equal_length_witness,
    master_factorization,
    quasi_n_violations,
)
from .diophantine import minimal_nonneg_solutions
from .errors import (
    DimensionError,
    MissingBoundError,
    MonoidError,
    NotInMonoidError,
    PresentationError,
    ResourceLimitError,
    TrivialMonoidError,
)
from .factorization import FactorizationSet, evaluate, factorizations, length_set
from .monoid import (
    MonoidPresentation,
    ReducedMonoid,
    build_monoid,
    contains,
    frobenius,
    minimal_generators,
)

__version__ = "0.1.0"
