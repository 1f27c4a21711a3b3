"""Finite-lattice toolkit: ideal-based zero-divisor graphs, prime
ideals and radicals, per-claim checkers, and an exhaustive
small-lattice census for counterexample search."""

from .lattice import (
    Lattice,
    LatticeError,
    LatticeSpec,
    ParseError,
    SublatticeWitness,
    build_lattice,
    find_forbidden_sublattice,
    is_distributive,
    is_modular,
    lattice_from_text,
    lattices_isomorphic,
    parse_lattice,
    serialize_spec,
)
from .ideals import (
    IdealSet,
    RadicalResult,
    RadicalVariant,
    enumerate_ideals,
    enumerate_prime_ideals,
    is_finite_intersection_of_primes,
    is_ideal,
    is_filter,
    is_prime_ideal,
    make_ideal,
    quotient_ideal,
    radical,
)
from .zdgraph import (
    GraphInvariants,
    ZdGraph,
    build_gamma,
    build_gamma_I,
    graphs_isomorphic,
    induced_subgraph,
    invariants,
    to_dot,
)
from .claims import (
    CLAIMS,
    ClaimReport,
    Fixture,
    figure1,
    fixture_example_1_7,
    paper_fixtures,
    run_claim,
)
from .census import (
    CensusConfig,
    CensusSummary,
    enumerate_lattices,
    run_census,
    search_counterexample,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
