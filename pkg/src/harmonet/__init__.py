"""Entanglement of harmonically coupled bosonic modes on symmetric graphs."""

from .closedform import (
    QuadratureSpec,
    delta_meanfield,
    delta_path3,
    delta_two_vertex,
    eof_infinite_lattice,
    lattice_w_integral,
    ring_w_element,
)
from .errors import (
    AsymmetricPair,
    HarmonetError,
    InfiniteEntanglement,
    NegativeDiscriminant,
    NotEntangledAtZero,
    NumericalError,
    ToleranceNotReached,
)
from .gaussian import (
    CovariancePair,
    EofResult,
    TwoModeForm,
    covariance,
    delta_of,
    eof_from_delta,
    eof_pair,
    reduce_pair,
    threshold_temperature,
)
from .graphs import (
    Graph,
    Solid,
    graph_distance,
    make_complete,
    make_lattice,
    make_path,
    make_platonic,
    make_ring,
    parse_graph,
)
from .spectral import PotentialMatrix, Spectrum, apply_spectral_function, eig_sym, potential_matrix, w_pair

__version__ = "0.1.0"
