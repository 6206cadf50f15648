"""Spectral lower bounds on chromatic and quantum chromatic numbers."""

from .bounds import (
    BoundReport,
    bounds_report,
    hoffman_kappa,
    is_hoffman_coloring,
    multiplicity_bound,
    ratio_bound,
    srg_spectrum,
)
from .chromatic import Coloring, chromatic_number, clique_number, greedy_coloring, verify_coloring
from .graph6 import parse_graph6, write_graph6
from .graphs import (
    Graph,
    barbell,
    clebsch,
    complete,
    complete_multipartite,
    connected_components,
    cycle,
    from_edges,
    hoffman_singleton,
    kneser,
    orthogonality_graph,
)
from .quantum import (
    QuantumColoring,
    VerificationReport,
    block_projectors,
    classical_to_quantum,
    conjugate,
    omega_coloring,
    pinch,
    verify,
)
from .spectral import Spectrum, compress, eigenvalues_hermitian, eigenvalues_symmetric, smallest_multiplicity, spectrum_of

__version__ = "0.1.0"
