"""Main signless Laplacian eigenvalues: exact, spectral and combinatorial counts."""

from .errors import (
    BudgetExceeded,
    ConsistencyViolation,
    DuplicateEdge,
    InvalidEdge,
    InvalidParameter,
    NotATree,
    NotConnected,
    NotSymmetric,
    NotUnicyclic,
    ParseError,
    QMainError,
    TheoremViolation,
    Unsupported,
)
from .graph import (
    Graph,
    IntSymMatrix,
    degree,
    degree_sequence,
    from_edges,
    is_connected,
    is_regular,
    s_values,
    signless_laplacian,
)
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .canon import tree_canonical_code, unicyclic_canonical_code
from .exact import ExactMatrix, integer_rank, main_count_exact, walk_matrix
from .spectra import Spectrum, Tolerances, jacobi_eigh, main_eigenvalues, spectrum, theorem5_residual
from .walks import (
    ClassifyFailure,
    LinearCertificate,
    MainClass,
    ParabolicCertificate,
    linear_certificate,
    main_count_combinatorial,
    parabolic_certificate,
)
from .families import FamilySpec, build, identify

__version__ = "0.1.0"
