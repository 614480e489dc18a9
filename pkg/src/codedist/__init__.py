"""Grassmann and restricted distances between non-degenerate linear codes over GF(q)."""

from .analytics import count_nondegenerate, gaussian_binomial, lemma3_check, q_integer, theorem1_predicate, theorem2_bound
from .code import CodeParams, CoordinateHyperplane, grassmann_distance, has_weight_n_vector, is_nondegenerate, m_min
from .field import FieldSpec, field_of_order, make_field
from .graph import (
    CapExceeded,
    DistanceResult,
    Evidence,
    RestrictedGraph,
    bfs_oracle,
    connecting_path,
    reducing_neighbors,
    restricted_distance,
)
from .linalg import MatrixGF, Subspace, enumerate_subspaces, intersection, intersection_dim, rref, subspace_from_rows
from .witness import (
    BlockingCertificate,
    ParameterError,
    WitnessPair,
    blocking_certificate,
    construct_witness,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BlockingCertificate",
    "CapExceeded",
    "CodeParams",
    "CoordinateHyperplane",
    "DistanceResult",
    "Evidence",
    "FieldSpec",
    "MatrixGF",
    "ParameterError",
    "RestrictedGraph",
    "Subspace",
    "WitnessPair",
    "bfs_oracle",
    "blocking_certificate",
    "connecting_path",
    "construct_witness",
    "count_nondegenerate",
    "enumerate_subspaces",
    "field_of_order",
    "gaussian_binomial",
    "grassmann_distance",
    "has_weight_n_vector",
    "intersection",
    "intersection_dim",
    "is_nondegenerate",
    "lemma3_check",
    "m_min",
    "make_field",
    "q_integer",
    "reducing_neighbors",
    "restricted_distance",
    "rref",
    "subspace_from_rows",
    "theorem1_predicate",
    "theorem2_bound",
    "verify_certificate",
]
