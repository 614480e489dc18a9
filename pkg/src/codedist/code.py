"""Code-level notions: parameters, non-degeneracy, Grassmann distance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import ENUMERATION_CAP, Subspace, intersection_dim, weight


@dataclass(frozen=True)
class CodeParams:
    """Parameters of a linear [n, k]_q code with 1 < k < n - 1."""

    n: int
    k: int
    q: int

    def __post_init__(self) -> None:
        if not 1 < self.k < self.n - 1:
            raise ValueError(f"need 1 < k < n-1, got n={self.n}, k={self.k}")

    @classmethod
    def of(cls, X: Subspace) -> "CodeParams":
        return cls(X.n, X.k, X.spec.q)


@dataclass(frozen=True)
class CoordinateHyperplane:
    """C_i, the kernel of the i-th coordinate functional (1-based i)."""

    n: int
    i: int

    def __post_init__(self) -> None:
        if not 1 <= self.i <= self.n:
            raise ValueError(f"coordinate {self.i} out of range 1..{self.n}")

    def contains(self, v: Sequence[int]) -> bool:
        return v[self.i - 1] == 0

    def contains_subspace(self, X: Subspace) -> bool:
        return not (X.support >> (self.i - 1)) & 1


def is_nondegenerate(X: Subspace) -> bool:
    """True iff no column of the canonical basis is identically zero."""
    return X.support == (1 << X.n) - 1


def grassmann_distance(X: Subspace, Y: Subspace) -> int:
    if X.k != Y.k:
        raise ValueError(f"dimension mismatch: {X.k} vs {Y.k}")
    return X.k - intersection_dim(X, Y)


def has_weight_n_vector(X: Subspace, Y: Subspace, cap: int = ENUMERATION_CAP) -> bool:
    """Whether some vector of X or Y has no zero coordinate.

    Scans one representative per line (scalar multiples share a weight).
    """
    if X.n != Y.n:
        raise ValueError(f"ambient mismatch: n={X.n} vs n={Y.n}")
    for S in (X, Y):
        if S.spec.q ** S.k > cap:
            raise ValueError(f"q^k = {S.spec.q}^{S.k} exceeds the enumeration cap {cap}")
    n = X.n
    return any(weight(v) == n for S in (X, Y) for v in S.lines)


def m_min(n: int, k: int) -> int:
    """Smallest possible dimension of the meet of two k-subspaces of F_q^n."""
    return k - min(k, n - k)
