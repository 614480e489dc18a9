"""Vectors, matrices and subspaces over GF(q).

Vectors are tuples of element codes.  A :class:`Subspace` always stores its
basis in reduced row echelon form, so two subspaces are equal exactly when
their stored bases are equal; this is what lets them key dicts and sets.

Coefficient tuples are enumerated with index 0 varying fastest.  Projective
representatives have their first nonzero entry equal to 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .field import FieldSpec

Vector = tuple[int, ...]

# q^k above this and we refuse to materialise the projective points of a subspace
ENUMERATION_CAP = 1 << 20


@dataclass(frozen=True)
class MatrixGF:
    spec: FieldSpec
    ncols: int
    rows: tuple[Vector, ...]

    def __post_init__(self) -> None:
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(f"row of length {len(r)} in a matrix with {self.ncols} columns")
            for a in r:
                self.spec.check(a)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def transpose(self) -> "MatrixGF":
        cols = tuple(zip(*self.rows)) if self.rows else ()
        return MatrixGF(self.spec, len(self.rows), cols)


def _rref_rows(spec: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> tuple[list[Vector], list[int]]:
    add, mul, neg, inv = spec._add, spec._mul, spec._neg, spec._inv
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and not work[piv][c]:
            piv += 1
        if piv == nrows:
            continue
        work[r], work[piv] = work[piv], work[r]
        pr = work[r]
        if pr[c] != 1:
            s = mul[inv[pr[c]]]
            pr = [s[x] for x in pr]
            work[r] = pr
        for i in range(nrows):
            if i != r:
                x = work[i][c]
                if x:
                    f = mul[neg[x]]
                    work[i] = [add[a][f[b]] for a, b in zip(work[i], pr)]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in work[:r]], pivots


def rref(M: MatrixGF) -> tuple[MatrixGF, int]:
    """Reduced row echelon form of M (zero rows dropped) and its rank."""
    rows, _ = _rref_rows(M.spec, M.rows, M.ncols)
    return MatrixGF(M.spec, M.ncols, tuple(rows)), len(rows)


def rank(spec: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> int:
    return len(_rref_rows(spec, rows, ncols)[0])


def nullspace(spec: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    red, pivots = _rref_rows(spec, rows, ncols)
    pivset = set(pivots)
    neg = spec._neg
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [0] * ncols
        x[free] = 1
        for row, pc in zip(red, pivots):
            x[pc] = neg[row[free]]
        basis.append(tuple(x))
    return basis


def weight(v: Sequence[int]) -> int:
    """Number of nonzero coordinates."""
    return sum(1 for a in v if a)


def support_mask(v: Sequence[int]) -> int:
    """Bit i set iff coordinate i (0-based) is nonzero."""
    m = 0
    for i, a in enumerate(v):
        if a:
            m |= 1 << i
    return m


def normalize(spec: FieldSpec, v: Sequence[int]) -> Vector:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    for a in v:
        if a:
            return tuple(v) if a == 1 else spec.scale(spec._inv[a], v)
    raise ValueError("the zero vector has no projective representative")


def projective_coefficients(spec: FieldSpec, k: int) -> Iterator[Vector]:
    """The [k]_q tuples of F_q^k whose first nonzero entry is 1."""
    for t in spec.vectors(k):
        for a in t:
            if a:
                if a == 1:
                    yield t
                break


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n held by its canonical (RREF) basis.

    Build with :func:`subspace_from_rows`; the constructor trusts that
    ``basis`` is already reduced.
    """

    spec: FieldSpec
    n: int
    basis: tuple[Vector, ...]
    k: int = field(init=False, repr=False, compare=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", len(self.basis))
        object.__setattr__(self, "_hash", hash((self.spec.q, self.n, self.basis)))

    def __hash__(self) -> int:
        return self._hash

    def __getstate__(self):
        # drop cached derived data when pickling
        return {"spec": self.spec, "n": self.n, "basis": self.basis, "k": self.k, "_hash": self._hash}

    def __setstate__(self, state) -> None:
        self.__dict__.update(state)

    @property
    def matrix(self) -> MatrixGF:
        return MatrixGF(self.spec, self.n, self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, a in enumerate(r) if a) for r in self.basis)

    @cached_property
    def support(self) -> int:
        """Mask of coordinates not identically zero on the subspace."""
        m = 0
        for r in self.basis:
            m |= support_mask(r)
        return m

    @cached_property
    def lines(self) -> tuple[Vector, ...]:
        """Projective representatives, in coefficient order."""
        _check_enumerable(self)
        spec, n, B = self.spec, self.n, self.basis
        return tuple(spec.combine(c, B, n) for c in projective_coefficients(spec, self.k))

    @cached_property
    def line_masks(self) -> tuple[int, ...]:
        return tuple(support_mask(v) for v in self.lines)

    @cached_property
    def points(self) -> frozenset[Vector]:
        return frozenset(self.lines)

    @cached_property
    def hyperplanes(self) -> tuple["Subspace", ...]:
        return tuple(_hyperplanes(self))

    def vectors(self) -> Iterator[Vector]:
        """All q^k vectors of the subspace."""
        _check_enumerable(self)
        spec, n, B = self.spec, self.n, self.basis
        for c in spec.vectors(self.k):
            yield spec.combine(c, B, n)

    def __contains__(self, v: Sequence[int]) -> bool:
        return contains_vector(self, v)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(map(str, r)) for r in self.basis)
        return f"Subspace({self.spec!r}, n={self.n}, k={self.k}, [{rows}])"


def _check_enumerable(X: Subspace) -> None:
    if X.spec.q ** X.k > ENUMERATION_CAP:
        raise ValueError(f"q^k = {X.spec.q}^{X.k} exceeds the enumeration cap {ENUMERATION_CAP}")


def subspace_from_rows(spec: FieldSpec, n: int, rows: Iterable[Sequence[int]], *, min_dim: int = 0) -> Subspace:
    """Canonical subspace spanned by ``rows``."""
    rows = [tuple(map(int, r)) for r in rows]
    q = spec.q
    for r in rows:
        if len(r) != n:
            raise ValueError(f"vector of length {len(r)} in F_q^{n}")
        if not all(0 <= a < q for a in r):
            raise ValueError(f"{r} has entries outside {spec!r}")
    red, _ = _rref_rows(spec, rows, n)
    if len(red) < min_dim:
        raise ValueError(f"rows span a {len(red)}-dimensional space, need at least {min_dim}")
    return Subspace(spec, n, tuple(red))


def _same_ambient(X: Subspace, Y: Subspace) -> None:
    if X.spec != Y.spec or X.n != Y.n:
        raise ValueError(f"ambient mismatch: {X.spec!r}^{X.n} vs {Y.spec!r}^{Y.n}")


def intersection_dim(X: Subspace, Y: Subspace) -> int:
    """dim(X & Y) = dim X + dim Y - rank of the stacked bases."""
    _same_ambient(X, Y)
    return X.k + Y.k - rank(X.spec, X.basis + Y.basis, X.n)


def span_sum(X: Subspace, Y: Subspace) -> Subspace:
    _same_ambient(X, Y)
    return subspace_from_rows(X.spec, X.n, X.basis + Y.basis)


def intersection(X: Subspace, Y: Subspace) -> Subspace:
    """X & Y computed from the left kernel of the stacked bases."""
    _same_ambient(X, Y)
    spec, n = X.spec, X.n
    stacked = X.basis + Y.basis
    # (a, b) with a.B_X + b.B_Y = 0  ->  a.B_X lies in both
    cols = tuple(zip(*stacked)) if stacked else ()
    kernel = nullspace(spec, cols, len(stacked))
    rows = [spec.combine(a[: X.k], X.basis, n) for a in kernel]
    return subspace_from_rows(spec, n, rows)


def contains_vector(X: Subspace, v: Sequence[int]) -> bool:
    """Membership by reduction against the RREF basis."""
    if len(v) != X.n:
        raise ValueError(f"vector of length {len(v)} in F_q^{X.n}")
    spec = X.spec
    w = tuple(v)
    for row, pc in zip(X.basis, X.pivots):
        if w[pc]:
            w = spec.axpy(spec._neg[w[pc]], row, w)
    return not any(w)


def contains_subspace(X: Subspace, Y: Subspace) -> bool:
    return all(contains_vector(X, r) for r in Y.basis)


def lines_of(X: Subspace) -> Iterator[Vector]:
    """One representative per 1-dimensional subspace of X."""
    return iter(X.lines)


def _hyperplanes(X: Subspace) -> Iterator[Subspace]:
    spec, n, B, k = X.spec, X.n, X.basis, X.k
    if k == 0:
        return
    neg = spec._neg
    for a in projective_coefficients(spec, k):
        # kernel of c -> sum(a_i c_i): with a_j = 1 at the first nonzero j,
        # spanned by e_i - a_i e_j for i != j
        j = next(i for i, x in enumerate(a) if x)
        rows = [spec.axpy(neg[a[i]], B[j], B[i]) for i in range(k) if i != j]
        yield subspace_from_rows(spec, n, rows)


def hyperplanes_of(X: Subspace) -> Iterator[Subspace]:
    """The [k]_q subspaces of codimension 1 in X, one per dual line."""
    return iter(X.hyperplanes)


def enumerate_subspaces(spec: FieldSpec, n: int, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of F_q^n, once, as canonical RREF.

    Ordered by pivot set (lexicographic), then by the free entries.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    q = spec.q
    for pivots in combinations(range(n), k):
        pivset = set(pivots)
        slots = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivset]
        for values in product(range(q), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(slots, values):
                rows[r][c] = v
            yield Subspace(spec, n, tuple(tuple(r) for r in rows))
