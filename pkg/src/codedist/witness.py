"""Pairs of codes whose restricted distance exceeds their Grassmann distance.

The base pairs meet in zero and are built block by block from columns of
length q + 1.  Padding with an identity block raises the meet dimension,
and appending all-ones columns lengthens the codes; neither step lets a
reducing neighbour appear.

A :class:`BlockingCertificate` records, for every hyperplane H of X that
contains X & Y and every line <y> of Y outside X, a coordinate vanishing on
both H and y.  Its existence means no first step of a geodesic from X can be
non-degenerate, hence d_c = d + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analytics import q_integer, theorem2_bound
from .code import CodeParams, is_nondegenerate, m_min
from .field import FieldSpec, field_of_order
from .graph import _blocking_grid, check_pair, meet_dim, restricted_distance
from .linalg import (
    Subspace,
    Vector,
    contains_subspace,
    contains_vector,
    intersection,
    intersection_dim,
    normalize,
    projective_coefficients,
    rank,
    subspace_from_rows,
)


class ParameterError(ValueError):
    """Requested witness parameters fall outside the admissible range."""


@dataclass(frozen=True)
class BlockingCertificate:
    """Coordinates blocking every (hyperplane, line) pair.

    ``entries[(h, l)] = i`` says coordinate i (1-based) vanishes on
    ``hyperplanes[h]`` and on ``lines[l]`` (h, l are 0-based positions).
    """

    hyperplanes: tuple[Subspace, ...]
    lines: tuple[Vector, ...]
    entries: dict[tuple[int, int], int]

    def to_dict(self) -> dict:
        return {
            "hyperplanes": [[list(r) for r in H.basis] for H in self.hyperplanes],
            "lines": [list(v) for v in self.lines],
            "entries": [[h, l, i] for (h, l), i in sorted(self.entries.items())],
        }

    @classmethod
    def from_dict(cls, data: dict, spec: FieldSpec, n: int) -> "BlockingCertificate":
        hyps = tuple(subspace_from_rows(spec, n, rows) for rows in data["hyperplanes"])
        lines = tuple(tuple(v) for v in data["lines"])
        entries = {(int(h), int(l)): int(i) for h, l, i in data["entries"]}
        return cls(hyps, lines, entries)


@dataclass(frozen=True)
class WitnessPair:
    X: Subspace
    Y: Subspace
    params: CodeParams
    m: int
    d: int
    certificate: BlockingCertificate

    @property
    def d_c(self) -> int:
        return self.d + 1


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


def blocking_certificate(X: Subspace, Y: Subspace) -> Optional[BlockingCertificate]:
    """Smallest blocking coordinate for every pair, or None if some pair escapes."""
    check_pair(X, Y)
    if X.k - meet_dim(X, Y) < 2:
        raise ValueError("blocking certificates need d(X, Y) >= 2")
    hyps, line_idx = _blocking_grid(X, Y)
    full = (1 << X.n) - 1
    masks = Y.line_masks
    entries = {}
    for h, H in enumerate(hyps):
        for l, j in enumerate(line_idx):
            free = full & ~(H.support | masks[j])
            if not free:
                return None
            entries[(h, l)] = (free & -free).bit_length()
    return BlockingCertificate(tuple(hyps), tuple(Y.lines[j] for j in line_idx), entries)


def certificate_defects(X: Subspace, Y: Subspace, cert: BlockingCertificate) -> list[str]:
    """Everything wrong with ``cert`` as a proof that X has no reducing neighbour.

    Uses only rank computations and direct coordinate checks.  Completeness
    is established by counting: the listed hyperplanes must be [k-m]_q
    distinct hyperplanes of X through X & Y and the listed lines must be
    the [k]_q - [m]_q distinct lines of Y outside X.
    """
    defects = []
    if X.spec != Y.spec or X.n != Y.n or X.k != Y.k:
        return ["X and Y have different parameters"]
    spec, n, k, q = X.spec, X.n, X.k, X.spec.q
    if not is_nondegenerate(X) or not is_nondegenerate(Y):
        defects.append("X or Y is degenerate")
    meet = intersection(X, Y)
    m = meet.k
    if k - m < 2:
        defects.append(f"d(X, Y) = {k - m} < 2")

    hyps = cert.hyperplanes
    malformed = set()
    for h, H in enumerate(hyps):
        if H.spec != spec or H.n != n or H.k != k - 1:
            defects.append(f"hyperplane {h} has the wrong shape")
            malformed.add(("h", h))
        elif not contains_subspace(X, H):
            defects.append(f"hyperplane {h} is not inside X")
        elif not contains_subspace(H, meet):
            defects.append(f"hyperplane {h} does not contain X & Y")
    if len(set(hyps)) != len(hyps):
        defects.append("repeated hyperplane")
    if len(hyps) != q_integer(k - m, q):
        defects.append(f"{len(hyps)} hyperplanes listed, expected {q_integer(k - m, q)}")

    reps = set()
    for l, v in enumerate(cert.lines):
        if len(v) != n or not any(v) or any(not 0 <= a < q for a in v):
            defects.append(f"line {l} is not a nonzero vector of F_q^{n}")
            malformed.add(("l", l))
            continue
        if not contains_vector(Y, v):
            defects.append(f"line {l} is not in Y")
        if contains_vector(X, v):
            defects.append(f"line {l} lies in X")
        reps.add(normalize(spec, v))
    if len(reps) != len(cert.lines):
        defects.append("repeated line")
    expected_lines = q_integer(k, q) - q_integer(m, q)
    if len(cert.lines) != expected_lines:
        defects.append(f"{len(cert.lines)} lines listed, expected {expected_lines}")

    for h in range(len(hyps)):
        for l in range(len(cert.lines)):
            i = cert.entries.get((h, l))
            if i is None:
                defects.append(f"no entry for pair ({h}, {l})")
                continue
            if not 1 <= i <= n:
                defects.append(f"entry ({h}, {l}) names coordinate {i} outside 1..{n}")
                continue
            if ("h", h) in malformed or ("l", l) in malformed:
                continue
            if any(r[i - 1] for r in hyps[h].basis) or cert.lines[l][i - 1]:
                defects.append(f"coordinate {i} does not vanish on pair ({h}, {l})")
    extra = set(cert.entries) - {(h, l) for h in range(len(hyps)) for l in range(len(cert.lines))}
    if extra:
        defects.append(f"{len(extra)} entries refer to unknown pairs")
    return defects


def verify_certificate(X: Subspace, Y: Subspace, cert: BlockingCertificate) -> bool:
    return not certificate_defects(X, Y, cert)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def _y_z(F: FieldSpec) -> tuple[Vector, Vector]:
    q, a = F.q, F.alpha
    y = (0,) + (1,) * q
    z = (1, 0) + tuple(F.neg(F.pow(a, -i)) for i in range(q - 1))
    return y, z


def example2_generators(q: int) -> tuple[list[Vector], list[Vector]]:
    """Generator rows (v1, v2) and (u1, u2) of the [(q+1)^2, 2]_q pair."""
    F = field_of_order(q)
    b = q + 1
    n = b * b
    v1 = (0,) * b + (1,) * (n - b)
    v2 = (1,) * b + (0,) * b
    for i in range(q - 1):
        v2 += (F.neg(F.pow(F.alpha, -i)),) * b
    y, z = _y_z(F)
    return [v1, v2], [y * b, z * b]


def example2_pair(q: int) -> tuple[Subspace, Subspace]:
    F = field_of_order(q)
    gx, gy = example2_generators(q)
    n = (q + 1) ** 2
    return subspace_from_rows(F, n, gx), subspace_from_rows(F, n, gy)


def lemma4_generators(q: int, k: int) -> tuple[list[Vector], list[Vector]]:
    """Generator rows of the [[k]_q (q+1), k]_q pair meeting in zero (k >= 3).

    Block i of G_X repeats the i-th projective point w_i of F_q^k; block j of
    G_Y carries y in row min(j, k-1) and z in the row below (1-based).
    """
    if k < 3:
        raise ParameterError(f"the banded construction needs k >= 3, got {k}")
    F = field_of_order(q)
    b = q + 1
    ws = list(projective_coefficients(F, k))
    y, z = _y_z(F)
    gx = [sum(((w[r],) * b for w in ws), ()) for r in range(k)]
    gy = [[] for _ in range(k)]
    for j in range(1, len(ws) + 1):
        top = min(j, k - 1) - 1
        for r in range(k):
            gy[r].extend(y if r == top else z if r == top + 1 else (0,) * b)
    return gx, [tuple(r) for r in gy]


def lemma4_pair(q: int, k: int) -> tuple[Subspace, Subspace]:
    """Pair with d = k and d_c = k + 1 in length [k]_q (q+1); k = 2 gives example2_pair."""
    if k < 2:
        raise ParameterError(f"need k >= 2, got {k}")
    if k == 2:
        return example2_pair(q)
    F = field_of_order(q)
    gx, gy = lemma4_generators(q, k)
    n = q_integer(k, q) * (q + 1)
    return subspace_from_rows(F, n, gx), subspace_from_rows(F, n, gy)


def lemma6_pad(Xp: Subspace, Yp: Subspace, m: int) -> tuple[Subspace, Subspace]:
    """Block-diagonal extension of both generator matrices by I_m."""
    if Xp.spec != Yp.spec or Xp.n != Yp.n or Xp.k != Yp.k:
        raise ParameterError("padding needs two codes with the same parameters")
    if m < 0:
        raise ParameterError(f"m={m} must be nonnegative")
    if m == 0:
        return Xp, Yp
    if intersection_dim(Xp, Yp) != 0:
        raise ParameterError("padding needs codes meeting in zero")
    spec, n = Xp.spec, Xp.n + m
    ident = [(0,) * Xp.n + tuple(int(i == j) for j in range(m)) for i in range(m)]

    def pad(S: Subspace) -> Subspace:
        return subspace_from_rows(spec, n, [r + (0,) * m for r in S.basis] + ident)

    return pad(Xp), pad(Yp)


def _adapted_basis(S: Subspace, meet: Subspace) -> list[Vector]:
    """A basis of S starting with the basis of ``meet``."""
    rows = list(meet.basis)
    for r in S.basis:
        if rank(S.spec, rows + [r], S.n) > len(rows):
            rows.append(r)
    return rows


def ones_extend(X: Subspace, Y: Subspace, n: int) -> tuple[Subspace, Subspace]:
    """Append n - n' all-ones columns to generator matrices of X and Y.

    The generator matrices share a basis of X & Y, so the meet keeps its
    dimension.
    """
    if X.spec != Y.spec or X.n != Y.n or X.k != Y.k:
        raise ParameterError("extension needs two codes with the same parameters")
    if n < X.n:
        raise ParameterError(f"cannot shorten from length {X.n} to {n}")
    if n == X.n:
        return X, Y
    meet = intersection(X, Y)
    tail = (1,) * (n - X.n)
    spec = X.spec

    def extend(S: Subspace) -> Subspace:
        return subspace_from_rows(spec, n, [r + tail for r in _adapted_basis(S, meet)])

    return extend(X), extend(Y)


def check_witness_params(q: int, k: int, m: int, n: int) -> None:
    """Raise ParameterError naming the first violated bound."""
    field_of_order(q)
    if not 1 < k < n - 1:
        raise ParameterError(f"need 1 < k < n-1, got k={k}, n={n}")
    if m > k - 2:
        raise ParameterError(f"need m <= k-2, got m={m}, k={k}")
    lo = m_min(n, k)
    if m < lo:
        raise ParameterError(f"need m >= m(n,k) = {lo}, got m={m}")
    bound = theorem2_bound(k, m, q)
    if n < bound:
        raise ParameterError(f"need n >= [k-m]_q (q+1) + m = {bound}, got n={n}")


def construct_witness(q: int, k: int, m: int, n: int) -> WitnessPair:
    """Build and self-check a pair with d = k - m and d_c = k - m + 1."""
    check_witness_params(q, k, m, n)
    X, Y = lemma4_pair(q, k - m)
    X, Y = lemma6_pad(X, Y, m)
    X, Y = ones_extend(X, Y, n)

    params = CodeParams(n, k, q)
    got_m = intersection_dim(X, Y)
    if got_m != m or not is_nondegenerate(X) or not is_nondegenerate(Y):
        raise RuntimeError(f"construction produced meet dimension {got_m} or a degenerate code")
    cert = blocking_certificate(X, Y)
    if cert is None or not verify_certificate(X, Y, cert):
        raise RuntimeError("construction failed to produce a valid blocking certificate")
    res = restricted_distance(X, Y, with_path=False)
    if (res.d, res.d_c) != (k - m, k - m + 1):
        raise RuntimeError(f"construction gives d={res.d}, d_c={res.d_c}")
    return WitnessPair(X, Y, params, m, k - m, cert)
