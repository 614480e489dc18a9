"""Distances in the graph of non-degenerate codes.

Vertices are the non-degenerate [n, k]_q codes; two codes are adjacent when
they meet in dimension k - 1.  The restricted distance d_c is never less
than the Grassmann distance d and never more than d + 1, so computing it
amounts to deciding whether a geodesic of length d survives inside the
restricted graph.  Every step of such a geodesic is a *reducing neighbour*:
a non-degenerate Z adjacent to the current code and one step closer to the
target.  Each Z of that kind has the form H + <y> with H a hyperplane of
the current code containing its meet with the target and y a vector of the
target outside the current code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .analytics import count_nondegenerate, q_integer
from .code import CodeParams, grassmann_distance, is_nondegenerate
from .linalg import (
    ENUMERATION_CAP,
    Subspace,
    Vector,
    contains_vector,
    intersection_dim,
    projective_coefficients,
    subspace_from_rows,
)

ORACLE_CAP = 10**6


class CapExceeded(ValueError):
    """A brute-force routine was asked to exceed its configured size cap."""


class Evidence(str, Enum):
    GEODESIC_FOUND = "geodesic-found"
    FIRST_STEPS_EXHAUSTED = "first-steps-exhausted"
    ORACLE_BFS = "oracle-bfs"


@dataclass(frozen=True)
class DistanceResult:
    d: int
    d_c: int
    evidence: Evidence
    path: Optional[tuple[Subspace, ...]] = None


def check_pair(X: Subspace, Y: Subspace) -> None:
    """Validate that X and Y are non-degenerate codes with the same parameters."""
    if X.spec != Y.spec or X.n != Y.n or X.k != Y.k:
        raise ValueError(
            f"codes differ in parameters: [{X.n},{X.k}]_{X.spec.q} vs [{Y.n},{Y.k}]_{Y.spec.q}"
        )
    if not 1 < X.k < X.n - 1:
        CodeParams.of(X)
    full = (1 << X.n) - 1
    if X.support != full:
        raise ValueError("X is degenerate (contained in a coordinate hyperplane)")
    if Y.support != full:
        raise ValueError("Y is degenerate (contained in a coordinate hyperplane)")


@lru_cache(maxsize=None)
def _meet_sizes(q: int, k: int) -> dict[int, int]:
    return {q_integer(m, q): m for m in range(k + 1)}


def meet_dim(X: Subspace, Y: Subspace) -> int:
    """dim(X & Y), by counting shared projective points when that is cheap."""
    if X.spec.q ** max(X.k, Y.k) > ENUMERATION_CAP:
        return intersection_dim(X, Y)
    return _meet_sizes(X.spec.q, min(X.k, Y.k))[len(X.points & Y.points)]


def _blocking_grid(X: Subspace, Y: Subspace) -> tuple[list[Subspace], list[int]]:
    """Hyperplanes of X containing X & Y, and indices of lines of Y outside X."""
    common = X.points & Y.points
    hyps = [H for H in X.hyperplanes if common <= H.points] if common else list(X.hyperplanes)
    xpts = X.points
    lines = [j for j, y in enumerate(Y.lines) if y not in xpts]
    return hyps, lines


def reducing_candidates(X: Subspace, Y: Subspace) -> Iterator[Subspace]:
    """Every Z = H + <y> with H >= X & Y a hyperplane of X and y in Y - X.

    These are exactly the k-subspaces adjacent to X and one step closer to
    Y; no non-degeneracy filter is applied.  Each Z is yielded once.
    """
    hyps, lines = _blocking_grid(X, Y)
    spec, n = X.spec, X.n
    seen = set()
    for H in hyps:
        for j in lines:
            Z = subspace_from_rows(spec, n, H.basis + (Y.lines[j],))
            if Z not in seen:
                seen.add(Z)
                yield Z


def reducing_neighbors(X: Subspace, Y: Subspace) -> Iterator[Subspace]:
    """Non-degenerate codes adjacent to X with d(Z, Y) = d(X, Y) - 1."""
    check_pair(X, Y)
    if X == Y:
        raise ValueError("X and Y coincide")
    return _reducing_neighbors(X, Y)


def _reducing_neighbors(X: Subspace, Y: Subspace) -> Iterator[Subspace]:
    hyps, lines = _blocking_grid(X, Y)
    spec, n = X.spec, X.n
    full = (1 << n) - 1
    masks = Y.line_masks
    seen = set()
    for H in hyps:
        hs = H.support
        for j in lines:
            # H + <y> is non-degenerate iff no coordinate vanishes on both
            if hs | masks[j] != full:
                continue
            Z = subspace_from_rows(spec, n, H.basis + (Y.lines[j],))
            if Z not in seen:
                seen.add(Z)
                yield Z


def _has_reducing_neighbor(X: Subspace, Y: Subspace) -> bool:
    hyps, lines = _blocking_grid(X, Y)
    full = (1 << X.n) - 1
    masks = Y.line_masks
    return any(H.support | masks[j] == full for H in hyps for j in lines)


def restricted_distance(X: Subspace, Y: Subspace, *, with_path: bool = True) -> DistanceResult:
    """Grassmann distance d and restricted distance d_c of two codes.

    Depth-first search for a geodesic made of reducing neighbours, with
    dead ends memoised per search.  ``with_path=False`` skips building the
    last intermediate code, which is all a caller needing only the numbers
    saves.
    """
    check_pair(X, Y)
    d = X.k - meet_dim(X, Y)
    if d == 0:
        return DistanceResult(0, 0, Evidence.GEODESIC_FOUND, (X,) if with_path else None)
    path = _geodesic(X, Y, d, set(), with_path)
    if path is not None:
        return DistanceResult(d, d, Evidence.GEODESIC_FOUND, tuple(path) if with_path else None)
    return DistanceResult(d, d + 1, Evidence.FIRST_STEPS_EXHAUSTED, None)


def _geodesic(Z: Subspace, Y: Subspace, r: int, dead: set, with_path: bool) -> Optional[list[Subspace]]:
    # r = d(Z, Y) >= 1 and Z is non-degenerate
    if r == 1:
        return [Z, Y]
    if r == 2 and not with_path:
        return [] if _has_reducing_neighbor(Z, Y) else None
    for W in _reducing_neighbors(Z, Y):
        if W in dead:
            continue
        rest = _geodesic(W, Y, r - 1, dead, with_path)
        if rest is not None:
            return [Z] + rest
        dead.add(W)
    return None


# ---------------------------------------------------------------------------
# Constructive path (weight-n vectors)
# ---------------------------------------------------------------------------


def _first_full_weight(S: Subspace) -> Optional[Vector]:
    full = (1 << S.n) - 1
    for v, m in zip(S.lines, S.line_masks):
        if m == full:
            return v
    return None


def _walk(C: Subspace, T: Subspace, x: Vector) -> list[Subspace]:
    """Walk from C to T keeping the full-weight vector x (which lies in T)."""
    spec, n = C.spec, C.n
    path = [C]
    while C != T:
        common = T.points & C.points
        A = next(H for H in C.hyperplanes if common <= H.points)
        if not contains_vector(C, x):
            v = x
        else:
            v = next(u for u in T.lines if u not in C.points)
        C = subspace_from_rows(spec, n, A.basis + (v,))
        path.append(C)
    return path


def connecting_path(X: Subspace, Y: Subspace) -> list[Subspace]:
    """A path from X to Y through non-degenerate codes, of length d or d + 1.

    If X or Y holds a vector x with no zero coordinate, every intermediate
    code is made to contain x and the path has length d.  Otherwise the
    path heads for a neighbour of Y holding the all-ones vector and takes
    one extra step at the end.  Adjacent codes are joined directly.
    """
    check_pair(X, Y)
    if X == Y:
        return [X]
    if meet_dim(X, Y) == X.k - 1:
        return [X, Y]
    x = _first_full_weight(X)
    if x is not None:
        return _walk(Y, X, x)[::-1]
    y = _first_full_weight(Y)
    if y is not None:
        return _walk(X, Y, y)
    spec, n = X.spec, X.n
    ones = (1,) * n
    common = X.points & Y.points
    A = next(H for H in Y.hyperplanes if common <= H.points)
    Y1 = subspace_from_rows(spec, n, A.basis + (ones,))
    return _walk(X, Y1, ones) + [Y]


def path_defects(path: Sequence[Subspace], X: Subspace, Y: Subspace) -> list[str]:
    """Problems with ``path`` as a walk from X to Y in the restricted graph."""
    problems = []
    if not path:
        return ["empty path"]
    if path[0] != X:
        problems.append("path does not start at X")
    if path[-1] != Y:
        problems.append("path does not end at Y")
    for i, Z in enumerate(path):
        if Z.k != X.k:
            problems.append(f"vertex {i} has dimension {Z.k}")
        elif not is_nondegenerate(Z):
            problems.append(f"vertex {i} is degenerate")
    for i in range(len(path) - 1):
        if path[i].k == path[i + 1].k and grassmann_distance(path[i], path[i + 1]) != 1:
            problems.append(f"vertices {i} and {i + 1} are not adjacent")
    return problems


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------


class RestrictedGraph:
    """The restricted graph for fixed (n, k, q), explored on demand.

    Neighbours of a vertex Z are generated as H + <v> over every hyperplane
    H of Z and every line <v> of F_q^n / H other than Z / H (representatives
    v vanish on the pivot columns of H), keeping the non-degenerate ones.
    Adjacency lists are cached, so repeated queries on one instance share
    work.  Nothing here uses reducing neighbours or distance bounds.
    """

    def __init__(self, X: Subspace, cap: int = ORACLE_CAP) -> None:
        self.spec = X.spec
        self.n = X.n
        self.k = X.k
        self.params = CodeParams.of(X)
        self.size_estimate = count_nondegenerate(self.n, self.k, self.spec.q)
        if self.size_estimate > cap:
            raise CapExceeded(
                f"|C({self.n},{self.k})_{self.spec.q}| = {self.size_estimate} exceeds the oracle cap {cap}"
            )
        self._ids: dict[Subspace, int] = {}
        self._verts: list[Subspace] = []
        self._adj: list[Optional[list[int]]] = []

    def _id(self, Z: Subspace) -> int:
        i = self._ids.get(Z)
        if i is None:
            i = len(self._verts)
            self._ids[Z] = i
            self._verts.append(Z)
            self._adj.append(None)
        return i

    def _neighbor_codes(self, Z: Subspace) -> list[Subspace]:
        spec, n = self.spec, self.n
        out = []
        for H in Z.hyperplanes:
            pivset = set(H.pivots)
            free = [c for c in range(n) if c not in pivset]
            for coeffs in projective_coefficients(spec, len(free)):
                v = [0] * n
                for c, a in zip(free, coeffs):
                    v[c] = a
                if contains_vector(Z, v):
                    continue
                W = subspace_from_rows(spec, n, H.basis + (tuple(v),))
                if is_nondegenerate(W):
                    out.append(W)
        return out

    def _adjacent_ids(self, i: int) -> list[int]:
        nb = self._adj[i]
        if nb is None:
            nb = [self._id(W) for W in self._neighbor_codes(self._verts[i])]
            self._adj[i] = nb
        return nb

    def neighbors(self, Z: Subspace) -> list[Subspace]:
        return [self._verts[j] for j in self._adjacent_ids(self._id(Z))]

    def _check_vertex(self, Z: Subspace) -> None:
        if Z.spec != self.spec or Z.n != self.n or Z.k != self.k:
            raise ValueError("code does not belong to this graph")
        if not is_nondegenerate(Z):
            raise ValueError("code is degenerate")

    def distances_from(self, X: Subspace) -> dict[Subspace, int]:
        """Single-source BFS over the whole connected graph."""
        self._check_vertex(X)
        src = self._id(X)
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in self._adjacent_ids(u):
                if w not in dist:
                    dist[w] = du
                    queue.append(w)
        verts = self._verts
        return {verts[i]: di for i, di in dist.items()}

    def distance(self, X: Subspace, Y: Subspace) -> int:
        """Exact distance by level-synchronous bidirectional BFS.

        After both frontiers have been grown to radii a and b without
        meeting, the distance exceeds a + b; it equals a + b + 1 exactly
        when some vertex of one frontier is adjacent to some vertex of the
        other.  Adjacency is detected through a shared hyperplane.
        """
        self._check_vertex(X)
        self._check_vertex(Y)
        if X == Y:
            return 0
        fx, fy = {self._id(X)}, {self._id(Y)}
        seen_x, seen_y = set(fx), set(fy)
        a = b = 0
        while True:
            if self._frontiers_adjacent(fx, fy):
                return a + b + 1
            if len(fx) <= len(fy):
                fx = self._grow(fx, seen_x)
                a += 1
            else:
                fy = self._grow(fy, seen_y)
                b += 1
            if not fx or not fy:
                raise RuntimeError("X and Y lie in different components")
            if fx & fy:
                return a + b

    def _grow(self, frontier: set[int], seen: set[int]) -> set[int]:
        nxt = set()
        for u in frontier:
            for w in self._adjacent_ids(u):
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        return nxt

    def _frontiers_adjacent(self, fa: set[int], fb: set[int]) -> bool:
        if len(fa) > len(fb):
            fa, fb = fb, fa
        verts = self._verts
        index: dict[Subspace, list[int]] = {}
        for v in fb:
            for H in verts[v].hyperplanes:
                index.setdefault(H, []).append(v)
        for u in fa:
            for H in verts[u].hyperplanes:
                for v in index.get(H, ()):
                    if v != u:
                        return True
        return False


def bfs_oracle(X: Subspace, Y: Subspace, *, cap: int = ORACLE_CAP, graph: Optional[RestrictedGraph] = None) -> int:
    """Exact restricted distance by breadth-first search over the whole graph."""
    check_pair(X, Y)
    if graph is None:
        graph = RestrictedGraph(X, cap=cap)
    return graph.distance(X, Y)
