import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codedist.code import (
    CodeParams,
    CoordinateHyperplane,
    grassmann_distance,
    has_weight_n_vector,
    is_nondegenerate,
    m_min,
)
from codedist.field import field_of_order
from codedist.linalg import intersection_dim, subspace_from_rows
from codedist.witness import example2_pair, lemma4_pair

GF2 = field_of_order(2)


def random_subspace(rng, spec, n, k):
    while True:
        rows = [tuple(rng.randrange(spec.q) for _ in range(n)) for _ in range(k)]
        S = subspace_from_rows(spec, n, rows)
        if S.k == k:
            return S


@st.composite
def triples(draw):
    q = draw(st.sampled_from([2, 3, 4]))
    n = draw(st.integers(4, 7))
    k = draw(st.integers(2, n - 2))
    rng = random.Random(draw(st.integers(0, 2**32)))
    spec = field_of_order(q)
    return [random_subspace(rng, spec, n, k) for _ in range(3)]


def test_params_validation():
    CodeParams(9, 2, 2)
    for n, k in [(4, 1), (4, 3), (5, 4), (3, 2)]:
        with pytest.raises(ValueError):
            CodeParams(n, k, 2)


def test_coordinate_hyperplane():
    C = CoordinateHyperplane(9, 1)
    assert C.contains((0, 1, 1, 0, 1, 1, 0, 1, 1))
    assert not C.contains((1,) * 9)
    with pytest.raises(ValueError):
        CoordinateHyperplane(9, 0)
    with pytest.raises(ValueError):
        CoordinateHyperplane(9, 10)


def test_nondegeneracy_examples():
    n, k = 6, 3
    E = subspace_from_rows(GF2, n, [tuple(int(i == j) for i in range(n)) for j in range(k)])
    assert not is_nondegenerate(E)
    assert CoordinateHyperplane(n, k + 1).contains_subspace(E)
    X, Y = example2_pair(2)
    assert is_nondegenerate(X) and is_nondegenerate(Y)
    for n in (3, 5, 8):
        S = subspace_from_rows(GF2, n, [(1,) * n, (1,) + (0,) * (n - 1)])
        assert is_nondegenerate(S)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_nondegeneracy_matches_vector_scan(q):
    spec = field_of_order(q)
    rng = random.Random(q)
    for _ in range(60):
        n = rng.randint(3, 7)
        k = rng.randint(1, min(n, 4))
        rows = [tuple(rng.choice([0, 0, 1, rng.randrange(q)]) for _ in range(n)) for _ in range(k)]
        S = subspace_from_rows(spec, n, rows)
        if S.k == 0 or q**S.k > 4096:
            continue
        covered = [any(v[i] for v in S.vectors()) for i in range(n)]
        assert is_nondegenerate(S) == all(covered)


def test_distance_examples():
    X, Y = example2_pair(2)
    assert grassmann_distance(X, X) == 0
    assert grassmann_distance(X, Y) == 2
    X3, Y3 = lemma4_pair(2, 3)
    assert X3.n == 21 and grassmann_distance(X3, Y3) == 3


@given(triples())
@settings(max_examples=150, deadline=None)
def test_grassmann_metric(trip):
    X, Y, Z = trip
    n, k = X.n, X.k
    dxy, dyz, dxz = grassmann_distance(X, Y), grassmann_distance(Y, Z), grassmann_distance(X, Z)
    assert dxy >= 0 and (dxy == 0) == (X == Y)
    assert dxy == grassmann_distance(Y, X)
    assert dxz <= dxy + dyz
    assert dxy <= min(k, n - k)
    assert X.k - intersection_dim(X, Y) == dxy


def test_weight_n_examples():
    X, Y = example2_pair(2)
    assert not has_weight_n_vector(X, Y)
    ones = subspace_from_rows(GF2, 9, [(1,) * 9, X.basis[0]])
    assert has_weight_n_vector(ones, Y)
    assert has_weight_n_vector(Y, ones)
    E = subspace_from_rows(GF2, 9, [tuple(int(i == j) for i in range(9)) for j in range(2)])
    assert not has_weight_n_vector(E, E)


def test_weight_n_over_larger_field():
    F = field_of_order(3)
    # (1, 2, 1) has full weight only after scaling is ignored
    S = subspace_from_rows(F, 3, [(1, 2, 1)])
    assert has_weight_n_vector(S, S)


def test_m_min():
    assert m_min(9, 2) == 0
    assert m_min(10, 6) == 2
    for k in range(1, 8):
        assert m_min(2 * k, k) == 0


def test_m_min_attained():
    rng = random.Random(7)
    n, k = 10, 6
    # two random 6-spaces of F_2^10 meet in at least 2 dimensions, and 2 occurs
    dims = set()
    for _ in range(200):
        X = random_subspace(rng, GF2, n, k)
        Y = random_subspace(rng, GF2, n, k)
        dims.add(intersection_dim(X, Y))
    assert min(dims) == m_min(n, k)
