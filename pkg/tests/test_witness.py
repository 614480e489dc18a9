import random
import re
from dataclasses import replace

import pytest

from codedist.analytics import q_integer, theorem1_predicate
from codedist.code import grassmann_distance, is_nondegenerate
from codedist.field import field_of_order
from codedist.graph import bfs_oracle, reducing_neighbors, restricted_distance
from codedist.linalg import intersection_dim, subspace_from_rows
from codedist.scan import nondegenerate_codes
from codedist.witness import (
    BlockingCertificate,
    ParameterError,
    blocking_certificate,
    certificate_defects,
    check_witness_params,
    construct_witness,
    example2_generators,
    example2_pair,
    lemma4_generators,
    lemma4_pair,
    lemma6_pad,
    ones_extend,
    verify_certificate,
)

GF2 = field_of_order(2)

# the [9,2]_2 pair: nonzero vectors v1, v2, v1+v2 and u1, u2, u1+u2
NINE_X = [(0, 0, 0, 1, 1, 1, 1, 1, 1), (1, 1, 1, 0, 0, 0, 1, 1, 1), (1, 1, 1, 1, 1, 1, 0, 0, 0)]
NINE_Y = [(0, 1, 1, 0, 1, 1, 0, 1, 1), (1, 0, 1, 1, 0, 1, 1, 0, 1), (1, 1, 0, 1, 1, 0, 1, 1, 0)]


def zero_coords(v):
    return {i + 1 for i, a in enumerate(v) if a == 0}


def test_nine_column_pair_literal():
    X, Y = example2_pair(2)
    assert X == subspace_from_rows(GF2, 9, NINE_X)
    assert Y == subspace_from_rows(GF2, 9, NINE_Y)
    assert set(X.lines) == set(NINE_X)
    assert set(Y.lines) == set(NINE_Y)
    assert zero_coords(NINE_X[0]) == {1, 2, 3}
    assert zero_coords(NINE_X[1]) == {4, 5, 6}
    assert zero_coords(NINE_X[2]) == {7, 8, 9}
    assert zero_coords(NINE_Y[0]) == {1, 4, 7}
    assert zero_coords(NINE_Y[1]) == {2, 5, 8}
    assert zero_coords(NINE_Y[2]) == {3, 6, 9}


def ordered_lines(F, a, b):
    """a, b, a + b, a + alpha b, ..., a + alpha^(q-2) b."""
    out = [a, b]
    for j in range(F.q - 1):
        out.append(F.axpy(F.pow(F.alpha, j), b, a))
    return out


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_square_length_block_pattern(q):
    F = field_of_order(q)
    X, Y = example2_pair(q)
    b = q + 1
    assert X.n == b * b and intersection_dim(X, Y) == 0
    gx, gy = example2_generators(q)
    xs = ordered_lines(F, *gx)
    ys = ordered_lines(F, *gy)
    for i, v in enumerate(xs, 1):
        assert set(range(1 + (i - 1) * b, i * b + 1)) <= zero_coords(v)
    for j, u in enumerate(ys, 1):
        assert {j + t * b for t in range(b)} <= zero_coords(u)
    for i, v in enumerate(xs, 1):
        for j, u in enumerate(ys, 1):
            assert (i - 1) * b + j in zero_coords(v) & zero_coords(u)


def test_sixteen_column_pair_shape():
    X, Y = example2_pair(3)
    assert X.n == 16 and intersection_dim(X, Y) == 0
    assert is_nondegenerate(X) and is_nondegenerate(Y)


def test_banded_pair_k2_delegates():
    assert lemma4_pair(2, 2) == example2_pair(2)
    assert lemma4_pair(3, 2) == example2_pair(3)


def test_banded_rows():
    gx, gy = lemma4_generators(2, 3)
    b = 3
    y, z = (0, 1, 1), (1, 0, 1)
    zero = (0, 0, 0)
    blocks = [[tuple(r[s * b : (s + 1) * b]) for r in gy] for s in range(7)]
    assert blocks[0] == [y, z, zero]
    assert blocks[1] == [zero, y, z]
    for s in range(2, 7):
        assert blocks[s] == [zero, y, z]
    # columns of G_X repeat one projective point per block
    for s in range(7):
        cols = {tuple(r[c] for r in gx) for c in range(s * b, (s + 1) * b)}
        assert len(cols) == 1
    pts = [tuple(r[s * b] for r in gx) for s in range(7)]
    assert len(set(pts)) == 7


@pytest.mark.parametrize("q,k", [(2, 3), (2, 4), (3, 3)])
def test_banded_pair(q, k):
    X, Y = lemma4_pair(q, k)
    b = q + 1
    assert X.n == q_integer(k, q) * b
    assert intersection_dim(X, Y) == 0
    # every hyperplane of X vanishes on a whole block of q + 1 columns
    nblocks = X.n // b
    for H in X.hyperplanes:
        assert any(not (H.support >> (s * b)) & ((1 << b) - 1) for s in range(nblocks))
    # every vector of Y vanishes somewhere in every block
    for u in Y.lines:
        for s in range(nblocks):
            assert any(a == 0 for a in u[s * b : (s + 1) * b])
    if q ** (k) <= 64:
        res = restricted_distance(X, Y, with_path=False)
        assert (res.d, res.d_c) == (k, k + 1)


def test_identity_padding():
    X, Y = example2_pair(2)
    assert lemma6_pad(X, Y, 0) == (X, Y)
    Xp, Yp = lemma6_pad(X, Y, 1)
    assert (Xp.n, Xp.k) == (10, 3)
    assert intersection_dim(Xp, Yp) == 1
    assert is_nondegenerate(Xp) and is_nondegenerate(Yp)
    res = restricted_distance(Xp, Yp, with_path=False)
    assert (res.d, res.d_c) == (2, 3)


def test_ones_extend():
    X, Y = example2_pair(2)
    assert ones_extend(X, Y, 9) == (X, Y)
    Xe, Ye = ones_extend(X, Y, 10)
    assert Xe.n == 10
    res = restricted_distance(Xe, Ye, with_path=False)
    assert (res.d, res.d_c) == (2, 3)
    with pytest.raises(ParameterError):
        ones_extend(X, Y, 8)


def test_ones_extend_keeps_meet():
    Xp, Yp = lemma6_pad(*example2_pair(2), 1)
    Xe, Ye = ones_extend(Xp, Yp, 13)
    assert intersection_dim(Xe, Ye) == 1


def test_nine_column_certificate():
    X, Y = example2_pair(2)
    cert = blocking_certificate(X, Y)
    assert cert is not None
    assert len(cert.entries) == 9
    assert verify_certificate(X, Y, cert)
    h = cert.hyperplanes.index(subspace_from_rows(GF2, 9, [NINE_X[0]]))
    l = cert.lines.index(NINE_Y[0])
    assert cert.entries[(h, l)] == 1
    for (h, l), i in cert.entries.items():
        vi = cert.hyperplanes[h].basis[0]
        j = NINE_X.index(vi) + 1
        jj = NINE_Y.index(cert.lines[l]) + 1
        assert i == (j - 1) * 3 + jj


def test_certificate_mutations():
    X, Y = example2_pair(2)
    cert = blocking_certificate(X, Y)
    for key, i in cert.entries.items():
        for wrong in range(1, 10):
            if wrong == i:
                continue
            bad = replace(cert, entries={**cert.entries, key: wrong})
            assert not verify_certificate(X, Y, bad)
        missing = {k: v for k, v in cert.entries.items() if k != key}
        assert not verify_certificate(X, Y, replace(cert, entries=missing))
    short = replace(cert, lines=cert.lines[:-1], entries={k: v for k, v in cert.entries.items() if k[1] < 2})
    assert any("lines listed" in p for p in certificate_defects(X, Y, short))
    out_of_range = replace(cert, entries={**cert.entries, (0, 0): 10})
    assert not verify_certificate(X, Y, out_of_range)
    foreign = replace(cert, lines=(tuple([1] * 9),) + cert.lines[1:])
    assert not verify_certificate(X, Y, foreign)


def test_certificate_round_trip():
    X, Y = example2_pair(3)
    cert = blocking_certificate(X, Y)
    again = BlockingCertificate.from_dict(cert.to_dict(), X.spec, X.n)
    assert again == cert
    assert verify_certificate(X, Y, again)


def test_certificate_does_not_transfer():
    X, Y = example2_pair(2)
    cert = blocking_certificate(X, Y)
    Xe, Ye = ones_extend(X, Y, 10)
    assert not verify_certificate(Xe, Ye, cert)


def test_no_certificate_below_threshold():
    rng = random.Random(2)
    for n, k, q in [(8, 2, 2), (7, 3, 2), (6, 2, 3)]:
        assert theorem1_predicate(n, k, q)
        codes = nondegenerate_codes(field_of_order(q), n, k)
        for _ in range(200):
            X, Y = rng.sample(codes, 2)
            if grassmann_distance(X, Y) >= 2:
                assert blocking_certificate(X, Y) is None
                assert next(reducing_neighbors(X, Y), None) is not None


def test_certificate_needs_distance_two():
    codes = nondegenerate_codes(GF2, 5, 2)
    X = codes[0]
    Y = next(Z for Z in codes if grassmann_distance(X, Z) == 1)
    with pytest.raises(ValueError):
        blocking_certificate(X, Y)


@pytest.mark.parametrize(
    "q,k,m,n",
    [(2, 2, 0, 9), (2, 2, 0, 11), (3, 2, 0, 16), (2, 3, 1, 10), (2, 3, 0, 21), (2, 4, 2, 11), (2, 3, 1, 12), (4, 2, 0, 25)],
)
def test_construct_witness(q, k, m, n):
    w = construct_witness(q, k, m, n)
    assert (w.X.n, w.X.k, w.X.spec.q) == (n, k, q)
    assert intersection_dim(w.X, w.Y) == m
    assert (w.d, w.d_c) == (k - m, k - m + 1)
    assert verify_certificate(w.X, w.Y, w.certificate)
    assert list(reducing_neighbors(w.X, w.Y)) == []


def test_witness_nine_columns():
    w = construct_witness(2, 2, 0, 9)
    assert w.X == subspace_from_rows(GF2, 9, NINE_X)
    assert w.Y == subspace_from_rows(GF2, 9, NINE_Y)


def test_witness_against_oracle():
    w = construct_witness(2, 3, 1, 10)
    # |C(10,3)_2| is above the default cap; (2,2,0,10) is not
    w2 = construct_witness(2, 2, 0, 10)
    assert bfs_oracle(w2.X, w2.Y) == 3
    assert w.d_c == 3


@pytest.mark.parametrize(
    "q,k,m,n,needle",
    [
        (2, 2, 1, 9, "m <= k-2"),
        (2, 2, 0, 8, "[k-m]_q (q+1) + m"),
        (2, 3, 0, 20, "[k-m]_q (q+1) + m"),
        (2, 1, 0, 9, "1 < k < n-1"),
        (2, 6, 1, 10, "m(n,k)"),
    ],
)
def test_parameter_errors(q, k, m, n, needle):
    with pytest.raises(ParameterError, match=re.escape(needle)):
        check_witness_params(q, k, m, n)
    with pytest.raises(ParameterError):
        construct_witness(q, k, m, n)


def test_bad_field_order():
    with pytest.raises(ValueError):
        construct_witness(6, 2, 0, 49)
