import pytest

from codedist.analytics import count_nondegenerate
from codedist.field import field_of_order
from codedist.graph import CapExceeded, restricted_distance
from codedist.scan import check_duality, nondegenerate_codes, scan_pairs
from codedist.witness import construct_witness, example2_pair


def test_codes_in_enumeration_order():
    codes = nondegenerate_codes(field_of_order(2), 6, 2)
    assert len(codes) == count_nondegenerate(6, 2, 2) == 121
    assert len(set(codes)) == len(codes)


def test_small_scan_summary():
    s = scan_pairs(5, 2, 2)
    assert s["codes"] == 40 and s["pairs"] == 780
    assert s["histogram"] == [[1, 1, 315], [2, 2, 465]]
    assert s["exceptional_count"] == 0 and s["exceptional_pairs"] == []
    assert s["below_threshold"] and s["threshold_consistent"]
    assert s["duality_checked"] == 465 and s["duality_violations"] == []


def test_parallel_matches_serial():
    assert scan_pairs(6, 2, 2, parallel=2) == scan_pairs(6, 2, 2)


def test_scan_cap():
    with pytest.raises(CapExceeded):
        scan_pairs(9, 2, 2, cap=1000)


def test_duality_on_witnesses():
    for args in [(2, 2, 0, 9), (2, 3, 1, 10), (3, 2, 0, 16)]:
        w = construct_witness(*args)
        ok, verified = check_duality(w.X, w.Y, w.d_c, w.d)
        assert ok and verified


def test_duality_flags_wrong_distance():
    X, Y = example2_pair(2)
    res = restricted_distance(X, Y)
    assert check_duality(X, Y, res.d_c, res.d)[0]
    assert not check_duality(X, Y, res.d, res.d)[0]
