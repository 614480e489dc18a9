"""Exhaustive pair scans over all non-degenerate codes of given parameters."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .analytics import count_nondegenerate, theorem1_predicate
from .code import CodeParams, is_nondegenerate
from .field import FieldSpec, field_of_order
from .graph import CapExceeded, _reducing_neighbors, restricted_distance
from .linalg import Subspace, enumerate_subspaces
from .witness import blocking_certificate, verify_certificate

log = logging.getLogger(__name__)

SCAN_CAP = 10**4
_ROWS_PER_TASK = 64


def nondegenerate_codes(spec: FieldSpec, n: int, k: int) -> list[Subspace]:
    """All non-degenerate [n, k]_q codes in enumeration order."""
    return [S for S in enumerate_subspaces(spec, n, k) if is_nondegenerate(S)]


@dataclass
class PairTally:
    histogram: Counter = field(default_factory=Counter)
    exceptional: list[tuple[int, int]] = field(default_factory=list)
    duality_checked: int = 0
    duality_violations: list[tuple[int, int]] = field(default_factory=list)
    certificates_verified: int = 0

    def merge(self, other: "PairTally") -> None:
        self.histogram.update(other.histogram)
        self.exceptional.extend(other.exceptional)
        self.duality_checked += other.duality_checked
        self.duality_violations.extend(other.duality_violations)
        self.certificates_verified += other.certificates_verified


def check_duality(X: Subspace, Y: Subspace, d_c: int, d: int, verify: bool = True) -> tuple[bool, bool]:
    """(consistent, certificate_verified) for a pair with d >= 2.

    Consistent means: a blocking certificate exists exactly when there is
    no reducing neighbour, exactly when d_c = d + 1.  A reducing neighbour,
    when found, must be non-degenerate.
    """
    cert = blocking_certificate(X, Y)
    first = next(_reducing_neighbors(X, Y), None)
    if first is not None and not is_nondegenerate(first):
        return False, False
    verified = False
    if cert is not None and verify:
        verified = verify_certificate(X, Y, cert)
        if not verified:
            return False, False
    return (cert is not None) == (first is None) == (d_c == d + 1), verified


_CODES: dict[tuple[int, int, int], list[Subspace]] = {}


def _codes(q: int, n: int, k: int) -> list[Subspace]:
    key = (q, n, k)
    if key not in _CODES:
        _CODES[key] = nondegenerate_codes(field_of_order(q), n, k)
    return _CODES[key]


def _scan_rows(task: tuple[int, int, int, int, int]) -> PairTally:
    q, n, k, start, stop = task
    codes = _codes(q, n, k)
    tally = PairTally()
    for i in range(start, stop):
        X = codes[i]
        for j in range(i + 1, len(codes)):
            Y = codes[j]
            res = restricted_distance(X, Y, with_path=False)
            tally.histogram[(res.d, res.d_c)] += 1
            if res.d_c > res.d:
                tally.exceptional.append((i, j))
            if res.d >= 2:
                # certificates on exceptional pairs only; elsewhere there is none to verify
                ok, verified = check_duality(X, Y, res.d_c, res.d, verify=res.d_c > res.d)
                tally.duality_checked += 1
                tally.certificates_verified += verified
                if not ok:
                    tally.duality_violations.append((i, j))
    return tally


def _tasks(q: int, n: int, k: int, size: int) -> Iterator[tuple[int, int, int, int, int]]:
    for start in range(0, size, _ROWS_PER_TASK):
        yield (q, n, k, start, min(size, start + _ROWS_PER_TASK))


def scan_pairs(n: int, k: int, q: int, *, parallel: int = 1, cap: int = SCAN_CAP) -> dict:
    """Compute d and d_c for every unordered pair of distinct codes.

    Returns a JSON-ready summary.  The result does not depend on
    ``parallel``: exceptional pairs are reported as sorted index pairs into
    :func:`nondegenerate_codes` order.
    """
    CodeParams(n, k, q)
    expected = count_nondegenerate(n, k, q)
    if expected > cap:
        raise CapExceeded(f"|C({n},{k})_{q}| = {expected} exceeds the scan cap {cap}")
    codes = _codes(q, n, k)
    assert len(codes) == expected
    tally = PairTally()
    tasks = list(_tasks(q, n, k, len(codes)))
    if parallel <= 1:
        for t in tasks:
            tally.merge(_scan_rows(t))
    else:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            for part in pool.map(_scan_rows, tasks):
                tally.merge(part)
    exceptional = sorted(tally.exceptional)
    predicate = theorem1_predicate(n, k, q)
    log.info("scan (%d,%d,%d): %d codes, %d exceptional pairs", n, k, q, len(codes), len(exceptional))
    return {
        "codes": len(codes),
        "pairs": len(codes) * (len(codes) - 1) // 2,
        "histogram": [[d, dc, c] for (d, dc), c in sorted(tally.histogram.items())],
        "exceptional_count": len(exceptional),
        "exceptional_pairs": [list(p) for p in exceptional],
        "below_threshold": predicate,
        "threshold_consistent": (len(exceptional) == 0) == predicate,
        "duality_checked": tally.duality_checked,
        "duality_violations": [list(p) for p in sorted(tally.duality_violations)],
        "certificates_verified": tally.certificates_verified,
    }
