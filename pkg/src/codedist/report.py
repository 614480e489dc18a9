"""Matrix files and JSON report documents.

A matrix file is plain text::

    p e k n
    a_11 ... a_1n
    ...
    a_k1 ... a_kn

with entries given as element codes (base-p little-endian polynomial
digits, see :mod:`codedist.field`).  Blank lines are ignored.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Optional

from .field import make_field
from .linalg import Subspace, rank, subspace_from_rows


class MatrixFormatError(ValueError):
    pass


def format_matrix(S: Subspace) -> str:
    spec = S.spec
    lines = [f"{spec.p} {spec.e} {S.k} {S.n}"]
    lines += [" ".join(str(a) for a in r) for r in S.basis]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Subspace:
    """Parse a generator matrix; its rows must be independent."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise MatrixFormatError("empty matrix file")
    try:
        header = [int(t) for t in rows[0]]
        body = [[int(t) for t in r] for r in rows[1:]]
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer token: {exc}") from None
    if len(header) != 4:
        raise MatrixFormatError(f"header must be 'p e k n', got {rows[0]}")
    p, e, k, n = header
    try:
        spec = make_field(p, e)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None
    if k < 1 or n < 1:
        raise MatrixFormatError(f"bad dimensions k={k}, n={n}")
    if len(body) != k:
        raise MatrixFormatError(f"header announces {k} rows, found {len(body)}")
    for i, r in enumerate(body, 1):
        if len(r) != n:
            raise MatrixFormatError(f"row {i} has {len(r)} entries, expected {n}")
        bad = [a for a in r if not 0 <= a < spec.q]
        if bad:
            raise MatrixFormatError(f"row {i} has entries outside [0, {spec.q}): {bad}")
    if rank(spec, body, n) != k:
        raise MatrixFormatError(f"the {k} rows are linearly dependent")
    return subspace_from_rows(spec, n, body)


def read_code(path: str | Path) -> Subspace:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from None
    return parse_matrix(text)


def write_code(path: str | Path, S: Subspace) -> None:
    Path(path).write_text(format_matrix(S))


def matrix_rows(S: Subspace) -> list[list[int]]:
    return [list(r) for r in S.basis]


@dataclass
class ReportDocument:
    """Machine-readable result of a CLI command."""

    command: str
    params: dict[str, int]
    d: Optional[int] = None
    d_c: Optional[int] = None
    evidence: Optional[str] = None
    path: Optional[list[list[list[int]]]] = None
    certificate: Optional[list[list[int]]] = None
    counts: Optional[dict[str, Any]] = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReportDocument":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))
