"""Command-line front end.

Exit codes:
    0  success
    1  a verification failed (certificate rejected, oracle or count mismatch,
       scan inconsistent with the length threshold)
    2  unreadable input or bad usage
    3  a degenerate input code
    4  parameters outside the admissible range
    5  a brute-force size cap was exceeded
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analytics import count_nondegenerate, gaussian_binomial
from .code import CodeParams, is_nondegenerate
from .field import field_of_order
from .graph import ORACLE_CAP, CapExceeded, bfs_oracle, connecting_path, restricted_distance
from .linalg import Subspace, enumerate_subspaces
from .report import MatrixFormatError, ReportDocument, matrix_rows, read_code, write_code
from .scan import SCAN_CAP, scan_pairs
from .witness import BlockingCertificate, ParameterError, blocking_certificate, certificate_defects, construct_witness

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_PARAMS = 4
EXIT_CAP = 5

ENUMERATE_CAP = 10**6


class CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _emit(doc: ReportDocument, as_json: bool, lines: Sequence[str]) -> None:
    if as_json:
        sys.stdout.write(doc.to_json())
    else:
        for ln in lines:
            print(ln)


def _load(path: str) -> Subspace:
    try:
        return read_code(path)
    except MatrixFormatError as exc:
        raise CliError(EXIT_USAGE, f"{path}: {exc}") from None


def _load_pair(path_x: str, path_y: str) -> tuple[Subspace, Subspace]:
    X, Y = _load(path_x), _load(path_y)
    if (X.spec, X.n, X.k) != (Y.spec, Y.n, Y.k):
        raise CliError(
            EXIT_PARAMS,
            f"codes differ in parameters: [{X.n},{X.k}]_{X.spec.q} vs [{Y.n},{Y.k}]_{Y.spec.q}",
        )
    try:
        CodeParams.of(X)
    except ValueError as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None
    for name, S in (("X", X), ("Y", Y)):
        if not is_nondegenerate(S):
            zero = [i + 1 for i in range(S.n) if not (S.support >> i) & 1]
            raise CliError(EXIT_DEGENERATE, f"{name} is degenerate: coordinates {zero} vanish on it")
    return X, Y


def _params(S: Subspace) -> dict[str, int]:
    return {"n": S.n, "k": S.k, "q": S.spec.q, "p": S.spec.p, "e": S.spec.e}


def cmd_distance(args: argparse.Namespace) -> int:
    X, Y = _load_pair(args.x, args.y)
    res = restricted_distance(X, Y)
    doc = ReportDocument("distance", _params(X), d=res.d, d_c=res.d_c, evidence=res.evidence.value)
    path = res.path
    if path is None:
        alt = connecting_path(X, Y)
        if len(alt) - 1 == res.d_c:
            path = tuple(alt)
    if path is not None:
        doc.path = [matrix_rows(Z) for Z in path]
    if res.d_c > res.d and res.d >= 2:
        cert = blocking_certificate(X, Y)
        if cert is not None:
            doc.certificate = [[h, l, i] for (h, l), i in sorted(cert.entries.items())]
    lines = [f"d={res.d} d_c={res.d_c}", f"evidence: {res.evidence.value}"]
    status = EXIT_OK
    if args.oracle:
        try:
            oracle = bfs_oracle(X, Y, cap=args.cap)
        except CapExceeded as exc:
            raise CliError(EXIT_CAP, str(exc)) from None
        agrees = oracle == res.d_c
        doc.details["oracle_d_c"] = oracle
        doc.details["oracle_agrees"] = agrees
        lines.append(f"oracle: d_c={oracle} ({'agrees' if agrees else 'MISMATCH'})")
        if not agrees:
            status = EXIT_FAILED
    _emit(doc, args.json, lines)
    return status


def cmd_witness(args: argparse.Namespace) -> int:
    q, k, m, n = args.q, args.k, args.m, args.n
    try:
        w = construct_witness(q, k, m, n)
    except ParameterError as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None
    except ValueError as exc:
        # non-prime-power q, field too large, negative m and the like
        raise CliError(EXIT_PARAMS, str(exc)) from None
    prefix = args.out or f"witness_{q}_{k}_{m}_{n}"
    files = {"X": f"{prefix}_X.mat", "Y": f"{prefix}_Y.mat", "certificate": f"{prefix}_cert.json"}
    write_code(files["X"], w.X)
    write_code(files["Y"], w.Y)
    params = {"q": q, "k": k, "m": m, "n": n}
    Path(files["certificate"]).write_text(
        json.dumps({"params": params, "certificate": w.certificate.to_dict()}, sort_keys=True, indent=2) + "\n"
    )
    doc = ReportDocument(
        "witness",
        params,
        d=w.d,
        d_c=w.d_c,
        evidence="first-steps-exhausted",
        certificate=[[h, l, i] for (h, l), i in sorted(w.certificate.entries.items())],
        details={"files": files},
    )
    lines = [f"d={w.d} d_c={w.d_c}"] + [f"wrote {p}" for p in files.values()]
    _emit(doc, args.json, lines)
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    n, k, q = args.n, args.k, args.q
    if not 0 <= k <= n:
        raise CliError(EXIT_PARAMS, f"need 0 <= k <= n, got n={n}, k={k}")
    try:
        spec = field_of_order(q)
    except ValueError as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None
    total = gaussian_binomial(n, k, q)
    nondeg = count_nondegenerate(n, k, q)
    counts: dict = {"subspaces": total, "nondegenerate": nondeg}
    lines = [f"[{n} {k}]_{q} = {total}", f"|C({n},{k})_{q}| = {nondeg}"]
    status = EXIT_OK
    if args.enumerate:
        if total > args.cap:
            raise CliError(EXIT_CAP, f"[{n} {k}]_{q} = {total} exceeds the enumeration cap {args.cap}")
        seen = found = 0
        for S in enumerate_subspaces(spec, n, k):
            seen += 1
            found += is_nondegenerate(S)
        match = seen == total and found == nondeg
        counts.update(enumerated_subspaces=seen, enumerated_nondegenerate=found, match=match)
        lines.append(f"enumerated: {seen} subspaces, {found} non-degenerate ({'match' if match else 'mismatch'})")
        if not match:
            status = EXIT_FAILED
    _emit(ReportDocument("count", {"n": n, "k": k, "q": q}, counts=counts), args.json, lines)
    return status


def cmd_scan(args: argparse.Namespace) -> int:
    n, k, q = args.n, args.k, args.q
    try:
        field_of_order(q)
        CodeParams(n, k, q)
    except ValueError as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None
    try:
        summary = scan_pairs(n, k, q, parallel=args.parallel, cap=args.cap)
    except CapExceeded as exc:
        raise CliError(EXIT_CAP, str(exc)) from None
    ok = summary["threshold_consistent"] and not summary["duality_violations"]
    counts = {key: summary[key] for key in ("codes", "pairs", "exceptional_count", "duality_checked", "certificates_verified")}
    details = {key: summary[key] for key in ("histogram", "exceptional_pairs", "duality_violations")}
    details["below_threshold"] = summary["below_threshold"]
    details["consistent"] = ok
    doc = ReportDocument("scan-theorem1", {"n": n, "k": k, "q": q}, counts=counts, details=details)
    lines = [
        f"codes: {summary['codes']}  pairs: {summary['pairs']}",
        *(f"  d={d} d_c={dc}: {c}" for d, dc, c in summary["histogram"]),
        f"pairs with d_c > d: {summary['exceptional_count']}",
        f"n < (q+1)^2 + k - 2: {summary['below_threshold']}",
        f"duality violations: {len(summary['duality_violations'])}",
        "consistent" if ok else "INCONSISTENT",
    ]
    _emit(doc, args.json, lines)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_certify(args: argparse.Namespace) -> int:
    X, Y = _load_pair(args.x, args.y)
    try:
        data = json.loads(Path(args.cert).read_text())
        raw = data.get("certificate", data)
        cert = BlockingCertificate.from_dict(raw, X.spec, X.n)
    except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
        raise CliError(EXIT_USAGE, f"{args.cert}: unreadable certificate ({exc})") from None
    defects = certificate_defects(X, Y, cert)
    doc = ReportDocument(
        "certify",
        _params(X),
        certificate=[[h, l, i] for (h, l), i in sorted(cert.entries.items())],
        details={"valid": not defects, "defects": defects},
    )
    lines = ["certificate valid"] if not defects else ["certificate INVALID", *(f"  {p}" for p in defects)]
    _emit(doc, args.json, lines)
    return EXIT_OK if not defects else EXIT_FAILED


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise CliError(EXIT_USAGE, message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="codedist", description="Distances between non-degenerate linear codes.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("distance", help="Grassmann and restricted distance of two codes")
    p.add_argument("x", help="generator matrix file of X")
    p.add_argument("y", help="generator matrix file of Y")
    p.add_argument("--oracle", action="store_true", help="cross-check d_c by breadth-first search")
    p.add_argument("--cap", type=int, default=ORACLE_CAP, help="largest graph the oracle may search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("witness", help="write a pair with d_c = d + 1 and its certificate")
    for name in ("q", "k", "m", "n"):
        p.add_argument(name, type=int)
    p.add_argument("--out", metavar="PREFIX", help="output prefix (default witness_q_k_m_n)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("count", help="count subspaces and non-degenerate codes")
    for name in ("n", "k", "q"):
        p.add_argument(name, type=int)
    p.add_argument("--enumerate", action="store_true", help="also count by brute force")
    p.add_argument("--cap", type=int, default=ENUMERATE_CAP, help="largest enumeration allowed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("scan-theorem1", help="compare d and d_c on every pair of codes")
    for name in ("n", "k", "q"):
        p.add_argument(name, type=int)
    p.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")
    p.add_argument("--cap", type=int, default=SCAN_CAP, help="largest number of codes allowed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("certify", help="check a blocking certificate against two codes")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("cert", help="certificate JSON as written by 'witness'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
        return args.func(args)
    except CliError as exc:
        print(f"codedist: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
