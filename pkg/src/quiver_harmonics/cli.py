"""Command-line front end.

JSON is the interchange format; text output is a human rendering of the
same payload.  Exit codes: 0 success, 2 validation error, 3 capacity guard,
4 verification failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .character import (
    CapacityError,
    QuiverConfig,
    RationalWeight,
    graded_decomposition,
    harmonic_multiplicity_oracle,
    hesselink_exponent,
    rational_weight,
)
from .partitions import Partition, enumerate_partitions
from .lr import lr_coefficient_classical, lr_coefficient_crystal
from .stable import (
    KType,
    enumerate_distinguished,
    separation_check,
    stable_multiplicity,
    stable_multiplicity_definition,
)

EXIT_VALIDATION = 2
EXIT_CAPACITY = 3
EXIT_VERIFICATION = 4


class VerificationFailure(Exception):
    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


def _parse_partition(text: str) -> Partition:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {text!r} ({exc})") from exc
    if not isinstance(doc, list):
        raise ValueError(f"a partition is a JSON array of integers, got {text!r}")
    return Partition(doc)


def _load_ktype(args) -> KType:
    if args.ktype is not None:
        raw = args.ktype
    elif args.ktype_file is not None:
        with open(args.ktype_file) as fh:
            raw = fh.read()
    else:
        raise ValueError("provide --ktype or --ktype-file")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"K-type is not valid JSON: {exc}") from exc
    return KType.from_json(doc)


def _parse_dims(text: str) -> QuiverConfig:
    try:
        dims = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"--dims must be comma-separated integers: {text!r}") from exc
    return QuiverConfig(dims)


def _cmd_stable_mult(args) -> dict:
    nu = _load_ktype(args)
    series = stable_multiplicity(nu, args.max_degree)
    return {
        "command": "stable-mult",
        "ktype": nu.to_json(),
        "max_degree": args.max_degree,
        "series": series.to_json(),
    }


def _cmd_distinguished(args) -> dict:
    nu = _load_ktype(args)
    rows = [
        {"tableaux": tt.to_json(), **profile.to_json()}
        for tt, profile in enumerate_distinguished(nu, args.max_degree)
    ]
    return {
        "command": "distinguished",
        "ktype": nu.to_json(),
        "max_degree": args.max_degree,
        "count": len(rows),
        "rows": rows,
    }


def _cmd_lr(args) -> dict:
    lam = _parse_partition(args.lam)
    alpha = _parse_partition(args.alpha)
    nu = _parse_partition(args.nu)
    crystal = lr_coefficient_crystal(lam, alpha, nu)
    classical = lr_coefficient_classical(lam, alpha, nu)
    return {
        "command": "lr",
        "lambda": lam.to_json(),
        "alpha": alpha.to_json(),
        "nu": nu.to_json(),
        "crystal": crystal,
        "classical": classical,
        "agree": crystal == classical,
    }


def _verify_definition(args) -> dict:
    nu = _load_ktype(args)
    a = stable_multiplicity(nu, args.max_degree)
    b = stable_multiplicity_definition(nu, args.max_degree)
    detail = {"ktype": nu.to_json(), "formula": a.to_json(), "definition": b.to_json()}
    if a != b:
        raise VerificationFailure(detail)
    return detail


def _verify_separation(args) -> dict:
    nu = _load_ktype(args)
    detail = {"ktype": nu.to_json(), "max_degree": args.max_degree}
    if not separation_check(nu, args.max_degree):
        raise VerificationFailure(detail)
    return detail


def _verify_character(args) -> dict:
    if args.dims is None:
        raise ValueError("--mode character requires --dims")
    cfg = _parse_dims(args.dims)
    max_degree = min(args.max_degree, cfg.n)
    checked = 0
    parts = enumerate_partitions(cfg.n)
    for plus in itertools.product(parts, repeat=cfg.k):
        if sum(p.size() for p in plus) > cfg.n:
            continue
        for minus in itertools.product(parts, repeat=cfg.k):
            if sum(m.size() for m in minus) > cfg.n:
                continue
            nu = KType(list(zip(plus, minus)))
            if any(
                nu.plus(i + 1).length() + nu.minus(i + 1).length() > cfg.dims[i]
                for i in range(cfg.k)
            ):
                continue
            oracle = harmonic_multiplicity_oracle(cfg, nu, max_degree)
            formula = stable_multiplicity(nu, max_degree)
            checked += 1
            if oracle != formula:
                raise VerificationFailure({
                    "dims": list(cfg.dims),
                    "ktype": nu.to_json(),
                    "oracle": oracle.to_json(),
                    "formula": formula.to_json(),
                })
    return {"dims": list(cfg.dims), "max_degree": max_degree, "ktypes_checked": checked}


def _verify_hesselink(args) -> dict:
    d = args.max_degree
    n = d + 1
    adjoint = KType([((1,), (1,))])
    formula = stable_multiplicity(adjoint, d)
    exponents = hesselink_exponent(
        rational_weight(Partition((1,)), Partition((1,)), n), d
    )
    detail = {
        "n": n,
        "max_degree": d,
        "formula": formula.to_json(),
        "hesselink": exponents.to_json(),
    }
    if formula != exponents:
        raise VerificationFailure(detail)
    return detail


def _cmd_verify(args) -> dict:
    checks = {
        "definition": _verify_definition,
        "separation": _verify_separation,
        "character": _verify_character,
        "hesselink": _verify_hesselink,
    }
    detail = checks[args.mode](args)
    return {"command": "verify", "mode": args.mode, "result": "pass", "detail": detail}


def _cmd_exponents(args) -> dict:
    try:
        entries = json.loads(args.weight)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--weight must be a JSON array: {exc}") from exc
    if not isinstance(entries, list) or len(entries) != args.n:
        raise ValueError(f"--weight must be a JSON array of {args.n} integers")
    lam = RationalWeight(entries)
    series = hesselink_exponent(lam, args.max_degree)
    return {
        "command": "exponents",
        "n": args.n,
        "weight": list(lam.entries),
        "series": series.to_json(),
    }


def _cmd_oracle(args) -> dict:
    cfg = _parse_dims(args.dims)
    if args.k is not None and args.k != cfg.k:
        raise ValueError(f"--k {args.k} disagrees with {cfg.k} dims")
    max_degree = args.max_degree
    if max_degree > cfg.n:
        raise ValueError(f"oracle valid only up to degree n = {cfg.n}")
    # every K-type appearing in the coordinate ring up to max_degree
    seen: dict[tuple, None] = {}
    for d in range(max_degree + 1):
        for key in graded_decomposition(cfg, d):
            seen.setdefault(key, None)
    table = []
    for key in sorted(seen, key=lambda rws: tuple(rw.entries for rw in rws)):
        nu = _ktype_from_weights(key)
        series = harmonic_multiplicity_oracle(cfg, nu, max_degree)
        if series.is_zero():
            continue
        table.append({"ktype": nu.to_json(), "series": series.to_json()})
    return {
        "command": "oracle",
        "dims": list(cfg.dims),
        "k": cfg.k,
        "max_degree": max_degree,
        "table": table,
    }


def _ktype_from_weights(key) -> KType:
    pairs = []
    for rw in key:
        plus = tuple(e for e in rw.entries if e > 0)
        minus = tuple(-e for e in reversed(rw.entries) if e < 0)
        pairs.append((Partition(plus), Partition(minus)))
    return KType(pairs)


def _render_text(doc: dict) -> str:
    lines = []

    def series_str(s):
        terms = []
        for d, c in enumerate(s["coeffs"]):
            if c:
                terms.append(f"{c}*q^{d}" if d else str(c))
        return (" + ".join(terms) or "0") + f"  (mod q^{s['truncation'] + 1})"

    cmd = doc["command"]
    if cmd == "stable-mult":
        lines.append(f"stable multiplicity, k={doc['ktype']['k']}:")
        lines.append("  " + series_str(doc["series"]))
    elif cmd == "distinguished":
        lines.append(f"{doc['count']} distinguished tuples up to degree {doc['max_degree']}:")
        for row in doc["rows"]:
            lines.append(
                f"  degree {row['degree']}: tableaux={row['tableaux']} "
                f"lambda_min={row['lambda_min']} lambdas={row['lambdas']} alphas={row['alphas']}"
            )
    elif cmd == "lr":
        lines.append(
            f"c^{doc['lambda']}_({doc['alpha']},{doc['nu']}): "
            f"crystal={doc['crystal']} classical={doc['classical']} agree={doc['agree']}"
        )
    elif cmd == "verify":
        lines.append(f"verify {doc['mode']}: {doc['result']}")
        lines.append(f"  {json.dumps(doc['detail'])}")
    elif cmd == "exponents":
        lines.append(f"generalized exponents for weight {doc['weight']} in GL_{doc['n']}:")
        lines.append("  " + series_str(doc["series"]))
    elif cmd == "oracle":
        lines.append(
            f"graded K-type table for dims {doc['dims']} up to degree {doc['max_degree']}:"
        )
        for row in doc["table"]:
            lines.append(f"  {json.dumps(row['ktype'])}: {series_str(row['series'])}")
    else:
        lines.append(json.dumps(doc))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiver-harmonics",
        description="Stable graded K-type multiplicities for cyclic-quiver harmonics",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker pool size (output is identical for any value)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ktype_args(p):
        p.add_argument("--ktype", help="K-type as inline JSON")
        p.add_argument("--ktype-file", help="path to a K-type JSON file")
        p.add_argument("--max-degree", type=int, required=True)

    add_ktype_args(sub.add_parser("stable-mult", help="main-theorem q-series"))
    add_ktype_args(sub.add_parser("distinguished", help="list distinguished tuples"))

    p_lr = sub.add_parser("lr", help="Littlewood-Richardson coefficient, both routes")
    p_lr.add_argument("--lambda", dest="lam", required=True)
    p_lr.add_argument("--alpha", required=True)
    p_lr.add_argument("--nu", required=True)

    p_verify = sub.add_parser("verify", help="run a cross-check")
    p_verify.add_argument(
        "--mode", choices=("definition", "character", "hesselink", "separation"),
        required=True,
    )
    p_verify.add_argument("--ktype")
    p_verify.add_argument("--ktype-file")
    p_verify.add_argument("--dims")
    p_verify.add_argument("--max-degree", type=int, default=4)

    p_exp = sub.add_parser("exponents", help="Hesselink generalized exponents")
    p_exp.add_argument("--n", type=int, required=True)
    p_exp.add_argument("--weight", required=True)
    p_exp.add_argument("--max-degree", type=int, required=True)

    p_oracle = sub.add_parser("oracle", help="graded K-type table for a small quiver")
    p_oracle.add_argument("--dims", required=True)
    p_oracle.add_argument("--k", type=int)
    p_oracle.add_argument("--max-degree", type=int, required=True)

    return parser


_HANDLERS = {
    "stable-mult": _cmd_stable_mult,
    "distinguished": _cmd_distinguished,
    "lr": _cmd_lr,
    "verify": _cmd_verify,
    "exponents": _cmd_exponents,
    "oracle": _cmd_oracle,
}


def _emit_error(code: str, message: str, fmt: str, payload=None) -> None:
    doc = {"error": {"code": code, "message": message}}
    if payload is not None:
        doc["error"]["payload"] = payload
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True), file=sys.stderr)
    else:
        print(f"error [{code}]: {message}", file=sys.stderr)
        if payload is not None:
            print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        _emit_error("validation", "--threads must be at least 1", args.format)
        return EXIT_VALIDATION
    try:
        doc = _HANDLERS[args.command](args)
    except VerificationFailure as exc:
        _emit_error("verification", "check failed", args.format, exc.payload)
        return EXIT_VERIFICATION
    except CapacityError as exc:
        _emit_error("capacity", str(exc), args.format)
        return EXIT_CAPACITY
    except (ValueError, OSError, KeyError, IndexError) as exc:
        _emit_error("validation", str(exc), args.format)
        return EXIT_VALIDATION
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        print(_render_text(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
