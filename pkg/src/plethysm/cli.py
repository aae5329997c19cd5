"""Command line interface.

Every command prints one JSON document on stdout (keys sorted). Exit code
0 means success, 1 a failed mathematical check, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import asymptotics, oracle, pieri, weintraub
from .multilinear import hwv_space_dim, raising_op
from .partitions import conjugate, parse_partition

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


class InvalidInput(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _check_size(k: int, d: int, lam) -> None:
    if k < 1 or d < 1:
        raise InvalidInput("k and d must be positive")
    if sum(lam) != k * d:
        raise InvalidInput(f"|lambda| = {sum(lam)} but k*d = {k * d}")


def cmd_mult(args) -> int:
    _check_size(args.k, args.d, args.lam)
    a = pieri.a_kd(args.k, args.d, args.lam)
    payload: dict = {"a": a}
    if not args.oracle:
        _emit(payload)
        return EXIT_OK
    conj = conjugate(args.lam)
    n = args.n if args.n is not None else max(len(conj), args.k)
    if n < len(conj) or n < args.k:
        raise InvalidInput(f"--n must be at least max(len(lambda*), k) = {max(len(conj), args.k)}")
    hw = hwv_space_dim(args.k, args.d, conj, n)
    table = oracle.decompose(args.k, args.d, n, "wedge_tensor", force=args.force)
    tensor_mult = table.multiplicity(conj)
    payload.update({"hwv_dim": hw, "oracle": tensor_mult, "n": n, "agree": a == hw == tensor_mult})
    _emit(payload)
    return EXIT_OK if payload["agree"] else EXIT_FAILED


def cmd_hwv_basis(args) -> int:
    _check_size(args.k, args.d, args.lam)
    tableaux = pieri.enumerate_pieri_tableaux(args.k, args.d, args.lam)
    vectors = [pieri.build_wT(T) for T in tableaux]
    matrix = pieri.pairing_matrix(tableaux)
    triangular = pieri.is_lower_unitriangular(matrix)
    n = len(conjugate(args.lam))
    highest = all(not raising_op(j, w) for w in vectors for j in range(1, n + 1))
    basis = [{"tableau": T.to_json(), "vector": w.to_json()} for T, w in zip(tableaux, vectors)]
    ok = triangular and highest
    summary = {
        "k": args.k,
        "d": args.d,
        "lambda": list(args.lam),
        "count": len(tableaux),
        "pairing_unitriangular": triangular,
        "highest_weight": highest,
        "ok": ok,
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(basis, fh, sort_keys=True, indent=2)
            fh.write("\n")
        summary["out"] = args.out
    else:
        summary["basis"] = basis
    _emit(summary)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_weintraub(args) -> int:
    try:
        weintraub.validate_input(args.lam, args.k)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    cert = weintraub.certify(args.lam, args.k, expand=not args.skip_expand)
    _emit(cert.to_json(trace=args.trace))
    return EXIT_OK if cert.ok else EXIT_FAILED


def cmd_oracle(args) -> int:
    n = args.n
    try:
        if args.duality:
            if n < args.k * args.d:
                raise InvalidInput(f"duality needs n >= k*d = {args.k * args.d}")
            sym = oracle.decompose(args.k, args.d, n, "sym", force=args.force)
            dual = oracle.decompose(args.k, args.d, n, oracle.dual_functor(args.k), force=args.force)
            ok = oracle.duality_check(args.k, args.d, n)
            _emit({"duality": ok, "sym": sym.to_json(), "dual": dual.to_json()})
            return EXIT_OK if ok else EXIT_FAILED
        table = oracle.decompose(args.k, args.d, n, args.functor, force=args.force)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    payload = table.to_json()
    ambient = oracle.ambient_dimension(args.k, args.d, n, args.functor)
    payload["dimension_ok"] = table.dimension() == ambient
    _emit(payload)
    return EXIT_OK if payload["dimension_ok"] else EXIT_FAILED


def cmd_asym(args) -> int:
    try:
        row = asymptotics.stabilization_check(args.lam, args.d, args.kmax)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    if args.format == "table":
        header = ["lambda"] + [f"k={k}" for k in range(1, args.kmax + 1)] + ["stable(dim S_lambda C^(d-1))"]
        cells = [",".join(map(str, row.lam)) or "()"] + [str(v) for v in row.values] + [str(row.stable)]
        sys.stdout.write("\t".join(header) + "\n" + "\t".join(cells) + "\n")
    else:
        _emit(row.to_json())
    return EXIT_OK if row.ok else EXIT_FAILED


def cmd_scan(args) -> int:
    extra = []
    for item in args.extra:
        try:
            k, d = (int(x) for x in item.split(","))
        except ValueError:
            raise InvalidInput(f"--extra expects K,D pairs, got {item!r}") from None
        extra.append((k, d))
    entries = oracle.weintraub_positivity_scan(args.kmax, args.dmax, extra)
    ok = all(e.ok for e in entries)
    _emit({"entries": [e.to_json() for e in entries], "failures": sum(not e.ok for e in entries), "ok": ok})
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethysm", description=__doc__)
    parser.add_argument("--n", type=int, default=None, help="ambient dimension override")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", help="count Pieri tableaux a_{k,d}(lambda)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with kernel and decomposition oracles")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("hwv-basis", help="highest weight basis w_T of weight lambda*")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--out", default=None, help="write the basis JSON here")
    p.set_defaults(func=cmd_hwv_basis)

    p = sub.add_parser("weintraub", help="build and certify the witness vector")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="include the per-step state log")
    p.add_argument("--skip-expand", action="store_true", help="stop after the symbolic tableau")
    p.set_defaults(func=cmd_weintraub)

    p = sub.add_parser("oracle", help="decompose S^d(Wedge^k C^n) or S^d(S^k C^n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--functor", choices=oracle.FUNCTORS, default="wedge")
    p.add_argument("--duality", action="store_true")
    p.add_argument("--force", action="store_true", help="lift the k*d desk-scale bound")
    p.set_defaults(func=cmd_oracle, oracle_n=True)

    p = sub.add_parser("asym", help="stabilization of s_{k,d}(lambda)")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("scan", help="positivity scan over even partitions")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--dmax", type=int, default=3)
    p.add_argument("--extra", action="append", default=[], metavar="K,D")
    p.set_defaults(func=cmd_scan)
    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    # --n is global but reads naturally after the subcommand (oracle --n 4)
    out, moved = [], []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--n" and i + 1 < len(argv):
            moved += [tok, argv[i + 1]]
            i += 2
            continue
        if tok.startswith("--n="):
            moved.append(tok)
            i += 1
            continue
        out.append(tok)
        i += 1
    return moved + out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_normalize_argv(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "oracle_n", False) and args.n is None:
        args.n = args.k * args.d
    try:
        return args.func(args)
    except InvalidInput as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
