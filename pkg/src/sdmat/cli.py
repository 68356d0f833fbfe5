"""Command-line interface.

Subcommands:

    enumerate   list every endomorphism matrix of an instance
    det         both determinants of a matrix, invertibility, inverse
    invert      closed-form inverse with method tag, brute fallback
    factor      a*b*c*d factorization of an automorphism matrix
    census      endomorphism/automorphism counts straight from the oracle
    verify      the full named-check harness (default: all instances)

Instances come from ``--instance name:params`` (see the catalog module) or
from ``--group-h FILE --group-k FILE --action FILE``.  Exit codes: 0 success,
1 failed check or unsatisfiable request (not invertible, not factorable),
2 invalid input.
"""

from __future__ import annotations

import argparse
import functools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .catalog import (
    DEFAULT_INSTANCES,
    build_instance,
    load_action,
    load_group,
    load_matrix,
    matrix_to_dict,
)
from .determinant import det_h, det_k, invert_via_det_h, invert_via_det_k, is_invertible
from .errors import (
    AlphaNotInvertible,
    DeltaNotInvertible,
    DetHNotInvertible,
    DetKNotInvertible,
    DiagonalNotInvertible,
    NotAutomorphismMatrix,
    SdmatError,
)
from .factorization import classify, factor_abcd
from .matrices import (
    EndoMatrix,
    check_conditions,
    endo_to_matrix,
    enumerate_matrices,
    matrix_to_endo,
)
from .oracle import enumerate_endos, invert_endo
from .semidirect import SdProduct, make_action, semidirect
from .verify import CHECK_NAMES, run_verification

__all__ = ["cli_main", "main"]


def _add_source_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--instance", help="catalog instance, e.g. dihedral:3")
    parser.add_argument("--group-h", help="JSON file for the acted-on factor")
    parser.add_argument("--group-k", help="JSON file for the acting factor")
    parser.add_argument("--action", help="JSON file with the action images")
    parser.add_argument("--bound", type=int, default=64, help="size guard (default 64)")


def _add_format_arg(parser: argparse.ArgumentParser, default: str) -> None:
    parser.add_argument("--format", choices=("json", "text"), default=default)


def _resolve_product(args: argparse.Namespace) -> SdProduct:
    if args.instance:
        return build_instance(args.instance)
    if args.action and args.group_h and args.group_k:
        H = load_group(args.group_h)
        K = load_group(args.group_k)
        with open(args.action, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        images = data["images"] if isinstance(data, dict) else data
        action = make_action(H, K, images)
        name = Path(args.action).stem
        return semidirect(action, name=name)
    if args.action:
        # Self-contained action file naming or embedding both factors.
        return semidirect(load_action(args.action), name=Path(args.action).stem)
    raise ValueError("give --instance or --group-h/--group-k/--action")


def _load_matrix_checked(path: str, product: SdProduct) -> EndoMatrix:
    matrix = load_matrix(path, product)
    report = check_conditions(matrix)
    if not report.ok:
        failed = report.first_failure()
        raise ValueError(f"matrix violates condition {failed.name}: witness {failed.witness}")
    return matrix


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _cmd_enumerate(args: argparse.Namespace) -> int:
    product = _resolve_product(args)
    mats = enumerate_matrices(product, bound=args.bound, exhaustive=args.exhaustive)
    mats.sort(key=lambda m: m.key())
    autos = [m for m in mats if matrix_to_endo(m).map.is_bijective]
    payload = {
        "instance": product.name,
        "group_order": product.group.order,
        "count": len(mats),
        "aut_count": len(autos),
        "matrices": [matrix_to_dict(m) for m in mats],
    }
    lines = [
        f"instance {product.name}: order {product.group.order}, "
        f"{len(mats)} endomorphisms, {len(autos)} automorphisms"
    ]
    _emit(args, payload, lines)
    return 0


def _det_side(result) -> tuple[list[int] | None, bool | None]:
    if result is None:
        return None, None
    return list(result.value.image), result.is_hom


def _cmd_det(args: argparse.Namespace) -> int:
    product = _resolve_product(args)
    matrix = _load_matrix_checked(args.matrix, product)
    dh = det_h(matrix) if matrix.delta.is_bijective else None
    dk = det_k(matrix) if matrix.alpha.is_bijective else None
    decided = is_invertible(matrix)
    inverse = _invert_any(matrix) if decided.invertible else None
    dh_image, dh_hom = _det_side(dh)
    dk_image, dk_hom = _det_side(dk)
    payload = {
        "det_H": dh_image,
        "det_K": dk_image,
        "invertible": decided.invertible,
        "is_hom_H": dh_hom,
        "is_hom_K": dk_hom,
        "inverse": matrix_to_dict(inverse[0]) if inverse else None,
    }
    lines = [
        f"det_H: {dh_image if dh_image is not None else 'undefined (delta not bijective)'}",
        f"det_K: {dk_image if dk_image is not None else 'undefined (alpha not bijective)'}",
        f"invertible: {decided.invertible} (method {decided.method})",
    ]
    _emit(args, payload, lines)
    return 0


def _invert_any(matrix: EndoMatrix) -> tuple[EndoMatrix, str] | None:
    try:
        return invert_via_det_k(matrix), "det_k"
    except (AlphaNotInvertible, DetKNotInvertible):
        pass
    try:
        return invert_via_det_h(matrix), "det_h"
    except (DeltaNotInvertible, DetHNotInvertible):
        pass
    theta = matrix_to_endo(matrix)
    if not theta.map.is_bijective:
        return None
    return endo_to_matrix(invert_endo(theta), matrix.context), "brute"


def _cmd_invert(args: argparse.Namespace) -> int:
    product = _resolve_product(args)
    matrix = _load_matrix_checked(args.matrix, product)
    found = _invert_any(matrix)
    if found is None:
        _emit(args, {"invertible": False, "inverse": None, "method": None}, ["not invertible"])
        return 1
    inverse, method = found
    payload = {"invertible": True, "method": method, "inverse": matrix_to_dict(inverse)}
    _emit(args, payload, [f"inverted via {method}", json.dumps(matrix_to_dict(inverse), sort_keys=True)])
    return 0


def _cmd_factor(args: argparse.Namespace) -> int:
    product = _resolve_product(args)
    matrix = _load_matrix_checked(args.matrix, product)
    try:
        factors = factor_abcd(matrix)
    except (NotAutomorphismMatrix, DiagonalNotInvertible) as err:
        _emit(args, {"factored": False, "reason": str(err)}, [f"not factorable: {err}"])
        return 1
    verified = factors.product() == matrix and all(
        (
            classify(factors.a).in_a,
            classify(factors.b).in_b,
            classify(factors.c).in_c,
            classify(factors.d).in_d,
        )
    )
    payload = {
        "factored": True,
        "verified": verified,
        "a": matrix_to_dict(factors.a),
        "b": matrix_to_dict(factors.b),
        "c": matrix_to_dict(factors.c),
        "d": matrix_to_dict(factors.d),
    }
    lines = [f"factored; verified={verified}"]
    for letter in ("a", "b", "c", "d"):
        lines.append(f"{letter}: {json.dumps(payload[letter], sort_keys=True)}")
    _emit(args, payload, lines)
    return 0 if verified else 1


def _cmd_census(args: argparse.Namespace) -> int:
    product = _resolve_product(args)
    census = enumerate_endos(product.group, bound=args.bound)
    payload = {
        "instance": product.name,
        "group_order": product.group.order,
        "end": census.n_endos,
        "aut": census.n_autos,
    }
    lines = [
        f"instance {product.name}: order {product.group.order}, "
        f"{census.n_endos} endomorphisms, {census.n_autos} automorphisms"
    ]
    _emit(args, payload, lines)
    return 0


def _verify_worker(name: str, bound: int, checks: str | list[str]):
    return run_verification(name, bound=bound, checks=checks)


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.theorems == "all":
        checks: str | list[str] = "all"
    else:
        checks = [c.strip() for c in args.theorems.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECK_NAMES]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}; known: {', '.join(CHECK_NAMES)}")
    if args.instance in (None, "all"):
        if args.action or args.group_h:
            reports = [run_verification(_resolve_product(args), bound=args.bound, checks=checks)]
        else:
            names = list(DEFAULT_INSTANCES)
            worker = functools.partial(_verify_worker, bound=args.bound, checks=checks)
            if args.jobs and args.jobs > 1:
                with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                    reports = list(pool.map(worker, names))
            else:
                reports = [worker(name) for name in names]
    else:
        reports = [run_verification(args.instance, bound=args.bound, checks=checks)]
    passed = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "instances": [r.to_dict(include_timing=args.timing) for r in reports],
            "passed": passed,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        blocks = [r.to_text(include_timing=args.timing) for r in reports]
        print("\n\n".join(blocks))
        failed = [r.instance for r in reports if not r.passed]
        summary = f"{len(reports)} instance(s) verified"
        if failed:
            summary += f"; FAILED: {', '.join(failed)}"
        print(summary)
    return 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdmat",
        description="Endomorphism matrices, determinants and factorizations "
        "of semidirect products of finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all endomorphism matrices")
    _add_source_args(p)
    _add_format_arg(p, "json")
    p.add_argument("--exhaustive", action="store_true", help="slow full map-space scan")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("det", help="determinants and invertibility of a matrix")
    _add_source_args(p)
    _add_format_arg(p, "json")
    p.add_argument("--matrix", required=True, help="matrix JSON file")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("invert", help="closed-form inverse of a matrix")
    _add_source_args(p)
    _add_format_arg(p, "json")
    p.add_argument("--matrix", required=True, help="matrix JSON file")
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("factor", help="a*b*c*d factorization of an automorphism matrix")
    _add_source_args(p)
    _add_format_arg(p, "json")
    p.add_argument("--matrix", required=True, help="matrix JSON file")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("census", help="oracle endomorphism/automorphism counts")
    _add_source_args(p)
    _add_format_arg(p, "json")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="run the named-check harness")
    _add_source_args(p)
    _add_format_arg(p, "text")
    p.add_argument("--theorems", default="all", help="'all' or comma-separated check names")
    p.add_argument("--jobs", type=int, default=1, help="parallel instances")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing")
    p.set_defaults(func=_cmd_verify)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except SdmatError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
