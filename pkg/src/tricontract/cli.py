"""Command-line front-end.

Subcommands: check, disk, fuzz, mobius, norm.  Exit codes: 0 means
contraction/success, 1 means not a contraction, 2 means usage, parse, or
domain error.  Malformed input never produces a traceback.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .core import (
    DomainError,
    ParseError,
    RangeError,
    Tolerances,
    TriMatrix3,
    TriMatrix4,
    parse_matrix,
    serialize_matrix,
    to_dense,
)
from .criteria import beta_disk_3x3, check_contraction_3x3, check_contraction_4x4, gamma_disk
from .fuzz import DISTRIBUTIONS, run_fuzz
from .mobius import mobius_transform_dense, mobius_transform_triangular
from .oracle import is_contraction_oracle, operator_norm
from .parrott import ParrottBlocks, parrott_corner_disk

EXIT_CONTRACTION = 0
EXIT_NOT_CONTRACTION = 1
EXIT_ERROR = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricontract",
        description="Contraction tests and corner-completion disks for triangular 3x3/4x4 complex matrices.",
    )
    parser.add_argument("--tol-boundary", type=float, default=1e-9, metavar="F")
    parser.add_argument("--tol-psd", type=float, default=1e-12, metavar="F")
    parser.add_argument("--tol-residual", type=float, default=1e-10, metavar="F")
    parser.add_argument("--json", action="store_true", help="emit a single JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide whether a triangular record is a contraction")
    p_check.add_argument("file")
    p_check.add_argument("--size", choices=["3", "4", "auto"], default="auto")

    p_disk = sub.add_parser("disk", help="feasibility disk for the missing corner entry")
    p_disk.add_argument("file")
    p_disk.add_argument(
        "--cross-check",
        action="store_true",
        help="re-derive the 4x4 disk through the Mobius-transformed completion blocks",
    )

    p_fuzz = sub.add_parser("fuzz", help="criterion-vs-oracle fuzzing on random records")
    p_fuzz.add_argument("--trials", type=int, default=1000)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--dist", choices=list(DISTRIBUTIONS), default="uniform-ball")

    p_mob = sub.add_parser("mobius", help="apply the Mobius transform to a 4x4 record")
    p_mob.add_argument("omega", help='parameter as "re,im"')
    p_mob.add_argument("file")
    p_mob.add_argument("--dense", action="store_true", help="also print the dense-path result")

    p_norm = sub.add_parser("norm", help="operator norm of a triangular or dense matrix")
    p_norm.add_argument("file")
    return parser


def _tolerances(args) -> Tolerances:
    return Tolerances(boundary=args.tol_boundary, psd=args.tol_psd, residual=args.tol_residual)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None


def _emit(args, obj: dict, human_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _cmd_check(args) -> int:
    tol = _tolerances(args)
    t = parse_matrix(_read(args.file))
    if args.size != "auto" and int(args.size) != t.size:
        raise ParseError(f"file holds a {t.size}x{t.size} record but --size {args.size} was requested")
    verdict = check_contraction_3x3(t, tol) if t.size == 3 else check_contraction_4x4(t, tol)
    oracle = is_contraction_oracle(to_dense(t), tol)
    norm = math.sqrt(max(0.0, 1.0 - oracle.residuals["min_eig_defect"]))
    obj = {
        "is_contraction": verdict.is_contraction,
        "branch": verdict.branch,
        "residuals": verdict.residuals,
        "notes": list(verdict.notes),
        "oracle": {"is_contraction": oracle.is_contraction, "operator_norm": norm},
    }
    lines = [
        f"verdict: {'contraction' if verdict.is_contraction else 'NOT a contraction'}",
        f"branch: {verdict.branch}",
    ]
    lines += [f"  residual {k}: {v:.12g}" for k, v in verdict.residuals.items()]
    lines += [f"  note: {n}" for n in verdict.notes]
    lines.append(
        f"oracle: {'contraction' if oracle.is_contraction else 'NOT a contraction'}"
        f" (operator norm {norm:.15g})"
    )
    _emit(args, obj, lines)
    return EXIT_CONTRACTION if verdict.is_contraction else EXIT_NOT_CONTRACTION


def _cross_check_disk(t: TriMatrix4, tol: Tolerances):
    """Corner disk re-derived through the Mobius image and completion blocks.

    Transforming by the omega3 diagonal entry zeroes that entry, after which
    the corner of the image is an affine function of gamma; pulling the
    completion disk back through that map must reproduce gamma_disk.
    """
    w3 = t.omega[2]
    if abs(w3) >= 1.0 - 1e-9:
        raise DomainError("cross-check requires |omega3| < 1")
    image = mobius_transform_triangular(w3, t.with_gamma(0.0))
    shift = image.gamma  # corner of the image at gamma = 0
    slope = mobius_transform_triangular(w3, t.with_gamma(1.0)).gamma - shift
    blocks = ParrottBlocks.from_matrix(to_dense(image))
    disk = parrott_corner_disk(blocks, tol)
    if disk.empty:
        return disk
    return type(disk)(
        center=(disk.center - shift) / slope,
        radius=disk.radius / abs(slope),
        notes=disk.notes,
    )


def _disk_obj(disk) -> dict:
    if disk.empty:
        return {"empty": True, "notes": list(disk.notes)}
    return {
        "empty": False,
        "center": [disk.center.real, disk.center.imag],
        "radius": disk.radius,
        "notes": list(disk.notes),
    }


def _disk_lines(disk, label: str = "disk") -> list[str]:
    if disk.empty:
        lines = [f"{label}: EMPTY"]
    else:
        lines = [f"{label}: center ({disk.center.real:.12g}, {disk.center.imag:.12g}) radius {disk.radius:.12g}"]
    return lines + [f"  note: {n}" for n in disk.notes]


def _cmd_disk(args) -> int:
    tol = _tolerances(args)
    t = parse_matrix(_read(args.file), require_corner=False)
    if t.size == 4:
        disk = gamma_disk(t, tol)
    else:
        disk = beta_disk_3x3(t, tol)
    obj = _disk_obj(disk)
    lines = _disk_lines(disk)
    if args.cross_check:
        if t.size != 4:
            raise ParseError("--cross-check applies to 4x4 records only")
        other = _cross_check_disk(t, tol)
        obj["cross_check"] = _disk_obj(other)
        lines += _disk_lines(other, label="cross-check disk")
    _emit(args, obj, lines)
    return EXIT_CONTRACTION


def _cmd_fuzz(args) -> int:
    report = run_fuzz(args.trials, args.seed, args.dist, _tolerances(args))
    obj = report.to_dict()
    lines = [
        f"trials: {report.trials}",
        f"agreements: {report.agreements}",
        f"skipped in band: {report.skipped}",
        f"disagreements: {len(report.disagreements)}",
        f"seed: {report.seed}  dist: {report.dist}  elapsed: {report.elapsed:.2f}s",
    ]
    for d in report.disagreements:
        lines.append(
            f"  DISAGREE criterion={d.criterion_contraction} oracle={d.oracle_contraction}"
            f" norm={d.oracle_norm:.12g} input={d.replay_json()}"
        )
    _emit(args, obj, lines)
    return EXIT_CONTRACTION if not report.disagreements else EXIT_NOT_CONTRACTION


def _cmd_mobius(args) -> int:
    try:
        re_s, im_s = args.omega.split(",")
        omega = complex(float(re_s), float(im_s))
    except ValueError:
        raise ParseError(f'omega must be "re,im", got {args.omega!r}') from None
    if abs(omega) >= 1.0:
        raise DomainError(f"|omega| = {abs(omega)} must be < 1")
    t = parse_matrix(_read(args.file))
    if not isinstance(t, TriMatrix4):
        raise ParseError("mobius expects a 4x4 record")
    image = mobius_transform_triangular(omega, t)
    obj = {"triangular": json.loads(serialize_matrix(image))}
    lines = [serialize_matrix(image)]
    if args.dense:
        dense = mobius_transform_dense(omega, to_dense(t))
        obj["dense"] = [[[z.real, z.imag] for z in row] for row in dense]
        gap = float(np.abs(dense - to_dense(image)).max())
        obj["max_entry_gap"] = gap
        lines.append(f"dense-path max entry gap: {gap:.3e}")
    _emit(args, obj, lines)
    return EXIT_CONTRACTION


def _parse_norm_input(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if isinstance(doc, dict) and "dense" in doc:
        rows = doc["dense"]
        if not isinstance(rows, list) or not rows:
            raise ParseError("field 'dense' must be a non-empty nested array")
        try:
            m = np.array(
                [[complex(float(p[0]), float(p[1])) for p in row] for row in rows],
                dtype=complex,
            )
        except (TypeError, ValueError, IndexError):
            raise ParseError("field 'dense' must hold rows of [re, im] pairs") from None
        if m.ndim != 2 or not np.all(np.isfinite(m.view(float))):
            raise RangeError("field 'dense' holds a ragged or non-finite matrix")
        return m
    return to_dense(parse_matrix(text))


def _cmd_norm(args) -> int:
    m = _parse_norm_input(_read(args.file))
    norm = operator_norm(m)
    _emit(args, {"operator_norm": norm}, [f"{norm:.15g}"])
    return EXIT_CONTRACTION


_COMMANDS = {
    "check": _cmd_check,
    "disk": _cmd_disk,
    "fuzz": _cmd_fuzz,
    "mobius": _cmd_mobius,
    "norm": _cmd_norm,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, RangeError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
