"""Command-line verification front end.

One subcommand per claim: ``table`` (structure checks), ``identities``
(exact composition-algebra suite), ``expand`` (symbolic Maxwell
equivalence), ``planewave`` (numeric annihilation/discrimination) and
``derivations`` (g2 dimension and automorphism predicates).  Exit code 0
means every check passed, 1 means a check failed, 2 means the invocation
or a precondition was invalid.  ``--format json`` emits one
machine-readable report on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    AlgebraKind,
    StructureTable,
    associativity_witness,
    check_identities,
)
from .derivations import (
    LinearMap7,
    derivation_space,
    is_automorphism,
    is_derivation,
)
from .numeric import (
    GROUP_SLOTS,
    PlaneWave,
    PolynomialField,
    evaluate_dF,
    fd_derivatives,
    sample_points,
)
from .symbolic import verify_expansion

SCHEMA_VERSION = 1

_KIND_NAMES = {
    "octonion": AlgebraKind.OCTONION,
    "split": AlgebraKind.SPLIT_OCTONION,
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def _vector3(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated values, got {text!r}")
    return tuple(float(p) for p in parts)


def _index_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected I,J")
    i, j = (int(p) for p in parts)
    if not (1 <= i <= 7 and 1 <= j <= 7):
        raise argparse.ArgumentTypeError("indices must be in 1..7")
    return i, j


class Report:
    """Accumulates named checks plus extra payload for one subcommand."""

    def __init__(self, command: str, algebra: str, config: dict):
        self.command = command
        self.algebra = algebra
        self.config = config
        self.checks: list[dict] = []
        self.extras: dict = {}
        self.notes: list[str] = []

    def add_check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append({
            "name": name,
            "status": "pass" if passed else "fail",
            "detail": detail,
        })
        return passed

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def to_json(self) -> dict:
        payload = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "algebra": self.algebra,
            "config": self.config,
            "checks": self.checks,
        }
        payload.update(self.extras)
        if self.notes:
            payload["notes"] = self.notes
        return payload

    def emit(self, fmt: str, text_lines: list[str]) -> None:
        if fmt == "json":
            print(json.dumps(self.to_json(), indent=2))
            return
        for line in text_lines:
            print(line)
        for check in self.checks:
            mark = "PASS" if check["status"] == "pass" else "FAIL"
            detail = f" — {check['detail']}" if check["detail"] else ""
            print(f"[{mark}] {check['name']}{detail}")
        for note in self.notes:
            print(f"note: {note}")


def cmd_table(args) -> int:
    kind = _KIND_NAMES[args.algebra]
    table = StructureTable.for_kind(kind)
    if args.flip_sign:
        table = table.with_flipped_sign(*args.flip_sign)
    report = Report("table", args.algebra, {"flip_sign": list(args.flip_sign or ())})

    lines = [f"multiplication table ({args.algebra}), rows*columns:"]
    rendered = table.rows_rendered()
    header = "      " + "".join(f"{f'e{j}':>6}" for j in range(1, 8))
    lines.append(header)
    for i, row in enumerate(rendered, start=1):
        lines.append(f"  e{i}  " + "".join(f"{cell:>6}" for cell in row))

    problems = table.structural_failures()
    report.add_check("antisymmetry_closure_diagonal", not problems,
                     "; ".join(problems[:4]))
    report.extras["table"] = rendered
    report.emit(args.format, lines)
    return 0 if report.ok else 1


def cmd_identities(args) -> int:
    kind = _KIND_NAMES[args.algebra]
    identity_report = check_identities(kind, trials=args.trials, seed=args.seed)
    report = Report("identities", args.algebra,
                    {"trials": args.trials, "seed": args.seed,
                     "expect_associativity": bool(args.expect_associativity)})
    for check in identity_report.checks:
        report.add_check(check.name, check.holds,
                         check.counterexample or f"{check.trials} cases")
    if args.expect_associativity:
        x, y, z, witness = associativity_witness(kind)
        report.add_check(
            "associativity", witness.is_zero,
            f"associator({x}, {y}, {z}) = {witness}")
    report.emit(args.format, [f"identity suite ({args.algebra}):"])
    return 0 if report.ok else 1


def cmd_expand(args) -> int:
    kind = _KIND_NAMES[args.algebra]
    verdict = verify_expansion(kind, with_S=args.with_S, with_F0=args.with_F0)
    report = Report("expand", args.algebra,
                    {"with_S": bool(args.with_S), "with_F0": bool(args.with_F0)})

    lines = [f"operator expansion via the algebra product ({args.algebra}):"]
    lines += [f"  {line}" for line in verdict.expanded.render_lines()]
    lines.append("vector-calculus construction:")
    lines += [f"  {line}" for line in verdict.expected.render_lines()]

    report.add_check("expansion_matches_vector_calculus", verdict.ok,
                     "; ".join(verdict.mismatches[:4]))
    report.extras["decomposition"] = verdict.expanded.to_json()
    if kind is AlgebraKind.OCTONION:
        report.notes.append(
            "upper-sign algebra: the q_vec block carries -dB/dt, so dF = 0 "
            "is not Faraday's law; only the split algebra reproduces Maxwell"
        )
    if args.with_F0:
        report.notes.append(
            "F0 terms (grad F0 in q_vec, dF0/dt on e7) extend the displayed "
            "expansion to magnetic sources; derived here, not quoted"
        )
    report.emit(args.format, lines)
    return 0 if report.ok else 1


def cmd_planewave(args) -> int:
    config = {
        "k": list(args.k), "eps": list(args.eps), "points": args.points,
        "seed": args.seed, "tolerance": args.tolerance, "floor": args.floor,
        "zero_field": bool(args.zero_field), "fd_check": bool(args.fd_check),
    }
    report = Report("planewave", "both", config)
    field = PolynomialField.zero() if args.zero_field else PlaneWave(args.k, args.eps)
    pts = sample_points(args.points, args.seed)

    residuals = {}
    for name, kind in _KIND_NAMES.items():
        residuals[name] = evaluate_dF(kind, field, pts, seed=args.seed)
    report.extras["residuals"] = {
        name: rep.to_json() for name, rep in residuals.items()
    }

    split_rep = residuals["split"]
    oct_rep = residuals["octonion"]
    if args.zero_field:
        report.add_check(
            "zero_field_all_groups_zero",
            split_rep.max_abs == 0.0 and oct_rep.max_abs == 0.0,
            f"split max {split_rep.max_abs:g}, octonion max {oct_rep.max_abs:g}")
    else:
        report.add_check(
            "split_annihilates_plane_wave",
            split_rep.max_abs <= args.tolerance,
            f"max residual {split_rep.max_abs:.3e} vs tolerance {args.tolerance:g}")
        report.add_check(
            "octonion_q_vec_residual_above_floor",
            oct_rep.group_max["q_vec"] >= args.floor,
            f"q_vec residual {oct_rep.group_max['q_vec']:.6f} vs floor {args.floor:g}")

    if args.fd_check:
        fd = fd_derivatives(field, pts[: min(64, len(pts))])
        analytic = field.derivatives(pts[: min(64, len(pts))])
        worst = float(abs(fd - analytic).max())
        report.add_check("finite_difference_agrees_with_analytic",
                         worst <= 1e-6, f"max deviation {worst:.3e}")

    lines = ["plane-wave residuals (max |dF| per group):"]
    for name, rep in residuals.items():
        groups = ", ".join(f"{g}={rep.group_max[g]:.3e}" for g in GROUP_SLOTS)
        lines.append(f"  {name}: {groups}")
    report.emit(args.format, lines)
    return 0 if report.ok else 1


def cmd_derivations(args) -> int:
    kind = _KIND_NAMES[args.algebra]
    basis = derivation_space(kind)
    report = Report("derivations", args.algebra, {})
    report.extras["dimension"] = len(basis)
    report.extras["basis"] = [m.render_rows() for m in basis]

    report.add_check("derivation_dimension_is_14", len(basis) == 14,
                     f"dimension {len(basis)}")
    bad = [i for i, m in enumerate(basis) if not is_derivation(kind, m)]
    report.add_check("basis_satisfies_leibniz", not bad,
                     f"failing basis indices: {bad}" if bad else f"{len(basis)} vectors")
    report.add_check("identity_is_automorphism",
                     bool(is_automorphism(kind, LinearMap7.identity())))
    swap = LinearMap7.basis_swap(1, 2)
    swap_verdict = is_automorphism(kind, swap)
    report.add_check("e1_e2_swap_rejected", not swap_verdict.ok,
                     swap_verdict.failures[0] if swap_verdict.failures else "")

    lines = [f"derivation space ({args.algebra}): dimension {len(basis)}"]
    report.emit(args.format, lines)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitoct",
        description="verify the split-octonion form of the vacuum Maxwell equations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, algebra=True):
        if algebra:
            p.add_argument("--algebra", choices=sorted(_KIND_NAMES), default="split",
                           help="which algebra to use (default: split)")
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default: text)")

    p_table = sub.add_parser("table", help="print the multiplication table and check it")
    add_common(p_table)
    p_table.add_argument("--flip-sign", type=_index_pair, default=None,
                         help=argparse.SUPPRESS)  # corruption hook for tests
    p_table.set_defaults(func=cmd_table)

    p_id = sub.add_parser("identities", help="run the exact identity suite")
    add_common(p_id)
    p_id.add_argument("--trials", type=_positive_int, default=1000)
    p_id.add_argument("--seed", type=int, default=42)
    p_id.add_argument("--expect-associativity", action="store_true",
                      help="also demand full associativity (fails, with witness)")
    p_id.set_defaults(func=cmd_identities)

    p_expand = sub.add_parser("expand", help="symbolic operator expansion vs vector calculus")
    add_common(p_expand)
    p_expand.add_argument("--with-S", dest="with_S", action="store_true",
                          help="include the scalar source S on e7")
    p_expand.add_argument("--with-F0", dest="with_F0", action="store_true",
                          help="include the real part F0")
    p_expand.set_defaults(func=cmd_expand)

    p_pw = sub.add_parser("planewave", help="numeric plane-wave residuals, both algebras")
    add_common(p_pw, algebra=False)
    p_pw.add_argument("--k", type=_vector3, default=(0.0, 0.0, 1.0),
                      help="wave vector kx,ky,kz (default 0,0,1)")
    p_pw.add_argument("--eps", type=_vector3, default=(1.0, 0.0, 0.0),
                      help="polarization ex,ey,ez (default 1,0,0)")
    p_pw.add_argument("--points", type=_positive_int, default=1000)
    p_pw.add_argument("--seed", type=int, default=42)
    p_pw.add_argument("--tolerance", type=_positive_float, default=1e-10,
                      help="split residual bound (default 1e-10)")
    p_pw.add_argument("--floor", type=_positive_float, default=0.1,
                      help="octonion q_vec discrimination floor (default 0.1)")
    p_pw.add_argument("--zero-field", action="store_true",
                      help="evaluate the zero field instead (null control)")
    p_pw.add_argument("--fd-check", action="store_true",
                      help="debug: compare analytic derivatives with finite differences")
    p_pw.set_defaults(func=cmd_planewave)

    p_der = sub.add_parser("derivations", help="derivation dimension and automorphism checks")
    add_common(p_der)
    p_der.set_defaults(func=cmd_derivations)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
