"""
Command line front end.

    dihedral-dilog chords     --n 6 [--format json]
    dihedral-dilog verify     --n 9 --samples 100 --seed 0 --tol 1e-10 --margin 1e-3
    dihedral-dilog wedge      --n 20
    dihedral-dilog certify    --n 8 --samples 50 --out cert.json
    dihedral-dilog degenerate --n 5 --chord 1,4

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chords import Chord, crossing_set, enumerate_chords
from .coords import dihedral_coords, sample_cell
from .errors import DihedralDilogError
from .reduction import build_certificate, eq_constant, eqn_residuals, verify_certificate
from .relations import check_chord_relation, degenerate, symbol_to_json, wedge_sum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(out)
    else:
        sys.stdout.write(out)


def _fmt_chords(chords) -> str:
    return " ".join(str(c) for c in sorted(chords))


def cmd_chords(args) -> int:
    chords = enumerate_chords(args.n)
    rows = [{"chord": c.to_json(), "crossing": [d.to_json() for d in sorted(crossing_set(c))]} for c in chords]
    lines = [f"{len(chords)} chords of the {args.n}-gon"]
    lines += [f"  {c}  crosses  {_fmt_chords(crossing_set(c))}" for c in chords]
    _emit(args, {"n": args.n, "count": len(chords), "chords": rows}, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    n = args.n
    residuals = eqn_residuals(n, args.samples, args.seed, args.margin)
    worst_offset = max(range(len(residuals)), key=residuals.__getitem__) if residuals else None
    worst = residuals[worst_offset] if residuals else 0.0
    chord_worst = 0.0
    for s in range(args.samples):
        m = dihedral_coords(sample_cell(n, args.seed + s, args.margin))
        chord_worst = max(chord_worst, max(abs(check_chord_relation(c, m)) for c in m))
    ok = worst <= args.tol and chord_worst <= args.tol
    const = eq_constant(n)
    payload = {
        "n": n,
        "samples": args.samples,
        "seed": args.seed,
        "tol": args.tol,
        "margin": args.margin,
        "constant_L1": f"{const.numerator}/{const.denominator}",
        "max_residual": worst,
        "worst_sample_offset": worst_offset,
        "max_chord_residual": chord_worst,
        "pass": ok,
    }
    text = (
        f"Eq_{n}: sum of L(u) = {const} L(1) over {args.samples} samples (seed {args.seed})\n"
        f"  max residual {worst:.3e} at sample offset {worst_offset}\n"
        f"  max chord relation residual {chord_worst:.3e}\n"
        f"  {'PASS' if ok else 'FAIL'} (tol {args.tol:.1e})"
    )
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_wedge(args) -> int:
    total = wedge_sum(args.n)
    ok = total.is_zero()
    payload = {"n": args.n, "zero": ok, "terms": total.to_json()}
    if ok:
        text = f"wedge sum for n={args.n}: 0 (exact)"
    else:
        text = "\n".join(
            [f"wedge sum for n={args.n} is NOT zero:"]
            + [f"  {c:+d} {a} ^ {b}" for (a, b), c in sorted(total.items())]
        )
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_certify(args) -> int:
    cert = build_certificate(args.n)
    report = verify_certificate(cert, args.samples, args.tol, args.seed, args.margin)
    lines = [
        f"certificate for Eq_{args.n} ({cert.case} case): {len(cert.instances)} instances",
        f"  constants: {report.constant} L(1), {'ok' if report.constant_ok else 'WRONG'}",
        f"  structural: {'pass' if report.structural_ok else 'FAIL'}",
        f"  numeric ({args.samples} samples): worst instance residual {report.worst_instance_residual:.3e}, "
        f"combination residual {report.worst_combination_residual:.3e}",
    ]
    lines += [f"  ! {p}" for p in report.problems]
    summary = "\n".join(lines) + "\n"
    # the certificate always goes to --out; the summary to stdout unless stdout carries JSON
    cert_json = json.dumps(cert.to_json(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(cert_json)
    if args.format == "json":
        if not args.out:
            sys.stdout.write(cert_json)
        sys.stderr.write(summary)
    else:
        sys.stdout.write(summary)
    return EXIT_OK if report.ok else EXIT_FAIL


def _parse_chord(text: str, n: int) -> Chord:
    parts = text.replace("{", "").replace("}", "").split(",")
    if len(parts) != 2:
        raise DihedralDilogError(f"chord must look like 'i,j', got {text!r}")
    i, j = (int(p) for p in parts)
    if not (1 <= i <= n and 1 <= j <= n):
        raise DihedralDilogError(f"chord {text!r} has indices outside 1..{n}")
    return Chord(i, j, n)


def cmd_degenerate(args) -> int:
    c = _parse_chord(args.chord, args.n)
    res = degenerate(c, args.n)
    n1, n2 = res.sizes
    payload = {
        "n": args.n,
        "chord": c.to_json(),
        "forced_one": symbol_to_json(res.forced_one),
        "sizes": [n1, n2],
        "split": [list(v) for v in res.split],
        "residual_relations": [
            [{"left": symbol_to_json(a), "right": symbol_to_json(b)} for a, b in fam] for fam in res.residual_relations
        ],
        "reflection": res.is_reflection(),
    }
    lines = [
        f"u_{{{c.i},{c.j}}} = 0 on the {args.n}-gon",
        "  forced to 1: " + ", ".join(f"u_{{{d.i},{d.j}}}" for d in sorted(res.forced_one)),
        f"  splits into polygons of sizes ({n1}, {n2}), n1 + n2 = {n1 + n2} = n + 2",
    ]
    for verts, fam in zip(res.split, res.residual_relations):
        lines.append(f"  polygon {verts}: {len(fam)} relations")
        for a, b in fam:
            lhs = " ".join(f"u_{{{d.i},{d.j}}}" for d in sorted(a))
            rhs = " ".join(f"u_{{{d.i},{d.j}}}" for d in sorted(b))
            lines.append(f"    {lhs} + {rhs} = 1")
    if res.is_reflection():
        lines.append("  the surviving relation is the reflection L(x) + L(1-x) = L(1)")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of marked points (n >= 4)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int, default=100)
    sampling.add_argument("--seed", type=int, default=0)
    sampling.add_argument("--tol", type=float, default=1e-10)
    sampling.add_argument("--margin", type=float, default=1e-3)

    parser = argparse.ArgumentParser(prog="dihedral-dilog", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("chords", parents=[common], help="list chords and crossing sets").set_defaults(func=cmd_chords)
    sub.add_parser("verify", parents=[common, sampling], help="numeric check of Eq_n").set_defaults(func=cmd_verify)
    sub.add_parser("wedge", parents=[common], help="exact wedge cancellation").set_defaults(func=cmd_wedge)
    sub.add_parser("certify", parents=[common, sampling], help="build and check a reduction certificate").set_defaults(
        func=cmd_certify
    )
    deg = sub.add_parser("degenerate", parents=[common], help="specialise one coordinate to 0")
    deg.add_argument("--chord", required=True, help="chord as 'i,j'")
    deg.set_defaults(func=cmd_degenerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 1) < 0:
        parser.error("--samples must be non-negative")
    try:
        return args.func(args)
    except (DihedralDilogError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
