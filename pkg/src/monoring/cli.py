"""Command-line front end.

Ideal files look like::

    # the triangle
    vars: a b c
    a*b
    b*c
    a*c

``vars: t=3`` names the variables x1..x3. Monomials use ``a^2*b`` syntax or
exponent vectors ``[2,1,0]``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import delta_prime
from .errors import MonoringError, ParseError
from .homology import FieldSpec
from .lattices import enumerate_saturated
from .monomials import GeneratorSet, bits, connected_components, lcm_of, normalize_generators, parse_monomial
from .oracle import verify_main_identity
from .poincare import (
    betti_numerator,
    denominator,
    denominator_via_deviations,
    denominator_via_intervals,
    golod_rhs,
    is_golod,
    poincare_series,
    polarize,
    pre_golod_failures,
    squarefree_deviations,
)

ROUTES = {
    "formula": denominator,
    "intervals": denominator_via_intervals,
    "deviations": denominator_via_deviations,
}


def parse_ideal(text: str) -> GeneratorSet:
    names = None
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            if not line.startswith("vars:"):
                raise ParseError("expected a 'vars:' header", lineno)
            header = line[len("vars:"):].split()
            if len(header) == 1 and header[0].startswith("t="):
                try:
                    t = int(header[0][2:])
                except ValueError:
                    raise ParseError(f"bad variable count {header[0]!r}", lineno) from None
                names = [f"x{i + 1}" for i in range(t)]
            else:
                names = header
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable names", lineno)
            if "z" in names:
                raise ParseError("'z' is reserved for the homological variable", lineno)
            continue
        try:
            raw.append(parse_monomial(line, names))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    if names is None:
        raise ParseError("empty ideal file (no 'vars:' header)")
    return normalize_generators(raw, t=len(names), names=names)


def read_ideal(path: str) -> GeneratorSet:
    if path == "-":
        return parse_ideal(sys.stdin.read())
    with open(path) as fh:
        return parse_ideal(fh.read())


def _poly_out(p, names, as_json):
    return json.dumps(p.to_json()) if as_json else p.to_str(names)


def _cmd_denominator(M, args):
    return _poly_out(ROUTES[args.path](M, args.field), M.names, args.json)


def _cmd_series(M, args):
    return _poly_out(poincare_series(M, args.field, args.trunc_z, args.trunc_deg), M.names, args.json)


def _cmd_betti(M, args):
    return _poly_out(betti_numerator(M, args.field), M.names, args.json)


def _cmd_golod(M, args):
    golod = is_golod(M, args.field)
    failing = pre_golod_failures(M, args.field)
    if golod != (not failing):
        raise AssertionError("Golod definition and pre-Golod criterion disagree")
    described = [
        {"m": M.format(m), "generators": [M.format(g) for g in M.gens if all(a <= b for a, b in zip(g, m))]}
        for m in failing
    ]
    if args.json:
        return json.dumps({"golod": golod, "failing": described})
    lines = ["true" if golod else "false"]
    for d in described:
        lines.append(f"not pre-Golod: M_{d['m']} = {{{', '.join(d['generators'])}}}")
    if not golod:
        lines.append(f"b_R       = {denominator(M, args.field).to_str(M.names)}")
        lines.append(f"1-z(P-1)  = {golod_rhs(M, args.field).to_str(M.names)}")
    return "\n".join(lines)


def _cmd_deviations(M, args):
    dev = squarefree_deviations(M, args.field)
    rows = []
    for alpha, p in sorted(dev.p.items(), key=lambda kv: (sum(kv[0]), tuple(-a for a in kv[0]))):
        if p:
            rows.append({"alpha": list(alpha), "monomial": M.format(alpha), "eps": {str(i): c for i, c in p.items()}})
    if args.json:
        return json.dumps(rows)
    return "\n".join(
        f"{r['monomial']}: " + ", ".join(f"eps_{i} = {c}" for i, c in r["eps"].items()) for r in rows
    )


def _cmd_saturated(M, args):
    out = []
    for S in enumerate_saturated(M):
        out.append({
            "mask": S,
            "members": [M.format(M.gens[i]) for i in bits(S)],
            "lcm": M.format(lcm_of(S, M)),
            "components": len(connected_components(S, M)),
        })
    return json.dumps(out, indent=None if args.json else 1)


def _cmd_complexes(M, args):
    out = []
    for S in enumerate_saturated(M):
        cx = delta_prime(S, M)
        out.append({
            "mask": S,
            "vertices": [M.format(M.gens[i]) for i in cx.vertices],
            "faces": [[M.format(M.gens[i]) for i in face] for face in cx.labelled_faces()],
        })
    return json.dumps(out, indent=None if args.json else 1)


def _cmd_polarize(M, args):
    pol = polarize(M)
    P = pol.generators
    if args.json:
        return json.dumps({
            "vars": list(P.names),
            "generators": [P.format(g) for g in P.gens],
            "map": {M.format(m): P.format(pol.forward[m]) for m in M.gens},
        })
    lines = ["vars: " + " ".join(P.names)]
    lines += [P.format(g) for g in P.gens]
    return "\n".join(lines)


def _cmd_verify(M, args):
    report = verify_main_identity(M, args.field, args.trunc_z, args.trunc_deg, ROUTES[args.path](M, args.field))
    if args.json:
        return json.dumps({
            "ok": report.ok,
            "checked": report.checked,
            "discrepancies": [
                {"alpha": list(a), "z": z, "expected": e, "got": g} for a, z, e, g in report.discrepancies
            ],
        }), (0 if report.ok else 2)
    if report.ok:
        return f"ok: {report.checked} coefficients checked (z <= {args.trunc_z}, deg <= {args.trunc_deg}, {args.field})", 0
    a, z, e, g = report.first
    return f"FAILED at {M.format(a)}*z^{z}: expected {e}, got {g} ({len(report.discrepancies)} discrepancies)", 2


COMMANDS = {
    "denominator": _cmd_denominator,
    "series": _cmd_series,
    "betti": _cmd_betti,
    "golod": _cmd_golod,
    "deviations": _cmd_deviations,
    "saturated": _cmd_saturated,
    "complexes": _cmd_complexes,
    "polarize": _cmd_polarize,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoring", description="Poincaré series of monomial rings")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("ideal", nargs="?", default="-", help="ideal file (default: stdin)")
    parser.add_argument("--field", type=FieldSpec.parse, default=FieldSpec(0), help="rational or gf:<p>")
    parser.add_argument("--trunc-z", type=int, default=8)
    parser.add_argument("--trunc-deg", type=int, default=8)
    parser.add_argument("--path", choices=sorted(ROUTES), default="formula", help="route for the denominator")
    parser.add_argument("--json", action="store_true")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        M = read_ideal(args.ideal)
        result = COMMANDS[args.command](M, args)
    except (MonoringError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except AssertionError as exc:
        print(f"internal error: {exc}", file=stderr)
        return 2
    status = 0
    if isinstance(result, tuple):
        result, status = result
    print(result, file=stdout)
    return status


def main():
    sys.exit(run())
