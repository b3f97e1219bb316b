"""Command-line surface: tables, decomposition, Wigner rendering, transport,
census, and the exhaustive verification suites.

Exit codes: 0 pass, 1 verification counterexample, 2 parse error,
3 domain error (non-symplectic input), 4 invalid state.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import clifford, gf4, phasespace, symplectic, wigner
from .exact import Matrix, Scalar, vector
from .single_qubit import single_qubit_demo

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_STATE = 4


class ParseError(Exception):
    pass


class StateError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing

_MAT_RE = re.compile(
    r"\[\[([01wW]),([01wW])\],\[([01wW]),([01wW])\]\]"
)


def parse_matrix(text: str) -> gf4.Mat2:
    m = _MAT_RE.fullmatch(re.sub(r"\s+", "", text))
    if not m:
        raise ParseError(f"cannot parse matrix: {text!r} (expected [[a,b],[c,d]])")
    a, b, c, d = (gf4.from_token(t) for t in m.groups())
    return ((a, b), (c, d))


def parse_frame(text: str) -> phasespace.Index:
    toks = [t.strip() for t in text.split(",")]
    if len(toks) != 5:
        raise ParseError(f"frame needs 5 components: {text!r}")
    try:
        return tuple(gf4.from_token(t) for t in toks)
    except ValueError as e:
        raise ParseError(str(e)) from None


_NAMED_FACTORS = {
    "up": (1, 0),
    "down": (0, 1),
    "right": (1, 1),
    "left": (1, -1),
}


def parse_state(text: str) -> Matrix:
    text = text.strip()
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise StateError(f"cannot read state file: {e}") from None
        return _state_from_json(obj)
    if text.startswith("{") or text.startswith("["):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise StateError(f"bad state JSON: {e}") from None
        return _state_from_json(obj)
    parts = text.split("*")
    if len(parts) == 2 and all(p in _NAMED_FACTORS for p in parts):
        f1 = _NAMED_FACTORS[parts[0]]
        f2 = _NAMED_FACTORS[parts[1]]
        amps = [a * b for a in f1 for b in f2]
        return wigner.density_from_vector(amps)
    raise StateError(
        f"cannot parse state {text!r} (expected name*name, JSON, or @file)"
    )


def _state_from_json(obj) -> Matrix:
    try:
        if isinstance(obj, dict) and "vector" in obj:
            return wigner.density_from_vector(
                vector(Scalar.from_json(s) for s in obj["vector"])
            )
        if isinstance(obj, dict) and "density" in obj:
            return wigner.validate_density(Matrix.from_json(obj["density"]))
    except (KeyError, TypeError, ValueError) as e:
        raise StateError(f"invalid state: {e}") from None
    raise StateError('state JSON must contain "vector" or "density"')


def parse_op(text: str):
    """An op is either a symplectic matrix or a displacement D[q,p]."""
    stripped = re.sub(r"\s+", "", text)
    m = re.fullmatch(r"D\[([01wW]),([01wW])\]", stripped)
    if m:
        return ("displace", (gf4.from_token(m.group(1)), gf4.from_token(m.group(2))))
    return ("symplectic", parse_matrix(stripped))


# ---------------------------------------------------------------------------
# rendering

def fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_scalar(s: Scalar) -> str:
    if s.im == 0:
        return fmt_fraction(s.re)
    im = fmt_fraction(abs(s.im)) + "i"
    if im == "1i":
        im = "i"
    if s.re == 0:
        return im if s.im > 0 else "-" + im
    sign = "+" if s.im > 0 else "-"
    return f"{fmt_fraction(s.re)}{sign}{im}"


def fmt_operator(m: Matrix) -> str:
    cells = [[fmt_scalar(v) for v in row] for row in m.rows]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def fmt_index(f) -> str:
    return "[" + ",".join(gf4.to_token(x) for x in f) + "]"


def _index_json(f) -> list:
    return [gf4.to_token(x) for x in f]


_AXIS_ORDER = gf4.ELEMENTS  # always 0, 1, w, w~


def _field_table(op, symbol: str) -> str:
    head = symbol.ljust(2) + " | " + "  ".join(gf4.to_ascii(b).ljust(2) for b in _AXIS_ORDER)
    sep = "---+" + "-" * (len(head) - 4)
    lines = [head, sep]
    for a in _AXIS_ORDER:
        row = "  ".join(gf4.to_ascii(op(a, b)).ljust(2) for b in _AXIS_ORDER)
        lines.append(gf4.to_ascii(a).ljust(2) + " | " + row)
    return "\n".join(lines)


def render_tables() -> str:
    parts = [
        "GF(4) addition",
        _field_table(gf4.add, "+"),
        "",
        "GF(4) multiplication",
        _field_table(gf4.mul, "x"),
        "",
        "Displacement operators (rows: b_p top-down w~,w,1,0; columns: b_q 0,1,w,w~)",
    ]
    for p in reversed(_AXIS_ORDER):
        row = "  ".join(
            clifford.displacement_name((q, p)).ljust(4) for q in _AXIS_ORDER
        )
        parts.append(f" {gf4.to_ascii(p).ljust(2)}| {row}")
    parts.append("     " + "   ".join(gf4.to_ascii(q).ljust(3) for q in _AXIS_ORDER))
    return "\n".join(parts)


def _product_label(n: int, k: int, f) -> str:
    """Arrow label of line k of striation n (vertical/horizontal only)."""
    arrows = (
        {"^": (1, 0), "v": (0, 1)} if n == 0 else {"->": (1, 1), "<-": (1, -1)}
    )
    b = clifford.mub_vector(n, gf4.add(k, f[n]))
    target = wigner.density_from_vector(b)
    for name1, v1 in arrows.items():
        for name2, v2 in arrows.items():
            prod = [a * c for a in v1 for c in v2]
            if wigner.density_from_vector(prod) == target:
                return name1 + name2
    return "?"


def render_wigner(table: wigner.WignerTable) -> str:
    cells = {
        a: fmt_fraction(v) for a, v in table.values.items()
    }
    width = max(3, max(len(c) for c in cells.values()))
    lines = [f"frame {fmt_index(table.f)}"]
    for p in reversed(_AXIS_ORDER):
        row = "  ".join(cells[(q, p)].rjust(width) for q in _AXIS_ORDER)
        label = _product_label(1, p, table.f)
        lines.append(f" {gf4.to_ascii(p).ljust(2)}| {row} | {label}")
    lines.append("     " + "  ".join(gf4.to_ascii(q).rjust(width) for q in _AXIS_ORDER))
    lines.append(
        "     "
        + "  ".join(_product_label(0, q, table.f).rjust(width) for q in _AXIS_ORDER)
    )
    return "\n".join(lines)


def _table_json(table: wigner.WignerTable) -> dict:
    # axis order 0,1,w,w~; rows p descending so the origin is lower-left.
    return {
        "f": _index_json(table.f),
        "values": [
            [
                [table.values[(q, p)].numerator, table.values[(q, p)].denominator]
                for q in _AXIS_ORDER
            ]
            for p in reversed(_AXIS_ORDER)
        ],
    }


# ---------------------------------------------------------------------------
# commands

def cmd_tables(args) -> int:
    print(render_tables())
    return 0


def cmd_decompose(args) -> int:
    d = symplectic.decompose(parse_matrix(args.matrix))
    if args.json:
        print(json.dumps({"r": d.r, "x": gf4.to_token(d.x), "s": d.s}))
    else:
        print(str(d))
    return 0


def cmd_unitary(args) -> int:
    u = clifford.unitary_for(parse_matrix(args.matrix))
    print(json.dumps(u.to_json()) if args.json else fmt_operator(u))
    return 0


def cmd_shift(args) -> int:
    f = phasespace.shift_vector(parse_matrix(args.matrix))
    print(json.dumps(_index_json(f)) if args.json else fmt_index(f))
    return 0


def cmd_indexop(args) -> int:
    s = phasespace.index_operator(parse_matrix(args.matrix))
    if args.json:
        print(json.dumps([[gf4.to_token(v) for v in row] for row in s]))
    else:
        for row in s:
            print("  ".join(gf4.to_ascii(v).ljust(2) for v in row))
    return 0


def cmd_wigner(args) -> int:
    rho = parse_state(args.state)
    f = parse_frame(args.frame) if args.frame else phasespace.ZERO_INDEX
    table = wigner.wigner_table(rho, f)
    print(json.dumps(_table_json(table)) if args.json else render_wigner(table))
    return 0


def cmd_apply(args) -> int:
    rho = parse_state(args.state)
    f = parse_frame(args.frame) if args.frame else phasespace.ZERO_INDEX
    steps = []
    table = wigner.wigner_table(rho, f)
    steps.append(("initial", rho, table))
    for text in args.ops:
        kind, op = parse_op(text)
        if kind == "displace":
            rho = wigner.displace_state(rho, op)
            table = wigner.wigner_table(rho, f)
            steps.append((f"D{fmt_index(op)}", rho, table))
        else:
            rho, f, table = wigner.transport(rho, f, op)
            steps.append((symplectic.to_text(op), rho, table))
    if args.json:
        print(
            json.dumps(
                [
                    {"op": name, "state": r.to_json(), "table": _table_json(t)}
                    for name, r, t in steps
                ]
            )
        )
    else:
        for name, r, t in steps:
            print(f"== {name}")
            print(fmt_operator(r))
            print(render_wigner(t))
            print()
    return 0


def cmd_census(args) -> int:
    rep = wigner.census()
    if args.json:
        out = {
            "total": rep["total"],
            "class_counts": {gf4.to_token(k): v for k, v in rep["class_counts"].items()},
            "orbit_counts": {gf4.to_token(k): v for k, v in rep["orbit_counts"].items()},
            "e0_orbit_count": rep["e0_orbit_count"],
            "e0_member_count": rep["e0_member_count"],
        }
        print(json.dumps(out))
    else:
        print(f"definitions: {rep['total']}")
        print(f"similarity classes: {len(rep['class_counts'])}")
        print(f"E=0 equivalence classes: {rep['e0_orbit_count']}")
        print(f"E=0 members: {rep['e0_member_count']}")
        for e, count in rep["class_counts"].items():
            orbits = rep["orbit_counts"][e]
            print(f"  E={gf4.to_ascii(e)}: {count} definitions in {orbits} classes")
    return 0


def _verify_transport() -> str:
    states = wigner.standard_test_states()
    count = 0
    for L in symplectic.enumerate_group():
        for f in phasespace.canonical_shift_vectors():
            for rho in states:
                wigner.transport(rho, f, L)
                count += 1
    return f"transport: {count}/{count} (L, frame, state) triples exact"


def _verify_marginals() -> str:
    states = wigner.standard_test_states()
    count = 0
    for f in phasespace.canonical_shift_vectors():
        for rho in states:
            wigner.marginal_check(rho, f)
            count += 1
    return f"marginals: {count}/{count} (frame, state) pairs, 20 lines + 16 displacements each"


def _verify_symmetry() -> str:
    for L in symplectic.enumerate_group():
        wigner.rotational_symmetry_check(L)
    return "symmetry: 60/60 conjugated rotations, period 5, all striations cycled"


_VERIFY_SCOPES = {
    "metaplectic": lambda: (
        clifford.verify_metaplectic(),
        "metaplectic: 960/960 signs in {+1,-1}",
    )[1],
    "rep": lambda: (
        clifford.verify_projective_rep(),
        "rep: 3600/3600 pairs, phases in {1,i,-1,-i}",
    )[1],
    "transport": _verify_transport,
    "marginals": _verify_marginals,
    "symmetry": _verify_symmetry,
    "single-qubit": lambda: (
        single_qubit_demo(),
        "single-qubit: rotation covariance, reinterpretation, reflection obstruction",
    )[1],
}


def cmd_verify(args) -> int:
    # QPHASE4_THREADS caps verification parallelism; the sweeps currently run
    # sequentially, which respects any cap >= 1.
    threads = os.environ.get("QPHASE4_THREADS")
    if threads is not None and (not threads.isdigit() or int(threads) < 1):
        print(f"parse error: QPHASE4_THREADS must be a positive integer", file=sys.stderr)
        return EXIT_PARSE
    scopes = list(_VERIFY_SCOPES) if args.scope == "all" else [args.scope]
    for scope in scopes:
        try:
            print(_VERIFY_SCOPES[scope]())
        except AssertionError as e:
            print(f"FAIL {scope}: {e}", file=sys.stderr)
            return EXIT_FAIL
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qphase4",
        description="Exact two-qubit discrete phase space over GF(4)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("tables", help="field tables and the displacement grid").set_defaults(
        func=cmd_tables
    )

    for name, func, help_text in (
        ("decompose", cmd_decompose, "canonical R^r H_x R^s factorization"),
        ("unitary", cmd_unitary, "exact unitary for a symplectic matrix"),
        ("shift", cmd_shift, "shift vector f_L"),
        ("indexop", cmd_indexop, "index operator S_L"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("matrix", help="[[a,b],[c,d]] with tokens 0,1,w,W")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("wigner", help="render a Wigner table")
    p.add_argument("--state", required=True, help="name*name, JSON, or @file.json")
    p.add_argument("--frame", help="f0,f1,f2,f3,f4 with tokens 0,1,w,W")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("apply", help="fold transport over a list of operations")
    p.add_argument("--state", required=True)
    p.add_argument("--frame")
    p.add_argument("--json", action="store_true")
    p.add_argument("ops", nargs="*", help="symplectic matrices or D[q,p] displacements")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("census", help="classify all 1024 frame definitions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("scope", choices=["all", *_VERIFY_SCOPES])
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad usage, which matches our parse-error code
        return int(e.code or 0)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except StateError as e:
        print(f"invalid state: {e}", file=sys.stderr)
        return EXIT_STATE
    except ValueError as e:
        if "not symplectic" in str(e):
            print(f"domain error: {e}", file=sys.stderr)
            return EXIT_DOMAIN
        print(f"invalid state: {e}", file=sys.stderr)
        return EXIT_STATE


if __name__ == "__main__":
    sys.exit(main())
