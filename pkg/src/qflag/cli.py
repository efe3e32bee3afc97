"""Command-line front end.

Subcommands
-----------
verify   run a named invariant suite (or all of them), JSON report
lb       radial solution tables on the polar chart, CSV or JSON
roots    root-system listings and plot-ready projections
em       decompose a polynomial potential into scalar/E/B parts, JSON
evolve   trajectory of a random state under a random generator, CSV

Identical invocations produce byte-identical output: every random draw is
keyed by --seed, floats are rendered with repr-faithful precision, and JSON
keys are sorted.  Exit codes: 0 success, 1 check failure, 2 usage error,
3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import dynamics, emfield, roots as roots_mod, s4lb
from .errors import QflagError
from .quatmat import random_skew_adjoint
from .verify import SCHEMA_VERSION, RunConfig, SUITES, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_doc(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _parse_tol(entries) -> dict:
    out = {}
    for entry in entries or ():
        if "=" not in entry:
            raise argparse.ArgumentTypeError(f"--tol expects KEY=VALUE, got {entry!r}")
        key, val = entry.split("=", 1)
        out[key] = float(val)
    return out


def _parse_half_integer(text: str) -> Fraction:
    value = Fraction(text)
    if value.denominator not in (1, 2):
        raise QflagError(f"--ell must be an integer or half-integer, got {text}")
    return value


# -- subcommands -----------------------------------------------------------------


def cmd_verify(args) -> int:
    cfg = RunConfig(seed=args.seed, trials=args.trials,
                    tol_overrides=_parse_tol(args.tol))
    report = run_suite(args.suite, cfg)
    _emit(_json_doc(report), args.out)
    return EXIT_OK if report["passed"] else EXIT_CHECK_FAILURE


def cmd_lb(args) -> int:
    ell = _parse_half_integer(args.ell)
    if ell == 0 and args.big_n == 0:
        sol = s4lb.make_f0()
    else:
        sol = s4lb.make_gl(ell, args.big_n)
    lo, hi = s4lb.POLE_MARGIN, float(np.pi) - s4lb.POLE_MARGIN
    grid = np.linspace(lo + 1e-9, hi - 1e-9, args.samples)
    rows = [(w, sol.value(w), s4lb.lb_radial_residual_scaled(sol, w))
            for w in grid]
    metadata = {
        "spec_version": SCHEMA_VERSION,
        "kind": sol.kind,
        "ell": str(sol.ell),
        "N": sol.big_n,
        "theta": sol.theta if sol.theta_sq >= 0 else None,
        "theta_squared": sol.theta_sq,
        "coefficients": list(sol.coeffs),
        "integrable": sol.integrable,
        "samples": args.samples,
        "max_scaled_residual": max(abs(r[2]) for r in rows),
    }
    if args.format == "json":
        metadata["table"] = [[row[0], row[1], row[2]] for row in rows]
        _emit(_json_doc(metadata), args.out)
    else:
        lines = ["omega,value,residual_scaled"]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        _emit("\n".join(lines) + "\n", args.out)
        if args.out:
            sys.stdout.write(_json_doc(metadata))
    return EXIT_OK


def cmd_roots(args) -> int:
    system = roots_mod.generate(args.n)
    if args.format == "csv":
        dims = args.projection
        coords = roots_mod.projection(system, dims)
        header = ",".join(f"c{i}" for i in range(dims))
        lines = [header] + [",".join(str(v) for v in row) for row in coords]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        doc = {
            "spec_version": SCHEMA_VERSION,
            "n": system.n,
            "count": len(system.roots),
            "roots": [list(r) for r in system.roots],
        }
        _emit(_json_doc(doc), args.out)
    return EXIT_OK


def _poly_terms(poly: emfield.RealPoly):
    return [{"coefficient": str(c), "exponents": list(e)}
            for e, c in sorted(poly.terms.items())]


def cmd_em(args) -> int:
    psi = parse_field_spec(args.component)
    dec = emfield.decompose(psi)
    doc = {
        "spec_version": SCHEMA_VERSION,
        "potential": {f"A{i}": _poly_terms(p)
                      for i, p in enumerate(psi.components)},
        "scalar": _poly_terms(dec.scalar),
        "electric": [_poly_terms(p) for p in dec.electric],
        "magnetic": [_poly_terms(p) for p in dec.magnetic],
        "display": {
            "scalar": repr(dec.scalar),
            "electric": [repr(p) for p in dec.electric],
            "magnetic": [repr(p) for p in dec.magnetic],
        },
    }
    _emit(_json_doc(doc), args.out)
    return EXIT_OK


def cmd_evolve(args) -> int:
    rng = np.random.default_rng(args.seed)
    gen = random_skew_adjoint(rng, args.n)
    psi = dynamics.random_state(rng, args.n, args.split)
    header = (["t", "norm_sq"]
              + [f"component{i}_norm" for i in range(args.n)]
              + ["exchange_in_norm", "exchange_out_norm"])
    lines = [",".join(header)]
    for t in np.linspace(0.0, args.t_max, args.steps):
        state = dynamics.evolve(gen, psi, float(t))
        split = dynamics.transition_split(gen, state)
        ex_in = np.sqrt(sum(q.norm_sq() for q in split.exchange_in))
        ex_out = np.sqrt(sum(q.norm_sq() for q in split.exchange_out))
        row = ([float(t), state.norm_sq()]
               + [q.norm() for q in state.components]
               + [float(ex_in), float(ex_out)])
        lines.append(",".join(_fmt(v) for v in row))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# -- tiny polynomial grammar for the em command -------------------------------------
#
#   expr   := term (('+' | '-') term)*
#   term   := factor ('*' factor)*
#   factor := atom ('^' integer)?
#   atom   := number | 'x0'..'x3' | '(' expr ')' | '-' atom


class _SpecError(QflagError):
    pass


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*()^":
            if text.startswith("**", i):
                tokens.append("^")
                i += 2
            else:
                tokens.append(ch)
                i += 1
        elif ch == "x" and i + 1 < len(text) and text[i + 1] in "0123":
            tokens.append(text[i:i + 2])
            i += 2
        elif ch.isdigit():
            j = i
            while j < len(text) and (text[j].isdigit() or text[j] in "./"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise _SpecError(f"unexpected character {ch!r} in polynomial")
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self) -> emfield.RealPoly:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> emfield.RealPoly:
        node = self.factor()
        while self.peek() == "*":
            self.take()
            node = node * self.factor()
        return node

    def factor(self) -> emfield.RealPoly:
        node = self.atom()
        if self.peek() == "^":
            self.take()
            power_tok = self.take()
            if power_tok is None or not power_tok.isdigit():
                raise _SpecError("exponent must be a nonnegative integer")
            power = int(power_tok)
            out = emfield.RealPoly.constant(1)
            for _ in range(power):
                out = out * node
            return out
        return node

    def atom(self) -> emfield.RealPoly:
        tok = self.take()
        if tok is None:
            raise _SpecError("unexpected end of polynomial")
        if tok == "-":
            return -self.atom()
        if tok == "(":
            node = self.expr()
            if self.take() != ")":
                raise _SpecError("missing closing parenthesis")
            return node
        if tok.startswith("x"):
            return emfield.RealPoly.x(int(tok[1]))
        try:
            return emfield.RealPoly.constant(Fraction(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise _SpecError(f"bad token {tok!r} in polynomial") from exc


def parse_polynomial(text: str) -> emfield.RealPoly:
    parser = _Parser(_tokenize(text))
    poly = parser.expr()
    if parser.peek() is not None:
        raise _SpecError(f"trailing input {parser.peek()!r}")
    return poly


def parse_field_spec(assignments) -> emfield.QPolyField:
    """Assignments like ``A1=x1`` or ``A0=x0*x3 - 2*x1^2``."""
    comps = [emfield.RealPoly() for _ in range(4)]
    for text in assignments:
        if "=" not in text:
            raise _SpecError(f"expected COMPONENT=POLYNOMIAL, got {text!r}")
        name, body = text.split("=", 1)
        name = name.strip()
        if name not in ("A0", "A1", "A2", "A3"):
            raise _SpecError(f"component must be A0..A3, got {name!r}")
        comps[int(name[1])] = comps[int(name[1])] + parse_polynomial(body)
    return emfield.QPolyField(tuple(comps))


# -- argument wiring -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qflag",
        description="verification suites and tables for quaternionic "
                    "flag-manifold geometry")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run an invariant suite")
    p_verify.add_argument("suite", choices=["all"] + sorted(SUITES))
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=0,
                          help="override per-check draw counts (0 = defaults)")
    p_verify.add_argument("--tol", action="append", metavar="KEY=VAL",
                          help="override a check tolerance by name")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_lb = sub.add_parser("lb", help="radial solution table")
    p_lb.add_argument("--ell", required=True,
                      help="integer or half-integer, e.g. 1 or 3/2")
    p_lb.add_argument("--big-n", type=int, default=0, dest="big_n",
                      help="termination index N")
    p_lb.add_argument("--samples", type=int, default=200,
                      help="grid points between the pole exclusion zones")
    p_lb.add_argument("--format", choices=["csv", "json"], default="csv")
    p_lb.add_argument("--out", default=None)
    p_lb.set_defaults(func=cmd_lb)

    p_roots = sub.add_parser("roots", help="root system listing")
    p_roots.add_argument("n", type=int)
    p_roots.add_argument("--projection", type=int, choices=[2, 3], default=2,
                         help="coordinates kept in the csv projection")
    p_roots.add_argument("--format", choices=["json", "csv"], default="json")
    p_roots.add_argument("--out", default=None)
    p_roots.set_defaults(func=cmd_roots)

    p_em = sub.add_parser("em", help="scalar/E/B decomposition of a potential")
    p_em.add_argument("component", nargs="+",
                      help="assignments like A1=x1 (components A0..A3, "
                           "polynomials in x0..x3)")
    p_em.add_argument("--out", default=None)
    p_em.set_defaults(func=cmd_em)

    p_evolve = sub.add_parser("evolve", help="trajectory table")
    p_evolve.add_argument("--n", type=int, default=3)
    p_evolve.add_argument("--split", type=int, default=1)
    p_evolve.add_argument("--seed", type=int, default=0)
    p_evolve.add_argument("--t-max", type=float, default=10.0, dest="t_max")
    p_evolve.add_argument("--steps", type=int, default=100)
    p_evolve.add_argument("--out", default=None)
    p_evolve.set_defaults(func=cmd_evolve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QflagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
