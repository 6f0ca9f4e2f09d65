"""Command-line front end.

Every subcommand prints JSON (graphs can also print DOT).  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .branching import bratteli_graph, export_graph
from .grothendieck import (GrothVector, coproduct_vector, kleshchev_ind,
                           kleshchev_res, op_A, op_B, product_vectors)
from .jucysmurphy import jm_spectrum
from .monoid import enumerate_elements
from .seminormal import rook_irrep
from .verify import run_suite

N_LIMIT = 6
R_LIMIT = 8


def _usage_error(parser, message):
    parser.error(message)  # exits with status 2


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _guard(parser, n=None, r=None, p=None):
    if n is not None and not 0 <= n <= N_LIMIT:
        _usage_error(parser, f"--n must be between 0 and {N_LIMIT}")
    if r is not None and not 1 <= r <= R_LIMIT:
        _usage_error(parser, f"--r must be between 1 and {R_LIMIT}")
    if p is not None and not _is_prime(p):
        _usage_error(parser, "--p must be prime")


def _parse_shape(parser, text, r):
    try:
        data = json.loads(text)
        shape = tuple(tuple(int(x) for x in comp) for comp in data)
    except (ValueError, TypeError):
        _usage_error(parser, "--lambda must be a JSON array of arrays")
    if len(shape) != r:
        _usage_error(parser, f"--lambda must have exactly {r} components")
    return shape


def _parse_symbol(parser, text):
    """Parse 'JSON-partition:m', e.g. '[2,1]:0'."""
    try:
        lam_text, m_text = text.rsplit(":", 1)
        lam = tuple(int(x) for x in json.loads(lam_text))
        m = int(m_text)
    except (ValueError, TypeError):
        _usage_error(parser, f"cannot parse basis symbol {text!r}")
    return lam, m


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rookrep",
        description="Exact representation theory of generalized rook monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("enumerate", help="list all monoid elements")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--r", type=int, default=1)

    pi = sub.add_parser("irrep", help="dump an irreducible representation")
    pi.add_argument("--n", type=int, required=True)
    pi.add_argument("--r", type=int, default=1)
    pi.add_argument("--lambda", dest="shape", required=True,
                    help="JSON multipartition, e.g. '[[1],[]]'")

    pb = sub.add_parser("bratteli", help="branching graph of the tower")
    pb.add_argument("--r", type=int, default=1)
    pb.add_argument("--nmax", type=int, required=True)
    pb.add_argument("--format", choices=("json", "dot"), default="json")

    pj = sub.add_parser("jm-spectrum",
                        help="Jucys-Murphy eigenvalue table of an irrep")
    pj.add_argument("--n", type=int, required=True)
    pj.add_argument("--r", type=int, default=1)
    pj.add_argument("--lambda", dest="shape", required=True)

    pg = sub.add_parser("groth", help="apply operator words on basis symbols")
    pg.add_argument("--p", type=int, required=True)
    pg.add_argument("--apply", default="",
                    help="space-separated tokens from e<i>, f<i>, A, B, "
                         "applied left to right")
    pg.add_argument("--start", required=True,
                    help="basis symbol '[parts]:m', e.g. '[]:0'")

    pa = sub.add_parser("bialgebra",
                        help="product or coproduct in the char-0 bialgebra")
    pa.add_argument("--op", choices=("product", "coproduct"),
                    required=True)
    pa.add_argument("--x", required=True, help="basis symbol '[parts]:m'")
    pa.add_argument("--y", help="second symbol, for the product")

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", required=True)
    pv.add_argument("--n", type=int)
    pv.add_argument("--r", type=int)
    pv.add_argument("--p", type=int)
    pv.add_argument("--degree", type=int,
                    help="degree bound for the relation sweeps")
    return parser


def _cmd_enumerate(parser, args):
    _guard(parser, n=args.n, r=args.r)
    elems = enumerate_elements(args.n, args.r)
    print(json.dumps([e.to_json() for e in elems],
                     separators=(",", ":"), sort_keys=True))
    return 0


def _cmd_irrep(parser, args):
    _guard(parser, n=args.n, r=args.r)
    shape = _parse_shape(parser, args.shape, args.r)
    rep = rook_irrep(shape, args.n)
    print(json.dumps(rep.to_json(), separators=(",", ":"), sort_keys=True))
    return 0


def _cmd_bratteli(parser, args):
    _guard(parser, n=args.nmax, r=args.r)
    g = bratteli_graph(args.r, args.nmax)
    sys.stdout.write(export_graph(g, args.format))
    if args.format == "json":
        sys.stdout.write("\n")
    return 0


def _cmd_jm_spectrum(parser, args):
    _guard(parser, n=args.n, r=args.r)
    shape = _parse_shape(parser, args.shape, args.r)
    rep = rook_irrep(shape, args.n)
    table, violations = jm_spectrum(rep)
    rows = [{"tableau": L.to_json(),
             "X": [x.to_json() for x in xs],
             "Y": [y.to_json() for y in ys]}
            for L, xs, ys in table]
    print(json.dumps({"rows": rows, "violations": violations},
                     separators=(",", ":"), sort_keys=True))
    return 0 if not violations else 1


def _cmd_groth(parser, args):
    _guard(parser, p=args.p)
    lam, m = _parse_symbol(parser, args.start)
    try:
        vec = GrothVector.basis(args.p, lam, m)
    except ValueError as exc:
        _usage_error(parser, str(exc))
    for token in args.apply.split():
        if token == "A":
            vec = op_A(vec)
        elif token == "B":
            vec = op_B(vec)
        elif token.startswith("e") and token[1:].isdigit():
            vec = kleshchev_res(int(token[1:]) % args.p, vec)
        elif token.startswith("f") and token[1:].isdigit():
            vec = kleshchev_ind(int(token[1:]) % args.p, vec)
        else:
            _usage_error(parser, f"unknown operator token {token!r}")
    print(json.dumps(vec.to_json(), separators=(",", ":"), sort_keys=True))
    return 0


def _cmd_bialgebra(parser, args):
    x = _parse_symbol(parser, args.x)
    if args.op == "product":
        if args.y is None:
            _usage_error(parser, "--y is required for the product")
        y = _parse_symbol(parser, args.y)
        vec = product_vectors(GrothVector(None, {x: 1}),
                              GrothVector(None, {y: 1}))
        print(json.dumps(vec.to_json(), separators=(",", ":"),
                         sort_keys=True))
        return 0
    tensor = coproduct_vector(GrothVector(None, {x: 1}))
    terms = [{"left": {"lambda": list(a[0]), "m": a[1]},
              "right": {"lambda": list(b[0]), "m": b[1]},
              "coeff": [str(Fraction(c).numerator),
                        str(Fraction(c).denominator)]}
             for (a, b), c in sorted(tensor.items())]
    print(json.dumps({"terms": terms}, separators=(",", ":"),
                     sort_keys=True))
    return 0


def _cmd_verify(parser, args):
    _guard(parser, n=args.n, r=args.r, p=args.p)
    if args.degree is not None and not 0 <= args.degree <= 8:
        _usage_error(parser, "--degree must be between 0 and 8")
    try:
        results = run_suite(args.suite, args.degree)
    except KeyError:
        _usage_error(parser, f"unknown suite {args.suite!r}")
    failed = False
    for name, ok, detail in results:
        if ok:
            print(f"PASS {name}")
        else:
            failed = True
            print(f"FAIL {name}: {detail}")
    return 1 if failed else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "enumerate": _cmd_enumerate,
        "irrep": _cmd_irrep,
        "bratteli": _cmd_bratteli,
        "jm-spectrum": _cmd_jm_spectrum,
        "groth": _cmd_groth,
        "bialgebra": _cmd_bialgebra,
        "verify": _cmd_verify,
    }
    return handlers[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
