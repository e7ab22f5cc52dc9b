"""Command-line entry point: ``quadrics <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bbcells, bruhat, degeninv, gkm, rsmonoid, verify
from .io import (
    ParseError, cached_document, export_poset, parse_degenerate_involution, poset_document,
)
from .permgroup import longest_parabolic_element
from .posets import Poset

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _mu(text: str | None):
    if text is None:
        return None
    try:
        mu = tuple(int(x) for x in text.replace(" ", "").strip("()").split(",") if x)
    except ValueError:
        raise UsageError(f"bad composition {text!r}") from None
    if not mu or any(m < 1 for m in mu):
        raise UsageError(f"bad composition {text!r}")
    return mu


def _pi(text: str):
    try:
        return parse_degenerate_involution(text)
    except ParseError as e:
        raise UsageError(f"cannot parse {text!r}: {e}") from None


def _n_and_mu(args):
    mu = _mu(args.mu)
    n = args.n
    if mu is not None:
        if n is not None and n != sum(mu):
            raise UsageError(f"--n {n} does not match --mu {args.mu}")
        n = sum(mu)
    if n is None:
        raise UsageError("give --n or --mu")
    if n > degeninv.DEFAULT_MAX_N:
        raise UsageError(f"n = {n} exceeds the bound {degeninv.DEFAULT_MAX_N}")
    return n, mu


def cmd_enumerate(args, out):
    n, mu = _n_and_mu(args)
    if args.kind == "barred":
        items = degeninv.enumerate_barred_mu(mu) if mu else degeninv.enumerate_barred(n)
    else:
        items = (degeninv.enumerate_mu_involutions(mu) if mu
                 else degeninv.enumerate_degenerate_involutions(n))
    for x in items:
        print(f"[{x}]", file=out)
    return EXIT_OK


def cmd_count(args, out):
    rec, closed = degeninv.count_barred(args.n)
    enum = len(degeninv.enumerate_barred(args.n)) if 0 < args.n <= 8 else None
    print(json.dumps({"n": args.n, "recurrence": rec, "closed_form": closed,
                      "enumeration": enum}), file=out)
    return EXIT_OK if rec == closed and enum in (None, rec) else EXIT_FAIL


def _build_poset(order: str, n: int, mu) -> Poset:
    if order in ("weak", "bruhat", "reverse", "induced") and mu is None:
        if order == "bruhat":
            return bruhat.full_poset(n)
        raise UsageError(f"--order {order} needs --mu")
    if order == "weak":
        wo = rsmonoid.weak_order(mu)
        return Poset.from_relation(wo.elements, ((a, b) for a, b, _ in wo.covers))
    if order == "bruhat":
        return bruhat.bruhat_poset(mu)
    if order == "reverse":
        return bruhat.reverse_bruhat_poset(mu)
    if order == "induced":
        return bruhat.induced_order(mu)
    if order == "bb":
        return bbcells.bb_order(n)
    return bbcells.bcell_conjecture_check(n, mu).poset


def cmd_poset(args, out):
    n, mu = _n_and_mu(args)
    doc = cached_document(args.order, n, mu,
                          lambda: poset_document(args.order, n, mu, _build_poset(args.order, n, mu)))
    data = export_poset(doc, args.format)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        out.write(data.decode())
    return EXIT_OK


def _perm(w):
    return "".join(map(str, w)) if len(w) <= 9 else ",".join(map(str, w))


def cmd_wset(args, out):
    pi = _pi(args.pi)
    if args.rho is not None:
        rho = _pi(args.rho)
        if rho.mu != pi.mu:
            raise UsageError("--pi and --rho must share a composition")
        ws = rsmonoid.wset(pi, rho)
    elif args.direction == "reverse":
        ws = rsmonoid.rev_wset(pi)
    else:
        ws = rsmonoid.wset_to_max(pi)
    for w in sorted(ws):
        print(_perm(w), file=out)
    return EXIT_OK


def cmd_cells(args, out):
    if args.n > degeninv.DEFAULT_MAX_N:
        raise UsageError(f"n = {args.n} exceeds the bound")
    rows = []
    for c in bbcells.cells(args.n):
        rows.append({"fixed_point": str(c.fixed_point), "dense": str(c.dense),
                     "dimension": c.dimension, "members": [str(m) for m in c.members]})
    print(json.dumps(rows, indent=1), file=out)
    return EXIT_OK


def cmd_gkm(args, out):
    gamma = _pi(args.gamma)
    if not degeninv.is_barred(gamma):
        raise UsageError(f"[{gamma}] is not a barred permutation")
    special, w = gkm.reduce_to_special(gamma)
    t = gkm.tangent_weights(special)
    n = gamma.n
    curves = {}
    for delta in t.horizontal + t.vertical:
        ends = gkm.curve_other_fixed_points(special, delta)
        curves[str(delta)] = sorted(str(bbcells.weyl_act(w, e)) for e in ends)
    report = {
        "gamma": str(gamma), "special": str(special), "translate": list(w),
        "I": sorted(gkm.i_of(gamma)),
        "w_I": list(longest_parabolic_element(gkm.i_of(gamma), n)),
        "horizontal": [list(gkm.weyl_act_weight(w, d)) for d in t.horizontal],
        "vertical": [list(gkm.weyl_act_weight(w, d)) for d in t.vertical],
        "normal": [list(gkm.weyl_act_weight(w, d)) for d in t.normal],
        "curves_at_special_point": curves,
    }
    print(json.dumps(report, indent=1), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    try:
        checks = verify.run(args.suite, args.max_n)
    except KeyError as e:
        raise UsageError(str(e)) from None
    print(json.dumps({"suite": args.suite, "max_n": args.max_n,
                      "ok": verify.report_ok(checks),
                      "checks": verify.as_json(checks)}, indent=1), file=out)
    return EXIT_OK if verify.report_ok(checks) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quadrics", description="Borel orbits and BB-cells of complete quadrics")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list degenerate involutions or barred permutations")
    e.add_argument("--n", type=int)
    e.add_argument("--mu")
    e.add_argument("--kind", choices=["mu-involutions", "barred"], default="mu-involutions")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("count", help="number of torus fixed points")
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_count)

    po = sub.add_parser("poset", help="export an order as DOT or JSON")
    po.add_argument("--order", choices=["weak", "bruhat", "reverse", "induced", "bb", "bcell"],
                    required=True)
    po.add_argument("--n", type=int)
    po.add_argument("--mu")
    po.add_argument("--format", choices=["dot", "json"], default="dot")
    po.add_argument("--out")
    po.set_defaults(func=cmd_poset)

    w = sub.add_parser("wset", help="W-sets")
    w.add_argument("--pi", required=True)
    w.add_argument("--rho")
    w.add_argument("--direction", choices=["forward", "reverse"], default="forward")
    w.set_defaults(func=cmd_wset)

    ce = sub.add_parser("cells", help="BB-cells with members and dimensions")
    ce.add_argument("--n", type=int, required=True)
    ce.set_defaults(func=cmd_cells)

    g = sub.add_parser("gkm", help="tangent weights at a torus fixed point")
    g.add_argument("--gamma", required=True)
    g.set_defaults(func=cmd_gkm)

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("--suite", default="all")
    v.add_argument("--max-n", type=int, default=4)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as e:
        print(f"quadrics: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
