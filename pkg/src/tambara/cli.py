"""Command-line front end.

Set tokens: `N` is N fixed points; `o0.0.1` is the disjoint union of the
orbits G/H_0, G/H_0, G/H_1 (class indices in subgroup order).  Map tokens
are `X>Y:img0,img1,...`; the images may be omitted when Y has one point.
A bispan token is `p|q|r` with p: A -> X, q: A -> B, r: B -> Y.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bispans import (Bispan, bispan_canonical_key, compose_bispans, distributor,
                      word_to_bispan)
from .config import default_cap
from .errors import PreconditionError, SizeCapError, ValidationError
from .groups import make_group, subgroup_system
from .gsets import GMap, gset_from_orbits, orbit_type, point, trivial_gset
from .witt import burnside_product_counts, ghost, witt_add, witt_mul, witt_universal

EXIT_INVALID, EXIT_CAP, EXIT_FAILED = 1, 2, 3


def parse_set(G, token):
    token = token.strip()
    if token.startswith("o"):
        body = token[1:]
        try:
            classes = tuple(int(c) for c in body.split(".")) if body else ()
        except ValueError:
            raise ValidationError(f"bad orbit list {token!r}") from None
        if any(not 0 <= c < len(subgroup_system(G).reps) for c in classes):
            raise ValidationError(f"orbit class out of range in {token!r}")
        return gset_from_orbits(G, classes)
    try:
        n = int(token)
    except ValueError:
        raise ValidationError(f"bad set token {token!r}") from None
    if n < 0:
        raise ValidationError("set sizes are nonnegative")
    return point(G) if n == 1 else trivial_gset(G, n)


def parse_map(G, token):
    head, _, imgs = token.strip().partition(":")
    src, sep, dst = head.partition(">")
    if not sep:
        raise ValidationError(f"map {token!r} needs the form X>Y:images")
    X, Y = parse_set(G, src), parse_set(G, dst)
    if imgs.strip():
        try:
            table = tuple(int(v) for v in imgs.split(","))
        except ValueError:
            raise ValidationError(f"bad images in {token!r}") from None
    elif Y.size == 1:
        table = (0,) * X.size
    else:
        raise ValidationError(f"map {token!r} needs images")
    if len(table) != X.size or any(not 0 <= y < Y.size for y in table):
        raise ValidationError(f"map {token!r} has the wrong number of images or an image out of range")
    f = GMap(X, Y, table)
    f.validate()
    return f


def parse_bispan(G, token):
    parts = token.split("|")
    if len(parts) != 3:
        raise ValidationError(f"bispan {token!r} needs three maps p|q|r")
    p, q, r = (parse_map(G, t) for t in parts)
    if p.dom != q.dom or q.cod != r.dom:
        raise ValidationError(f"bispan {token!r}: maps do not share carriers")
    return Bispan(p, q, r)


def parse_word(G, token):
    """Space-separated generators such as `N=2>1 T=3>2:0,1,1`; the rightmost acts first."""
    word = []
    for item in token.split():
        tag, sep, body = item.partition("=")
        if not sep or tag not in ("T", "N", "R"):
            raise ValidationError(f"bad generator {item!r}; use T=map, N=map or R=map")
        word.append((tag, parse_map(G, body)))
    if not word:
        raise ValidationError("empty word")
    return word


def parse_vector(G, text, name):
    try:
        v = tuple(int(c) for c in text.split(","))
    except (ValueError, AttributeError):
        raise ValidationError(f"--{name} must be comma-separated integers") from None
    r = len(subgroup_system(G).reps)
    if len(v) != r:
        raise ValidationError(f"--{name} needs {r} entries, one per subgroup class")
    return v


def describe_bispan(w):
    return {
        "source": w.source.size, "target": w.target.size,
        "A": w.A.size, "B": w.B.size,
        "A_orbits": list(orbit_type(w.A)), "B_orbits": list(orbit_type(w.B)),
        "p": list(w.p.table), "q": list(w.q.table), "r": list(w.r.table),
        "key": _jsonable(bispan_canonical_key(w)),
    }


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


# ------------------------------------------------------------------ verbs

def cmd_marks(args, G):
    system = subgroup_system(G)
    return {"group": args.group, "orders": system.orders,
            "marks": [list(r) for r in system.marks]}, "\n".join(
        " ".join(str(v) for v in row) for row in system.marks)


def cmd_burnside_mul(args, G):
    r = len(subgroup_system(G).reps)
    table = []
    for i in range(r):
        row = []
        for j in range(r):
            e_i = tuple(int(k == i) for k in range(r))
            e_j = tuple(int(k == j) for k in range(r))
            row.append(list(burnside_product_counts(G, e_i, e_j, args.cap)))
        table.append(row)
    plain = "\n".join(f"{i}*{j}: " + ",".join(map(str, table[i][j]))
                      for i in range(r) for j in range(r))
    return {"group": args.group, "products": table}, plain


def _witt_op(op):
    def run(args, G):
        x, y = parse_vector(G, args.x, "x"), parse_vector(G, args.y, "y")
        z = op(G, x, y)
        return {"result": list(z)}, ",".join(map(str, z))
    return run


def cmd_witt_universal(args, G):
    text = witt_universal(G).as_text()
    plain = "\n".join(f"{k}[{i}] = {p}" for k in ("sum", "prod") for i, p in enumerate(text[k]))
    return text, plain


def cmd_ghost(args, G):
    g = ghost(G, parse_vector(G, args.x, "x"))
    return {"ghost": list(g)}, ",".join(map(str, g))


def cmd_bispan_compose(args, G):
    w0, w1 = parse_bispan(G, args.w0), parse_bispan(G, args.w1)
    if w0.target != w1.source:
        raise ValidationError("w1 must start where w0 ends")
    d = describe_bispan(compose_bispans(w1, w0, args.cap))
    return d, f"A={d['A']} B={d['B']} p={d['p']} q={d['q']} r={d['r']}"


def cmd_distributor(args, G):
    f, g = parse_map(G, args.f), parse_map(G, args.g)
    if f.cod != g.dom:
        raise ValidationError("f must end where g starts")
    d = describe_bispan(distributor(f, g, args.cap))
    return d, f"A={d['A']} B={d['B']} p={d['p']} q={d['q']} r={d['r']}"


def cmd_normalize(args, G):
    word = parse_word(G, args.word)
    try:
        w = word_to_bispan(word, cap=args.cap)
    except PreconditionError as exc:
        raise ValidationError(str(exc)) from None
    d = describe_bispan(w)
    return d, f"A={d['A']} B={d['B']} p={d['p']} q={d['q']} r={d['r']}"


def _pair_model(name, G, cap):
    from .models.burnside import BurnsideTambara
    from .models.c2 import dual_numbers_pair, integer_pair, pair_from_functor
    from .models.fixed_point import FixedPointTambara
    from .semirings import SwapPairs
    if name == "dual-numbers":
        return dual_numbers_pair()
    if name == "integers":
        return integer_pair()
    if name == "burnside":
        return pair_from_functor(BurnsideTambara(G, cap))
    if name == "swap":
        return pair_from_functor(FixedPointTambara(G, SwapPairs(lambda g: g != G.identity)))
    raise ValidationError(f"unknown pair model {name!r}")


def cmd_c2_pair(args, G):
    if G.order != 2:
        raise ValidationError("c2-pair needs a group of order two")
    P = _pair_model(args.model, G, args.cap)
    rng = random.Random(args.seed)
    sa = [P.A.random(rng) for _ in range(args.samples)]
    sb = [P.B.random(rng) for _ in range(args.samples)]
    checks = dict(P.check_axioms(sa, sb))
    checks.update(P.check_structure(sa, sb))
    report = {name: ("pass" if w is None else f"fail: {w!r}") for name, w in checks.items()}
    ok = all(w is None for w in checks.values())
    plain = "\n".join(f"{'PASS' if w is None else 'FAIL'} {name}" +
                      ("" if w is None else f" witness {w!r}") for name, w in checks.items())
    return {"model": args.model, "ok": ok, "checks": report}, plain, ok


def cmd_verify(args, G):
    from .verify import SUITES, run_suite
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        raise ValidationError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = [run_suite(n, seed=args.seed, cap=args.cap) for n in names]
    ok = all(r.ok for r in results)
    data = {"ok": ok, "suites": [{"name": r.name, "ok": r.ok, "cases": r.cases,
                                  "detail": r.detail,
                                  "witness": None if r.ok else repr(r.witness)}
                                 for r in results]}
    return data, "\n".join(r.line() for r in results), ok


VERBS = {
    "marks": cmd_marks,
    "burnside-mul": cmd_burnside_mul,
    "witt-add": _witt_op(witt_add),
    "witt-mul": _witt_op(witt_mul),
    "witt-universal": cmd_witt_universal,
    "ghost": cmd_ghost,
    "bispan-compose": cmd_bispan_compose,
    "distributor": cmd_distributor,
    "normalize": cmd_normalize,
    "c2-pair": cmd_c2_pair,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", default="cyclic:2", help="cyclic:N, symmetric:N, dihedral:N or table:rows")
    common.add_argument("--cap", type=int, default=None,
                        help="enumeration cap (default: TAMBARA_CAP or 10^6)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--plain", dest="fmt", action="store_const", const="plain")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="tambara", description="Tambara functor computations")
    sub = parser.add_subparsers(dest="verb", required=True)
    for name in ("marks", "burnside-mul", "witt-universal"):
        sub.add_parser(name, parents=[common])
    for name in ("witt-add", "witt-mul"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)
    sub.add_parser("ghost", parents=[common]).add_argument("--x", required=True)
    p = sub.add_parser("bispan-compose", parents=[common], help="w1 after w0")
    p.add_argument("--w0", required=True)
    p.add_argument("--w1", required=True)
    p = sub.add_parser("distributor", parents=[common])
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    sub.add_parser("normalize", parents=[common]).add_argument("--word", required=True)
    p = sub.add_parser("c2-pair", parents=[common])
    p.add_argument("--model", default="dual-numbers",
                   choices=["dual-numbers", "integers", "burnside", "swap"])
    p.add_argument("--samples", type=int, default=8)
    sub.add_parser("verify", parents=[common]).add_argument("suite")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else 0
    if args.cap is None:
        args.cap = default_cap()
    try:
        G = make_group(args.group)
        out = VERBS[args.verb](args, G)
    except SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, PreconditionError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    data, plain, ok = out if len(out) == 3 else (*out, True)
    if args.fmt == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(plain)
    return 0 if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
