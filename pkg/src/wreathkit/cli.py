"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error.  Results are printed
to stdout as JSON with sorted keys, so identical invocations are
byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import autlamp, graphprod, grig, groupring, qmgraph, trunc
from .exceptions import ParseError, WreathKitError
from .graphprod import GPContext
from .groups import spec_from_json
from .parsing import load_json_arg, parse_gp_word, parse_laurent, parse_wreath
from .sgraph import SimpGraph
from .wreath import WreathProduct


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def load_gp_context(arg: str) -> GPContext:
    obj = load_json_arg(arg)
    if not isinstance(obj, dict) or "graph" not in obj:
        raise WreathKitError("context must be an object with a 'graph'")
    graph = SimpGraph.from_json(obj["graph"])
    if "group" in obj:
        return GPContext(graph, spec_from_json(obj["group"]))
    if "groups" in obj:
        return GPContext(graph, {_vertex_key(graph, k): spec_from_json(v) for k, v in obj["groups"].items()})
    raise WreathKitError("context needs 'group' or 'groups'")


def _vertex_key(graph, key):
    # JSON object keys are strings; match integer vertices too
    if key in graph.vertices:
        return key
    try:
        if int(key) in graph.vertices:
            return int(key)
    except ValueError:
        pass
    return key


def load_wreath(arg: str) -> WreathProduct:
    obj = load_json_arg(arg)
    if not isinstance(obj, dict) or "A" not in obj or "B" not in obj:
        raise WreathKitError("wreath context must be an object with 'A' and 'B' group specs")
    return WreathProduct(spec_from_json(obj["A"]), spec_from_json(obj["B"]))


def _wreath_value(W, value):
    return parse_wreath(W, value) if isinstance(value, str) else W.decode(value)


def _sorted_vertices(ctx, vs):
    return [v for v in sorted(vs, key=ctx.vertex_key)]


def cmd_nf(args):
    ctx = load_gp_context(args.ctx)
    w = parse_gp_word(ctx, args.expr)
    return {"word": ctx.encode(w), "text": ctx.text(w), "length": len(w)}


def cmd_conj(args):
    ctx = load_gp_context(args.ctx)
    g, h = parse_gp_word(ctx, args.g), parse_gp_word(ctx, args.h)
    cg, ch = graphprod.cyclic_reduce(ctx, g), graphprod.cyclic_reduce(ctx, h)
    return {"conjugate": cg.rep == ch.rep, "rep_g": ctx.encode(cg.rep), "rep_h": ctx.encode(ch.rep)}


def cmd_support(args):
    ctx = load_gp_context(args.ctx)
    words = [parse_gp_word(ctx, e) for e in args.expr]
    if len(words) == 1 and args.depth is None:
        cc = graphprod.cyclic_reduce(ctx, words[0])
        return {"support": _sorted_vertices(ctx, graphprod.essential_support(ctx, words[0])),
                "conjugator": ctx.encode(cc.conjugator), "core": ctx.encode(cc.core), "exact": True}
    depth = 3 if args.depth is None else args.depth
    supp = graphprod.support_of_generated_bounded(ctx, words, depth)
    return {"support": _sorted_vertices(ctx, supp), "depth": depth, "exact": False}


def cmd_irred(args):
    ctx = load_gp_context(args.ctx)
    w = parse_gp_word(ctx, args.expr)
    return {"irreducible": graphprod.is_irreducible(ctx, w),
            "support": _sorted_vertices(ctx, graphprod.essential_support(ctx, w))}


def cmd_qm_ball(args):
    ctx = load_gp_context(args.ctx)
    center = parse_gp_word(ctx, args.center) if args.center else ()
    ball = qmgraph.build_ball(ctx, args.radius, center)
    out = ball.to_json()
    out["hyperplanes"] = []
    for h in ball.hyperplanes():
        sc = qmgraph.sector_count(ball, h)
        out["hyperplanes"].append({"id": h.id, "edges": len(h.edges), "carrier": len(h.carrier),
                                   "sectors": sc.count, "truncated": h.truncated})
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(qmgraph.export_dot(ball, args.highlight or ()))
        out["dot"] = args.dot
    return out


def cmd_wmul(args):
    W = load_wreath(args.ctx)
    result = W.identity
    for e in args.exprs:
        result = result * parse_wreath(W, e)
    return {"product": result.to_json(), "text": result.text()}


def cmd_trunc_factor(args):
    W = load_wreath(args.ctx)
    pres = trunc.FinitePresentation.from_json(load_json_arg(args.pres))
    raw = load_json_arg(args.images)
    if not isinstance(raw, dict):
        raise WreathKitError("images must map generator names to elements")
    images = {name: _wreath_value(W, v) for name, v in raw.items()}
    return trunc.factor_through_truncation(pres, images, args.max_s).to_json()


def cmd_units(args):
    text = args.invert if args.invert is not None else args.trivial
    p = parse_laurent(text, args.mod)
    if args.invert is not None:
        q = groupring.unit_invert(p)
        return {"inverse": None if q is None else q.to_json()["coeffs"]}
    return {"trivial": groupring.is_trivial_unit(p), "unit": groupring.is_unit(p)}


def cmd_aut(args):
    W = load_wreath(args.ctx)
    if args.apply:
        word = autlamp.AutoWord.from_json(W, load_json_arg(args.apply[0]))
        image = autlamp.apply(word, parse_wreath(W, args.apply[1]))
        return {"image": image.to_json(), "text": image.text()}
    if args.equal:
        w1, w2 = (autlamp.AutoWord.from_json(W, load_json_arg(a)) for a in args.equal)
        return {"equal": autlamp.equal(w1, w2)}
    g = parse_wreath(W, args.trans_inner)
    conj = autlamp.trans_is_inner(W, g)
    return {"inner": conj is not None, "conjugator": None if conj is None else conj.to_json()}


def cmd_grig(args):
    pres = grig.presentation(args.n)
    out = pres.to_json()
    out["text"] = pres.to_text()
    out["relator_count"] = len(pres.rels)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wreathkit", description="Graph products, wreath products and their truncations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def ctx_arg(sp, help_text="graph-product context (JSON file or inline JSON)"):
        sp.add_argument("--ctx", required=True, help=help_text)

    sp = sub.add_parser("nf", help="canonical normal form of a word")
    ctx_arg(sp)
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("conj", help="decide conjugacy of two words")
    ctx_arg(sp)
    sp.add_argument("g")
    sp.add_argument("h")
    sp.set_defaults(func=cmd_conj)

    sp = sub.add_parser("support", help="essential support of an element or of a subgroup (bounded)")
    ctx_arg(sp)
    sp.add_argument("expr", nargs="+")
    sp.add_argument("--depth", type=int)
    sp.set_defaults(func=cmd_support)

    sp = sub.add_parser("irred", help="irreducibility test")
    ctx_arg(sp)
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_irred)

    sp = sub.add_parser("qm-ball", help="ball in the quasi-median graph")
    ctx_arg(sp)
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--center")
    sp.add_argument("--dot", help="write a DOT rendering to this path")
    sp.add_argument("--highlight", type=int, nargs="*", help="hyperplane ids drawn bold")
    sp.set_defaults(func=cmd_qm_ball)

    wctx = "wreath context {\"A\": spec, \"B\": spec} (JSON file or inline JSON)"
    sp = sub.add_parser("wmul", help="multiply wreath-product elements")
    ctx_arg(sp, wctx)
    sp.add_argument("exprs", nargs="+")
    sp.set_defaults(func=cmd_wmul)

    sp = sub.add_parser("trunc-factor", help="factor a morphism through a truncation")
    ctx_arg(sp, wctx)
    sp.add_argument("--pres", required=True)
    sp.add_argument("--images", required=True)
    sp.add_argument("--max-s", type=int, default=64, dest="max_s")
    sp.set_defaults(func=cmd_trunc_factor)

    sp = sub.add_parser("units", help="units of (Z/k)[X, X^-1]")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--invert", metavar="POLY")
    g.add_argument("--trivial", metavar="POLY")
    sp.add_argument("--mod", type=int)
    sp.set_defaults(func=cmd_units)

    sp = sub.add_parser("aut", help="automorphisms of lamplighter groups")
    ctx_arg(sp, wctx)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--apply", nargs=2, metavar=("WORD", "ELEM"))
    g.add_argument("--equal", nargs=2, metavar=("WORD1", "WORD2"))
    g.add_argument("--trans-inner", metavar="LAMPS", dest="trans_inner")
    sp.set_defaults(func=cmd_aut)

    sp = sub.add_parser("grig", help="truncated Grigorchuk presentation")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_grig)
    return p


def _fail(code, kind, message):
    print(json.dumps({"error": kind, "message": message}, sort_keys=True), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail(1, "usage", str(exc))
    try:
        out = args.func(args)
    except ParseError as exc:
        return _fail(2, "ParseError", f"{exc.message} at position {exc.position}")
    except (WreathKitError, ValueError, KeyError, OSError) as exc:
        return _fail(2, type(exc).__name__, str(exc))
    print(json.dumps(out, sort_keys=True, separators=(",", ":")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
