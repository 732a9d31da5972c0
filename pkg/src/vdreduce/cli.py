"""Command-line front end.

Exit status: 0 success, 1 a check failed, 2 bad input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kterm as K
from .errors import InputError, InternalError
from .finsemi import FinSemigroup
from .io import labels_to_dict, load_graph, load_json, load_labels
from .reduce import pipeline, prepare, verification
from .reduce.graph import phi_problems, structural_problems
from .reduce.pipeline import c2_exempt_vertices
from .reduce.tau import split_dump
from .verify import G, SL, VarietyBackend


def _variety(tag: str) -> VarietyBackend:
    if tag == "sl":
        return SL
    if tag == "g":
        return G
    if tag.startswith("sample:"):
        d = load_json(tag[len("sample:"):])
        items = d.get("semigroups", [d]) if isinstance(d, dict) else d
        sample = []
        for item in items:
            try:
                sample.append(FinSemigroup(tuple(tuple(r) for r in item["table"]),
                                           bool(item.get("identity", False))))
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(f"bad semigroup in sample file: {exc}") from None
        return VarietyBackend("sample", tuple(sample))
    raise InputError(f"unknown variety {tag!r}; use sl, g or sample:<path>")


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _graph(args):
    return load_graph(args.graph, args.semigroup)


def cmd_validate(args) -> int:
    g = _graph(args)
    probs = structural_problems(g) or phi_problems(g)
    for x, msg in probs:
        print(f"{x}: {msg}")
    if probs:
        return 1
    print(f"ok: {len(g.vertices)} vertices, {len(g.edges)} edges")
    return 0


def _constants(ctx) -> dict:
    d = ctx.summary()
    if not ctx.roots:
        d["note"] = "no periodic class; p_eta is the empty lcm"
    return d


def cmd_constants(args) -> int:
    _, _, ctx = prepare(_graph(args), args.ecap)
    _emit(_constants(ctx), args.out)
    return 0


def cmd_borders(args) -> int:
    _, _, ctx = prepare(_graph(args), args.ecap)
    classes = [
        {"root": c.root, "representative": str(c.y), "periodic": c.periodic,
         "border": ctx.border_of(next(iter(c.z))) if c.z else None,
         "z": dict(sorted(c.z.items()))}
        for c in ctx.classes
    ]
    borders = [{"word": w, "root": b.root} for w, b in sorted(ctx.borders.items())]
    _emit({"M": ctx.M, "classes": classes, "borders": borders}, args.out)
    return 0


def _trace(res) -> dict:
    from .reduce.borders import split_context

    g, ctx = res.simplified, res.ctx
    sctx = split_context(g, ctx)
    out = {"elements": {}, "edges": {}}
    for x in g.elements():
        lab = g.eta[x]
        item = {
            "tau1": K.to_text(res.tau.tau1[x]),
            "tau2": K.to_text(res.tau.tau2[x]),
            "tau3": K.to_text(res.tau.tau3[x]),
        }
        if not K.is_finite(lab):
            item["i_k"] = split_dump(K.i_k_term(lab, ctx.k), sctx)
            item["t_k"] = split_dump(K.t_k_term(lab, ctx.k), sctx)
        out["elements"][x] = item
    for eid, sp in sorted(res.tau.edge_splits.items()):
        out["edges"][eid] = {"m": sp.m, "reduced": sp.reduced.dump(),
                             "beta1": K.to_text(sp.beta1), "beta2": K.to_text(sp.beta2)}
    return out


def cmd_reduce(args) -> int:
    g = _graph(args)
    eta_k = load_labels(args.eta_k) if args.eta_k else None
    res = pipeline(g, eta_k, _variety(args.variety), args.kmax, args.ecap)
    doc = {
        "constants": _constants(res.ctx),
        "kmax": res.kmax,
        "stages": res.stages,
        "ok": res.report.ok,
        "report": res.report.as_list(),
    }
    if res.eta_prime:
        doc["eta_prime"] = labels_to_dict(res.eta_prime, g.elements())["labels"]
    if args.trace and res.eta_prime:
        doc["trace"] = _trace(res)
    _emit(doc, args.out)
    return 0 if res.report.ok else 1


def cmd_verify(args) -> int:
    g = _graph(args)
    labels = load_labels(args.labels)
    missing = [x for x in g.elements() if x not in labels]
    if missing:
        raise InputError(f"labeling misses {missing}")
    _, _, ctx = prepare(g, args.ecap)
    kmax = 2 * ctx.k if args.kmax is None else args.kmax
    rep = verification(g, labels, ctx, _variety(args.variety), kmax, c2_exempt_vertices(g, ctx))
    _emit({"kmax": kmax, "ok": rep.ok, "report": rep.as_list()}, args.out)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vdreduce", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, variety=False):
        sp.add_argument("graph", help="graph system file (JSON)")
        sp.add_argument("--semigroup", help="semigroup file, overriding the graph's reference")
        sp.add_argument("--ecap", type=int, help="cap for the search of E")
        sp.add_argument("--out", help="write the JSON output here instead of stdout")
        if variety:
            sp.add_argument("--variety", default="sl", help="sl, g or sample:<path>")
            sp.add_argument("--kmax", type=int, help="check V*D_k' for k' = 1..kmax (default 2k)")

    common(sub.add_parser("validate", help="check well-formedness and delta(eta) = phi"))
    common(sub.add_parser("constants", help="print the constants of the construction"))
    common(sub.add_parser("borders", help="print confinality classes and borders"))
    r = sub.add_parser("reduce", help="build the new labeling and verify it")
    common(r, variety=True)
    r.add_argument("--eta-k", help="labeling to use instead of the input labels")
    r.add_argument("--trace", action="store_true", help="include tau components and splits")
    v = sub.add_parser("verify", help="check a labeling against the system")
    common(v, variety=True)
    v.add_argument("--labels", required=True, help="labeling file")
    return p


COMMANDS = {
    "validate": cmd_validate,
    "constants": cmd_constants,
    "borders": cmd_borders,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except RecursionError:
        print("internal error: term nesting too deep", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
