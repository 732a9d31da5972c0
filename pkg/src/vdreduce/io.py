"""JSON files for semigroups, graph systems and labelings.

Semigroup file::

    {"size": 2, "identity": false, "table": [[0, 0], [0, 1]],
     "alphabet": ["a", "b"], "generators": {"a": 1, "b": 0}}

Graph file (``semigroup`` is resolved relative to the graph file)::

    {"semigroup": "f1.semigroup.json",
     "vertices": [{"id": "v1", "label": "(ab)^w", "phi": "auto"}],
     "edges": [{"id": "e1", "source": "v1", "target": "v1", "label": "(ab)^w"}],
     "representatives": {"ab": "inf(ab)bb"},
     "factorizations": {"e1": ["(ab)^w", "(ab)^w"]}}

``phi`` may be an element index, ``"auto"`` (the value of the label, the
default) or ``"1"`` for the adjoined identity.  Labeling file::

    {"labels": {"v1": "(ab)^w", "e1": "(ab)^w"}}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from . import kterm as K
from .errors import InputError
from .finsemi import FinSemigroup, GeneratorMap, SemigroupError, associativity_witness
from .reduce.graph import Edge, GraphSystem, term_value
from .wordkit import WordError, parse_leftinf


def load_json(path) -> object:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def semigroup_from_dict(d: Mapping) -> tuple[FinSemigroup, GeneratorMap]:
    try:
        S = FinSemigroup(tuple(tuple(r) for r in d["table"]), bool(d.get("identity", False)))
        if "size" in d and d["size"] != S.size:
            raise InputError(f"size {d['size']} does not match the table ({S.size} rows)")
        w = associativity_witness(S)
        if w is not None:
            x, y, z = w
            raise InputError(f"table is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")
        if S.identity and any(S.table[0][x] != x or S.table[x][0] != x for x in range(S.size)):
            raise InputError("identity flag set but element 0 is not an identity")
        delta = GeneratorMap(tuple(d["alphabet"]), dict(d["generators"]))
        delta.check(S)
    except KeyError as exc:
        raise InputError(f"semigroup file lacks the field {exc.args[0]!r}") from None
    except (SemigroupError, TypeError) as exc:
        raise InputError(str(exc)) from None
    for a in delta.alphabet:
        if len(a) != 1:
            raise InputError(f"letters are single characters, got {a!r}")
    return S, delta


def semigroup_to_dict(S: FinSemigroup, delta: GeneratorMap) -> dict:
    return {
        "size": S.size,
        "identity": S.identity,
        "table": [list(r) for r in S.table],
        "alphabet": list(delta.alphabet),
        "generators": {a: delta.image[a] for a in delta.alphabet},
    }


def load_semigroup(path) -> tuple[FinSemigroup, GeneratorMap]:
    return semigroup_from_dict(load_json(path))


def parse_term(text: str, where: str) -> K.KTerm:
    try:
        return K.parse(text)
    except K.TermError as exc:
        raise InputError(f"{where}: {exc}") from None


def graph_from_dict(d: Mapping, S: FinSemigroup, delta: GeneratorMap) -> GraphSystem:
    try:
        vs = d.get("vertices", [])
        es = d.get("edges", [])
        eta, phi_spec = {}, {}
        vertices = []
        for item in vs:
            vid = str(item["id"])
            vertices.append(vid)
            eta[vid] = parse_term(item["label"], vid)
            phi_spec[vid] = item.get("phi", "auto")
        edges = []
        for item in es:
            eid = str(item["id"])
            edges.append(Edge(eid, str(item["source"]), str(item["target"])))
            eta[eid] = parse_term(item["label"], eid)
            phi_spec[eid] = item.get("phi", "auto")
        reps = {}
        for root, text in d.get("representatives", {}).items():
            try:
                reps[root] = parse_leftinf(text)
            except WordError as exc:
                raise InputError(f"representative for {root!r}: {exc}") from None
        facts = {}
        for eid, pair in d.get("factorizations", {}).items():
            if len(pair) != 2:
                raise InputError(f"{eid}: a factorization has exactly two parts")
            facts[eid] = (parse_term(pair[0], eid), parse_term(pair[1], eid))
    except KeyError as exc:
        raise InputError(f"graph file entry lacks the field {exc.args[0]!r}") from None
    phi = {}
    for x, spec in phi_spec.items():
        if spec == "auto":
            try:
                phi[x] = term_value(S, delta, eta[x])
            except SemigroupError as exc:
                raise InputError(f"{x}: {exc}") from None
        elif spec == "1":
            phi[x] = S.one() if S.identity else None
        elif isinstance(spec, int) and 0 <= spec < S.size:
            phi[x] = spec
        else:
            raise InputError(f"{x}: bad phi value {spec!r}")
    return GraphSystem(S, delta, tuple(vertices), tuple(edges), eta, phi, reps, facts)


def _phi_text(g: GraphSystem, x: str):
    v = g.phi[x]
    return "1" if v is None else v


def graph_to_dict(g: GraphSystem, semigroup_ref: str) -> dict:
    out = {
        "semigroup": semigroup_ref,
        "vertices": [
            {"id": v, "label": K.to_text(g.eta[v]), "phi": _phi_text(g, v)} for v in g.vertices
        ],
        "edges": [
            {"id": e.id, "source": e.source, "target": e.target,
             "label": K.to_text(g.eta[e.id]), "phi": _phi_text(g, e.id)}
            for e in g.edges
        ],
    }
    if g.representatives:
        out["representatives"] = {r: str(y) for r, y in sorted(g.representatives.items())}
    if g.factorizations:
        out["factorizations"] = {
            e: [K.to_text(a), K.to_text(b)] for e, (a, b) in sorted(g.factorizations.items())
        }
    return out


def load_graph(path, semigroup_path=None) -> GraphSystem:
    d = load_json(path)
    if not isinstance(d, dict):
        raise InputError(f"{path}: expected a JSON object")
    if semigroup_path is None:
        ref = d.get("semigroup")
        if ref is None:
            raise InputError(f"{path}: no semigroup reference")
        semigroup_path = Path(path).parent / ref
    S, delta = load_semigroup(semigroup_path)
    return graph_from_dict(d, S, delta)


def labels_to_dict(labels: Mapping[str, K.KTerm], order) -> dict:
    return {"labels": {x: K.to_text(labels[x]) for x in order}}


def load_labels(path) -> dict[str, K.KTerm]:
    d = load_json(path)
    if isinstance(d, dict) and "eta_prime" in d:
        d = {"labels": d["eta_prime"]}
    if not isinstance(d, dict) or "labels" not in d:
        raise InputError(f"{path}: expected an object with a 'labels' field")
    return {str(x): parse_term(t, str(x)) for x, t in d["labels"].items()}
