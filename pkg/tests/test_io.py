import json

import pytest

from vdreduce import kterm as K
from vdreduce.errors import InputError
from vdreduce.io import (
    graph_from_dict,
    graph_to_dict,
    labels_to_dict,
    load_graph,
    load_labels,
    load_semigroup,
    semigroup_from_dict,
    semigroup_to_dict,
)
from support import FIXTURES


def test_semigroup_round_trip():
    S, d = load_semigroup(FIXTURES / "z3.semigroup.json")
    again = semigroup_from_dict(json.loads(json.dumps(semigroup_to_dict(S, d))))
    assert again[0].table == S.table and again[1] == d


@pytest.mark.parametrize("bad, msg", [
    ({"table": [[1, 1], [0, 0]], "alphabet": ["a"], "generators": {"a": 0}}, "associative"),
    ({"size": 3, "table": [[0, 0], [0, 1]], "alphabet": ["a"], "generators": {"a": 0}}, "size"),
    ({"table": [[0, 0], [0, 1]], "identity": True, "alphabet": ["a"], "generators": {"a": 0}}, "identity"),
    ({"table": [[0, 0], [0, 1]], "alphabet": ["a"], "generators": {"a": 5}}, "image"),
    ({"table": [[0, 0], [0, 1]], "alphabet": ["ab"], "generators": {"ab": 0}}, "single"),
    ({"table": [[0, 0], [0, 1]], "alphabet": ["a"]}, "generators"),
])
def test_semigroup_errors(bad, msg):
    with pytest.raises(InputError, match=msg):
        semigroup_from_dict(bad)


def test_graph_round_trip():
    for name in ("f1", "z3", "case1", "rewrites"):
        g = load_graph(FIXTURES / f"{name}.graph.json")
        d = graph_to_dict(g, "x.json")
        h = graph_from_dict(json.loads(json.dumps(d)), g.S, g.delta)
        assert h.vertices == g.vertices and h.edges == g.edges
        assert h.eta == g.eta and h.phi == g.phi
        assert h.representatives == g.representatives


def test_json_error_has_position(tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"vertices": [\n  {"id": "v",, }]}')
    with pytest.raises(InputError, match=r"line 2 column"):
        load_graph(p)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        load_graph(tmp_path / "nope.json")


def test_bad_term_and_phi(tmp_path):
    sg = str(FIXTURES / "semilattice2.semigroup.json")
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"semigroup": sg, "vertices": [{"id": "v", "label": "(ab"}]}))
    with pytest.raises(InputError, match="v"):
        load_graph(p)
    p.write_text(json.dumps({"semigroup": sg, "vertices": [{"id": "v", "label": "a", "phi": 9}]}))
    with pytest.raises(InputError, match="phi"):
        load_graph(p)


def test_labels_round_trip(tmp_path):
    labels = {"v": K.parse("(ab)^w b"), "e": K.parse("b")}
    p = tmp_path / "l.json"
    p.write_text(json.dumps(labels_to_dict(labels, ["v", "e"])))
    assert load_labels(p) == labels
    p.write_text(json.dumps({"eta_prime": {"v": "a"}}))
    assert load_labels(p) == {"v": K.parse("a")}
    p.write_text("[1]")
    with pytest.raises(InputError):
        load_labels(p)
