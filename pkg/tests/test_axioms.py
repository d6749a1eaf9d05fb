"""Local-axiom verifier for abstract labeled graphs."""

import json

import pytest

from shifted_crystal.axioms import (
    AbstractGraph, certify_component, check_axioms, definition_stats,
    doubled_strings, load_graph, with_retargeted_edge, without_edge,
)
from shifted_crystal.crystal import build
from shifted_crystal.errors import SchemaError
from shifted_crystal.selftest import skew_shapes
from shifted_crystal.tableaux import ShiftedShape


def graph_of(outer, n, inner=()):
    return load_graph(build(ShiftedShape(outer, inner), n).to_doc())


def test_generated_crystals_satisfy_all_axioms():
    for shape in skew_shapes(6, 4):
        for n in (2, 3):
            G = load_graph(build(shape, n).to_doc())
            rep = check_axioms(G)
            assert rep.ok, (str(shape), n, rep.violations[:3])


def test_adjacent_pair_checks_are_exercised():
    # the three-class crystal on (4,2,1) hits the square, primed-square and
    # octagon branches of the adjacent-index analysis
    G = graph_of((4, 2, 1), 3)
    rep = check_axioms(G)
    assert rep.ok
    keys = set(rep.checked)
    assert any("A4.2" in k for k in keys)
    assert any("A4.1" in k for k in keys)
    assert any(k.startswith("A5/") for k in keys)


def test_schema_validation():
    w = {"a": (1, 0), "b": (0, 1)}
    AbstractGraph(2, w, [("a", "b", 1, False)])
    with pytest.raises(SchemaError):
        AbstractGraph(0, w, [])
    with pytest.raises(SchemaError):
        AbstractGraph(2, {"a": (1,)}, [])                   # wrong weight length
    with pytest.raises(SchemaError):
        AbstractGraph(2, {"a": (1, -1)}, [])                # negative weight
    with pytest.raises(SchemaError):
        AbstractGraph(2, w, [("a", "zz", 1, False)])        # unknown vertex
    with pytest.raises(SchemaError):
        AbstractGraph(2, w, [("a", "b", 2, False)])         # index out of range
    with pytest.raises(SchemaError):
        AbstractGraph(2, w, [("a", "a", 1, False)])         # self loop
    with pytest.raises(SchemaError):
        AbstractGraph(2, w, [("a", "b", 1, False), ("a", "b", 1, False)])


def test_duplicate_in_edge_rejected():
    w = {"a": (2, 0), "b": (1, 1), "c": (1, 1)}
    with pytest.raises(SchemaError):
        AbstractGraph(2, w, [("a", "c", 1, False), ("b", "c", 1, False)])


def test_string_classification_second_kind():
    G = graph_of((3,), 2)
    strings, problems = doubled_strings(G, 1)
    assert problems == []
    assert len(strings) == 1
    s = strings[0]
    assert s.kind == "second" and len(s.upper) == 4 and s.lower == ()


def test_string_classification_first_kind():
    G = graph_of((2, 1), 2)
    strings, problems = doubled_strings(G, 1)
    assert problems == []
    assert len(strings) == 1
    s = strings[0]
    assert s.kind == "first"
    assert len(s.upper) == 1 and len(s.lower) == 1


def test_definition_stats_values():
    # second kind: primed statistics vanish, hatted equal plain
    G = graph_of((3,), 2)
    st = definition_stats(G, 1)
    for v, d in st.items():
        assert d["eps_prime"] == 0 and d["phi_prime"] == 0
        assert d["eps_hat"] == d["eps"] and d["phi_hat"] == d["phi"]
    # first kind, single rung: upper (0,1,0,1,0,0), lower (1,0,1,0,0,0)
    G = graph_of((2, 1), 2)
    st = definition_stats(G, 1)
    by_wt = {tuple(G.weight(v)): d for v, d in st.items()}
    u = by_wt[(2, 1)]
    l = by_wt[(1, 2)]
    assert (u["eps"], u["phi"], u["eps_prime"], u["phi_prime"],
            u["eps_hat"], u["phi_hat"]) == (0, 1, 0, 1, 0, 0)
    assert (l["eps"], l["phi"], l["eps_prime"], l["phi_prime"],
            l["eps_hat"], l["phi_hat"]) == (1, 0, 1, 0, 0, 0)


def test_every_mutation_is_detected_on_one_row():
    G = graph_of((3,), 2)
    base = certify_component(G)
    assert base.ok and check_axioms(G).ok
    for e in list(G.edges):
        H = without_edge(G, *e)
        assert not (check_axioms(H).ok and all(
            certify_component(H, comp).ok for comp in H.components())), e
        for v in G.vertices:
            if v == e[1] or v == e[0]:
                continue
            try:
                H = with_retargeted_edge(G, *e, new_dst=v)
            except SchemaError:
                continue            # malformed graphs count as detected
            assert not (check_axioms(H).ok and all(
                certify_component(H, comp).ok for comp in H.components())), (e, v)


def test_mutation_helpers_require_existing_edge():
    G = graph_of((3,), 2)
    with pytest.raises(SchemaError):
        without_edge(G, 0, 3, 1, False)
    with pytest.raises(SchemaError):
        with_retargeted_edge(G, 0, 3, 1, False, new_dst=2)


def test_weight_shift_violation_detected():
    # an i-edge must shift weight by -alpha_i
    G = AbstractGraph(2, {"a": (1, 0), "b": (1, 0)}, [("a", "b", 1, False)])
    assert not check_axioms(G).ok


def test_certify_refuses_multiple_components():
    d1 = build(ShiftedShape((3,)), 2).to_doc()
    d2 = build(ShiftedShape((2, 1)), 2).to_doc()
    w = {}
    edges = []
    for tag, doc in (("a", d1), ("b", d2)):
        for v in doc["vertices"]:
            w[tag + str(v["id"])] = tuple(v["wt"])
        for e in doc["edges"]:
            edges.append((tag + str(e["src"]), tag + str(e["dst"]),
                          e["i"], e["primed"]))
    G = AbstractGraph(2, w, edges)
    whole = certify_component(G)
    assert not whole.ok
    for comp in G.components():
        assert certify_component(G, comp).ok
    assert check_axioms(G).ok


def test_certify_reports_matching():
    G = graph_of((3, 1), 3)
    for comp in G.components():
        cert = certify_component(G, comp)
        assert cert.ok
        assert set(cert.matching) == set(comp)
    whole = certify_component(G)
    assert whole.ok == (len(G.components()) == 1)


def test_certify_rejects_wrong_weights():
    doc = build(ShiftedShape((3,)), 2).to_doc()
    doc["vertices"][1]["wt"] = [1, 2]       # was (2,1)
    G = load_graph(doc)
    assert not certify_component(G).ok


def test_certify_is_name_independent():
    doc = build(ShiftedShape((3,)), 2).to_doc()
    for v in doc["vertices"]:
        v["id"] = "node-%d" % (9 - v["id"])
        v.pop("word", None)
    for e in doc["edges"]:
        e["src"] = "node-%d" % (9 - e["src"])
        e["dst"] = "node-%d" % (9 - e["dst"])
    G = load_graph(doc)
    cert = certify_component(G)
    assert cert.ok and cert.shape == (3,)


def test_dual_is_an_involution():
    G = graph_of((3, 1), 3)
    D = G.dual()
    DD = D.dual()
    assert set(DD.vertices) == set(G.vertices)
    for v in G.vertices:
        assert tuple(DD.weight(v)) == tuple(G.weight(v))
    assert sorted(DD.edges) == sorted(G.edges)
    # index map i -> n-i and edge reversal
    for src, dst, i, primed in G.edges:
        assert D.out_edge(dst, 3 - i, primed) == src


def test_report_summary_mentions_violations():
    G = AbstractGraph(2, {"a": (1, 0), "b": (1, 0)}, [("a", "b", 1, False)])
    rep = check_axioms(G)
    assert not rep.ok
    text = rep.summary()
    assert "violation" in text.lower() or rep.violations


def test_load_graph_rejects_malformed_documents():
    with pytest.raises(SchemaError):
        load_graph({"schema": 1})
    doc = build(ShiftedShape((3,)), 2).to_doc()
    doc["edges"][0]["i"] = 5
    with pytest.raises(SchemaError):
        load_graph(doc)


def test_doc_json_roundtrip():
    doc = build(ShiftedShape((3, 1)), 3).to_doc()
    text = json.dumps(doc)
    G = load_graph(json.loads(text))
    assert check_axioms(G).ok
