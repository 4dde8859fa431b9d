"""Export formats: exact texts, round trips, determinism, caps."""

import xml.etree.ElementTree as ET

import pytest

from selfsim import (
    FORMATS,
    ResourceCapError,
    build_schreier,
    catalog_get,
    export_graph,
    parse_edges,
    pointed_component,
    simplicial,
    to_automaton,
    BoundaryPoint,
)


def _graph(key, n):
    gens = to_automaton(catalog_get(key).document())[1]
    return build_schreier(gens, n)


def test_edges_level_one_basilica_exact():
    text = export_graph(_graph("basilica", 1), "edges")
    assert text == "0\t1\ta\n1\t0\ta\n0\t0\tb\n1\t1\tb\n"


def test_matrix_level_one_basilica_exact():
    text = export_graph(_graph("basilica", 1), "matrix")
    assert text == "b,a\na,b\n"


def test_edges_round_trip():
    g = _graph("basilica", 3)
    rows = parse_edges(export_graph(g, "edges"))
    assert rows == [
        (g.vertex_label(src), g.vertex_label(dst), lab) for src, dst, lab in g.arrows()
    ]


def test_edges_root_comment():
    gens = to_automaton(catalog_get("basilica").document())[1]
    comp, root = pointed_component(gens, BoundaryPoint.parse("0^w"), 2)
    text = export_graph(comp, "edges", root=root)
    assert text.startswith("# root\t00\n")
    assert parse_edges(text)  # comment line is skipped


def test_parse_edges_rejects_malformed_lines():
    with pytest.raises(ValueError):
        parse_edges("a\tb\n")


def test_simplicial_edges_have_empty_label_column():
    gens = to_automaton(catalog_get("basilica").document())[1]
    s = simplicial(build_schreier(gens, 2))
    rows = parse_edges(export_graph(s, "edges"))
    assert rows
    for _, _, label in rows:
        assert label == ""


def test_dot_directed_and_undirected():
    g = _graph("basilica", 2)
    directed = export_graph(g, "dot")
    assert directed.startswith("digraph G {\n")
    assert '  v0 -> v2 [label="a"];' in directed
    assert directed.endswith("}\n")
    s = simplicial(g)
    undirected = export_graph(s, "dot")
    assert undirected.startswith("graph G {\n")
    assert " -- " in undirected
    assert "->" not in undirected


def test_dot_marks_root():
    gens = to_automaton(catalog_get("basilica").document())[1]
    comp, root = pointed_component(gens, BoundaryPoint.parse("1^w"), 2)
    text = export_graph(comp, "dot", root=root)
    assert f'v{root} [label="11", shape=doublecircle];' in text


def test_graphml_is_well_formed_and_complete():
    g = _graph("sierpinski", 2)
    text = export_graph(g, "graphml")
    ns = {"g": "http://graphml.org/xmlns"}
    tree = ET.fromstring(text)
    nodes = tree.findall(".//g:node", ns)
    edges = tree.findall(".//g:edge", ns)
    assert len(nodes) == g.vertex_count
    assert len(edges) == g.arrow_count
    assert tree.find(".//g:graph", ns).get("edgedefault") == "directed"
    labels = [n.find("g:data", ns).text or "" for n in nodes]
    assert labels == [g.vertex_label(i) for i in range(g.vertex_count)]


def test_graphml_root_flag():
    gens = to_automaton(catalog_get("basilica").document())[1]
    comp, root = pointed_component(gens, BoundaryPoint.parse("0^w"), 2)
    text = export_graph(comp, "graphml", root=root)
    ns = {"g": "http://graphml.org/xmlns"}
    tree = ET.fromstring(text)
    flagged = [
        node.get("id")
        for node in tree.findall(".//g:node", ns)
        if any(d.get("key") == "root" for d in node.findall("g:data", ns))
    ]
    assert flagged == [f"v{root}"]


def test_matrix_entries_join_parallel_arrows():
    text = export_graph(_graph("lamplighter", 1), "matrix")
    # both generators fix both letters or swap both, depending on the recursion
    rows = [line.split(",") for line in text.strip().split("\n")]
    assert len(rows) == 2
    joined = sorted(cell for row in rows for cell in row)
    total = sum(len(cell.split("+")) for cell in joined if cell != "0")
    assert total == 4  # two generators, two vertices


def test_matrix_rejects_simplicial_graphs():
    s = simplicial(_graph("basilica", 2))
    with pytest.raises(ValueError):
        export_graph(s, "matrix")


def test_matrix_cap():
    g = _graph("basilica", 13)
    with pytest.raises(ResourceCapError):
        export_graph(g, "matrix")


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        export_graph(_graph("basilica", 1), "yaml")


def test_exports_deterministic_across_rebuilds():
    for fmt in FORMATS:
        first = export_graph(_graph("basilica", 4), fmt)
        second = export_graph(_graph("basilica", 4), fmt)
        assert first == second
        assert first.endswith("\n")


def test_all_formats_cover_every_vertex():
    g = _graph("grigorchuk", 2)
    for fmt in ("dot", "graphml"):
        text = export_graph(g, fmt)
        for i in range(g.vertex_count):
            assert f"v{i}" in text
