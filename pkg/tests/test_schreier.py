"""Level graphs: construction, components, pointed components, dual check."""

from itertools import product

import numpy as np
import pytest

from selfsim import (
    Alphabet,
    ResourceCapError,
    act_word,
    build_schreier,
    catalog_get,
    connected_components,
    dual_moore_check,
    level_permutation,
    pointed_component,
    simplicial,
    symbolic_matrix,
    to_automaton,
    BoundaryPoint,
)

from ._oracles import component_count, component_sets


def _gens(key):
    return to_automaton(catalog_get(key).document())[1]


def test_graph_counts_and_labels():
    gens = _gens("basilica")
    for n in range(5):
        g = build_schreier(gens, n)
        assert g.vertex_count == 2**n
        assert g.arrow_count == 2 * 2**n
        assert g.gen_labels == ("a", "b")
        for v in range(g.vertex_count):
            assert Alphabet(2).index_of(g.vertex_word(v)) == v
            assert g.vertex_label(v) == "".join(str(x) for x in g.vertex_word(v))


def test_level_zero_graph():
    gens = _gens("basilica")
    g = build_schreier(gens, 0)
    assert g.vertex_count == 1
    assert list(g.arrows()) == [(0, 0, "a"), (0, 0, "b")]


def test_arrows_match_the_action_exhaustively():
    for key, depth in (("basilica", 5), ("sierpinski", 3)):
        gens = _gens(key)
        k = gens[0].automaton.alphabet.size
        alphabet = Alphabet(k)
        for n in range(1, depth + 1):
            g = build_schreier(gens, n)
            by_label = dict(zip(g.gen_labels, g.images))
            for gen in gens:
                img = by_label[gen.name]
                for v in range(k**n):
                    w = alphabet.word_at(v, n)
                    assert int(img[v]) == alphabet.index_of(act_word(gen, w))


def test_images_are_permutations():
    gens = _gens("aleshin")
    g = build_schreier(gens, 6)
    for img in g.images:
        assert (np.bincount(img, minlength=g.vertex_count) == 1).all()


def test_level_permutation_matches_graph_row():
    gens = _gens("basilica")
    g = build_schreier(gens, 4)
    assert (level_permutation(gens[0], 4) == g.images[0]).all()
    assert (level_permutation(gens[1], 4) == g.images[1]).all()


def test_build_schreier_validation():
    gens = _gens("basilica")
    with pytest.raises(ValueError):
        build_schreier(gens, -1)
    with pytest.raises(ValueError):
        build_schreier([], 2)
    other = _gens("odometer")
    with pytest.raises(ValueError):
        build_schreier([gens[0], other[0]], 2)


def test_vertex_cap_enforced():
    gens = _gens("basilica")
    with pytest.raises(ResourceCapError):
        build_schreier(gens, 11, vertex_cap=1000)
    # explicit cap admits exactly the boundary
    assert build_schreier(gens, 10, vertex_cap=1024).vertex_count == 1024


def test_vertex_cap_env_variable(monkeypatch):
    gens = _gens("basilica")
    monkeypatch.setenv("SELFSIM_VERTEX_CAP", "100")
    with pytest.raises(ResourceCapError):
        build_schreier(gens, 7)
    monkeypatch.setenv("SELFSIM_VERTEX_CAP", "not-a-number")
    with pytest.raises(ValueError):
        build_schreier(gens, 7)


def test_symbolic_matrix_agrees_with_arrows():
    gens = _gens("basilica")
    g = build_schreier(gens, 3)
    m = symbolic_matrix(g)
    assert m.dimension == 8
    collected = {}
    for src, dst, label in g.arrows():
        collected.setdefault((src, dst), []).append(label)
    for i in range(8):
        for j in range(8):
            assert m.entry(i, j) == tuple(collected.get((i, j), []))
    total = sum(len(m.entry(i, j)) for i in range(8) for j in range(8))
    assert total == g.arrow_count


def test_simplicial_drops_loops_and_multiplicity():
    gens = _gens("basilica")
    g = build_schreier(gens, 3)
    s = simplicial(g)
    assert s.vertex_count == g.vertex_count
    expected = set()
    for src, dst, _ in g.arrows():
        if src != dst:
            expected.add((min(src, dst), max(src, dst)))
    assert set(s.edges) == expected
    assert s.edges == tuple(sorted(s.edges))
    for a, b in s.edges:
        assert a < b


def test_connected_components_match_union_find():
    cases = [("basilica", 6), ("identity", 5), ("aleshin", 5), ("sierpinski", 4)]
    for key, depth in cases:
        gens = _gens(key)
        for n in range(1, depth + 1):
            g = build_schreier(gens, n)
            comps = connected_components(g)
            edges = [(src, dst) for src, dst, _ in g.arrows()]
            assert len(comps) == component_count(g.vertex_count, edges)
            assert {frozenset(int(v) for v in c) for c in comps} == component_sets(
                g.vertex_count, edges
            )


def test_component_counts_frozen():
    gens = _gens("identity")
    counts = [len(connected_components(build_schreier(gens, n))) for n in range(1, 7)]
    assert counts == [2, 4, 8, 16, 32, 64]
    gens = _gens("basilica")
    counts = [len(connected_components(build_schreier(gens, n))) for n in range(1, 9)]
    assert counts == [1] * 8


def test_pointed_component_of_connected_graph_is_everything():
    gens = _gens("basilica")
    xi = BoundaryPoint.parse("0^w")
    comp, root = pointed_component(gens, xi, 4)
    assert comp.vertex_count == 16
    assert comp.labels[root] == "0000"
    full = simplicial(build_schreier(gens, 4))
    relabel = {lab: i for i, lab in enumerate(comp.labels)}
    mapped = {
        tuple(sorted((relabel[full.labels[a]], relabel[full.labels[b]])))
        for a, b in full.edges
    }
    assert mapped == set(comp.edges)


def test_pointed_component_of_identity_is_a_single_vertex():
    gens = _gens("identity")
    comp, root = pointed_component(gens, BoundaryPoint.parse("1^w"), 3)
    assert comp.vertex_count == 1
    assert root == 0
    assert comp.labels == ("111",)
    assert comp.edges == ()


def test_pointed_component_accepts_plain_words():
    gens = _gens("basilica")
    comp_a, root_a = pointed_component(gens, "010", 3)
    # written right to left: ...000 010, so the level-1 letter is the final 0
    comp_b, root_b = pointed_component(gens, BoundaryPoint.parse("0^w 010"), 3)
    assert comp_a.labels[root_a] == "010"
    assert comp_b.labels[root_b] == "010"
    assert comp_a == comp_b
    with pytest.raises(ValueError):
        pointed_component(gens, "01", 3)


def test_pointed_roots_nest_as_prefixes():
    gens = _gens("basilica")
    xi = BoundaryPoint.parse("10^w 1")
    for n in range(1, 6):
        comp, root = pointed_component(gens, xi, n)
        assert comp.labels[root] == "".join(str(x) for x in xi.prefix(n))


def test_dual_moore_check_small_levels():
    for key in ("basilica", "grigorchuk", "odometer", "identity"):
        aut, _ = to_automaton(catalog_get(key).document())
        for n in (1, 2, 3):
            assert dual_moore_check(aut, n)


def test_dual_moore_check_rejects_large_levels():
    aut, _ = to_automaton(catalog_get("basilica").document())
    with pytest.raises(ValueError):
        dual_moore_check(aut, 5)
    with pytest.raises(ValueError):
        dual_moore_check(aut, 0)
