"""Level-n graphs of the tree action.

Vertices of the level-n graph are the words of length n in lexicographic
order, the leftmost letter most significant. Each generator s contributes
one arrow v -> s(v) per vertex. Images are computed level by level as
permutation arrays, so building a level is linear in |A|^n per state.
"""

from __future__ import annotations

import os
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .core import Alphabet, MealyAutomaton, StateRef, word, word_str

DEFAULT_VERTEX_CAP = 2**24
ENV_VERTEX_CAP = "SELFSIM_VERTEX_CAP"


class ResourceCapError(RuntimeError):
    """A requested structure exceeds the configured vertex cap."""


def _effective_cap(vertex_cap: int | None) -> int:
    if vertex_cap is not None:
        return vertex_cap
    env = os.environ.get(ENV_VERTEX_CAP)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_VERTEX_CAP} must be an integer, got {env!r}") from None
    return DEFAULT_VERTEX_CAP


def _check_cap(count: int, vertex_cap: int | None) -> None:
    cap = _effective_cap(vertex_cap)
    if count > cap:
        raise ResourceCapError(
            f"{count} vertices exceed the cap of {cap}; raise it explicitly or via {ENV_VERTEX_CAP}"
        )


def _section_closure(aut: MealyAutomaton, indices: Sequence[int]) -> list[int]:
    seen = list(dict.fromkeys(indices))
    seen_set = set(seen)
    queue = list(seen)
    while queue:
        i = queue.pop()
        for j in aut.sections[i]:
            if j not in seen_set:
                seen_set.add(j)
                seen.append(j)
                queue.append(j)
    return seen


def _level_tables(aut: MealyAutomaton, indices: Sequence[int], n: int) -> dict[int, np.ndarray]:
    """Image arrays on level n for the given states and all their sections."""
    k = aut.alphabet.size
    needed = _section_closure(aut, indices)
    size = k**n
    dtype = np.int32 if size <= 2**31 - 1 else np.int64
    tables = {i: np.zeros(1, dtype=dtype) for i in needed}
    for level in range(1, n + 1):
        block = k ** (level - 1)
        nxt = {}
        for i in needed:
            parts = [
                aut.perms[i](x) * block + tables[aut.sections[i][x]]
                for x in range(k)
            ]
            nxt[i] = np.concatenate(parts)
        tables = nxt
    return tables


def level_permutation(state: StateRef, n: int, vertex_cap: int | None = None) -> np.ndarray:
    """Permutation array of the state on level n: entry v is the image of v."""
    aut = state.automaton
    _check_cap(aut.alphabet.size**n, vertex_cap)
    return _level_tables(aut, [state.index], n)[state.index]


@dataclass
class LabeledSchreierGraph:
    """Arrows v -> s(v) on level `level`, one per generator and vertex."""

    alphabet_size: int
    level: int
    gen_labels: tuple[str, ...]
    images: list[np.ndarray]

    @property
    def vertex_count(self) -> int:
        return self.alphabet_size**self.level

    @property
    def arrow_count(self) -> int:
        return len(self.gen_labels) * self.vertex_count

    def vertex_word(self, i: int) -> tuple[int, ...]:
        return Alphabet(self.alphabet_size).word_at(i, self.level)

    def vertex_label(self, i: int) -> str:
        return word_str(self.vertex_word(i))

    def arrows(self):
        """Yield (source, target, label) in generator order, then vertex order."""
        for g, label in enumerate(self.gen_labels):
            img = self.images[g]
            for v in range(self.vertex_count):
                yield v, int(img[v]), label


def build_schreier(
    gens: Sequence[StateRef], n: int, vertex_cap: int | None = None
) -> LabeledSchreierGraph:
    """Level-n graph of the generators' action."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    if not gens:
        raise ValueError("need at least one generator")
    aut = gens[0].automaton
    for g in gens:
        if g.automaton != aut:
            raise ValueError("all generators must come from one automaton")
    _check_cap(aut.alphabet.size**n, vertex_cap)
    tables = _level_tables(aut, [g.index for g in gens], n)
    return LabeledSchreierGraph(
        aut.alphabet.size,
        n,
        tuple(g.name for g in gens),
        [tables[g.index] for g in gens],
    )


@dataclass
class SymbolicAdjacencyMatrix:
    """Square matrix whose entry (i, j) is the multiset of generators mapping i to j."""

    dimension: int
    entries: dict[tuple[int, int], tuple[str, ...]]

    def entry(self, i: int, j: int) -> tuple[str, ...]:
        return self.entries.get((i, j), ())


def symbolic_matrix(graph: LabeledSchreierGraph) -> SymbolicAdjacencyMatrix:
    entries: dict[tuple[int, int], list[str]] = {}
    for src, dst, label in graph.arrows():
        entries.setdefault((src, dst), []).append(label)
    return SymbolicAdjacencyMatrix(
        graph.vertex_count, {key: tuple(val) for key, val in entries.items()}
    )


@dataclass
class SimplicialGraph:
    """Undirected graph: loops dropped, multiple arrows collapsed to one edge."""

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    levels: tuple[int, ...] | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.labels)


def simplicial(graph: LabeledSchreierGraph) -> SimplicialGraph:
    edges: set[tuple[int, int]] = set()
    for img in graph.images:
        src = np.arange(len(img))
        lo = np.minimum(src, img)
        hi = np.maximum(src, img)
        keep = lo != hi
        edges.update(zip(lo[keep].tolist(), hi[keep].tolist()))
    labels = tuple(graph.vertex_label(i) for i in range(graph.vertex_count))
    return SimplicialGraph(labels, tuple(sorted(edges)))


def _inverse_tables(graph: LabeledSchreierGraph) -> list[np.ndarray]:
    out = []
    for img in graph.images:
        inv = np.empty_like(img)
        inv[img] = np.arange(len(img), dtype=img.dtype)
        out.append(inv)
    return out


def _component_from(
    start: int, fwd: list[np.ndarray], bwd: list[np.ndarray], visited: np.ndarray
) -> np.ndarray:
    frontier = np.array([start], dtype=np.int64)
    visited[start] = True
    chunks = [frontier]
    steps = fwd + bwd
    while frontier.size:
        if steps:
            nxt = np.unique(np.concatenate([arr[frontier] for arr in steps]))
            nxt = nxt[~visited[nxt]]
        else:
            nxt = np.empty(0, dtype=np.int64)
        visited[nxt] = True
        chunks.append(nxt)
        frontier = nxt
    return np.sort(np.concatenate(chunks))


def connected_components(graph: LabeledSchreierGraph) -> list[np.ndarray]:
    """Breadth-first partition of the vertices, components ordered by least vertex."""
    total = graph.vertex_count
    visited = np.zeros(total, dtype=bool)
    fwd = graph.images
    bwd = _inverse_tables(graph)
    out = []
    for start in range(total):
        if not visited[start]:
            out.append(_component_from(start, fwd, bwd, visited))
    return out


def pointed_component(
    gens: Sequence[StateRef], xi, n: int, vertex_cap: int | None = None
) -> tuple[SimplicialGraph, int]:
    """Component of the level-n graph containing the length-n prefix of xi.

    xi may be a boundary point (anything with a prefix method) or a word.
    Returns the component as a simplicial graph plus the root's position in it.
    """
    graph = build_schreier(gens, n, vertex_cap)
    alphabet = Alphabet(graph.alphabet_size)
    if hasattr(xi, "prefix"):
        root_word = xi.prefix(n)
    else:
        root_word = word(xi)
        if len(root_word) != n:
            raise ValueError(f"root word must have length {n}")
    root = alphabet.index_of(alphabet.check_word(root_word))
    visited = np.zeros(graph.vertex_count, dtype=bool)
    members = _component_from(root, graph.images, _inverse_tables(graph), visited)
    position = {int(v): i for i, v in enumerate(members)}
    edges: set[tuple[int, int]] = set()
    for img in graph.images:
        for v in members.tolist():
            t = int(img[v])
            if t != v:
                a, b = position[v], position[t]
                edges.add((min(a, b), max(a, b)))
    labels = tuple(graph.vertex_label(int(v)) for v in members)
    return SimplicialGraph(labels, tuple(sorted(edges))), position[root]


def _orbit_code(images: list, root: int) -> tuple:
    """Breadth-first encoding of the forward orbit of root; canonical per rooted orbit."""
    number = {root: 0}
    order = [root]
    code = []
    for v in order:
        for img in images:
            t = int(img[v])
            if t not in number:
                number[t] = len(order)
                order.append(t)
            code.append(number[t])
    return (len(order), tuple(code))


def _canonical_label_code(images: list, total: int) -> tuple:
    """Canonical form of a vertex set with one permutation per label.

    The graph splits into orbits of the permutation group the labels generate;
    each orbit's canonical code is the least breadth-first encoding over its
    possible roots, and the full form is the sorted tuple of orbit codes.
    """
    for img in images:
        counts = np.bincount(np.asarray(img, dtype=np.int64), minlength=total)
        if not (counts == 1).all():
            raise ValueError("each label must act as a permutation")
    assigned = np.zeros(total, dtype=bool)
    codes = []
    for start in range(total):
        if assigned[start]:
            continue
        number = {start: 0}
        order = [start]
        for v in order:
            for img in images:
                t = int(img[v])
                if t not in number:
                    number[t] = len(order)
                    order.append(t)
        for v in order:
            assigned[v] = True
        codes.append(min(_orbit_code(images, v) for v in order))
    return tuple(sorted(codes))


def dual_moore_check(aut: MealyAutomaton, n: int) -> bool:
    """Cross-validation: the level-n graph of all states matches the dual construction.

    The dual reading swaps the roles of states and letters: vertices are
    letter words and each state q moves a word to its image, the transition
    computed by folding outputs and sections from the deepest letter up.
    Both labeled graphs are canonicalized and compared; exact canonical
    labeling is only attempted for n at most 4.
    """
    if not 1 <= n <= 4:
        raise ValueError("dual Moore comparison only runs for levels 1 through 4")
    k = aut.alphabet.size
    total = k**n
    tables = _level_tables(aut, list(range(len(aut))), n)
    schreier_images = [np.asarray(tables[i], dtype=np.int64) for i in range(len(aut))]

    alphabet = Alphabet(k)
    dual_images = []
    for q in range(len(aut)):
        img = np.empty(total, dtype=np.int64)
        for v in range(total):
            letters = alphabet.word_at(v, n)
            state = q
            out = []
            for x in reversed(letters):
                out.append(aut.perms[state](x))
                state = aut.sections[state][x]
            img[v] = alphabet.index_of(tuple(reversed(out)))
        dual_images.append(img)

    return _canonical_label_code(schreier_images, total) == _canonical_label_code(
        dual_images, total
    )
