"""Asymptotic equivalence of boundary points and limit-space approximations.

A boundary point is a left-infinite eventually periodic word; by convention
its rightmost letter sits at tree level 1, so the stored sequence
preperiod + period + period + ... lists the letters from the root outward
and its length-n prefix is the level-n vertex under the point.

Two points ...x2 x1 and ...y2 y1 are equivalent when the nucleus Moore
diagram carries a left-infinite path whose i-th edge from the end is
labeled (x_i | y_i). For eventually periodic points this is decided
exactly on a finite product graph (nucleus state, period phase).
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from math import lcm

from .core import word, word_str
from .engine import CanonicalElement, NucleusResult
from .schreier import SimplicialGraph, _check_cap, build_schreier, pointed_component, simplicial

_POINT = re.compile(r"^\s*(\S+)\^w(?:\s+(\S+))?\s*$")


def _parse_word_text(text: str) -> tuple[int, ...]:
    if "." in text:
        return word([int(part) for part in text.split(".")])
    return word([int(ch) for ch in text])


@dataclass(frozen=True)
class BoundaryPoint:
    """Eventually periodic left-infinite word, canonicalized on construction.

    preperiod lists the letters nearest the root (index 0 = level 1);
    period repeats leftward after it. Canonical form: the period is
    primitive and cannot be rotated into the preperiod.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        pre = word(self.preperiod)
        per = word(self.period)
        if not per:
            raise ValueError("period must be nonempty")
        for d in range(1, len(per)):
            if len(per) % d == 0 and per == per[:d] * (len(per) // d):
                per = per[:d]
                break
        while pre and pre[-1] == per[-1]:
            per = per[-1:] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def parse(cls, text: str) -> "BoundaryPoint":
        """Read the "PERIOD^w PREPERIOD" syntax, e.g. "10^w 0" for ...1010 0."""
        m = _POINT.match(text)
        if not m:
            raise ValueError(f"boundary point must look like PERIOD^w [PREPERIOD], got {text!r}")
        per = tuple(reversed(_parse_word_text(m.group(1))))
        pre = tuple(reversed(_parse_word_text(m.group(2)))) if m.group(2) else ()
        return cls(pre, per)

    def __str__(self) -> str:
        head = word_str(tuple(reversed(self.period))) + "^w"
        if self.preperiod:
            return head + " " + word_str(tuple(reversed(self.preperiod)))
        return head

    def letter(self, i: int) -> int:
        """Letter at tree level i (i >= 1)."""
        if i < 1:
            raise ValueError("levels start at 1")
        j = i - 1
        if j < len(self.preperiod):
            return self.preperiod[j]
        return self.period[(j - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> tuple[int, ...]:
        """Level-n vertex under the point; prefixes are nested as n grows."""
        return tuple(self.letter(i) for i in range(1, n + 1))

    def max_letter(self) -> int:
        return max(self.preperiod + self.period)


def _check_point(p: BoundaryPoint, k: int) -> None:
    if p.max_letter() >= k:
        raise ValueError(f"boundary point {p} uses letters outside a {k}-letter alphabet")


@dataclass(frozen=True)
class EquivalenceWitness:
    """Eventually periodic state sequence s_0, s_1, ... along the certifying path.

    tail holds s_0 .. s_{len(tail)-1} (s_0 at the path's end, by the root);
    cycle repeats leftward forever after the tail. Reading letter x_i at
    state s_i must output y_i and move to s_{i-1}.
    """

    tail: tuple[CanonicalElement, ...]
    cycle: tuple[CanonicalElement, ...]

    def state(self, i: int) -> CanonicalElement:
        if i < len(self.tail):
            return self.tail[i]
        return self.cycle[(i - len(self.tail)) % len(self.cycle)]

    def validate(self, p: BoundaryPoint, q: BoundaryPoint) -> bool:
        """Re-check every Moore transition; periodicity makes a finite window sufficient."""
        horizon = max(len(self.tail), len(p.preperiod), len(q.preperiod)) + 2 * lcm(
            len(self.cycle), len(p.period), len(q.period)
        )
        for i in range(1, horizon + 1):
            s = self.state(i)
            x, y = p.letter(i), q.letter(i)
            if s.act((x,)) != (y,):
                return False
            if s.section((x,)) != self.state(i - 1):
                return False
        return True


def _moore_tables(nucleus: NucleusResult):
    aut, index = nucleus.moore_automaton()
    k = aut.alphabet.size
    out = [[aut.perms[i](x) for x in range(k)] for i in range(len(aut))]
    sec = [list(row) for row in aut.sections]
    elements = [None] * len(aut)
    for el, i in index.items():
        elements[i] = el
    return k, out, sec, elements


def asymptotic_equivalent(
    nucleus: NucleusResult, p: BoundaryPoint, q: BoundaryPoint
) -> tuple[bool, EquivalenceWitness | None]:
    """Decide p ~ q through the nucleus Moore diagram; return a witness when true."""
    k, out, sec, elements = _moore_tables(nucleus)
    _check_point(p, k)
    _check_point(q, k)
    nstates = len(elements)

    m = max(len(p.preperiod), len(q.preperiod))
    period = lcm(len(p.period), len(q.period))

    # Valid-state sets walking out from the root through the preperiods.
    levels = [set(range(nstates))]
    for i in range(1, m + 1):
        x, y = p.letter(i), q.letter(i)
        cur = {s for s in range(nstates) if out[s][x] == y and sec[s][x] in levels[i - 1]}
        if not cur:
            return False, None
        levels.append(cur)

    # Product graph over the periodic zone: node (s, j) means state s at a
    # level with phase j. Live nodes admit an infinite extension upward.
    pairs = [(p.letter(m + 1 + j), q.letter(m + 1 + j)) for j in range(period)]
    live = {
        (s, j)
        for j in range(period)
        for s in range(nstates)
        if out[s][pairs[j][0]] == pairs[j][1]
    }
    changed = True
    while changed:
        changed = False
        for s, j in sorted(live):
            jp = (j + 1) % period
            xp = pairs[jp][0]
            if not any((sp, jp) in live and sec[sp][xp] == s for sp in range(nstates)):
                live.discard((s, j))
                changed = True

    anchors = sorted(s for s, j in live if j == 0 and sec[s][pairs[0][0]] in levels[m])
    if not anchors:
        return False, None

    # Deterministic witness: minimal anchor, then minimal live parent at each
    # step upward until the (state, phase) pair repeats.
    node = (anchors[0], 0)
    seq = [node]
    seen = {node: 0}
    while True:
        s, j = node
        jp = (j + 1) % period
        xp = pairs[jp][0]
        parent = min(sp for sp in range(nstates) if (sp, jp) in live and sec[sp][xp] == s)
        node = (parent, jp)
        if node in seen:
            entry = seen[node]
            break
        seen[node] = len(seq)
        seq.append(node)

    down = [None] * (m + 1)
    state = sec[anchors[0]][pairs[0][0]]
    for i in range(m, 0, -1):
        down[i] = state
        state = sec[state][p.letter(i)]
    down[0] = state

    tail_ids = down + [s for s, _ in seq[:entry]]
    cycle_ids = [s for s, _ in seq[entry:]]
    witness = EquivalenceWitness(
        tuple(elements[s] for s in tail_ids), tuple(elements[s] for s in cycle_ids)
    )
    return True, witness


def equivalence_class(nucleus: NucleusResult, p: BoundaryPoint) -> set[BoundaryPoint]:
    """All eventually periodic points equivalent to p.

    Along p's letters, the sets of nucleus states compatible with each output
    choice form a finite deterministic graph; members of the class are the
    label sequences of its infinite paths. Finiteness of the class makes
    every cycle node of that graph have a single live continuation, which a
    structure check asserts before enumerating the lasso-shaped paths.
    """
    k, out, sec, _ = _moore_tables(nucleus)
    _check_point(p, k)
    nstates = len(out)
    m = len(p.preperiod)
    period = len(p.period)

    # The downward constraint is membership of the section in the previous
    # set, so the recurrence threads one state set forward at a time.
    def advance(states: frozenset, x: int, y: int) -> frozenset:
        return frozenset(s for s in range(nstates) if out[s][x] == y and sec[s][x] in states)

    # Node ("pre", i, A): A is the valid-state set after tree level i <= m.
    # Node ("cyc", j, A): the same at a level past the preperiod with phase j.
    def letter_after(node) -> int:
        kind, pos, _ = node
        if kind == "pre":
            return p.preperiod[pos] if pos < m else p.period[0]
        return p.period[(pos + 1) % period]

    def successor_key(node):
        kind, pos, _ = node
        if kind == "pre" and pos < m:
            return ("pre", pos + 1)
        if kind == "pre":
            return ("cyc", 0)
        return ("cyc", (pos + 1) % period)

    start = ("pre", 0, frozenset(range(nstates)))
    edges: dict[tuple, list[tuple[int, tuple]]] = {}
    stack = [start]
    seen = {start}
    while stack:
        node = stack.pop()
        states = node[2]
        x = letter_after(node)
        succs = []
        for y in range(k):
            nxt_states = advance(states, x, y)
            if not nxt_states:
                continue
            nkind, npos = successor_key(node)
            nxt = (nkind, npos, nxt_states)
            succs.append((y, nxt))
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
        edges[node] = succs

    # Greatest fixed point: keep nodes with some successor still live.
    live = set(seen)
    changed = True
    while changed:
        changed = False
        for node in list(live):
            if not any(nxt in live for _, nxt in edges[node]):
                live.discard(node)
                changed = True

    if start not in live:
        raise RuntimeError("no infinite path for the point itself; nucleus data inconsistent")

    live_edges = {
        node: [(y, nxt) for y, nxt in edges[node] if nxt in live] for node in live
    }

    def on_cycle(node) -> bool:
        frontier = [nxt for _, nxt in live_edges[node]]
        visited = set()
        while frontier:
            cur = frontier.pop()
            if cur == node:
                return True
            if cur in visited:
                continue
            visited.add(cur)
            frontier.extend(nxt for _, nxt in live_edges[cur])
        return False

    for node in live:
        if len(live_edges[node]) > 1 and on_cycle(node):
            raise RuntimeError(
                "equivalence class enumeration found a branching cycle; class not finite"
            )

    results: set[BoundaryPoint] = set()

    def walk(node, labels, entered):
        while True:
            if node in entered:
                idx = entered[node]
                results.add(BoundaryPoint(tuple(labels[:idx]), tuple(labels[idx:])))
                return
            entered[node] = len(labels)
            succs = live_edges[node]
            if len(succs) == 1:
                labels.append(succs[0][0])
                node = succs[0][1]
                continue
            for y, nxt in succs:
                walk(nxt, labels + [y], dict(entered))
            return

    walk(start, [], {})
    return results


def self_similarity_graph(gens: Sequence, depth: int, vertex_cap: int | None = None) -> SimplicialGraph:
    """Words of length <= depth with vertical (drop the first letter) and
    horizontal (generator action within a level) edges."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    aut = gens[0].automaton
    k = aut.alphabet.size
    total = sum(k**n for n in range(depth + 1))
    _check_cap(total, vertex_cap)

    offsets = [0]
    for n in range(depth + 1):
        offsets.append(offsets[-1] + k**n)

    labels = []
    levels = []
    for n in range(depth + 1):
        alphabet_words = aut.alphabet
        for v in range(k**n):
            labels.append(word_str(alphabet_words.word_at(v, n)))
            levels.append(n)

    edges: set[tuple[int, int]] = set()
    for n in range(1, depth + 1):
        base = offsets[n]
        parent_base = offsets[n - 1]
        block = k ** (n - 1)
        for v in range(k**n):
            edges.add((parent_base + v % block, base + v))
        level_graph = build_schreier(gens, n, vertex_cap)
        for a, b in simplicial(level_graph).edges:
            edges.add((base + a, base + b))

    return SimplicialGraph(tuple(labels), tuple(sorted(edges)), tuple(levels))


def gh_sequence(
    gens: Sequence, xi: BoundaryPoint, n_max: int, vertex_cap: int | None = None
) -> list[tuple[SimplicialGraph, int]]:
    """Rooted components (component of the xi-prefix, root position) for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [pointed_component(gens, xi, n, vertex_cap) for n in range(1, n_max + 1)]


def gh_sequence_export(
    gens: Sequence,
    xi: BoundaryPoint,
    n_max: int,
    fmt: str = "edges",
    vertex_cap: int | None = None,
) -> list[str]:
    """The rooted component sequence rendered in an export format, one text per level."""
    from .exports import export_graph

    return [
        export_graph(graph, fmt, root=root)
        for graph, root in gh_sequence(gens, xi, n_max, vertex_cap)
    ]
