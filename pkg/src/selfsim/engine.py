"""Group elements generated by automaton states, with decidable equality.

A group word over the states is canonicalized by building the Mealy
automaton of all its sections, minimizing it, and renumbering the part
reachable from the word breadth first. Minimal reachable rooted automata
are unique per action, so two words are equal in the group exactly when
their canonical tables coincide; CanonicalElement instances therefore
hash and compare by value.

The nucleus of the generated group is the set of sections that keep
recurring arbitrarily deep in products, computed as a closure: seed with
the recurrent sections of the generators and their inverses, then fold in
the recurrent sections of all pairwise products until stable or a bound
trips. Recurrent sections of a finite-state element are the states
reachable through a cycle of its automaton.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

from .core import (
    Alphabet,
    MealyAutomaton,
    Permutation,
    StateRef,
    invert,
    refine_partition,
)

Tables = tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]


def _bfs_root(k: int, perms, sections, root: int) -> "CanonicalElement":
    """Renumber the part reachable from root in breadth-first order."""
    order = [root]
    number = {root: 0}
    for i in order:
        for x in range(k):
            j = sections[i][x]
            if j not in number:
                number[j] = len(order)
                order.append(j)
    out_perms = tuple(tuple(perms[i]) for i in order)
    out_sections = tuple(tuple(number[sections[i][x]] for x in range(k)) for i in order)
    return CanonicalElement(k, out_perms, out_sections)


def _canonical(k: int, perms, sections, root: int) -> "CanonicalElement":
    """Minimize raw action tables and canonicalize the state at root."""
    color, count = refine_partition([tuple(p) for p in perms], [tuple(s) for s in sections])
    reps: list[int | None] = [None] * count
    for i, c in enumerate(color):
        if reps[c] is None:
            reps[c] = i
    qperms = [tuple(perms[reps[c]]) for c in range(count)]
    qsections = [tuple(color[j] for j in sections[reps[c]]) for c in range(count)]
    return _bfs_root(k, qperms, qsections, color[root])


@dataclass(frozen=True)
class CanonicalElement:
    """A tree automorphism in canonical form: root is state 0 of a minimal automaton.

    perms[i] is the output image row of state i and sections[i][x] the state
    below letter x. Equality of instances is equality in the group.
    """

    k: int
    perms: tuple[tuple[int, ...], ...]
    sections: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        # hashed constantly by closure sets; the tables never change
        object.__setattr__(self, "_hash", hash((self.k, self.perms, self.sections)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def identity(cls, k: int) -> "CanonicalElement":
        return cls(k, (tuple(range(k)),), ((0,) * k,))

    @property
    def size(self) -> int:
        return len(self.perms)

    @property
    def is_identity(self) -> bool:
        return self.size == 1 and self.perms[0] == tuple(range(self.k)) and self.sections[0] == (0,) * self.k

    @property
    def sort_key(self):
        return (self.size, self.perms, self.sections)

    def act(self, letters: Sequence[int] | str) -> tuple[int, ...]:
        w = Alphabet(self.k).check_word(letters)
        out = []
        i = 0
        for x in w:
            out.append(self.perms[i][x])
            i = self.sections[i][x]
        return tuple(out)

    def section(self, letters: Sequence[int] | str) -> "CanonicalElement":
        w = Alphabet(self.k).check_word(letters)
        i = 0
        for x in w:
            i = self.sections[i][x]
        return _bfs_root(self.k, self.perms, self.sections, i)

    def state_element(self, i: int) -> "CanonicalElement":
        """The element represented by internal state i."""
        return _bfs_root(self.k, self.perms, self.sections, i)

    def __mul__(self, other: "CanonicalElement") -> "CanonicalElement":
        if not isinstance(other, CanonicalElement):
            return NotImplemented
        if self.k != other.k:
            raise ValueError("elements act on different alphabets")
        k = self.k
        pairs: dict[tuple[int, int], int] = {(0, 0): 0}
        order = [(0, 0)]
        perms = []
        sections = []
        for i, j in order:
            images = []
            row = []
            for x in range(k):
                y = other.perms[j][x]
                images.append(self.perms[i][y])
                nxt = (self.sections[i][y], other.sections[j][x])
                if nxt not in pairs:
                    pairs[nxt] = len(order)
                    order.append(nxt)
                row.append(pairs[nxt])
            perms.append(tuple(images))
            sections.append(tuple(row))
        return _canonical(k, perms, sections, 0)

    def inverse(self) -> "CanonicalElement":
        inv_perms = []
        inv_sections = []
        for i in range(self.size):
            inv = [0] * self.k
            for x, y in enumerate(self.perms[i]):
                inv[y] = x
            inv_perms.append(tuple(inv))
            inv_sections.append(tuple(self.sections[i][inv[y]] for y in range(self.k)))
        return _canonical(self.k, inv_perms, inv_sections, 0)

    def __pow__(self, n: int) -> "CanonicalElement":
        if n == 0:
            return CanonicalElement.identity(self.k)
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def __repr__(self) -> str:
        return f"CanonicalElement(k={self.k}, states={self.size})"


@dataclass(frozen=True)
class GroupWord:
    """Product of generators and inverses; the rightmost factor acts first."""

    generators: tuple[StateRef, ...]
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("a word needs a generator basis")
        aut = self.generators[0].automaton
        if any(g.automaton is not aut and g.automaton != aut for g in self.generators):
            raise ValueError("all generators must come from one automaton")
        for pos, exp in self.factors:
            if not 0 <= pos < len(self.generators):
                raise ValueError(f"factor index {pos} out of range")
            if exp not in (1, -1):
                raise ValueError("exponents must be +1 or -1")

    def reduce(self) -> "GroupWord":
        """Free reduction: cancel adjacent g g^-1 pairs."""
        stack: list[tuple[int, int]] = []
        for f in self.factors:
            if stack and stack[-1][0] == f[0] and stack[-1][1] == -f[1]:
                stack.pop()
            else:
                stack.append(f)
        return GroupWord(self.generators, tuple(stack))

    def inverse(self) -> "GroupWord":
        return GroupWord(self.generators, tuple((p, -e) for p, e in reversed(self.factors)))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if self.generators != other.generators:
            raise ValueError("words must share a generator basis")
        return GroupWord(self.generators, self.factors + other.factors)


def canonical_state(state: StateRef) -> CanonicalElement:
    """Canonical element acting like a single automaton state."""
    aut = state.automaton
    perms = [p.images for p in aut.perms]
    return _canonical(aut.alphabet.size, perms, list(aut.sections), state.index)


def canonicalize(gw: GroupWord) -> CanonicalElement:
    """Canonical element of a group word; decides the word problem."""
    base = gw.generators[0].automaton
    aut = invert(base)
    assert aut.inverse_index is not None
    k = aut.alphabet.size
    if not gw.factors:
        return CanonicalElement.identity(k)
    factor_states = tuple(
        gw.generators[pos].index if exp == 1 else aut.inverse_index[gw.generators[pos].index]
        for pos, exp in gw.factors
    )
    tuples: dict[tuple[int, ...], int] = {factor_states: 0}
    order = [factor_states]
    perms = []
    sections = []
    for t in order:
        images = []
        row = []
        for x in range(k):
            y = x
            sec = []
            for i in reversed(t):
                sec.append(aut.sections[i][y])
                y = aut.perms[i](y)
            images.append(y)
            nxt = tuple(reversed(sec))
            if nxt not in tuples:
                tuples[nxt] = len(order)
                order.append(nxt)
            row.append(tuples[nxt])
        perms.append(tuple(images))
        sections.append(tuple(row))
    return _canonical(k, perms, sections, 0)


def canonical_generators(gens: Sequence[StateRef]) -> list[tuple[str, CanonicalElement]]:
    return [(g.name, canonical_state(g)) for g in gens]


def recurrent_sections(e: CanonicalElement) -> list[CanonicalElement]:
    """Sections of e occurring at arbitrarily deep words.

    These are the states of e's automaton reachable from a cycle: any
    sufficiently long path revisits a state, and any state behind a cycle is
    hit at unboundedly many depths. Cycle states are found through one
    bitmask transitive closure, then expanded forward.
    """
    n = e.size
    adj = [0] * n
    for i in range(n):
        for j in e.sections[i]:
            adj[i] |= 1 << j
    # reach[i] as a bitmask; iterate to the fixed point
    reach = list(adj)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            mask = reach[i]
            grown = mask
            rest = mask
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                grown |= reach[j]
            if grown != mask:
                reach[i] = grown
                changed = True
    on_cycle = [i for i in range(n) if reach[i] >> i & 1]
    keep = 0
    for i in on_cycle:
        keep |= (1 << i) | reach[i]
    uniq: dict[CanonicalElement, None] = {}
    for j in range(n):
        if keep >> j & 1:
            uniq.setdefault(e.state_element(j))
    return list(uniq)


@dataclass(frozen=True)
class NucleusResult:
    """Outcome of a nucleus computation.

    verdict is "contracting" with the nucleus elements and the least depth k
    at which every product of two elements of S union N has all its sections
    back inside N, or "bound-exceeded" when the closure passed max_elements
    (reason "elements") or no such depth was certified within max_depth
    (reason "depth").
    """

    verdict: str
    elements: tuple[CanonicalElement, ...] | None
    depth: int | None
    max_elements: int
    max_depth: int
    witness_count: int | None = None
    reason: str | None = None
    gen_elements: tuple[tuple[str, CanonicalElement], ...] = field(default=(), compare=False)

    @property
    def is_contracting(self) -> bool:
        return self.verdict == "contracting"

    def element_names(self) -> list[str]:
        """Deterministic printable names: id, generator names, then n<i>."""
        assert self.elements is not None
        named: dict[CanonicalElement, str] = {CanonicalElement.identity(self.elements[0].k if self.elements else 2): "id"}
        for name, el in self.gen_elements:
            named.setdefault(el, name)
            named.setdefault(el.inverse(), name + "^-1")
        out = []
        for i, el in enumerate(self.elements):
            out.append(named.get(el, f"n{i}"))
        return out

    def moore_automaton(self) -> tuple[MealyAutomaton, dict[CanonicalElement, int]]:
        """The nucleus as a Mealy automaton; the nucleus is closed under sections."""
        if not self.is_contracting:
            raise NotContractingError("no nucleus: verdict is bound-exceeded")
        assert self.elements is not None
        index = {el: i for i, el in enumerate(self.elements)}
        k = self.elements[0].k
        names = tuple(self.element_names())
        perms = tuple(Permutation(el.perms[0]) for el in self.elements)
        sections = []
        for el in self.elements:
            row = []
            for x in range(k):
                sec = el.section((x,))
                row.append(index[sec])
            sections.append(tuple(row))
        aut = MealyAutomaton(Alphabet(k), names, perms, tuple(sections))
        return aut, index


class NotContractingError(RuntimeError):
    """The operation needs a contracting nucleus but none was certified."""


def compute_nucleus(
    gens: Sequence[StateRef], max_elements: int = 10000, max_depth: int = 20
) -> NucleusResult:
    """Closure computation of the nucleus, bounded by max_elements and max_depth."""
    if not gens:
        raise ValueError("need at least one generator")
    k = gens[0].automaton.alphabet.size
    named = canonical_generators(gens)
    seeds: dict[CanonicalElement, None] = {CanonicalElement.identity(k): None}
    symmetric: dict[CanonicalElement, None] = {CanonicalElement.identity(k): None}
    for _, el in named:
        symmetric.setdefault(el)
        symmetric.setdefault(el.inverse())
    for el in symmetric:
        for s in recurrent_sections(el):
            seeds.setdefault(s)

    members: dict[CanonicalElement, None] = dict(seeds)
    frontier = list(members)
    gen_elements = tuple(named)
    while frontier:
        new: list[CanonicalElement] = []
        existing = list(members)
        frontier_set = set(frontier)
        pair_iter = itertools.chain(
            itertools.product(existing, frontier),
            itertools.product(frontier, [e for e in existing if e not in frontier_set]),
        )
        for left, right in pair_iter:
            for s in recurrent_sections(left * right):
                if s not in members:
                    members[s] = None
                    new.append(s)
                    if len(members) > max_elements:
                        return NucleusResult(
                            "bound-exceeded", None, None, max_elements, max_depth,
                            witness_count=len(members), reason="elements",
                            gen_elements=gen_elements,
                        )
        frontier = new

    elements = tuple(sorted(members, key=lambda e: e.sort_key))
    element_set = set(elements)

    # least k with (S u N)^2 restricted to words of length k inside N
    pool: dict[CanonicalElement, None] = {}
    for el in symmetric:
        pool.setdefault(el)
    for el in elements:
        pool.setdefault(el)
    depth = 1
    for left, right in itertools.product(pool, repeat=2):
        prod = left * right
        level = {0}
        membership = {i: prod.state_element(i) in element_set for i in range(prod.size)}
        d = 0
        while True:
            level = {prod.sections[i][x] for i in level for x in range(prod.k)}
            d += 1
            if all(membership[i] for i in level):
                break
            if d >= max_depth:
                return NucleusResult(
                    "bound-exceeded", None, None, max_elements, max_depth,
                    witness_count=len(elements), reason="depth",
                    gen_elements=gen_elements,
                )
        depth = max(depth, d)
    return NucleusResult(
        "contracting", elements, depth, max_elements, max_depth,
        gen_elements=gen_elements,
    )


@dataclass(frozen=True)
class RecurrenceVerdict:
    """Three-valued outcome: kind is "true", "false" or "inconclusive"."""

    kind: str
    word_length_bound: int | None = None

    def __bool__(self) -> bool:
        return self.kind == "true"


def is_recurrent(gens: Sequence[StateRef], max_word_length: int = 8) -> RecurrenceVerdict:
    """Bounded test that the action is recurrent (self-replicating).

    Checks level-1 transitivity, then looks for words that stabilize letter 0
    whose sections at 0 hit every generator class. Finding all of them proves
    recurrence; a nontransitive level-1 action refutes it; otherwise the
    verdict is inconclusive at the given word length bound.
    """
    if not gens:
        raise ValueError("need at least one generator")
    aut = gens[0].automaton
    k = aut.alphabet.size
    perms = [aut.perms[g.index] for g in gens]
    orbit = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for p in perms:
                for y in (p(x), p.inverse()(x)):
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
        frontier = nxt
    if len(orbit) != k:
        return RecurrenceVerdict("false")

    targets = {canonical_state(g) for g in gens}
    found: set[CanonicalElement] = set()
    step: list[CanonicalElement] = []
    for g in gens:
        el = canonical_state(g)
        step.extend([el, el.inverse()])
    ball: dict[CanonicalElement, None] = {CanonicalElement.identity(k): None}
    frontier_elems = [CanonicalElement.identity(k)]
    for _ in range(max_word_length):
        new_elems: list[CanonicalElement] = []
        for e in frontier_elems:
            for s in step:
                prod = e * s
                if prod in ball:
                    continue
                ball[prod] = None
                new_elems.append(prod)
                if prod.act((0,)) == (0,):
                    sec = prod.section((0,))
                    if sec in targets:
                        found.add(sec)
                        if found == targets:
                            return RecurrenceVerdict("true")
        frontier_elems = new_elems
    return RecurrenceVerdict("inconclusive", max_word_length)
