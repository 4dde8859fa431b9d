"""Mealy automata acting on the regular rooted tree.

A state q of an invertible Mealy automaton acts on finite words over the
alphabet {0, ..., k-1} by

    q(empty) = empty,    q(x v) = q(x) . q|x(v),

where q(x) is the output permutation applied to the first letter and q|x
is the section of q at x, the state that takes over below that letter.
Words are tuples of letters; the first letter is the top tree level.

Elements compose as functions: (g h)(w) = g(h(w)), so in a written
product the rightmost factor acts first, and sections obey
(g h)|_v = g|_{h(v)} . h|_v.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Sequence
from dataclasses import dataclass


def word(letters: Sequence[int] | str) -> tuple[int, ...]:
    """Coerce a word given as a digit string ("011") or int sequence to a tuple."""
    if isinstance(letters, str):
        out = []
        for ch in letters:
            if not ch.isdigit():
                raise ValueError(f"not a letter: {ch!r}")
            out.append(int(ch))
        return tuple(out)
    return tuple(int(x) for x in letters)


def word_str(w: Sequence[int]) -> str:
    """Render a word as a digit string; letters above 9 are dot separated."""
    if any(x > 9 for x in w):
        return ".".join(str(x) for x in w)
    return "".join(str(x) for x in w)


@dataclass(frozen=True)
class Alphabet:
    """Finite alphabet {0, ..., size-1}."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("alphabet size must be at least 1")

    @property
    def letters(self) -> range:
        return range(self.size)

    def check_word(self, letters: Sequence[int] | str) -> tuple[int, ...]:
        w = word(letters)
        for x in w:
            if not 0 <= x < self.size:
                raise ValueError(f"letter {x} out of range for alphabet of size {self.size}")
        return w

    def index_of(self, w: Sequence[int]) -> int:
        """Rank of a word among all words of its length, leftmost letter most significant."""
        i = 0
        for x in w:
            i = i * self.size + x
        return i

    def word_at(self, index: int, n: int) -> tuple[int, ...]:
        """Inverse of index_of for words of length n."""
        out = [0] * n
        for pos in range(n - 1, -1, -1):
            index, out[pos] = divmod(index, self.size)
        return tuple(out)


@dataclass(frozen=True)
class Permutation:
    """Permutation of {0, ..., k-1} stored by its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.images)
        if sorted(self.images) != list(range(k)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(k)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], k: int) -> "Permutation":
        images = list(range(k))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < k:
                    raise ValueError(f"cycle letter {x} out of range for alphabet of size {k}")
                if x in seen:
                    raise ValueError(f"letter {x} repeated in cycle notation")
                seen.add(x)
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(x) = self(other(x))."""
        return Permutation(tuple(self.images[y] for y in other.images))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its least element, sorted, fixed points omitted."""
        out = []
        seen: set[int] = set()
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)


@dataclass(frozen=True)
class MealyAutomaton:
    """Invertible Mealy automaton: per state an output permutation and a section row.

    sections[i][x] is the index of the state q_i|x. When inverse_closed is
    true the automaton contains a formal inverse for every state and
    inverse_index[i] is its index; inverting twice resolves to the original
    state.
    """

    alphabet: Alphabet
    names: tuple[str, ...]
    perms: tuple[Permutation, ...]
    sections: tuple[tuple[int, ...], ...]
    inverse_closed: bool = False
    inverse_index: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.names)
        k = self.alphabet.size
        if len(set(self.names)) != n:
            raise ValueError("state names must be unique")
        if len(self.perms) != n or len(self.sections) != n:
            raise ValueError("perms and sections must match the state count")
        for p in self.perms:
            if p.degree != k:
                raise ValueError("permutation degree must equal the alphabet size")
        for row in self.sections:
            if len(row) != k:
                raise ValueError("each state needs one section per letter")
            for j in row:
                if not 0 <= j < n:
                    raise ValueError(f"section index {j} out of range")
        if self.inverse_closed:
            if self.inverse_index is None or len(self.inverse_index) != n:
                raise ValueError("inverse_closed automaton needs a full inverse_index")

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def state(self, key: str | int) -> "StateRef":
        if isinstance(key, str):
            try:
                key = self.names.index(key)
            except ValueError:
                raise KeyError(f"no state named {key!r}") from None
        if not 0 <= key < len(self.names):
            raise IndexError(f"state index {key} out of range")
        return StateRef(self, key)

    def states(self) -> list["StateRef"]:
        return [StateRef(self, i) for i in range(len(self.names))]


@dataclass(frozen=True)
class StateRef:
    """A state of a specific automaton."""

    automaton: MealyAutomaton
    index: int

    @property
    def name(self) -> str:
        return self.automaton.names[self.index]

    def __repr__(self) -> str:
        return f"StateRef({self.name!r})"


def act_letter(state: StateRef, x: int) -> tuple[int, StateRef]:
    """One step of the action: returns (output letter, section at x)."""
    aut = state.automaton
    if not 0 <= x < aut.alphabet.size:
        raise ValueError(f"letter {x} out of range for alphabet of size {aut.alphabet.size}")
    y = aut.perms[state.index](x)
    return y, StateRef(aut, aut.sections[state.index][x])


def act_word(state: StateRef, letters: Sequence[int] | str) -> tuple[int, ...]:
    """Image of a word under the state's tree action."""
    aut = state.automaton
    w = aut.alphabet.check_word(letters)
    out = []
    i = state.index
    for x in w:
        out.append(aut.perms[i](x))
        i = aut.sections[i][x]
    return tuple(out)


def section_word(state: StateRef, letters: Sequence[int] | str) -> StateRef:
    """Section of the state at a word: q|_(x v) = (q|_x)|_v."""
    aut = state.automaton
    w = aut.alphabet.check_word(letters)
    i = state.index
    for x in w:
        i = aut.sections[i][x]
    return StateRef(aut, i)


@functools.cache
def invert(aut: MealyAutomaton) -> MealyAutomaton:
    """Inverse closure: adjoins a formal inverse state for every state.

    The inverse acts by sigma_q^-1 with sections q^-1|_y = (q|_{sigma_q^-1(y)})^-1.
    On an already inverse-closed automaton this returns the automaton itself,
    so the inverse of an inverse resolves to the original state.
    """
    if aut.inverse_closed:
        return aut
    m = len(aut)
    names = aut.names + tuple(n + "^-1" for n in aut.names)
    perms = aut.perms + tuple(p.inverse() for p in aut.perms)
    sections = list(aut.sections)
    for i in range(m):
        inv_p = aut.perms[i].inverse()
        sections.append(tuple(aut.sections[i][inv_p(y)] + m for y in range(aut.alphabet.size)))
    inverse_index = tuple(range(m, 2 * m)) + tuple(range(m))
    return MealyAutomaton(aut.alphabet, names, perms, tuple(sections), True, inverse_index)


def inverse_state(state: StateRef) -> StateRef:
    """State acting as the inverse, inside the inverse closure of its automaton."""
    aut = invert(state.automaton)
    assert aut.inverse_index is not None
    return StateRef(aut, aut.inverse_index[state.index])


def product_automaton(aut: MealyAutomaton, power: int) -> MealyAutomaton:
    """Automaton whose states are power-tuples acting by composition.

    The tuple (q1, ..., qm) acts as q1 after q2 after ... after qm, so the
    last component touches the input word first. Sections follow the product
    rule componentwise.
    """
    if power < 1:
        raise ValueError("power must be at least 1")
    m = len(aut)
    if m**power > 1_000_000:
        raise ValueError(f"product automaton would have {m}^{power} states")
    k = aut.alphabet.size
    tuples = list(itertools.product(range(m), repeat=power))
    index = {t: i for i, t in enumerate(tuples)}
    names = []
    perms = []
    sections = []
    for t in tuples:
        names.append("(" + ",".join(aut.names[i] for i in t) + ")")
        images = []
        rows = []
        for x in range(k):
            y = x
            sec = []
            for i in reversed(t):
                sec.append(aut.sections[i][y])
                y = aut.perms[i](y)
            images.append(y)
            rows.append(index[tuple(reversed(sec))])
        perms.append(Permutation(tuple(images)))
        sections.append(tuple(rows))
    return MealyAutomaton(aut.alphabet, tuple(names), tuple(perms), tuple(sections))


def _dense_rank(keys: list) -> tuple[list[int], int]:
    seen: dict = {}
    out = []
    for key in keys:
        if key not in seen:
            seen[key] = len(seen)
        out.append(seen[key])
    return out, len(seen)


def refine_partition(perm_keys: list, sections: list[tuple[int, ...]]) -> tuple[list[int], int]:
    """Coarsest partition where classes share outputs and map sections to classes.

    Standard partition refinement run to a fixed point; two states land in the
    same class exactly when they act identically on every word.
    """
    color, count = _dense_rank(perm_keys)
    while True:
        sigs = [(color[i], tuple(color[j] for j in sections[i])) for i in range(len(color))]
        color2, count2 = _dense_rank(sigs)
        if count2 == count:
            return color2, count2
        color, count = color2, count2


def minimize(aut: MealyAutomaton) -> tuple[MealyAutomaton, tuple[int, ...]]:
    """Merge states with identical actions; returns the quotient and the class map.

    Classes are ordered by first occurrence and keep the name of their least
    member, so minimizing twice returns an identical automaton.
    """
    color, count = refine_partition([p.images for p in aut.perms], list(aut.sections))
    reps: list[int | None] = [None] * count
    for i, c in enumerate(color):
        if reps[c] is None:
            reps[c] = i
    names = tuple(aut.names[reps[c]] for c in range(count))
    perms = tuple(aut.perms[reps[c]] for c in range(count))
    sections = tuple(
        tuple(color[j] for j in aut.sections[reps[c]]) for c in range(count)
    )
    inverse_index = None
    if aut.inverse_closed:
        assert aut.inverse_index is not None
        inverse_index = tuple(color[aut.inverse_index[reps[c]]] for c in range(count))
    quotient = MealyAutomaton(aut.alphabet, names, perms, sections, aut.inverse_closed, inverse_index)
    return quotient, tuple(color)
