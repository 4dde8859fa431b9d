"""Define a recursion from text, act on tree words, and solve word problems."""

from selfsim import GroupWord, act_word, canonical_state, canonicalize, parse, to_automaton

TEXT = """\
# title: Basilica group
alphabet 2
a = (0 1)(b, id)
b = id(a, id)
id = id(id, id)
gens a b
"""


def main():
    doc = parse(TEXT)
    aut, (a, b) = to_automaton(doc)
    print(f"parsed {doc.title!r}: {len(aut)} states over {doc.alphabet_size} letters")

    w = "011010"
    print(f"a({w}) = {''.join(map(str, act_word(a, w)))}")
    print(f"b({w}) = {''.join(map(str, act_word(b, w)))}")

    ca, cb = canonical_state(a), canonical_state(b)
    print(f"section of a at 0 is b: {ca.section((0,)) == cb}")
    print(f"a * a^-1 is trivial: {(ca * ca.inverse()).is_identity}")
    print(f"a^2 acts like b below both letters: {(ca * ca).section((0,)) == cb}")

    # the same algebra through words in the generators
    gw = GroupWord((a, b), ((0, 1), (1, 1), (0, -1), (1, -1)))  # a b a^-1 b^-1
    commutator = canonicalize(gw)
    print(f"[a, b] trivial: {commutator.is_identity} (the group is not abelian)")

    grig = parse(
        "alphabet 2\n"
        "a = (0 1)(e, e)\n"
        "b = id(a, c)\n"
        "c = id(a, d)\n"
        "d = id(e, b)\n"
        "e = id(e, e)\n"
        "gens a b c d\n"
    )
    gaut, ggens = to_automaton(grig)
    ga, gb, gc, gd = (canonical_state(g) for g in ggens)
    print(f"torsion: (ad)^4 trivial: {((ga * gd) ** 4).is_identity}")
    print(f"         (ac)^4 trivial: {((ga * gc) ** 4).is_identity}")
    print(f"         (ac)^8 trivial: {((ga * gc) ** 8).is_identity}")
    print(f"Klein four-group: b c = d: {gb * gc == gd}")


if __name__ == "__main__":
    main()
