"""Boundary points, asymptotic equivalence, and finite pictures of the limit space."""

from selfsim import (
    BoundaryPoint,
    asymptotic_equivalent,
    catalog_get,
    compute_nucleus,
    equivalence_class,
    gh_sequence,
    self_similarity_graph,
)


def main():
    _, gens = catalog_get("odometer").automaton()
    nucleus = compute_nucleus(gens)

    # the odometer's limit space is a circle: left-infinite binary words up to
    # identifying the two expansions of each dyadic point
    pairs = [("0^w", "1^w"), ("0^w 1", "1^w 0"), ("0^w", "0^w 1"), ("01^w", "10^w")]
    for left, right in pairs:
        p, q = BoundaryPoint.parse(left), BoundaryPoint.parse(right)
        eq, witness = asymptotic_equivalent(nucleus, p, q)
        marker = "~" if eq else "!~"
        print(f"{left:7s} {marker:2s} {right}")
        if witness is not None:
            assert witness.validate(p, q)

    cls = equivalence_class(nucleus, BoundaryPoint.parse("0^w 1"))
    print(f"class of one half: {{{', '.join(sorted(str(p) for p in cls))}}}")

    # pointed level components approximate the limit space around a point
    _, bgens = catalog_get("basilica").automaton()
    xi = BoundaryPoint.parse("1^w")
    sizes = [graph.vertex_count for graph, _ in gh_sequence(bgens, xi, 6)]
    print(f"basilica rooted components around ...111: sizes {sizes}")

    ssg = self_similarity_graph(bgens, 4)
    by_level = {}
    for n in ssg.levels:
        by_level[n] = by_level.get(n, 0) + 1
    print(f"self-similarity graph to depth 4: {ssg.vertex_count} vertices "
          f"({by_level}), {len(ssg.edges)} edges")


if __name__ == "__main__":
    main()
