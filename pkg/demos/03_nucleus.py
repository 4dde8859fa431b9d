"""Nucleus closures: contracting certificates and honest failure reports."""

from selfsim import catalog_get, compute_nucleus, is_recurrent


def main():
    for key in ("odometer", "basilica", "grigorchuk", "aut878"):
        _, gens = catalog_get(key).automaton()
        res = compute_nucleus(gens)
        names = ", ".join(res.element_names())
        print(f"{key}: nucleus of {len(res.elements)} elements, certificate depth {res.depth}")
        print(f"  {names}")

    # the nucleus is itself an automaton: sections never leave it
    _, gens = catalog_get("basilica").automaton()
    res = compute_nucleus(gens)
    moore, index = res.moore_automaton()
    print(f"\nbasilica nucleus as an automaton: {len(moore)} states, "
          f"inverse closed by construction: {sorted(moore.names)}")

    # groups that keep producing new sections exhaust any bound
    _, gens = catalog_get("lamplighter").automaton()
    res = compute_nucleus(gens, max_elements=200)
    print(f"\nlamplighter: verdict {res.verdict} (reason: {res.reason}, "
          f"saw {res.witness_count} elements against a cap of {res.max_elements})")

    for key in ("basilica", "odometer", "identity"):
        _, gens = catalog_get(key).automaton()
        verdict = is_recurrent(gens)
        print(f"{key} recurrent: {verdict.kind}")


if __name__ == "__main__":
    main()
