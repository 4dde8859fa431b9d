"""Random walk spectra on level graphs."""

import numpy as np

from selfsim import (
    build_schreier,
    catalog_get,
    connected_components,
    eigenvalue_multiplicity,
    spectrum,
)


def main():
    _, gens = catalog_get("basilica").automaton()
    for n in range(1, 5):
        vals = spectrum(build_schreier(gens, n))
        shown = ", ".join(f"{v:+.4f}" for v in vals[:8])
        more = " ..." if len(vals) > 8 else ""
        print(f"basilica level {n}: [{shown}{more}]")

    # the multiplicity of eigenvalue 1 counts connected components
    for key in ("basilica", "identity", "sierpinski"):
        _, kgens = catalog_get(key).automaton()
        g = build_schreier(kgens, 4 if key != "sierpinski" else 3)
        vals = spectrum(g)
        mult = eigenvalue_multiplicity(vals, 1.0)
        comps = len(connected_components(g))
        print(f"{key:10s} multiplicity of 1: {mult:3d}  components: {comps:3d}")

    # spectral gap of the walk at growing levels
    _, gens = catalog_get("grigorchuk").automaton()
    for n in range(1, 7):
        vals = spectrum(build_schreier(gens, n))
        gap = 1.0 - vals[1] if len(vals) > 1 else float("nan")
        print(f"grigorchuk level {n}: gap {gap:.6f}, extremes "
              f"[{vals[-1]:+.6f}, {vals[0]:+.6f}]")


if __name__ == "__main__":
    main()
