"""Build the named graphs and print their strongly regular parameters and spectra."""

from dezagraphs import families
from dezagraphs.graph import classify_deza, classify_srg, complement
from dezagraphs.graph6 import to_graph6

SIZES = {"triangular": 6, "lattice": 6, "multipartite": 6, "chang": 1}

for name, build in families.FAMILIES.items():
    g = build(SIZES[name]) if name in SIZES else build()
    p = classify_srg(g)
    if p is None:
        # imprimitive, so only the Deza view applies
        print(f"{name:20s} Deza {classify_deza(g).as_tuple()} (imprimitive)   {to_graph6(g)}")
        continue
    c = classify_srg(complement(g))
    print(f"{name:20s} {p.as_tuple()!s:18s} eigenvalues r={p.spectrum.r:>2} s={p.spectrum.s:>2}"
          f"   complement {c.as_tuple()}")
