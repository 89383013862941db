"""Count conjugacy classes of delta-automorphisms and check the resulting Deza graphs."""

from dezagraphs import families
from dezagraphs.connectivity import vertex_connectivity
from dezagraphs.deza import deza_from, enumerate_delta_automorphisms
from dezagraphs.graph import classify_deza, complement

cases = {
    "complement of Shrikhande": complement(families.shrikhande()),
    "complement of Chang 1": complement(families.chang(1)),
    "complement of Chang 2": complement(families.chang(2)),
    "complement of Chang 3": complement(families.chang(3)),
    "Schlafli complement": families.schlafli_complement(),
    "folded 5-cube": families.folded_5cube(),
    "lattice 3x3": families.lattice(3),
}
for name, g in cases.items():
    census = enumerate_delta_automorphisms(g)
    print(f"{name:26s} classes={census.count} sizes={[len(c) for c in census.classes]}")
    for cls in census.classes:
        d = deza_from(g, cls[0])
        p = classify_deza(d)
        kappa = vertex_connectivity(d).kappa
        print(f"    Deza {p.as_tuple()} strict={p.strict} kappa={kappa}")
