"""Compute vertex connectivity of both Deza families and replay the explicit path families."""

import time

from dezagraphs.connectivity import vertex_connectivity
from dezagraphs.deza import deza_lattice, deza_triangular
from dezagraphs.path_families import sweep

for n in range(5, 11):
    start = time.perf_counter()
    cert = vertex_connectivity(deza_triangular(n))
    print(f"T({n})'  kappa={cert.kappa:3d}  valency={deza_triangular(n).degree(0):3d}  {time.perf_counter() - start:.2f}s")
for n in range(3, 8):
    for i in range(1, n // 2 + 1):
        print(f"L_{i}({n})'  kappa={vertex_connectivity(deza_lattice(n, i)).kappa}")

for theorem, n, i in [("T", 7, None), ("T", 9, None), ("L", 5, 1), ("L", 6, 3)]:
    s = sweep(theorem, n, i)
    cases = {k: v["passed"] + v["fallback"] for k, v in s.per_case.items()}
    print(f"sweep {theorem} n={n} i={i}: pairs={s.pairs} min_paths={s.min_paths} required={s.required} "
          f"flow fallbacks={len(s.fallbacks)} passed={s.passed} cases={cases}")
