"""The battery of checks behind ``dezagraphs paper-suite``.

Every check returns a JSON-ready dict with at least ``id``, ``claim`` and
``passed``; :func:`paper_suite` collects them into one document.
"""

from __future__ import annotations

import time

from . import families
from .connectivity import lattice_disconnecting_set, verify_cut, vertex_connectivity
from .deza import deza_from, deza_lattice, deza_triangular, enumerate_delta_automorphisms, describe
from .graph import (
    classify_deza,
    classify_srg,
    complement,
    complement_srg_params,
    is_clique,
    is_co_edge_regular,
    is_edge_regular,
    second_neighborhood_components,
)
from .path_families import sweep

SCHEMA_VERSION = 1

def census_graphs() -> dict:
    """Complements of the sporadic Seidel graphs, keyed by name."""
    return {
        "shrikhande": complement(families.shrikhande()),
        "chang1": complement(families.chang(1)),
        "chang2": complement(families.chang(2)),
        "chang3": complement(families.chang(3)),
        "schlafli": families.schlafli_complement(),
        "clebsch": families.folded_5cube(),
    }


def t_deza_params(n: int) -> tuple[int, int, int, int]:
    return (n * (n - 1) // 2, (n * n - 5 * n + 6) // 2, (n * n - 7 * n + 12) // 2, (n * n - 9 * n + 20) // 2)


def l_deza_params(n: int) -> tuple[int, int, int, int]:
    return (n * n, (n - 1) ** 2, (n - 1) * (n - 2), (n - 2) ** 2)


def check_triangular_kappa(ns) -> dict:
    start = time.perf_counter()
    rows = []
    for n in ns:
        cert = vertex_connectivity(deza_triangular(n))
        rows.append({"n": n, "kappa": cert.kappa, "expected": (n * n - 5 * n + 6) // 2})
    return {
        "id": "triangular-kappa",
        "claim": "kappa of the T(n) Deza graph equals its valency",
        "passed": all(r["kappa"] == r["expected"] for r in rows),
        "rows": rows,
        "seconds": round(time.perf_counter() - start, 3),
    }


def check_lattice_kappa(ns) -> dict:
    rows = []
    for n in ns:
        for i in range(1, n // 2 + 1):
            g = deza_lattice(n, i)
            cert = vertex_connectivity(g)
            cut = lattice_disconnecting_set(n, i, 1)
            rows.append({
                "n": n,
                "i": i,
                "kappa": cert.kappa,
                "expected": (n - 1) ** 2 - 1,
                "cut_size": len(cut),
                "cut_disconnects": verify_cut(g, cut, 0, n),
            })
    return {
        "id": "lattice-kappa",
        "claim": "kappa of the L_i(n) Deza graph equals k - 1",
        "passed": all(r["kappa"] == r["expected"] == r["cut_size"] and r["cut_disconnects"] for r in rows),
        "rows": rows,
    }


def check_sweeps(t_ns, l_ns) -> dict:
    rows = [sweep("T", n).to_json() for n in t_ns]
    rows += [sweep("L", n, i).to_json() for n in l_ns for i in range(1, n // 2 + 1)]
    return {
        "id": "path-families",
        "claim": "every non-adjacent pair has a verified disjoint path family or a flow certificate",
        "passed": all(r["passed"] for r in rows),
        "rows": rows,
    }


def census_expectation() -> dict[str, int | tuple]:
    """Class counts: Shrikhande 0, Chang one 0 and two 1, Schlafli 1, Clebsch 2."""
    return {"shrikhande": 0, "chang": (0, 1, 1), "schlafli": 1, "clebsch": 2}


def check_census(max_vertices: int = 32) -> dict:
    start = time.perf_counter()
    rows = []
    deza_rows = []
    for name, g in census_graphs().items():
        census = enumerate_delta_automorphisms(g, max_vertices)
        rows.append({
            "graph": name,
            "classes": census.count,
            "delta_automorphisms": len(census.all),
            "class_sizes": [len(c) for c in census.classes],
        })
        for k, rep in enumerate(census.class_reps):
            d = deza_from(g, rep)
            cert = vertex_connectivity(d)
            deza_rows.append({
                "graph": name,
                "class": k,
                "valency": d.degree(0),
                "kappa": cert.kappa,
                "representative": describe(rep, g),
            })
    counts = {r["graph"]: r["classes"] for r in rows}
    chang = tuple(sorted(counts[f"chang{v}"] for v in (1, 2, 3)))
    expect = census_expectation()
    passed = (
        counts["shrikhande"] == expect["shrikhande"]
        and chang == expect["chang"]
        and counts["schlafli"] == expect["schlafli"]
        and counts["clebsch"] == expect["clebsch"]
    )
    return {
        "census": {
            "id": "census",
            "claim": "delta-automorphism class counts of the sporadic complements",
            "passed": passed,
            "rows": rows,
            "seconds": round(time.perf_counter() - start, 3),
        },
        "census-kappa": {
            "id": "census-kappa",
            "claim": "Deza graphs from the sporadic delta-automorphisms have kappa equal to valency",
            "passed": bool(deza_rows) and all(r["kappa"] == r["valency"] for r in deza_rows),
            "rows": deza_rows,
        },
    }


def check_lattice3_exception() -> dict:
    g = families.lattice(3)
    census = enumerate_delta_automorphisms(g)
    rows = []
    for rep in census.class_reps:
        d = deza_from(g, rep)
        rows.append({"valency": d.degree(0), "kappa": vertex_connectivity(d).kappa})
    return {
        "id": "lattice-3x3",
        "claim": "the 3x3 lattice gives a Deza graph of valency 4 and connectivity 3",
        "passed": bool(rows) and all(r == {"valency": 4, "kappa": 3} for r in rows),
        "rows": rows,
    }


def check_second_neighborhoods(ns) -> dict:
    rows = []
    for n in ns:
        g = deza_triangular(n)
        x = g.index("{1,2}")
        comps = second_neighborhood_components(g, x)
        expected = [
            sorted(g.index(families.t_label(1, j)) for j in range(3, n + 1)),
            sorted(g.index(families.t_label(2, j)) for j in range(3, n + 1)),
        ]
        others = [len(second_neighborhood_components(g, v)) for v in range(g.n) if v != x]
        rows.append({
            "n": n,
            "components_at_12": len(comps),
            "cliques_match": sorted(comps) == sorted(expected) and all(is_clique(g, c) for c in comps),
            "max_components_elsewhere": max(others),
            "edge_regular": is_edge_regular(g),
            "co_edge_regular": is_co_edge_regular(g),
        })
    return {
        "id": "second-neighbourhoods",
        "claim": "{1,2} has two clique components, every other vertex one; neither edge- nor co-edge-regular",
        "passed": all(
            r["components_at_12"] == 2 and r["cliques_match"] and r["max_components_elsewhere"] == 1
            and not r["edge_regular"] and not r["co_edge_regular"]
            for r in rows
        ),
        "rows": rows,
    }


def check_parameters(t_ns, l_ns) -> dict:
    rows = []
    for n in t_ns:
        p = classify_deza(deza_triangular(n))
        rows.append({"graph": f"T({n})'", "params": list(p.as_tuple()), "expected": list(t_deza_params(n)),
                     "strict": p.strict, "expected_strict": n > 5})
    for n in l_ns:
        for i in range(1, n // 2 + 1):
            p = classify_deza(deza_lattice(n, i))
            rows.append({"graph": f"L_{i}({n})'", "params": list(p.as_tuple()), "expected": list(l_deza_params(n)),
                         "strict": p.strict, "expected_strict": True})
    seidel = {
        "petersen": families.petersen(),
        "clebsch": families.clebsch_seidel(),
        "shrikhande": families.shrikhande(),
        "schlafli": families.schlafli(),
        **{f"chang{v}": families.chang(v) for v in (1, 2, 3)},
        **{f"T({n})": families.triangular(n) for n in t_ns},
        **{f"L({n})": families.lattice(n) for n in l_ns},
    }
    srg_rows = []
    for name, g in seidel.items():
        p = classify_srg(g)
        cp = classify_srg(complement(g))
        srg_rows.append({
            "graph": name,
            "params": list(p.as_tuple()),
            "s": p.spectrum.s,
            "complement_r": cp.spectrum.r,
            "round_trip": complement_srg_params(p) == cp,
        })
    passed = all(r["params"] == r["expected"] and r["strict"] == r["expected_strict"] for r in rows) and all(
        r["s"] == -2 and r["complement_r"] == 1 and r["round_trip"] for r in srg_rows
    )
    return {
        "id": "parameters",
        "claim": "Deza parameters of both families; complements of Seidel graphs have r = 1",
        "passed": passed,
        "rows": rows,
        "srg_rows": srg_rows,
    }


def check_complement_class_counts(l_ns, t_ns, max_vertices: int) -> dict:
    rows = []
    for n in l_ns:
        c = enumerate_delta_automorphisms(complement(families.lattice(n)), max_vertices)
        rows.append({"graph": f"complement L({n})", "classes": c.count, "expected": n // 2})
    for n in t_ns:
        c = enumerate_delta_automorphisms(complement(families.triangular(n)), max_vertices)
        rows.append({"graph": f"complement T({n})", "classes": c.count, "expected": 1})
    return {
        "id": "delta-automorphism-classes",
        "claim": "floor(n/2) classes for complements of L(n), one for complements of T(n)",
        "passed": all(r["classes"] == r["expected"] for r in rows),
        "rows": rows,
    }


def paper_suite(max_n: int = 8, max_vertices: int = 36) -> dict:
    """Run every check with size parameters capped at ``max_n``."""
    t_kappa = range(5, min(10, max(max_n, 5)) + 1)
    l_kappa = range(3, min(8, max_n) + 1)
    checks = [
        check_triangular_kappa(t_kappa),
        check_lattice_kappa(l_kappa),
        check_sweeps(range(6, min(9, max_n) + 1), range(4, min(7, max_n) + 1)),
    ]
    census = check_census(max_vertices)
    checks += [census["census"], census["census-kappa"], check_lattice3_exception()]
    checks.append(check_second_neighborhoods(range(6, min(9, max_n) + 1)))
    checks.append(check_parameters(range(5, min(9, max_n) + 1), range(3, min(7, max_n) + 1)))
    l_counts = [n for n in range(3, 7) if n <= max_n and n * n <= max_vertices]
    t_counts = [n for n in range(5, 8) if n <= max_n]
    checks.append(check_complement_class_counts(l_counts, t_counts, max_vertices))
    return {
        "schema_version": SCHEMA_VERSION,
        "max_n": max_n,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }
