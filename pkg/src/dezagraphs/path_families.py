"""Explicit disjoint path families for the Deza graphs of T(n) and L(n) complements.

Each proof case is a list of path templates written in the letter notation of
the constructions (``ab`` is the vertex {a,b} or (a,b), ``a'`` is the partner
row of ``a``, ``pi(c)``, ``f(d)``, ``g(e)`` and ``eps(d)`` are the chosen
bijections).  A template ranges over its bound variables, so the family for a
pair is obtained by instantiating every template of its case.

Free choices are deterministic:

* fixed-point-free maps: the smallest cyclic shift of the sorted set that meets
  the case's adjacency constraints, else the lexicographically first valid
  map, else the identity (flagged as degenerate);
* fixed elements (``d`` in T 3.2, ``e`` in L 3.1.1, ``c`` in T 2.1): smallest admissible;
* bijections ``f``, ``g``: order preserving between the sorted sets.

A pair whose family does not verify against the actual graph is certified by
max-flow instead and reported as a fallback.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .connectivity import max_disjoint_paths, path_problems, verify_cut, lattice_disconnecting_set
from .deza import deza_lattice, deza_triangular
from .errors import InvalidArgument
from .families import l_label, t_label
from .graph import Graph

THEOREMS = ("T", "L")


# -- adjacency rules ---------------------------------------------------------


def _parse_t(n: int, u) -> tuple[int, int]:
    if isinstance(u, str):
        m = re.fullmatch(r"\{?\s*(\d+)\s*,?\s*(\d+)\s*\}?", u.strip())
        if not m:
            raise InvalidArgument(f"malformed 2-subset label {u!r}")
        u = (int(m[1]), int(m[2]))
    try:
        a, b = sorted(int(x) for x in u)
    except (TypeError, ValueError):
        raise InvalidArgument(f"malformed 2-subset label {u!r}") from None
    if a == b or a < 1 or b > n:
        raise InvalidArgument(f"{u!r} is not a 2-subset of 1..{n}")
    return (a, b)


def _parse_l(n: int, u) -> tuple[int, int]:
    if isinstance(u, str):
        m = re.fullmatch(r"\(?\s*(\d+)\s*,?\s*(\d+)\s*\)?", u.strip())
        if not m:
            raise InvalidArgument(f"malformed ordered-pair label {u!r}")
        u = (int(m[1]), int(m[2]))
    try:
        a, b = (int(x) for x in u)
    except (TypeError, ValueError):
        raise InvalidArgument(f"malformed ordered-pair label {u!r}") from None
    if not (1 <= a <= n and 1 <= b <= n):
        raise InvalidArgument(f"{u!r} is not an ordered pair over 1..{n}")
    return (a, b)


def _t_rules(n: int, u: tuple[int, int], v: tuple[int, int]) -> bool:
    high = lambda w: w[0] >= 3
    if u == (1, 2):
        return high(v)                                               # (1)
    for t in (1, 2):
        if u[0] == t and u[1] >= 3:
            a = u[1]
            if v[0] == t and v[1] >= 3:
                return a != v[1]                                     # (2.1), (3.1)
            if high(v):
                return a not in v                                    # (2.2), (3.2)
    if high(u) and high(v):
        return not set(u) & set(v)                                   # (4)
    return False


def t_adjacent(n: int, u, v) -> bool:
    """Adjacency in the Deza graph of the complement of T(n), from the rule list."""
    u, v = _parse_t(n, u), _parse_t(n, v)
    return u != v and (_t_rules(n, u, v) or _t_rules(n, v, u))


def partner(i: int, r: int) -> int:
    """The row ``r'`` paired with ``r`` by the i-automorphism (``r`` itself if unmoved)."""
    if r > 2 * i:
        return r
    return r + 1 if r % 2 else r - 1


def _l_rules(n: int, i: int, u: tuple[int, int], v: tuple[int, int]) -> bool:
    (a, b), (c, d) = u, v
    if a <= 2 * i:
        if c == a and d != b:
            return True                                              # (1)
        return c != partner(i, a) and d != b                         # (2)
    return c != a and d != b                                         # (3)


def l_adjacent(n: int, i: int, u, v) -> bool:
    """Adjacency in the Deza graph of the complement of L(n) under the i-automorphism."""
    if not 1 <= i <= n // 2:
        raise InvalidArgument(f"i must lie in 1..{n // 2}")
    u, v = _parse_l(n, u), _parse_l(n, v)
    return u != v and (_l_rules(n, i, u, v) or _l_rules(n, i, v, u))


# -- templates ---------------------------------------------------------------

_TERM = re.compile(r"(?:pi|eps|[fg])\([a-z]\)|[a-z]'?|\d")


@dataclass(frozen=True)
class Template:
    """One path shape, e.g. ``"ab ~ de ~ bc"``.

    ``over`` lists bound variables as ``(name, base, excluded terms)`` with base
    ``"N"`` for ``1..n`` and ``"R"`` for ``3..n``; ``unordered`` names variables
    that enumerate a 2-subset (so only increasing values are taken); ``let``
    binds derived variables such as ``e = eps(d)``.
    """

    form: str
    over: tuple[tuple[str, str, tuple[str, ...]], ...] = ()
    unordered: tuple[str, ...] = ()
    let: tuple[tuple[str, str], ...] = ()
    note: str = ""

    @property
    def vertices(self) -> list[list[str]]:
        out = []
        for chunk in self.form.split(" ~ "):
            terms = _TERM.findall(chunk)
            if len(terms) != 2 or "".join(terms) != chunk:
                raise ValueError(f"bad vertex expression {chunk!r} in {self.form!r}")
            out.append(terms)
        return out

    def where(self) -> str:
        parts = [f"{v} in {base}\\{{{','.join(ex)}}}" if ex else f"{v} in {base}" for v, base, ex in self.over]
        parts += [f"{v} = {expr}" for v, expr in self.let]
        return "; ".join(parts)


def _eval(term: str, env: dict, maps: dict, prime: Callable[[int], int]) -> int:
    if term.isdigit():
        return int(term)
    if term.endswith("'"):
        return prime(env[term[0]])
    if "(" in term:
        name, arg = term[:-1].split("(")
        return maps[name][env[arg]]
    return env[term]


def _bindings(t: Template, env: dict, n: int, maps: dict, prime) -> Iterable[dict]:
    def rec(k: int, cur: dict):
        if k == len(t.over):
            if all(cur[x] < cur[y] for x, y in zip(t.unordered, t.unordered[1:])):
                out = dict(cur)
                for var, expr in t.let:
                    out[var] = _eval(expr, out, maps, prime)
                yield out
            return
        var, base, excl = t.over[k]
        start = 1 if base == "N" else 3
        banned = {_eval(e, cur, maps, prime) for e in excl}
        for val in range(start, n + 1):
            if val not in banned:
                yield from rec(k + 1, {**cur, var: val})

    yield from rec(0, dict(env))


T_CASES: dict[str, tuple[Template, ...]] = {
    # both fixed: ab, bc with a, b, c >= 3
    "1": (
        Template("ab ~ de ~ bc", (("d", "N", ("a", "b", "c")), ("e", "N", ("a", "b", "c", "d"))), ("d", "e")),
        Template("ab ~ cd ~ be ~ ad ~ bc", (("d", "R", ("a", "b", "c")),), let=(("e", "eps(d)"),)),
        Template("ab ~ 1c ~ 1a ~ bc"),
        Template("ab ~ 2c ~ 2a ~ bc"),
    ),
    # ab and 1a
    "2.1": (
        Template("ab ~ cd ~ 1a", (("c", "R", ("a", "b")), ("d", "R", ("a", "b", "c"))), ("c", "d")),
        Template("ab ~ 1c ~ 1a", (("c", "R", ("a", "b")),)),
        Template(
            "ab ~ 2c ~ bpi(c) ~ 1a",
            (("c", "R", ("a", "b")),),
            note="corrected: printed as ab ~ 2c ~ 2d ~ bc ~ 1a, whose 2d vertices cannot be disjoint from the 2c vertices",
        ),
        Template("ab ~ 12 ~ ca ~ 1b ~ 1a"),
    ),
    # 12 and 1a
    "2.2": (
        Template("12 ~ bc ~ 1a", (("b", "R", ("a",)), ("c", "R", ("a", "b"))), ("b", "c")),
        Template("12 ~ ab ~ 1pi(b) ~ 1a", (("b", "R", ("a",)),)),
    ),
    # 1a and 2a
    "3.1": (
        Template("1a ~ bc ~ 2a", (("b", "R", ("a",)), ("c", "R", ("a", "b"))), ("b", "c")),
        Template("1a ~ 1b ~ api(b) ~ 2b ~ 2a", (("b", "R", ("a",)),)),
    ),
    # 1a and 2b
    "3.2": (
        Template("1a ~ cd ~ 2b", (("c", "R", ("a", "b")), ("d", "R", ("a", "b", "c"))), ("c", "d")),
        Template("1a ~ 1b ~ ad ~ 2b"),
        Template("1a ~ bd ~ 2a ~ 2b"),
        Template("1a ~ 1d ~ ab ~ 2d ~ 2b"),
        Template("1a ~ 1c ~ api(c) ~ 2b", (("c", "R", ("a", "b", "d")),)),
        Template("1a ~ bc ~ 2pi(c) ~ 2b", (("c", "R", ("a", "b", "d")),)),
    ),
}

L_CASES: dict[str, tuple[Template, ...]] = {
    # ac, bc in the same column, both rows fixed
    "1.1": (
        Template("ac ~ de ~ bc", (("d", "N", ("a", "b")), ("e", "N", ("c",)))),
        Template("ac ~ bd ~ api(d) ~ bc", (("d", "N", ("c",)),)),
    ),
    # ab, ac in the same fixed row
    "1.2": (
        Template("ab ~ de ~ ac", (("d", "N", ("a",)), ("e", "N", ("b", "c")))),
        Template(
            "ab ~ dc ~ pi(d)b ~ ac",
            (("d", "N", ("a",)),),
            note="pi must also avoid d -> d' so that dc ~ pi(d)b holds for moved rows",
        ),
    ),
    # ac moved, bc fixed
    "2": (
        Template("ac ~ de ~ bc", (("d", "N", ("a'", "b")), ("e", "N", ("c",)))),
        Template("ac ~ bd ~ a'pi(d) ~ bc", (("d", "N", ("c",)),)),
    ),
    # ab and a'b
    "3.1.1": (
        Template("ab ~ cd ~ a'b", (("c", "N", ("a", "a'")), ("d", "N", ("b",)))),
        Template("ab ~ ac ~ f(c)b ~ a'c ~ a'b", (("c", "N", ("b", "e")),)),
    ),
    # ab and a'c, b != c
    "3.1.2": (
        Template("ab ~ de ~ a'c", (("d", "N", ("a", "a'")), ("e", "N", ("b", "c")))),
        Template(
            "ab ~ ad ~ f(d)b ~ a'c",
            (("d", "N", ("b", "c")),),
            note="corrected: printed as ab ~ ad ~ f(d)c ~ a'c, but f(d)c and a'c share column c",
        ),
        Template("ab ~ ec ~ a'g(e) ~ a'c", (("e", "N", ("a", "a'")),)),
    ),
    # ac and bc, both moved, rows not partners
    "3.2": (
        Template("ac ~ de ~ bc", (("d", "N", ("a'", "b'")), ("e", "N", ("c",)))),
        Template("ac ~ b'd ~ a'pi(d) ~ bc", (("d", "N", ("c",)),)),
    ),
}


# -- choices -----------------------------------------------------------------


def constrained_derangement(
    items: Sequence[int], forbid: Callable[[int], Iterable[int]] = lambda x: ()
) -> dict[int, int] | None:
    """A bijection of ``items`` with ``pi(x) != x`` and ``pi(x) not in forbid(x)``.

    Tries cyclic shifts of the sorted items first (shift 1 maps each item to its
    successor), then a lexicographic backtracking search.  ``None`` if none exists.
    """
    xs = sorted(items)
    m = len(xs)
    if m == 0:
        return {}
    bad = {x: {x, *forbid(x)} for x in xs}
    for s in range(1, m):
        pi = {xs[k]: xs[(k + s) % m] for k in range(m)}
        if all(pi[x] not in bad[x] for x in xs):
            return pi
    taken: set[int] = set()
    pi: dict[int, int] = {}

    def rec(k: int) -> bool:
        if k == m:
            return True
        for y in xs:
            if y not in taken and y not in bad[xs[k]]:
                taken.add(y)
                pi[xs[k]] = y
                if rec(k + 1):
                    return True
                taken.discard(y)
                del pi[xs[k]]
        return False

    return dict(pi) if rec(0) else None


def _order_preserving(domain: Iterable[int], codomain: Iterable[int]) -> dict[int, int]:
    return dict(zip(sorted(domain), sorted(codomain)))


# -- cases -------------------------------------------------------------------


@dataclass(frozen=True)
class ProofCase:
    theorem: str
    tag: str
    target_count: int


@dataclass
class PathFamily:
    case: ProofCase
    pair: tuple[int, int]
    paths: list[tuple[int, ...]]
    choices: dict
    forms: list[str] = field(default_factory=list)
    mirrored: bool = False
    degenerate: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "theorem": self.case.theorem,
            "case": self.case.tag,
            "target": self.case.target_count,
            "pair": list(self.pair),
            "paths": [list(p) for p in self.paths],
            "choices": self.choices,
            "mirrored": self.mirrored,
            "degenerate": self.degenerate,
        }


def t_target(n: int) -> int:
    return (n * n - 5 * n + 6) // 2


def l_target(n: int, tag: str) -> int:
    return n * n - 2 * n if tag.startswith("3.1") else n * n - 2 * n + 1


def required_paths(theorem: str, n: int) -> int:
    """Paths per pair needed for the connectivity lower bound."""
    return t_target(n) if theorem == "T" else n * n - 2 * n


@dataclass(frozen=True)
class _Normalized:
    tag: str
    env: dict
    reverse: bool      # actual x is the template's second endpoint
    mirrored: bool = False


def _normalize_t(n: int, x, y) -> _Normalized:
    u, v = _parse_t(n, x), _parse_t(n, y)
    if u == v or t_adjacent(n, u, v):
        raise InvalidArgument(f"{t_label(*u)} and {t_label(*v)} are not a non-adjacent pair")
    moved = lambda w: w[0] in (1, 2) and w[1] >= 3
    if not moved(u) and not moved(v):
        (b,) = set(u) & set(v)
        (a,) = set(u) - {b}
        (c,) = set(v) - {b}
        return _Normalized("1", {"a": a, "b": b, "c": c}, False)
    if moved(u) != moved(v):
        f, m, reverse = (u, v, False) if moved(v) else (v, u, True)
        mirrored = m[0] == 2
        z = m[1]
        if f == (1, 2):
            return _Normalized("2.2", {"a": z}, reverse, mirrored)
        (b,) = set(f) - {z}
        return _Normalized("2.1", {"a": z, "b": b}, reverse, mirrored)
    one, two, reverse = (u, v, False) if u[0] == 1 else (v, u, True)
    if one[1] == two[1]:
        return _Normalized("3.1", {"a": one[1]}, reverse)
    return _Normalized("3.2", {"a": one[1], "b": two[1]}, reverse)


def _normalize_l(n: int, i: int, x, y) -> _Normalized:
    u, v = _parse_l(n, x), _parse_l(n, y)
    if u == v or l_adjacent(n, i, u, v):
        raise InvalidArgument(f"{l_label(*u)} and {l_label(*v)} are not a non-adjacent pair")
    moved = lambda w: w[0] <= 2 * i
    if not moved(u) and not moved(v):
        if u[1] == v[1]:
            return _Normalized("1.1", {"a": u[0], "b": v[0], "c": u[1]}, False)
        return _Normalized("1.2", {"a": u[0], "b": u[1], "c": v[1]}, False)
    if moved(u) != moved(v):
        m, f, reverse = (u, v, False) if moved(u) else (v, u, True)
        return _Normalized("2", {"a": m[0], "b": f[0], "c": m[1]}, reverse)
    if v[0] == partner(i, u[0]):
        if u[1] == v[1]:
            return _Normalized("3.1.1", {"a": u[0], "b": u[1]}, False)
        return _Normalized("3.1.2", {"a": u[0], "b": u[1], "c": v[1]}, False)
    return _Normalized("3.2", {"a": u[0], "b": v[0], "c": u[1]}, False)


def classify_pair(theorem: str, n: int, x, y, i: int | None = None) -> ProofCase:
    """Proof case of a non-adjacent pair given as labels or tuples."""
    if theorem == "T":
        norm = _normalize_t(n, x, y)
        return ProofCase("T", norm.tag, t_target(n))
    if theorem == "L":
        if i is None:
            raise InvalidArgument("theorem L needs i")
        norm = _normalize_l(n, i, x, y)
        return ProofCase("L", norm.tag, l_target(n, norm.tag))
    raise InvalidArgument(f"theorem must be 'T' or 'L', got {theorem!r}")


def _derangement_or_identity(items, forbid, name: str, degenerate: list[str]) -> dict[int, int]:
    pi = constrained_derangement(items, forbid)
    if pi is None:
        degenerate.append(f"no admissible {name} on {sorted(items)}; identity substituted")
        pi = {x: x for x in items}
    return pi


def _t_choices(n: int, tag: str, env: dict, degenerate: list[str]) -> tuple[dict, dict]:
    R = set(range(3, n + 1))
    a, b = env["a"], env.get("b")
    maps: dict[str, dict[int, int]] = {}
    fixed: dict[str, int] = {}
    if tag == "1":
        rest = R - {a, b, env["c"]}
        if len(rest) >= 2:
            maps["eps"] = constrained_derangement(rest)
        else:
            maps["eps"] = {d: 1 for d in rest}
    elif tag == "2.1":
        c_set = R - {a, b}
        maps["pi"] = _derangement_or_identity(c_set, lambda x: (), "pi", degenerate)
        fixed["c"] = min(c_set)
    elif tag in ("2.2", "3.1"):
        maps["pi"] = _derangement_or_identity(R - {a}, lambda x: (), "pi", degenerate)
    elif tag == "3.2":
        fixed["d"] = min(R - {a, b})
        maps["pi"] = _derangement_or_identity(R - {a, b, fixed["d"]}, lambda x: (), "pi", degenerate)
    return maps, fixed


def _l_choices(n: int, i: int, tag: str, env: dict, degenerate: list[str]) -> tuple[dict, dict]:
    N = set(range(1, n + 1))
    p = lambda r: partner(i, r)
    maps: dict[str, dict[int, int]] = {}
    fixed: dict[str, int] = {}
    if tag in ("1.1", "2", "3.2"):
        maps["pi"] = _derangement_or_identity(N - {env["c"]}, lambda x: (), "pi", degenerate)
    elif tag == "1.2":
        maps["pi"] = _derangement_or_identity(N - {env["a"]}, lambda d: (p(d),), "pi", degenerate)
    elif tag == "3.1.1":
        a, b = env["a"], env["b"]
        fixed["e"] = min(N - {b})
        maps["f"] = _order_preserving(N - {b, fixed["e"]}, N - {a, p(a)})
    elif tag == "3.1.2":
        a, b, c = env["a"], env["b"], env["c"]
        maps["f"] = _order_preserving(N - {b, c}, N - {a, p(a)})
        maps["g"] = _order_preserving(N - {a, p(a)}, N - {b, c})
    return maps, fixed


def build_family(theorem: str, n: int, x, y, i: int | None = None, graph: Graph | None = None) -> PathFamily:
    """Instantiate every template of the pair's proof case.

    ``x`` and ``y`` may be vertex indices of ``graph`` (default: the Deza graph
    for the theorem), labels, or tuples; paths come back as vertex indices
    running from ``x`` to ``y``.
    """
    if graph is None:
        graph = deza_triangular(n) if theorem == "T" else deza_lattice(n, i)
    x = graph.labels[x] if isinstance(x, int) else x
    y = graph.labels[y] if isinstance(y, int) else y
    degenerate: list[str] = []
    if theorem == "T":
        norm = _normalize_t(n, x, y)
        case = ProofCase("T", norm.tag, t_target(n))
        templates = T_CASES[norm.tag]
        maps, fixed = _t_choices(n, norm.tag, norm.env, degenerate)
        prime = lambda r: r
    elif theorem == "L":
        if i is None:
            raise InvalidArgument("theorem L needs i")
        norm = _normalize_l(n, i, x, y)
        case = ProofCase("L", norm.tag, l_target(n, norm.tag))
        templates = L_CASES[norm.tag]
        maps, fixed = _l_choices(n, i, norm.tag, norm.env, degenerate)
        prime = lambda r: partner(i, r)
    else:
        raise InvalidArgument(f"theorem must be 'T' or 'L', got {theorem!r}")

    swap = {1: 2, 2: 1} if norm.mirrored else {}
    env = {**norm.env, **fixed}
    paths: list[tuple[int, ...]] = []
    for t in templates:
        verts = t.vertices
        for bind in _bindings(t, env, n, maps, prime):
            seq = []
            for p, q in verts:
                u = (_eval(p, bind, maps, prime), _eval(q, bind, maps, prime))
                if theorem == "T":
                    u = tuple(swap.get(e, e) for e in u)
                    label = t_label(*u) if u[0] != u[1] else f"{{{u[0]},{u[1]}}}"
                else:
                    label = l_label(*u)
                seq.append(graph._label_index.get(label, -1))
            paths.append(tuple(reversed(seq)) if norm.reverse else tuple(seq))
    choices = {
        "maps": {k: {str(s): t for s, t in sorted(v.items())} for k, v in maps.items()},
        "fixed": fixed,
        "variables": norm.env,
    }
    xi, yi = graph.index(_label_for(theorem, n, x)), graph.index(_label_for(theorem, n, y))
    return PathFamily(
        case, (xi, yi), paths, choices, [t.form for t in templates], norm.mirrored, degenerate
    )


def _label_for(theorem: str, n: int, u) -> str:
    return t_label(*_parse_t(n, u)) if theorem == "T" else l_label(*_parse_l(n, u))


# -- verification ------------------------------------------------------------


@dataclass
class FamilyReport:
    count: int
    target: int
    bad_edges: list[list[tuple[int, int]]]
    overlap: list[list[bool]]
    problems: list[str]

    @property
    def passed(self) -> bool:
        return not self.problems and self.count >= self.target


def verify_family(g: Graph, fam: PathFamily) -> FamilyReport:
    """Check a family against ``g``'s adjacency (not the rule lists)."""
    x, y = fam.pair
    bad_edges = []
    for p in fam.paths:
        bad_edges.append(
            [(u, v) for u, v in zip(p, p[1:]) if u < 0 or v < 0 or not g.has_edge(u, v)]
        )
    inner = [set(p[1:-1]) for p in fam.paths]
    overlap = [[j != k and bool(inner[j] & inner[k]) for k in range(len(inner))] for j in range(len(inner))]
    problems = []
    for k, p in enumerate(fam.paths):
        if -1 in p:
            problems.append(f"path {k} names a vertex outside the graph")
    problems += path_problems(g, x, y, [p for p in fam.paths if -1 not in p])
    if len(fam.paths) < fam.case.target_count:
        problems.append(f"{len(fam.paths)} paths, target {fam.case.target_count}")
    return FamilyReport(len(fam.paths), fam.case.target_count, bad_edges, overlap, problems)


@dataclass
class SweepSummary:
    theorem: str
    n: int
    i: int | None
    pairs: int
    per_case: dict[str, Counter]
    fallbacks: list[dict]
    failures: list[dict]
    min_paths: int
    required: int
    upper_bound: int
    upper_bound_kind: str
    # one entry per pair: labels, case, path count and the free choices made
    records: list[dict] = field(default_factory=list)

    @property
    def kappa(self) -> int | None:
        """kappa when the lower and upper bounds meet, else ``None``."""
        if not self.failures and self.min_paths >= self.required and self.upper_bound == self.required:
            return self.required
        return None

    @property
    def passed(self) -> bool:
        return self.kappa is not None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "i": self.i,
            "pairs": self.pairs,
            "per_case": {k: dict(v) for k, v in sorted(self.per_case.items())},
            "fallbacks": self.fallbacks,
            "failures": self.failures,
            "min_paths": self.min_paths,
            "required": self.required,
            "upper_bound": self.upper_bound,
            "upper_bound_kind": self.upper_bound_kind,
            "kappa": self.kappa,
            "passed": self.passed,
            "records": self.records,
        }


def sweep(theorem: str, n: int, i: int | None = None) -> SweepSummary:
    """Classify, build and verify a family for every non-adjacent pair.

    A pair whose family fails is certified by max-flow instead.  The minimum
    path count bounds kappa from below; the valency (T) or the row-pair
    disconnecting set (L) bounds it from above.
    """
    if theorem == "T":
        g = deza_triangular(n)
        upper, kind = g.degree(0), "valency"
    elif theorem == "L":
        if i is None:
            raise InvalidArgument("theorem L needs i")
        g = deza_lattice(n, i)
        cut = lattice_disconnecting_set(n, i, 1)
        x, y = (0, n)   # (1,1) and (2,1) sit in the two retained rows
        upper = len(cut) if verify_cut(g, cut, x, y) else g.degree(0)
        kind = "disconnecting set" if upper == len(cut) else "valency"
    else:
        raise InvalidArgument(f"theorem must be 'T' or 'L', got {theorem!r}")
    required = required_paths(theorem, n)
    per_case: dict[str, Counter] = {}
    fallbacks, failures = [], []
    min_paths = g.n
    pairs = 0
    records = []
    for x, y in combinations(range(g.n), 2):
        if g.has_edge(x, y):
            continue
        pairs += 1
        fam = build_family(theorem, n, x, y, i, graph=g)
        tally = per_case.setdefault(fam.case.tag, Counter())
        tally["pairs"] += 1
        report = verify_family(g, fam)
        records.append({
            "pair": [g.labels[x], g.labels[y]],
            "case": fam.case.tag,
            "paths": report.count,
            "passed": report.passed,
            "mirrored": fam.mirrored,
            "choices": fam.choices,
        })
        if report.passed:
            tally["passed"] += 1
            min_paths = min(min_paths, report.count)
            continue
        flow = len(max_disjoint_paths(g, x, y))
        entry = {
            "pair": [g.labels[x], g.labels[y]],
            "case": fam.case.tag,
            "problems": report.problems[:5],
            "degenerate": fam.degenerate,
            "flow_paths": flow,
        }
        if flow >= required:
            tally["fallback"] += 1
            fallbacks.append(entry)
            min_paths = min(min_paths, flow)
        else:
            tally["failed"] += 1
            failures.append(entry)
            min_paths = min(min_paths, flow)
    return SweepSummary(theorem, n, i, pairs, per_case, fallbacks, failures, min_paths, required, upper, kind, records)
