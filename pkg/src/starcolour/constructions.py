"""Explicit star-colourings giving lower bounds for ar*(n, H).

Vertices are 0..n-1; "lexical order" always means increasing vertex index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, ceil
from typing import Sequence

from .core import (
    SimpleGraph,
    StarColouring,
    circumference,
    class_centres,
    edge,
    edge_arboricity,
    is_isomorphic,
    pattern,
    turan_edges,
    turan_part_sizes,
    vertex_arboricity,
)
from .tournaments import Tournament, is_ck_free


def lexical(n: int) -> StarColouring:
    if n < 1:
        raise ValueError("n must be at least 1")
    return StarColouring.from_classes(n, [[(i, j) for j in range(i + 1, n)] for i in range(n - 1)])


def _lexical_on(vertices: Sequence[int]) -> list[list]:
    vs = list(vertices)
    return [[edge(vs[i], vs[j]) for j in range(i + 1, len(vs))] for i in range(len(vs) - 1)]


def orientable(t: Tournament) -> StarColouring:
    """One class per vertex of positive out-degree: its out-star."""
    classes = [[edge(v, u) for u in t.out_neighbours(v)] for v in range(t.n)]
    return StarColouring.from_classes(t.n, [cl for cl in classes if cl])


def rainbow_complete(n: int) -> StarColouring:
    return StarColouring.from_classes(n, [[e] for e in itertools.combinations(range(n), 2)])


@dataclass(frozen=True)
class BlowupSpec:
    """Part sizes and the colouring placed inside each part (``None``: lexical)."""

    sizes: tuple[int, ...]
    inner: tuple[StarColouring | None, ...] = field(default=())

    def __post_init__(self):
        if not self.sizes or min(self.sizes) < 1:
            raise ValueError("part sizes must be positive")
        if max(self.sizes) - min(self.sizes) > 1:
            raise ValueError(f"part sizes {self.sizes} are not balanced")
        inner = self.inner or (None,) * len(self.sizes)
        if len(inner) != len(self.sizes):
            raise ValueError("one inner colouring per part")
        for size, col in zip(self.sizes, inner):
            if col is not None and col.n != size:
                raise ValueError("inner colouring has the wrong order")
        object.__setattr__(self, "inner", tuple(inner))

    @classmethod
    def balanced(cls, n: int, parts: int, inner: Sequence[StarColouring | None] = ()) -> "BlowupSpec":
        return cls(tuple(turan_part_sizes(n, parts)), tuple(inner))


def rainbow_blowup(spec: BlowupSpec) -> StarColouring:
    n = sum(spec.sizes)
    starts = list(itertools.accumulate((0,) + spec.sizes[:-1]))
    parts = [list(range(s, s + size)) for s, size in zip(starts, spec.sizes)]
    classes: list[list] = []
    for part, col in zip(parts, spec.inner):
        if col is None:
            classes.extend(_lexical_on(part))
        else:
            classes.extend([[edge(part[u], part[v]) for u, v in cl] for cl in col.classes])
    for p, q in itertools.combinations(range(len(parts)), 2):
        classes.extend([[edge(u, v)] for u in parts[p] for v in parts[q]])
    return StarColouring.from_classes(n, classes)


@dataclass(frozen=True)
class ModificationSpec:
    """Edge-disjoint stars, each recoloured with a colour of its own."""

    stars: tuple[frozenset, ...]

    def __post_init__(self):
        seen: set = set()
        for st in self.stars:
            if not st:
                raise ValueError("empty star")
            if not class_centres(st):
                raise ValueError(f"{sorted(st)} is not a star")
            if seen & st:
                raise ValueError("stars must be pairwise edge-disjoint")
            seen |= st

    @classmethod
    def from_stars(cls, stars) -> "ModificationSpec":
        return cls(tuple(frozenset(edge(*e) for e in st) for st in stars))

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> "ModificationSpec":
        """Every edge of ``g`` becomes a single-edge star."""
        return cls(tuple(frozenset([e]) for e in g.sorted_edges()))

    @property
    def edges(self) -> frozenset:
        return frozenset().union(*self.stars) if self.stars else frozenset()


def modified(c: StarColouring, m: ModificationSpec | SimpleGraph) -> StarColouring:
    if isinstance(m, SimpleGraph):
        if m.n != c.n:
            raise ValueError("modification graph lives on a different vertex set")
        m = ModificationSpec.from_graph(m)
    if any(max(e) >= c.n for e in m.edges):
        raise ValueError("modification uses vertices outside the colouring")
    gone = m.edges
    classes = [cl - gone for cl in c.classes]
    return StarColouring.from_classes(c.n, [cl for cl in classes if cl] + list(m.stars))


def cycle_extremal(n: int, k: int, a_tournament: Tournament | None = None) -> StarColouring:
    """Vertices 0..n-k form A, the last k-1 form B.  Each x in A colours its
    out-arcs inside A and all edges to B with one colour; B is rainbow."""
    if not n >= k >= 3:
        raise ValueError("need n >= k >= 3")
    a = n - k + 1
    t = Tournament.transitive(a) if a_tournament is None else a_tournament
    if t.n != a:
        raise ValueError(f"tournament on A must have {a} vertices")
    free, witness = is_ck_free(t, k)
    if not free:
        raise ValueError(f"tournament contains a directed C_{k}: {witness}")
    b = list(range(a, n))
    classes = [[edge(x, y) for y in t.out_neighbours(x)] + [edge(x, y) for y in b] for x in range(a)]
    classes += [[e] for e in itertools.combinations(b, 2)]
    return StarColouring.from_classes(n, classes)


def k4_extremal_two_part(n: int, split: int) -> StarColouring:
    """V1 = 0..split-1 with v* = split-1, V2 = the rest."""
    if n < 4 or not 2 <= split <= n - 1:
        raise ValueError("need n >= 4 and 2 <= |V1| <= n-1")
    v1 = list(range(split))
    v2 = list(range(split, n))
    star = v1[-1]
    classes = _lexical_on(v1) + _lexical_on(v2)
    classes += [[edge(x, y) for y in v2] for x in v1 if x != star]
    classes += [[edge(star, y)] for y in v2]
    return StarColouring.from_classes(n, classes)


def k4_extremal_three_part(n: int, sizes: Sequence[int]) -> StarColouring:
    """Three consecutive blocks; each vertex sends one colour to the next block (cyclically)."""
    sizes = list(sizes)
    if n < 4 or len(sizes) != 3 or sum(sizes) != n or min(sizes) < 1:
        raise ValueError("need n >= 4 and three non-empty parts summing to n")
    starts = [0, sizes[0], sizes[0] + sizes[1]]
    parts = [list(range(s, s + size)) for s, size in zip(starts, sizes)]
    classes = []
    for p in parts:
        classes += _lexical_on(p)
    for i, p in enumerate(parts):
        nxt = parts[(i + 1) % 3]
        classes += [[edge(x, y) for y in nxt] for x in p]
    return StarColouring.from_classes(n, classes)


def _components(edges: Sequence[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    comps: list[tuple[set, list]] = []
    for e in edges:
        hit = [c for c in comps if c[0] & set(e)]
        verts, es = set(e), [e]
        for c in hit:
            verts |= c[0]
            es += c[1]
            comps.remove(c)
        comps.append((verts, es))
    return [sorted(es) for _, es in comps]


def k4minus_j_edges(n: int, a: int | None = None, s_edges: Sequence[Sequence[int]] | None = None) -> list[tuple[int, int]]:
    """Edges of the recoloured graph J (0-based: v_i is vertex i-1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2:
        return [(2 * i, 2 * i + 1) for i in range((n - 1) // 2)]
    if n == 2:
        return []
    a = 1 if a is None else a
    if a < 1 or 2 * a + 1 > n - 1:
        raise ValueError(f"need 1 <= a and 2a+1 <= n-1, got a={a}")
    trio = {2 * a - 2, 2 * a - 1, 2 * a}
    s = [(2 * a - 2, 2 * a - 1)] if s_edges is None else [edge(*e) for e in s_edges]
    if not 1 <= len(set(s)) == len(s) <= 2 or any(not set(e) <= trio or e[0] == e[1] for e in s):
        raise ValueError(f"S must be one or two edges on {sorted(trio)}")
    head = [(2 * i, 2 * i + 1) for i in range(a - 1)]
    tail = [(2 * i + 1, 2 * i + 2) for i in range(a, n // 2 - 1)]
    return head + sorted(s) + tail


def k4minus_extremal(n: int, a: int | None = None, s_edges: Sequence[Sequence[int]] | None = None) -> StarColouring:
    """Lexical colouring with one fresh colour per component of J."""
    j = k4minus_j_edges(n, a, s_edges)
    comps = _components(j)
    return modified(lexical(n), ModificationSpec.from_stars(comps))


def apex_extension(c: StarColouring) -> StarColouring:
    w = c.n
    return StarColouring.from_classes(w + 1, [sorted(cl) for cl in c.classes] + [[(x, w)] for x in range(w)])


def min_degree_construction(n: int, h: SimpleGraph) -> StarColouring:
    """Rainbow K_{v(H)-1}, then each new vertex splits the old ones
    round-robin into delta(H)-1 groups, one colour per group."""
    d = h.min_degree()
    if d < 2:
        raise ValueError("minimum degree of H must be at least 2")
    v = h.n
    if n < v:
        raise ValueError("need n >= v(H)")
    classes = [[e] for e in itertools.combinations(range(v - 1), 2)]
    for x in range(v - 1, n):
        groups = [[edge(y, x) for y in range(x) if y % (d - 1) == g] for g in range(d - 1)]
        classes += groups
    return StarColouring.from_classes(n, classes)


def _max_k4_free(size: int) -> StarColouring:
    if size >= 4:
        return k4_extremal_two_part(size, 2)
    return rainbow_complete(size)


def clique_blowup_lower(n: int, m: int) -> StarColouring:
    if m < 5:
        raise ValueError("clique order must be at least 5")
    if n < m:
        raise ValueError("need n >= m")
    k = m // 2
    if m % 2:
        return rainbow_blowup(BlowupSpec.balanced(n, k))
    sizes = turan_part_sizes(n, k - 1)
    inner = [_max_k4_free(sizes[0])] + [None] * (k - 2)
    return rainbow_blowup(BlowupSpec(tuple(sizes), tuple(inner)))


def clique_blowup_count(n: int, m: int) -> int:
    k = m // 2
    if m % 2:
        return turan_edges(n, k) + n - k
    return turan_edges(n, k - 1) + n + ceil(n / (k - 1)) - k - 1


def short_cycle_family(g: int) -> list[SimpleGraph]:
    return [pattern("C", k=k) for k in range(3, g + 1)]


def girth_modified_lower(n: int, h: SimpleGraph) -> StarColouring:
    """Lexical colouring with a densest graph free of cycles of length at most
    the circumference of H recoloured rainbow."""
    from .oracle import ex_small

    if edge_arboricity(h) < 3:
        raise ValueError("edge arboricity of H must be at least 3")
    g = circumference(h)
    res = ex_small(n, short_cycle_family(g))
    return modified(lexical(n), res.witnesses[0].graph)


# --------------------------------------------------------------------------
# closed forms


def count_lexical(n: int) -> int:
    return n - 1


def count_cycle_extremal(n: int, k: int) -> int:
    return n + comb(k - 2, 2) - 1


def count_k4(n: int) -> int:
    return 2 * n - 3


def count_k4minus(n: int) -> int:
    return 3 * (n - 1) // 2


def count_min_degree(n: int, h: SimpleGraph) -> int:
    return comb(h.n - 1, 2) + (h.min_degree() - 1) * (n - h.n + 1)


def count_modified(c: StarColouring, m: ModificationSpec) -> int:
    union = m.edges
    return len(m.stars) + sum(1 for cl in c.classes if not cl <= union)


# --------------------------------------------------------------------------
# best verified construction, used to seed exact searches


def candidate_constructions(n: int, h: SimpleGraph) -> list[tuple[str, StarColouring]]:
    out: list[tuple[str, StarColouring]] = []
    if n < 1:
        return out
    if h.n > n:
        out.append(("rainbow", rainbow_complete(n)))
        return out
    out.append(("lexical", lexical(n)))
    for k in range(3, n + 1):
        if is_isomorphic(h, pattern("C", k=k)):
            out.append(("cycle-extremal", cycle_extremal(n, k)))
    if n >= 4 and is_isomorphic(h, pattern("K", k=4)):
        out.append(("k4-two-part", k4_extremal_two_part(n, 2)))
    if is_isomorphic(h, pattern("K_minus", k=4)):
        out.append(("k4minus", k4minus_extremal(n)))
    if h.min_degree() >= 2:
        out.append(("min-degree", min_degree_construction(n, h)))
    if h.n >= 2 and h.e:
        va = vertex_arboricity(h)
        if va >= 3:
            out.append(("blowup", rainbow_blowup(BlowupSpec.balanced(n, va - 1))))
    return out


def best_lower_bound(n: int, h: SimpleGraph) -> tuple[int, str, StarColouring] | None:
    """Largest construction verified to avoid a rainbow H, or None."""
    from .detect import find_rainbow

    best = None
    for name, col in candidate_constructions(n, h):
        if best is not None and col.num_colours <= best[0]:
            continue
        if find_rainbow(col, h) is None:
            best = (col.num_colours, name, col)
    return best
