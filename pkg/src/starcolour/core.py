"""Graphs, star-colourings of K_n and their basic invariants.

Edges are pairs ``(u, v)`` with ``u < v``.  Wherever a flat per-edge array is
used, edges are listed in colex order ``(0,1), (0,2), (1,2), (0,3), ...`` so the
edges of K_m form a prefix of the edges of K_n.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Callable, Iterable, Sequence

from .tournaments import Tournament

Edge = tuple[int, int]


class CapExceeded(ValueError):
    """An exact computation was asked for beyond its configured size cap."""


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at {u}")
    return (u, v) if u < v else (v, u)


def edge_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def colex_edges(n: int) -> list[Edge]:
    return [(u, v) for v in range(n) for u in range(v)]


# --------------------------------------------------------------------------
# SimpleGraph


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {e} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        es = set()
        for u, v in edges:
            e = edge(u, v)
            if e in es:
                raise ValueError(f"duplicate edge {e}")
            es.add(e)
        return cls(n, frozenset(es))

    @property
    def e(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (e[1], e[0]))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nb: list[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        return SimpleGraph(self.n, frozenset(edge(perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        pos = {v: i for i, v in enumerate(vertices)}
        return SimpleGraph(len(pos), frozenset(edge(pos[u], pos[v]) for u, v in self.edges
                                               if u in pos and v in pos))

    def remove_vertex(self, v: int) -> "SimpleGraph":
        return self.induced([u for u in range(self.n) if u != v])

    def without_edges(self, es: Iterable[Edge]) -> "SimpleGraph":
        return SimpleGraph(self.n, self.edges - frozenset(edge(*e) for e in es))

    def is_forest(self) -> bool:
        return _is_forest(self.n, self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, d: dict) -> "SimpleGraph":
        return cls.from_edges(d["n"], [tuple(e) for e in d["edges"]])


def _is_forest(n: int, edges: Iterable[Edge]) -> bool:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


# --------------------------------------------------------------------------
# StarColouring


@dataclass(frozen=True)
class StarColouring:
    """A partition of E(K_n) into colour classes.

    Colour identity is the class index.  Construction does not validate; use
    :func:`validate_colouring`.
    """

    n: int
    classes: tuple

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[Sequence[int]]]) -> "StarColouring":
        return cls(n, tuple(frozenset(edge(u, v) for u, v in cl) for cl in classes))

    @classmethod
    def from_labels(cls, n: int, labels: Sequence[int]) -> "StarColouring":
        """Build from one class label per colex edge; labels are renumbered
        by first appearance."""
        es = colex_edges(n)
        if len(labels) != len(es):
            raise ValueError(f"expected {len(es)} labels, got {len(labels)}")
        order: dict = {}
        groups: list[list[Edge]] = []
        for e, lab in zip(es, labels):
            if lab not in order:
                order[lab] = len(groups)
                groups.append([])
            groups[order[lab]].append(e)
        return cls(n, tuple(frozenset(g) for g in groups))

    @property
    def num_colours(self) -> int:
        return len(self.classes)

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """``matrix[u][v]`` is the class index of uv (-1 on the diagonal or if uncovered)."""
        m = [[-1] * self.n for _ in range(self.n)]
        for i, cl in enumerate(self.classes):
            for u, v in cl:
                m[u][v] = m[v][u] = i
        return tuple(tuple(r) for r in m)

    def colour(self, u: int, v: int) -> int:
        return self.matrix[u][v]

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """Colex per-edge labels in first-appearance (restricted growth) form."""
        m = self.matrix
        remap: dict[int, int] = {}
        out = []
        for u, v in colex_edges(self.n):
            c = m[u][v]
            out.append(remap.setdefault(c, len(remap)))
        return tuple(out)

    @cached_property
    def centres(self) -> tuple[frozenset, ...]:
        return tuple(class_centres(cl) for cl in self.classes)

    def relabel(self, perm: Sequence[int]) -> "StarColouring":
        """Image under the vertex map ``v -> perm[v]``."""
        return StarColouring(self.n, tuple(frozenset(edge(perm[u], perm[v]) for u, v in cl)
                                           for cl in self.classes))

    def restrict(self, vertices: Sequence[int]) -> "StarColouring":
        """Sub-colouring on ``vertices`` (renumbered 0..k-1 in the given order);
        class order follows the parent."""
        pos = {v: i for i, v in enumerate(vertices)}
        out = []
        for cl in self.classes:
            sub = frozenset(edge(pos[u], pos[v]) for u, v in cl if u in pos and v in pos)
            if sub:
                out.append(sub)
        return StarColouring(len(pos), tuple(out))

    def remove_vertex(self, v: int) -> "StarColouring":
        return self.restrict([u for u in range(self.n) if u != v])

    def same_partition(self, other: "StarColouring") -> bool:
        return self.n == other.n and set(self.classes) == set(other.classes)

    def to_json(self) -> dict:
        return {"n": self.n,
                "classes": [[list(e) for e in sorted(cl, key=lambda e: (e[1], e[0]))]
                            for cl in self.classes]}

    @classmethod
    def from_json(cls, d: dict) -> "StarColouring":
        for cl in d["classes"]:
            for u, v in cl:
                if not u < v:
                    raise ValueError(f"edge [{u},{v}] must have u < v")
        return cls(d["n"], tuple(frozenset((u, v) for u, v in cl) for cl in d["classes"]))


def dumps(obj: dict) -> str:
    """Canonical JSON text used for every file and stdout emission."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def class_centres(cl: Iterable[Edge]) -> frozenset:
    """Vertices of maximum degree inside the class."""
    es = list(cl)
    if len(es) == 1:
        return frozenset(es[0])
    deg: dict[int, int] = {}
    for u, v in es:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    top = max(deg.values())
    return frozenset(x for x, d in deg.items() if d == top)


@dataclass(frozen=True)
class ColourClassInfo:
    index: int
    centres: frozenset
    leaves: frozenset


def class_info(c: StarColouring, i: int) -> ColourClassInfo:
    cl = c.classes[i]
    deg: dict[int, int] = {}
    for u, v in cl:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return ColourClassInfo(i, class_centres(cl), frozenset(x for x, d in deg.items() if d == 1))


@dataclass
class ValidationReport:
    ok: bool
    violations: list = field(default_factory=list)  # (class index or None, reason)

    def __bool__(self):
        return self.ok


def _class_problem(cl: frozenset) -> str | None:
    if not cl:
        return "empty class"
    if len(cl) == 1:
        return None
    common = None
    for e in cl:
        common = set(e) if common is None else common & set(e)
    if common:
        return None
    verts = {x for e in cl for x in e}
    if len(cl) == 3 and len(verts) == 3:
        return "triangle class"
    return "monochromatic matching"


def validate_colouring(c: StarColouring) -> ValidationReport:
    viol = []
    seen: dict[Edge, int] = {}
    for i, cl in enumerate(c.classes):
        for e in cl:
            u, v = e
            if not (0 <= u < v < c.n):
                viol.append((i, f"edge {e} out of range"))
            elif e in seen:
                viol.append((i, f"edge {e} also in class {seen[e]}: not a partition"))
            else:
                seen[e] = i
        prob = _class_problem(cl)
        if prob:
            viol.append((i, prob))
    missing = [e for e in colex_edges(c.n) if e not in seen]
    if missing:
        viol.append((None, f"not a partition: {len(missing)} uncovered edge(s), e.g. {missing[0]}"))
    return ValidationReport(not viol, viol)


def colour_count(c: StarColouring) -> int:
    return len(c.classes)


def star_count_at(c: StarColouring, v: int) -> tuple[int, int]:
    """(classes having v as a centre, single-edge classes at v)."""
    if not 0 <= v < c.n:
        raise IndexError(f"vertex {v} out of range for n={c.n}")
    total = single = 0
    for cl, cen in zip(c.classes, c.centres):
        if v in cen:
            total += 1
            if len(cl) == 1:
                single += 1
    return total, single


def star_counts(c: StarColouring) -> list[int]:
    counts = [0] * c.n
    for cen in c.centres:
        for x in cen:
            counts[x] += 1
    return counts


def induced_orientation(c: StarColouring, tie_break: str | Callable[[int, Edge], int] = "lower") -> Tournament:
    """Orient every edge from the centre of its class to the leaf.

    ``tie_break`` picks the centre of single-edge classes: "lower", "higher",
    or a callable ``(class_index, edge) -> centre``.
    """
    out = [0] * c.n
    for i, cl in enumerate(c.classes):
        if len(cl) == 1:
            (u, v), = cl
            if tie_break == "lower":
                a = u
            elif tie_break == "higher":
                a = v
            else:
                a = tie_break(i, (u, v))
            b = v if a == u else u
            out[a] |= 1 << b
        else:
            (z,) = c.centres[i]
            for e in cl:
                leaf = e[0] if e[1] == z else e[1]
                out[z] |= 1 << leaf
    return Tournament(c.n, tuple(out))


# --------------------------------------------------------------------------
# canonical forms

CANON_CAP = 9


def _ranks(keys: list) -> list[int]:
    order = sorted(set(keys))
    pos = {k: i for i, k in enumerate(order)}
    return [pos[k] for k in keys]


def _cells_from_pair_features(n: int, feat: Callable[[int, int], tuple]) -> list[list[int]]:
    r0 = _ranks([tuple(sorted(feat(v, u) for u in range(n) if u != v)) for v in range(n)])
    r1 = _ranks([(r0[v], tuple(sorted((feat(v, u), r0[u]) for u in range(n) if u != v)))
                 for v in range(n)])
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(r1[v], []).append(v)
    return [cells[k] for k in sorted(cells)]


def _canonical_sequence(n: int, mat, cells: list[list[int]], relabel: bool) -> tuple[list[int], list[int]]:
    """Least colex label sequence over vertex orders that list the cells in order.

    Returns (sequence, order) where ``order[i]`` is the old vertex placed at
    new position i.  With ``relabel`` the labels are renumbered by first
    appearance along each candidate sequence.
    """
    slot_cells = [cell for cell in cells for _ in cell]
    best: list = [None, None]
    seq: list[int] = []
    order: list[int] = []
    remap: dict = {}

    def rec(k: int, used: int) -> None:
        if k == n:
            b = best[0]
            if b is None or seq < b:
                best[0] = list(seq)
                best[1] = list(order)
            return
        start = len(seq)
        for v in slot_cells[k]:
            if used >> v & 1:
                continue
            b = best[0]
            tight = b is not None and b[:start] == seq
            row = mat[v]
            added = []
            status = 0
            for u in order:
                lab = row[u]
                if relabel:
                    r = remap.get(lab)
                    if r is None:
                        r = len(remap)
                        remap[lab] = r
                        added.append(lab)
                    lab = r
                seq.append(lab)
                if tight and status == 0:
                    bl = b[len(seq) - 1]
                    if lab > bl:
                        status = 1
                        break
                    if lab < bl:
                        status = -1
            if status != 1:
                order.append(v)
                rec(k + 1, used | 1 << v)
                order.pop()
            del seq[start:]
            for lab in added:
                del remap[lab]

    rec(0, 0)
    return best[0], best[1]


def _colouring_cells(c_n: int, mat, sizes: list[int], centres: list[frozenset]) -> list[list[int]]:
    def feat(v, u):
        k = mat[v][u]
        return (sizes[k], v in centres[k], u in centres[k])
    return _cells_from_pair_features(c_n, feat)


def canonical_labels(n: int, labels: Sequence[int]) -> tuple[int, ...]:
    """Canonical colex label sequence of a colouring given by colex labels."""
    if n <= 1:
        return ()
    es = colex_edges(n)
    mat = [[-1] * n for _ in range(n)]
    groups: dict[int, list[Edge]] = {}
    for (u, v), lab in zip(es, labels):
        mat[u][v] = mat[v][u] = lab
        groups.setdefault(lab, []).append((u, v))
    sizes = {lab: len(g) for lab, g in groups.items()}
    cents = {lab: class_centres(g) for lab, g in groups.items()}
    cells = _colouring_cells(n, mat, sizes, cents)  # type: ignore[arg-type]
    seq, _ = _canonical_sequence(n, mat, cells, relabel=True)
    return tuple(seq)


def _invariant_digest(c: StarColouring) -> bytes:
    sizes = sorted(len(cl) for cl in c.classes)
    counts = star_counts(c)
    per_vertex = sorted((counts[v], tuple(sorted(len(c.classes[c.matrix[v][u]])
                                                 for u in range(c.n) if u != v)))
                        for v in range(c.n))
    return hashlib.blake2b(repr((c.n, sizes, per_vertex)).encode(), digest_size=16).digest()


def canonical_key(c: StarColouring, cap: int = CANON_CAP, allow_inexact: bool = False) -> bytes:
    """Key equal for two colourings iff they differ by a vertex permutation and
    a renaming of colours.

    Exact up to ``cap`` vertices.  Beyond it, ``allow_inexact`` yields a
    hash of coarse invariants prefixed with ``b"~"``; equal inexact keys do
    not imply isomorphism.
    """
    if c.n > cap:
        if not allow_inexact:
            raise CapExceeded(f"exact canonical form capped at n={cap}, got n={c.n}")
        return b"~" + _invariant_digest(c)
    return bytes([c.n]) + bytes(canonical_labels(c.n, c.labels))


def colouring_from_key(key: bytes) -> StarColouring:
    if key[:1] == b"~":
        raise ValueError("inexact keys do not encode a colouring")
    return StarColouring.from_labels(key[0], list(key[1:]))


def canonical_form(c: StarColouring) -> StarColouring:
    return colouring_from_key(canonical_key(c))


def graph_canonical_key(g: SimpleGraph) -> bytes:
    n = g.n
    mat = [[1 if v in g.adj[u] else 0 for v in range(n)] for u in range(n)]
    deg = [len(a) for a in g.adj]

    def feat(v, u):
        # high bit first: adjacency, then the neighbour's degree
        return (-mat[v][u], deg[u])

    cells = _cells_from_pair_features(n, feat) if n > 1 else [list(range(n))]
    # prefer many edges early: invert so the least sequence is edge-dense
    inv = [[1 - x for x in row] for row in mat]
    seq, _ = _canonical_sequence(n, inv, cells, relabel=False) if n > 1 else ([], [])
    return bytes([n]) + bytes(1 - x for x in seq)


def graph_from_key(key: bytes) -> SimpleGraph:
    n = key[0]
    return SimpleGraph.from_edges(n, [e for e, b in zip(colex_edges(n), key[1:]) if b])


# --------------------------------------------------------------------------
# graph invariants

INVARIANT_CAP = 12


@dataclass(frozen=True)
class GraphInvariants:
    va: int
    ea: int
    chi: int
    girth: float  # math.inf for forests


def vertex_arboricity(g: SimpleGraph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if _vertex_partition_into_forests(g, k):
            return k
    raise AssertionError("unreachable")


def _vertex_partition_into_forests(g: SimpleGraph, k: int) -> bool:
    part = [-1] * g.n
    # each part keeps its own union-find as a dict snapshot; n <= 12 so copying is cheap
    uf: list[dict] = [dict() for _ in range(k)]

    def find(d, a):
        while d.get(a, a) != a:
            a = d[a]
        return a

    def rec(v: int, used_parts: int) -> bool:
        if v == g.n:
            return True
        for p in range(min(k, used_parts + 1)):
            d = uf[p]
            saved = dict(d)
            ok = True
            for w in g.adj[v]:
                if w < v and part[w] == p:
                    rv, rw = find(d, v), find(d, w)
                    if rv == rw:
                        ok = False
                        break
                    d[rv] = rw
            if ok:
                part[v] = p
                if rec(v + 1, max(used_parts, p + 1)):
                    return True
                part[v] = -1
            uf[p] = saved
        return False

    return rec(0, 0)


def edge_arboricity(g: SimpleGraph) -> int:
    if g.e == 0:
        return 0
    lo = -(-g.e // (g.n - 1))
    es = g.sorted_edges()
    for k in range(lo, g.e + 1):
        if _edge_partition_into_forests(g.n, es, k):
            return k
    raise AssertionError("unreachable")


def _edge_partition_into_forests(n: int, es: list[Edge], k: int) -> bool:
    parents = [list(range(n)) for _ in range(k)]
    sizes = [0] * k

    def find(p, a):
        while p[a] != a:
            a = p[a]
        return a

    def rec(i: int, used: int) -> bool:
        if i == len(es):
            return True
        u, v = es[i]
        for f in range(min(k, used + 1)):
            if sizes[f] >= n - 1:
                continue
            p = parents[f]
            ru, rv = find(p, u), find(p, v)
            if ru == rv:
                continue
            p[ru] = rv
            sizes[f] += 1
            if rec(i + 1, max(used, f + 1)):
                return True
            sizes[f] -= 1
            p[ru] = ru
        return False

    return rec(0, 0)


def chromatic_number(g: SimpleGraph) -> int:
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    colour = [-1] * g.n
    best = [g.n]

    def rec(i: int, used: int) -> None:
        if used >= best[0]:
            return
        if i == g.n:
            best[0] = used
            return
        v = order[i]
        taken = {colour[w] for w in g.adj[v]}
        for col in range(used + 1):
            if col in taken or max(used, col + 1) >= best[0]:
                continue
            colour[v] = col
            rec(i + 1, max(used, col + 1))
            colour[v] = -1

    rec(0, 0)
    return best[0]


def girth(g: SimpleGraph) -> float:
    best = float("inf")
    for s in range(g.n):
        dist = {s: 0}
        par = {s: -1}
        queue = [s]
        for x in queue:
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    par[y] = x
                    queue.append(y)
                elif par[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def circumference(g: SimpleGraph) -> int:
    """Length of a longest cycle (0 for forests)."""
    best = 0
    for s in range(g.n):
        def dfs(v, used, length):
            nonlocal best
            for w in g.adj[v]:
                if w == s and length >= 3:
                    best = max(best, length)
                elif w > s and not used >> w & 1:
                    dfs(w, used | 1 << w, length + 1)
        dfs(s, 1 << s, 1)
    return best


def graph_invariants(g: SimpleGraph, cap: int = INVARIANT_CAP) -> GraphInvariants:
    if g.n > cap:
        raise CapExceeded(f"exact invariants capped at {cap} vertices")
    return GraphInvariants(vertex_arboricity(g), edge_arboricity(g), chromatic_number(g), girth(g))


# --------------------------------------------------------------------------
# pattern zoo


def _complete(k):
    return SimpleGraph.from_edges(k, itertools.combinations(range(k), 2))


def _bipartite(s, t):
    return SimpleGraph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def turan_part_sizes(n: int, parts: int) -> list[int]:
    q, r = divmod(n, parts)
    return [q + 1] * r + [q] * (parts - r)


def turan_edges(n: int, parts: int) -> int:
    sizes = turan_part_sizes(n, parts)
    return (n * n - sum(x * x for x in sizes)) // 2


def join(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    s = g1.n
    es = list(g1.edges) + [(u + s, v + s) for u, v in g2.edges]
    es += [(i, s + j) for i in range(s) for j in range(g2.n)]
    return SimpleGraph.from_edges(s + g2.n, es)


def pattern(name: str, **p) -> SimpleGraph:
    """Named graphs: C(k), K(k), K_minus(k), K_st(s,t), K_st_minus(s,t), M2,
    P(t) (t edges), star(t) (K_{1,t}), turan(l,n), join(T1,T2), Q3."""
    try:
        if name == "C":
            k = p["k"]
            if k < 3:
                raise ValueError("cycles need k >= 3")
            return SimpleGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
        if name == "K":
            k = p["k"]
            if k < 1:
                raise ValueError("k >= 1")
            return _complete(k)
        if name == "K_minus":
            k = p["k"]
            if k < 2:
                raise ValueError("k >= 2")
            return _complete(k).without_edges([(0, 1)])
        if name in ("K_st", "K_st_minus"):
            s, t = p["s"], p["t"]
            if not 1 <= s <= t:
                raise ValueError("need 1 <= s <= t")
            g = _bipartite(s, t)
            return g.without_edges([(0, s)]) if name == "K_st_minus" else g
        if name == "M2":
            return SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
        if name == "P":
            t = p["t"]
            if t < 0:
                raise ValueError("t >= 0")
            return SimpleGraph.from_edges(t + 1, [(i, i + 1) for i in range(t)])
        if name == "star":
            t = p["t"]
            if t < 1:
                raise ValueError("t >= 1")
            return SimpleGraph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])
        if name == "turan":
            ell, n = p["l"], p["n"]
            if ell < 1 or n < 0:
                raise ValueError("need l >= 1, n >= 0")
            sizes = turan_part_sizes(n, ell)
            part = [i for i, sz in enumerate(sizes) for _ in range(sz)]
            return SimpleGraph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2)
                                              if part[u] != part[v]])
        if name == "join":
            return join(p["T1"], p["T2"])
        if name == "Q3":
            return SimpleGraph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3)
                                              if u < u ^ (1 << b)])
    except KeyError as exc:
        raise ValueError(f"pattern {name!r} missing parameter {exc}") from None
    raise ValueError(f"unknown pattern {name!r}")


def parse_pattern(spec: str) -> SimpleGraph:
    """Short names used on the command line: C4, K4, K4-, K2,3, K2,3-, P3,
    star3, M2, Q3, T2,5 (Turán), join:P1+P2."""
    s = spec.strip()
    if s.startswith("join:"):
        a, b = s[5:].split("+")
        return join(parse_pattern(a), parse_pattern(b))
    if s == "M2":
        return pattern("M2")
    if s == "Q3":
        return pattern("Q3")
    if s.startswith("star"):
        return pattern("star", t=int(s[4:]))
    if s.startswith("P"):
        return pattern("P", t=int(s[1:]))
    if s.startswith("C"):
        return pattern("C", k=int(s[1:]))
    if s.startswith("T"):
        ell, n = s[1:].split(",")
        return pattern("turan", l=int(ell), n=int(n))
    if s.startswith("K"):
        body = s[1:]
        minus = body.endswith("-")
        body = body.rstrip("-")
        if "," in body:
            a, b = (int(x) for x in body.split(","))
            return pattern("K_st_minus" if minus else "K_st", s=a, t=b)
        return pattern("K_minus" if minus else "K", k=int(body))
    raise ValueError(f"cannot parse pattern {spec!r}")


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return g.n == h.n and g.e == h.e and graph_canonical_key(g) == graph_canonical_key(h)


def complete_graph_edges(n: int) -> int:
    return comb(n, 2)
