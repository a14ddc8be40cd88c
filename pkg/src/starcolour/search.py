"""Backtracking kernels shared by the detectors and the exhaustive oracle.

Host colourings are handled as square matrices of small non-negative colour
ids; sets of used colours and used host vertices are int bitmasks.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .core import SimpleGraph, class_centres, colex_edges


def connected_order(h: SimpleGraph, start: Sequence[int] = ()) -> list[int]:
    """Greedy order placing next the vertex with most already-placed neighbours."""
    order = list(start)
    placed = set(order)
    while len(order) < h.n:
        best = max((v for v in range(h.n) if v not in placed),
                   key=lambda v: (len(h.adj[v] & placed), len(h.adj[v]), -v))
        order.append(best)
        placed.add(best)
    return order


def _backs(h: SimpleGraph, order: list[int]) -> tuple[tuple[int, ...], ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(tuple(sorted(pos[u] for u in h.adj[v] if pos[u] < i)) for i, v in enumerate(order))


@lru_cache(maxsize=None)
def _orbit_reps(n: int, edges: frozenset) -> tuple[int, ...]:
    h = SimpleGraph(n, edges)
    deg = [h.degree(v) for v in range(n)]
    orbit = list(range(n))

    def find(a):
        while orbit[a] != a:
            a = orbit[a]
        return a

    perm = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            for v in range(n):
                a, b = find(v), find(perm[v])
                if a != b:
                    orbit[max(a, b)] = min(a, b)
            return
        for img in range(n):
            if used[img] or deg[img] != deg[i]:
                continue
            if any(((j, i) in edges or (i, j) in edges) != ((min(perm[j], img), max(perm[j], img)) in edges)
                   for j in range(i)):
                continue
            perm[i] = img
            used[img] = True
            rec(i + 1)
            used[img] = False
        perm[i] = -1

    rec(0)
    return tuple(sorted({find(v) for v in range(n)}))


class PatternPlan:
    """Vertex orders for embedding one pattern, free or anchored."""

    def __init__(self, h: SimpleGraph):
        self.h = h
        self.k = h.n
        self.reps = _orbit_reps(h.n, h.edges) if h.n else ()
        self.free = []
        for p in self.reps:
            order = connected_order(h, [p])
            self.free.append((order, _backs(h, order)))
        self.pairs = []
        self.edge_pairs = []
        for p in self.reps:
            for q in range(h.n):
                if q != p:
                    order = connected_order(h, [p, q])
                    self.pairs.append((order, _backs(h, order)))
        for p in range(h.n):
            for q in sorted(h.adj[p]):
                order = connected_order(h, [p, q])
                self.edge_pairs.append((order, _backs(h, order)))


@lru_cache(maxsize=256)
def plan_for(h: SimpleGraph) -> PatternPlan:
    return PatternPlan(h)


def _dfs(col, hosts, backs, pos, mapping, usedv, usedc) -> bool:
    if pos == len(backs):
        return True
    bk = backs[pos]
    for v in hosts:
        if usedv >> v & 1:
            continue
        row = col[v]
        cs = usedc
        for j in bk:
            b = 1 << row[mapping[j]]
            if cs & b:
                break
            cs |= b
        else:
            mapping[pos] = v
            if _dfs(col, hosts, backs, pos + 1, mapping, usedv | 1 << v, cs):
                return True
    return False


def find_copy(col, plan: PatternPlan, hosts: Sequence[int]) -> dict[int, int] | None:
    """Rainbow copy of the pattern on ``hosts``; returns pattern -> host map."""
    if plan.k == 0:
        return {}
    if plan.k > len(hosts):
        return None
    order, backs = plan.free[0]
    mapping = [0] * plan.k
    # root symmetry: the first placed vertex ranges over one orbit representative only
    for v in hosts:
        mapping[0] = v
        if _dfs(col, hosts, backs, 1, mapping, 1 << v, 0):
            return {order[i]: mapping[i] for i in range(plan.k)}
    return None


def find_copy_through(col, plan: PatternPlan, hosts: Sequence[int], w: int) -> dict[int, int] | None:
    """Rainbow copy whose image contains host vertex ``w``."""
    if plan.k == 0 or plan.k > len(hosts):
        return None
    mapping = [0] * plan.k
    for order, backs in plan.free:
        mapping[0] = w
        if _dfs(col, hosts, backs, 1, mapping, 1 << w, 0):
            return {order[i]: mapping[i] for i in range(plan.k)}
    return None


def has_copy_through_pair(col, plan: PatternPlan, hosts: Sequence[int], w: int, x: int) -> bool:
    if plan.k < 2 or plan.k > len(hosts):
        return False
    mapping = [0] * plan.k
    mapping[0] = w
    mapping[1] = x
    start_used = 1 << w | 1 << x
    row = col[x]
    for order, backs in plan.pairs:
        cs = 0
        if backs[1]:
            cs = 1 << row[w]
        if _dfs(col, hosts, backs, 2, mapping, start_used, cs):
            return True
    return False


# --------------------------------------------------------------------------
# one-vertex extension of colourings


def labels_matrix(n: int, labels: Sequence[int]) -> list[list[int]]:
    col = [[-1] * n for _ in range(n)]
    for (u, v), c in zip(colex_edges(n), labels):
        col[u][v] = col[v][u] = c
    return col


def extensions(m: int, labels: tuple, threshold: int, plans: Sequence[PatternPlan]) -> list[tuple]:
    """All colourings of K_{m+1} whose restriction to the first m vertices is
    ``labels`` (restricted-growth colex labels), that avoid rainbow copies of
    every planned pattern through the new vertex, and that have at least
    ``threshold`` colours."""
    n = m + 1
    w = m
    col = labels_matrix(n, labels)
    ncls = max(labels) + 1 if labels else 0
    groups: dict[int, list] = {}
    for e, c in zip(colex_edges(m), labels):
        groups.setdefault(c, []).append(e)
    single = {c for c, es in groups.items() if len(es) == 1}
    opts: list[list[int]] = [[] for _ in range(m)]
    for c in range(ncls):
        for x in class_centres(groups[c]):
            opts[x].append(c)
    out: list[tuple] = []
    choice = [0] * m
    taken: set[int] = set()
    hosts: list[int] = [w]
    wrow = col[w]

    def rec(x: int, ngroups: int) -> None:
        if ncls + ngroups + (m - x) < threshold:
            return
        if x == m:
            out.append(labels + tuple(choice))
            return
        hosts.append(x)
        for c in opts[x] + list(range(ncls, ncls + ngroups + 1)):
            if c in taken:
                continue
            wrow[x] = col[x][w] = c
            if any(has_copy_through_pair(col, p, hosts, w, x) for p in plans):
                continue
            choice[x] = c
            is_single = c in single
            if is_single:
                taken.add(c)
            rec(x + 1, ngroups + (c == ncls + ngroups))
            if is_single:
                taken.discard(c)
        hosts.pop()
        wrow[x] = col[x][w] = -1

    rec(0, 0)
    return out


# --------------------------------------------------------------------------
# uncoloured subgraph containment (adjacency bitmasks)


def _gdfs(adj, hosts, backs, pos, mapping, usedv) -> bool:
    if pos == len(backs):
        return True
    bk = backs[pos]
    for v in hosts:
        if usedv >> v & 1:
            continue
        a = adj[v]
        for j in bk:
            if not a >> mapping[j] & 1:
                break
        else:
            mapping[pos] = v
            if _gdfs(adj, hosts, backs, pos + 1, mapping, usedv | 1 << v):
                return True
    return False


def graph_contains(adj: Sequence[int], plan: PatternPlan, hosts: Sequence[int]) -> bool:
    if plan.k == 0:
        return True
    if plan.k > len(hosts):
        return False
    order, backs = plan.free[0]
    mapping = [0] * plan.k
    for v in hosts:
        mapping[0] = v
        if _gdfs(adj, hosts, backs, 1, mapping, 1 << v):
            return True
    return False


def graph_contains_through_edge(adj: Sequence[int], plan: PatternPlan, hosts: Sequence[int],
                                w: int, x: int) -> bool:
    """Copy of the pattern using the host edge wx (which must be present)."""
    if plan.k > len(hosts):
        return False
    mapping = [0] * plan.k
    mapping[0] = w
    mapping[1] = x
    for order, backs in plan.edge_pairs:
        if _gdfs(adj, hosts, backs, 2, mapping, 1 << w | 1 << x):
            return True
    return False
