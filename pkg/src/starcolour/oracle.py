"""Exact desk-scale computations over all star-colourings of small K_n.

The main engine grows colourings one vertex at a time.  A rainbow-H-free
colouring of K_n with at least t colours has a vertex whose deletion loses at
most floor(2t/n) colours (each class disappears for at most two vertices),
so every such colouring extends some rainbow-H-free colouring of K_{n-1}
with at least t - floor(2t/n) colours.  Each level is reduced to one
representative per isomorphism class via canonical labels.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .core import (
    CANON_CAP,
    CapExceeded,
    SimpleGraph,
    StarColouring,
    canonical_key,
    canonical_labels,
    colex_edges,
    colouring_from_key,
    edge,
    graph_canonical_key,
    graph_from_key,
    is_isomorphic,
    join,
    pattern,
    star_counts,
)
from .search import (
    extensions,
    find_copy,
    find_copy_through,
    graph_contains,
    graph_contains_through_edge,
    plan_for,
)
from .tournaments import Tournament, is_ck_free

DEFAULT_CAP = 7
GRAPH_CAP = 10
Z_CAP = 7
REDBLUE_EDGE_CAP = 24


class PatternError(ValueError):
    """The pattern is outside the operation's domain (e.g. acyclic for ar*)."""


class PreconditionError(ValueError):
    pass


# --------------------------------------------------------------------------
# results


@dataclass
class Stats:
    nodes_explored: int = 0
    pruned: int = 0
    level_sizes: list[int] = field(default_factory=list)
    wall_time: float = 0.0

    def to_json(self, timing: bool = True) -> dict:
        d = {"nodes_explored": self.nodes_explored, "pruned": self.pruned,
             "level_sizes": list(self.level_sizes)}
        if timing:
            d["wall_time"] = round(self.wall_time, 6)
        return d


@dataclass(frozen=True)
class Witness:
    key: bytes
    colouring: StarColouring | None = None
    graph: SimpleGraph | None = None

    def to_json(self) -> dict:
        d: dict = {"key": self.key.hex()}
        if self.colouring is not None:
            d["colouring"] = self.colouring.to_json()
        if self.graph is not None:
            d["graph"] = self.graph.to_json()
        return d


@dataclass
class OracleResult:
    """``status`` is ``exact``, ``nonexistent`` (no admissible colouring at
    all) or ``lower_bound`` (search cap reached; ``value`` is a lower bound)."""

    quantity: str
    value: int | None
    status: str
    witnesses: list[Witness]
    stats: Stats
    params: dict = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        return {"quantity": self.quantity, "params": self.params, "value": self.value,
                "status": self.status, "witnesses": [w.to_json() for w in self.witnesses],
                "stats": self.stats.to_json(timing)}


def _colouring_witness(n: int, labels: Sequence[int]) -> Witness:
    key = bytes([n]) + bytes(labels)
    return Witness(key, colouring=colouring_from_key(key))


# --------------------------------------------------------------------------
# level engine for colourings


def level_thresholds(n: int, t: int) -> list[int]:
    ts = [0] * (n + 1)
    ts[n] = max(t, 0)
    for m in range(n, 1, -1):
        ts[m - 1] = max(0, ts[m] - (2 * ts[m]) // m)
    return ts


def _pattern_payload(hs: Iterable[SimpleGraph]) -> tuple:
    return tuple((h.n, tuple(h.sorted_edges())) for h in hs)


def _plans(payload: tuple):
    return [plan_for(SimpleGraph.from_edges(k, es)) for k, es in payload]


def _expand_chunk(args) -> tuple[list[tuple], int]:
    m, parents, threshold, payload = args
    plans = _plans(payload)
    out: set[tuple] = set()
    nodes = 0
    for lab in parents:
        children = extensions(m, lab, threshold, plans)
        nodes += len(children)
        for ch in children:
            out.add(canonical_labels(m + 1, ch))
    return sorted(out), nodes


class WorkerPool:
    """Process pool for level expansion; ``threads <= 1`` runs inline."""

    def __init__(self, threads: int = 1):
        self.threads = max(1, threads)
        self._ex = ProcessPoolExecutor(self.threads) if self.threads > 1 else None

    def map(self, fn, tasks: list) -> list:
        if self._ex is None:
            return [fn(t) for t in tasks]
        return list(self._ex.map(fn, tasks))

    def chunks(self, items: list) -> list[list]:
        k = 1 if self._ex is None else max(1, min(len(items), 8 * self.threads))
        return [items[i::k] for i in range(k)] if items else []

    def close(self):
        if self._ex is not None:
            self._ex.shutdown()
            self._ex = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def _grow(level: list[tuple], m: int, threshold: int, payload: tuple,
          pool: WorkerPool, stats: Stats) -> list[tuple]:
    tasks = [(m, chunk, threshold, payload) for chunk in pool.chunks(level)]
    merged: set[tuple] = set()
    for found, nodes in pool.map(_expand_chunk, tasks):
        merged.update(found)
        stats.nodes_explored += nodes
    return sorted(merged)


def _levels(n: int, payload: tuple, top: int, pool: WorkerPool, stats: Stats) -> list[tuple]:
    """Canonical labels of all rainbow-free colourings of K_n with >= top colours."""
    ts = level_thresholds(n, top)
    level: list[tuple] = [()]
    stats.level_sizes = [1]
    for m in range(1, n):
        before = stats.nodes_explored
        level = _grow(level, m, ts[m + 1], payload, pool, stats)
        stats.pruned += (stats.nodes_explored - before) - len(level)
        stats.level_sizes.append(len(level))
        if not level:
            break
    return level


def _ncol(labels: Sequence[int]) -> int:
    return max(labels) + 1 if labels else 0


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the search cap {cap}")


def _has_cycle(h: SimpleGraph) -> bool:
    return not h.is_forest()


def _start_value(n: int, hs: Sequence[SimpleGraph]) -> int:
    """Colour count of the best construction avoiding every member."""
    from .constructions import candidate_constructions
    from .detect import find_rainbow

    best = 0
    seen = []
    for h in hs:
        for _, col in candidate_constructions(n, h):
            if col.num_colours <= best or any(col.same_partition(s) for s in seen):
                continue
            seen.append(col)
            if all(find_rainbow(col, g) is None for g in hs):
                best = col.num_colours
    return best


def _arstar_search(n: int, hs: Sequence[SimpleGraph], threads: int, quantity: str,
                   params: dict, start: int | None = None) -> OracleResult:
    t0 = time.perf_counter()
    payload = _pattern_payload(hs)
    stats = Stats()
    top = _start_value(n, hs) if start is None else start
    with WorkerPool(threads) as pool:
        while top >= 0:
            stats.level_sizes = []
            final = _levels(n, payload, top, pool, stats)
            if final:
                best = max(_ncol(l) for l in final)
                wits = [_colouring_witness(n, l) for l in final if _ncol(l) == best]
                stats.wall_time = time.perf_counter() - t0
                return OracleResult(quantity, best, "exact", wits, stats, params)
            top -= 1
    stats.wall_time = time.perf_counter() - t0
    return OracleResult(quantity, None, "nonexistent", [], stats, params)


def _pattern_name(h: SimpleGraph) -> dict:
    return h.to_json()


def star_anti_ramsey(n: int, h: SimpleGraph, threads: int = 1, cap: int = DEFAULT_CAP) -> OracleResult:
    """ar*(n, H): most colours in a star-colouring of K_n with no rainbow H."""
    _check_cap(n, cap)
    if not _has_cycle(h):
        raise PatternError("ar* needs a pattern with a cycle (vertex arboricity >= 2)")
    return _arstar_search(n, [h], threads, "arstar", {"n": n, "pattern": _pattern_name(h)})


def star_anti_ramsey_family(n: int, hs: Sequence[SimpleGraph], threads: int = 1,
                            cap: int = DEFAULT_CAP) -> OracleResult:
    """Most colours avoiding rainbow copies of every member; ``nonexistent``
    when no star-colouring of K_n avoids them all."""
    _check_cap(n, cap)
    hs = list(hs)
    if not hs:
        raise ValueError("empty family")
    return _arstar_search(n, hs, threads, "arstar_family",
                          {"n": n, "patterns": [_pattern_name(h) for h in hs]})


def removal_family(h: SimpleGraph) -> list[SimpleGraph]:
    """{H - v}, one representative per isomorphism type."""
    out: list[SimpleGraph] = []
    for v in range(h.n):
        g = h.remove_vertex(v)
        if not any(is_isomorphic(g, o) for o in out):
            out.append(g)
    return out


def extremal_colourings(n: int, h: SimpleGraph, threads: int = 1, cap: int = DEFAULT_CAP) -> list[StarColouring]:
    res = star_anti_ramsey(n, h, threads=threads, cap=cap)
    return [w.colouring for w in res.witnesses]


def nsar(h: SimpleGraph, cap: int = DEFAULT_CAP, threads: int = 1) -> OracleResult:
    """Least n such that every star-colouring of K_n has a rainbow H.

    Witnesses are all rainbow-H-free colourings one size below the value.
    """
    if _has_cycle(h):
        raise PatternError("nsar exists only for acyclic patterns")
    t0 = time.perf_counter()
    payload = _pattern_payload([h])
    stats = Stats(level_sizes=[1])
    level: list[tuple] = [()]
    params = {"pattern": _pattern_name(h), "cap": cap}
    with WorkerPool(threads) as pool:
        if h.n <= 1:
            stats.wall_time = time.perf_counter() - t0
            return OracleResult("nsar", 1, "exact", [], stats, params)
        for m in range(1, cap):
            before = stats.nodes_explored
            nxt = _grow(level, m, 0, payload, pool, stats)
            stats.pruned += (stats.nodes_explored - before) - len(nxt)
            stats.level_sizes.append(len(nxt))
            if not nxt:
                wits = [_colouring_witness(m, l) for l in level]
                stats.wall_time = time.perf_counter() - t0
                return OracleResult("nsar", m + 1, "exact", wits, stats, params)
            level = nxt
    stats.wall_time = time.perf_counter() - t0
    return OracleResult("nsar", cap + 1, "lower_bound", [], stats, params)


def enumerate_star_colourings(n: int, canonical_only: bool = False,
                              cap: int = DEFAULT_CAP) -> Iterator[StarColouring]:
    """Every star-colouring of K_n once (labelled), or one per isomorphism class."""
    _check_cap(n, cap)
    if n < 1:
        return
    if canonical_only:
        with WorkerPool(1) as pool:
            for lab in _levels(n, (), 0, pool, Stats()):
                yield StarColouring.from_labels(n, lab)
        return

    def rec(m: int, lab: tuple) -> Iterator[StarColouring]:
        if m == n:
            yield StarColouring.from_labels(n, lab)
            return
        for ch in extensions(m, lab, 0, []):
            yield from rec(m + 1, ch)

    yield from rec(1, ())


def count_colourings(n: int, canonical_only: bool = False) -> int:
    return sum(1 for _ in enumerate_star_colourings(n, canonical_only))


# --------------------------------------------------------------------------
# edge-order branch and bound (independent cross-check of the level engine)


def star_anti_ramsey_bnb(n: int, h: SimpleGraph, prune: bool = True, incumbent: int = -1) -> int | None:
    """Labelled search assigning edges in colex order to an existing class or
    a fresh one.  With ``prune`` it cuts on completed rainbow copies after each
    vertex and on the bound (classes + unassigned edges); without it every
    complete colouring is generated and tested.  Returns None if no colouring
    avoids H."""
    edges = colex_edges(n)
    total = len(edges)
    plan = plan_for(h)
    col = [[-1] * n for _ in range(n)]
    cands: list[set] = []
    best = [incumbent]
    hosts_upto = [list(range(w + 1)) for w in range(n)]

    def rec(i: int) -> None:
        ncls = len(cands)
        if prune and ncls + (total - i) <= best[0]:
            return
        if i == total:
            if not prune and find_copy(col, plan, list(range(n))) is not None:
                return
            best[0] = max(best[0], ncls)
            return
        u, w = edges[i]
        for k in range(ncls + 1):
            if k < ncls:
                new = cands[k] & {u, w}
                if not new:
                    continue
                old = cands[k]
                cands[k] = new
            else:
                cands.append({u, w})
            col[u][w] = col[w][u] = k
            ok = True
            if prune and u == w - 1 and find_copy_through(col, plan, hosts_upto[w], w) is not None:
                ok = False
            if ok:
                rec(i + 1)
            col[u][w] = col[w][u] = -1
            if k < ncls:
                cands[k] = old
            else:
                cands.pop()

    rec(0)
    return best[0] if best[0] >= 0 else None


# --------------------------------------------------------------------------
# small extremal graph numbers


def _greedy_free_graph(n: int, plans, rng: random.Random) -> list[int]:
    adj = [0] * n
    es = list(itertools.combinations(range(n), 2))
    rng.shuffle(es)
    hosts = list(range(n))
    for u, v in es:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if any(graph_contains_through_edge(adj, p, hosts, u, v) for p in plans):
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
    return adj


def _adj_edges(adj: Sequence[int]) -> int:
    return sum(bin(a).count("1") for a in adj) // 2


def _graph_of(adj: Sequence[int]) -> SimpleGraph:
    n = len(adj)
    return SimpleGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1])


def _adj_of(g: SimpleGraph) -> list[int]:
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _graph_children(adj: list[int], need: int, plans) -> list[list[int]]:
    m = len(adj)
    w = m
    cur = adj + [0]
    hosts = list(range(m + 1))
    out = []

    def rec(x: int, cnt: int) -> None:
        if cnt + (m - x) < need:
            return
        if x == m:
            out.append(list(cur))
            return
        cur[w] |= 1 << x
        cur[x] |= 1 << w
        if not any(graph_contains_through_edge(cur, p, hosts, w, x) for p in plans):
            rec(x + 1, cnt + 1)
        cur[w] &= ~(1 << x)
        cur[x] &= ~(1 << w)
        rec(x + 1, cnt)

    rec(0, 0)
    return out


def ex_small(n: int, hs: Sequence[SimpleGraph], cap: int = GRAPH_CAP, seed: int = 0) -> OracleResult:
    """ex(n, family): most edges in an n-vertex graph containing no member."""
    _check_cap(n, cap)
    hs = list(hs)
    if not hs or any(h.e == 0 or min(h.degree(v) for v in range(h.n)) == 0 for h in hs):
        raise PatternError("family members must have edges and no isolated vertices")
    t0 = time.perf_counter()
    plans = [plan_for(h) for h in hs]
    rng = random.Random(seed)
    top = max(_adj_edges(_greedy_free_graph(n, plans, rng)) for _ in range(16)) if n >= 2 else 0
    stats = Stats()
    params = {"n": n, "family": [h.to_json() for h in hs]}
    while top >= 0:
        ts = level_thresholds(n, top)
        level = {graph_canonical_key(SimpleGraph(1, frozenset())): None} if n >= 1 else {}
        stats.level_sizes = [len(level)]
        for m in range(1, n):
            nxt = {}
            for key in sorted(level):
                adj = _adj_of(graph_from_key(key))
                need = ts[m + 1] - _adj_edges(adj)
                for ch in _graph_children(adj, need, plans):
                    stats.nodes_explored += 1
                    nxt[graph_canonical_key(_graph_of(ch))] = None
            level = nxt
            stats.level_sizes.append(len(level))
            if not level:
                break
        if level:
            keys = sorted(level)
            best = max(graph_from_key(k).e for k in keys)
            wits = [Witness(k, graph=graph_from_key(k)) for k in keys if graph_from_key(k).e == best]
            stats.wall_time = time.perf_counter() - t0
            return OracleResult("ex", best, "exact", wits, stats, params)
        top -= 1
    raise AssertionError("the empty graph is always admissible")  # pragma: no cover


def contains_subgraph(g: SimpleGraph, h: SimpleGraph) -> bool:
    return graph_contains(_adj_of(g), plan_for(h), list(range(g.n)))


def zarankiewicz_small(m: int, n: int, s: int, t: int, cap: int = Z_CAP) -> OracleResult:
    """z(m,n;s,t) with rows (size-m side) hosting the s-set."""
    if max(m, n) > cap:
        raise CapExceeded(f"Zarankiewicz search capped at {cap}")
    if s < 1 or t < 1:
        raise ValueError("need s, t >= 1")
    t0 = time.perf_counter()
    stats = Stats()
    masks = sorted(range(1 << n), key=lambda r: (bin(r).count("1"), r), reverse=True)
    keyof = {r: (bin(r).count("1"), r) for r in masks}
    pc = {r: bin(r).count("1") for r in masks}
    best = [-1, None]
    rows: list[int] = []
    inters: list[list[int]] = []  # intersections of (s-1)-subsets of rows so far

    def allowed(r: int) -> bool:
        if s == 1:
            return pc[r] < t
        return all(bin(r & i).count("1") < t for i in inters[-1]) if inters else True

    def subsets_after(r: int) -> list[int]:
        if s == 1:
            return []
        out = []
        for combo in itertools.combinations(range(len(rows)), s - 2):
            i = r
            for j in combo:
                i &= rows[j]
            out.append(i)
        return out

    def rec(i: int, edges: int) -> None:
        stats.nodes_explored += 1
        if i == m:
            if edges > best[0]:
                best[0] = edges
                best[1] = list(rows)
            return
        if i == 0:
            cand = [((1 << d) - 1) << (n - d) for d in range(n, -1, -1)]
        else:
            prev = keyof[rows[-1]]
            cand = [r for r in masks if keyof[r] <= prev]
        for r in cand:
            if edges + (m - i) * pc[r] <= best[0]:
                stats.pruned += 1
                break  # candidates come in nonincreasing popcount
            if i > 0 and not allowed(r):
                continue
            new_inters = (inters[-1] if inters else []) + subsets_after(r)
            rows.append(r)
            inters.append(new_inters)
            rec(i + 1, edges + pc[r])
            rows.pop()
            inters.pop()

    if s == 1:
        # each row on its own must have fewer than t ones
        value = m * min(n, t - 1)
        rows_best = [(1 << min(n, t - 1)) - 1] * m
    else:
        rec(0, 0)
        value, rows_best = best[0], best[1]
    g = SimpleGraph.from_edges(m + n, [(a, m + b) for a, r in enumerate(rows_best) for b in range(n) if r >> b & 1])
    stats.wall_time = time.perf_counter() - t0
    return OracleResult("z", value, "exact", [Witness(graph_canonical_key(g), graph=g)], stats,
                        {"m": m, "n": n, "s": s, "t": t})


# --------------------------------------------------------------------------
# forests inside joins of trees


@dataclass(frozen=True)
class RedBlueReport:
    holds: bool
    forests_checked: int
    counterexample: tuple | None = None


def _is_bipartite(n: int, adj: Sequence[int]) -> bool:
    side = [-1] * n
    for r in range(n):
        if side[r] >= 0:
            continue
        side[r] = 0
        stack = [r]
        while stack:
            u = stack.pop()
            a = adj[u]
            v = 0
            while a:
                if a & 1:
                    if side[v] < 0:
                        side[v] = 1 - side[u]
                        stack.append(v)
                    elif side[v] == side[u]:
                        return False
                a >>= 1
                v += 1
    return True


def _has_kst_minus(n: int, adj: Sequence[int], s: int, t: int) -> bool:
    full = (1 << n) - 1
    for sub in itertools.combinations(range(n), s):
        smask = 0
        for v in sub:
            smask |= 1 << v
        rest = full & ~smask
        if bin(rest).count("1") < t:
            continue
        # sides use all vertices when s + t = n; otherwise try t-subsets of the rest
        rest_list = [v for v in range(n) if rest >> v & 1]
        for tsub in itertools.combinations(rest_list, t):
            missing = 0
            for u in sub:
                for v in tsub:
                    if not adj[u] >> v & 1:
                        missing += 1
                        if missing > 1:
                            break
                if missing > 1:
                    break
            if missing <= 1:
                return True
    return False


def _forests(n: int, edges: list[tuple[int, int]], spanning_only: bool) -> Iterator[tuple]:
    """Edge subsets forming forests; with ``spanning_only`` only the maximal
    ones (spanning trees of a connected graph)."""
    target = n - 1
    chosen: list[tuple[int, int]] = []
    comp = list(range(n))

    def rec(i: int) -> Iterator[tuple]:
        if spanning_only and len(chosen) + (len(edges) - i) < target:
            return
        if i == len(edges) or (spanning_only and len(chosen) == target):
            if not spanning_only or len(chosen) == target:
                yield tuple(chosen)
            return
        u, v = edges[i]
        cu, cv = comp[u], comp[v]
        if cu != cv:
            saved = list(comp)
            for x in range(n):
                if comp[x] == cv:
                    comp[x] = cu
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            comp[:] = saved
        yield from rec(i + 1)

    yield from rec(0)


def check_redblue(t1: SimpleGraph, t2: SimpleGraph, maximal_only: bool = True) -> RedBlueReport:
    """For every forest F in T1 + T2, the rest has an odd cycle or a K_{s,t}^-.

    Removing more edges only makes the conclusion harder, so by default only
    maximal forests (spanning trees) are checked.
    """
    if t1.n < 3 or t2.n < 3:
        raise PreconditionError("both trees need at least 3 vertices")
    if not (t1.is_forest() and t1.is_connected() and t2.is_forest() and t2.is_connected()):
        raise PreconditionError("arguments must be trees")
    h = join(t1, t2)
    if h.e > REDBLUE_EDGE_CAP:
        raise CapExceeded(f"join has {h.e} edges, cap is {REDBLUE_EDGE_CAP}")
    s, t = t1.n, t2.n
    es = h.sorted_edges()
    base = _adj_of(h)
    count = 0
    for forest in _forests(h.n, es, maximal_only):
        count += 1
        adj = list(base)
        for u, v in forest:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        if not _is_bipartite(h.n, adj):
            continue
        if _has_kst_minus(h.n, adj, s, t):
            continue
        return RedBlueReport(False, count, forest)
    return RedBlueReport(True, count)


# --------------------------------------------------------------------------
# structure checkers


@dataclass(frozen=True)
class StructureReport:
    ok: bool
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def is_lexical(c: StarColouring) -> bool:
    from .constructions import lexical

    if c.n < 2:
        return True
    cap = max(CANON_CAP, c.n)
    return canonical_key(c, cap=cap) == canonical_key(lexical(c.n), cap=cap)


def check_structure_ck(c: StarColouring, k: int) -> StructureReport:
    """Is ``c`` the cycle-extremal shape: B of size k-1 spanning a rainbow
    clique of private colours, every other vertex centring one star that
    covers B, and a C_k-free tournament on the rest?"""
    n = c.n
    if k < 3 or n < k - 1:
        return StructureReport(False)
    sizes = [len(cl) for cl in c.classes]
    for b in itertools.combinations(range(n), k - 1):
        bset = set(b)
        if any(sizes[c.colour(u, v)] != 1 for u, v in itertools.combinations(b, 2)):
            continue
        a = [x for x in range(n) if x not in bset]
        own = {}
        good = True
        for x in a:
            cols = {c.colour(x, y) for y in b}
            if len(cols) != 1:
                good = False
                break
            (own[x],) = cols
        if not good:
            continue
        arcs = []
        for x, y in itertools.combinations(a, 2):
            col = c.colour(x, y)
            if col == own[x]:
                arcs.append((x, y))
            elif col == own[y]:
                arcs.append((y, x))
            else:
                good = False
                break
        if not good:
            continue
        pos = {x: i for i, x in enumerate(a)}
        t = Tournament.from_arcs(len(a), [(pos[x], pos[y]) for x, y in arcs])
        classes = [[edge(x, y) for (p, y) in arcs if p == x] + [edge(x, y) for y in b] for x in a]
        classes += [[e] for e in itertools.combinations(b, 2)]
        rebuilt = StarColouring.from_classes(n, classes)
        if not rebuilt.same_partition(c):
            continue
        if len(a) >= k and not is_ck_free(t, k)[0]:
            continue
        return StructureReport(True, {"B": list(b), "A": a, "tournament": t.to_bits()})
    return StructureReport(False)


def k4minus_variants(n: int) -> list[StarColouring]:
    from .constructions import k4minus_extremal

    if n % 2 or n == 2:
        return [k4minus_extremal(n)]
    out = []
    for a in range(1, (n - 2) // 2 + 1):
        trio = [2 * a - 2, 2 * a - 1, 2 * a]
        pairs = list(itertools.combinations(trio, 2))
        for r in (1, 2):
            for s in itertools.combinations(pairs, r):
                out.append(k4minus_extremal(n, a, s))
    return out


def check_structure_k4minus(c: StarColouring) -> StructureReport:
    """Does some vertex order turn ``c`` into lexical-plus-J as in the K_4^- family?"""
    n = c.n
    if n < 2:
        return StructureReport(False)
    cap = max(CANON_CAP, n)
    key = canonical_key(c, cap=cap)
    for v in k4minus_variants(n):
        if canonical_key(v, cap=cap) == key:
            return StructureReport(True, {"variant": v.to_json()})
    return StructureReport(False)


# --------------------------------------------------------------------------
# covering tuples for rainbow-K_4-free colourings


@dataclass(frozen=True)
class TupleP:
    W: frozenset
    Y: frozenset
    Z: frozenset
    x: int
    v_star: int
    c_Z: int

    @classmethod
    def make(cls, W, Y, Z, x, v_star, c_Z) -> "TupleP":
        return cls(frozenset(W), frozenset(Y), frozenset(Z), x, v_star, c_Z)

    def to_json(self) -> dict:
        return {"W": sorted(self.W), "Y": sorted(self.Y), "Z": sorted(self.Z),
                "x": self.x, "v_star": self.v_star, "c_Z": self.c_Z}


def colours_inside(c: StarColouring, s: Iterable[int]) -> set[int]:
    vs = sorted(set(s))
    return {c.colour(u, v) for u, v in itertools.combinations(vs, 2)}


def colours_between(c: StarColouring, a: Iterable[int], b: Iterable[int]) -> set[int]:
    return {c.colour(u, v) for u in set(a) for v in set(b) if u != v}


def b_set(c: StarColouring, p: TupleP) -> set[int]:
    return colours_inside(c, p.Y) | colours_inside(c, p.Z) | {p.c_Z}


def c_set(c: StarColouring, p: TupleP) -> set[int]:
    return colours_inside(c, p.W) | b_set(c, p)


def _in_range(c: StarColouring, p: TupleP) -> bool:
    v = range(c.n)
    return (all(u in v for u in p.W | p.Y | p.Z) and p.x in v and p.v_star in v
            and 0 <= p.c_Z < c.num_colours)


def tuple_predicates(c: StarColouring, p: TupleP) -> dict[str, bool]:
    """Each of P1..P7 evaluated on its own."""
    n = c.n
    res = {}
    res["P1"] = _in_range(c, p)
    if not res["P1"]:
        return {f"P{i}": False for i in range(1, 8)}
    res["P2"] = ((p.W | p.Y | p.Z) == frozenset(range(n)) and len(p.W) >= 1 and len(p.Y) >= 2
                 and len(p.Z) >= 2 and len(p.W) + len(p.Y) + len(p.Z) == n + 2)
    res["P3"] = colours_inside(c, p.Y | p.Z) == b_set(c, p)
    p4 = True
    x = p.x
    for y in p.Y - {x}:
        for z in p.Z - {p.v_star}:
            others = ({y, z} | p.W) - {x}
            cols = [c.colour(x, u) for u in others]
            if len(cols) != len(set(cols)):
                p4 = False
                break
        if not p4:
            break
    res["P4"] = p4
    res["P5"] = (x in p.W and x in p.Y and x not in p.Z and p.v_star in p.Y and p.v_star in p.Z
                 and p.v_star not in p.W
                 and all((u in p.W) + (u in p.Y) + (u in p.Z) == 1
                         for u in range(n) if u not in (x, p.v_star)))
    cent = c.centres
    res["P6"] = all(u != p.v_star and u in cent[c.colour(p.v_star, u)]
                    for u in (p.Z - {p.v_star}) | {x})
    res["P7"] = all(z != x and x in cent[c.colour(x, z)] and c.colour(x, z) == p.c_Z
                    for z in p.Z - {p.v_star})
    return res


def check_tuple(c: StarColouring, p: TupleP) -> dict[str, bool]:
    pr = tuple_predicates(c, p)
    good = all(pr[f"P{i}"] for i in range(1, 5))
    great = good and all(pr[f"P{i}"] for i in range(5, 8))
    restricted = great
    if great:
        bp = b_set(c, p)
        for w in p.W - {p.x}:
            if not colours_between(c, [w], p.Y) <= bp | {c.colour(w, p.x)}:
                restricted = False
                break
    covers = pr["P1"] and set(range(c.num_colours)) == c_set(c, p)
    return {"good": good, "great": great, "restricted": restricted, "covers": covers, **pr}


def stars_at(c: StarColouring, x: int) -> list[int]:
    return [i for i, cen in enumerate(c.centres) if x in cen]


def _k4_precondition(c: StarColouring) -> None:
    from .detect import find_rainbow

    if find_rainbow(c, pattern("K", k=4)) is not None:
        raise PreconditionError("colouring contains a rainbow K_4")


def find_covering_tuple(c: StarColouring, x: int | None = None) -> TupleP | None:
    """A good tuple whose colour set C_P is every colour of ``c``.

    ``x`` defaults to each vertex centring at least three classes in turn.
    """
    _k4_precondition(c)
    counts = star_counts(c)
    xs = [v for v in range(c.n) if counts[v] >= 3] if x is None else [x]
    if not xs or counts[xs[0]] < 3:
        raise PreconditionError("need a vertex centring at least three classes")
    n = c.n
    full = set(range(c.num_colours))
    inside: dict[int, set] = {}

    def cin(mask: int) -> set:
        if mask not in inside:
            inside[mask] = colours_inside(c, [v for v in range(n) if mask >> v & 1])
        return inside[mask]

    options = [1, 2, 4, 3, 5, 6, 7]  # membership in W (1), Y (2), Z (4)
    for xv in xs:
        for memb in itertools.product(options, repeat=n):
            if sum(bin(o).count("1") for o in memb) != n + 2:
                continue
            wm = sum(1 << v for v in range(n) if memb[v] & 1)
            ym = sum(1 << v for v in range(n) if memb[v] & 2)
            zm = sum(1 << v for v in range(n) if memb[v] & 4)
            if not wm or bin(ym).count("1") < 2 or bin(zm).count("1") < 2:
                continue
            yz = cin(ym | zm)
            extra = yz - cin(ym) - cin(zm)
            if len(extra) > 1 or cin(wm) | yz != full:
                continue
            cz_options = sorted(extra) if extra else sorted(yz)
            W = [v for v in range(n) if wm >> v & 1]
            Y = [v for v in range(n) if ym >> v & 1]
            Z = [v for v in range(n) if zm >> v & 1]
            for vs in range(n):
                p = TupleP.make(W, Y, Z, xv, vs, cz_options[0])
                res = check_tuple(c, p)
                if res["good"] and res["covers"]:
                    return p
    return None


def initial_great_tuple(c: StarColouring, x: int) -> TupleP | None:
    """Great tuple built from the leaf sets of the stars centred at ``x``,
    with the complete-partite splitting found by brute force."""
    _k4_precondition(c)
    parts = []
    for i in stars_at(c, x):
        leaves = sorted({u for e in c.classes[i] for u in e} - {x})
        parts.append(leaves)
    if len(parts) < 3:
        raise PreconditionError("x must centre at least three classes")
    vprime = sorted(set().union(*parts))
    part_of = {v: i for i, p in enumerate(parts) for v in p}

    def partite_cols(s: Sequence[int]) -> set:
        return {c.colour(u, v) for u, v in itertools.combinations(sorted(s), 2) if part_of[u] != part_of[v]}

    for i, zp in enumerate(parts):
        for vs in vprime:
            if vs in zp:
                continue
            yp = [v for v in vprime if v not in zp and v != vs]
            between = {c.colour(y, z) for y in yp for z in zp}
            if not between <= partite_cols(yp + [vs]) | partite_cols(zp + [vs]):
                continue
            ok = True
            for z in zp:
                k = c.colour(z, vs)
                pe = [e for e in c.classes[k] if part_of.get(e[0], -1) != part_of.get(e[1], -2)
                      and e[0] in part_of and e[1] in part_of]
                if len(pe) < 2 or z not in c.centres[k]:
                    ok = False
                    break
            if not ok:
                continue
            W = [v for v in range(c.n) if v not in part_of]
            p = TupleP.make(W, yp + [x, vs], zp + [vs], x, vs, c.colour(x, zp[0]))
            if check_tuple(c, p)["great"]:
                return p
    return None
