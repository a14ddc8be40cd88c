"""Rainbow subgraph detection in star-coloured complete graphs.

Every positive answer comes with a :class:`RainbowCertificate` that can be
re-validated against the colouring independently of the search that found it.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (
    SimpleGraph,
    StarColouring,
    class_centres,
    edge,
    join,
    pattern,
    star_counts,
)
from .search import find_copy, plan_for
from .tournaments import NotStronglyConnected, Tournament, hamilton_cycle

JOIN_RETRIES = 64


@dataclass(frozen=True)
class RainbowCertificate:
    """Injective map pattern -> host with the colour of every pattern edge."""

    pattern: SimpleGraph
    mapping: tuple[int, ...]
    colours: tuple[int, ...]

    @classmethod
    def build(cls, c: StarColouring, h: SimpleGraph, mapping: Sequence[int]) -> "RainbowCertificate":
        mapping = tuple(mapping)
        cols = tuple(c.colour(mapping[u], mapping[v]) for u, v in h.sorted_edges())
        return cls(h, mapping, cols)

    def problems(self, c: StarColouring) -> list[str]:
        out = []
        h, m = self.pattern, self.mapping
        if len(m) != h.n:
            return [f"map has {len(m)} entries for {h.n} pattern vertices"]
        if len(set(m)) != len(m):
            out.append("map is not injective")
        if any(not 0 <= x < c.n for x in m):
            out.append("map leaves the host")
            return out
        es = h.sorted_edges()
        if len(self.colours) != len(es):
            out.append("wrong number of colours")
            return out
        for (u, v), col in zip(es, self.colours):
            if m[u] != m[v] and c.colour(m[u], m[v]) != col:
                out.append(f"edge {u}{v}: recorded colour {col} differs from host")
        if len(set(self.colours)) != len(self.colours):
            out.append("colours repeat")
        return out

    def is_valid(self, c: StarColouring) -> bool:
        return not self.problems(c)

    def to_json(self) -> dict:
        return {"pattern": self.pattern.to_json(), "map": list(self.mapping),
                "colours": list(self.colours)}


def find_rainbow(c: StarColouring, h: SimpleGraph,
                 hosts: Sequence[int] | None = None) -> RainbowCertificate | None:
    """Exhaustive search for a rainbow copy of ``h``, optionally inside ``hosts``."""
    pool = list(range(c.n)) if hosts is None else sorted(hosts)
    if h.n > len(pool):
        return None
    found = find_copy(c.matrix, plan_for(h), pool)
    if found is None:
        return None
    return RainbowCertificate.build(c, h, [found[i] for i in range(h.n)])


def has_rainbow(c: StarColouring, h: SimpleGraph) -> bool:
    return find_rainbow(c, h) is not None


def _cycle_certificate(c: StarColouring, cyc: Sequence[int]) -> RainbowCertificate:
    return RainbowCertificate.build(c, pattern("C", k=len(cyc)), cyc)


def rainbow_cycle_spectrum(c: StarColouring) -> dict[int, RainbowCertificate]:
    """All lengths of rainbow cycles, each with a certificate."""
    res = {}
    for k in range(3, c.n + 1):
        cert = find_rainbow(c, pattern("C", k=k))
        if cert is not None:
            res[k] = cert
    return res


# --------------------------------------------------------------------------
# Hamilton cycles through oriented stars


def _orient_with_cycle(c: StarColouring, cyc: Sequence[int], extra: int | None) -> Tournament:
    """Orient every class as one star: consistently with ``cyc`` where a class
    meets it, otherwise away from its centre; the lowest class centred at
    ``extra`` (if given) is instead pointed at its centre."""
    n = c.n
    k = len(cyc)
    direction: dict[tuple[int, int], bool] = {}
    for i in range(k):
        a, b = cyc[i], cyc[(i + 1) % k]
        direction[edge(a, b)] = a < b
    centres = c.centres
    inward = None
    if extra is not None:
        for idx, cl in enumerate(c.classes):
            if extra in centres[idx]:
                inward = idx
                break
    out = [0] * n
    for idx, cl in enumerate(c.classes):
        cl_sorted = sorted(cl)
        cyc_edges = [e for e in cl_sorted if e in direction]
        if len(cl) == 1:
            (u, v), = cl_sorted
            if cyc_edges:
                fwd = direction[(u, v)]
            elif idx == inward:
                fwd = v == extra
            else:
                # away from ``extra`` when it is an endpoint
                fwd = v != extra
            if fwd:
                out[u] |= 1 << v
            else:
                out[v] |= 1 << u
            continue
        (centre,) = centres[idx]
        if cyc_edges:
            u, v = cyc_edges[0]
            tail = u if direction[(u, v)] else v
            away = tail == centre
        else:
            away = idx != inward
        for u, v in cl_sorted:
            leaf = v if u == centre else u
            if away:
                out[centre] |= 1 << leaf
            else:
                out[leaf] |= 1 << centre
    return Tournament(n, tuple(out))


def _is_rainbow_cycle(c: StarColouring, cyc: Sequence[int]) -> bool:
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k:
        return False
    cols = [c.colour(cyc[i], cyc[(i + 1) % k]) for i in range(k)]
    return len(set(cols)) == k


class ExtensionError(ValueError):
    pass


def extend_rainbow_cycle(c: StarColouring, v: int,
                         cycle: Sequence[int] | None = None) -> RainbowCertificate:
    """Rainbow Hamilton cycle of ``c`` from one of ``c - v``.

    ``v`` must be a centre of at least two classes.  The cycle of ``c - v``
    is given in host labels or searched for exhaustively.
    """
    n = c.n
    if n < 3:
        raise ExtensionError("need at least 3 vertices")
    if star_counts(c)[v] < 2:
        raise ExtensionError(f"vertex {v} centres fewer than two classes")
    if cycle is None:
        rest = [u for u in range(n) if u != v]
        if len(rest) < 3:
            raise ExtensionError("remainder too small for a cycle")
        cert = find_rainbow(c, pattern("C", k=n - 1), hosts=rest)
        if cert is None:
            raise ExtensionError("remainder has no rainbow Hamilton cycle")
        cycle = list(cert.mapping)
    cycle = list(cycle)
    if v in cycle or len(cycle) != n - 1 or not _is_rainbow_cycle(c, cycle):
        raise ExtensionError("supplied cycle is not a rainbow Hamilton cycle of the remainder")
    t = _orient_with_cycle(c, cycle, v)
    try:
        ham = hamilton_cycle(t)
    except NotStronglyConnected as exc:  # pragma: no cover - contradicts the construction
        raise ExtensionError("orientation is not strong") from exc
    if not _is_rainbow_cycle(c, ham):  # pragma: no cover
        raise ExtensionError("directed Hamilton cycle is not rainbow")
    return _cycle_certificate(c, ham)


def _recoloured_minus(c: StarColouring, v: int, u: int, z: int) -> tuple[StarColouring, list[int]]:
    """Delete ``v`` and give ``uz`` a colour of its own; returns the new
    colouring on 0..n-2 and the map back to host labels."""
    keep = [x for x in range(c.n) if x != v]
    pos = {x: i for i, x in enumerate(keep)}
    uz = edge(u, z)
    classes = []
    for cl in c.classes:
        rest = [e for e in cl if v not in e and e != uz]
        if rest:
            classes.append([edge(pos[a], pos[b]) for a, b in rest])
    classes.append([edge(pos[u], pos[z])])
    return StarColouring.from_classes(c.n - 1, classes), keep


def _hamilton_by_induction(c: StarColouring) -> list[int]:
    """Rainbow Hamilton cycle when every vertex centres at least two classes."""
    n = c.n
    if n < 3 or min(star_counts(c)) < 2:
        raise ExtensionError("some vertex centres fewer than two classes")
    if n == 3:
        return [0, 1, 2]
    for x in range(n):
        sub = c.remove_vertex(x)
        if min(star_counts(sub)) >= 2:
            keep = [y for y in range(n) if y != x]
            inner = _hamilton_by_induction(sub)
            return list(extend_rainbow_cycle(c, x, [keep[i] for i in inner]).mapping)
    totals = star_counts(c)
    singles = {}
    for idx, cl in enumerate(c.classes):
        if len(cl) == 1:
            (a, b), = cl
            singles.setdefault(a, set()).add(b)
            singles.setdefault(b, set()).add(a)
    s1 = [len(singles.get(x, ())) for x in range(n)]
    special = {x for x in range(n) if 1 <= s1[x] <= totals[x] == 2}
    bad = set()
    for a, b, d in itertools.combinations(range(n), 3):
        if b in singles.get(a, ()) and d in singles.get(a, ()) and d in singles.get(b, ()):
            if len({a, b, d} & special) >= 2:
                bad = {a, b, d}
                break
    indeg = [0] * n
    source: dict[int, int] = {}
    for u in special:
        for w in singles.get(u, ()):
            indeg[w] += 1
            source.setdefault(w, u)
    for v in range(n):
        if v in bad or indeg[v] != 1:
            continue
        u = source[v]
        uv_class = c.colour(u, v)
        for idx, cl in enumerate(c.classes):
            if idx == uv_class or v not in c.centres[idx]:
                continue
            for e in sorted(cl):
                z = e[0] if e[1] == v else e[1]
                if z == u or len(c.classes[c.colour(u, z)]) == 1:
                    continue
                sub, keep = _recoloured_minus(c, v, u, z)
                inner = [keep[i] for i in _hamilton_by_induction(sub)]
                k = len(inner)
                for i in range(k):
                    a, b = inner[i], inner[(i + 1) % k]
                    if {a, b} == {u, z}:
                        # route the recoloured edge through v instead
                        return inner[i + 1:] + inner[:i + 1] + [v]
                return list(extend_rainbow_cycle(c, v, inner).mapping)
    raise ExtensionError("no admissible deletion found")


def rainbow_hamilton_cycle(c: StarColouring) -> RainbowCertificate | None:
    """Rainbow Hamilton cycle, constructed when every vertex centres two
    classes and searched for exhaustively otherwise."""
    if c.n < 3:
        return None
    if min(star_counts(c)) >= 2:
        try:
            cyc = _hamilton_by_induction(c)
            if _is_rainbow_cycle(c, cyc) and len(cyc) == c.n:
                return _cycle_certificate(c, cyc)
        except ExtensionError:
            pass
    return find_rainbow(c, pattern("C", k=c.n))


# --------------------------------------------------------------------------
# random colourings and seeded randomness


def derive_rng(seed: int, *labels) -> random.Random:
    """Independent stream for (seed, labels); the same inputs give the same stream."""
    h = hashlib.blake2b(repr((seed,) + labels).encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(h, "big"))


def random_colouring(n: int, rng: random.Random, fresh_bias: float = 0.5) -> StarColouring:
    """Random star-colouring: a random tournament, then a random grouping of
    each out-neighbourhood into classes centred at its vertex.

    Every star-colouring arises this way (take its induced orientation).
    Larger ``fresh_bias`` gives more colours.
    """
    t = Tournament.random(n, rng)
    classes: list[list] = []
    for v in range(n):
        groups: list[list] = []
        nbrs = t.out_neighbours(v)
        rng.shuffle(nbrs)
        for u in nbrs:
            if not groups or rng.random() < fresh_bias:
                groups.append([edge(u, v)])
            else:
                rng.choice(groups).append(edge(u, v))
        classes.extend(groups)
    return StarColouring.from_classes(n, classes)


# --------------------------------------------------------------------------
# dependent random choice and rainbow joins


@dataclass(frozen=True)
class Digraph:
    n: int
    out: tuple[int, ...]

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Digraph":
        out = [0] * n
        for u, v in arcs:
            if u != v:
                out[u] |= 1 << v
        return cls(n, tuple(out))

    def common_out(self, vs: Sequence[int]) -> int:
        m = (1 << self.n) - 1
        for v in vs:
            m &= self.out[v]
        return m

    def common_in(self, vs: Sequence[int]) -> int:
        m = 0
        for u in range(self.n):
            if all(self.out[u] >> v & 1 for v in vs):
                m |= 1 << u
        return m


@dataclass(frozen=True)
class DRCResult:
    success: bool
    vertices: tuple[int, ...]
    attempts: int
    message: str = ""


def _bits(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def drc_property_holds(d: Digraph, vs: Sequence[int], s: int, b: int) -> bool:
    return all(bin(d.common_out(sub)).count("1") >= b for sub in itertools.combinations(vs, s))


def dependent_random_choice(d: Digraph, s: int, a: int, b: int, seed: int,
                            retries: int = JOIN_RETRIES) -> DRCResult:
    """Find ``a`` vertices whose every ``s``-subset has ``b`` common
    out-neighbours, by sampling common in-neighbourhoods."""
    if s < 1 or a < 0:
        raise ValueError("need s >= 1 and a >= 0")
    if d.n == 0:
        return DRCResult(a == 0, (), 0, "" if a == 0 else "empty digraph")
    for attempt in range(1, retries + 1):
        rng = derive_rng(seed, "drc", attempt)
        picks = [rng.randrange(d.n) for _ in range(s)]
        cand = _bits(d.common_in(picks))
        alive = set(cand)
        for sub in itertools.combinations(cand, s):
            if alive.issuperset(sub) and bin(d.common_out(sub)).count("1") < b:
                alive.discard(sub[-1])
        chosen = tuple(sorted(alive)[:a])
        if len(chosen) == a and drc_property_holds(d, chosen, s, b):
            return DRCResult(True, chosen, attempt)
    return DRCResult(False, (), retries, "hypothesis likely unmet")


def centre_digraph(c: StarColouring, rng: random.Random | None = None) -> tuple[Digraph, dict]:
    """One arc per colour, directed out of the class centre.

    Returns the digraph and the map arc -> colour.
    """
    arcs = {}
    for idx, cl in enumerate(c.classes):
        es = sorted(cl)
        e = es[0] if rng is None else rng.choice(es)
        if len(cl) == 1:
            u, v = e
            if rng is not None and rng.random() < 0.5:
                u, v = v, u
        else:
            (cen,) = c.centres[idx]
            u, v = (cen, e[1] if e[0] == cen else e[0])
        arcs[(u, v)] = idx
    return Digraph.from_arcs(c.n, arcs), arcs


_NSAR_CACHE: dict[bytes, int] = {}


def nsar_estimate(t: SimpleGraph) -> int:
    """nsar of a small tree: exact where the oracle reaches, else the upper bound."""
    from .core import graph_canonical_key
    from .oracle import nsar

    key = graph_canonical_key(t)
    if key not in _NSAR_CACHE:
        if t.n <= 4:
            res = nsar(t)
            _NSAR_CACHE[key] = res.value if res.status == "exact" else 2 * (t.n - 1) * (t.n + 2)
        elif t.is_connected() and all(t.degree(v) <= 2 for v in range(t.n)):
            _NSAR_CACHE[key] = t.n  # paths
        else:
            _NSAR_CACHE[key] = 2 * (t.n - 1) * (t.n + 2)
    return _NSAR_CACHE[key]


def _join_certificate(c: StarColouring, t1: SimpleGraph, t2: SimpleGraph,
                      m1: Sequence[int], m2: Sequence[int]) -> RainbowCertificate | None:
    cert = RainbowCertificate.build(c, join(t1, t2), list(m1) + list(m2))
    return cert if cert.is_valid(c) else None


def _join_attempt_k2(c, t2, rng) -> RainbowCertificate | None:
    d, arcs = centre_digraph(c, rng)
    side = [rng.random() < 0.5 for _ in range(c.n)]
    out = [0] * c.n
    for u in range(c.n):
        if side[u]:
            for v in _bits(d.out[u]):
                if not side[v]:
                    out[u] |= 1 << v
    a_side = [u for u in range(c.n) if side[u]]
    for x1, x2 in itertools.combinations(a_side, 2):
        ys = _bits(out[x1] & out[x2])
        if len(ys) < t2.n:
            continue
        bad = c.colour(x1, x2)
        ys = [y for y in ys if c.colour(x1, y) != bad and c.colour(x2, y) != bad]
        cert = find_rainbow(c, t2, hosts=ys)
        if cert is not None:
            res = _join_certificate(c, pattern("K", k=2), t2, [x1, x2], cert.mapping)
            if res is not None:
                return res
    return None


def _join_attempt_drc(c, t1, t2, seed, attempt, a, b) -> RainbowCertificate | None:
    rng = derive_rng(seed, "join-orient", attempt)
    d, _ = centre_digraph(c, rng)
    res = dependent_random_choice(d, t1.n, a, b, derive_rng(seed, "join-drc", attempt).randrange(1 << 30),
                                  retries=1)
    if not res.success:
        return None
    c1 = find_rainbow(c, t1, hosts=res.vertices)
    if c1 is None:
        return None
    xs = list(c1.mapping)
    t1_cols = set(c1.colours)
    ys = [y for y in _bits(d.common_out(xs))
          if all(c.colour(x, y) not in t1_cols for x in xs)]
    c2 = find_rainbow(c, t2, hosts=ys)
    if c2 is None:
        return None
    return _join_certificate(c, t1, t2, xs, c2.mapping)


def find_rainbow_join(c: StarColouring, t1: SimpleGraph, t2: SimpleGraph, seed: int,
                      retries: int = JOIN_RETRIES,
                      nsar_of: Callable[[SimpleGraph], int] = nsar_estimate) -> RainbowCertificate | None:
    """Seeded search for a rainbow ``t1 + t2`` through one-arc-per-colour
    orientations.  A returned certificate is verified; ``None`` proves nothing."""
    if t1.n > t2.n:
        raise ValueError("need v(t1) <= v(t2)")
    if t1.n + t2.n > c.n:
        return None
    if t1.n == 2:
        for attempt in range(retries):
            cert = _join_attempt_k2(c, t2, derive_rng(seed, "join-k2", attempt))
            if cert is not None:
                return cert
        return None
    a = nsar_of(t1)
    b = max(a + 1, nsar_of(t2) + t1.n - 1)
    for attempt in range(retries):
        cert = _join_attempt_drc(c, t1, t2, seed, attempt, a, b)
        if cert is not None:
            return cert
    return None
