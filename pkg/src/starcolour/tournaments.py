"""Tournaments: strong components, Hamilton paths, cycles of every length.

Arcs are stored as out-neighbour bitmasks; ``t.out[u] >> v & 1`` means u -> v.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence


class NotStronglyConnected(ValueError):
    pass


@dataclass(frozen=True)
class Tournament:
    n: int
    out: tuple[int, ...]

    def __post_init__(self):
        if len(self.out) != self.n:
            raise ValueError("need one out-mask per vertex")
        for u in range(self.n):
            if self.out[u] >> u & 1:
                raise ValueError(f"loop at {u}")
            for v in range(u + 1, self.n):
                a, b = self.out[u] >> v & 1, self.out[v] >> u & 1
                if a == b:
                    raise ValueError(f"pair {u},{v} must carry exactly one arc")

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Tournament":
        out = [0] * n
        for u, v in arcs:
            out[u] |= 1 << v
        return cls(n, tuple(out))

    @classmethod
    def transitive(cls, n: int, order: Sequence[int] | None = None) -> "Tournament":
        order = list(range(n)) if order is None else list(order)
        out = [0] * n
        for i, u in enumerate(order):
            for v in order[i + 1:]:
                out[u] |= 1 << v
        return cls(n, tuple(out))

    @classmethod
    def from_bits(cls, n: int, bits: str) -> "Tournament":
        """Upper-triangular row-major bit string; '1' at pair (i, j), i < j, means i -> j."""
        pairs = list(itertools.combinations(range(n), 2))
        if len(bits) != len(pairs):
            raise ValueError(f"expected {len(pairs)} bits, got {len(bits)}")
        out = [0] * n
        for (i, j), b in zip(pairs, bits):
            if b == "1":
                out[i] |= 1 << j
            elif b == "0":
                out[j] |= 1 << i
            else:
                raise ValueError(f"bad bit {b!r}")
        return cls(n, tuple(out))

    def to_bits(self) -> str:
        return "".join("1" if self.beats(i, j) else "0"
                       for i, j in itertools.combinations(range(self.n), 2))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Tournament":
        out = [0] * n
        for i, j in itertools.combinations(range(n), 2):
            if rng.random() < 0.5:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        return cls(n, tuple(out))

    def beats(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def out_neighbours(self, u: int) -> list[int]:
        m = self.out[u]
        return [v for v in range(self.n) if m >> v & 1]

    def in_neighbours(self, u: int) -> list[int]:
        return [v for v in range(self.n) if self.out[v] >> u & 1]

    def out_degree(self, u: int) -> int:
        return bin(self.out[u]).count("1")

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out_neighbours(u)]

    def induced(self, vertices: Sequence[int]) -> "Tournament":
        vs = list(vertices)
        out = [0] * len(vs)
        for i, u in enumerate(vs):
            for j, v in enumerate(vs):
                if i != j and self.beats(u, v):
                    out[i] |= 1 << j
        return Tournament(len(vs), tuple(out))

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs()]}

    @classmethod
    def from_json(cls, d: dict) -> "Tournament":
        return cls.from_arcs(d["n"], [tuple(a) for a in d["arcs"]])


def all_tournaments(n: int) -> Iterator[Tournament]:
    m = n * (n - 1) // 2
    for x in range(1 << m):
        yield Tournament.from_bits(n, format(x, f"0{m}b") if m else "")


def strong_components(t: Tournament) -> list[list[int]]:
    """Strong components in condensation order: every arc between two
    components goes from the earlier to the later one."""
    n = t.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, iter(t.out_neighbours(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(t.out_neighbours(w))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    # Tarjan emits sinks first
    comps.reverse()
    return comps


def is_strong(t: Tournament) -> bool:
    return len(strong_components(t)) == 1


def redei_hamilton_path(t: Tournament) -> list[int]:
    """Directed Hamilton path by insertion."""
    path: list[int] = []
    for v in range(t.n):
        if not path or t.beats(v, path[0]):
            path.insert(0, v)
        elif t.beats(path[-1], v):
            path.append(v)
        else:
            # path[0] -> v and v -> path[-1]: some consecutive pair switches
            for i in range(len(path) - 1):
                if t.beats(path[i], v) and t.beats(v, path[i + 1]):
                    path.insert(i + 1, v)
                    break
    return path


def is_directed_cycle(t: Tournament, cyc: Sequence[int]) -> bool:
    k = len(cyc)
    return k >= 3 and len(set(cyc)) == k and all(t.beats(cyc[i], cyc[(i + 1) % k]) for i in range(k))


def _some_triangle(t: Tournament, vertices: Sequence[int]) -> list[int] | None:
    for a, b, c in itertools.combinations(vertices, 3):
        if t.beats(a, b) and t.beats(b, c) and t.beats(c, a):
            return [a, b, c]
        if t.beats(a, c) and t.beats(c, b) and t.beats(b, a):
            return [a, c, b]
    return None


def _extend_cycle(t: Tournament, cyc: list[int], pool: Sequence[int]) -> list[int]:
    """Lengthen a directed cycle by one vertex inside a strong vertex set."""
    k = len(cyc)
    on = set(cyc)
    outside = [v for v in pool if v not in on]
    for v in outside:
        for i in range(k):
            a, b = cyc[i], cyc[(i + 1) % k]
            if t.beats(a, v) and t.beats(v, b):
                return cyc[:i + 1] + [v] + cyc[i + 1:]
    # every outside vertex now dominates or is dominated by the whole cycle
    dominated = [v for v in outside if t.beats(cyc[0], v)]
    dominating = [v for v in outside if t.beats(v, cyc[0])]
    for s in dominated:
        for d in dominating:
            if t.beats(s, d):
                return [cyc[0], s, d] + cyc[2:]
    raise NotStronglyConnected("vertex set is not strongly connected")


def moon_cycles(t: Tournament, vertices: Sequence[int] | None = None) -> dict[int, list[int]]:
    """One directed cycle of every length 3..n of a strong tournament."""
    pool = list(range(t.n)) if vertices is None else list(vertices)
    if len(pool) < 3:
        raise ValueError("need at least 3 vertices")
    if not is_strong(t.induced(pool)):
        raise NotStronglyConnected("tournament is not strongly connected")
    cyc = _some_triangle(t, pool)
    assert cyc is not None
    res = {3: cyc}
    while len(cyc) < len(pool):
        cyc = _extend_cycle(t, cyc, pool)
        res[len(cyc)] = cyc
    return res


def hamilton_cycle(t: Tournament) -> list[int]:
    return moon_cycles(t)[t.n]


def is_ck_free(t: Tournament, k: int) -> tuple[bool, list[int] | None]:
    """True iff no directed cycle of length exactly k; otherwise a witness."""
    if k < 3:
        raise ValueError("k must be at least 3")
    n = t.n
    for s in range(n):
        # the cycle's minimum vertex is s
        path = [s]
        used = 1 << s

        def dfs(v: int, used: int) -> bool:
            if len(path) == k:
                return t.beats(v, s)
            m = t.out[v] & ~used
            w = s + 1
            m >>= w
            while m:
                if m & 1:
                    path.append(w)
                    if dfs(w, used | 1 << w):
                        return True
                    path.pop()
                m >>= 1
                w += 1
            return False

        if dfs(s, used):
            return False, list(path)
    return True, None


def all_ck_free_tournaments(n: int, k: int) -> Iterator[Tournament]:
    for t in all_tournaments(n):
        if is_ck_free(t, k)[0]:
            yield t


def random_ck_free_tournament(n: int, k: int, rng: random.Random) -> Tournament:
    """Blocks of fewer than k vertices, arbitrary inside, forward between.

    Every cycle of a tournament lies inside one strong component, so the
    result has no directed cycle of length k.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    perm = list(range(n))
    rng.shuffle(perm)
    blocks = []
    i = 0
    while i < n:
        size = rng.randint(1, min(k - 1, n - i))
        blocks.append(perm[i:i + size])
        i += size
    out = [0] * n
    for bi, block in enumerate(blocks):
        for a, b in itertools.combinations(block, 2):
            if rng.random() < 0.5:
                out[a] |= 1 << b
            else:
                out[b] |= 1 << a
        for later in blocks[bi + 1:]:
            for a in block:
                for b in later:
                    out[a] |= 1 << b
    return Tournament(n, tuple(out))


def find_ck_free_tournament(n: int, k: int, nontrivial: bool = False) -> Tournament:
    """A C_k-free tournament; with ``nontrivial`` one that still has a directed cycle."""
    if n < 1 or k < 3:
        raise ValueError("need n >= 1 and k >= 3")
    if not nontrivial:
        return Tournament.transitive(n)
    if k == 3 or n < 3:
        raise ValueError("no C_k-free tournament with a directed cycle exists here "
                         "(every cyclic tournament contains a directed triangle)")
    # directed triangle on 0,1,2 followed by a transitive tail
    arcs = [(0, 1), (1, 2), (2, 0)]
    arcs += [(u, v) for u in range(n) for v in range(max(u + 1, 3), n)]
    t = Tournament.from_arcs(n, arcs)
    assert is_ck_free(t, k)[0]
    return t
