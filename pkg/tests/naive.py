"""Slow reference implementations written directly from the definitions.

Nothing here imports the search kernels; only the plain data classes are
shared so that results can be compared.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from starcolour.core import SimpleGraph, StarColouring


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def is_star_class(cl: Iterable[tuple[int, int]]) -> bool:
    """Single edge, or edges sharing one common vertex (which rules out
    triangles and matchings)."""
    es = list(cl)
    if not es:
        return False
    if len(es) == 1:
        return True
    common = set(es[0])
    for e in es[1:]:
        common &= set(e)
    return len(common) == 1


def star_partitions(n: int) -> Iterator[list[list[tuple[int, int]]]]:
    """Every partition of E(K_n) into star classes, by extending set
    partitions one edge at a time and dropping non-star blocks early."""
    es = all_pairs(n)
    blocks: list[list[tuple[int, int]]] = []

    def rec(i: int):
        if i == len(es):
            yield [list(b) for b in blocks]
            return
        e = es[i]
        for b in blocks:
            b.append(e)
            if is_star_class(b):
                yield from rec(i + 1)
            b.pop()
        blocks.append([e])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def colour_matrix(c: StarColouring) -> list[list[int]]:
    m = [[-1] * c.n for _ in range(c.n)]
    for i, cl in enumerate(c.classes):
        for u, v in cl:
            m[u][v] = m[v][u] = i
    return m


def has_rainbow(c: StarColouring, h: SimpleGraph) -> bool:
    """Try every injection V(H) -> V(K_n)."""
    m = colour_matrix(c)
    es = list(h.edges)
    for img in itertools.permutations(range(c.n), h.n):
        cols = [m[img[u]][img[v]] for u, v in es]
        if len(set(cols)) == len(cols):
            return True
    return False


def orbit_key(c: StarColouring) -> tuple:
    """Minimum over all vertex permutations of the relabelled class partition."""
    best = None
    for perm in itertools.permutations(range(c.n)):
        cls = sorted(tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in cl)) for cl in c.classes)
        key = tuple(cls)
        if best is None or key < best:
            best = key
    return best


def naive_arstar(n: int, hs: Sequence[SimpleGraph]) -> int | None:
    best = None
    for part in star_partitions(n):
        c = StarColouring.from_classes(n, part)
        if best is not None and c.num_colours <= best:
            continue
        if not any(has_rainbow(c, h) for h in hs):
            best = c.num_colours
    return best


def naive_nsar(h: SimpleGraph, cap: int = 5) -> int | None:
    for n in range(1, cap + 1):
        if all(has_rainbow(StarColouring.from_classes(n, p), h) for p in star_partitions(n)):
            return n
    return None


def contains_subgraph(n: int, edges: set, h: SimpleGraph) -> bool:
    for img in itertools.permutations(range(n), h.n):
        if all(tuple(sorted((img[u], img[v]))) in edges for u, v in h.edges):
            return True
    return False


def naive_ex(n: int, hs: Sequence[SimpleGraph]) -> int:
    pairs = all_pairs(n)
    best = 0
    for mask in range(1 << len(pairs)):
        es = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if len(es) <= best:
            continue
        if not any(contains_subgraph(n, es, h) for h in hs):
            best = len(es)
    return best


def naive_z(m: int, n: int, s: int, t: int) -> int:
    cells = [(a, b) for a in range(m) for b in range(n)]
    best = 0
    for mask in range(1 << len(cells)):
        es = {cells[i] for i in range(len(cells)) if mask >> i & 1}
        if len(es) <= best:
            continue
        bad = False
        for S in itertools.combinations(range(m), s):
            common = [b for b in range(n) if all((a, b) in es for a in S)]
            if len(common) >= t:
                bad = True
                break
        if not bad:
            best = len(es)
    return best


def is_transitive_arcs(n: int, beats) -> bool:
    return all(not (beats(a, b) and beats(b, c) and beats(c, a))
               for a, b, c in itertools.permutations(range(n), 3))
