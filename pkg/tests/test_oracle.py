import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from starcolour import constructions as cs
from starcolour import oracle as o
from starcolour.core import (
    CapExceeded,
    SimpleGraph,
    StarColouring,
    canonical_key,
    pattern,
    star_counts,
    validate_colouring,
)
from starcolour.detect import find_rainbow, random_colouring
from starcolour.tournaments import Tournament, find_ck_free_tournament

from naive import (
    has_rainbow,
    naive_arstar,
    naive_ex,
    naive_nsar,
    naive_z,
    orbit_key,
    star_partitions,
)

C3, C4, C5 = (pattern("C", k=k) for k in (3, 4, 5))
K4, K4M = pattern("K", k=4), pattern("K_minus", k=4)


# --------------------------------------------------------------------------
# enumeration


def test_enumeration_small_cases():
    assert o.count_colourings(2) == 1
    assert o.count_colourings(2, canonical_only=True) == 1
    assert o.count_colourings(1) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_labelled_count_matches_partition_count(n):
    assert o.count_colourings(n) == sum(1 for _ in star_partitions(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_count_matches_orbit_collapse(n):
    orbits = {orbit_key(StarColouring.from_classes(n, p)) for p in star_partitions(n)}
    found = list(o.enumerate_star_colourings(n, canonical_only=True))
    assert len(found) == len(orbits)
    assert {orbit_key(c) for c in found} == orbits


def test_labelled_enumeration_has_no_repeats():
    seen = set()
    for c in o.enumerate_star_colourings(4):
        assert validate_colouring(c).ok
        key = frozenset(c.classes)
        assert key not in seen
        seen.add(key)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(o.enumerate_star_colourings(8))


# --------------------------------------------------------------------------
# ar*


def test_arstar_examples():
    assert o.star_anti_ramsey(4, C3).value == 3
    assert o.star_anti_ramsey(5, K4).value == 7
    assert o.star_anti_ramsey(5, K4M).value == 6


@pytest.mark.parametrize("h", [C3, C4, K4, K4M, pattern("K_st", s=2, t=3), pattern("K", k=5)])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_arstar_matches_naive(h, n):
    assert o.star_anti_ramsey(n, h).value == naive_arstar(n, [h])


def test_arstar_rejects_forests_and_caps():
    with pytest.raises(o.PatternError):
        o.star_anti_ramsey(5, pattern("P", t=3))
    with pytest.raises(CapExceeded):
        o.star_anti_ramsey(8, K4)


@pytest.mark.parametrize("n,h", [(5, K4), (6, C4), (6, K4M), (5, C5)])
def test_witnesses_are_extremal_and_rainbow_free(n, h):
    res = o.star_anti_ramsey(n, h)
    assert res.status == "exact" and res.witnesses
    keys = set()
    for w in res.witnesses:
        c = w.colouring
        assert validate_colouring(c).ok
        assert c.num_colours == res.value
        assert find_rainbow(c, h) is None
        assert canonical_key(c) == w.key
        keys.add(w.key)
    assert len(keys) == len(res.witnesses)


@pytest.mark.parametrize("n,h", [(n, h) for n in range(4, 7) for h in (C3, C4, K4, K4M)])
def test_construction_sandwich(n, h):
    lb = cs.best_lower_bound(n, h)
    assert lb is not None and lb[0] <= o.star_anti_ramsey(n, h).value


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("h", [C3, C4, K4, K4M])
def test_edge_order_search_pruning_is_sound(n, h):
    pruned = o.star_anti_ramsey_bnb(n, h, prune=True)
    full = o.star_anti_ramsey_bnb(n, h, prune=False)
    assert pruned == full == o.star_anti_ramsey(n, h).value


@pytest.mark.parametrize("h", [C3, C4, K4, K4M])
def test_edge_order_search_agrees_at_five(h):
    assert o.star_anti_ramsey_bnb(5, h) == o.star_anti_ramsey(5, h).value


def test_thread_count_does_not_change_results():
    one = o.star_anti_ramsey(6, K4, threads=1)
    four = o.star_anti_ramsey(6, K4, threads=4)
    assert one.value == four.value
    assert [w.key for w in one.witnesses] == [w.key for w in four.witnesses]
    assert one.to_json(timing=False)["witnesses"] == four.to_json(timing=False)["witnesses"]


def test_level_thresholds():
    # 9 -> 9 - 3 = 6 -> 6 - 2 = 4 -> 4 - 2 = 2 -> 2 - 1 = 1 -> 1 - 1 = 0
    assert o.level_thresholds(6, 9) == [0, 0, 1, 2, 4, 6, 9]
    ts = o.level_thresholds(7, 12)
    for m in range(2, 8):
        assert ts[m - 1] == ts[m] - (2 * ts[m]) // m


# --------------------------------------------------------------------------
# families, nsar, extremal colourings


def test_family_examples():
    jk4 = o.removal_family(K4)
    assert len(jk4) == 1 and jk4[0].e == 3
    assert o.star_anti_ramsey_family(4, jk4).value == 3
    assert o.star_anti_ramsey_family(5, jk4).value == 4
    single = o.star_anti_ramsey_family(4, [pattern("K", k=2)])
    assert single.status == "nonexistent" and single.value is None


@pytest.mark.parametrize("h", [K4, K4M, C4])
@pytest.mark.parametrize("n", [4, 5])
def test_vertex_addition_inequality(h, n):
    fam = o.removal_family(h)
    lower = o.star_anti_ramsey_family(n - 1, fam)
    if lower.value is not None:
        assert o.star_anti_ramsey(n, h).value >= n - 1 + lower.value


def test_family_matches_naive():
    fam = [C3, C4]
    for n in (4, 5):
        assert o.star_anti_ramsey_family(n, fam).value == naive_arstar(n, fam)


def test_nsar_examples():
    assert o.nsar(pattern("P", t=1)).value == 2
    assert o.nsar(pattern("P", t=2)).value == 3
    assert o.nsar(pattern("P", t=3)).value == 4
    k13 = o.nsar(pattern("star", t=3))
    assert 4 <= k13.value <= 36
    with pytest.raises(o.PatternError):
        o.nsar(C4)


@pytest.mark.parametrize("h", [pattern("P", t=1), pattern("P", t=2), pattern("P", t=3),
                               pattern("star", t=3), pattern("M2"), pattern("star", t=2)])
def test_nsar_matches_naive(h):
    assert o.nsar(h).value == naive_nsar(h)


def test_nsar_levels_are_nonempty_below_the_value():
    res = o.nsar(pattern("P", t=4))
    assert res.value == 5
    assert all(s > 0 for s in res.stats.level_sizes[:-1]) and res.stats.level_sizes[-1] == 0
    for w in res.witnesses:
        assert not has_rainbow(w.colouring, pattern("P", t=4))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10**9), st.sampled_from([pattern("P", t=2), pattern("star", t=3), C4]))
def test_rainbow_freeness_is_hereditary(n, seed, h):
    """Deleting a vertex never creates a rainbow copy; this is why each
    level of the search only has to extend rainbow-free colourings."""
    c = random_colouring(n, random.Random(seed), fresh_bias=0.2)
    if find_rainbow(c, h) is None:
        for v in range(n):
            assert find_rainbow(c.remove_vertex(v), h) is None


def test_extremal_colourings_examples():
    ext = o.extremal_colourings(5, C3)
    assert len(ext) == 1 and o.is_lexical(ext[0])
    k4 = o.extremal_colourings(5, K4)
    keys = {canonical_key(c) for c in k4}
    assert len(keys) >= 2
    assert canonical_key(cs.k4_extremal_two_part(5, 2)) in keys
    assert canonical_key(cs.k4_extremal_three_part(5, (2, 2, 1))) in keys
    assert all(o.check_structure_k4minus(c) for c in o.extremal_colourings(5, K4M))


@pytest.mark.parametrize("h,f", [(C3, pattern("P", t=1)), (C4, pattern("P", t=2)),
                                 (K4M, pattern("P", t=2)), (C5, pattern("P", t=3))])
def test_star_plus_forest_bound(h, f):
    a = o.nsar(f).value
    for n in range(h.n, 7):
        v = o.star_anti_ramsey(n, h).value
        assert n - 1 <= v <= (a - 1) * n


@pytest.mark.parametrize("h", [pattern("K_minus", k=5), pattern("K", k=5)])
def test_edge_arboricity_three_lower_bound(h):
    for n in (5, 6):
        assert o.star_anti_ramsey(n, h).value >= cs.girth_modified_lower(n, h).num_colours


# --------------------------------------------------------------------------
# ex and z


def test_ex_examples():
    assert o.ex_small(5, [C3]).value == 6
    assert o.ex_small(5, cs.short_cycle_family(5)).value == 4
    assert o.ex_small(6, cs.short_cycle_family(5)).value == 6
    with pytest.raises(CapExceeded):
        o.ex_small(11, [C3])
    with pytest.raises(o.PatternError):
        o.ex_small(5, [SimpleGraph.from_edges(3, [(0, 1)])])


@pytest.mark.parametrize("fam", [[C3], [C4], [pattern("K_st", s=2, t=3)], [C3, C4], [pattern("P", t=3)], [K4]])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_ex_matches_naive(fam, n):
    res = o.ex_small(n, fam)
    assert res.value == naive_ex(n, fam)
    for w in res.witnesses:
        assert w.graph.e == res.value
        assert not any(o.contains_subgraph(w.graph, h) for h in fam)


def test_ex_sandwich_with_z():
    for n in range(2, 7):
        for s, t in ((2, 2), (2, 3)):
            ex = o.ex_small(n, [pattern("K_st", s=s, t=t)]).value
            z = o.zarankiewicz_small(n, n, s, t).value
            assert 2 * ex <= z <= 4 * ex


def test_z_examples():
    assert o.zarankiewicz_small(2, 2, 2, 2).value == 3
    with pytest.raises(CapExceeded):
        o.zarankiewicz_small(8, 3, 2, 2)


@pytest.mark.parametrize("m,n,s,t", [(3, 3, 2, 2), (3, 4, 2, 2), (4, 3, 2, 2), (4, 4, 2, 3), (3, 4, 3, 2),
                                     (4, 4, 2, 2), (2, 5, 2, 3), (3, 3, 1, 2)])
def test_z_matches_naive(m, n, s, t):
    res = o.zarankiewicz_small(m, n, s, t)
    assert res.value == naive_z(m, n, s, t)
    assert res.witnesses[0].graph.e == res.value


# --------------------------------------------------------------------------
# red/blue forests


def test_redblue_examples():
    p2, p3, s3 = pattern("P", t=2), pattern("P", t=3), pattern("star", t=3)
    assert o.check_redblue(p2, p2).holds
    assert o.check_redblue(p2, s3).holds
    with pytest.raises(o.PreconditionError):
        o.check_redblue(pattern("P", t=1), p2)
    with pytest.raises(o.PreconditionError):
        o.check_redblue(C3, p3)


def test_redblue_exhaustive_agrees_with_spanning_trees():
    p2 = pattern("P", t=2)
    a = o.check_redblue(p2, p2, maximal_only=True)
    b = o.check_redblue(p2, p2, maximal_only=False)
    assert a.holds == b.holds
    assert b.forests_checked > a.forests_checked


def test_kst_minus_detector():
    full = [0] * 6
    for u in range(3):
        for v in range(3, 6):
            full[u] |= 1 << v
            full[v] |= 1 << u
    assert o._has_kst_minus(6, full, 3, 3)
    one_missing = list(full)
    one_missing[0] &= ~(1 << 3)
    one_missing[3] &= ~(1 << 0)
    assert o._has_kst_minus(6, one_missing, 3, 3)
    two_missing = list(one_missing)
    two_missing[1] &= ~(1 << 4)
    two_missing[4] &= ~(1 << 1)
    assert not o._has_kst_minus(6, two_missing, 3, 3)


# --------------------------------------------------------------------------
# structure checkers


def test_structure_ck_examples():
    assert o.check_structure_ck(cs.cycle_extremal(7, 4), 4)
    assert o.check_structure_ck(cs.lexical(7), 3)
    assert not o.check_structure_ck(cs.rainbow_complete(5), 4)
    t = find_ck_free_tournament(4, 4, nontrivial=True)
    assert o.check_structure_ck(cs.cycle_extremal(7, 4, t), 4)


def test_structure_k4minus_examples():
    assert o.check_structure_k4minus(cs.k4minus_extremal(9))
    assert o.check_structure_k4minus(cs.k4minus_extremal(10, 2, [(2, 3), (2, 4)]))
    assert not o.check_structure_k4minus(cs.lexical(9))


@pytest.mark.parametrize("n", range(2, 11))
def test_k4minus_variants_are_valid_and_free(n):
    for c in o.k4minus_variants(n):
        assert validate_colouring(c).ok
        assert c.num_colours == 3 * (n - 1) // 2
        if n <= 8:
            assert find_rainbow(c, K4M) is None


@pytest.mark.parametrize("n", range(2, 8))
def test_lexical_recognition(n):
    assert o.is_lexical(cs.lexical(n).relabel(list(reversed(range(n)))))
    assert not o.is_lexical(cs.rainbow_complete(n)) or n == 2


# --------------------------------------------------------------------------
# tuples


def _naive_predicates(c, W, Y, Z, x, vs, cz):
    """Literal re-reading of the tuple conditions, written without sharing code."""
    n = c.n
    col = lambda a, b: c.colour(a, b)
    inside = lambda S: {col(a, b) for a in S for b in S if a < b}
    in_range = all(0 <= u < n for u in W | Y | Z | {x, vs}) and 0 <= cz < c.num_colours
    if not in_range:
        return [False] * 7
    p1 = cz in set(range(c.num_colours))
    p2 = (W | Y | Z == set(range(n)) and len(W) >= 1 and len(Y) >= 2 and len(Z) >= 2
          and len(W) + len(Y) + len(Z) == n + 2)
    p3 = inside(Y | Z) == inside(Y) | inside(Z) | {cz}
    p4 = True
    for y in Y - {x}:
        for z in Z - {vs}:
            others = [u for u in {y, z} | W if u != x]
            cols = [col(x, u) for u in others]
            p4 &= len(cols) == len(set(cols))
    p5 = (x in W and x in Y and x not in Z and vs in Y and vs in Z and vs not in W
          and all(sum(u in S for S in (W, Y, Z)) == 1 for u in range(n) if u not in (x, vs)))
    cen = c.centres
    p6 = all(u != vs and u in cen[col(vs, u)] for u in (Z - {vs}) | {x})
    p7 = all(z != x and col(x, z) == cz and x in cen[col(x, z)] for z in Z - {vs})
    return [p1, p2, p3, p4, p5, p6, p7]


def test_initial_great_tuple_on_two_part_family():
    c = cs.k4_extremal_two_part(6, 3)
    xs = [v for v, k in enumerate(star_counts(c)) if k >= 3]
    assert xs
    p = o.initial_great_tuple(c, xs[0])
    res = o.check_tuple(c, p)
    assert res["good"] and res["great"]


def test_hand_built_great_tuple():
    c = cs.k4_extremal_two_part(6, 3)
    # x = 2 centres three classes; leaves of its stars are {3}, {4}, {5}
    p = o.TupleP.make(W=[0, 2], Y=[2, 3, 4, 5], Z=[1, 3], x=2, v_star=3, c_Z=c.colour(2, 1))
    res = o.check_tuple(c, p)
    assert [res[f"P{i}"] for i in range(1, 8)] == _naive_predicates(c, {0, 2}, {2, 3, 4, 5}, {1, 3}, 2, 3,
                                                                      c.colour(2, 1))


def test_malformed_tuple_fails_everything():
    c = cs.lexical(5)
    p = o.TupleP.make(W=[], Y=[], Z=[], x=9, v_star=9, c_Z=99)
    res = o.check_tuple(c, p)
    assert not any(res.values())


@settings(max_examples=200, deadline=None)
@given(st.integers(4, 7), st.integers(0, 10**9), st.randoms(use_true_random=False))
def test_tuple_predicates_match_naive(n, seed, rnd):
    c = random_colouring(n, random.Random(seed))
    memb = [rnd.choice([1, 2, 4, 3, 5, 6, 7]) for _ in range(n)]
    W = {v for v in range(n) if memb[v] & 1}
    Y = {v for v in range(n) if memb[v] & 2}
    Z = {v for v in range(n) if memb[v] & 4}
    x, vs = rnd.randrange(n), rnd.randrange(n)
    cz = rnd.randrange(c.num_colours)
    res = o.check_tuple(c, o.TupleP.make(W, Y, Z, x, vs, cz))
    assert [res[f"P{i}"] for i in range(1, 8)] == _naive_predicates(c, W, Y, Z, x, vs, cz)
    assert res["good"] == all(res[f"P{i}"] for i in range(1, 5))
    assert res["great"] == (res["good"] and all(res[f"P{i}"] for i in range(5, 8)))
    if res["restricted"]:
        assert res["great"]


def test_find_covering_tuple_examples():
    c = cs.k4_extremal_two_part(6, 3)
    p = o.find_covering_tuple(c)
    assert p is not None
    res = o.check_tuple(c, p)
    assert res["good"] and res["covers"]
    three = cs.k4_extremal_three_part(6, (2, 2, 2))
    if max(star_counts(three)) >= 3:
        assert o.find_covering_tuple(three) is not None
    else:
        with pytest.raises(o.PreconditionError):
            o.find_covering_tuple(three)
    with pytest.raises(o.PreconditionError):
        o.find_covering_tuple(cs.rainbow_complete(5))


def test_find_covering_tuple_sweep_n4():
    count = 0
    for c in o.enumerate_star_colourings(4, canonical_only=True):
        if find_rainbow(c, K4) is None and max(star_counts(c)) >= 3:
            count += 1
            p = o.find_covering_tuple(c)
            assert p is not None and o.check_tuple(c, p)["covers"]
    assert count >= 1


# --------------------------------------------------------------------------
# result serialisation


def test_result_json_shape():
    res = o.star_anti_ramsey(4, C4)
    d = res.to_json()
    assert set(d) == {"quantity", "params", "value", "status", "witnesses", "stats"}
    assert "wall_time" in d["stats"] and "wall_time" not in res.to_json(timing=False)["stats"]
    assert d["witnesses"][0]["key"] == res.witnesses[0].key.hex()


def test_cyclic_tournament_gives_a_second_c4_extremal_class():
    keys = {canonical_key(c) for c in o.extremal_colourings(6, C4)}
    cyc = Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    transitive = canonical_key(cs.cycle_extremal(6, 4))
    cyclic = canonical_key(cs.cycle_extremal(6, 4, cyc))
    assert keys == {transitive, cyclic} and transitive != cyclic
    assert len(o.extremal_colourings(5, C4)) == 1
