import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from starcolour import constructions as cs
from starcolour.core import (
    SimpleGraph,
    StarColouring,
    circumference,
    pattern,
    turan_edges,
    validate_colouring,
)
from starcolour.detect import find_rainbow
from starcolour.oracle import ex_small
from starcolour.tournaments import Tournament, random_ck_free_tournament

from naive import has_rainbow


def _valid(c):
    assert validate_colouring(c).ok, validate_colouring(c).violations
    return c


def test_lexical_examples():
    assert _valid(cs.lexical(2)).classes == (frozenset({(0, 1)}),)
    assert sorted(len(cl) for cl in cs.lexical(5).classes) == [1, 2, 3, 4]
    assert find_rainbow(cs.lexical(6), pattern("C", k=3)) is None


def test_orientable_examples():
    assert _valid(cs.orientable(Tournament.transitive(5))).same_partition(cs.lexical(5))
    cyc = Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert _valid(cs.orientable(cyc)).num_colours == 3
    assert cs.orientable(Tournament.from_arcs(2, [(0, 1)])).num_colours == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6))
def test_orientable_count(n, seed):
    t = Tournament.random(n, random.Random(seed))
    c = _valid(cs.orientable(t))
    sinks = sum(1 for v in range(n) if t.out_degree(v) == 0)
    assert c.num_colours == n - sinks


def test_blowup_examples():
    assert _valid(cs.rainbow_blowup(cs.BlowupSpec.balanced(4, 2))).num_colours == 6
    assert _valid(cs.rainbow_blowup(cs.BlowupSpec.balanced(6, 2))).num_colours == 13
    one = cs.rainbow_blowup(cs.BlowupSpec.balanced(5, 1))
    assert one.same_partition(cs.lexical(5))
    with pytest.raises(ValueError):
        cs.BlowupSpec((1, 3), ())


@pytest.mark.parametrize("n,parts", [(n, p) for n in range(2, 11) for p in range(1, 5) if p <= n])
def test_blowup_count_formula(n, parts):
    c = _valid(cs.rainbow_blowup(cs.BlowupSpec.balanced(n, parts)))
    sizes = cs.BlowupSpec.balanced(n, parts).sizes
    assert c.num_colours == turan_edges(n, parts) + sum(s - 1 for s in sizes if s)


def test_modified_examples():
    lex5 = cs.lexical(5)
    match = SimpleGraph.from_edges(5, [(0, 1), (2, 3)])
    assert _valid(cs.modified(lex5, match)).num_colours == 6
    assert cs.modified(lex5, SimpleGraph.from_edges(5, [])).same_partition(lex5)
    for m in range(1, 5):
        n = 2 * m + 1
        mt = SimpleGraph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(m)])
        assert _valid(cs.modified(cs.lexical(n), mt)).num_colours == 3 * (n - 1) // 2
    with pytest.raises(ValueError):
        cs.ModificationSpec.from_stars([[(0, 1), (0, 2)], [(0, 2)]])


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 8), st.randoms(use_true_random=False))
def test_modified_matches_count_and_commutes(n, rnd):
    """Count identity, idempotence, and order independence for disjoint specs."""
    es = list(itertools.combinations(range(n), 2))
    rnd.shuffle(es)
    a_edges, b_edges = es[: len(es) // 3], es[len(es) // 3: 2 * len(es) // 3]
    a = cs.ModificationSpec.from_graph(SimpleGraph.from_edges(n, a_edges))
    b = cs.ModificationSpec.from_graph(SimpleGraph.from_edges(n, b_edges))
    base = cs.lexical(n)
    ma = _valid(cs.modified(base, a))
    assert ma.num_colours == cs.count_modified(base, a)
    assert cs.modified(ma, a).same_partition(ma)
    assert cs.modified(ma, b).same_partition(cs.modified(cs.modified(base, b), a))


def test_cycle_extremal_examples():
    assert _valid(cs.cycle_extremal(3, 3)).num_colours == 2
    c64 = _valid(cs.cycle_extremal(6, 4))
    assert c64.num_colours == 6 and find_rainbow(c64, pattern("C", k=4)) is None
    assert cs.cycle_extremal(7, 5).num_colours == 9
    bad = Tournament.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    with pytest.raises(ValueError):
        cs.cycle_extremal(7, 4, bad)


@pytest.mark.parametrize("k", range(3, 7))
def test_cycle_extremal_with_random_ck_free_tournaments(k):
    rng = random.Random(k)
    for n in range(k, 9):
        for _ in range(3):
            t = random_ck_free_tournament(n - k + 1, k, rng)
            c = _valid(cs.cycle_extremal(n, k, t))
            assert c.num_colours == n + comb(k - 2, 2) - 1
            assert find_rainbow(c, pattern("C", k=k)) is None


def test_k4_families_examples():
    k4 = pattern("K", k=4)
    assert _valid(cs.k4_extremal_two_part(6, 3)).num_colours == 9
    assert _valid(cs.k4_extremal_two_part(4, 2)).num_colours == 5
    assert find_rainbow(cs.k4_extremal_two_part(7, 4), k4) is None
    assert _valid(cs.k4_extremal_three_part(6, (2, 2, 2))).num_colours == 9
    assert _valid(cs.k4_extremal_three_part(5, (2, 2, 1))).num_colours == 7
    assert find_rainbow(cs.k4_extremal_three_part(7, (3, 2, 2)), k4) is None
    with pytest.raises(ValueError):
        cs.k4_extremal_two_part(6, 1)
    with pytest.raises(ValueError):
        cs.k4_extremal_two_part(6, 6)
    with pytest.raises(ValueError):
        cs.k4_extremal_three_part(5, (3, 2, 0))


def test_k4_families_agree_with_brute_force_detector():
    k4 = pattern("K", k=4)
    assert not has_rainbow(cs.k4_extremal_two_part(6, 3), k4)
    assert not has_rainbow(cs.k4_extremal_three_part(6, (2, 2, 2)), k4)


def test_k4minus_examples():
    assert _valid(cs.k4minus_extremal(9)).num_colours == 12
    c10 = _valid(cs.k4minus_extremal(10, 2, [(2, 3), (2, 4)]))
    assert c10.num_colours == 13
    assert find_rainbow(c10, pattern("K_minus", k=4)) is None
    assert cs.k4minus_extremal(2).num_colours == 1
    with pytest.raises(ValueError):
        cs.k4minus_extremal(10, 5, [(8, 9)])
    with pytest.raises(ValueError):
        cs.k4minus_extremal(10, 2, [(0, 9)])


def test_apex_examples():
    assert _valid(cs.apex_extension(cs.lexical(3))).num_colours == 5
    assert cs.apex_extension(cs.rainbow_complete(3)).same_partition(cs.rainbow_complete(4))
    a = _valid(cs.apex_extension(cs.lexical(4)))
    assert a.num_colours == 7 == 2 * 5 - 3
    assert find_rainbow(a, pattern("K", k=4)) is None


def test_min_degree_examples():
    k4 = pattern("K", k=4)
    assert _valid(cs.min_degree_construction(6, k4)).num_colours == 9
    assert cs.min_degree_construction(4, k4).num_colours == 5
    q3 = _valid(cs.min_degree_construction(8, pattern("Q3")))
    # C(7,2) for the starting clique plus (3-1) colours for the one added vertex
    assert q3.num_colours == 23 == cs.count_min_degree(8, pattern("Q3"))
    with pytest.raises(ValueError):
        cs.min_degree_construction(6, pattern("P", t=3))


def test_clique_blowup_examples():
    assert _valid(cs.clique_blowup_lower(6, 5)).num_colours == 13
    assert _valid(cs.clique_blowup_lower(8, 6)).num_colours == 24
    assert find_rainbow(cs.clique_blowup_lower(7, 5), pattern("K", k=5)) is None
    with pytest.raises(ValueError):
        cs.clique_blowup_lower(6, 4)


def test_girth_modified_k5_minus():
    h = pattern("K_minus", k=5)
    assert circumference(h) == 5
    for n in range(5, 9):
        c = _valid(cs.girth_modified_lower(n, h))
        ex = ex_small(n, cs.short_cycle_family(5)).value
        assert c.num_colours >= ex
        assert find_rainbow(c, h) is None
    with pytest.raises(ValueError):
        cs.girth_modified_lower(6, pattern("K", k=4))


def test_best_lower_bound_is_verified():
    for n in range(4, 8):
        count, name, col = cs.best_lower_bound(n, pattern("K", k=4))
        assert count == 2 * n - 3 and find_rainbow(col, pattern("K", k=4)) is None
