"""Deficiency function, barrier scans, and barrier structure checks."""

import random

import pytest

from bergefactor import (
    BipartiteGraph,
    BudgetExceededError,
    DegreeSpec,
    FactorExistsError,
    check_barrier_structure,
    classify_component,
    decide_by_criterion,
    deficiency_scan,
    delta,
    find_biased_barrier,
    h_of_z,
    incidence_graph,
)
from bergefactor.families import cycle, star

import oracles


def _random_bipartite(rng, nx_hi=4, ny_hi=4):
    ny = rng.randint(1, ny_hi)
    nx = rng.randint(0, nx_hi)
    rows = []
    for _ in range(nx):
        size = rng.randint(0, ny)
        rows.append(tuple(sorted(rng.sample(range(ny), size))))
    return BipartiteGraph(nx, ny, rows)


def test_degree_spec_bounds():
    assert DegreeSpec(1).k == 1
    assert DegreeSpec(8).k == 8
    for bad in (0, -1, 9):
        with pytest.raises(ValueError):
            DegreeSpec(bad)


# ------------------------------------------------------------ deficiency


def test_delta_worked_example():
    # hub-and-leaves incidence graph (star on three leaves): A = {hub
    # vertex y0}, B = the three leaf vertices, k = 1.  Then f(A) = 1,
    # g(B) = 3, each leaf keeps its one X-neighbor after removing A,
    # and the three X-vertices are left as odd isolated components:
    # delta = 1 - 3 + 3 - 3 = -2.
    g = incidence_graph(star(3))
    rec = delta(g, [3], [4, 5, 6], DegreeSpec(1))
    assert rec.delta == -2
    assert rec.hw == 3


def test_delta_matches_oracle_random():
    rng = random.Random(23)
    spec_pool = [DegreeSpec(1), DegreeSpec(2), DegreeSpec(3)]
    for _ in range(60):
        g = _random_bipartite(rng)
        n = g.x_count + g.y_count
        spec = rng.choice(spec_pool)
        labels = [rng.randint(0, 2) for _ in range(n)]
        a = [v for v in range(n) if labels[v] == 1]
        b = [v for v in range(n) if labels[v] == 2]
        rec = delta(g, a, b, spec)
        want, flags, hw = oracles.delta_naive(
            g.x_count, g.y_count, g.neighbors, spec.k, a, b)
        assert rec.delta == want
        assert rec.hw == hw
        assert {c.vertices for c in rec.components} == {c for c, _ in flags}
        assert {c.vertices: c.odd for c in rec.components} == dict(flags)


def test_delta_rejects_overlap_and_range():
    g = incidence_graph(cycle(4))
    spec = DegreeSpec(1)
    with pytest.raises(ValueError):
        delta(g, [0], [0], spec)
    with pytest.raises(ValueError):
        delta(g, [99], [], spec)


def test_delta_star_barrier_value():
    # star on three leaves, k = 1: deleting the hub vertex y0 (global 3)
    # splits the graph into three edge-leaf pairs, each odd, so
    # delta = 1 - 3 = -2
    g = incidence_graph(star(3))
    rec = delta(g, [3], [], DegreeSpec(1))
    assert rec.delta == -2
    assert rec.hw == 3
    assert rec.is_barrier


def test_classify_component():
    g = incidence_graph(star(3))
    spec = DegreeSpec(1)
    assert classify_component(g, [3], [], spec, [0, 4]) == "odd"
    with pytest.raises(ValueError, match="not a component"):
        classify_component(g, [3], [], spec, [0, 5])


def test_classify_component_even():
    g = incidence_graph(cycle(4))  # 4 edges, 4 vertices, k = 2
    spec = DegreeSpec(2)
    comp = sorted(range(8))
    assert classify_component(g, [], [], spec, comp) == "even"


# ------------------------------------------------------------------ scan


def test_scan_matches_full_pair_space():
    """The optimized scan (B restricted to Y) must agree with a naive
    sweep of every disjoint pair over the whole vertex set, including
    the biased tie-break."""
    rng = random.Random(29)
    for _ in range(25):
        g = _random_bipartite(rng, nx_hi=3, ny_hi=3)
        for k in (1, 2):
            spec = DegreeSpec(k)
            got = deficiency_scan(g, spec)
            want_min, want_pair, saw_odd = oracles.scan_all_pairs(
                g.x_count, g.y_count, g.neighbors, k)
            assert got.min_delta == want_min
            assert (got.best_a, got.best_b) == want_pair
            if k * g.y_count % 2 == 0:
                assert not saw_odd
                assert got.stats.odd_deltas == 0
                assert got.stats.parity_checked


def test_scan_star_frozen_values():
    g = incidence_graph(star(3))
    res = deficiency_scan(g, DegreeSpec(1))
    assert res.min_delta == -2
    assert (res.best_a, res.best_b) == ((3,), ())
    assert res.stats.evaluated == 648  # 2^3 * 3^4 pairs with B inside Y
    assert res.stats.odd_deltas == 0


def test_scan_even_parity_exhaustive():
    """No odd deficiency ever appears when k * |Y| is even: checked over
    every bipartite graph with |X| + |Y| <= 5."""
    from bergefactor.harness import enumerate_bipartite_graphs

    for g in enumerate_bipartite_graphs(5):
        for k in (1, 2):
            if k * g.y_count % 2:
                continue
            res = deficiency_scan(g, DegreeSpec(k))
            assert res.stats.odd_deltas == 0, (g, k)


def test_scan_budget():
    g = BipartiteGraph(10, 10, [tuple(range(10))] * 10)
    with pytest.raises(BudgetExceededError):
        deficiency_scan(g, DegreeSpec(1), budget=19)


# ---------------------------------------------------------------- decide


def test_decide_exists_when_min_delta_nonnegative():
    g = incidence_graph(cycle(5))
    res = decide_by_criterion(g, DegreeSpec(2))
    assert res.exists
    assert res.barrier is None
    assert res.stats.evaluated > 0


def test_decide_returns_first_barrier_in_ternary_order():
    rng = random.Random(31)
    found_any = 0
    for _ in range(40):
        g = _random_bipartite(rng, nx_hi=3, ny_hi=3)
        k = rng.choice((1, 2))
        res = decide_by_criterion(g, DegreeSpec(k))
        want = oracles.first_barrier_ternary(
            g.x_count, g.y_count, g.neighbors, k)
        if want is None:
            assert res.exists
        else:
            found_any += 1
            a, b, val = want
            assert not res.exists
            assert (res.barrier.a, res.barrier.b) == (a, b)
            assert res.barrier.delta == val
    assert found_any > 3  # the sample must actually exercise barriers


def test_decide_star_first_barrier():
    # in base-3 counting order the hub vertex (global 3) is the first
    # assignment whose deficiency goes negative
    g = incidence_graph(star(3))
    res = decide_by_criterion(g, DegreeSpec(1))
    assert not res.exists
    assert (res.barrier.a, res.barrier.b) == ((3,), ())
    assert res.barrier.delta == -2


# ---------------------------------------------------------------- biased


def test_biased_barrier_star():
    g = incidence_graph(star(3))
    br = find_biased_barrier(g, DegreeSpec(1))
    assert br.delta == -2
    assert (br.a, br.b) == ((3,), ())
    assert br.hw == 3
    assert all(c.odd for c in br.components)
    assert [c.vertices for c in br.components] == [(0, 4), (1, 5), (2, 6)]


def test_biased_barrier_raises_when_factor_exists():
    g = incidence_graph(cycle(5))
    with pytest.raises(FactorExistsError):
        find_biased_barrier(g, DegreeSpec(2))


def test_biased_barrier_matches_oracle_key():
    rng = random.Random(37)
    hits = 0
    for _ in range(30):
        g = _random_bipartite(rng, nx_hi=3, ny_hi=3)
        k = rng.choice((1, 2))
        want_min, want_pair, _ = oracles.scan_all_pairs(
            g.x_count, g.y_count, g.neighbors, k)
        if want_min >= 0:
            continue
        hits += 1
        br = find_biased_barrier(g, DegreeSpec(k))
        assert br.delta == want_min
        assert (br.a, br.b) == want_pair
    assert hits > 3


# ------------------------------------------------------------- h measure


def test_h_of_z_synthetic():
    # x0 ~ {y0, y1, y2}, x1 ~ {y4, y5} on 8 Y-vertices, k = 1,
    # A = {x0}, B = {y0}: N(Z) = {y0, y1, y2} hits B once and two odd
    # singleton components, so h(Z) = 3
    g = BipartiteGraph(2, 8, [(0, 1, 2), (4, 5)])
    spec = DegreeSpec(1)
    br = delta(g, [0], [2], spec)
    assert br.delta == -4
    assert h_of_z(g, br, [0]) == 3


def test_h_of_z_validates_z():
    g = BipartiteGraph(2, 8, [(0, 1, 2), (4, 5)])
    br = delta(g, [0], [2], DegreeSpec(1))
    with pytest.raises(ValueError, match="subset of A"):
        h_of_z(g, br, [1])  # x1 is not in A
    with pytest.raises(ValueError, match="subset of A"):
        h_of_z(g, br, [2])  # a Y-vertex


# -------------------------------------------------------------- structure


def test_structure_clauses_on_star_barrier():
    g = incidence_graph(star(3))
    spec = DegreeSpec(1)
    br = find_biased_barrier(g, spec)
    rep = check_barrier_structure(g, br, spec)
    assert rep.i.passed and rep.ii.passed and rep.iii.passed and rep.iv.passed
    assert rep.ok
    assert not rep.iv_truncated


def test_structure_requires_even_product():
    g = incidence_graph(star(3))  # |Y| = 4
    spec = DegreeSpec(1)
    br = find_biased_barrier(g, spec)
    odd_g = BipartiteGraph(1, 3, [(0, 1, 2)])  # |Y| = 3, k = 1 is odd
    odd_br = find_biased_barrier(odd_g, spec)
    with pytest.raises(ValueError, match="even"):
        check_barrier_structure(odd_g, odd_br, spec)
    assert check_barrier_structure(g, br, spec).ok


def test_structure_holds_on_all_small_barriers():
    """Every biased barrier in the small bipartite census satisfies the
    four structure clauses whenever k * |Y| is even."""
    from bergefactor.harness import enumerate_bipartite_graphs

    checked = 0
    for g in enumerate_bipartite_graphs(5):
        for k in (1, 2):
            if k * g.y_count % 2:
                continue
            res = deficiency_scan(g, DegreeSpec(k))
            if res.min_delta >= 0:
                continue
            br = delta(g, res.best_a, res.best_b, DegreeSpec(k))
            rep = check_barrier_structure(g, br, DegreeSpec(k))
            assert rep.ok, (g, k, br)
            checked += 1
    assert checked > 50


def test_structure_reports_failures_on_unbiased_pairs():
    """Clause diagnostics must actually fire: a hand-built pair that
    puts an X-vertex in B violates clause (i)."""
    g = incidence_graph(star(3))
    spec = DegreeSpec(1)
    rec = delta(g, [1], [0], spec)
    rep = check_barrier_structure(g, rec, spec)
    assert not rep.i.passed
    assert not rep.ok
    assert rep.i.witness
