from fractions import Fraction
from random import Random

import pytest

from conjlab.errors import CapExceeded
from conjlab.graphlab import (
    CycleCheckResult,
    Graph,
    bipartite_cycle_check,
    check_certificate,
    colours_line,
    density,
    flip_search,
    flip_verify,
    format_graph,
    hall_condition,
    hat_n,
    infimum_probe,
    orientation_exists,
    orientation_indegrees,
    parse_graph,
    state_count,
)


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


K22 = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
K4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_graph_text_roundtrip():
    g = cycle_graph(5)
    text = format_graph(g, part=None)
    back, part = parse_graph(text)
    assert back == g and part is None
    text = format_graph(K22, part=[0, 1])
    back, part = parse_graph(text)
    assert back == K22 and part == [0, 1]
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])


def test_density():
    assert density({1, 2, 3}) == Fraction(13, 12)
    assert density({1}) == Fraction(1, 2)
    pows = [2 ** i for i in range(10)]
    assert abs(float(density(pows)) - 1.2625) < 1e-3
    with pytest.raises(ValueError):
        density(set())
    with pytest.raises(ValueError):
        density({0, 1})


def test_colours_line_examples():
    res = colours_line({1, 2, 3})
    assert res.colourable
    assert len(res.certificate) == 4
    assert sorted(res.certificate) == [1, 1, 2, 3]
    assert check_certificate({1, 2, 3}, res.certificate)

    assert not colours_line({1}).colourable
    assert not colours_line({1, 2}).colourable


def test_colours_line_density_two_budgets():
    rng = Random(0)
    for _ in range(60):
        budget = set()
        while density(budget or {10 ** 6}) < 2 or not budget:
            budget.add(rng.randrange(1, 30))
            if density(budget) >= 2:
                break
        res = colours_line(budget)
        assert res.colourable, budget
        assert check_certificate(budget, res.certificate)


def test_colours_line_monotone_on_chains():
    rng = Random(1)
    for _ in range(20):
        base = sorted(rng.sample(range(1, 7), rng.randrange(1, 4)))
        if state_count(base) > 100_000:
            continue
        res = colours_line(base)
        if res.colourable:
            bigger = sorted(set(base) | {rng.randrange(1, 9)})
            if state_count(bigger) <= 2_000_000:
                assert colours_line(bigger).colourable


def test_certificate_tiling_check():
    assert check_certificate({1, 2, 3}, [1, 2, 1, 3])
    assert not check_certificate({1, 2, 3}, [1, 1, 2, 3])
    assert not check_certificate({1, 2}, [1, 2, 1, 3])


def test_colours_line_state_cap():
    with pytest.raises(CapExceeded):
        colours_line({3, 4, 5, 6, 7, 8, 9, 10}, state_limit=1000)


def test_infimum_probe_monotone():
    small = infimum_probe(40, seed=5)
    large = infimum_probe(120, seed=5)
    assert small.decided <= large.decided
    if small.best_noncolouring_density is not None:
        assert large.best_noncolouring_density >= small.best_noncolouring_density
    # {1} always proves the threshold exceeds 1/2
    assert large.best_noncolouring_density is None or \
        large.best_noncolouring_density >= Fraction(1, 2)


def test_hall_condition():
    assert hall_condition(cycle_graph(5), [1] * 5) == (True, None)
    ok, witness = hall_condition(Graph.from_edges(2, [(0, 1)]), [0, 0])
    assert not ok and witness == {0, 1}
    g = K4
    assert hall_condition(g, [g.degree(v) for v in range(4)])[0]
    with pytest.raises(CapExceeded):
        hall_condition(Graph.from_edges(25, []), [0] * 25)


def test_orientation_exists():
    ok, orient = orientation_exists(cycle_graph(6), [1] * 6)
    assert ok
    assert all(d <= 1 for d in orientation_indegrees(cycle_graph(6), orient))
    assert orientation_exists(Graph.from_edges(2, [(0, 1)]), [0, 0]) == (False, None)


def test_hall_equals_orientation_random():
    rng = Random(99)
    for _ in range(300):
        n = rng.randrange(2, 11)
        g = random_graph(rng, n)
        lam = [rng.randrange(0, g.degree(v) + 1) for v in range(n)]
        h, _ = hall_condition(g, lam)
        o, witness = orientation_exists(g, lam)
        assert h == o
        if o:
            indeg = orientation_indegrees(g, witness)
            assert all(indeg[v] <= lam[v] for v in range(n))


def test_hat_n():
    assert hat_n(K22, [0, 1], [0, 1]) == {2, 3}
    c6 = cycle_graph(6)
    assert hat_n(c6, [0, 2, 4], [0, 2]) == {1}
    assert hat_n(c6, [0, 2, 4], [0]) == set()
    with pytest.raises(ValueError):
        hat_n(c6, [0, 2, 4], [1])


def test_bipartite_cycle_check():
    res = bipartite_cycle_check(K22, [0, 1])
    assert res.status == "conjecture_holds"
    assert len(res.cycle) == 4
    res = bipartite_cycle_check(cycle_graph(6), [0, 2, 4])
    assert res.status == "hypothesis_fails"
    assert res.witness_subset in ([0, 2], [0, 4], [2, 4])
    with pytest.raises(ValueError):
        bipartite_cycle_check(K4, [0, 1])


def test_bipartite_cycle_sweep_no_counterexample():
    rng = Random(5)
    seen_holds = 0
    for _ in range(150):
        na, nb = rng.randrange(2, 6), rng.randrange(2, 7)
        edges = [(a, na + b) for a in range(na) for b in range(nb) if rng.random() < 0.6]
        g = Graph.from_edges(na + nb, edges)
        res = bipartite_cycle_check(g, list(range(na)))
        assert res.status != "COUNTEREXAMPLE", (edges, na, nb)
        seen_holds += res.status == "conjecture_holds"
    assert seen_holds > 0


def test_flip_verify():
    matching = {(0, 1): 1, (2, 3): 1, (0, 2): 2, (0, 3): 2, (1, 2): 2, (1, 3): 2}
    verdict = flip_verify(K4, matching, [1, 2])
    assert not verdict.ok and "e_1[0]" in verdict.failure
    c5 = cycle_graph(5)
    assert flip_verify(c5, {e: 1 for e in c5.edges}, [2]).ok
    with pytest.raises(ValueError):
        flip_verify(c5, {e: 1 for e in c5.edges}, [3])  # not 3-regular
    with pytest.raises(ValueError):
        flip_verify(K4, matching, [2, 1])


def test_flip_verify_modes_and_automorphism():
    matching = {(0, 1): 1, (2, 3): 1, (0, 2): 2, (0, 3): 2, (1, 2): 2, (1, 3): 2}
    for mode in ("induced", "incident"):
        assert not flip_verify(K4, matching, [1, 2], mode=mode).ok
    # swap vertices 0<->1 (an automorphism fixing the colouring)
    swapped = {(0, 1): 1, (2, 3): 1, (1, 2): 2, (1, 3): 2, (0, 2): 2, (0, 3): 2}
    assert flip_verify(K4, swapped, [1, 2]).ok == flip_verify(K4, matching, [1, 2]).ok


def test_flip_search_small_a1_never_verifies():
    # (a1, a2) needs a1 >= 3; searches with a1 < 3 must never report success
    assert flip_search(K4, [1, 2], budget=150, seed=0) is None
    g33 = Graph.from_edges(6, [(a, 3 + b) for a in range(3) for b in range(3)])
    assert flip_search(g33, [1, 2], budget=150, seed=1) is None
