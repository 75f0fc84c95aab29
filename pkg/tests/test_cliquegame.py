import itertools

import pytest

from conjlab.cliquegame import (
    BLUE,
    RED,
    edge_list,
    initial_state,
    max_clique_size,
    mover,
    play,
    red_wins_at_end,
    solve,
    solve_plain,
    winner_at_end,
)
from conjlab.errors import CapExceeded


def terminal_states(n):
    m = len(edge_list(n))
    reds = (m + 1) // 2
    for red_set in itertools.combinations(range(m), reds):
        yield tuple(1 if i in red_set else 2 for i in range(m))


def test_move_alternation():
    st = initial_state(4)
    assert mover(st) == 1
    st = play(st, 0)
    assert mover(st) == 2
    st = play(st, 3)
    assert mover(st) == 1
    with pytest.raises(ValueError):
        play(st, 0)


def test_max_clique_size():
    # empty colour class scores the single vertex
    assert max_clique_size(4, (0,) * 6, 1) == 1
    assert max_clique_size(4, (1,) + (0,) * 5, 1) == 2
    full_red = tuple(1 for _ in edge_list(5))
    assert max_clique_size(5, full_red, 1) == 5
    assert max_clique_size(5, full_red, 2) == 1


def test_winner_at_end_small():
    assert winner_at_end(2, (1,)) == RED          # 2 > 1
    for st in terminal_states(3):
        assert winner_at_end(3, st) == BLUE       # two red edges never a triangle
    with pytest.raises(ValueError):
        winner_at_end(3, (1, 2, 0))


def test_winner_red_triangle_on_k4():
    edges = edge_list(4)
    triangle = {(0, 1), (0, 2), (1, 2)}
    st = tuple(1 if e in triangle else 2 for e in edges)
    assert winner_at_end(4, st) == RED


def test_solve_small_matches_plain():
    for n in (2, 3, 4):
        assert solve(n).winner == solve_plain(n)


def test_solve_values():
    assert solve(2).winner == RED    # degenerate start below the conjecture's range
    assert solve(3).winner == BLUE
    assert solve(4).winner == BLUE
    assert solve(5).winner == BLUE


def test_solve_cap():
    with pytest.raises(CapExceeded):
        solve(6)                     # needs allow_large
    with pytest.raises(CapExceeded):
        solve(7, allow_large=True)


def test_principal_variation_is_playable():
    res = solve(4)
    edges = edge_list(4)
    index = {e: i for i, e in enumerate(edges)}
    st = initial_state(4)
    for u, v, colour in res.principal_variation:
        assert colour == (RED if mover(st) == 1 else BLUE)
        st = play(st, index[(u, v)])
    assert winner_at_end(4, st) == res.winner


def test_zero_sum_colour_swap():
    # re-encode the game with the first player writing colour 2 and the win
    # rule mirrored accordingly; the winner must not change
    def swapped_value(n, state):
        if 0 not in state:
            # first player's colour is now 2
            return max_clique_size(n, state, 2) > max_clique_size(n, state, 1)
        twos = sum(c == 2 for c in state)
        ones = sum(c == 1 for c in state)
        first_to_move = twos == ones
        write = 2 if first_to_move else 1
        vals = []
        for i, c in enumerate(state):
            if c == 0:
                child = list(state)
                child[i] = write
                vals.append(swapped_value(n, tuple(child)))
        return any(vals) if first_to_move else all(vals)

    for n in (2, 3, 4):
        first_wins_swapped = swapped_value(n, initial_state(n))
        assert (RED if first_wins_swapped else BLUE) == solve(n).winner


def test_canonicalization_soundness_n4():
    # states identified by vertex relabelling have equal minimax value,
    # checked without any memoization
    from random import Random

    edges = edge_list(4)
    index = {e: i for i, e in enumerate(edges)}

    def plain_value(state):
        if 0 not in state:
            return red_wins_at_end(4, state)
        red = mover(state) == 1
        vals = (plain_value(play(state, i)) for i, c in enumerate(state) if c == 0)
        return any(vals) if red else all(vals)

    rng = Random(13)
    for _ in range(15):
        st = initial_state(4)
        for _ in range(rng.randrange(0, 5)):
            moves = [i for i, c in enumerate(st) if c == 0]
            st = play(st, rng.choice(moves))
        perm = rng.sample(range(4), 4)
        relab = [0] * len(edges)
        for (u, v), i in index.items():
            relab[index[tuple(sorted((perm[u], perm[v])))]] = st[i]
        assert plain_value(st) == plain_value(tuple(relab))
