"""Exact solver for the alternating edge-colouring game on K_n.

Player 1 (RED) and player 2 (BLUE) colour the edges of K_n alternately,
RED first, until none remain; RED wins iff the largest red clique is
strictly larger than the largest blue one (the max clique of an empty
colour class counts the single vertex, size 1).  The game value is
computed by memoized minimax over states canonicalized under vertex
relabelling; draws cannot occur, so values are boolean.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .errors import CapExceeded

RED, BLUE = "RED", "BLUE"
UNCOLOURED = 0

DEFAULT_CAP = 5


@lru_cache(maxsize=None)
def edge_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def _perm_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, the induced permutation of edge slots."""
    edges = edge_list(n)
    index = {e: i for i, e in enumerate(edges)}
    maps = []
    for perm in itertools.permutations(range(n)):
        maps.append(tuple(index[tuple(sorted((perm[u], perm[v])))] for u, v in edges))
    return tuple(maps)


def initial_state(n: int) -> tuple[int, ...]:
    return (UNCOLOURED,) * len(edge_list(n))


def mover(state: Sequence[int]) -> int:
    """1 (RED) moves when the colour counts are level, else 2 (BLUE)."""
    reds = sum(c == 1 for c in state)
    blues = sum(c == 2 for c in state)
    return 1 if reds == blues else 2


def play(state: tuple[int, ...], edge_idx: int) -> tuple[int, ...]:
    if state[edge_idx] != UNCOLOURED:
        raise ValueError("edge already coloured")
    out = list(state)
    out[edge_idx] = mover(state)
    return tuple(out)


def max_clique_size(n: int, state: Sequence[int], colour: int) -> int:
    """Largest vertex set pairwise joined in the given colour; singletons
    count, so the empty colour class scores 1."""
    edges = edge_list(n)
    adj = [0] * n
    for (u, v), c in zip(edges, state):
        if c == colour:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    best = 1 if n else 0
    for mask in range(1, 1 << n):
        if mask.bit_count() <= best:
            continue
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m &= ~low
            if mask & ~(adj[v] | low):
                ok = False
                break
        if ok:
            best = mask.bit_count()
    return best


def red_wins_at_end(n: int, state: Sequence[int]) -> bool:
    """Default terminal rule: RED strictly ahead on clique size."""
    return max_clique_size(n, state, 1) > max_clique_size(n, state, 2)


def winner_at_end(n: int, state: Sequence[int]) -> str:
    if UNCOLOURED in state:
        raise ValueError("state is not terminal")
    return RED if red_wins_at_end(n, state) else BLUE


def _ordered_moves(n: int, state: tuple[int, ...]) -> list[int]:
    """Uncoloured edges, densest coloured endpoints first (pruning order
    only; the value does not depend on it)."""
    edges = edge_list(n)
    cdeg = [0] * n
    for (u, v), c in zip(edges, state):
        if c != UNCOLOURED:
            cdeg[u] += 1
            cdeg[v] += 1
    order = [i for i, c in enumerate(state) if c == UNCOLOURED]
    order.sort(key=lambda i: (-max(cdeg[edges[i][0]], cdeg[edges[i][1]]), i))
    return order


@dataclass
class SolveResult:
    n: int
    winner: str
    principal_variation: list[tuple[int, int, str]]  # (u, v, colour)
    states: int


def _canonical(state: tuple[int, ...], maps) -> tuple[int, ...]:
    return min(tuple(state[m[i]] for i in range(len(state))) for m in maps)


def solve(n: int, allow_large: bool = False,
          eval_fn: Callable[[int, Sequence[int]], bool] | None = None) -> SolveResult:
    """Game value under optimal play plus a deterministic principal
    variation.  n = 6 must be requested explicitly (much larger state
    space); beyond that the solver refuses."""
    if n > 6 or (n > DEFAULT_CAP and not allow_large):
        raise CapExceeded(f"game solved exactly only up to n={DEFAULT_CAP} "
                          f"(n=6 via allow_large)")
    if eval_fn is None:
        eval_fn = red_wins_at_end
    maps = _perm_maps(n)
    memo: dict[tuple[int, ...], bool] = {}

    def value(state: tuple[int, ...]) -> bool:
        key = _canonical(state, maps)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if UNCOLOURED not in state:
            result = eval_fn(n, state)
        else:
            red_to_move = mover(state) == 1
            result = not red_to_move
            for idx in _ordered_moves(n, state):
                child = value(play(state, idx))
                if child == red_to_move:
                    result = child
                    break
        memo[key] = result
        return result

    start = initial_state(n)
    red_value = value(start)
    # principal variation: each mover takes its first optimal move in order;
    # when losing, the first move in order stands in
    pv = []
    state = start
    edges = edge_list(n)
    while UNCOLOURED in state:
        red_to_move = mover(state) == 1
        moves = _ordered_moves(n, state)
        pick = moves[0]
        for idx in moves:
            if value(play(state, idx)) == red_to_move:
                pick = idx
                break
        u, v = edges[pick]
        pv.append((u, v, RED if red_to_move else BLUE))
        state = play(state, pick)
    return SolveResult(n, RED if red_value else BLUE, pv, len(memo))


def solve_plain(n: int,
                eval_fn: Callable[[int, Sequence[int]], bool] | None = None) -> str:
    """Memo-free, canonicalization-free reference solver (n <= 4)."""
    if n > 4:
        raise CapExceeded("plain reference solver is for n <= 4")
    if eval_fn is None:
        eval_fn = red_wins_at_end

    def value(state: tuple[int, ...]) -> bool:
        if UNCOLOURED not in state:
            return eval_fn(n, state)
        red_to_move = mover(state) == 1
        results = (value(play(state, i))
                   for i, c in enumerate(state) if c == UNCOLOURED)
        return any(results) if red_to_move else all(results)

    return RED if value(initial_state(n)) else BLUE
