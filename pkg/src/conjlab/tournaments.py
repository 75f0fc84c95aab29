"""Tournaments on up to 8 labelled vertices, bit-packed, with the exact
subset-inversion distance to transitivity.

A tournament on n vertices stores one bit per pair (i, j), i < j, in
lexicographic pair order; the bit is set iff the edge is directed i -> j.
inv(T) is the least number of vertex subsets whose internal edge flips turn
T transitive.  Flipping a subset is an involution, so distances are
computed once per n by a multi-source breadth-first search from the n!
transitive tournaments; the resulting table answers all queries.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded

DEFAULT_CAP = 7


def pair_index(i: int, j: int, n: int) -> int:
    """Index of pair (i, j), i < j, in lexicographic order."""
    if not 0 <= i < j < n:
        raise ValueError(f"need 0 <= i < j < n, got ({i}, {j}) with n={n}")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Tournament:
    n: int
    bits: int

    def __post_init__(self):
        if self.bits >> num_pairs(self.n):
            raise ValueError("orientation bits out of range")

    def beats(self, u: int, v: int) -> bool:
        """True iff the edge between u and v is directed u -> v."""
        if u == v:
            raise ValueError("no self edges")
        if u < v:
            return bool(self.bits >> pair_index(u, v, self.n) & 1)
        return not self.bits >> pair_index(v, u, self.n) & 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) if self.beats(i, j) else (j, i)
                for i, j in itertools.combinations(range(self.n), 2)]

    def to_text(self) -> str:
        m = num_pairs(self.n)
        return f"{self.n} " + "".join(str(self.bits >> p & 1) for p in range(m))

    @classmethod
    def from_text(cls, text: str) -> "Tournament":
        head, _, tail = text.strip().partition(" ")
        n = int(head)
        tail = tail.strip()
        if len(tail) != num_pairs(n):
            raise ValueError(f"expected {num_pairs(n)} bits for n={n}")
        bits = 0
        for p, ch in enumerate(tail):
            if ch == "1":
                bits |= 1 << p
            elif ch != "0":
                raise ValueError(f"bad bit {ch!r}")
        return cls(n, bits)


def transitive_from_order(order: Sequence[int]) -> Tournament:
    """The transitive tournament where earlier elements of `order` beat
    later ones."""
    n = len(order)
    rank = {v: r for r, v in enumerate(order)}
    bits = 0
    for i, j in itertools.combinations(range(n), 2):
        if rank[i] < rank[j]:
            bits |= 1 << pair_index(i, j, n)
    return Tournament(n, bits)


def all_transitive(n: int) -> list[Tournament]:
    return [transitive_from_order(order) for order in itertools.permutations(range(n))]


def is_transitive(t: Tournament) -> bool:
    score = Counter()
    for u, v in t.edges():
        score[u] += 1
    return sorted(score[v] for v in range(t.n)) == list(range(t.n))


def subset_mask(subset: Iterable[int], n: int) -> int:
    """XOR mask flipping every edge with both endpoints in the subset."""
    vs = sorted(set(subset))
    mask = 0
    for i, j in itertools.combinations(vs, 2):
        mask |= 1 << pair_index(i, j, n)
    return mask


def invert_subset(t: Tournament, subset: Iterable[int]) -> Tournament:
    return Tournament(t.n, t.bits ^ subset_mask(subset, t.n))


def reverse_all(t: Tournament) -> Tournament:
    return Tournament(t.n, t.bits ^ ((1 << num_pairs(t.n)) - 1))


def relabel(t: Tournament, perm: Sequence[int]) -> Tournament:
    """Image under the vertex relabelling v -> perm[v]."""
    bits = 0
    for u, v in t.edges():
        pu, pv = perm[u], perm[v]
        if pu < pv:
            bits |= 1 << pair_index(pu, pv, t.n)
    return Tournament(t.n, bits)


def join(t1: Tournament, t2: Tournament) -> Tournament:
    """Disjoint union with every edge directed from t1's part to t2's."""
    n = t1.n + t2.n
    bits = 0
    for i, j in itertools.combinations(range(t1.n), 2):
        if t1.bits >> pair_index(i, j, t1.n) & 1:
            bits |= 1 << pair_index(i, j, n)
    for i, j in itertools.combinations(range(t2.n), 2):
        if t2.bits >> pair_index(i, j, t2.n) & 1:
            bits |= 1 << pair_index(i + t1.n, j + t1.n, n)
    for i in range(t1.n):
        for j in range(t1.n, n):
            bits |= 1 << pair_index(i, j, n)
    return Tournament(n, bits)


@dataclass
class InvTable:
    n: int
    dist: np.ndarray  # uint8, indexed by orientation bits
    layers: list[int]  # number of tournaments at each distance

    def inv(self, t: Tournament) -> int:
        if t.n != self.n:
            raise ValueError(f"table is for n={self.n}")
        return int(self.dist[t.bits])

    @property
    def max_value(self) -> int:
        return len(self.layers) - 1


def inv_table(n: int, allow_large: bool = False) -> InvTable:
    """Exact inv value for every tournament on n labelled vertices.

    Multi-source BFS from the transitive tournaments over the moves
    "XOR one subset mask"; moves are involutions so forward and backward
    distances agree.  n=7 builds 2^21 states; n=8 (2^28 states, 256 MiB)
    must be requested explicitly.
    """
    if n > 8 or (n > DEFAULT_CAP and not allow_large):
        raise CapExceeded(f"inv table for n={n} refused (cap {DEFAULT_CAP}, "
                          f"n=8 via allow_large)")
    m = num_pairs(n)
    size = 1 << m
    dist = np.full(size, 255, dtype=np.uint8)
    sources = np.fromiter((t.bits for t in all_transitive(n)), dtype=np.int64)
    sources = np.unique(sources)
    dist[sources] = 0
    masks = []
    for r in range(2, n + 1):
        for subset in itertools.combinations(range(n), r):
            masks.append(subset_mask(subset, n))
    frontier = sources
    layers = [int(frontier.size)]
    d = 0
    while frontier.size:
        d += 1
        nxt = []
        for mask in masks:
            cand = frontier ^ mask
            new = cand[dist[cand] == 255]
            if new.size:
                dist[new] = d
                nxt.append(new)
        frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)
        if frontier.size:
            layers.append(int(frontier.size))
    return InvTable(n, dist, layers)


@dataclass
class AdditivityReport:
    n1: int
    n2: int
    defects: dict[int, int]            # defect value -> number of ordered pairs
    min_defect: int
    max_defect: int
    min_witness: tuple[str, str]
    max_witness: tuple[str, str]


def additivity_probe(n1: int, n2: int, allow_large: bool = False) -> AdditivityReport:
    """Distribution of inv(join(t1, t2)) - inv(t1) - inv(t2) over all
    ordered pairs, with lexicographically smallest extreme witnesses."""
    n = n1 + n2
    table1 = inv_table(n1, allow_large)
    table2 = inv_table(n2, allow_large)
    table = inv_table(n, allow_large)
    defects: Counter[int] = Counter()
    best: dict[str, tuple[int, int, int]] = {}
    for b1 in range(1 << num_pairs(n1)):
        t1 = Tournament(n1, b1)
        i1 = table1.inv(t1)
        for b2 in range(1 << num_pairs(n2)):
            t2 = Tournament(n2, b2)
            d = table.inv(join(t1, t2)) - i1 - table2.inv(t2)
            defects[d] += 1
            if "min" not in best or d < best["min"][0]:
                best["min"] = (d, b1, b2)
            if "max" not in best or d > best["max"][0]:
                best["max"] = (d, b1, b2)
    mn, mx = best["min"], best["max"]
    return AdditivityReport(
        n1, n2, dict(sorted(defects.items())), mn[0], mx[0],
        (Tournament(n1, mn[1]).to_text(), Tournament(n2, mn[2]).to_text()),
        (Tournament(n1, mx[1]).to_text(), Tournament(n2, mx[2]).to_text()),
    )
