"""Set-pair families: the classical disjoint-pair inequality of Bollobas,
a two-element-core variant with its conjectured bound and extremal
construction, and exact brute-force maxima over small ground sets.

A family is a list of pairs (A_i, B_i) of finite integer sets with claimed
sizes |A_i| = a, |B_i| = b.  Two modes:

* "bollobas": A_i and B_i disjoint; condition A_i meets B_j for all i != j;
  the family size is at most C(a+b, a).
* "two_core": |A_i intersect B_i| = 2; condition that no cross intersection
  A_i intersect B_j (i != j) is contained in any core A_k intersect B_k
  (all k, including k = i and k = j); conjectured bound two_core_bound(a,b).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, InvalidFamilyError

Pair = tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class SetPairFamily:
    pairs: tuple[Pair, ...]
    a: int
    b: int

    @classmethod
    def from_lists(cls, pairs: Iterable[tuple[Iterable[int], Iterable[int]]],
                   a: int, b: int) -> "SetPairFamily":
        return cls(tuple((frozenset(x), frozenset(y)) for x, y in pairs), a, b)

    def to_json(self) -> str:
        return json.dumps([[sorted(x), sorted(y)] for x, y in self.pairs])

    @classmethod
    def from_json(cls, text: str, a: int, b: int) -> "SetPairFamily":
        return cls.from_lists(json.loads(text), a, b)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass
class CheckResult:
    ok: bool                 # the cross conditions hold
    size: int
    bound: int
    within_bound: bool
    meets_bound: bool
    failure: str | None = None


def _check_sizes(fam: SetPairFamily, core_size: int | None) -> None:
    for i, (x, y) in enumerate(fam.pairs):
        if len(x) != fam.a or len(y) != fam.b:
            raise InvalidFamilyError(
                f"pair {i}: sizes {len(x)},{len(y)} do not match claimed {fam.a},{fam.b}")
        core = len(x & y)
        if core_size is None:
            continue
        if core != core_size:
            raise InvalidFamilyError(
                f"pair {i}: |A&B| = {core}, required {core_size}")


def check_bollobas(fam: SetPairFamily) -> CheckResult:
    """Verify disjointness invariants and the cross condition A_i & B_j != {}
    for i != j; compare the family size against C(a+b, a)."""
    _check_sizes(fam, core_size=0)
    bound = math.comb(fam.a + fam.b, fam.a)
    for i, (ai, _) in enumerate(fam.pairs):
        for j, (_, bj) in enumerate(fam.pairs):
            if i != j and not (ai & bj):
                return CheckResult(False, len(fam), bound, len(fam) <= bound,
                                   len(fam) == bound,
                                   f"A_{i} and B_{j} are disjoint")
    n = len(fam)
    return CheckResult(True, n, bound, n <= bound, n == bound)


def two_core_bound(a: int, b: int) -> int:
    """sum_{i=2..a} 2^(i-2) C(a+b-2i, a-i), evaluated exactly."""
    if not 2 <= a <= b:
        raise ValueError("need b >= a >= 2")
    return sum((1 << (i - 2)) * math.comb(a + b - 2 * i, a - i) for i in range(2, a + 1))


def check_two_core(fam: SetPairFamily) -> CheckResult:
    """Verify |A_i & B_i| = 2 plus the non-containment condition: for all
    i != j and every k, A_i & B_j is not a subset of A_k & B_k."""
    if not 2 <= fam.a <= fam.b:
        raise ValueError("need b >= a >= 2")
    _check_sizes(fam, core_size=2)
    bound = two_core_bound(fam.a, fam.b)
    cores = [x & y for x, y in fam.pairs]
    n = len(fam)
    for i, (ai, _) in enumerate(fam.pairs):
        for j, (_, bj) in enumerate(fam.pairs):
            if i == j:
                continue
            cross = ai & bj
            for k, core in enumerate(cores):
                if cross <= core:
                    return CheckResult(False, n, bound, n <= bound, n == bound,
                                       f"A_{i} & B_{j} is contained in core {k}")
    return CheckResult(True, n, bound, n <= bound, n == bound)


def partition_family(a: int, b: int) -> SetPairFamily:
    """The tight example for the disjoint mode: all splits of {1..a+b} into
    an a-set and its complement."""
    ground = frozenset(range(1, a + b + 1))
    pairs = []
    for xs in itertools.combinations(sorted(ground), a):
        x = frozenset(xs)
        pairs.append((x, ground - x))
    return SetPairFamily(tuple(pairs), a, b)


def two_core_construction(a: int, b: int) -> SetPairFamily:
    """The layered extremal family over the ground set {1..a+b-2}.

    Layer c (2 <= c <= a) consists of every a-set containing both elements
    of the c-th marker pair {2c-3, 2c-2}, exactly one element of each
    earlier marker pair, and arbitrary filler beyond the markers; B is the
    complement plus the c-th marker pair.  The family passes check_two_core
    and its size equals two_core_bound(a, b).
    """
    if not 2 <= a <= b:
        raise ValueError("need b >= a >= 2")
    ground = list(range(1, a + b - 1))
    pairs: list[Pair] = []
    for c in range(2, a + 1):
        marker = (2 * c - 3, 2 * c - 2)
        earlier = [(2 * d - 3, 2 * d - 2) for d in range(2, c)]
        rest = [e for e in ground if e > 2 * (c - 1)]
        need = a - 2 - len(earlier)
        for picks in itertools.product(*earlier):
            for filler in itertools.combinations(rest, need):
                aset = frozenset(marker) | frozenset(picks) | frozenset(filler)
                bset = (frozenset(ground) - aset) | frozenset(marker)
                pairs.append((aset, bset))
    return SetPairFamily(tuple(pairs), a, b)


# ---------------------------------------------------------------------------
# exact maxima by branch and bound
# ---------------------------------------------------------------------------

_BRUTE_CAPS = {"a": 3, "b": 4, "ground": 8}


def _candidates(a: int, b: int, ground: int, mode: str) -> list[Pair]:
    elements = range(1, ground + 1)
    out: list[Pair] = []
    for xs in itertools.combinations(elements, a):
        aset = frozenset(xs)
        if mode == "bollobas":
            pool = [e for e in elements if e not in aset]
            for ys in itertools.combinations(pool, b):
                out.append((aset, frozenset(ys)))
        else:
            pool = [e for e in elements if e not in aset]
            for core in itertools.combinations(sorted(aset), 2):
                for ys in itertools.combinations(pool, b - 2):
                    out.append((aset, frozenset(core) | frozenset(ys)))
    return out


def brute_force_max(a: int, b: int, ground: int, mode: str = "two_core",
                    ) -> tuple[int, SetPairFamily]:
    """Exact maximum family size over subsets of {1..ground}, by depth-first
    branch and bound over candidate pairs in lexicographic order.  The
    witness returned is the lexicographically smallest maximum family."""
    if mode not in ("bollobas", "two_core"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "two_core" and not 2 <= a <= b:
        raise ValueError("need b >= a >= 2")
    if a > _BRUTE_CAPS["a"] or b > _BRUTE_CAPS["b"] or ground > _BRUTE_CAPS["ground"]:
        raise CapExceeded(
            f"brute force capped at a<={_BRUTE_CAPS['a']}, b<={_BRUTE_CAPS['b']}, "
            f"ground<={_BRUTE_CAPS['ground']}")
    cands = sorted(_candidates(a, b, ground, mode),
                   key=lambda p: (sorted(p[0]), sorted(p[1])))
    best_size = 0
    best: list[Pair] = []
    chosen: list[Pair] = []
    cores: list[frozenset[int]] = []
    crosses: list[frozenset[int]] = []

    def compatible(pair: Pair) -> list[frozenset[int]] | None:
        """New cross intersections if pair can join `chosen`, else None."""
        x, y = pair
        core = x & y
        new_cross = []
        for (fx, fy) in chosen:
            c1, c2 = x & fy, fx & y
            if mode == "bollobas":
                if not c1 or not c2:
                    return None
            new_cross.extend((c1, c2))
        if mode == "two_core":
            for cross in new_cross:
                for c in cores:
                    if cross <= c:
                        return None
                if cross <= core:
                    return None
            for cross in crosses:
                if cross <= core:
                    return None
        return new_cross

    def dfs(start: int) -> None:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size, best = len(chosen), list(chosen)
        for idx in range(start, len(cands)):
            if len(chosen) + (len(cands) - idx) <= best_size:
                return
            new_cross = compatible(cands[idx])
            if new_cross is None:
                continue
            chosen.append(cands[idx])
            cores.append(cands[idx][0] & cands[idx][1])
            crosses.extend(new_cross)
            dfs(idx + 1)
            del crosses[len(crosses) - len(new_cross):]
            cores.pop()
            chosen.pop()

    dfs(0)
    return best_size, SetPairFamily(tuple(best), a, b)
