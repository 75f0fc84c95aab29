"""Cap sets in GF(3)^n: verification, exhaustive maxima at small n, product
constructions, and seeded searches for disjoint equal-size pairs.

Points are tuples of trits; the text form is a digit string per point
("0211").  A cap set has no three distinct points summing to zero
coordinatewise mod 3 (equivalently, no 3-term arithmetic progression).
For distinct x, y the unique completing point -x-y never equals x or y,
so the pair scan below needs no trivial-solution special case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random
from typing import Iterable, Sequence

from .errors import CapExceeded

Point = tuple[int, ...]

MAX_EXHAUSTIVE_DIM = 4


def parse_point(text: str) -> Point:
    pt = tuple(int(ch) for ch in text.strip())
    if any(t not in (0, 1, 2) for t in pt):
        raise ValueError(f"trits must be 0/1/2: {text!r}")
    return pt


def format_point(pt: Point) -> str:
    return "".join(str(t) for t in pt)


def all_points(n: int) -> list[Point]:
    return list(itertools.product((0, 1, 2), repeat=n))


def third_point(x: Point, y: Point) -> Point:
    """The unique z with x + y + z = 0 mod 3."""
    return tuple((-a - b) % 3 for a, b in zip(x, y))


def _validate(n: int, points: Iterable[Point]) -> set[Point]:
    pts = list(points)
    st = set(pts)
    if len(st) != len(pts):
        raise ValueError("points must be distinct")
    for p in st:
        if len(p) != n:
            raise ValueError(f"point {p} does not live in dimension {n}")
    return st


def is_capset(n: int, points: Iterable[Point]) -> tuple[bool, tuple[Point, Point, Point] | None]:
    """Pair-scan cap test; returns (verdict, violating triple or None).

    >>> is_capset(1, [(0,), (1,)])[0]
    True
    >>> is_capset(1, [(0,), (1,), (2,)])
    (False, ((0,), (1,), (2,)))
    """
    st = _validate(n, points)
    pts = sorted(st)
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            z = third_point(x, y)
            if z in st:
                tx, ty, tz = sorted((x, y, z))
                return False, (tx, ty, tz)
    return True, None


def is_capset_bruteforce(n: int, points: Iterable[Point]) -> bool:
    """Cubic oracle: scan all triples of distinct points."""
    pts = sorted(_validate(n, points))
    for x, y, z in itertools.combinations(pts, 3):
        if all((a + b + c) % 3 == 0 for a, b, c in zip(x, y, z)):
            return False
    return True


def product(cap_a: Iterable[Point], cap_b: Iterable[Point]) -> set[Point]:
    """Concatenation product; the product of caps is again a cap."""
    return {a + b for a in cap_a for b in cap_b}


def max_capset(n: int) -> tuple[int, set[Point]]:
    """Exact maximum cap size in dimension n (n <= 4) with a witness.

    Symmetry reduction: invertible affine maps preserve caps and act
    transitively on ordered affinely-independent tuples, and any 3 points
    of a cap are non-collinear, so some maximum cap contains {0, e1, e2}
    (n >= 2).  For n >= 3 the search starts from the product cap {0,1}^n
    (size 2^n >= 8); any strictly larger cap cannot fit in a 2-flat (at
    most 4 cap points do), hence contains 4 affinely-independent points
    and may be assumed to contain {0, e1, e2, e3}.
    """
    if n > MAX_EXHAUSTIVE_DIM:
        raise CapExceeded(f"exhaustive cap search capped at n={MAX_EXHAUSTIVE_DIM}")
    if n == 0:
        return 1, {()}
    pts = all_points(n)
    index = {p: i for i, p in enumerate(pts)}
    third = [[index[third_point(p, q)] for q in pts] for p in pts]

    units = [(0,) * n]
    for i in range(n):
        units.append(tuple(1 if j == i else 0 for j in range(n)))
    if n == 1:
        base = [index[u] for u in units[:2]]
        best = {index[p] for p in units[:2]}
    elif n == 2:
        base = [index[u] for u in units[:3]]
        best = set(base)
    else:
        base = [index[u] for u in units[:4]]
        best = {index[p] for p in itertools.product((0, 1), repeat=n)}
    best_size = len(best)

    full = (1 << len(pts)) - 1
    allowed = full
    for i in base:
        allowed &= ~(1 << i)
    for i, j in itertools.combinations(base, 2):
        allowed &= ~(1 << third[i][j])

    members = list(base)

    def dfs(allowed_mask: int) -> None:
        nonlocal best_size, best
        if len(members) > best_size:
            best_size, best = len(members), set(members)
        if len(members) + allowed_mask.bit_count() <= best_size:
            return
        while allowed_mask:
            low = allowed_mask & -allowed_mask
            p = low.bit_length() - 1
            allowed_mask &= ~low
            if len(members) + 1 + allowed_mask.bit_count() <= best_size:
                return
            banned = 0
            row = third[p]
            for q in members:
                banned |= 1 << row[q]
            members.append(p)
            dfs(allowed_mask & ~banned)
            members.pop()

    dfs(allowed)
    return best_size, {pts[i] for i in best}


# ---------------------------------------------------------------------------
# affine maps
# ---------------------------------------------------------------------------

def _det3(mat: list[list[int]]) -> int:
    """Determinant mod 3 by Gaussian elimination."""
    n = len(mat)
    m = [row[:] for row in mat]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % 3), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det % 3
        det = det * m[col][col] % 3
        inv = pow(m[col][col], -1, 3)
        for r in range(col + 1, n):
            f = m[r][col] * inv % 3
            if f:
                m[r] = [(a - f * b) % 3 for a, b in zip(m[r], m[col])]
    return det % 3


def random_affine_map(n: int, rng: Random) -> tuple[list[list[int]], Point]:
    """A uniformly drawn invertible matrix over GF(3) plus a translation."""
    while True:
        mat = [[rng.randrange(3) for _ in range(n)] for _ in range(n)]
        if _det3(mat):
            break
    shift = tuple(rng.randrange(3) for _ in range(n))
    return mat, shift


def apply_affine(mat: Sequence[Sequence[int]], shift: Point, points: Iterable[Point]) -> set[Point]:
    out = set()
    for p in points:
        img = tuple((sum(row[j] * p[j] for j in range(len(p))) + s) % 3
                    for row, s in zip(mat, shift))
        out.add(img)
    return out


# ---------------------------------------------------------------------------
# searches
# ---------------------------------------------------------------------------

def greedy_cap(n: int, size: int, rng: Random, tries: int = 200) -> set[Point] | None:
    """Repeated randomized greedy construction of a cap of the given size."""
    pts = all_points(n)
    for _ in range(tries):
        order = pts[:]
        rng.shuffle(order)
        cap: set[Point] = set()
        forbidden: set[Point] = set()
        for p in order:
            if p in forbidden or p in cap:
                continue
            forbidden.update(third_point(p, q) for q in cap)
            cap.add(p)
            if len(cap) == size:
                return cap
    return None


@dataclass
class DisjointSearchResult:
    found: bool
    first: set[Point] | None
    second: set[Point] | None
    attempts: int
    reason: str  # "found" | "counting" | "budget-exhausted" | "no-base-cap"


def find_disjoint_equal(n: int, size: int, budget: int = 2000,
                        seed: int = 0) -> DisjointSearchResult:
    """Seeded hunt for two disjoint caps of the same size in GF(3)^n.

    Strategy: build one cap greedily, then walk random invertible affine
    images of it (caps are closed under those) looking for a disjoint copy;
    fresh greedy caps on the complement serve as a fallback.  A not-found
    answer is evidence, not a proof, except when 2*size > 3^n.
    """
    if 2 * size > 3 ** n:
        return DisjointSearchResult(False, None, None, 0, "counting")
    rng = Random(f"capsearch|{seed}")
    first = greedy_cap(n, size, rng)
    if first is None:
        return DisjointSearchResult(False, None, None, 0, "no-base-cap")
    attempts = 0
    while attempts < budget:
        attempts += 1
        mat, shift = random_affine_map(n, rng)
        image = apply_affine(mat, shift, first)
        if image.isdisjoint(first):
            return DisjointSearchResult(True, first, image, attempts, "found")
        if attempts % 50 == 0:
            # fallback: greedy cap avoiding the first one entirely
            order = [p for p in all_points(n) if p not in first]
            rng.shuffle(order)
            cap: set[Point] = set()
            for p in order:
                if any(third_point(p, q) in cap for q in cap):
                    continue
                cap.add(p)
                if len(cap) == size:
                    return DisjointSearchResult(True, first, cap, attempts, "found")
    return DisjointSearchResult(False, first, None, attempts, "budget-exhausted")
