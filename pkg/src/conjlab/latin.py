"""Latin squares: validation, group tables, exact repeated-2x2-block
("cuboctahedron") counting, group recognition, random sampling by the
Jacobson-Matthews walk, and a count-minimization search.

A square of order n is a tuple of n rows, each a tuple of symbols 0..n-1,
with every row and column a permutation.

Counting convention (calibrated against the group anchor n^5): a
configuration is an ordered pair of ordered row pairs and column pairs,
repeats allowed, whose two 2x2 value matrices coincide entrywise.  With
key(r1, r2, c1, c2) = the 2x2 value matrix, the count is the number of
ordered key collisions, i.e. sum of multiplicity^2 over keys.  Cayley
tables of groups achieve exactly n^5 (each key class has multiplicity n),
and only they do.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from random import Random
from typing import Iterable, Iterator, Sequence

import numpy as np

Square = tuple[tuple[int, ...], ...]


def is_latin(square: Sequence[Sequence[int]]) -> bool:
    n = len(square)
    symbols = set(range(n))
    if any(len(row) != n for row in square):
        return False
    if any(set(row) != symbols for row in square):
        return False
    return all({square[r][c] for r in range(n)} == symbols for c in range(n))


def _require_latin(square: Sequence[Sequence[int]]) -> Square:
    sq = tuple(tuple(row) for row in square)
    if not is_latin(sq):
        raise ValueError("not a Latin square")
    return sq


def parse_square(text: str) -> Square:
    rows = tuple(tuple(int(tok) for tok in line.split())
                 for line in text.strip().splitlines() if line.strip())
    return _require_latin(rows)


def format_square(square: Square) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in square)


def cyclic_square(n: int) -> Square:
    return tuple(tuple((r + c) % n for c in range(n)) for r in range(n))


# ---------------------------------------------------------------------------
# group tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    """Cyclic group, direct product of cyclics, or an explicit table."""

    moduli: tuple[int, ...] | None = None
    table: Square | None = None

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls(moduli=(n,))

    @classmethod
    def product(cls, *moduli: int) -> "GroupSpec":
        return cls(moduli=tuple(moduli))

    @classmethod
    def explicit(cls, table: Sequence[Sequence[int]]) -> "GroupSpec":
        return cls(table=tuple(tuple(row) for row in table))


def cayley_table(spec: GroupSpec) -> Square:
    """Multiplication table as a Latin square; explicit tables are checked
    for associativity (with cancellation, that makes them groups)."""
    if spec.moduli is not None:
        mods = spec.moduli
        if any(m < 1 for m in mods):
            raise ValueError("moduli must be positive")
        elems = list(itertools.product(*(range(m) for m in mods)))
        index = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        return tuple(
            tuple(index[tuple((a + b) % m for a, b, m in zip(x, y, mods))] for y in elems)
            for x in elems)
    assert spec.table is not None
    sq = _require_latin(spec.table)
    n = len(sq)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if sq[sq[x][y]][z] != sq[x][sq[y][z]]:
                    raise ValueError(f"table is not associative at ({x},{y},{z})")
    return sq


def is_group_table(square: Square) -> bool:
    """True iff the square, after row/column permutations bringing the first
    row and column to 0..n-1, is an associative (hence group) table.

    Row/column normalization composed with the count's symbol invariance
    makes this agree with "reaches the n^5 count": both are isotopy-class
    properties (a loop isotopic to a group is isomorphic to it).
    """
    sq = _require_latin(square)
    n = len(sq)
    if n == 1:
        return True
    col_of = {sq[0][c]: c for c in range(n)}
    cols = [col_of[v] for v in range(n)]
    rows = sorted(range(n), key=lambda r: sq[r][cols[0]])
    m = [[sq[r][c] for c in cols] for r in rows]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if m[m[x][y]][z] != m[x][m[y][z]]:
                    return False
    return True


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def count_cuboctahedra(square: Square) -> int:
    """O(n^4) counter: bucket ordered (row pair, column pair) choices by
    their 2x2 value matrix and sum squared multiplicities."""
    sq = _require_latin(square)
    n = len(sq)
    a = np.array(sq, dtype=np.int64)
    v00 = a[:, None, :, None]
    v01 = a[:, None, None, :]
    v10 = a[None, :, :, None]
    v11 = a[None, :, None, :]
    keys = ((v00 * n + v01) * n + v10) * n + v11
    counts = np.bincount(keys.ravel(), minlength=n ** 4)
    return int(np.dot(counts, counts))


def count_cuboctahedra_bruteforce(square: Square) -> int:
    """Octuple oracle: enumerate ordered pairs of quadruples directly and
    test the four value equalities.  Quadratic in n^4; for tests only."""
    sq = _require_latin(square)
    n = len(sq)
    a = np.array(sq, dtype=np.int16)
    v00 = np.broadcast_to(a[:, None, :, None], (n,) * 4).ravel()
    v01 = np.broadcast_to(a[:, None, None, :], (n,) * 4).ravel()
    v10 = np.broadcast_to(a[None, :, :, None], (n,) * 4).ravel()
    v11 = np.broadcast_to(a[None, :, None, :], (n,) * 4).ravel()
    eq = (v00[:, None] == v00[None, :])
    eq &= v01[:, None] == v01[None, :]
    eq &= v10[:, None] == v10[None, :]
    eq &= v11[:, None] == v11[None, :]
    return int(eq.sum())


def find_intercalates(square: Square) -> list[tuple[int, int, int, int]]:
    """All (r1, r2, c1, c2), r1 < r2, c1 < c2, whose 2x2 block has the
    swap pattern a b / b a."""
    sq = _require_latin(square)
    n = len(sq)
    out = []
    for r1, r2 in itertools.combinations(range(n), 2):
        for c1, c2 in itertools.combinations(range(n), 2):
            if sq[r1][c1] == sq[r2][c2] and sq[r1][c2] == sq[r2][c1]:
                out.append((r1, r2, c1, c2))
    return out


def swap_intercalate(square: Square, place: tuple[int, int, int, int]) -> Square:
    r1, r2, c1, c2 = place
    sq = [list(row) for row in square]
    if not (sq[r1][c1] == sq[r2][c2] and sq[r1][c2] == sq[r2][c1]):
        raise ValueError(f"{place} is not an intercalate")
    sq[r1][c1], sq[r1][c2] = sq[r1][c2], sq[r1][c1]
    sq[r2][c1], sq[r2][c2] = sq[r2][c2], sq[r2][c1]
    return _require_latin(sq)


def apply_isotopy(square: Square, row_perm: Sequence[int], col_perm: Sequence[int],
                  sym_perm: Sequence[int]) -> Square:
    """Square with rows, columns and symbols relabelled: new[r][c] =
    sym[old[row^-1 r][col^-1 c]] expressed directly as scatter."""
    n = len(square)
    out = [[0] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            out[row_perm[r]][col_perm[c]] = sym_perm[square[r][c]]
    return tuple(tuple(row) for row in out)


def all_latin_squares(n: int) -> Iterator[Square]:
    """Backtracking enumeration; practical for n <= 4 (576 squares)."""
    rows: list[tuple[int, ...]] = []

    def columns_ok(row: tuple[int, ...]) -> bool:
        return all(row[c] != prev[c] for prev in rows for c in range(n))

    def rec() -> Iterator[Square]:
        if len(rows) == n:
            yield tuple(rows)
            return
        for perm in itertools.permutations(range(n)):
            if columns_ok(perm):
                rows.append(perm)
                yield from rec()
                rows.pop()

    return rec()


# ---------------------------------------------------------------------------
# Jacobson-Matthews walk
# ---------------------------------------------------------------------------

def _walk(cube: list[list[list[int]]], n: int, steps: int, rng: Random) -> None:
    """Advance the +-1 walk in place until `steps` further proper incidence
    cubes have been visited.  The cube has line sums 1 with entries in
    {0, 1} when proper, or a single -1 entry when improper."""
    improper: tuple[int, int, int] | None = None
    done = 0
    while done < steps:
        if improper is None:
            x, y = rng.randrange(n), rng.randrange(n)
            zcur = next(s for s in range(n) if cube[x][y][s] == 1)
            z = rng.randrange(n - 1)
            if z >= zcur:
                z += 1
            zp = zcur
            xp = next(r for r in range(n) if cube[r][y][z] == 1)
            yp = next(c for c in range(n) if cube[x][c][z] == 1)
        else:
            x, y, z = improper
            zs = [s for s in range(n) if cube[x][y][s] == 1]
            xs = [r for r in range(n) if cube[r][y][z] == 1]
            ys = [c for c in range(n) if cube[x][c][z] == 1]
            zp = zs[rng.randrange(2)]
            xp = xs[rng.randrange(2)]
            yp = ys[rng.randrange(2)]
        cube[x][y][z] += 1
        cube[x][y][zp] -= 1
        cube[xp][y][z] -= 1
        cube[xp][y][zp] += 1
        cube[x][yp][z] -= 1
        cube[x][yp][zp] += 1
        cube[xp][yp][z] += 1
        cube[xp][yp][zp] -= 1
        if cube[xp][yp][zp] == -1:
            improper = (xp, yp, zp)
        else:
            improper = None
            done += 1


def _cube_of(square: Square) -> list[list[list[int]]]:
    n = len(square)
    cube = [[[0] * n for _ in range(n)] for _ in range(n)]
    for r in range(n):
        for c in range(n):
            cube[r][c][square[r][c]] = 1
    return cube


def _square_of(cube: list[list[list[int]]]) -> Square:
    n = len(cube)
    return tuple(
        tuple(next(s for s in range(n) if cube[r][c][s] == 1) for c in range(n))
        for r in range(n))


def default_steps(n: int) -> int:
    """Walk length used when the caller does not pin one: several multiples
    of n^3 proper states, comfortably past observed mixing at these orders."""
    return 5 * n ** 3


def jm_sample(n: int, steps: int | None = None, seed: int = 0) -> Square:
    """One random Latin square: the +-1 walk started at the cyclic square,
    run for `steps` proper states.  Fixed seed, fixed output; steps=0
    returns the cyclic square itself."""
    if n < 2:
        raise ValueError("order must be >= 2")
    if steps is None:
        steps = default_steps(n)
    rng = Random(f"jm|{seed}")
    cube = _cube_of(cyclic_square(n))
    _walk(cube, n, steps, rng)
    return _square_of(cube)


def jm_samples(n: int, count: int, steps: int | None = None, seed: int = 0) -> list[Square]:
    """Independent chains with per-chain seeds derived from (seed, index);
    the result is the same whatever parallelism runs the chains."""
    return [jm_sample(n, steps, seed=f"{seed}#{i}") for i in range(count)]


@dataclass
class MinimizeResult:
    square: Square
    count: int
    ratio: float          # count / n^4, compared against the 3 - o(1) floor
    proposals: int
    restarts: int


def minimize_cuboctahedra(n: int, budget: int = 400, seed: int = 0,
                          stall_limit: int = 80) -> MinimizeResult:
    """Seeded local search: propose one walk segment to the next proper
    square, accept when the count does not increase, restart on long
    stalls.  Reports the best square found; no lower-bound claim is made."""
    if n < 2:
        raise ValueError("order must be >= 2")
    rng = Random(f"min|{seed}")
    cur = jm_sample(n, default_steps(n), seed=f"{seed}|start")
    cur_count = count_cuboctahedra(cur)
    best, best_count = cur, cur_count
    stall = 0
    restarts = 0
    for _ in range(budget):
        cube = _cube_of(cur)
        _walk(cube, n, 1, rng)
        cand = _square_of(cube)
        cand_count = count_cuboctahedra(cand)
        if cand_count <= cur_count:
            if cand_count < cur_count:
                stall = 0
            cur, cur_count = cand, cand_count
            if cand_count < best_count:
                best, best_count = cand, cand_count
        else:
            stall += 1
        if stall >= stall_limit:
            restarts += 1
            cur = jm_sample(n, default_steps(n), seed=f"{seed}|restart{restarts}")
            cur_count = count_cuboctahedra(cur)
            stall = 0
    return MinimizeResult(best, best_count, best_count / n ** 4, budget, restarts)
