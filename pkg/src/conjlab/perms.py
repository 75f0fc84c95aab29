"""Permutation patterns (classical and gapped), inversion statistics, and
order-shattering counts.

Permutations are tuples of the integers 1..n in one-line notation, e.g.
``(3, 1, 2)``.  A pattern is a permutation of 1..k with an optional gap
marker: the text form ``"4 _ 1 3 2"`` denotes the pattern 4132 whose
occurrences must leave a hole of at least one position between the first
and second matched entries.

Exhaustive scans over S_n are refused above EXHAUSTION_LIMIT (override per
call); they are exact, never sampled.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from random import Random
from typing import Callable, Iterable, Sequence

from .errors import CapExceeded

EXHAUSTION_LIMIT = 11


# ---------------------------------------------------------------------------
# basic permutation helpers
# ---------------------------------------------------------------------------

def is_permutation(seq: Sequence[int]) -> bool:
    """True iff seq is a permutation of 1..len(seq).

    >>> is_permutation((3, 1, 2)), is_permutation((1, 1, 2))
    (True, False)
    """
    n = len(seq)
    return len(set(seq)) == n and all(1 <= v <= n for v in seq)


def parse_permutation(text: str) -> tuple[int, ...]:
    perm = tuple(int(tok) for tok in text.split())
    if not is_permutation(perm):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {text!r}")
    return perm


def format_permutation(perm: Sequence[int]) -> str:
    return " ".join(str(v) for v in perm)


def inversions(perm: Sequence[int]) -> int:
    """Number of index pairs i < j with perm[i] > perm[j].

    >>> inversions((2, 1, 4, 3))
    2
    """
    n = len(perm)
    return sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))


def reverse(perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(perm))


# ---------------------------------------------------------------------------
# patterns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Pattern:
    """A classical pattern (box is None) or a pattern with one gap marker.

    ``box = t`` means an occurrence x_1 < ... < x_k must satisfy
    x_{t+1} - x_t > 1 (1-based slots): the t-th and (t+1)-th matched
    positions may not be adjacent.
    """

    values: tuple[int, ...]
    box: int | None = None

    def __post_init__(self):
        if not is_permutation(self.values):
            raise ValueError(f"pattern values must be a permutation of 1..k: {self.values}")
        if self.box is not None and not 1 <= self.box < len(self.values):
            raise ValueError(f"box position {self.box} out of range for length {len(self.values)}")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse "4 _ 1 3 2" (one optional "_" gap marker)."""
        tokens = text.split()
        box = None
        values = []
        for tok in tokens:
            if tok == "_":
                if box is not None:
                    raise ValueError(f"more than one gap marker in {text!r}")
                box = len(values)
            else:
                values.append(int(tok))
        pat = cls(tuple(values), box)
        return pat

    @property
    def k(self) -> int:
        return len(self.values)

    def classical(self) -> "Pattern":
        """The same pattern with the gap requirement dropped."""
        return Pattern(self.values, None)

    def __str__(self) -> str:
        toks = [str(v) for v in self.values]
        if self.box is not None:
            toks.insert(self.box, "_")
        return " ".join(toks)


def _occurrence(perm: Sequence[int], pattern: Pattern,
                pin_last: bool = False) -> tuple[int, ...] | None:
    """Backtracking search for one occurrence; returns 0-based positions.

    With pin_last the final pattern slot must land on the last position of
    perm (used for incremental prefix scans).
    """
    vals = pattern.values
    k = len(vals)
    n = len(perm)
    if k == 0:
        return ()
    if k > n:
        return None
    # gap constraint between 0-based slots box-1 and box
    gap_at = pattern.box  # slots (gap_at - 1, gap_at) 1-based -> 0-based (box-1, box)
    pos = [0] * k

    def extend(slot: int, start: int) -> bool:
        if slot == k:
            return True
        if slot == k - 1 and pin_last:
            lo, hi = n - 1, n
        else:
            lo, hi = start, n - (k - 1 - slot)
        for p in range(lo, hi):
            if gap_at is not None and slot == gap_at and p - pos[slot - 1] < 2:
                continue
            v = perm[p]
            ok = True
            for j in range(slot):
                if (v > perm[pos[j]]) != (vals[slot] > vals[j]):
                    ok = False
                    break
            if ok:
                pos[slot] = p
                if extend(slot + 1, p + 1):
                    return True
        return False

    return tuple(pos) if extend(0, 0) else None


def contains(perm: Sequence[int], pattern: Pattern) -> bool:
    """True iff perm contains the pattern (gap constraint included).

    >>> contains((5, 2, 3, 4, 1), Pattern.parse("3 1 _ 2"))
    True
    """
    return _occurrence(perm, pattern) is not None


def find_occurrence(perm: Sequence[int], pattern: Pattern) -> tuple[int, ...] | None:
    """One witnessing position tuple (0-based), or None."""
    return _occurrence(perm, pattern)


# ---------------------------------------------------------------------------
# exhaustive avoidance scans
# ---------------------------------------------------------------------------

def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise CapExceeded(
            f"n={n} exceeds the exhaustion limit {limit}; exact scans of S_n "
            f"this large are refused rather than sampled")


def _prefix_scan(n: int, pattern: Pattern,
                 leaf_fn: Callable[[list[int], int], None] | None = None,
                 first_values: Iterable[int] | None = None) -> list[int]:
    """Depth-first scan of value-prefixes of S_n, pruning any prefix that
    contains the pattern.  Returns counts[m] = number of pattern-avoiding
    sequences of m distinct values from 1..n (in particular counts[n] =
    av_n).  leaf_fn, if given, is called with (prefix, inversions) at every
    surviving full-length permutation.
    """
    counts = [0] * (n + 1)
    counts[0] = 1
    prefix: list[int] = []
    roots = list(first_values) if first_values is not None else range(1, n + 1)

    def rec(used: int, inv: int) -> None:
        m = len(prefix)
        counts[m] += 1
        if m == n:
            if leaf_fn is not None:
                leaf_fn(prefix, inv)
            return
        for v in range(1, n + 1):
            bit = 1 << (v - 1)
            if used & bit:
                continue
            prefix.append(v)
            if _occurrence(prefix, pattern, pin_last=True) is None:
                rec(used | bit, inv + (used >> v).bit_count())
            prefix.pop()

    for v in roots:
        bit = 1 << (v - 1)
        prefix.append(v)
        if _occurrence(prefix, pattern, pin_last=True) is None:
            rec(bit, 0)
        prefix.pop()
    return counts


def _scan_partition(args: tuple[int, tuple[int, ...], int | None, int]) -> list[int]:
    n, values, box, first = args
    return _prefix_scan(n, Pattern(values, box), first_values=[first])


def count_avoiders(n: int, pattern: Pattern, limit: int = EXHAUSTION_LIMIT,
                   threads: int = 1) -> int:
    """Exact number of permutations in S_n avoiding the pattern.

    threads > 1 partitions the scan by first value across processes; the
    per-partition counts are summed in fixed order, so the result is
    bit-identical for any degree of parallelism.
    """
    _check_limit(n, limit)
    if n == 0:
        return 1
    if threads <= 1:
        return _prefix_scan(n, pattern)[n]
    from concurrent.futures import ProcessPoolExecutor

    args = [(n, pattern.values, pattern.box, v) for v in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(_scan_partition, args))
    return sum(part[n] for part in parts)


def av_table(n_max: int, pattern: Pattern, limit: int = EXHAUSTION_LIMIT) -> list[int]:
    """[av_1, ..., av_{n_max}] from a single scan.

    A length-m prefix drawn from 1..n_max avoids the pattern iff its
    order-isomorphic permutation of 1..m does, so av_m = (number of
    avoiding m-prefixes) / C(n_max, m).
    """
    _check_limit(n_max, limit)
    counts = _prefix_scan(n_max, pattern)
    table = []
    for m in range(1, n_max + 1):
        total, binom = counts[m], math.comb(n_max, m)
        if total % binom:  # pragma: no cover - guards the divisibility argument
            raise AssertionError("prefix counts not divisible by binomial")
        table.append(total // binom)
    return table


@dataclass
class WilfReport:
    patterns: tuple[Pattern, ...]
    tables: dict[str, list[int]]       # str(pattern) -> av_1..av_n
    equal_per_n: list[bool]            # all given patterns agree at this n
    all_equal: bool


def wilf_check(n_max: int, patterns: Sequence[Pattern],
               limit: int = EXHAUSTION_LIMIT) -> WilfReport:
    """Avoidance tables for each pattern plus per-length equality flags."""
    tables = {str(p): av_table(n_max, p, limit) for p in patterns}
    rows = list(tables.values())
    equal = [len({row[i] for row in rows}) == 1 for i in range(n_max)]
    return WilfReport(tuple(patterns), tables, equal, all(equal))


#: Gap-aligned variants of the mutually Wilf-equivalent classical patterns
#: 1234, 1243 and 2143; conjecturally each triple is Wilf-equivalent.
ALIGNED_BOX_TRIPLES: tuple[tuple[Pattern, ...], ...] = tuple(
    tuple(Pattern(vals, box) for vals in ((1, 2, 3, 4), (1, 2, 4, 3), (2, 1, 4, 3)))
    for box in (1, 2, 3)
)


def aligned_triples_check(n_max: int, limit: int = EXHAUSTION_LIMIT) -> list[WilfReport]:
    """Run wilf_check on each of the three gap-aligned triples."""
    return [wilf_check(n_max, triple, limit) for triple in ALIGNED_BOX_TRIPLES]


# ---------------------------------------------------------------------------
# av(1324) statistics
# ---------------------------------------------------------------------------

PATTERN_1324 = Pattern((1, 3, 2, 4))


def avoiders_by_inversions(n: int, k_max: int | None = None,
                           limit: int = EXHAUSTION_LIMIT) -> list[int]:
    """b[k] = number of 1324-avoiding permutations of S_n with k inversions,
    for k = 0..k_max (default: the full range binom(n, 2))."""
    _check_limit(n, limit)
    full = math.comb(n, 2)
    if k_max is None:
        k_max = full
    b = [0] * (full + 1)

    def leaf(prefix, inv):
        b[inv] += 1

    _prefix_scan(n, PATTERN_1324, leaf_fn=leaf)
    return b[: k_max + 1]


@dataclass
class InversionTableReport:
    n_values: list[int]
    k_max: int
    rows: dict[int, list[int]]         # n -> b[0..k_max]
    row_sums_match: dict[int, bool]    # full-range sum equals av_n(1324)
    monotone: bool
    violations: list[tuple[int, int]]  # (n, k) with b[n+1][k] < b[n][k]


def inversion_table_report(n_max: int, k_max: int = 25,
                           limit: int = EXHAUSTION_LIMIT) -> InversionTableReport:
    """Inversion profile of av(1324) for n <= n_max with the monotonicity
    verdict b[n+1][k] >= b[n][k] and an independent row-sum cross-check."""
    rows, sums_ok = {}, {}
    for n in range(1, n_max + 1):
        full = avoiders_by_inversions(n, None, limit)
        rows[n] = full[: k_max + 1] + [0] * max(0, k_max + 1 - len(full))
        sums_ok[n] = sum(full) == count_avoiders(n, PATTERN_1324, limit)
    violations = [
        (n, k)
        for n in range(1, n_max)
        for k in range(k_max + 1)
        if rows[n + 1][k] < rows[n][k]
    ]
    return InversionTableReport(list(range(1, n_max + 1)), k_max, rows,
                                sums_ok, not violations, violations)


def growth_estimate(n_max: int, limit: int = EXHAUSTION_LIMIT) -> list[float]:
    """av_n(1324)^(1/n) for n = 1..n_max.

    Desk-scale estimates only: the conjectured limit e^(pi*sqrt(2/3)) ~
    13.002 is far beyond any exhaustively checkable length.
    """
    return [count_avoiders(n, PATTERN_1324, limit) ** (1.0 / n)
            for n in range(1, n_max + 1)]


# ---------------------------------------------------------------------------
# order shattering
# ---------------------------------------------------------------------------

def _validate_family(family: Sequence[Sequence[int]]) -> int:
    if not family:
        raise ValueError("empty family")
    n = len(family[0])
    for p in family:
        if len(p) != n or not is_permutation(p):
            raise ValueError("family members must be permutations of equal length")
    if len({tuple(p) for p in family}) != len(family):
        raise ValueError("family members must be pairwise distinct")
    return n


def shattered_ksets(family: Sequence[Sequence[int]], k: int) -> list[tuple[int, ...]]:
    """All k-subsets X of 1..n whose elements appear in every one of the k!
    relative orders somewhere in the family.

    >>> fam = [(1,2,3), (1,3,2), (2,1,3), (2,3,1), (3,1,2), (3,2,1)]
    >>> shattered_ksets(fam, 3)
    [(1, 2, 3)]
    """
    n = _validate_family(family)
    if k > n:
        raise ValueError(f"k={k} exceeds permutation length {n}")
    positions = [{v: i for i, v in enumerate(p)} for p in family]
    need = math.factorial(k)
    out = []
    for xs in itertools.combinations(range(1, n + 1), k):
        seen = set()
        for pos in positions:
            seen.add(tuple(sorted(xs, key=pos.__getitem__)))
            if len(seen) == need:
                out.append(xs)
                break
    return out


def shatter_count(family: Sequence[Sequence[int]], k: int = 3) -> int:
    return len(shattered_ksets(family, k))


@dataclass
class ShatterSearchResult:
    family: list[tuple[int, ...]]
    count: int
    evaluations: int
    restarts: int


def shatter_search(n: int, family_size: int = 6, budget: int = 20000,
                   seed: int = 0) -> ShatterSearchResult:
    """Seeded hill-climbing for a family of permutations of S_n shattering
    many triples.  Moves replace one member; scans run in lexicographic
    (member index, replacement) order and take the first improvement, so a
    fixed seed gives a fixed answer.  The returned count is a lower bound
    for the true maximum.
    """
    if n < 3:
        raise ValueError("need n >= 3 for triples")
    pool = sorted(itertools.permutations(range(1, n + 1)))
    if family_size > len(pool):
        raise ValueError("family size exceeds |S_n|")
    triples = list(itertools.combinations(range(1, n + 1), 3))
    order_ids = {p: i for i, p in enumerate(itertools.permutations(range(3)))}
    pattern_cache: dict[tuple[int, ...], list[int]] = {}

    def patterns(perm: tuple[int, ...]) -> list[int]:
        pats = pattern_cache.get(perm)
        if pats is None:
            pos = {v: i for i, v in enumerate(perm)}
            pats = []
            for xs in triples:
                order = sorted(range(3), key=lambda j: pos[xs[j]])
                rank = [0] * 3
                for appearance, j in enumerate(order):
                    rank[j] = appearance
                pats.append(1 << order_ids[tuple(rank)])
            pattern_cache[perm] = pats
        return pats

    evals = 0

    def value(fam: list[tuple[int, ...]]) -> int:
        nonlocal evals
        evals += 1
        masks = [patterns(p) for p in fam]
        full = 0
        for t in range(len(triples)):
            acc = 0
            for m in masks:
                acc |= m[t]
            full += acc == 0b111111
        return full

    rng = Random(f"shatter|{seed}")
    best_fam: list[tuple[int, ...]] = []
    best_val = -1
    restarts = 0
    while evals < budget:
        fam = sorted(rng.sample(pool, family_size))
        cur = value(fam)
        restarts += 1
        improved = True
        while improved and evals < budget:
            improved = False
            members = set(fam)
            for i in range(family_size):
                for q in pool:
                    if q in members:
                        continue
                    cand = fam[:i] + [q] + fam[i + 1:]
                    v = value(cand)
                    if v > cur:
                        fam, cur = sorted(cand), v
                        improved = True
                        break
                    if evals >= budget:
                        break
                if improved or evals >= budget:
                    break
        if cur > best_val:
            best_val, best_fam = cur, list(fam)
    return ShatterSearchResult(best_fam, best_val, evals, restarts)
