"""Cycle-counting Stirling numbers with a minimum cycle length, the shifted
higher-order variants, their generating polynomials, and log-concavity /
real-rootedness sweeps.  All arithmetic is exact.

assoc_stirling(n, k, r) counts permutations of n elements with exactly k
cycles, every cycle of length at least r.  The recurrence used is

    T(n, k) = (n-1) T(n-1, k) + C(n-1, r-1) (r-1)! T(n-r, k-1)

(remove element n: it sits inside a longer cycle, insertable after any of
the n-1 other elements, or it closes a cycle of length exactly r with r-1
chosen companions).  The recurrence is validated against direct enumeration
of S_n in the test and acceptance suites before any sweep trusts it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .exactpoly import is_real_rooted  # re-exported for callers

__all__ = [
    "assoc_stirling", "assoc_stirling_by_enumeration", "rth_order",
    "cycle_poly", "is_log_concave", "is_real_rooted",
    "fixed_point_free_count", "log_concavity_sweep", "real_rooted_sweep",
]

# per-r triangle cache: _rows[r][n][k] with k <= n // r
_rows: dict[int, list[list[int]]] = {}


def _table(r: int, n_max: int) -> list[list[int]]:
    rows = _rows.setdefault(r, [[1]])
    while len(rows) <= n_max:
        n = len(rows)
        width = n // r + 1
        row = [0] * width
        prev = rows[n - 1]
        for k in range(1, width):
            total = (n - 1) * (prev[k] if k < len(prev) else 0)
            if n - r >= 0:
                lower = rows[n - r]
                if 1 <= k and k - 1 < len(lower):
                    total += math.comb(n - 1, r - 1) * math.factorial(r - 1) * lower[k - 1]
            row[k] = total
        if n == 0:
            row[0] = 1
        rows.append(row)
    return rows


def assoc_stirling(n: int, k: int, r: int = 1) -> int:
    """Permutations of n with k cycles, all of length >= r (exact integer).

    r <= 1 places no constraint beyond "k cycles" (cycles always have
    length >= 1), giving the unsigned Stirling cycle numbers.
    """
    if n < 0 or k < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    r = max(r, 1)
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k * r > n:
        return 0
    rows = _table(r, n)
    row = rows[n]
    return row[k] if k < len(row) else 0


def assoc_stirling_by_enumeration(n: int, k: int, r: int = 1) -> int:
    """Oracle: count by listing S_n directly.  Only sensible for n <= 8."""
    r = max(r, 1)
    count = 0
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = 0
        ok = True
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            cycles += 1
            if length < r:
                ok = False
                break
        if ok and cycles == k:
            count += 1
    return count


def rth_order(n: int, k: int, r: int) -> int:
    """Shifted variant: value at (n, k) is assoc_stirling(n + (r-1)k, k, r)."""
    if r < 1:
        raise ValueError("order r must be >= 1")
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    return assoc_stirling(n + (r - 1) * k, k, r)


@dataclass(frozen=True)
class CyclePolynomial:
    r: int
    n: int
    coeffs: tuple[int, ...]  # coeffs[k] multiplies x^k

    def __str__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def cycle_poly(r: int, n: int) -> CyclePolynomial:
    """Generating polynomial sum_k rth_order(n, k, r) x^k (degree <= n)."""
    if r < 1:
        raise ValueError("order r must be >= 1")
    coeffs = [rth_order(n, k, r) for k in range(n + 1)]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return CyclePolynomial(r, n, tuple(coeffs))


def is_log_concave(coeffs) -> tuple[bool, int | None]:
    """Check a_k^2 >= a_{k-1} a_{k+1} on the positive support, which must be
    an interval (no internal zeros).  Returns (verdict, first bad index)."""
    support = [i for i, c in enumerate(coeffs) if c > 0]
    if any(c < 0 for c in coeffs):
        raise ValueError("coefficients must be nonnegative")
    if not support:
        return True, None
    lo, hi = support[0], support[-1]
    for i in range(lo, hi + 1):
        if coeffs[i] == 0:
            return False, i
    for i in range(lo + 1, hi):
        if coeffs[i] ** 2 < coeffs[i - 1] * coeffs[i + 1]:
            return False, i
    return True, None


def fixed_point_free_count(n: int) -> int:
    """Derangement-style count by inclusion-exclusion (independent of the
    Stirling recurrence; used as a row-sum cross-check)."""
    return sum((-1) ** i * math.comb(n, i) * math.factorial(n - i) for i in range(n + 1))


def log_concavity_sweep(r: int, n_max: int) -> tuple[bool, list[tuple[int, int]]]:
    """is_log_concave over c_{r,n} for n = 0..n_max; returns verdict and any
    (n, k) violations.  A violation is a finding, not an error."""
    bad = []
    for n in range(n_max + 1):
        ok, where = is_log_concave(cycle_poly(r, n).coeffs)
        if not ok:
            bad.append((n, where))
    return not bad, bad


def real_rooted_sweep(r: int, n_max: int) -> tuple[bool, list[int]]:
    """is_real_rooted over c_{r,n} for n = 1..n_max."""
    bad = [n for n in range(1, n_max + 1)
           if not is_real_rooted(list(cycle_poly(r, n).coeffs))]
    return not bad, bad
