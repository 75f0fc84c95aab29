import math

import pytest

from conjlab.exactpoly import (
    count_distinct_real_roots,
    exact_div,
    poly_gcd,
    squarefree_part,
    sturm_chain,
)
from conjlab.stirling import (
    assoc_stirling,
    assoc_stirling_by_enumeration,
    cycle_poly,
    fixed_point_free_count,
    is_log_concave,
    is_real_rooted,
    log_concavity_sweep,
    real_rooted_sweep,
    rth_order,
)


def test_recurrence_matches_enumeration():
    # oracle gate: the recurrence is not trusted until this passes
    for r in range(0, 5):
        for n in range(0, 8):
            for k in range(0, n + 1):
                assert assoc_stirling(n, k, r) == assoc_stirling_by_enumeration(n, k, r), (n, k, r)


def test_assoc_stirling_examples():
    assert assoc_stirling(3, 1, 2) == 2      # the two 3-cycles of S_3
    assert assoc_stirling(4, 2, 2) == 3      # fixed-point-free involutions of S_4
    for n in range(0, 9):
        assert assoc_stirling(n, n, 1) == 1  # identity only
    assert assoc_stirling(0, 0, 3) == 1
    assert assoc_stirling(5, 3, 2) == 0      # 3 cycles of length >= 2 need n >= 6
    with pytest.raises(ValueError):
        assoc_stirling(-1, 0, 1)


def test_row_sums():
    for n in range(0, 21):
        assert sum(assoc_stirling(n, k, 1) for k in range(n + 1)) == math.factorial(n)
    for n in range(0, 13):
        assert (sum(assoc_stirling(n, k, 2) for k in range(n + 1))
                == fixed_point_free_count(n))


def test_rth_order_shift():
    for n in range(0, 8):
        for k in range(0, n + 1):
            assert rth_order(n, k, 1) == assoc_stirling(n, k, 1)
    assert rth_order(2, 1, 2) == assoc_stirling(3, 1, 2) == 2
    assert rth_order(1, 1, 3) == 2
    with pytest.raises(ValueError):
        rth_order(2, 1, 0)


def test_cycle_poly():
    assert cycle_poly(1, 3).coeffs == (0, 2, 3, 1)   # x(x+1)(x+2)
    assert cycle_poly(4, 0).coeffs == (1,)
    for n in range(1, 8):
        coeffs = cycle_poly(2, n).coeffs
        assert coeffs[0] == 0
        assert all(c >= 0 for c in coeffs)


def test_is_log_concave():
    assert is_log_concave((1, 2, 1)) == (True, None)
    assert is_log_concave((1, 1, 2)) == (False, 1)
    assert is_log_concave((0, 1, 0, 1)) == (False, 2)   # internal zero
    assert is_log_concave(()) == (True, None)
    with pytest.raises(ValueError):
        is_log_concave((1, -1))


def test_sturm_machinery():
    # x^2 - 2: two real roots
    assert count_distinct_real_roots([-2, 0, 1]) == 2
    # x^2 + 1: none
    assert count_distinct_real_roots([1, 0, 1]) == 0
    # (x-1)^2 (x+2): two distinct
    p = [2, -3, 0, 1]
    assert count_distinct_real_roots(p) == 2
    assert squarefree_part(p) == [-2, 1, 1] or squarefree_part(p) == [2, 1, -1]
    # gcd((x-1)(x-2), (x-1)(x-3)) ~ (x-1)
    g = poly_gcd([2, -3, 1], [3, -4, 1])
    assert g == [-1, 1]
    assert exact_div([2, -3, 1], [-1, 1]) == [-2, 1]
    chain = sturm_chain([-2, 0, 1])
    assert chain[0] == [-2, 0, 1]


def test_is_real_rooted():
    assert is_real_rooted([0, 2, 3, 1])          # x(x+1)(x+2)
    assert not is_real_rooted([1, 0, 1])
    assert is_real_rooted([4, 4, 1])             # (x+2)^2, repeated real root
    assert is_real_rooted([5])
    assert not is_real_rooted([1, 1, 1, 1])      # x^3+x^2+x+1 = (x+1)(x^2+1)
    with pytest.raises(ValueError):
        is_real_rooted([0])


def test_real_rooted_implies_log_concave():
    # Newton's inequality consistency on the same coefficients
    for r in (1, 2):
        for n in range(1, 16):
            coeffs = cycle_poly(r, n).coeffs
            assert is_real_rooted(list(coeffs))
            assert is_log_concave(coeffs)[0]


def test_sweeps_small():
    assert real_rooted_sweep(1, 20) == (True, [])
    assert real_rooted_sweep(2, 15) == (True, [])
    assert log_concavity_sweep(3, 40) == (True, [])
    assert log_concavity_sweep(4, 40) == (True, [])
    assert log_concavity_sweep(5, 40) == (True, [])
