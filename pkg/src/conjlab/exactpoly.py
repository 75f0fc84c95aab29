"""Exact integer polynomial arithmetic: primitive pseudo-remainder sequences,
Sturm chains and real-root counting.  No floating point anywhere.

Polynomials are lists of ints, coefficient of x^i at index i, with no
trailing zeros (the zero polynomial is the empty list).
"""

from __future__ import annotations

import math
from typing import Sequence

Poly = list[int]


def normalize(coeffs: Sequence[int]) -> Poly:
    p = list(coeffs)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def derivative(p: Poly) -> Poly:
    return normalize([i * c for i, c in enumerate(p)][1:])


def content(p: Poly) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def primitive(p: Poly) -> Poly:
    g = content(p)
    return [c // g for c in p] if g > 1 else list(p)


def _pseudo_rem(f: Poly, g: Poly) -> tuple[Poly, int]:
    """Return (r, t) with r = lc(g)^t * (f mod g), t = reduction steps."""
    r = list(f)
    dg = degree(g)
    lg = g[-1]
    steps = 0
    while r and degree(r) >= dg:
        steps += 1
        shift = degree(r) - dg
        lead = r[-1]
        r = [c * lg for c in r]
        for i, gc in enumerate(g):
            r[i + shift] -= gc * lead
        r = normalize(r)
    return r, steps


def sturm_chain(p: Poly) -> list[Poly]:
    """Primitive Sturm chain of p: each entry is a positive rational multiple
    of the classical Sturm sequence entry, so sign variations agree."""
    chain = [primitive(normalize(p))]
    d = derivative(chain[0])
    if d:
        chain.append(primitive(d))
    while len(chain) >= 2 and degree(chain[-1]) >= 0:
        r, steps = _pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        # r = lc^steps * true remainder; flip so r is a positive multiple
        if chain[-1][-1] < 0 and steps % 2 == 1:
            r = [-c for c in r]
        chain.append(primitive([-c for c in r]))
        if degree(chain[-1]) == 0:
            break
    return chain


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(a * b < 0 for a, b in zip(signs, signs[1:]))


def count_distinct_real_roots(p: Poly) -> int:
    """Number of distinct real roots, by Sturm sign variations at -inf/+inf."""
    p = normalize(p)
    if not p:
        raise ValueError("zero polynomial")
    if degree(p) == 0:
        return 0
    chain = sturm_chain(p)
    at_pos = [q[-1] for q in chain]
    at_neg = [q[-1] if degree(q) % 2 == 0 else -q[-1] for q in chain]
    return _variations(at_neg) - _variations(at_pos)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Primitive gcd over the integers (sign-normalized to positive lead)."""
    a, b = primitive(normalize(f)), primitive(normalize(g))
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r, _ = _pseudo_rem(a, b)
        a, b = b, primitive(r) if r else []
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def exact_div(f: Poly, g: Poly) -> Poly:
    """Quotient f / g when g divides f over the rationals (integer result
    for primitive g dividing integer f, by Gauss's lemma)."""
    f = normalize(f)
    g = normalize(g)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    from fractions import Fraction

    rem = [Fraction(c) for c in f]
    q = [Fraction(0)] * (len(f) - len(g) + 1)
    dg = degree(g)
    lg = g[-1]
    for i in range(len(q) - 1, -1, -1):
        c = rem[i + dg] / lg
        q[i] = c
        if c:
            for j, gc in enumerate(g):
                rem[i + j] -= c * gc
    if any(rem):
        raise ValueError("polynomials do not divide exactly")
    if any(c.denominator != 1 for c in q):
        raise ValueError("non-integer quotient")
    return normalize([int(c) for c in q])


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'): same distinct roots, all simple."""
    p = primitive(normalize(p))
    g = poly_gcd(p, derivative(p))
    if degree(g) <= 0:
        return p
    return primitive(exact_div(p, g))


def is_real_rooted(coeffs: Sequence[int]) -> bool:
    """True iff every complex root of the polynomial is real.

    Roots at 0 are factored out first; the remaining polynomial is real-
    rooted iff its squarefree part has as many distinct real roots as its
    degree (multiplicities then attach to real roots only).

    >>> is_real_rooted([0, 2, 3, 1])   # x(x+1)(x+2)
    True
    >>> is_real_rooted([1, 0, 1])      # x^2 + 1
    False
    """
    p = normalize(coeffs)
    if not p:
        raise ValueError("zero polynomial")
    first = next(i for i, c in enumerate(p) if c != 0)
    p = p[first:]
    if degree(p) == 0:
        return True
    q = squarefree_part(p)
    return count_distinct_real_roots(q) == degree(q)
