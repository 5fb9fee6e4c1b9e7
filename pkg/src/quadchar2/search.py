"""Bounded exact searches driven by GF(2)-linear algebra.

The class of x in K/wp(K) is additive in x, and z -> c*z^2 is additive in z,
so equations of the form  x0 + sum_i c_i z_i^2 in wp(K)  with z_i ranging over
a finite GF(2)-space are solved by Gaussian elimination instead of
enumeration.  Only GF(2^k) and GF(2^k)(t) have computable class coordinates;
other fields go through their rational model when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2k as P
from .fields import (
    FieldElement,
    FiniteField,
    RationalFunctionField,
    wp_class_keys,
)
from .linalg import KeyIndex, gf2_solve

DEFAULT_DEGREE_SLACK = 4
ESCALATIONS = 2


def default_budget(elements) -> int:
    """2 * (max coefficient degree) + 4."""
    m = 0
    for x in elements:
        if not x.is_zero():
            m = max(m, x.field.degree(x))
    return 2 * m + DEFAULT_DEGREE_SLACK


def support_radical(K: RationalFunctionField, elements) -> int:
    """Product of the monic irreducibles dividing any numerator or denominator."""
    F = K.gf
    polys = set()
    for x in elements:
        x = K(x)
        if x.is_zero():
            continue
        for f in x.v:
            if P.pdeg(F, f) > 0:
                polys.update(p for p, _ in P.factor(F, f))
    D = 1
    for p in sorted(polys):
        D = P.pmul(F, D, p)
    return D


MAX_AUXILIARY_PLACES = 12


def small_irreducibles(F, max_degree: int, limit: int) -> list[int]:
    """Monic irreducibles over GF(2^k) in increasing order, at most `limit` of them."""
    out = []
    for d in range(1, max_degree + 1):
        for c in range(F.order ** d):
            p = c | (1 << (d * F.k))
            if P.is_irreducible(F, p):
                out.append(p)
                if len(out) >= limit:
                    return out
    return out


def search_space(K, elements, budget: int, level: int = 0) -> list[FieldElement]:
    """A GF(2)-basis of a finite space of candidate values.

    Over GF(2^k)(t): f / D with deg f <= deg D + budget, where D is the support
    radical of `elements` to the power level+1 times the first few monic
    irreducibles of degree <= level+1 (auxiliary places; global solutions often
    need a pole away from the support).  Over GF(2^k): a GF(2)-basis of the field.
    """
    if isinstance(K, FiniteField):
        return [FieldElement(K, 1 << i) for i in range(K.k)]
    F = K.gf
    R = support_radical(K, elements)
    D = 1
    for _ in range(level + 1):
        D = P.pmul(F, D, R)
    for p in small_irreducibles(F, level + 1, MAX_AUXILIARY_PLACES):
        if P.pmod(F, R, p):
            D = P.pmul(F, D, p)
    top = P.pdeg(F, D) + budget
    out = []
    for j in range(top + 1):
        for s in range(F.k):
            out.append(K.frac(P.pmonomial(F, 1 << s, j), D))
    return out


@dataclass
class AffineSolution:
    mask: int
    witness: FieldElement


def wp_affine_solve(target: FieldElement, gens: list[FieldElement]) -> AffineSolution | None:
    """Find a subset S of gens and w with w^2 + w = target + sum(S)."""
    K = target.field
    idx = KeyIndex()
    t_keys = wp_class_keys(target)
    if t_keys is None:
        raise TypeError(f"no class coordinates over {K}")
    t_vec = idx.encode(t_keys)
    vecs = [idx.encode(wp_class_keys(g)) for g in gens]
    mask = gf2_solve(vecs, t_vec)
    if mask is None:
        return None
    total = target
    for i, g in enumerate(gens):
        if mask >> i & 1:
            total = total + g
    w = K.wp_witness(total)
    assert w is not None
    return AffineSolution(mask, w)


def combine(basis: list[FieldElement], mask: int, zero: FieldElement) -> FieldElement:
    s = zero
    for i, b in enumerate(basis):
        if mask >> i & 1:
            s = s + b
    return s


def solve_weighted_squares(
    target: FieldElement, weights: list[FieldElement], basis: list[FieldElement]
) -> tuple[list[FieldElement], FieldElement] | None:
    """Find z_i in span(basis) and w with w^2 + w = target + sum_i weights[i] z_i^2."""
    K = target.field
    gens = []
    for c in weights:
        for b in basis:
            gens.append(c * b * b)
    sol = wp_affine_solve(target, gens)
    if sol is None:
        return None
    n = len(basis)
    zs = [combine(basis, (sol.mask >> (i * n)) & ((1 << n) - 1), K.zero) for i in range(len(weights))]
    return zs, sol.witness


def norm_search(a: FieldElement, b: FieldElement, budget: int | None = None, levels: int = ESCALATIONS + 1):
    """Bounded search for x, y with x^2 + x*y + a*y^2 = b.

    Returns (x, y) or None.  Works over GF(2^k) and GF(2^k)(t).
    """
    K = a.field
    b = K(b)
    if b.is_zero():
        return K.zero, K.zero
    r = b.sqrt()
    if r is not None:
        return r, K.zero
    w = K.wp_witness(a)
    if w is not None:
        # the norm form splits: (x + w y)(x + w y + y) = b with x + w y = 1
        y = b + 1
        return 1 + w * y, y
    if budget is None:
        budget = default_budget([a, b])
    # y = 1/z:  (x/y)^2 + (x/y) + a = b z^2
    for level in range(levels):
        basis = search_space(K, [a, b], budget, level)
        got = solve_weighted_squares(a, [b], basis)
        if got is not None:
            (z,), w = got
            y = z.inverse()
            x = w * y
            assert x * x + x * y + a * y * y == b
            return x, y
        if isinstance(K, FiniteField):
            break
    return None
