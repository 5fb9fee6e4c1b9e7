"""Laurent expansions of rational functions at places of GF(2^k)(t).

At a finite place p of degree d we extend constants to the residue field
L = GF(2^k)[t]/(p), pick the root theta = t mod p, and expand in the
uniformizer u = t - theta; at infinity the uniformizer is u = 1/t.  Residues of
differentials do not depend on the uniformizer, so these expansions are enough
for residue calculus.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2k as P
from .fields import FieldElement, Place, RationalFunctionField

START_PRECISION = 16
MAX_PRECISION = 1024


class InsufficientPrecision(ArithmeticError):
    pass


class ResidueField:
    """GF(2^k)[t]/(p) for a monic irreducible p; elements are packed polys."""

    def __init__(self, K: RationalFunctionField, p: int):
        self.K = K
        self.F = K.gf
        self.p = p
        self.degree = P.pdeg(self.F, p)

    def __eq__(self, other):
        return isinstance(other, ResidueField) and (self.K, self.p) == (other.K, other.p)

    def __hash__(self):
        return hash((self.K, self.p))

    def __repr__(self):
        return f"GF({self.F.order}^{self.degree})"

    @property
    def theta(self) -> int:
        return P.pmod(self.F, P.pmake(self.F, [0, 1]), self.p)

    def mul(self, a: int, b: int) -> int:
        return P.pmod(self.F, P.pmul(self.F, a, b), self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in residue field")
        return P.pinvmod(self.F, a, self.p)

    def trace(self, a: int) -> int:
        """Absolute trace down to GF(2), as 0 or 1."""
        s, x = 0, a
        for _ in range(self.F.k * self.degree):
            s ^= x
            x = self.mul(x, x)
        assert s in (0, 1)
        return s

    def format(self, a: int) -> str:
        return P.pformat(self.F, a, "theta")


def _series_inverse(L: ResidueField, c: list[int], n: int) -> list[int]:
    """First n coefficients of 1/c for a power series c with c[0] != 0."""
    inv0 = L.inv(c[0])
    out = [0] * n
    for i in range(n):
        s = 1 if i == 0 else 0
        for j in range(1, min(i, len(c) - 1) + 1):
            if c[j] and out[i - j]:
                s ^= L.mul(c[j], out[i - j])
        out[i] = L.mul(s, inv0)
    return out


def _shift_poly(L: ResidueField, f: int) -> list[int]:
    """Coefficients (in L) of f(theta + u) as a polynomial in u."""
    F = L.F
    th = L.theta
    r: list[int] = []
    for a in reversed(P.pcoeffs(F, f)):
        # r <- r * (theta + u) + a
        nr = [0] * (len(r) + 1)
        for i, c in enumerate(r):
            if c:
                nr[i] ^= L.mul(c, th)
                nr[i + 1] ^= c
        nr[0] ^= a
        r = nr
    while r and r[-1] == 0:
        r.pop()
    return r


@dataclass(frozen=True)
class LaurentSeries:
    """sum_{i} coeffs[i] u^(low + i) + O(u^(low + precision)).

    A zero known to the given precision is represented with no coefficients.
    """

    field: ResidueField
    low: int
    coeffs: tuple[int, ...]
    precision: int

    @property
    def order_bound(self) -> int:
        """Exponent of the O(...) term."""
        return self.low + self.precision

    def coefficient(self, e: int) -> int:
        if e >= self.order_bound:
            raise InsufficientPrecision(f"coefficient of u^{e} unknown (known below u^{self.order_bound})")
        i = e - self.low
        if i < 0 or i >= len(self.coeffs):
            return 0
        return self.coeffs[i]

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return self.low + i
        return None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = self.low + i
                cs = self.field.format(c)
                mono = "1" if e == 0 else ("u" if e == 1 else f"u^{e}")
                if mono == "1":
                    terms.append(cs)
                elif cs == "1":
                    terms.append(mono)
                else:
                    terms.append(f"({cs})*{mono}")
        terms.append(f"O(u^{self.order_bound})")
        return " + ".join(terms)


def _local_data(v: Place, x: FieldElement):
    """Residue field and numerator/denominator in the local coordinate u."""
    K = v.field
    F = K.gf
    n, d = K(x).v
    if v.poly is None:
        # t = 1/u: n(1/u)/d(1/u) = u^(deg d - deg n) * rev(n)/rev(d)
        L = ResidueField(K, P.pmake(F, [0, 1]))
        rn = P.pmake(F, list(reversed(P.pcoeffs(F, n))))
        rd = P.pmake(F, list(reversed(P.pcoeffs(F, d))))
        return L, _shift_poly(L, rn), _shift_poly(L, rd), P.pdeg(F, d) - P.pdeg(F, n)
    L = ResidueField(K, v.poly)
    return L, _shift_poly(L, n), _shift_poly(L, d), 0


def complete_at(x: FieldElement, v: Place, precision: int = START_PRECISION) -> LaurentSeries:
    """Laurent expansion of x at v with `precision` coefficients from its valuation."""
    L, num, den, extra = _local_data(v, x)
    if not num:
        return LaurentSeries(L, 0, (), precision)
    vn = next(i for i, c in enumerate(num) if c)
    vd = next(i for i, c in enumerate(den) if c)
    num, den = num[vn:], den[vd:]
    inv = _series_inverse(L, den, precision)
    out = [0] * precision
    for i, a in enumerate(num[:precision]):
        if a:
            for j in range(precision - i):
                if inv[j]:
                    out[i + j] ^= L.mul(a, inv[j])
    return LaurentSeries(L, vn - vd + extra, tuple(out), precision)


def derivative(x: FieldElement) -> FieldElement:
    K = x.field
    F = K.gf
    n, d = x.v
    num = P.pmul(F, P.pderiv(F, n), d) ^ P.pmul(F, n, P.pderiv(F, d))
    return K.frac(num, P.pmul(F, d, d))


def residue_dt(h: FieldElement, v: Place) -> int:
    """res_v(h dt) as a residue-field element (packed poly mod p)."""
    if h.is_zero():
        return 0
    target = -1
    if v.poly is None:
        # h dt = h(1/u) u^-2 du
        target = 1
    precision = START_PRECISION
    while True:
        s = complete_at(h, v, precision)
        try:
            return s.coefficient(target)
        except InsufficientPrecision:
            if precision >= MAX_PRECISION:
                raise
            precision *= 2


def residue(f: FieldElement, g: FieldElement, v: Place, logarithmic: bool = True) -> int:
    """Residue at v of f * dg/g (or of f * dg when logarithmic is False)."""
    K = v.field
    g = K(g)
    h = K(f) * derivative(g)
    if logarithmic:
        h = h / g
    return residue_dt(h, v)


def residue_field(v: Place) -> ResidueField:
    K = v.field
    if v.poly is None:
        return ResidueField(K, P.pmake(K.gf, [0, 1]))
    return ResidueField(K, v.poly)


def log_residue_trace(f: FieldElement, g: FieldElement, v: Place) -> int:
    """Tr_{k_v/GF(2)} res_v(f dg/g)."""
    return residue_field(v).trace(residue(f, g, v))
