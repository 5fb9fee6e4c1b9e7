"""Exact arithmetic in towers of fields of characteristic 2.

A tower starts at GF(2^k), optionally adjoins a transcendental ``t``, and then
stacks at most three quadratic steps, each either inseparable (adjoin a square
root of a non-square) or Artin-Schreier (adjoin a root of X^2 + X = a with a
not in the image of the Artin-Schreier map).

Every field works on raw values (ints, tuples) and wraps them in
:class:`FieldElement` for the public API.  Values are kept in canonical form
so that equality of raw values is equality of elements.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import gf2k as P
from .gf2k import GF2k

MAX_EXTENSION_STEPS = 3


class FieldError(ValueError):
    pass


class TowerMismatch(FieldError):
    pass


class UnsupportedTower(FieldError):
    pass


class FieldElement:
    __slots__ = ("field", "v")

    def __init__(self, field: "Field", v):
        self.field = field
        self.v = v

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            if self.field.extends(other.field):
                return self.field.embed(other)
            raise TowerMismatch(f"{other.field} vs {self.field}")
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _promote(self, other):
        """Pick the common field for a binary operation."""
        if isinstance(other, FieldElement) and other.field != self.field and other.field.extends(self.field):
            return other.field.embed(self), other
        o = self._coerce(other)
        if o is NotImplemented:
            return None, None
        return self, o

    def __add__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.field, a.field.add(a.v, b.v))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.field, a.field.mul(a.v, b.v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.field, a.field.mul(a.v, a.field.inv(b.v)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = self.field.one
        x = self
        while n:
            if n & 1:
                r = r * x
            x = x * x
            n >>= 1
        return r

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.v))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            try:
                a, b = self._promote(other)
            except TowerMismatch:
                return False
            return a.v == b.v
        return self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return not self.field.is_zero(self.v)

    def is_zero(self) -> bool:
        return self.field.is_zero(self.v)

    def __repr__(self):
        return self.field.format(self.v)

    __str__ = __repr__

    def sqrt(self) -> "FieldElement | None":
        r = self.field.sqrt(self.v)
        return None if r is None else FieldElement(self.field, r)

    def wp(self) -> "FieldElement":
        """x^2 + x."""
        return self * self + self


class Field:
    """Common interface; subclasses implement raw arithmetic."""

    depth = 0
    below: "Field | None" = None

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self.raw_zero)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self.raw_one)

    def from_int(self, n: int) -> FieldElement:
        return self.one if n % 2 else self.zero

    def __call__(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field == self:
                return x
            return self.embed(x)
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot convert {x!r} into {self}")

    def extends(self, other: "Field") -> bool:
        f = self
        while f is not None:
            if f == other:
                return True
            f = f.below
        return False

    def chain(self) -> list["Field"]:
        """Fields from the ground field up to self."""
        out = []
        f = self
        while f is not None:
            out.append(f)
            f = f.below
        return out[::-1]

    def embed(self, x: FieldElement) -> FieldElement:
        if x.field == self:
            return x
        if self.below is None or not self.extends(x.field):
            raise TowerMismatch(f"{x.field} is not a subfield of {self}")
        y = self.below.embed(x)
        return FieldElement(self, self.lift_raw(y.v))

    def is_zero(self, v) -> bool:
        return v == self.raw_zero

    def sqrt(self, v):
        """Square root of a raw value, or None when v is not a square."""
        u, w = self.frob_split(v)
        if w is not None and not self.is_zero(w):
            return None
        return u

    def is_square(self, x: FieldElement):
        return self.sqrt(x.v) is not None

    @property
    def is_perfect(self) -> bool:
        return False

    def wp_witness(self, x: FieldElement) -> FieldElement | None:
        """Some w with w^2 + w = x, or None if x is not in the image."""
        r = self.wp_solve(x.v)
        return None if r is None else FieldElement(self, r)

    def in_wp(self, x: FieldElement) -> bool:
        return self.wp_solve(x.v) is not None

    def base_finite(self) -> "FiniteField":
        return self.chain()[0]

    def rational_base(self) -> "RationalFunctionField | None":
        for f in self.chain():
            if isinstance(f, RationalFunctionField):
                return f
        return None


# ---------------------------------------------------------------------------


class FiniteField(Field):
    def __init__(self, k: int, modulus: int | None = None):
        self.gf = GF2k(k, modulus) if modulus is not None else P.gf(k)
        self.k = k
        self.raw_zero = 0
        self.raw_one = 1

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.gf == other.gf

    def __hash__(self):
        return hash(("FF", self.gf))

    def __repr__(self):
        return f"GF({self.gf.order})"

    @property
    def is_perfect(self):
        return True

    @property
    def generator(self) -> FieldElement:
        return FieldElement(self, 2 if self.k > 1 else 1)

    def add(self, u, v):
        return u ^ v

    def mul(self, u, v):
        return self.gf.mul(u, v)

    def inv(self, u):
        return self.gf.inv(u)

    def lift_raw(self, v):
        raise TowerMismatch("GF(2^k) is the ground field")

    def frob_split(self, v):
        return self.gf.sqrt(v), None

    def format(self, v):
        return P.format_gf(self.gf, v)

    def elements(self):
        return [FieldElement(self, a) for a in self.gf.elements()]

    def random(self, rng: random.Random, degree: int = 0) -> FieldElement:
        return FieldElement(self, rng.randrange(self.gf.order))

    def wp_solve(self, v):
        return _gf_wp_solve(self.gf, v)

    def degree(self, x: FieldElement) -> int:
        return 0

    def wp_reduce(self, x: FieldElement) -> tuple[FieldElement, FieldElement]:
        c = 0 if self.gf.trace(x.v) == 0 else self.gf.trace_one()
        w = _gf_wp_solve(self.gf, x.v ^ c)
        return FieldElement(self, c), FieldElement(self, w)


@lru_cache(maxsize=None)
def _gf_wp_table(F: GF2k):
    # images of the basis vectors under x -> x^2 + x, as rows for elimination
    return [F.sqr(1 << i) ^ (1 << i) for i in range(F.k)]


def _gf_wp_solve(F: GF2k, v: int):
    if F.trace(v) != 0:
        return None
    rows = [(img, 1 << i) for i, img in enumerate(_gf_wp_table(F))]
    # reduce v against an echelon basis of the image, tracking preimages
    basis: list[tuple[int, int]] = []
    for img, pre in rows:
        for b_img, b_pre in basis:
            if img ^ b_img < img:
                img, pre = img ^ b_img, pre ^ b_pre
        if img:
            basis.append((img, pre))
            basis.sort(reverse=True)
    target, w = v, 0
    for b_img, b_pre in basis:
        if target ^ b_img < target:
            target, w = target ^ b_img, w ^ b_pre
    if target:
        return None
    return w


# ---------------------------------------------------------------------------


class RationalFunctionField(Field):
    """GF(2^k)(var); raw values are (numerator, monic denominator) packed polys."""

    def __init__(self, base: FiniteField, var: str = "t"):
        self.base = base
        self.below = base
        self.gf = base.gf
        self.var = var
        self.raw_zero = (0, 1)
        self.raw_one = (1, 1)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and self.base == other.base and self.var == other.var

    def __hash__(self):
        return hash(("RFF", self.base, self.var))

    def __repr__(self):
        return f"{self.base}({self.var})"

    def embed(self, x):
        if x.field == self:
            return x
        if x.field == self.base:
            return FieldElement(self, (x.v, 1))
        raise TowerMismatch(f"{x.field} is not a subfield of {self}")

    def extends(self, other):
        return other == self or other == self.base

    def chain(self):
        return [self.base, self]

    @property
    def below_finite(self):
        return self.base

    @property
    def gen(self) -> FieldElement:
        return FieldElement(self, (P.pmake(self.gf, [0, 1]), 1))

    def poly(self, p: int) -> FieldElement:
        return FieldElement(self, (p, 1))

    def frac(self, n: int, d: int) -> FieldElement:
        return FieldElement(self, self.norm(n, d))

    def norm(self, n: int, d: int):
        F = self.gf
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if n == 0:
            return (0, 1)
        g = P.pgcd(F, n, d)
        if g != 1:
            n = P.pdivmod(F, n, g)[0]
            d = P.pdivmod(F, d, g)[0]
        lc = P.plead(F, d)
        if lc != 1:
            c = F.inv(lc)
            n, d = P.pscale(F, n, c), P.pscale(F, d, c)
        return (n, d)

    def add(self, u, v):
        F = self.gf
        (a, b), (c, d) = u, v
        if b == d:
            if b == 1:
                return (a ^ c, 1)
            return self.norm(a ^ c, b)
        return self.norm(P.pmul(F, a, d) ^ P.pmul(F, c, b), P.pmul(F, b, d))

    def mul(self, u, v):
        F = self.gf
        (a, b), (c, d) = u, v
        if a == 0 or c == 0:
            return (0, 1)
        if b == 1 and d == 1:
            return (P.pmul(F, a, c), 1)
        return self.norm(P.pmul(F, a, c), P.pmul(F, b, d))

    def inv(self, u):
        a, b = u
        if a == 0:
            raise ZeroDivisionError("division by zero in rational function field")
        return self.norm(b, a)

    def frob_split(self, v):
        F = self.gf
        n, d = v
        e, o = P.psplit(F, P.pmul(F, n, d))
        return self.norm(e, d), self.norm(o, d)

    @property
    def pbasis(self):
        return self.gen.v

    def format(self, v):
        n, d = v
        ns = P.pformat(self.gf, n, self.var)
        if d == 1:
            return ns
        ds = P.pformat(self.gf, d, self.var)
        if " " in ns:
            ns = f"({ns})"
        if " " in ds or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def random(self, rng: random.Random, degree: int = 2, proper_fraction_rate: float = 0.3) -> FieldElement:
        F = self.gf
        n = P.pmake(F, [rng.randrange(F.order) for _ in range(degree + 1)])
        d = 1
        if degree > 0 and rng.random() < proper_fraction_rate:
            dd = rng.randint(1, degree)
            d = P.pmake(F, [rng.randrange(F.order) for _ in range(dd)] + [1])
        return FieldElement(self, self.norm(n, d))

    def wp_solve(self, v):
        c, w = self.wp_reduce(FieldElement(self, v))
        return w.v if c.is_zero() else None

    def wp_reduce(self, x: FieldElement) -> tuple[FieldElement, FieldElement]:
        return _rff_wp_reduce(self, x.v)

    def subs_square(self, v) -> tuple[int, int]:
        """Raw value with var replaced by var^2 (not normalized across fields)."""
        n, d = v
        return (_inflate(self.gf, n), _inflate(self.gf, d))

    def degree(self, x: FieldElement) -> int:
        n, d = x.v
        return max(P.pdeg(self.gf, n), P.pdeg(self.gf, d))


def _inflate(F: GF2k, p: int) -> int:
    return P.pmake(F, [x for c in P.pcoeffs(F, p) for x in (c, 0)][: max(0, 2 * P.pdeg(F, p) + 1)])


def sqrt_mod(F: GF2k, c: int, p: int) -> int:
    """Square root of c modulo an irreducible p over GF(2^k)."""
    pe, po = P.psplit(F, p)
    st = P.pmod(F, P.pmul(F, pe, P.pinvmod(F, po, p)), p) if po else 0
    ce, co = P.psplit(F, P.pmod(F, c, p))
    return P.pmod(F, ce ^ P.pmul(F, co, st), p)


def partial_fractions(F: GF2k, n: int, d: int):
    """n/d = poly + sum_p sum_i digits[p][i] / p^i with deg digit < deg p.

    Returns (poly, {p: {order: digit}}) over the monic irreducible factors of d.
    """
    q, r = P.pdivmod(F, n, d)
    out: dict[int, dict[int, int]] = {}
    if r == 0:
        return q, out
    for p, e in P.factor(F, d):
        pe = 1
        for _ in range(e):
            pe = P.pmul(F, pe, p)
        m = P.pdivmod(F, d, pe)[0]
        rp = P.pmod(F, P.pmul(F, P.pmod(F, r, pe), P.pinvmod(F, P.pmod(F, m, pe), pe)), pe)
        digits = {}
        j = 0
        while rp:
            rp, c = P.pdivmod(F, rp, p)
            if c:
                digits[e - j] = c
            j += 1
        if digits:
            out[p] = digits
    return q, out


def _rff_wp_core(K: RationalFunctionField, v):
    """Shared reduction: (remaining digits, poly coeffs, constant part, witness)."""
    F = K.gf
    n, d = v
    poly, parts = partial_fractions(F, n, d)
    witness = K.zero
    for p, digits in parts.items():
        top = max(digits)
        for i in range(top, 0, -1):
            c = digits.get(i, 0)
            if c == 0 or i % 2:
                continue
            m = i // 2
            cr = sqrt_mod(F, c, p)
            r = P.pdivmod(F, P.pmul(F, cr, cr) ^ c, p)[0]
            digits[i] = 0
            digits[i - 1] = digits.get(i - 1, 0) ^ r
            digits[m] = digits.get(m, 0) ^ cr
            witness = witness + K.frac(cr, _ppow(F, p, m))
    cs = P.pcoeffs(F, poly)
    for i in range(len(cs) - 1, 0, -1):
        c = cs[i]
        if c and i % 2 == 0:
            s = F.sqrt(c)
            cs[i] = 0
            cs[i // 2] ^= s
            witness = witness + K.poly(P.pmonomial(F, s, i // 2))
    c0 = cs[0] if cs else 0
    cc, cw = K.base.wp_reduce(FieldElement(K.base, c0))
    witness = witness + K.embed(cw)
    return parts, cs, cc, witness


def _rff_wp_reduce(K: RationalFunctionField, v):
    F = K.gf
    parts, cs, cc, witness = _rff_wp_core(K, v)
    canon = K.zero
    for p, digits in parts.items():
        for i, c in digits.items():
            if c:
                canon = canon + K.frac(c, _ppow(F, p, i))
    for i in range(1, len(cs)):
        if cs[i]:
            canon = canon + K.poly(P.pmonomial(F, cs[i], i))
    return canon + K.embed(cc), witness


def _bits(x: int):
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


def wp_class_keys(x: FieldElement) -> frozenset | None:
    """Coordinates over GF(2) of the class of x in K/wp(K).

    Only available for GF(2^k) and GF(2^k)(t); the map x -> keys is additive,
    so classes can be combined by symmetric difference.  None elsewhere.
    """
    K = x.field
    if isinstance(K, FiniteField):
        c, _ = K.wp_reduce(x)
        return frozenset() if c.is_zero() else frozenset({("c",)})
    if not isinstance(K, RationalFunctionField):
        return None
    parts, cs, cc, _ = _rff_wp_core(K, x.v)
    keys = set()
    for p, digits in parts.items():
        for i, c in digits.items():
            if c:
                keys.update((p, i, b) for b in _bits(c))
    for i in range(1, len(cs)):
        if cs[i]:
            keys.update(("t", i, b) for b in _bits(cs[i]))
    if not cc.is_zero():
        keys.add(("c",))
    return frozenset(keys)


def _ppow(F, p, m):
    r = 1
    for _ in range(m):
        r = P.pmul(F, r, p)
    return r


# ---------------------------------------------------------------------------


INSEPARABLE = "sqrt"
ARTIN_SCHREIER = "as"


class QuadraticExtension(Field):
    """below(delta) with delta^2 = param (inseparable) or delta^2 + delta = param."""

    def __init__(self, below: Field, kind: str, param: FieldElement, check: bool = True):
        if kind not in (INSEPARABLE, ARTIN_SCHREIER):
            raise FieldError(f"unknown extension kind {kind!r}")
        param = below(param)
        steps = sum(1 for f in below.chain() if isinstance(f, QuadraticExtension))
        if steps >= MAX_EXTENSION_STEPS:
            raise UnsupportedTower(f"towers are limited to {MAX_EXTENSION_STEPS} quadratic steps")
        if check:
            if kind == INSEPARABLE:
                if param.is_zero() or below.is_square(param):
                    raise FieldError(f"{param} is a square in {below}; adj_sqrt needs a non-square")
            elif below.in_wp(param):
                raise FieldError(f"{param} lies in the Artin-Schreier image of {below}")
        self.below = below
        self.kind = kind
        self.param = param
        self.index = steps + 1
        self.depth = below.depth + 1
        z, o = below.raw_zero, below.raw_one
        self.raw_zero = (z, z)
        self.raw_one = (o, z)
        self._key = (below, kind, param.v)

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and self._key == other._key

    def __hash__(self):
        return hash(("QE", self._key))

    @property
    def gen_name(self) -> str:
        return f"{self.kind}#{self.index}"

    def __repr__(self):
        op = "adj_sqrt" if self.kind == INSEPARABLE else "adj_as"
        return f"{self.below}.{op}({self.param})"

    @property
    def is_perfect(self):
        return self.below.is_perfect

    @property
    def separable(self) -> bool:
        return self.kind == ARTIN_SCHREIER

    @property
    def gen(self) -> FieldElement:
        return FieldElement(self, (self.below.raw_zero, self.below.raw_one))

    def make(self, c0: FieldElement, c1: FieldElement) -> FieldElement:
        return FieldElement(self, (self.below(c0).v, self.below(c1).v))

    def coords(self, x: FieldElement) -> tuple[FieldElement, FieldElement]:
        x = self(x)
        return FieldElement(self.below, x.v[0]), FieldElement(self.below, x.v[1])

    def lift_raw(self, v):
        return (v, self.below.raw_zero)

    def in_below(self, x: FieldElement) -> bool:
        return self.below.is_zero(self(x).v[1])

    def lower(self, x: FieldElement) -> FieldElement:
        """x as an element of the field below; x must lie there."""
        if not self.in_below(x):
            raise TowerMismatch(f"{x} does not lie in {self.below}")
        return FieldElement(self.below, self(x).v[0])

    def add(self, u, v):
        B = self.below
        return (B.add(u[0], v[0]), B.add(u[1], v[1]))

    def mul(self, u, v):
        B = self.below
        a0, a1 = u
        b0, b1 = v
        p = self.param.v
        x00 = B.mul(a0, b0)
        x11 = B.mul(a1, b1)
        cross = B.add(B.mul(a0, b1), B.mul(a1, b0))
        if self.kind == INSEPARABLE:
            return (B.add(x00, B.mul(p, x11)), cross)
        return (B.add(x00, B.mul(p, x11)), B.add(cross, x11))

    def norm_raw(self, u):
        B = self.below
        a0, a1 = u
        p = self.param.v
        n = B.add(B.mul(a0, a0), B.mul(p, B.mul(a1, a1)))
        if self.kind == ARTIN_SCHREIER:
            n = B.add(n, B.mul(a0, a1))
        return n

    def norm(self, x: FieldElement) -> FieldElement:
        return FieldElement(self.below, self.norm_raw(self(x).v))

    def conj_raw(self, u):
        if self.kind == INSEPARABLE:
            return u
        B = self.below
        return (B.add(u[0], u[1]), u[1])

    def inv(self, u):
        B = self.below
        n = self.norm_raw(u)
        if B.is_zero(n):
            raise ZeroDivisionError("division by zero in quadratic extension")
        ni = B.inv(n)
        c = self.conj_raw(u)
        return (B.mul(c[0], ni), B.mul(c[1], ni))

    @property
    def pbasis(self):
        if self.is_perfect:
            return None
        if self.kind == INSEPARABLE:
            return self.gen.v
        return self.lift_raw(self.below.pbasis)

    def _below_sqrt_inside(self, X):
        """Some u in self with u^2 = X for X raw in below (inseparable step)."""
        B = self.below
        X0, X1 = B.frob_split(X)
        b0, b1 = B.frob_split(self.param.v)
        if X1 is None or B.is_zero(X1):
            return (X0, B.raw_zero)
        Bc = B.mul(X1, B.inv(b1))
        A = B.add(X0, B.mul(b0, Bc))
        return (A, Bc)

    def frob_split(self, v):
        B = self.below
        X, Y = v
        if self.kind == INSEPARABLE:
            return self._below_sqrt_inside(X), self._below_sqrt_inside(Y)
        a = self.param.v
        Y0, Y1 = B.frob_split(Y)
        R = B.add(X, B.mul(a, B.mul(Y0, Y0)))
        if Y1 is not None:
            R = B.add(R, B.mul(B.pbasis, B.mul(a, B.mul(Y1, Y1))))
        R0, R1 = B.frob_split(R)
        u = (R0, Y0)
        if R1 is None:
            return u, None
        return u, (R1, Y1)

    def wp_solve(self, v):
        B = self.below
        if self.kind == INSEPARABLE:
            sq = self.mul(v, v)
            w = B.wp_solve(sq[0])
            if w is None:
                return None
            return self.add(v, self.lift_raw(w))
        X, Y = v
        w1 = B.wp_solve(Y)
        if w1 is None:
            return None
        a = self.param.v
        for cand in (w1, B.add(w1, B.raw_one)):
            w0 = B.wp_solve(B.add(X, B.mul(a, B.mul(cand, cand))))
            if w0 is not None:
                return (w0, cand)
        return None

    def format(self, v):
        B = self.below
        c0, c1 = v
        parts = []
        if not B.is_zero(c0):
            parts.append(B.format(c0))
        if not B.is_zero(c1):
            s = B.format(c1)
            if s == "1":
                parts.append(self.gen_name)
            else:
                if " " in s or "/" in s:
                    s = f"({s})"
                parts.append(f"{s}*{self.gen_name}")
        return " + ".join(parts) if parts else "0"

    def random(self, rng: random.Random, degree: int = 2) -> FieldElement:
        B = self.below
        return FieldElement(self, (B.random(rng, degree).v, B.random(rng, degree).v))

    def degree(self, x: FieldElement) -> int:
        c0, c1 = self.coords(x)
        return max(self.below.degree(c0), self.below.degree(c1))


# ---------------------------------------------------------------------------
# rational models of purely inseparable towers over GF(2^k)(t)


@dataclass(frozen=True)
class RationalModel:
    """An isomorphism from a tower field onto GF(2^k)(u).

    Purely inseparable towers over GF(2^k)(t) are again rational function
    fields: adjoining sqrt(b) to GF(2^k)(t) gives GF(2^k)(sqrt(t)).
    """

    source: Field
    target: RationalFunctionField

    def __call__(self, x: FieldElement) -> FieldElement:
        return _model_map(self.source, self.target, self.source(x))

    def inverse(self, y: FieldElement) -> FieldElement:
        """Map an element of the model back into the tower field."""
        R = self.target
        n, d = R(y).v
        xi = _model_generator_preimage(self.source)
        return _eval_poly(R.gf, n, xi) / _eval_poly(R.gf, d, xi)


def _eval_poly(F: GF2k, p: int, x: FieldElement) -> FieldElement:
    K = x.field
    acc = K.zero
    base = K.base_finite()
    for c in reversed(P.pcoeffs(F, p)):
        acc = acc * x + K.embed(FieldElement(base, c))
    return acc


@lru_cache(maxsize=None)
def _model_generator_preimage(K: Field) -> FieldElement:
    """The element of K sent to the generator of its rational model."""
    if isinstance(K, RationalFunctionField):
        return K.gen
    inner = rational_model(K.below)
    below_pre = inner.inverse(inner.target.gen)
    r = K.embed(below_pre).sqrt()
    assert r is not None
    return r


def rational_model(K: Field) -> RationalModel | None:
    if isinstance(K, RationalFunctionField):
        return RationalModel(K, K)
    if isinstance(K, QuadraticExtension) and K.kind == INSEPARABLE and not K.is_perfect:
        inner = rational_model(K.below)
        if inner is None:
            return None
        target = RationalFunctionField(inner.target.base, f"u{K.index}")
        return RationalModel(K, target)
    return None


def _model_map(K: Field, R: RationalFunctionField, x: FieldElement) -> FieldElement:
    if isinstance(K, RationalFunctionField):
        return FieldElement(R, x.v)
    inner = rational_model(K.below)
    Ri = inner.target
    X, Y = K.coords(x)
    Xi, Yi = inner(X), inner(Y)
    b0, b1 = Ri.frob_split(inner(K.param).v)
    u = R.gen

    def up(v):
        n, d = Ri.subs_square(v)
        return R.frac(n, d)

    root = up(b0) + up(b1) * u
    return up(Xi.v) + up(Yi.v) * root


def place_key(p):
    return (1 << 62, 0) if p is None else (p.bit_length(), p)


# ---------------------------------------------------------------------------
# places of GF(2^k)(t)


@dataclass(frozen=True)
class Place:
    """A closed point of the projective line: monic irreducible poly, or infinity."""

    field: RationalFunctionField
    poly: int | None

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else P.pdeg(self.field.gf, self.poly)

    def sort_key(self):
        if self.poly is None:
            return (1, 0, 0)
        return (0, self.degree, self.poly)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        if self.poly is None:
            return "inf"
        return P.pformat(self.field.gf, self.poly, self.field.var)

    def valuation(self, x: FieldElement) -> int:
        F = self.field.gf
        n, d = self.field(x).v
        if n == 0:
            raise FieldError("valuation of 0")
        if self.poly is None:
            return P.pdeg(F, d) - P.pdeg(F, n)
        return _mult(F, n, self.poly) - _mult(F, d, self.poly)


def _mult(F, f, p):
    m = 0
    while True:
        q, r = P.pdivmod(F, f, p)
        if r:
            return m
        f, m = q, m + 1


def infinity(K: RationalFunctionField) -> Place:
    return Place(K, None)


def enumerate_places(elements) -> list[Place]:
    """Zeros and poles of the given nonzero elements, plus infinity."""
    elements = list(elements)
    if not elements:
        raise FieldError("no elements given")
    K = elements[0].field
    if not isinstance(K, RationalFunctionField):
        raise UnsupportedTower("places are only enumerated over GF(2^k)(t)")
    polys = set()
    for x in elements:
        x = K(x)
        if x.is_zero():
            raise FieldError("zero element has no divisor")
        n, d = x.v
        for f in (n, d):
            if P.pdeg(K.gf, f) > 0:
                polys.update(p for p, _ in P.factor(K.gf, f))
    places = [Place(K, p) for p in polys]
    places.append(infinity(K))
    return sorted(places)


def make_place(K: RationalFunctionField, p: int | None) -> Place:
    if p is not None:
        p = P.pmonic(K.gf, p)[0]
        if not P.is_irreducible(K.gf, p):
            raise FieldError("place polynomial must be irreducible")
    return Place(K, p)


