"""Finite fields GF(2^k) and univariate polynomials over them.

Field elements are ints whose bits are the coordinates in the polynomial
basis modulo a fixed irreducible polynomial.  Polynomials over GF(2^k) are
packed into a single int as well, ``k`` bits per coefficient, lowest degree
in the lowest bits.  Addition of either kind of object is xor.
"""

from __future__ import annotations

import random
from functools import lru_cache


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit vectors."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def _is_irreducible_gf2(m: int) -> bool:
    d = m.bit_length() - 1
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if q.bit_length() - 1 > d // 2:
            break
        if _gf2_mod(m, q) == 0:
            return False
    return True


def _gf2_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


@lru_cache(maxsize=None)
def default_modulus(k: int) -> int:
    """Smallest irreducible polynomial of degree k over GF(2), as an int."""
    for m in range(1 << k, 1 << (k + 1)):
        if _is_irreducible_gf2(m):
            return m
    raise ValueError(f"no irreducible polynomial of degree {k}")


class GF2k:
    """The field GF(2^k) = GF(2)[w]/(modulus)."""

    def __init__(self, k: int, modulus: int | None = None):
        if k < 1:
            raise ValueError("k must be positive")
        if modulus is None:
            modulus = default_modulus(k)
        if modulus.bit_length() - 1 != k or not _is_irreducible_gf2(modulus):
            raise ValueError(f"{modulus:#b} is not an irreducible polynomial of degree {k}")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self._table = None
        self._inv = None
        if k <= 6:
            self._table = [[self._mul(a, b) for b in range(self.order)] for a in range(self.order)]
            self._inv = [0] + [self.pow(a, self.order - 2) for a in range(1, self.order)]

    def __eq__(self, other):
        return isinstance(other, GF2k) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self):
        return hash(("GF2k", self.k, self.modulus))

    def __repr__(self):
        return f"GF(2^{self.k})"

    def _mul(self, a: int, b: int) -> int:
        return _gf2_mod(clmul(a, b), self.modulus)

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[a][b]
        return self._mul(a, b)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.sqr(a)
            n >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^k)")
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.order - 2)

    def sqrt(self, a: int) -> int:
        """Unique square root; Frobenius is bijective on a finite field."""
        return self.pow(a, self.order >> 1)

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2)."""
        t, x = 0, a
        for _ in range(self.k):
            t ^= x
            x = self.sqr(x)
        return t

    def elements(self):
        return range(self.order)

    def trace_one(self) -> int:
        """Smallest element of absolute trace 1."""
        for a in range(1, self.order):
            if self.trace(a) == 1:
                return a
        raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def gf(k: int) -> GF2k:
    return GF2k(k)


# ---------------------------------------------------------------------------
# packed polynomials over GF(2^k)


def pdeg(F: GF2k, p: int) -> int:
    if p == 0:
        return -1
    return (p.bit_length() - 1) // F.k


def pcoef(F: GF2k, p: int, i: int) -> int:
    return (p >> (i * F.k)) & (F.order - 1)


def pcoeffs(F: GF2k, p: int) -> list[int]:
    return [pcoef(F, p, i) for i in range(pdeg(F, p) + 1)]


def pmake(F: GF2k, coeffs) -> int:
    r = 0
    for i, c in enumerate(coeffs):
        r |= c << (i * F.k)
    return r


def plead(F: GF2k, p: int) -> int:
    return pcoef(F, p, pdeg(F, p))


def pmonomial(F: GF2k, c: int, n: int) -> int:
    return c << (n * F.k)


def _unit_mask(F: GF2k, p: int) -> int:
    """Int with bit 0 of every k-bit chunk of p set."""
    n = pdeg(F, p) + 1
    return ((1 << (F.k * n)) - 1) // (F.order - 1)


def pscale(F: GF2k, p: int, c: int) -> int:
    if c == 0 or p == 0:
        return 0
    if c == 1:
        return p
    # bit-sliced: c*x = sum_j x_j * (c*w^j); a plane of chunk bits times a
    # k-bit constant never overlaps neighbouring chunks
    mask = _unit_mask(F, p)
    r = 0
    for j in range(F.k):
        plane = (p >> j) & mask
        if plane:
            r ^= plane * F.mul(c, 1 << j)
    return r


def pmul(F: GF2k, a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    if F.k == 1:
        return clmul(a, b)
    if a == 1:
        return b
    if b == 1:
        return a
    if a.bit_length() < b.bit_length():
        a, b = b, a
    # schoolbook over the coefficients of the shorter factor b
    mask = _unit_mask(F, a)
    planes = [(a >> j) & mask for j in range(F.k)]
    r = 0
    k = F.k
    i = 0
    top = F.order - 1
    while b:
        c = b & top
        if c:
            if c == 1:
                r ^= a << (i * k)
            else:
                s = 0
                for j in range(k):
                    if planes[j]:
                        s ^= planes[j] * F.mul(c, 1 << j)
                r ^= s << (i * k)
        b >>= k
        i += 1
    return r


def pdivmod(F: GF2k, a: int, m: int) -> tuple[int, int]:
    if m == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dm = pdeg(F, m)
    if F.k == 1:
        q = 0
        bl = m.bit_length()
        while a.bit_length() >= bl:
            s = a.bit_length() - bl
            q |= 1 << s
            a ^= m << s
        return q, a
    k = F.k
    inv_lead = F.inv(m >> (dm * k))
    table = F._table
    q = 0
    multiples: dict[int, int] = {}
    shift = dm * k
    while True:
        bl = a.bit_length()
        if bl <= shift:
            return q, a
        da = (bl - 1) // k
        lead = a >> (da * k)
        c = table[lead][inv_lead] if table is not None else F.mul(lead, inv_lead)
        s = (da - dm) * k
        q |= c << s
        mc = multiples.get(c)
        if mc is None:
            mc = multiples[c] = pscale(F, m, c)
        a ^= mc << s


def pmod(F: GF2k, a: int, m: int) -> int:
    return pdivmod(F, a, m)[1]


def pmonic(F: GF2k, p: int) -> tuple[int, int]:
    """Return (monic p, leading coefficient)."""
    if p == 0:
        return 0, 0
    c = plead(F, p)
    return pscale(F, p, F.inv(c)), c


def pgcd(F: GF2k, a: int, b: int) -> int:
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)[0]


def pxgcd(F: GF2k, a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*a + v*b = g monic."""
    r0, r1, u0, u1, v0, v1 = a, b, 1, 0, 0, 1
    while r1:
        q, r = pdivmod(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 ^ pmul(F, q, u1)
        v0, v1 = v1, v0 ^ pmul(F, q, v1)
    if r0 == 0:
        return 0, 0, 0
    c = F.inv(plead(F, r0))
    return pscale(F, r0, c), pscale(F, u0, c), pscale(F, v0, c)


def pinvmod(F: GF2k, a: int, m: int) -> int:
    g, u, _ = pxgcd(F, a, m)
    if g != 1:
        raise ZeroDivisionError("not invertible modulo m")
    return pmod(F, u, m)


def ppowmod(F: GF2k, a: int, n: int, m: int) -> int:
    r = 1
    a = pmod(F, a, m)
    while n:
        if n & 1:
            r = pmod(F, pmul(F, r, a), m)
        a = pmod(F, pmul(F, a, a), m)
        n >>= 1
    return pmod(F, r, m)


def pderiv(F: GF2k, p: int) -> int:
    cs = pcoeffs(F, p)
    return pmake(F, [cs[i] if i % 2 == 1 else 0 for i in range(1, len(cs))])


def psplit(F: GF2k, p: int) -> tuple[int, int]:
    """Return (e, o) with p = e^2 + t*o^2."""
    cs = pcoeffs(F, p)
    e = pmake(F, [F.sqrt(c) for c in cs[0::2]])
    o = pmake(F, [F.sqrt(c) for c in cs[1::2]])
    return e, o


def psqrt(F: GF2k, p: int) -> int | None:
    e, o = psplit(F, p)
    return e if o == 0 else None


def psquare(F: GF2k, p: int) -> int:
    return pmake(F, [x for c in pcoeffs(F, p) for x in (F.sqr(c), 0)][:max(0, 2 * pdeg(F, p) + 1)])


def peval(F: GF2k, p: int, x: int) -> int:
    r = 0
    for c in reversed(pcoeffs(F, p)):
        r = F.mul(r, x) ^ c
    return r


def pcompose_x_plus(F: GF2k, p: int, c: int) -> int:
    """p(t + c)."""
    r = 0
    lin = pmake(F, [c, 1])
    for a in reversed(pcoeffs(F, p)):
        r = pmul(F, r, lin) ^ a
    return r


def pformat(F: GF2k, p: int, var: str = "t", gen: str = "w") -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(pdeg(F, p), -1, -1):
        c = pcoef(F, p, i)
        if c == 0:
            continue
        cs = format_gf(F, c, gen)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(cs)
        elif c == 1:
            terms.append(mono)
        elif "+" in cs:
            terms.append(f"({cs})*{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms)


def format_gf(F: GF2k, c: int, gen: str = "w") -> str:
    if c in (0, 1):
        return str(c)
    terms = []
    for i in range(F.k - 1, -1, -1):
        if (c >> i) & 1:
            terms.append("1" if i == 0 else (gen if i == 1 else f"{gen}^{i}"))
    return " + ".join(terms)


# ---------------------------------------------------------------------------
# factorization


def squarefree_decomposition(F: GF2k, f: int) -> list[tuple[int, int]]:
    """Monic f = prod g_i^{e_i} with g_i squarefree and pairwise coprime."""
    f = pmonic(F, f)[0]
    out: list[tuple[int, int]] = []

    def rec(f: int, mult: int):
        if pdeg(F, f) <= 0:
            return
        d = pderiv(F, f)
        if d == 0:
            rec(psqrt(F, f), 2 * mult)
            return
        c = pgcd(F, f, d)
        w = pdivmod(F, f, c)[0]
        i = 1
        while pdeg(F, w) > 0:
            y = pgcd(F, w, c)
            z = pdivmod(F, w, y)[0]
            if pdeg(F, z) > 0:
                out.append((z, i * mult))
            i += 1
            w = y
            c = pdivmod(F, c, y)[0]
        if pdeg(F, c) > 0:
            rec(psqrt(F, c), 2 * mult)

    rec(f, 1)
    return out


def _distinct_degree(F: GF2k, f: int) -> list[tuple[int, int]]:
    out = []
    x = pmake(F, [0, 1])
    h = x
    i = 0
    while pdeg(F, f) >= 2 * (i + 1):
        i += 1
        h = ppowmod(F, h, F.order, f)
        g = pgcd(F, h ^ x, f)
        if g != 1:
            out.append((g, i))
            f = pdivmod(F, f, g)[0]
            h = pmod(F, h, f)
    if pdeg(F, f) > 0:
        out.append((f, pdeg(F, f)))
    return out


def _equal_degree(F: GF2k, f: int, d: int, rng: random.Random) -> list[int]:
    n = pdeg(F, f)
    if n == d:
        return [f]
    while True:
        r = pmake(F, [rng.randrange(F.order) for _ in range(n)])
        if pdeg(F, r) < 1:
            continue
        tr, x = 0, r
        for _ in range(F.k * d):
            tr ^= x
            x = pmod(F, pmul(F, x, x), f)
        g = pgcd(F, tr, f)
        if 0 < pdeg(F, g) < n:
            h = pdivmod(F, f, g)[0]
            return _equal_degree(F, g, d, rng) + _equal_degree(F, pmonic(F, h)[0], d, rng)


@lru_cache(maxsize=65536)
def factor(F: GF2k, f: int) -> tuple[tuple[int, int], ...]:
    """Factor a nonzero polynomial into monic irreducibles with multiplicities.

    The leading constant is dropped.  Output sorted by (degree, value).
    """
    if f == 0:
        raise ValueError("cannot factor 0")
    rng = random.Random(0x5EED)
    out: dict[int, int] = {}
    for g, e in squarefree_decomposition(F, f):
        for h, d in _distinct_degree(F, g):
            for p in _equal_degree(F, h, d, rng):
                out[p] = out.get(p, 0) + e
    return tuple(sorted(out.items(), key=lambda pe: (pdeg(F, pe[0]), pe[0])))


def is_irreducible(F: GF2k, f: int) -> bool:
    if pdeg(F, f) < 1:
        return False
    fs = factor(F, f)
    return len(fs) == 1 and fs[0][1] == 1
