"""Quaternion symbols [a, b) and classes in the 2-torsion of the Brauer group.

[a, b) is the algebra generated by i, j with i^2 + i = a, j^2 = b and
j i j^-1 = i + 1.  Over GF(2^k)(t) a class is trivial iff all its local
invariants vanish, and the invariant at a place v is

    inv_v [a, b) = Tr_{k_v / GF(2)} res_v(a * db / b).

Purely inseparable towers over GF(2^k)(t) are handled through their rational
model.  An Artin-Schreier extension M = K(alpha) of such a field is handled
for classes defined over K: the class dies in M exactly when every place with
a nonzero invariant is inert or ramified in M.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from . import gf2k as P
from .fields import (
    ARTIN_SCHREIER,
    INSEPARABLE,
    Field,
    FieldElement,
    FieldError,
    Place,
    QuadraticExtension,
    RationalFunctionField,
    enumerate_places,
    rational_model,
)
from .laurent import complete_at, log_residue_trace


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    reason: str
    certificate: object = None

    @property
    def yes(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def no(self) -> bool:
        return self.verdict is Verdict.NO

    @property
    def unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN


def _yes(reason, cert=None):
    return Decision(Verdict.YES, reason, cert)


def _no(reason, cert=None):
    return Decision(Verdict.NO, reason, cert)


def _unknown(reason, cert=None):
    return Decision(Verdict.UNKNOWN, reason, cert)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuaternionSymbol:
    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        a, b = self.a, self.b
        if a.field != b.field:
            if a.field.extends(b.field):
                object.__setattr__(self, "b", a.field(b))
            elif b.field.extends(a.field):
                object.__setattr__(self, "a", b.field(a))
            else:
                raise FieldError("symbol entries live in different fields")
        if self.b.is_zero():
            raise FieldError("[a, b) needs b != 0")

    @property
    def field(self) -> Field:
        return self.a.field

    def __repr__(self):
        return f"[{self.a}, {self.b})"

    def over(self, L: Field) -> "QuaternionSymbol":
        return QuaternionSymbol(L(self.a), L(self.b))

    def canonical(self) -> "QuaternionSymbol":
        """a reduced modulo wp, b reduced modulo squares where this is computable."""
        K = self.field
        a, b = self.a, self.b
        if isinstance(K, RationalFunctionField):
            a = K.wp_reduce(a)[0]
            b = squarefree_part(b)
        else:
            if K.in_wp(a):
                a = K.zero
            if K.is_square(b):
                b = K.one
            elif hasattr(K, "wp_reduce"):
                a = K.wp_reduce(a)[0]
        return QuaternionSymbol(a, b)

    def is_visibly_trivial(self) -> bool:
        K = self.field
        return self.a.is_zero() or K.is_square(self.b) or K.in_wp(self.a)


def squarefree_part(b: FieldElement) -> FieldElement:
    """Monic square-free representative of b modulo squares over GF(2^k)(t)."""
    K = b.field
    F = K.gf
    out = 1
    for f in b.v:
        if P.pdeg(F, f) > 0:
            for p, e in P.factor(F, f):
                if e % 2:
                    out = P.pmul(F, out, p)
    return K.poly(out)


@dataclass(frozen=True)
class BrauerClass:
    """Sum of quaternion symbols over one field."""

    field: Field
    symbols: tuple[QuaternionSymbol, ...] = ()

    def __post_init__(self):
        syms = tuple(s.over(self.field) if s.field != self.field else s for s in self.symbols)
        object.__setattr__(self, "symbols", syms)

    @classmethod
    def of(cls, *symbols: QuaternionSymbol, field: Field | None = None) -> "BrauerClass":
        if field is None:
            if not symbols:
                raise FieldError("empty class needs an explicit field")
            field = symbols[0].field
        return cls(field, tuple(symbols))

    def __add__(self, other: "BrauerClass") -> "BrauerClass":
        if other.field != self.field:
            raise FieldError(f"classes over {self.field} and {other.field}")
        return BrauerClass(self.field, self.symbols + other.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __repr__(self):
        if not self.symbols:
            return "0"
        return " + ".join(map(repr, self.symbols))


def as_class(x) -> BrauerClass:
    if isinstance(x, BrauerClass):
        return x
    if isinstance(x, QuaternionSymbol):
        return BrauerClass.of(x)
    raise TypeError(f"not a Brauer class: {x!r}")


@dataclass
class SymbolLengthCertificate:
    """A presentation of `target` by `symbols`, with the equality decision."""

    target: BrauerClass
    symbols: BrauerClass
    equality: Decision
    notes: list[str] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.symbols)


# ---------------------------------------------------------------------------
# local invariants over GF(2^k)(t)


def local_invariant(sym: QuaternionSymbol, v: Place) -> int:
    """inv_v [a, b) in {0, 1} (as an element of 1/2 Z / Z)."""
    K = sym.field
    if not isinstance(K, RationalFunctionField):
        raise FieldError("local invariants are computed over GF(2^k)(t)")
    a = K.wp_reduce(sym.a)[0]
    if a.is_zero():
        return 0
    return log_residue_trace(a, sym.b, v)


def support(cls: BrauerClass) -> list[Place]:
    """Places where some symbol of the class can have a nonzero invariant."""
    elems = []
    for s in cls.symbols:
        if not s.a.is_zero():
            elems.append(s.a)
        elems.append(s.b)
    if not elems:
        return []
    return enumerate_places(elems)


def invariants(cls: BrauerClass) -> dict[Place, int]:
    """Nonzero local invariants of the class (keys sorted by place)."""
    out = {}
    for v in support(cls):
        s = 0
        for sym in cls.symbols:
            s ^= local_invariant(sym, v)
        if s:
            out[v] = s
    return out


# ---------------------------------------------------------------------------
# moving classes between fields


def restrict_class(cls, L: Field) -> BrauerClass:
    cls = as_class(cls)
    if not L.extends(cls.field):
        raise FieldError(f"{L} does not contain {cls.field}")
    return BrauerClass(L, tuple(s.over(L) for s in cls.symbols))


def frobenius_map(cls) -> BrauerClass:
    """Br(K) -> Br(F), [x, y) -> [x^2, y^2) for K = F(sqrt b)."""
    cls = as_class(cls)
    K = cls.field
    if not (isinstance(K, QuadraticExtension) and K.kind == INSEPARABLE):
        raise FieldError("Frobenius descent needs an inseparable quadratic step")
    syms = tuple(QuaternionSymbol(K.lower(s.a * s.a), K.lower(s.b * s.b)) for s in cls.symbols)
    return BrauerClass(K.below, syms)


def _model_class(cls: BrauerClass):
    m = rational_model(cls.field)
    if m is None:
        return None
    return BrauerClass(m.target, tuple(QuaternionSymbol(m(s.a), m(s.b)) for s in cls.symbols))


def _in_field(x: FieldElement, K: Field) -> bool:
    L = x.field
    while L != K:
        if not isinstance(L, QuadraticExtension) or not L.in_below(x):
            return False
        x = L.lower(x)
        L = L.below
    return True


def _lower_to(x: FieldElement, K: Field) -> FieldElement:
    while x.field != K:
        x = x.field.lower(x)
    return x


def local_wp_member(a: FieldElement, v: Place) -> bool:
    """Whether a lies in wp(K_v) for the completion K_v of GF(2^k)(t) at v."""
    K = a.field
    c = K.wp_reduce(a)[0]
    if c.is_zero():
        return True
    if v.valuation(c) < 0:
        # the canonical representative has only odd-order poles
        return False
    from .laurent import residue_field

    val = complete_at(c, v, 1).coefficient(0)
    return residue_field(v).trace(val) == 0


# ---------------------------------------------------------------------------
# decisions


def split_test(x, search: bool = True) -> Decision:
    """Decide whether a symbol or class is trivial in the Brauer group.

    Where no complete method applies, a single symbol falls back to an
    isotropy search on its norm form (disabled with search=False).
    """
    cls = as_class(x)
    K = cls.field
    syms = [s for s in cls.symbols if not s.is_visibly_trivial()]
    if not syms:
        return _yes("every symbol is visibly trivial")
    cls = BrauerClass(K, tuple(syms))
    if K.is_perfect:
        return _yes("the Brauer group of a finite field is trivial")
    if isinstance(K, RationalFunctionField):
        inv = invariants(cls)
        if inv:
            return _no("nonzero local invariants", inv)
        return _yes("all local invariants vanish", {})
    model = _model_class(cls)
    if model is not None:
        d = split_test(model, search)
        return Decision(d.verdict, f"via rational model {model.field}: {d.reason}", d.certificate)
    if isinstance(K, QuadraticExtension) and K.kind == ARTIN_SCHREIER:
        d = _split_over_as(cls, K)
        if not d.unknown:
            return d
    if search and len(cls) == 1:
        return _split_by_pfister_search(cls.symbols[0])
    return _unknown(f"no complete Brauer decision over {K}")


def _split_over_as(cls: BrauerClass, M: QuadraticExtension) -> Decision:
    K = M.below
    if not all(_in_field(s.a, K) and _in_field(s.b, K) for s in cls.symbols):
        return _unknown("class is not defined over the field below the Artin-Schreier step")
    m = rational_model(K)
    if m is None:
        return _unknown(f"{K} has no rational model")
    C = BrauerClass(m.target, tuple(QuaternionSymbol(m(_lower_to(s.a, K)), m(_lower_to(s.b, K))) for s in cls.symbols))
    inv = invariants(C)
    ap = m(M.param)
    split_places = [v for v in inv if local_wp_member(ap, v)]
    if split_places:
        return _no("nonzero invariant at a place split in the Artin-Schreier extension", split_places)
    return _yes("every place with nonzero invariant is inert or ramified in the extension", list(inv))


def _split_by_pfister_search(sym: QuaternionSymbol) -> Decision:
    from .forms import QuadraticForm, is_isotropic

    phi = QuadraticForm.pfister([sym.b], sym.a)
    iso = is_isotropic(phi)
    if iso.yes:
        return _yes("norm form is isotropic", iso.certificate)
    if iso.no:
        return _no("norm form is anisotropic", iso.certificate)
    return _unknown("isotropy search of the norm form exhausted its budget")


def class_equal(A, B) -> Decision:
    A, B = as_class(A), as_class(B)
    if A.field != B.field:
        raise FieldError("classes over different fields")
    d = split_test(A + B)
    return Decision(d.verdict, d.reason, d.certificate)


def symbol_simplify(x) -> BrauerClass:
    """Drop trivial symbols and merge symbols sharing a slot."""
    cls = as_class(x)
    K = cls.field
    syms = [s.canonical() for s in cls.symbols]
    syms = [s for s in syms if not s.is_visibly_trivial()]
    changed = True
    while changed:
        changed = False
        for i in range(len(syms)):
            for j in range(i + 1, len(syms)):
                si, sj = syms[i], syms[j]
                merged = None
                if si.b == sj.b:
                    merged = QuaternionSymbol(si.a + sj.a, si.b)
                elif si.a == sj.a:
                    merged = QuaternionSymbol(si.a, si.b * sj.b)
                if merged is not None:
                    merged = merged.canonical()
                    rest = [s for k, s in enumerate(syms) if k not in (i, j)]
                    if not merged.is_visibly_trivial():
                        rest.insert(i, merged)
                    syms = rest
                    changed = True
                    break
            if changed:
                break
    return BrauerClass(K, tuple(syms))


def norm_search_split(sym: QuaternionSymbol, budget: int | None = None):
    """Independent oracle: look for x, y with x^2 + xy + a y^2 = b.

    A hit proves [a, b) trivial.  Returns the witness (x, y) or None.
    """
    from .search import norm_search

    return norm_search(sym.a, sym.b, budget)


# ---------------------------------------------------------------------------
# the Clifford invariant of forms with trivial Arf invariant


def e2(phi) -> BrauerClass:
    """Clifford invariant in Br_2 of a form with trivial Arf invariant.

    Blocks [a_i, b_i] with a_i b_i != 0 give  sum_{i<n} [a_i b_i, a_i a_n),
    the block n being the last such block; hyperbolic blocks contribute 0.
    """
    from .forms import arf

    K = phi.field
    if not K.in_wp(arf(phi)):
        raise FieldError("e2 is defined on forms with trivial Arf invariant")
    blocks = [(a, b) for a, b in phi.blocks if not a.is_zero() and not b.is_zero()]
    if not blocks:
        return BrauerClass(K, ())
    an = blocks[-1][0]
    syms = tuple(QuaternionSymbol(a * b, a * an) for a, b in blocks[:-1])
    return BrauerClass(K, syms)


def e2_well_defined_check(phi, psi) -> Decision:
    """If phi and psi are isometric, their Clifford invariants must agree."""
    from .forms import equivalent

    eq = equivalent(phi, psi)
    if not eq.yes:
        return _unknown(f"isometry not established ({eq.verdict.value})")
    return class_equal(e2(phi), e2(psi))


def enumerate_symbols(classes: Iterable[BrauerClass]) -> list[QuaternionSymbol]:
    return [s for c in classes for s in c.symbols]
