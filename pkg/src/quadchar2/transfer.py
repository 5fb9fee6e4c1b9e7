"""Scharlau transfers along a quadratic step K = F(delta) and descent of forms.

The functional s: K -> F is s(x0 + x1 delta) = x1, so s(1) = 0, s(delta) = 1.
Transfers are computed from Gram data on the F-basis {v, delta v} of each
K-basis vector v and re-decomposed into binary blocks over F.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .brauer import Decision, _no, _unknown
from .fields import ARTIN_SCHREIER, INSEPARABLE, FieldElement, FieldError, QuadraticExtension
from .forms import (
    BilinearForm,
    IsometryWitness,
    QuadraticForm,
    arf,
    block_relations,
    equivalent,
    is_hyperbolic,
    orth_sum,
    restrict_form,
    tensor,
)


@dataclass(frozen=True)
class TransferFunctional:
    """The F-linear map s: K -> F with s(1) = 0 and s(delta) = 1."""

    extension: QuadraticExtension

    def __post_init__(self):
        if not isinstance(self.extension, QuadraticExtension):
            raise FieldError("a transfer needs a quadratic extension step")

    @property
    def base(self):
        return self.extension.below

    @property
    def experimental(self) -> bool:
        return self.extension.kind == ARTIN_SCHREIER

    def __call__(self, x) -> FieldElement:
        return self.extension.coords(x)[1]

    @classmethod
    def of(cls, K: QuadraticExtension) -> "TransferFunctional":
        return cls(K)


# ---------------------------------------------------------------------------
# symmetric bilinear forms


def transfer_gram(s: TransferFunctional, z) -> list[list[FieldElement]]:
    """Gram matrix of (u, v) -> s(z u v) on the F-basis {1, delta}."""
    K = s.extension
    z = K(z)
    d = K.gen
    return [[s(z), s(z * d)], [s(z * d), s(z * d * d)]]


def _diagonalize_binary(G) -> list[FieldElement]:
    """A diagonal form Witt-equivalent (isometric when possible) to a 2x2 Gram matrix."""
    (p, q), (_, r) = G
    if p.is_zero() and r.is_zero():
        # alternating plane: metabolic, Witt-equivalent to <q, q>
        return [q, q]
    if p.is_zero():
        p, r = r, p
    # e1 with value p, e2' = e2 - (q/p) e1 has value r + q^2/p; rescale e2' by p
    return [p, p * (p * r + q * q)]


def transfer_bilinear(s: TransferFunctional, bil: BilinearForm) -> BilinearForm:
    """s_*(<z_1, ..., z_n>) as a diagonal form over F.

    Along sqrt(b) each <x + y sqrt(b)> with y != 0 gives <y, y(x^2 + b y^2)>.
    An entry in F (y = 0) gives an alternating plane, returned as the
    Witt-equivalent metabolic form <x, x>.
    """
    if bil.field != s.extension:
        raise FieldError(f"form over {bil.field}, transfer from {s.extension}")
    diag = []
    for z in bil.diagonal:
        diag.extend(_diagonalize_binary(transfer_gram(s, z)))
    return BilinearForm(s.base, tuple(diag))


# ---------------------------------------------------------------------------
# quadratic forms


def decompose(F, values: list[FieldElement], polar: list[list[FieldElement]]):
    """Block decomposition of the quadratic space with q(e_i) = values[i], b(e_i, e_j) = polar[i][j].

    Returns (form, basis) with basis vectors in the original coordinates.
    """
    n = len(values)

    def b(u, v):
        s = F.zero
        for i in range(n):
            if u[i].is_zero():
                continue
            for j in range(n):
                if not v[j].is_zero() and not polar[i][j].is_zero():
                    s = s + u[i] * v[j] * polar[i][j]
        return s

    def q(u):
        s = F.zero
        for i in range(n):
            if u[i].is_zero():
                continue
            s = s + values[i] * u[i] * u[i]
            for j in range(i + 1, n):
                if not u[j].is_zero():
                    s = s + polar[i][j] * u[i] * u[j]
        return s

    vecs = [[F.one if j == i else F.zero for j in range(n)] for i in range(n)]
    blocks, basis = [], []
    while vecs:
        e = vecs.pop(0)
        j = next((j for j, f in enumerate(vecs) if not b(e, f).is_zero()), None)
        if j is None:
            raise FieldError("transferred space is singular")
        f = vecs.pop(j)
        c = b(e, f).inverse()
        f = [c * x for x in f]
        rest = []
        for v in vecs:
            be, bf = b(v, e), b(v, f)
            rest.append([x + bf * y + be * w for x, y, w in zip(v, e, f)])
        vecs = rest
        blocks.append((q(e), q(f)))
        basis.extend([e, f])
    return QuadraticForm(F, tuple(blocks)), basis


def transfer_quadratic(s: TransferFunctional, phi: QuadraticForm) -> QuadraticForm:
    """s_*(phi) = s o phi on K^n viewed as F^{2n}."""
    K = s.extension
    if phi.field != K:
        raise FieldError(f"form over {phi.field}, transfer from {K}")
    F = s.base
    if K.kind == INSEPARABLE:
        # basis e, d e, f, d f: only (e, d f) and (d e, f) pair up
        b = K.param
        blocks = []
        for A, B in phi.blocks:
            a1, b1 = s(A), s(B)
            blocks.append((a1, b * b1))
            blocks.append((b * a1, b1))
        return QuadraticForm(F, tuple(blocks))
    return _transfer_by_gram(s, phi)


def _transfer_by_gram(s: TransferFunctional, phi: QuadraticForm) -> QuadraticForm:
    K = s.extension
    d = K.gen
    vecs = []
    for j in range(phi.dim):
        e = phi.basis_vector(j)
        vecs.append(e)
        vecs.append([d * x for x in e])
    n = len(vecs)
    values = [s(phi(v)) for v in vecs]
    polar = [[s(phi.polar(vecs[i], vecs[j])) for j in range(n)] for i in range(n)]
    form, _ = decompose(s.base, values, polar)
    return form


@dataclass
class ReciprocityReport:
    lhs: QuadraticForm
    rhs: QuadraticForm
    decision: Decision

    @property
    def ok(self) -> bool:
        return self.decision.yes


def frobenius_reciprocity_check(s: TransferFunctional, bil: BilinearForm, phi: QuadraticForm, budget=None):
    """Compare s_*(b (x) phi_K) with s_*(b) (x) phi."""
    lhs = transfer_quadratic(s, tensor(bil, restrict_form(phi, s.extension)))
    rhs = tensor(transfer_bilinear(s, bil), phi)
    return ReciprocityReport(lhs, rhs, equivalent(lhs, rhs, budget))


# ---------------------------------------------------------------------------
# descent


@dataclass
class ArfDescent:
    form: QuadraticForm
    witness: IsometryWitness  # psi_K -> psi'_K


def arf_trivialize_descent(psi: QuadraticForm, K: QuadraticExtension) -> ArfDescent:
    """Replace the last block [a, b] of psi by [a, b + d/a], d = Arf(psi).

    Needs d in wp(K); the new form has trivial Arf invariant over F and the
    same restriction to K (R2 with w/a where w^2 + w = d).
    """
    F = psi.field
    if not K.extends(F):
        raise FieldError(f"{K} does not extend {F}")
    d = arf(psi)
    w = K.wp_witness(K(d))
    if w is None:
        raise FieldError("the Arf invariant of psi does not become trivial over K")
    psiK = restrict_form(psi, K)
    if d.is_zero():
        from .forms import identity_witness

        return ArfDescent(psi, identity_witness(psiK))
    pos = next((i for i in reversed(range(len(psi.blocks))) if not psi.blocks[i][0].is_zero()), None)
    if pos is None:
        raise FieldError("every block has a = 0; rotate blocks first (R4)")
    a, b = psi.blocks[pos]
    blocks = list(psi.blocks)
    blocks[pos] = (a, b + d / a)
    new = QuadraticForm(F, tuple(blocks))
    newK, wit = block_relations(psiK, "R2", pos, w / K(a))
    assert newK == restrict_form(new, K)
    return ArfDescent(new, wit)


@dataclass
class DescentResult:
    found: bool
    form: QuadraticForm | None = None
    decision: Decision | None = None
    candidates_tried: int = 0
    precondition: Decision | None = None
    notes: list[str] = field(default_factory=list)


MAX_DESCENT_CANDIDATES = 10**6


def _below(K: QuadraticExtension, x: FieldElement) -> FieldElement | None:
    return K.lower(x) if K.in_below(x) else None


def _component_pool(phi: QuadraticForm, budget: int) -> list[FieldElement]:
    """Nonzero F-elements built from phi's coefficients, ordered by degree."""
    K = phi.field
    F = K.below
    pool = {F.one}
    for a, b in phi.blocks:
        for x in (a, b, a * b):
            if x.is_zero():
                continue
            c0, c1 = K.coords(x)
            for y in (c0, c1, K.norm(x), K.lower(x * x) if K.in_below(x * x) else None):
                if y is not None and not y.is_zero():
                    pool.add(y)
    pool = {x for x in pool if F.degree(x) <= budget}
    return sorted(pool, key=lambda x: (F.degree(x), repr(x)))


def descend_candidates(phi: QuadraticForm, budget: int):
    """Candidate forms over F, in a fixed order (simplest first)."""
    K = phi.field
    F = K.below
    n = len(phi.blocks)
    lowered = [(_below(K, a), _below(K, b)) for a, b in phi.blocks]
    if all(x is not None and y is not None for x, y in lowered):
        yield QuadraticForm(F, tuple(lowered))
    c = arf(phi)
    c2 = _below(K, c * c)
    if c2 is not None:
        yield orth_sum(QuadraticForm(F, ((F.one, c2),)), QuadraticForm.hyperbolic(F, n - 1))
    # blockwise: [a_i, b_i] ~ a_i [1, a_i b_i] and a_i b_i = (a_i b_i)^2 mod wp(K)
    pool = _component_pool(phi, budget)
    arfs = []
    for a, b in phi.blocks:
        x = a * b
        arfs.append(_below(K, x) if K.in_below(x) else _below(K, x * x))
    if any(x is None for x in arfs):
        return
    choices = sorted(product(range(len(pool)), repeat=n), key=lambda t: (sum(F.degree(pool[i]) for i in t), t))
    for t in choices:
        yield QuadraticForm(F, tuple((pool[i], arfs[j] / pool[i]) for j, i in enumerate(t)))


def descend_form_search(phi: QuadraticForm, budget: int | None = None, check_precondition: bool = True):
    """Bounded search for psi over F with psi_K isometric to phi.

    A failed search does not show that no such psi exists.
    """
    K = phi.field
    if not isinstance(K, QuadraticExtension):
        raise FieldError("descent needs a form over a quadratic extension")
    F = K.below
    if budget is None:
        degs = [K.degree(x) for blk in phi.blocks for x in blk if not x.is_zero()]
        budget = 2 * (max(degs, default=0) + 2)
    pre = None
    notes = []
    if check_precondition:
        pre = is_hyperbolic(transfer_quadratic(TransferFunctional(K), phi))
        if not pre.yes:
            notes.append(f"transfer not known to be hyperbolic ({pre.verdict.value})")
    tried = 0
    for psi in descend_candidates(phi, budget):
        tried += 1
        if tried > MAX_DESCENT_CANDIDATES:
            break
        d = equivalent(restrict_form(psi, K), phi)
        if d.yes:
            return DescentResult(True, psi, d, tried, pre, notes)
    notes.append(f"no candidate among {tried} over {F}")
    return DescentResult(False, None, None, tried, pre, notes)


def descent_report(phi: QuadraticForm, result: DescentResult) -> Decision:
    """Re-check a found descent: Arf agreement and equivalence over K."""
    if not result.found:
        return _unknown("nothing to check")
    K = phi.field
    psiK = restrict_form(result.form, K)
    if not K.in_wp(arf(psiK) + arf(phi)):
        return _no("Arf invariants differ over K")
    return equivalent(psiK, phi)


__all__ = [
    "ArfDescent",
    "DescentResult",
    "ReciprocityReport",
    "TransferFunctional",
    "arf_trivialize_descent",
    "decompose",
    "descend_candidates",
    "descend_form_search",
    "descent_report",
    "frobenius_reciprocity_check",
    "transfer_bilinear",
    "transfer_gram",
    "transfer_quadratic",
]
