"""Nonsingular quadratic forms in characteristic 2, kept in block form.

A form is an orthogonal sum of binary blocks [a, b] = a X^2 + X Y + b Y^2.
Coordinates of a vector are listed block by block: (x_1, y_1, x_2, y_2, ...).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .brauer import Decision, _no, _unknown, _yes
from .fields import Field, FieldElement, FieldError, TowerMismatch, rational_model
from .linalg import Matrix, columns_to_matrix, extend_to_basis, identity, inverse, matmul, matvec


@dataclass(frozen=True)
class QuadraticForm:
    field: Field
    blocks: tuple[tuple[FieldElement, FieldElement], ...] = ()

    def __post_init__(self):
        K = self.field
        object.__setattr__(self, "blocks", tuple((K(a), K(b)) for a, b in self.blocks))

    @classmethod
    def of(cls, K: Field, *pairs) -> "QuadraticForm":
        return cls(K, tuple(pairs))

    @classmethod
    def hyperbolic(cls, K: Field, planes: int) -> "QuadraticForm":
        return cls(K, tuple((K.zero, K.zero) for _ in range(planes)))

    @classmethod
    def pfister(cls, slots, v) -> "QuadraticForm":
        return pfister(slots, v)

    @property
    def dim(self) -> int:
        return 2 * len(self.blocks)

    def __call__(self, vec) -> FieldElement:
        K = self.field
        s = K.zero
        for i, (a, b) in enumerate(self.blocks):
            x, y = K(vec[2 * i]), K(vec[2 * i + 1])
            s = s + a * x * x + x * y + b * y * y
        return s

    def polar(self, v, w) -> FieldElement:
        K = self.field
        s = K.zero
        for i in range(len(self.blocks)):
            s = s + K(v[2 * i]) * K(w[2 * i + 1]) + K(w[2 * i]) * K(v[2 * i + 1])
        return s

    def basis_vector(self, i: int) -> list[FieldElement]:
        K = self.field
        return [K.one if j == i else K.zero for j in range(self.dim)]

    def __repr__(self):
        if not self.blocks:
            return "0"
        return " ⊥ ".join(f"[{a}, {b}]" for a, b in self.blocks)

    def over(self, L: Field) -> "QuadraticForm":
        return restrict_form(self, L)


@dataclass(frozen=True)
class BilinearForm:
    """Diagonal symmetric bilinear form <a_1, ..., a_n>."""

    field: Field
    diagonal: tuple[FieldElement, ...]

    def __post_init__(self):
        K = self.field
        diag = tuple(K(a) for a in self.diagonal)
        if any(a.is_zero() for a in diag):
            raise FieldError("bilinear form entries must be nonzero")
        object.__setattr__(self, "diagonal", diag)

    @classmethod
    def pfister(cls, K: Field, *slots) -> "BilinearForm":
        """<<u_1, ..., u_n>> = <1, u_1> (x) ... (x) <1, u_n>."""
        diag = [K.one]
        for u in slots:
            diag = diag + [d * K(u) for d in diag]
        return cls(K, tuple(diag))

    @property
    def dim(self) -> int:
        return len(self.diagonal)

    def __repr__(self):
        return "<" + ", ".join(map(repr, self.diagonal)) + ">"


@dataclass(frozen=True)
class ArfClass:
    field: Field
    representative: FieldElement

    def __eq__(self, other):
        if not isinstance(other, ArfClass) or other.field != self.field:
            return NotImplemented
        return self.field.in_wp(self.representative + other.representative)

    def __hash__(self):
        return hash(self.field)

    @property
    def is_trivial(self) -> bool:
        return self.field.in_wp(self.representative)

    def __repr__(self):
        return f"{self.representative} + wp({self.field})"


# ---------------------------------------------------------------------------
# constructors and invariants


def _same_field(phi: QuadraticForm, psi: QuadraticForm) -> Field:
    if phi.field != psi.field:
        raise TowerMismatch(f"{phi.field} vs {psi.field}")
    return phi.field


def orth_sum(*forms: QuadraticForm) -> QuadraticForm:
    if not forms:
        raise ValueError("orth_sum needs at least one form")
    K = forms[0].field
    blocks = []
    for f in forms:
        _same_field(forms[0], f)
        blocks.extend(f.blocks)
    return QuadraticForm(K, tuple(blocks))


def scale(lam, phi: QuadraticForm) -> QuadraticForm:
    K = phi.field
    lam = K(lam)
    if lam.is_zero():
        raise FieldError("cannot scale a form by 0")
    return QuadraticForm(K, tuple((lam * a, b / lam) for a, b in phi.blocks))


def tensor(bil: BilinearForm, phi: QuadraticForm) -> QuadraticForm:
    if bil.field != phi.field:
        raise TowerMismatch(f"{bil.field} vs {phi.field}")
    return orth_sum(*(scale(c, phi) for c in bil.diagonal))


def pfister(slots, v) -> QuadraticForm:
    """<<u_1, ..., u_{n-1}, v]] = <1,u_1> (x) ... (x) <1,u_{n-1}> (x) [1, v]."""
    slots = list(slots)
    K = v.field if isinstance(v, FieldElement) else slots[0].field
    for u in slots:
        K = u.field if u.field.extends(K) else K
    v = K(v)
    if any(K(u).is_zero() for u in slots):
        raise FieldError("Pfister slots must be nonzero")
    return tensor(BilinearForm.pfister(K, *slots), QuadraticForm(K, ((K.one, v),)))


def arf(phi: QuadraticForm) -> FieldElement:
    """Representative sum a_i b_i of the Arf invariant."""
    K = phi.field
    s = K.zero
    for a, b in phi.blocks:
        s = s + a * b
    return s


def arf_class(phi: QuadraticForm) -> ArfClass:
    return ArfClass(phi.field, arf(phi))


def restrict_form(phi: QuadraticForm, L: Field) -> QuadraticForm:
    if not L.extends(phi.field):
        raise TowerMismatch(f"{L} is not an extension of {phi.field}")
    return QuadraticForm(L, tuple((L(a), L(b)) for a, b in phi.blocks))


# ---------------------------------------------------------------------------
# isometry witnesses


@dataclass
class IsometryWitness:
    """target(M v) = source(v) for every v; columns of M are images of the source basis."""

    source: QuadraticForm
    target: QuadraticForm
    matrix: Matrix

    def image(self, v) -> list[FieldElement]:
        return matvec(self.matrix, list(v))

    def verify(self) -> bool:
        src, tgt, M = self.source, self.target, self.matrix
        n = src.dim
        if tgt.dim != n or len(M) != n or any(len(r) != n for r in M):
            return False
        cols = [[M[i][j] for i in range(n)] for j in range(n)]
        for j in range(n):
            if tgt(cols[j]) != src(src.basis_vector(j)):
                return False
        for i in range(n):
            for j in range(i + 1, n):
                if tgt.polar(cols[i], cols[j]) != src.polar(src.basis_vector(i), src.basis_vector(j)):
                    return False
        # a nonsingular source forces M injective once values and polar agree
        return True

    def then(self, other: "IsometryWitness") -> "IsometryWitness":
        """Compose: source -> self.target = other.source -> other.target."""
        return IsometryWitness(self.source, other.target, matmul(other.matrix, self.matrix))

    def inverse(self) -> "IsometryWitness":
        return IsometryWitness(self.target, self.source, inverse(self.matrix))


def identity_witness(phi: QuadraticForm) -> IsometryWitness:
    return IsometryWitness(phi, phi, identity(phi.field, phi.dim))


# ---------------------------------------------------------------------------
# rewriting blocks


RULES = ("R1", "R2", "R3", "R4")


def block_relations(phi: QuadraticForm, rule: str, position: int, param=None):
    """Rewrite phi by one block relation; returns (new form, witness old -> new).

    R1  [a,b] -> [a l^2, b / l^2]           (param l != 0)
    R2  [a,b] -> [a, b + a w^2 + w]          (param w; for a = 1 this is [1,x] -> [1, x + wp(w)])
    R3  blocks i, i+1: [u,p] + [v,q] -> [u, p+q] + [u+v, q]
    R4  [a,b] -> [b,a]
    """
    K = phi.field
    n = len(phi.blocks)
    if not 0 <= position < n or (rule == "R3" and position + 1 >= n):
        raise IndexError("block position out of range")
    blocks = list(phi.blocks)
    d = phi.dim
    # columns: new basis vectors expressed in old coordinates
    cols = [phi.basis_vector(j) for j in range(d)]
    i = 2 * position
    a, b = blocks[position]
    if rule == "R1":
        lam = K(param)
        if lam.is_zero():
            raise FieldError("R1 needs a nonzero scalar")
        blocks[position] = (a * lam * lam, b / (lam * lam))
        cols[i] = [x * lam for x in cols[i]]
        cols[i + 1] = [x / lam for x in cols[i + 1]]
    elif rule == "R2":
        w = K(param)
        blocks[position] = (a, b + a * w * w + w)
        cols[i + 1] = [x + w * y for x, y in zip(cols[i + 1], cols[i])]
    elif rule == "R3":
        (u, p), (v, q) = blocks[position], blocks[position + 1]
        blocks[position] = (u, p + q)
        blocks[position + 1] = (u + v, q)
        e1, f1, e2, f2 = cols[i], cols[i + 1], cols[i + 2], cols[i + 3]
        cols[i + 1] = [x + y for x, y in zip(f1, f2)]
        cols[i + 2] = [x + y for x, y in zip(e1, e2)]
    elif rule == "R4":
        blocks[position] = (b, a)
        cols[i], cols[i + 1] = cols[i + 1], cols[i]
    else:
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    new = QuadraticForm(K, tuple(blocks))
    # new(w) = phi(C w), so C is a witness new -> phi; report phi -> new
    w = IsometryWitness(new, phi, columns_to_matrix(cols)).inverse()
    return new, w


# ---------------------------------------------------------------------------
# symplectic decomposition of a general nonsingular quadratic space


def symplectic_blocks(phi: QuadraticForm, vectors: list[list[FieldElement]]):
    """Re-decompose span(vectors) (a nonsingular subspace) into blocks.

    Returns (form, basis) where basis lists the new basis vectors in phi's
    coordinates, paired as (e_1, f_1, e_2, f_2, ...).
    """
    K = phi.field
    vecs = [list(v) for v in vectors]
    blocks, basis = [], []
    while vecs:
        e = vecs.pop(0)
        j = next((j for j, f in enumerate(vecs) if not phi.polar(e, f).is_zero()), None)
        if j is None:
            raise FieldError("subspace is singular")
        f = vecs.pop(j)
        c = phi.polar(e, f).inverse()
        f = [c * x for x in f]
        rest = []
        for v in vecs:
            be, bf = phi.polar(v, e), phi.polar(v, f)
            rest.append([x + bf * y + be * z for x, y, z in zip(v, e, f)])
        vecs = rest
        blocks.append((phi(e), phi(f)))
        basis.extend([e, f])
    return QuadraticForm(K, tuple(blocks)), basis


def split_hyperbolic_plane(phi: QuadraticForm, v):
    """Given an isotropic v, return (psi, witness psi -> phi) with psi = [0,0] ⊥ rest."""
    K = phi.field
    v = [K(x) for x in v]
    if not phi(v).is_zero() or all(x.is_zero() for x in v):
        raise FieldError("vector is not a nonzero isotropic vector")
    j = next(j for j in range(phi.dim) if not phi.polar(v, phi.basis_vector(j)).is_zero())
    w = phi.basis_vector(j)
    c = phi.polar(v, w).inverse()
    w = [c * x for x in w]
    qw = phi(w)
    h = [x + qw * y for x, y in zip(w, v)]
    full = extend_to_basis(K, [v, h], phi.dim)
    psi, basis = symplectic_blocks(phi, full)
    wit = IsometryWitness(psi, phi, columns_to_matrix(basis))
    return psi, wit


# ---------------------------------------------------------------------------
# isotropy


def _block_isotropic_vector(phi: QuadraticForm):
    """An isotropic vector supported on a single block, if one exists."""
    K = phi.field
    for i, (a, b) in enumerate(phi.blocks):
        v = [K.zero] * phi.dim
        if a.is_zero():
            v[2 * i] = K.one
            return v
        if b.is_zero():
            v[2 * i + 1] = K.one
            return v
        w = K.wp_witness(a * b)
        if w is not None:
            v[2 * i], v[2 * i + 1] = w / a, K.one
            return v
    return None


def _square_ratio_vector(phi: QuadraticForm):
    """x e + s e' with q(e) = s^2 q(e') for basis vectors e, e' in different blocks."""
    K = phi.field
    vals = []
    for i, (a, b) in enumerate(phi.blocks):
        vals.append((2 * i, a))
        vals.append((2 * i + 1, b))
    for (i, a), (j, b) in combinations(vals, 2):
        if i // 2 == j // 2:
            continue
        s = (a / b).sqrt()
        if s is not None:
            v = [K.zero] * phi.dim
            v[i], v[j] = K.one, s
            return v
    return None


def _small_candidates(K: Field, blocks) -> list[FieldElement]:
    """Deterministic list of small elements used as fixed coordinates in searches."""
    out = [K.zero, K.one]
    R = K.rational_base()
    if R is not None:
        t = K(R.gen)
        out += [t, t + 1, t.inverse(), t * t, t * t + t + 1, (t + 1).inverse()]
    for a, b in blocks:
        for x in (a, b):
            if not x.is_zero():
                out += [x, x.inverse()]
    seen, uniq = set(), []
    for r in out:
        if r.v not in seen:
            seen.add(r.v)
            uniq.append(r)
    return uniq


def normalize_blocks(R, phi: QuadraticForm):
    """Rewrite each block of a form over GF(2^k)(t) as [a, D/a].

    a is a monic square-free polynomial and D the canonical representative of
    the block's Arf class.  Returns (psi, C) with psi(w) = phi(C w).
    """
    from .brauer import squarefree_part

    blocks = []
    n = phi.dim
    C = identity(R, n)
    for i, (a, b) in enumerate(phi.blocks):
        if a.is_zero() or b.is_zero():
            blocks.append((a, b))
            continue
        a1 = squarefree_part(a)
        lam = (a1 / a).sqrt()
        assert lam is not None
        b1 = b / (lam * lam)
        d, w = R.wp_reduce(a1 * b1)
        c = w / a1
        blocks.append((a1, d / a1))
        # e' = lam e,  f' = c lam e + f / lam
        C[2 * i][2 * i] = lam
        C[2 * i][2 * i + 1] = c * lam
        C[2 * i + 1][2 * i + 1] = lam.inverse()
    return QuadraticForm(R, tuple(blocks)), C


def _linear_search(R, phi: QuadraticForm, budget, patterns):
    """Isotropic vector (x_p, 1) on a pivot block and (x_i, s_i) on the others.

    With x_p = X / a_p the condition reads
        X^2 + X = a_p (b_p + sum b_i s_i^2) + sum a_p (a_i x_i^2 + s_i x_i),
    and x -> a x^2 + s x is additive, so for fixed s the x_i are found by
    GF(2)-linear algebra over a bounded space.
    """
    from .search import ESCALATIONS, combine, search_space, wp_affine_solve

    n = len(phi.blocks)
    coeffs = [x for blk in phi.blocks for x in blk]
    tiers = [(min(budget, 2), 0)] + [(budget, level) for level in range(ESCALATIONS + 1)]
    for bud, level in tiers:
        basis = search_space(R, coeffs, bud, level)
        nb = len(basis)
        for p in range(n):
            ap, bp = phi.blocks[p]
            others = [i for i in range(n) if i != p]
            for svec in patterns(len(others)):
                const = bp
                gens = []
                for i, si in zip(others, svec):
                    ai, bi = phi.blocks[i]
                    const = const + bi * si * si
                    gens.extend(ap * (ai * z * z + si * z) for z in basis)
                sol = wp_affine_solve(ap * const, gens)
                if sol is None:
                    continue
                v = [R.zero] * phi.dim
                v[2 * p], v[2 * p + 1] = sol.witness / ap, R.one
                for j, (i, si) in enumerate(zip(others, svec)):
                    v[2 * i] = combine(basis, (sol.mask >> (j * nb)) & ((1 << nb) - 1), R.zero)
                    v[2 * i + 1] = si
                assert phi(v).is_zero()
                return v
    return None


def _patterns_for(cands):
    def patterns(m):
        if m == 1:
            return [(s,) for s in cands]
        out = [tuple(cands[0] for _ in range(m)), tuple(cands[1] for _ in range(m))]
        for s in cands[2:6]:
            out.append(tuple(s for _ in range(m)))
        return out

    return patterns


def _binary_pair_search(R, phi: QuadraticForm, budget):
    """Isotropic vector of a 4-dimensional form via norm equations.

    [a1,b1](X, a1 Y) = a1 (X^2 + XY + a1 b1 Y^2), so an isotropic vector exists
    as soon as X^2 + XY + a1 b1 Y^2 = c / a1 for a value c of the second block.
    """
    from .search import norm_search

    (a1, b1), (a2, b2) = phi.blocks
    d1 = a1 * b1
    for r in [None] + _small_candidates(R, phi.blocks):
        if r is None:
            c, vec2 = b2, [R.zero, R.one]
        else:
            c, vec2 = a2 + r + b2 * r * r, [R.one, r]
        if c.is_zero():
            continue
        got = norm_search(d1, c / a1, budget, levels=1)
        if got is None:
            continue
        X, Y = got
        v = [X, a1 * Y] + vec2
        assert phi(v).is_zero()
        return v
    return None


def _pair_obstruction(phi: QuadraticForm):
    """Places where a 4-dimensional form over GF(2^k)(t) is anisotropic locally.

    With Delta_i = a_i b_i the form is isotropic over a completion K_v unless
    Delta_1 + Delta_2 is in wp(K_v) and [Delta_1, a_1 a_2) is nonsplit at v.
    Local anisotropy implies global anisotropy, and the local-global
    principle makes the test complete.
    """
    from .brauer import BrauerClass, QuaternionSymbol, invariants, local_wp_member

    (a1, b1), (a2, b2) = phi.blocks
    d1, d2 = a1 * b1, a2 * b2
    inv = invariants(BrauerClass.of(QuaternionSymbol(d1, a1 * a2)))
    return [v for v in inv if local_wp_member(d1 + d2, v)]


def _rational_isotropy(R, phi: QuadraticForm, budget) -> Decision:
    from .search import default_budget

    psi, C = normalize_blocks(R, phi)
    if budget is None:
        budget = default_budget([x for blk in psi.blocks for x in blk])
    cands = _small_candidates(R, psi.blocks)
    patterns = _patterns_for(cands)
    if psi.dim == 4:
        bad = _pair_obstruction(psi)
        if bad:
            return _no("anisotropic over a completion", {"places": bad})
        w = _linear_search(R, psi, budget, patterns)
        reason = "GF(2)-linear search"
        if w is None:
            w = _binary_pair_search(R, psi, budget)
            reason = "norm equation solved"
    else:
        w = _linear_search(R, psi, budget, patterns)
        reason = "GF(2)-linear search"
        if w is None:
            for i, j in combinations(range(len(psi.blocks)), 2):
                sub = QuadraticForm(R, (psi.blocks[i], psi.blocks[j]))
                if _pair_obstruction(sub):
                    continue
                u = _linear_search(R, sub, budget, patterns) or _binary_pair_search(R, sub, budget)
                if u is not None:
                    w = [R.zero] * psi.dim
                    w[2 * i : 2 * i + 2] = u[:2]
                    w[2 * j : 2 * j + 2] = u[2:]
                    reason = "isotropic 4-dimensional subform"
                    break
    if w is None:
        return _unknown("search budget exhausted")
    return _yes(reason, matvec(C, w))


def _perfect_elements(K: Field, limit: int = 1 << 12):
    from .fields import FiniteField, QuadraticExtension

    if isinstance(K, FiniteField):
        yield from K.elements()
        return
    if isinstance(K, QuadraticExtension):
        n = 0
        below = list(_perfect_elements(K.below, limit))
        for c1 in below:
            for c0 in below:
                yield K.make(c0, c1)
                n += 1
                if n >= limit:
                    return


def _perfect_search(phi: QuadraticForm):
    K = phi.field
    (a1, b1), (a2, b2) = phi.blocks[:2]
    for x2 in _perfect_elements(K):
        # y1 = 1, x1 = X / a1 with X^2 + X = a1 (b1 + a2 x2^2)
        w = K.wp_witness(a1 * (b1 + a2 * x2 * x2))
        if w is not None:
            v = [w / a1, K.one, x2, K.zero] + [K.zero] * (phi.dim - 4)
            return v
    return None


def _generic_search(phi: QuadraticForm, budget):
    """Bounded search in towers without class coordinates: small vectors on one
    other block, the pivot coordinate solved exactly through wp-membership."""
    K = phi.field
    cands = _small_candidates(K, phi.blocks)
    n = len(phi.blocks)
    a1, b1 = phi.blocks[0]
    for i in range(1, n):
        ai, bi = phi.blocks[i]
        for x in cands:
            for y in cands:
                if x.is_zero() and y.is_zero():
                    continue
                val = ai * x * x + x * y + bi * y * y
                w = K.wp_witness(a1 * (b1 + val))
                if w is not None:
                    v = [K.zero] * phi.dim
                    v[0], v[1] = w / a1, K.one
                    v[2 * i], v[2 * i + 1] = x, y
                    assert phi(v).is_zero()
                    return v
    return None


def is_isotropic(phi: QuadraticForm, budget: int | None = None) -> Decision:
    """Decide isotropy; a `yes` carries a nonzero zero-vector (coordinates in phi's basis)."""
    from .search import default_budget

    K = phi.field
    if phi.dim == 0:
        return _no("zero form")
    v = _block_isotropic_vector(phi)
    if v is None:
        v = _square_ratio_vector(phi)
    if v is not None:
        return _yes("isotropic block or matching values", v)
    if phi.dim == 2:
        return _no("binary form with nontrivial Arf invariant", {"arf": arf(phi)})
    if K.is_perfect:
        v = _perfect_search(phi)
        if v is not None:
            return _yes("finite field search", v)
        return _unknown("finite field search exhausted")
    m = rational_model(K)
    if m is None:
        if budget is None:
            budget = default_budget([x for blk in phi.blocks for x in blk])
        v = _generic_search(phi, budget)
        if v is not None:
            return _yes("bounded search", v)
        if phi.dim == 4 and K.in_wp(arf(phi)):
            from .brauer import e2, split_test

            d = split_test(e2(phi), search=False)
            if d.no:
                return _no("2-fold Pfister neighbour with nonsplit Clifford invariant", d.certificate)
        return _unknown(f"bounded search over {K} exhausted")
    R = m.target
    psi = QuadraticForm(R, tuple((m(a), m(b)) for a, b in phi.blocks))
    d = _rational_isotropy(R, psi, budget)
    if not d.yes:
        return d
    v = d.certificate if R is K else [m.inverse(x) for x in d.certificate]
    assert phi(v).is_zero()
    return _yes(d.reason, v)


# ---------------------------------------------------------------------------
# Witt decomposition, hyperbolicity, equivalence


@dataclass
class WittReduction:
    anisotropic_part: QuadraticForm
    hyperbolic_count: int
    complete: bool
    witness: IsometryWitness  # (H^r ⊥ anisotropic part) -> input form
    notes: list[str] = field(default_factory=list)

    @property
    def unknown_complete(self) -> bool:
        """True when some isotropy decision came back unknown."""
        return not self.complete


def witt_reduce(phi: QuadraticForm, budget: int | None = None, stop_dim: int = 0) -> WittReduction:
    """Split off hyperbolic planes; stops early once dim <= stop_dim (complete=False then)."""
    K = phi.field
    hyp = 0
    rest = phi
    wit = identity_witness(phi)
    notes = []
    while True:
        if rest.dim and rest.dim <= stop_dim:
            d = _unknown(f"stopped at dim {rest.dim}")
        else:
            d = is_isotropic(rest, budget)
        if d.yes:
            psi, w = split_hyperbolic_plane(rest, d.certificate)
            hyp += 1
            # psi = [0,0] ⊥ rest'; move the plane to the front of the accumulated form
            rest = QuadraticForm(K, psi.blocks[1:])
            head = QuadraticForm.hyperbolic(K, hyp - 1)
            full_src = orth_sum(head, psi) if hyp > 1 else psi
            lift = _block_diag(identity(K, 2 * (hyp - 1)), w.matrix)
            wit = IsometryWitness(full_src, wit.target, matmul(wit.matrix, lift))
            continue
        notes.append(d.reason)
        done = QuadraticForm(K, tuple(wit.source.blocks[:hyp]) + rest.blocks)
        wit = IsometryWitness(done, wit.target, wit.matrix)
        return WittReduction(rest, hyp, d.no, wit, notes)


def _block_diag(A: Matrix, B: Matrix) -> Matrix:
    n, m = len(A), len(B)
    if n == 0:
        return [list(r) for r in B]
    z = A[0][0].field.zero if n else B[0][0].field.zero
    out = [list(r) + [z] * m for r in A]
    out += [[z] * n + list(r) for r in B]
    return out


def is_hyperbolic(phi: QuadraticForm, budget: int | None = None) -> Decision:
    from .brauer import e2, split_test

    if phi.dim % 2:
        raise FieldError("hyperbolicity needs even dimension")
    K = phi.field
    if phi.dim == 0:
        return _yes("zero form")
    if not K.in_wp(arf(phi)):
        return _no("Arf invariant is nontrivial", {"arf": arf(phi)})
    e = split_test(e2(phi))
    if e.no:
        return _no("Clifford invariant is nontrivial", {"e2": e2(phi), "detail": e.certificate})
    # e2(phi) is already known to vanish, so a remainder of dim <= 6 is decided
    red = witt_reduce(phi, budget, stop_dim=6)
    an = red.anisotropic_part
    if an.dim == 0:
        return _yes("split into hyperbolic planes", red.witness)
    if red.complete:
        return _no("nonzero anisotropic part", {"anisotropic_part": an})
    if an.dim <= 6:
        # Arf(an) = Arf(phi) and e2(an) = e2(phi): hyperbolic planes carry neither
        if e.yes:
            return _yes("dim <= 6 with trivial Arf and Clifford invariants (Hauptsatz)", red.witness)
    return _unknown(f"anisotropic part of dim {an.dim} left undecided", {"reduction": red})


def equivalent(phi: QuadraticForm, psi: QuadraticForm, budget: int | None = None) -> Decision:
    """Isometry test: same dimension and phi ⊥ psi hyperbolic."""
    K = _same_field(phi, psi)
    if phi.dim != psi.dim:
        return _no("dimensions differ")
    if phi.blocks == psi.blocks:
        return _yes("identical blocks")
    if not K.in_wp(arf(phi) + arf(psi)):
        return _no("Arf invariants differ")
    d = is_hyperbolic(orth_sum(phi, psi), budget)
    return Decision(d.verdict, d.reason, d.certificate)


__all__ = [
    "ArfClass",
    "BilinearForm",
    "IsometryWitness",
    "QuadraticForm",
    "WittReduction",
    "arf",
    "arf_class",
    "block_relations",
    "equivalent",
    "is_hyperbolic",
    "is_isotropic",
    "orth_sum",
    "pfister",
    "restrict_form",
    "scale",
    "split_hyperbolic_plane",
    "symplectic_blocks",
    "tensor",
    "witt_reduce",
]
