"""Randomized trial suites with planted instances.

Each trial draws from its own RNG, seeded by (statement, seed, index), so a
report depends only on the seed and not on scheduling.
"""

from __future__ import annotations

import json
import random
import time
from typing import Callable

from .brauer import (
    BrauerClass,
    QuaternionSymbol,
    class_equal,
    e2,
    e2_well_defined_check,
    frobenius_map,
    invariants,
    local_invariant,
    norm_search_split,
    restrict_class,
    split_test,
    support,
)
from .fields import (
    INSEPARABLE,
    FiniteField,
    QuadraticExtension,
    RationalFunctionField,
    infinity,
)
from .forms import (
    BilinearForm,
    QuadraticForm,
    arf,
    block_relations,
    equivalent,
    orth_sum,
    restrict_form,
    scale,
)
from .theorems import (
    MIXED,
    PURELY_INSEPARABLE,
    INCONCLUSIVE,
    REFUTED,
    VERIFIED,
    Degree8Data,
    Inconclusive,
    Refuted,
    TrialReport,
    decompose_degree8_pipeline,
    descend_brauer_class,
    lift_symbols_insep_quad,
    mixed_bound,
    pfister_rewrite_norm,
    present_with_first_slots,
    symbol_length_mixed_multiquadratic,
    verify_e2_frob_square,
)
from .transfer import (
    TransferFunctional,
    arf_trivialize_descent,
    descend_form_search,
    descent_report,
    frobenius_reciprocity_check,
    transfer_quadratic,
)


def base_field() -> RationalFunctionField:
    return RationalFunctionField(FiniteField(1))


class Gen:
    """Random elements for planted instances."""

    def __init__(self, rng: random.Random, F):
        self.rng = rng
        self.F = F

    def elem(self, degree=2, field=None):
        return (field or self.F).random(self.rng, degree)

    def nonzero(self, degree=2, field=None):
        while True:
            x = self.elem(degree, field)
            if not x.is_zero():
                return x

    def nonsquare(self, degree=2):
        while True:
            x = self.nonzero(degree)
            if not self.F.is_square(x):
                return x

    def non_wp(self, degree=2):
        while True:
            x = self.elem(degree)
            if not self.F.in_wp(x):
                return x

    def symbol(self, degree=2, field=None):
        return QuaternionSymbol(self.elem(degree, field), self.nonzero(degree, field))

    def form(self, blocks, degree=2, field=None):
        return QuadraticForm(field or self.F, tuple((self.elem(degree, field), self.elem(degree, field)) for _ in range(blocks)))


def _ok(d, stage):
    if d.no:
        raise Refuted(stage, d.reason)
    if d.unknown:
        raise Inconclusive(stage, d.reason)


# ---------------------------------------------------------------------------
# statement trials: each returns (instance, certificates) or raises


def trial_lemma_2_1(g: Gen):
    while True:
        x, y, a, b = g.elem(3), g.elem(3), g.elem(3), g.nonzero(3)
        if not (x * x + b * y * y).is_zero():
            break
    r = pfister_rewrite_norm(x, y, a, b)
    n = x * x + b * y * y
    _ok(equivalent(r.source, r.target), "<<x^2+by^2, a]] = <<b, c]]")
    _ok(class_equal(QuaternionSymbol(a, n), QuaternionSymbol(r.c, b)), "[a, x^2+by^2) = [c, b)")
    if not r.witness.verify():
        raise Refuted("witness", "isometry does not verify")
    return {"x": x, "y": y, "a": a, "b": b}, {"c": r.c, "steps": r.steps}


def _planted_descent_instance(g: Gen, K):
    """psi0 over F and a disguised phi = psi0_K (random base change)."""
    n = g.rng.choice([1, 2])
    psi0 = g.form(n)
    phi = restrict_form(psi0, K)
    for _ in range(3):
        i = g.rng.randrange(n)
        rule = g.rng.choice(["R1", "R2", "R3", "R4"])
        if rule == "R3" and n < 2:
            rule = "R2"
        param = None
        if rule == "R1":
            param = g.nonzero(1, K)
        elif rule == "R2":
            param = g.elem(1, K)
        phi, _ = block_relations(phi, rule, min(i, n - 2) if rule == "R3" else i, param)
    return psi0, phi


def trial_lemma_2_2(g: Gen):
    F = g.F
    K = QuadraticExtension(F, INSEPARABLE, F.gen)
    psi0, phi = _planted_descent_instance(g, K)
    res = descend_form_search(phi)
    if not res.found:
        raise Inconclusive("descent search", "; ".join(res.notes))
    _ok(descent_report(phi, res), "psi_K = phi")
    certs = {"psi": res.form, "candidates": res.candidates_tried}
    if K.in_wp(arf(phi)) and not F.in_wp(arf(res.form)):
        d = arf_trivialize_descent(res.form, K)
        if not F.in_wp(arf(d.form)):
            raise Refuted("Arf trivialization", str(d.form))
        certs["psi_trivial_arf"] = d.form
    return {"phi": phi, "planted": psi0}, certs


def trial_lemma_2_3(g: Gen):
    F = g.F
    K = QuadraticExtension(F, INSEPARABLE, g.nonsquare(2))
    terms = [(g.nonzero(2), g.nonzero(2, K), g.elem(2)) for _ in range(g.rng.choice([1, 2, 3]))]
    certs = verify_e2_frob_square(K, terms)
    return {"K": K, "terms": terms}, {"e2_transfer": certs["e2_transfer"], "frob_e2": certs["frob_e2"]}


def _planted_k_class(g: Gen, K, m: int):
    """m symbols over K whose sum is the restriction of a class over F.

    The last two symbols split one planted symbol [a, z) as [a, z r) + [a, r)
    with r in K, so second slots outside F occur.
    """
    syms = [g.symbol(2).over(K) for _ in range(m - 1)] if m > 1 else []
    a, z, r = g.elem(2), g.nonzero(2), g.nonzero(1, K)
    if m == 1:
        syms = [QuaternionSymbol(K(a), K(z))]
    else:
        syms = syms[:-1] + [QuaternionSymbol(K(a), K(z) * r), QuaternionSymbol(K(a), r)]
    return BrauerClass(K, tuple(syms))


def trial_prop_2_4(g: Gen):
    F = g.F
    K = QuadraticExtension(F, INSEPARABLE, g.nonsquare(2))
    m = g.rng.choice([1, 2, 3])
    A = _planted_k_class(g, K, m)
    cert = descend_brauer_class(A)
    if len(cert.symbols) > 2 * m - 1:
        raise Refuted("bound", f"{len(cert.symbols)} > {2 * m - 1}")
    return {"K": K, "A": A, "m": m}, {"symbols": cert.symbols, "length": len(cert.symbols), "bound": 2 * m - 1}


def trial_cor_2_5(g: Gen):
    F = g.F
    b = g.nonsquare(2)
    K = QuadraticExtension(F, INSEPARABLE, b)
    m = g.rng.choice([1, 2, 3])
    A = BrauerClass(F, tuple(g.symbol(2) for _ in range(m)))
    cert = lift_symbols_insep_quad(A, K, m=m)
    syms = cert.symbols.symbols
    if len(syms) > 2 * m:
        raise Refuted("bound", f"{len(syms)} > {2 * m}")
    if syms and syms[-1].b != b:
        raise Refuted("shape", f"last symbol {syms[-1]} is not of the form [a*, b)")
    return {"b": b, "A": A, "m": m}, {"symbols": cert.symbols, "length": len(syms), "bound": 2 * m}


MIXED_SHAPES = ((1, 1), (1, 2), (2, 1), (3, 1))


def trial_prop_2_6(g: Gen, shape=None):
    F = g.F
    m, n = shape or g.rng.choice(MIXED_SHAPES)
    slots = [g.non_wp(2) for _ in range(m)]
    bs = [g.nonsquare(2) for _ in range(n)]
    # planted: A = sum [a'_j, z_j) + sum [a_i, b_i) splits over F(alpha, sqrt b)
    syms = [QuaternionSymbol(a, g.nonzero(2)) for a in slots] + [QuaternionSymbol(g.elem(2), b) for b in bs]
    A = BrauerClass(F, tuple(syms))
    cert, B, tail = symbol_length_mixed_multiquadratic(A, slots, bs)
    bound = mixed_bound(m, n)
    if len(cert.symbols) > bound:
        raise Refuted("bound", f"{len(cert.symbols)} > {bound}")
    return (
        {"m": m, "n": n, "as_slots": slots, "sqrt_slots": bs, "A": A},
        {"B": B, "tail": tail, "length": len(cert.symbols), "bound": bound, "notes": cert.notes},
    )


def plant_degree8(g: Gen, kind: str | None = None) -> Degree8Data:
    """Data with A_K = [a, x)_K + [c, y)_K, both sides planted."""
    F = g.F
    kind = kind or g.rng.choice([MIXED, PURELY_INSEPARABLE])
    b = g.nonsquare(2)
    K = QuadraticExtension(F, INSEPARABLE, b)
    c = g.elem(2)
    if kind == MIXED:
        ap = g.non_wp(2)
        a, y = ap, g.nonzero(1, K)
    else:
        ap = None
        a, y = g.elem(2), K.gen
    # x^2 = X in F with [a, X) = [c, y^2) over F, so that A_K is as stated
    syms = present_with_first_slots(BrauerClass(F, (QuaternionSymbol(c, K.lower(y * y)),)), [a])
    if syms is None:
        # fall back to equal first slots: [a, y w) + [a, y) = [a, w)
        if kind == MIXED:
            c = a
        else:
            a = c
        x = y * K(g.nonzero(2))
    else:
        x = K(syms[0].b).sqrt()
    A_F = BrauerClass(F, tuple(g.symbol(2) for _ in range(3)))
    AK = BrauerClass(K, (QuaternionSymbol(K(a), x), QuaternionSymbol(K(c), y)))
    # A_K must equal the restriction of A; adjust A by nothing if it already does
    if not class_equal(restrict_class(A_F, K), AK).yes:
        raise Inconclusive("planting", "restriction does not match the stated A_K")
    return Degree8Data(a, c, x, y, b, kind, A_F, ap)


def trial_prop_3_1(g: Gen):
    data = plant_degree8(g)
    certs = decompose_degree8_pipeline(data)
    return (
        {"kind": data.kind, "a": data.a, "c": data.c, "x": data.x, "y": data.y, "b": data.b, "A": data.algebra},
        certs,
    )


# ---------------------------------------------------------------------------
# invariant suites


def trial_schmid_gate(g: Gen):
    F = g.F
    sym = g.symbol(3)
    inv = invariants(BrauerClass.of(sym))
    total = sum(local_invariant(sym, v) for v in support(BrauerClass.of(sym)))
    if infinity(F) not in support(BrauerClass.of(sym)):
        total += local_invariant(sym, infinity(F))
    if total % 2:
        raise Refuted("reciprocity", f"sum of invariants is {total}")
    w = norm_search_split(sym)
    if w is not None and inv:
        raise Refuted("oracle", f"norm witness {w} but invariants {inv}")
    return {"symbol": sym}, {"invariants": inv, "norm_witness": w, "split": not inv}


def trial_arf(g: Gen):
    F = g.F
    phi, psi = g.form(g.rng.choice([1, 2])), g.form(g.rng.choice([1, 2]))
    lam = g.nonzero(2)
    if not F.in_wp(arf(orth_sum(phi, psi)) + arf(phi) + arf(psi)):
        raise Refuted("Arf additivity", "")
    if not F.in_wp(arf(scale(lam, phi)) + arf(phi)):
        raise Refuted("Arf scale invariance", "")
    new, w = block_relations(orth_sum(phi, psi), "R3", 0) if len(phi.blocks) + len(psi.blocks) > 1 else (phi, None)
    if w is not None and not F.in_wp(arf(new) + arf(orth_sum(phi, psi))):
        raise Refuted("Arf under rewrites", "")
    return {"phi": phi, "psi": psi, "lambda": lam}, {"arf": arf(phi)}


def _step(g: Gen):
    F = g.F
    return QuadraticExtension(F, INSEPARABLE, g.nonsquare(2))


def trial_transfer_additivity(g: Gen):
    K = _step(g)
    s = TransferFunctional(K)
    phi, psi = g.form(1, 1, K), g.form(1, 1, K)
    lhs = transfer_quadratic(s, orth_sum(phi, psi))
    rhs = orth_sum(transfer_quadratic(s, phi), transfer_quadratic(s, psi))
    _ok(equivalent(lhs, rhs), "s_*(phi + psi) = s_*(phi) + s_*(psi)")
    if lhs.dim != 2 * (phi.dim + psi.dim):
        raise Refuted("dimension", "")
    return {"K": K, "phi": phi, "psi": psi}, {"transfer": lhs}


def trial_frobenius_reciprocity(g: Gen):
    K = _step(g)
    s = TransferFunctional(K)
    bil = BilinearForm(K, tuple(g.nonzero(2, K) for _ in range(g.rng.choice([1, 2]))))
    phi = g.form(1, 2)
    rep = frobenius_reciprocity_check(s, bil, phi)
    _ok(rep.decision, "s_*(b phi_K) = s_*(b) phi")
    return {"K": K, "b": bil, "phi": phi}, {"lhs": rep.lhs, "rhs": rep.rhs}


def trial_e2_well_defined(g: Gen):
    F = g.F
    n = g.rng.choice([2, 3])
    phi = g.form(n)
    # make the Arf invariant trivial by fixing the last block
    a, b = phi.blocks[-1]
    if a.is_zero():
        a = F.one
    d = arf(QuadraticForm(F, phi.blocks[:-1])) + a * b
    phi = QuadraticForm(F, phi.blocks[:-1] + ((a, b + d / a),))
    psi = phi
    for _ in range(3):
        rule = g.rng.choice(["R1", "R2", "R3", "R4"])
        pos = g.rng.randrange(n - 1 if rule == "R3" else n)
        param = g.nonzero(1) if rule == "R1" else g.elem(1) if rule == "R2" else None
        psi, _ = block_relations(psi, rule, pos, param)
    _ok(e2_well_defined_check(phi, psi), "e2(phi) = e2(psi)")
    return {"phi": phi, "psi": psi}, {"e2": e2(phi)}


def trial_frob_restrict(g: Gen):
    F = g.F
    K = _step(g)
    c = BrauerClass(F, tuple(g.symbol(2) for _ in range(g.rng.choice([1, 2, 3]))))
    _ok(split_test(frobenius_map(restrict_class(c, K))), "Frob(c_K) = 0")
    return {"K": K, "c": c}, {}


SUITES: dict[str, Callable] = {
    "lemma-2.1": trial_lemma_2_1,
    "lemma-2.2": trial_lemma_2_2,
    "lemma-2.3": trial_lemma_2_3,
    "prop-2.4-planted": trial_prop_2_4,
    "cor-2.5-planted": trial_cor_2_5,
    "prop-2.6-planted": trial_prop_2_6,
    "prop-3.1-planted": trial_prop_3_1,
    "schmid-gate": trial_schmid_gate,
    "arf-invariants": trial_arf,
    "transfer-additivity": trial_transfer_additivity,
    "frobenius-reciprocity": trial_frobenius_reciprocity,
    "e2-well-defined": trial_e2_well_defined,
    "frob-restrict": trial_frob_restrict,
}
for _m, _n in MIXED_SHAPES:
    SUITES[f"prop-2.6-m{_m}n{_n}"] = lambda g, s=(_m, _n): trial_prop_2_6(g, s)


def trial_rng(statement: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{statement}:{seed}:{index}")


def run_trial(statement: str, seed: int, index: int) -> TrialReport:
    fn = SUITES[statement]
    g = Gen(trial_rng(statement, seed, index), base_field())
    t0 = time.perf_counter()
    instance = {"index": index}
    try:
        inst, certs = fn(g)
        instance.update(inst)
        verdict, reason = VERIFIED, ""
    except Refuted as e:
        certs, verdict, reason = {"stage": e.stage, "detail": e.detail}, REFUTED, str(e)
    except Inconclusive as e:
        certs, verdict, reason = {"stage": e.stage, "detail": e.detail}, INCONCLUSIVE, str(e)
    millis = (time.perf_counter() - t0) * 1000
    return TrialReport(statement, instance, verdict, reason, certs, millis)


def run_suite(statement: str, trials: int, seed: int = 0) -> list[TrialReport]:
    if statement not in SUITES:
        raise KeyError(f"unknown statement {statement!r}; known: {', '.join(sorted(SUITES))}")
    return [run_trial(statement, seed, i) for i in range(trials)]


def summarize(reports: list[TrialReport]) -> dict:
    counts = {VERIFIED: 0, REFUTED: 0, INCONCLUSIVE: 0}
    for r in reports:
        counts[r.verdict] += 1
    n = len(reports)
    counts["inconclusive_rate"] = counts[INCONCLUSIVE] / n if n else 0.0
    return counts


def report_json(statement: str, seed: int, reports: list[TrialReport], timings: bool = False) -> str:
    doc = {
        "statement": statement,
        "seed": seed,
        "trials": [r.to_json(timings) for r in reports],
        "summary": summarize(reports),
    }
    return json.dumps(doc, indent=2, sort_keys=True)
