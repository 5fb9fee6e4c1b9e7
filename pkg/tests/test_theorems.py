import json
import random

import pytest
from hypothesis import given

from quadchar2.brauer import BrauerClass, QuaternionSymbol, class_equal
from quadchar2.fields import INSEPARABLE, FieldError, QuadraticExtension
from quadchar2.forms import BilinearForm, equivalent, pfister
from quadchar2.suites import SUITES, Gen, base_field, plant_degree8, report_json, run_suite, summarize
from quadchar2.theorems import (
    MIXED,
    PURELY_INSEPARABLE,
    choose_lambda,
    decompose_degree8_pipeline,
    descend_brauer_class,
    lift_symbols_insep_quad,
    mixed_bound,
    pfister_rewrite_norm,
    symbol_length_mixed_multiquadratic,
    verify_e2_frob_square,
)
from quadchar2.transfer import TransferFunctional, transfer_bilinear

from conftest import elements

F0 = base_field()
T = F0.gen


def sym(a, b):
    return QuaternionSymbol(a, b)


def test_pfister_rewrite_norm_x_zero():
    out = pfister_rewrite_norm(F0.zero, F0.one + T, T, 1 / T)
    assert out.c == T
    assert out.witness.verify()


def test_pfister_rewrite_norm_example():
    out = pfister_rewrite_norm(F0.one, F0.one, T, T)
    assert out.c == T * T / (1 + T)
    assert class_equal(BrauerClass.of(sym(T, 1 + T)), BrauerClass.of(sym(out.c, T))).yes
    assert equivalent(out.source, out.target).yes


@given(elements(degree=3), elements(degree=3), elements(degree=3), elements(degree=3, nonzero=True))
def test_pfister_rewrite_norm_property(x, y, a, b):
    n = x * x + b * y * y
    if n.is_zero():
        return
    out = pfister_rewrite_norm(x, y, a, b)
    assert out.witness.source == pfister([n], a) and out.witness.target == pfister([b], out.c)
    assert out.witness.verify()
    if not x.is_zero():
        assert (out.c + a * b * y * y / n).is_zero()


def test_pfister_rewrite_norm_precondition():
    with pytest.raises(FieldError):
        pfister_rewrite_norm(T, F0.one, T, T * T)


def test_verify_e2_frob_square_examples():
    K = QuadraticExtension(F0, INSEPARABLE, T)
    assert verify_e2_frob_square(K, [(1, 1, 0)])["decision"]
    z = 1 + T + K.gen
    assert verify_e2_frob_square(K, [(1, z, 1 / T)])["decision"]


def test_descend_brauer_class_examples():
    K = QuadraticExtension(F0, INSEPARABLE, T)
    A = BrauerClass(K, (sym(K(1 / (1 + T)), K(1 + T * T * T)),))
    cert = descend_brauer_class(A)
    assert cert.length <= 1 and cert.equality.yes
    assert descend_brauer_class(BrauerClass(K, ())).length == 0


def test_descend_brauer_class_needs_frobenius_trivial():
    K = QuadraticExtension(F0, INSEPARABLE, T)
    # Frob [1/(1+t), sqrt t) = [1/(1+t)^2, t), nonsplit at the place t
    A = BrauerClass(K, (sym(K(1 / (1 + T)), K.gen),))
    with pytest.raises(FieldError):
        descend_brauer_class(A)


def test_lift_symbols_trivial_case():
    b = 1 + T
    K = QuadraticExtension(F0, INSEPARABLE, b)
    A = BrauerClass.of(sym(1 / T, b))
    cert = lift_symbols_insep_quad(A, K)
    assert cert.length == 1 and cert.symbols.symbols[-1].b == b
    assert cert.equality.yes


def test_lift_symbols_two_symbols():
    b, u = 1 + T, T
    K = QuadraticExtension(F0, INSEPARABLE, b)
    A = BrauerClass.of(sym(1 / T, u), sym(1 / (1 + T), b))
    cert = lift_symbols_insep_quad(A, K, m=1)
    assert cert.length <= 2 and cert.equality.yes


def test_mixed_bounds():
    assert [mixed_bound(m, 1) for m in (1, 2, 3)] == [2, 4, 8]
    assert mixed_bound(1, 0) == 1


def test_mixed_m1_n0():
    A = BrauerClass.of(sym(1 / T, 1 + T))
    cert, B, tail = symbol_length_mixed_multiquadratic(A, [1 / T], [])
    assert cert.length == 1 and not tail


def test_mixed_rejects_m4():
    A = BrauerClass.of(sym(1 / T, 1 + T))
    with pytest.raises(FieldError):
        symbol_length_mixed_multiquadratic(A, [1 / T] * 4, [])


def test_choose_lambda_makes_sum_isotropic():
    K = QuadraticExtension(F0, INSEPARABLE, T)
    s = TransferFunctional(K)
    x, y = 1 + K.gen, T + K.gen
    lam = choose_lambda(s, x, y)
    bx = transfer_bilinear(s, BilinearForm(K, (x,)))
    by = transfer_bilinear(s, BilinearForm(K, (y,)))
    # lam * by represents bx's first entry, so the 4-dim sum is isotropic
    assert lam * by.diagonal[0] == bx.diagonal[0]


@pytest.mark.parametrize("kind", [MIXED, PURELY_INSEPARABLE])
def test_degree8_planted(kind):
    g = Gen(random.Random(f"pipeline:{kind}"), F0)
    data = plant_degree8(g, kind)
    certs = decompose_degree8_pipeline(data)
    assert certs["anisotropic_dim_bound"] < 8
    assert len(certs["three_symbols"]) <= 3


@pytest.mark.parametrize("statement", sorted(SUITES))
def test_every_suite_runs_clean(statement):
    reports = run_suite(statement, 2, seed=3)
    assert all(r.verdict != "refuted" for r in reports), [r.reason for r in reports]


def test_run_suite_deterministic():
    a = report_json("lemma-2.1", 5, run_suite("lemma-2.1", 5, 5))
    b = report_json("lemma-2.1", 5, run_suite("lemma-2.1", 5, 5))
    assert a == b
    doc = json.loads(a)
    assert set(doc) >= {"statement", "seed", "trials"}
    assert set(doc["trials"][0]) >= {"instance", "verdict", "certificates", "millis"}


def test_summarize_counts():
    s = summarize(run_suite("lemma-2.3", 4, 1))
    assert s["verified"] + s["refuted"] + s["inconclusive"] == 4


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("no-such-statement", 1)
