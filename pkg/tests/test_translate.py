import pytest
from hypothesis import given, strategies as st

from gst.build import build, closed, lam
from gst.errors import NucleusTooWeak
from gst.evaluator import evaluate, ext_eq_sampled
from gst.nuclei import (
    BarRecursion, CONTINUITY, GEN_CONTINUITY, GEN_IDENTITY, IDENTITY, Lifting, MAJORIZABILITY,
    UNIFORM_CONTINUITY, gen_nucleus, nucleus,
)
from gst.sampling import Sampler
from gst.syntax import (
    BAIRE, NAT, SUC, ZERO, App, Arrow, Lam, Pair, Pr1, Pr2, Prod, Rec, Sum, Var, apps, numeral,
    typecheck,
)
from gst.surface import parse_term
from gst.translate import (
    STYLES, SimpleNucleus, binder_type, ke, monadic_apply, tm_translate,
    ty_translate,
)
from strategies import typed_closed, typed_open

FN = Arrow(BAIRE, NAT)
S = Sampler(seed=7, samples=20)
LAW_KINDS = [IDENTITY, Lifting(BAIRE), CONTINUITY, UNIFORM_CONTINUITY, BarRecursion(NAT)]
VM = Prod(FN, FN)


# ------------------------------------------------------------ types


def test_continuity_jn():
    assert ty_translate("gentzen", nucleus(CONTINUITY), NAT) == VM


@pytest.mark.parametrize("kind", [IDENTITY, MAJORIZABILITY, CONTINUITY, BarRecursion(NAT)])
def test_structural_arrow(kind):
    n = nucleus(kind)
    assert ty_translate("gentzen", n, FN) == Arrow(Arrow(n.jn, n.jn), n.jn)


def test_kuroda_identity_erases():
    g = gen_nucleus(GEN_IDENTITY)
    assert ty_translate("kuroda", g, Arrow(NAT, NAT)) == Arrow(NAT, NAT)
    assert ty_translate("kolmogorov", g, Prod(NAT, Sum(NAT, NAT))) == Prod(NAT, Sum(NAT, NAT))


def test_gen_continuity_types():
    g = gen_nucleus(GEN_CONTINUITY)
    J = g.J
    assert ty_translate("gentzen", g, Sum(NAT, NAT)) == J(Sum(J(NAT), J(NAT)))
    assert ty_translate("kolmogorov", g, Arrow(NAT, NAT)) == J(Arrow(J(NAT), J(NAT)))
    assert ty_translate("kuroda", g, Arrow(NAT, NAT)) == J(Arrow(NAT, J(NAT)))


def test_simple_nucleus_rejects_sums_and_k_styles():
    n = nucleus(CONTINUITY)
    with pytest.raises(NucleusTooWeak):
        ty_translate("gentzen", n, Sum(NAT, NAT))
    with pytest.raises(NucleusTooWeak):
        ty_translate("kuroda", n, NAT)
    with pytest.raises(NucleusTooWeak):
        tm_translate("gentzen", n, (), parse_term("inl[N, N] 0"))
    with pytest.raises(NucleusTooWeak):
        ke(n, Sum(NAT, NAT))


def test_unknown_style():
    with pytest.raises(ValueError):
        ty_translate("godel", nucleus(IDENTITY), NAT)


def test_simple_nucleus_validates():
    n = nucleus(IDENTITY)
    with pytest.raises(TypeError):
        SimpleNucleus(NAT, n.kappa, n.kappa)


# ------------------------------------------------------------ ke


def test_ke_nat_is_kappa():
    n = nucleus(CONTINUITY)
    assert ke(n, NAT) == n.kappa


def test_ke_arrow_shape():
    n = nucleus(CONTINUITY)
    jn = n.jn
    kappa = closed(n.kappa)
    want = build(lam(Arrow(NAT, Arrow(jn, jn)), jn, jn,
                     lambda g, a, x: kappa(lam(NAT, lambda k: g(k, x)), a)))
    assert ke(n, Arrow(NAT, NAT)) == want


def test_ke_product_shape():
    n = nucleus(CONTINUITY)
    jn = n.jn
    kappa = closed(n.kappa)
    want = build(lam(Arrow(NAT, Prod(jn, jn)), jn, lambda g, a: closed(Pair(jn, jn))(
        kappa(lam(NAT, lambda k: closed(Pr1(jn, jn))(g(k))), a),
        kappa(lam(NAT, lambda k: closed(Pr2(jn, jn))(g(k))), a))))
    assert ke(n, Prod(NAT, NAT)) == want


# ------------------------------------------------------------ constants


@pytest.mark.parametrize("kind", LAW_KINDS + [MAJORIZABILITY])
def test_zero_and_suc(kind):
    n = nucleus(kind)
    assert tm_translate("gentzen", n, (), ZERO) == App(n.eta, ZERO)
    want = build(closed(n.kappa)(lam(NAT, lambda k: closed(n.eta)(closed(SUC)(k)))))
    assert tm_translate("gentzen", n, (), SUC) == want


def test_gentzen_homomorphism():
    n = nucleus(CONTINUITY)
    f, a = parse_term(r"\x:N. suc x"), parse_term("3")
    assert tm_translate("gentzen", n, (), App(f, a)) == App(
        tm_translate("gentzen", n, (), f), tm_translate("gentzen", n, (), a))
    body = App(SUC, Var(0))
    assert tm_translate("gentzen", n, (), Lam(NAT, body)) == Lam(n.jn, tm_translate("gentzen", n, (NAT,), body))


@given(typed_open(sums=False))
def test_gentzen_homomorphism_generated(case):
    ctx, t, _ = case
    n = nucleus(CONTINUITY)
    out = tm_translate("gentzen", n, ctx, t)
    if isinstance(t, App):
        assert out == App(tm_translate("gentzen", n, ctx, t.fn), tm_translate("gentzen", n, ctx, t.arg))
    if isinstance(t, Var):
        assert out == t


# ------------------------------------------------------------ type preservation


@pytest.mark.parametrize("style", STYLES)
@pytest.mark.parametrize("kind", [GEN_IDENTITY, GEN_CONTINUITY])
def test_corpus_type_preservation(corpus, style, kind):
    g = gen_nucleus(kind)
    for d in corpus:
        out = tm_translate(style, g, (), d.body, check=False)
        assert typecheck((), out) == ty_translate(style, g, d.ty), d.name


@given(typed_open(), st.sampled_from(STYLES))
def test_type_preservation_generated(case, style):
    ctx, t, ty = case
    g = gen_nucleus(GEN_CONTINUITY)
    out = tm_translate(style, g, ctx, t, check=False)
    tctx = tuple(binder_type(style, g, s) for s in ctx)
    assert typecheck(tctx, out) == ty_translate(style, g, ty)


@given(typed_open(sums=False))
def test_simple_nuclei_preserve_types(case):
    ctx, t, ty = case
    for kind in (MAJORIZABILITY, BarRecursion(NAT)):
        n = nucleus(kind)
        out = tm_translate("gentzen", n, ctx, t, check=False)
        tctx = tuple(binder_type("gentzen", n, s) for s in ctx)
        assert typecheck(tctx, out) == ty_translate("gentzen", n, ty)


# ------------------------------------------------------------ semantics


@pytest.mark.parametrize("style", STYLES)
def test_identity_round_trip(corpus, style):
    g = gen_nucleus(GEN_IDENTITY)
    s = Sampler(seed=11, samples=50)
    for d in corpus:
        if d.ty != FN:
            continue
        out = tm_translate(style, g, (), d.body)
        assert ext_eq_sampled(evaluate(out), evaluate(d.body), FN, s), (style, d.name)


@given(typed_closed(fuel=3), st.sampled_from(STYLES))
def test_identity_round_trip_generated(case, style):
    t, ty = case
    out = tm_translate(style, gen_nucleus(GEN_IDENTITY), (), t)
    assert ext_eq_sampled(evaluate(out), evaluate(t), ty, Sampler(seed=2, samples=5))


@pytest.mark.parametrize("kind", LAW_KINDS)
def test_numeral_coherence(kind):
    n = nucleus(kind)
    assert n.monad_laws_expected
    for k in range(6):
        lhs = evaluate(tm_translate("gentzen", n, (), numeral(k)))
        assert ext_eq_sampled(lhs, evaluate(App(n.eta, numeral(k))), n.jn, S), k


def test_majorizability_flag():
    assert not nucleus(MAJORIZABILITY).monad_laws_expected


_STEP = parse_term(r"\n:N. \m:N. add m (suc n)")


@pytest.mark.parametrize("kind", LAW_KINDS)
def test_rec_preservation(kind):
    n = nucleus(kind)
    tr = lambda t: tm_translate("gentzen", n, (), t)  # noqa: E731
    rec, x, f = tr(Rec(NAT)), tr(numeral(2)), tr(_STEP)
    assert ext_eq_sampled(evaluate(apps(rec, x, f, tr(ZERO))), evaluate(x), n.jn, S)
    for k in range(3):
        lhs = apps(rec, x, f, tr(numeral(k + 1)))
        rhs = apps(f, tr(numeral(k)), apps(rec, x, f, tr(numeral(k))))
        if kind == UNIFORM_CONTINUITY:
            # values agree; the modulus on the left may only be smaller
            _value_eq_modulus_le(evaluate(lhs), evaluate(rhs))
        else:
            assert ext_eq_sampled(evaluate(lhs), evaluate(rhs), n.jn, S), k


def _value_eq_modulus_le(lhs, rhs):
    from gst.evaluator import apply_value, readback_nat
    from gst.sampling import HostSeq

    pr1, pr2 = Pr1(FN, FN), Pr2(FN, FN)
    for d in range(4):
        delta = HostSeq((d, d + 1), d).value()
        lv = readback_nat(apply_value(evaluate(App(pr1, Var(0)), env=[lhs]), delta))
        rv = readback_nat(apply_value(evaluate(App(pr1, Var(0)), env=[rhs]), delta))
        lm = readback_nat(apply_value(evaluate(App(pr2, Var(0)), env=[lhs]), delta))
        rm = readback_nat(apply_value(evaluate(App(pr2, Var(0)), env=[rhs]), delta))
        assert lv == rv and lm <= rm


@pytest.mark.parametrize("style", ["kolmogorov", "kuroda"])
def test_k_style_rec_clauses(style):
    g = gen_nucleus(GEN_CONTINUITY)
    tr = lambda t: tm_translate(style, g, (), t)  # noqa: E731
    ty = ty_translate(style, g, NAT)
    rec = lambda k: apps(Rec(NAT), numeral(2), _STEP, k)  # noqa: E731
    assert ext_eq_sampled(evaluate(tr(rec(ZERO))), evaluate(tr(numeral(2))), ty, S)
    for k in range(3):
        lhs, rhs = rec(numeral(k + 1)), apps(_STEP, numeral(k), rec(numeral(k)))
        assert ext_eq_sampled(evaluate(tr(lhs)), evaluate(tr(rhs)), ty, S)


def test_monadic_application_identity():
    g = gen_nucleus(GEN_IDENTITY)
    f, a = parse_term(r"\x:N. add x 3"), numeral(4)
    for style in ("kolmogorov", "kuroda"):
        t = monadic_apply(style, g, f, a, NAT, NAT)
        assert typecheck((), t) == NAT
        assert ext_eq_sampled(evaluate(t), evaluate(App(f, a)), NAT, S)


def test_monadic_application_types():
    g = gen_nucleus(GEN_CONTINUITY)
    J = g.J
    fty = J(Arrow(NAT, J(NAT)))
    d = monadic_apply("kolmogorov", g, Var(1), Var(0), NAT, NAT, depth=2)
    assert typecheck((fty, NAT), d) == J(NAT)
    b = monadic_apply("kuroda", g, Var(1), Var(0), NAT, NAT, depth=2)
    assert typecheck((fty, J(NAT)), b) == J(NAT)
    with pytest.raises(NucleusTooWeak):
        monadic_apply("kuroda", nucleus(CONTINUITY), ZERO, ZERO, NAT, NAT)
    with pytest.raises(ValueError):
        monadic_apply("gentzen", g, ZERO, ZERO, NAT, NAT)
