import pytest
from hypothesis import given, strategies as st

from gst import prelude
from gst.errors import BudgetExhausted, NotANumeral
from gst.evaluator import (
    Machine, apply_value, deep, eval_nat, evaluate, ext_eq_sampled, foreign_seq, nat, readback_nat,
    value_has_type,
)
from gst.sampling import Sampler
from gst.syntax import (
    BAIRE, NAT, SUC, ZERO, App, Arrow, Case, Inl, Inr, Lam, Pair, Pr1, Pr2, Rec, Suc, Var, Zero,
    apps, instantiate, numeral, numeral_value,
)
from strategies import terms, typed_closed, types

FN = Arrow(BAIRE, NAT)


# ------------------------------------------------------------ reference evaluator
# Call-by-value, substitution based, terms as values. Shares nothing with the
# environment machine beyond the syntax.

_ARITY = {Zero: 0, Suc: 1, Rec: 3, Pair: 2, Pr1: 1, Pr2: 1, Inl: 1, Inr: 1, Case: 3}


def _spine(t):
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    return t, args[::-1]


def ref_eval(t):
    if isinstance(t, App):
        return ref_apply(ref_eval(t.fn), ref_eval(t.arg))
    return t


def ref_apply(f, a):
    if isinstance(f, Lam):
        return ref_eval(instantiate(f.body, a))
    head, args = _spine(f)
    args = args + [a]
    if len(args) < _ARITY[type(head)]:
        return App(f, a)
    kind = type(head)
    if kind in (Suc, Pair, Inl, Inr):
        return App(f, a)
    if kind in (Pr1, Pr2):
        _, comps = _spine(args[0])
        return comps[0] if kind is Pr1 else comps[1]
    if kind is Rec:
        base, step, n = args
        acc = base
        for i in range(numeral_value(n)):
            acc = ref_apply(ref_apply(step, numeral(i)), acc)
        return acc
    l, r, s = args
    inj, (payload,) = _spine(s)
    return ref_apply(l if isinstance(inj, Inl) else r, payload)


# ------------------------------------------------------------ examples

MAX = prelude.term("max")


def test_rec_base():
    a, f = numeral(4), Lam(NAT, Lam(NAT, ZERO))
    assert eval_nat(apps(Rec(NAT), a, f, ZERO)) == 4


def test_max_3_5():
    assert eval_nat(apps(MAX.at(0), numeral(3), numeral(5))) == 5


def test_suc_4():
    assert eval_nat(App(SUC, numeral(4))) == 5


def test_readback():
    assert readback_nat(nat(0)) == 0
    assert readback_nat(nat(7)) == 7
    with pytest.raises(NotANumeral):
        readback_nat(evaluate(Lam(NAT, Var(0))))


def test_ext_eq_examples():
    s = Sampler(seed=1, samples=50)
    assert ext_eq_sampled(nat(3), nat(3), NAT, s)
    assert not ext_eq_sampled(nat(3), nat(4), NAT, s)
    head = evaluate(Lam(BAIRE, App(Var(0), ZERO)))
    assert ext_eq_sampled(head, evaluate(Lam(BAIRE, App(Var(0), ZERO))), FN, s)
    second = evaluate(Lam(BAIRE, App(Var(0), numeral(1))))
    assert not ext_eq_sampled(head, second, FN, s)


@pytest.mark.parametrize("k", [0, 1, 5, 11])
def test_foreign_transparency(k):
    h = foreign_seq(lambda i: 3 * i + 1)
    assert readback_nat(apply_value(h, nat(k))) == 3 * k + 1
    # through an object-level lambda too
    assert eval_nat(App(Var(0), numeral(k)), env=[h]) == 3 * k + 1


def test_environment_order():
    # context (N, N): index 1 is the outer binder
    assert eval_nat(Var(1), env=[nat(2), nat(9)]) == 2


def test_budget():
    t = apps(MAX.at(0), numeral(30), numeral(30))
    with pytest.raises(BudgetExhausted):
        eval_nat(t, budget=50)


def test_unused_argument_not_forced():
    # call-by-need: the argument is never evaluated, so a tiny budget suffices
    heavy = apps(MAX.at(0), numeral(200), numeral(200))
    assert eval_nat(App(Lam(NAT, ZERO), heavy), budget=20) == 0


def test_sharing():
    # the argument is forced once even though it is used twice
    arg = apps(MAX.at(0), numeral(40), numeral(40))
    once = _steps(arg)
    twice = _steps(App(Lam(NAT, apps(prelude.prelude_term("add")[1], Var(0), Var(0))), arg))
    assert twice < 2 * once + 500


@deep
def _steps(t):
    m = Machine()
    readback_nat(m.eval(t, None))
    return m.steps


# ------------------------------------------------------------ properties


@given(terms((), NAT, 4))
def test_agrees_with_reference(t):
    assert eval_nat(t) == numeral_value(ref_eval(t))


@given(typed_closed())
def test_subject_reduction(case):
    t, ty = case
    assert value_has_type(evaluate(t), ty)


@given(typed_closed())
def test_deterministic(case):
    t, ty = case
    s = Sampler(seed=3, samples=5)
    assert ext_eq_sampled(evaluate(t), evaluate(t), ty, s)


@given(st.data())
def test_rec_rules(data):
    sigma = data.draw(types(max_depth=1))
    a = data.draw(terms((), sigma, 2))
    f = data.draw(terms((), Arrow(NAT, Arrow(sigma, sigma)), 2))
    n = data.draw(st.integers(0, 3))
    s = Sampler(seed=5, samples=5)
    rec = Rec(sigma)
    assert ext_eq_sampled(evaluate(apps(rec, a, f, ZERO)), evaluate(a), sigma, s)
    lhs = apps(rec, a, f, numeral(n + 1))
    rhs = apps(f, numeral(n), apps(rec, a, f, numeral(n)))
    assert ext_eq_sampled(evaluate(lhs), evaluate(rhs), sigma, s)


@given(st.integers(0, 20), st.integers(0, 20))
def test_pair_and_case_rules(m, n):
    p = apps(Pair(NAT, NAT), numeral(m), numeral(n))
    assert eval_nat(App(Pr1(NAT, NAT), p)) == m
    assert eval_nat(App(Pr2(NAT, NAT), p)) == n
    case = Case(NAT, NAT, NAT)
    l, r = Lam(NAT, App(SUC, Var(0))), Lam(NAT, ZERO)
    assert eval_nat(apps(case, l, r, App(Inl(NAT, NAT), numeral(m)))) == m + 1
    assert eval_nat(apps(case, l, r, App(Inr(NAT, NAT), numeral(n)))) == 0
