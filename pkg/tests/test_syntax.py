import pytest
from hypothesis import given, strategies as st

from gst import prelude
from gst.errors import NonFunctionApplication, TypeMismatch, UnboundVariable
from gst.syntax import (
    BAIRE, NAT, SUC, ZERO, App, Arrow, Inl, Lam, Pair, Prod, Rec, Sum, Var, count_holes, fill,
    HOLE, instantiate, is_closed, numeral, numeral_value, shift, show_type, typecheck,
)
from strategies import terms, typed_open, types


def test_identity_type():
    assert typecheck((), Lam(NAT, Var(0))) == Arrow(NAT, NAT)


def test_max_type():
    ty, tm = prelude.prelude_term("max")
    assert typecheck((), tm) == Arrow(NAT, Arrow(NAT, NAT)) == ty


def test_zero_applied():
    with pytest.raises(NonFunctionApplication):
        typecheck((), App(ZERO, ZERO))


def test_unbound():
    with pytest.raises(UnboundVariable) as e:
        typecheck((NAT,), Var(1))
    assert e.value.index == 1


def test_mismatch_path():
    t = Lam(NAT, App(SUC, Lam(NAT, Var(0))))
    with pytest.raises(TypeMismatch) as e:
        typecheck((), t)
    assert e.value.expected == NAT
    assert e.value.path == ("body", "arg")


def test_annotated_constants():
    assert typecheck((), Rec(NAT)) == Arrow(NAT, Arrow(Arrow(NAT, Arrow(NAT, NAT)), Arrow(NAT, NAT)))
    assert typecheck((), Pair(NAT, BAIRE)) == Arrow(NAT, Arrow(BAIRE, Prod(NAT, BAIRE)))
    assert typecheck((), Inl(NAT, BAIRE)) == Arrow(NAT, Sum(NAT, BAIRE))


@pytest.mark.parametrize("body,arg,expected", [
    (Var(0), ZERO, ZERO),
    (Var(1), ZERO, Var(0)),
    (App(Var(0), Var(0)), SUC, App(SUC, SUC)),
])
def test_instantiate_examples(body, arg, expected):
    assert instantiate(body, arg) == expected


def test_instantiate_under_binder_shifts_arg():
    # (\y. x y)[x := z] with z free at index 0 outside
    body = Lam(NAT, App(Var(1), Var(0)))
    assert instantiate(body, Var(3)) == Lam(NAT, App(Var(4), Var(0)))


def test_numerals():
    assert numeral(3) == App(SUC, App(SUC, App(SUC, ZERO)))
    assert numeral_value(numeral(7)) == 7
    assert numeral_value(Var(0)) is None


def test_show_type_precedence():
    assert show_type(Arrow(Arrow(NAT, NAT), NAT)) == "(N -> N) -> N"
    assert show_type(Sum(Prod(NAT, NAT), NAT)) == "N * N + N"
    assert show_type(Prod(Sum(NAT, NAT), NAT)) == "(N + N) * N"


def test_hole_templates():
    tpl = Prod(Arrow(BAIRE, HOLE), Arrow(BAIRE, NAT))
    assert count_holes(tpl) == 1
    assert fill(tpl, Prod(NAT, NAT)) == Prod(Arrow(BAIRE, Prod(NAT, NAT)), Arrow(BAIRE, NAT))


# ------------------------------------------------------------ properties


@given(typed_open())
def test_generated_terms_typecheck(case):
    ctx, t, ty = case
    assert typecheck(ctx, t) == ty
    assert typecheck(ctx, t) == typecheck(list(ctx), t)  # deterministic


@given(typed_open(), types())
def test_weakening(case, extra):
    ctx, t, ty = case
    # a new innermost binder shifts every free index
    assert typecheck(ctx + (extra,), shift(t, 1)) == ty


@given(st.data())
def test_substitution_preserves_typing(data):
    ctx = tuple(data.draw(st.lists(types(), max_size=2)))
    sigma = data.draw(types())
    tau = data.draw(types())
    body = data.draw(terms(ctx + (sigma,), tau, 3))
    arg = data.draw(terms(ctx, sigma, 2))
    assert typecheck(ctx, instantiate(body, arg)) == tau


@given(typed_open())
def test_closedness_matches_context(case):
    ctx, t, _ = case
    assert is_closed(t, len(ctx))
