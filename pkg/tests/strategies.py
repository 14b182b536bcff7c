"""Hypothesis strategies: small types and well-typed terms of System T."""

from hypothesis import strategies as st

from gst.syntax import (
    NAT, App, Arrow, Case, Inl, Inr, Lam, Pair, Pr1, Pr2, Prod, Rec, SUC, Sum, Var,
    numeral,
)


def types(max_depth=2, sums=True):
    leaf = st.just(NAT)

    def extend(inner):
        opts = [st.builds(Arrow, inner, inner), st.builds(Prod, inner, inner)]
        if sums:
            opts.append(st.builds(Sum, inner, inner))
        return st.one_of(*opts)

    return st.recursive(leaf, extend, max_leaves=max_depth + 1)


@st.composite
def terms(draw, ctx, ty, fuel=4, sums=True):
    """A term of type ``ty`` under ``ctx`` (innermost binder last)."""
    ctx = tuple(ctx)
    choices = []
    hits = [i for i, t in enumerate(reversed(ctx)) if t == ty]
    if hits:
        choices.append("var")
    if ty == NAT:
        choices += ["num", "suc"]
    if isinstance(ty, Arrow):
        choices.append("lam")
    if isinstance(ty, Prod):
        choices.append("pair")
    if isinstance(ty, Sum):
        choices.append("inj")
    if fuel > 0:
        choices += ["app", "proj", "rec"]
        if sums:
            choices.append("case")
    if not choices:
        choices.append("lam" if isinstance(ty, Arrow) else "num")
    kind = draw(st.sampled_from(choices))
    sub = fuel - 1
    if kind == "var":
        return Var(draw(st.sampled_from(hits)))
    if kind == "num":
        return numeral(draw(st.integers(0, 3)))
    if kind == "suc":
        return App(SUC, draw(terms(ctx, NAT, sub, sums)))
    if kind == "lam":
        return Lam(ty.dom, draw(terms(ctx + (ty.dom,), ty.cod, sub, sums)))
    if kind == "pair":
        return App(App(Pair(ty.left, ty.right), draw(terms(ctx, ty.left, sub, sums))),
                   draw(terms(ctx, ty.right, sub, sums)))
    if kind == "inj":
        if draw(st.booleans()):
            return App(Inl(ty.left, ty.right), draw(terms(ctx, ty.left, sub, sums)))
        return App(Inr(ty.left, ty.right), draw(terms(ctx, ty.right, sub, sums)))
    if kind == "app":
        return App(draw(terms(ctx, Arrow(NAT, ty), sub, sums)), draw(terms(ctx, NAT, sub, sums)))
    if kind == "proj":
        if draw(st.booleans()):
            return App(Pr1(ty, NAT), draw(terms(ctx, Prod(ty, NAT), sub, sums)))
        return App(Pr2(NAT, ty), draw(terms(ctx, Prod(NAT, ty), sub, sums)))
    if kind == "rec":
        step = Arrow(NAT, Arrow(ty, ty))
        n = numeral(draw(st.integers(0, 2))) if draw(st.booleans()) else draw(terms(ctx, NAT, 0, sums))
        return App(App(App(Rec(ty), draw(terms(ctx, ty, sub, sums))), draw(terms(ctx, step, sub, sums))), n)
    # case
    scrut = draw(terms(ctx, Sum(NAT, NAT), sub, sums))
    return App(App(App(Case(NAT, NAT, ty), draw(terms(ctx, Arrow(NAT, ty), sub, sums))),
                   draw(terms(ctx, Arrow(NAT, ty), sub, sums))), scrut)


@st.composite
def typed_closed(draw, sums=True, fuel=4):
    ty = draw(types(sums=sums))
    return draw(terms((), ty, fuel, sums)), ty


@st.composite
def typed_open(draw, sums=True, fuel=3):
    ctx = tuple(draw(st.lists(types(sums=sums), max_size=3)))
    ty = draw(types(sums=sums))
    return ctx, draw(terms(ctx, ty, fuel, sums)), ty
