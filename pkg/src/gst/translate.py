"""Nucleus-parametrized translations of System T into itself.

Three styles are supported:

``gentzen``
    N goes to JN, arrows and products are translated componentwise, a sum
    becomes J(sum of translations). Needs only a :class:`SimpleNucleus`
    unless sums occur.
``kolmogorov``
    J in front of every subtype; application is ``f <> a``.
``kuroda``
    J on N and on arrow codomains; application is ``f . a``.

Under de Bruijn indices the translated context is the source context with
binder annotations translated in place, so variables are left untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .build import B, build, closed, lam, open_term
from .errors import NucleusTooWeak
from .syntax import (
    NAT, App, Arrow, Case, Ctx, Hole, Inl, Inr, Lam, Nat, Pair, Pr1, Pr2, Prod, Rec, Suc, Sum, Tm,
    Ty, Var, Zero, SUC, ZERO, arrows, constant_type, count_holes, fill, typecheck,
)

STYLES = ("gentzen", "kolmogorov", "kuroda")


@dataclass(frozen=True, eq=False)
class SimpleNucleus:
    """A type JN with terms ``eta : N -> JN`` and ``kappa : (N -> JN) -> JN -> JN``."""

    jn: Ty
    eta: Tm
    kappa: Tm
    omega: Optional[Tm] = None
    monad_laws_expected: bool = True
    name: str = "custom"

    generalized = False

    def __post_init__(self):
        want_eta = Arrow(NAT, self.jn)
        want_kappa = arrows(Arrow(NAT, self.jn), self.jn, self.jn)
        for label, tm, want in (("eta", self.eta, want_eta), ("kappa", self.kappa, want_kappa)):
            got = typecheck((), tm)
            if got != want:
                raise TypeError(f"{self.name}: {label} has type {got}, expected {want}")
        if self.omega is not None:
            got = typecheck((), self.omega)
            if got != Arrow(self.jn, self.jn):
                raise TypeError(f"{self.name}: omega has type {got}")

    def J(self, ty: Ty) -> Ty:
        if isinstance(ty, Nat):
            return self.jn
        raise NucleusTooWeak(f"nucleus {self.name!r} only provides J at N, not at {ty}")

    def eta_at(self, ty: Ty) -> Tm:
        self.J(ty)
        return self.eta

    def kappa_at(self, s: Ty, t: Ty) -> Tm:
        self.J(s)
        self.J(t)
        return self.kappa


@dataclass(frozen=True, eq=False)
class GenNucleus:
    """A type endofunction J (a template with one hole) with eta and kappa at every type."""

    j: Ty
    eta_fn: Callable[[Ty], Tm]
    kappa_fn: Callable[[Ty, Ty], Tm]
    name: str = "custom"
    monad_laws_expected: bool = True
    _cache: dict = field(default_factory=dict, repr=False)

    generalized = True

    def __post_init__(self):
        if count_holes(self.j) != 1:
            raise ValueError("J must contain exactly one hole")

    def J(self, ty: Ty) -> Ty:
        return fill(self.j, ty)

    def eta_at(self, ty: Ty) -> Tm:
        key = ("eta", ty)
        if key not in self._cache:
            tm = self.eta_fn(ty)
            want = Arrow(ty, self.J(ty))
            if typecheck((), tm) != want:
                raise TypeError(f"{self.name}: eta at {ty} is not of type {want}")
            self._cache[key] = tm
        return self._cache[key]

    def kappa_at(self, s: Ty, t: Ty) -> Tm:
        key = ("kappa", s, t)
        if key not in self._cache:
            tm = self.kappa_fn(s, t)
            want = arrows(Arrow(s, self.J(t)), self.J(s), self.J(t))
            if typecheck((), tm) != want:
                raise TypeError(f"{self.name}: kappa at {s}, {t} is not of type {want}")
            self._cache[key] = tm
        return self._cache[key]

    def simple(self) -> SimpleNucleus:
        """The instance at N, usable wherever a simple nucleus is expected."""
        return SimpleNucleus(self.J(NAT), self.eta_at(NAT), self.kappa_at(NAT, NAT),
                             monad_laws_expected=self.monad_laws_expected, name=self.name)


Nucleus = SimpleNucleus | GenNucleus


def _need_general(nucleus, what: str) -> None:
    if not nucleus.generalized:
        raise NucleusTooWeak(f"{what} needs a generalized nucleus; {nucleus.name!r} is simple")


def _check_style(style: str) -> None:
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")


# ---------------------------------------------------------------- types


def gentzen_type(nucleus, rho: Ty) -> Ty:
    if isinstance(rho, Nat):
        return nucleus.J(NAT)
    if isinstance(rho, Arrow):
        return Arrow(gentzen_type(nucleus, rho.dom), gentzen_type(nucleus, rho.cod))
    if isinstance(rho, Prod):
        return Prod(gentzen_type(nucleus, rho.left), gentzen_type(nucleus, rho.right))
    if isinstance(rho, Sum):
        _need_general(nucleus, "translating a sum type")
        return nucleus.J(Sum(gentzen_type(nucleus, rho.left), gentzen_type(nucleus, rho.right)))
    raise TypeError(f"cannot translate {rho}")


def ko_type(nucleus, rho: Ty) -> Ty:
    """The inner Kolmogorov translation; terms of type rho land in J(ko_type(rho))."""
    if isinstance(rho, Nat):
        return NAT
    J = nucleus.J
    if isinstance(rho, Arrow):
        return Arrow(J(ko_type(nucleus, rho.dom)), J(ko_type(nucleus, rho.cod)))
    if isinstance(rho, Prod):
        return Prod(J(ko_type(nucleus, rho.left)), J(ko_type(nucleus, rho.right)))
    return Sum(J(ko_type(nucleus, rho.left)), J(ko_type(nucleus, rho.right)))


def ku_type(nucleus, rho: Ty) -> Ty:
    """The inner Kuroda translation; terms of type rho land in J(ku_type(rho))."""
    if isinstance(rho, Nat):
        return NAT
    if isinstance(rho, Arrow):
        return Arrow(ku_type(nucleus, rho.dom), nucleus.J(ku_type(nucleus, rho.cod)))
    if isinstance(rho, Prod):
        return Prod(ku_type(nucleus, rho.left), ku_type(nucleus, rho.right))
    return Sum(ku_type(nucleus, rho.left), ku_type(nucleus, rho.right))


def ty_translate(style: str, nucleus, rho: Ty) -> Ty:
    _check_style(style)
    if style == "gentzen":
        return gentzen_type(nucleus, rho)
    _need_general(nucleus, f"the {style} translation")
    inner = ko_type if style == "kolmogorov" else ku_type
    return nucleus.J(inner(nucleus, rho))


def binder_type(style: str, nucleus, sigma: Ty) -> Ty:
    """Type assigned to a translated variable of source type ``sigma``."""
    if style == "gentzen":
        return gentzen_type(nucleus, sigma)
    if style == "kolmogorov":
        return nucleus.J(ko_type(nucleus, sigma))
    return ku_type(nucleus, sigma)


# ---------------------------------------------------------------- ke


def ke(nucleus, sigma: Ty, source: Ty = NAT) -> Tm:
    """Extension of kappa to ``(source -> sigma^J) -> J source -> sigma^J``.

    With ``source = N`` this is the ke of the recursor translation; the case
    translation uses ``source = l^J + r^J``.
    """
    return build(_ke(nucleus, sigma, source))


def _ke(nucleus, sigma: Ty, source: Ty) -> B:
    tr = lambda t: gentzen_type(nucleus, t)  # noqa: E731
    if isinstance(sigma, Nat):
        return closed(nucleus.kappa_at(source, NAT))
    if isinstance(sigma, Sum):
        _need_general(nucleus, "ke at a sum type")
        return closed(nucleus.kappa_at(source, Sum(tr(sigma.left), tr(sigma.right))))
    js = nucleus.J(source)
    if isinstance(sigma, Arrow):
        a, b = tr(sigma.dom), tr(sigma.cod)
        inner = _ke(nucleus, sigma.cod, source)
        return lam(Arrow(source, Arrow(a, b)), js, a,
                   lambda g, w, x: inner(lam(source, lambda n: g(n, x)), w))
    if isinstance(sigma, Prod):
        a, b = tr(sigma.left), tr(sigma.right)
        kl, kr = _ke(nucleus, sigma.left, source), _ke(nucleus, sigma.right, source)
        return lam(Arrow(source, Prod(a, b)), js, lambda g, w: closed(Pair(a, b))(
            kl(lam(source, lambda n: closed(Pr1(a, b))(g(n))), w),
            kr(lam(source, lambda n: closed(Pr2(a, b))(g(n))), w)))
    raise TypeError(f"ke undefined at {sigma}")


# ---------------------------------------------------------------- monadic application


def diamond(nucleus, f: B, a: B, sigma: Ty, tau: Ty) -> B:
    """``f <> a = kappa(\\g. g a, f)`` with ``f : J(sigma -> J tau)`` and ``a : sigma``."""
    fn_ty = Arrow(sigma, nucleus.J(tau))
    return closed(nucleus.kappa_at(fn_ty, tau))(lam(fn_ty, lambda g: g(a)), f)


def bullet(nucleus, f: B, a: B, sigma: Ty, tau: Ty) -> B:
    """``f . a = kappa(\\g. kappa(g, a), f)`` with ``f : J(sigma -> J tau)`` and ``a : J sigma``."""
    fn_ty = Arrow(sigma, nucleus.J(tau))
    inner = closed(nucleus.kappa_at(sigma, tau))
    return closed(nucleus.kappa_at(fn_ty, tau))(lam(fn_ty, lambda g: inner(g, a)), f)


def monadic_apply(style: str, nucleus, f: Tm, a: Tm, sigma: Ty, tau: Ty, depth: int = 0) -> Tm:
    """Build ``f <> a`` (kolmogorov) or ``f . a`` (kuroda) for terms at binder depth ``depth``."""
    if style not in ("kolmogorov", "kuroda"):
        raise ValueError("monadic application exists only for kolmogorov and kuroda")
    _need_general(nucleus, "monadic application")
    op = diamond if style == "kolmogorov" else bullet
    return build(op(nucleus, open_term(f, depth), open_term(a, depth), sigma, tau), depth)


# ---------------------------------------------------------------- terms


def tm_translate(style: str, nucleus, ctx: Ctx, t: Tm, check: bool = True) -> Tm:
    """Translate ``t`` (well typed under ``ctx``) in the given style.

    With ``check`` the result is typechecked against the translated type under
    the translated context; a failure there is a bug in the translator.
    """
    _check_style(style)
    if style != "gentzen":
        _need_general(nucleus, f"the {style} translation")
    ctx = tuple(ctx)
    rho = typecheck(ctx, t)
    out, _ = _Translator(style, nucleus).go(ctx, t)
    if check:
        tctx = tuple(binder_type(style, nucleus, s) for s in ctx)
        want = ty_translate(style, nucleus, rho)
        got = typecheck(tctx, out)
        if got != want:
            raise TypeError(f"translation produced {got}, expected {want}")
    return out


def translate_closed(style: str, nucleus, t: Tm) -> Tm:
    return tm_translate(style, nucleus, (), t)


class _Translator:
    def __init__(self, style: str, nucleus):
        self.style = style
        self.n = nucleus
        self._consts: dict = {}

    # inner types for the K-styles, full types for gentzen
    def inner(self, ty: Ty) -> Ty:
        if self.style == "kolmogorov":
            return ko_type(self.n, ty)
        if self.style == "kuroda":
            return ku_type(self.n, ty)
        return gentzen_type(self.n, ty)

    def go(self, ctx: tuple, t: Tm) -> tuple[Tm, Ty]:
        cls = type(t)
        style, n = self.style, self.n
        if cls is Var:
            ty = ctx[-1 - t.index]
            if style == "kuroda":
                return App(n.eta_at(self.inner(ty)), t), ty
            return t, ty
        if cls is Lam:
            body, cod = self.go(ctx + (t.dom,), t.body)
            ty = Arrow(t.dom, cod)
            lam_t = Lam(binder_type(style, n, t.dom), body)
            if style == "gentzen":
                return lam_t, ty
            return App(n.eta_at(self.inner(ty)), lam_t), ty
        if cls is App:
            f, fty = self.go(ctx, t.fn)
            a, _ = self.go(ctx, t.arg)
            if style == "gentzen":
                return App(f, a), fty.cod
            d = len(ctx)
            if style == "kolmogorov":
                sigma = n.J(ko_type(n, fty.dom))
                out = diamond(n, open_term(f, d), open_term(a, d), sigma, ko_type(n, fty.cod))
            else:
                out = bullet(n, open_term(f, d), open_term(a, d),
                             ku_type(n, fty.dom), ku_type(n, fty.cod))
            return build(out, d), fty.cod
        key = t
        if key not in self._consts:
            self._consts[key] = getattr(self, f"{style}_const")(t)
        return self._consts[key], constant_type(t)

    # ------------------------------------------------------------ gentzen

    def gentzen_const(self, c: Tm) -> Tm:
        n = self.n
        tr = lambda ty: gentzen_type(n, ty)  # noqa: E731
        eta = closed(n.eta_at(NAT))
        if isinstance(c, Zero):
            return App(n.eta_at(NAT), ZERO)
        if isinstance(c, Suc):
            return build(closed(n.kappa_at(NAT, NAT))(lam(NAT, lambda k: eta(closed(SUC)(k)))))
        if isinstance(c, Rec):
            s = tr(c.motive)
            jn = n.J(NAT)
            return build(lam(s, arrows(jn, s, s), lambda x, f: _ke(n, c.motive, NAT)(
                closed(Rec(s))(x, lam(NAT, lambda k: f(eta(k)))))))
        if isinstance(c, (Pair, Pr1, Pr2)):
            return type(c)(tr(c.l), tr(c.r))
        if isinstance(c, (Inl, Inr)):
            _need_general(n, "translating injections")
            l, r = tr(c.l), tr(c.r)
            summand = l if isinstance(c, Inl) else r
            return build(lam(summand, lambda x: closed(n.eta_at(Sum(l, r)))(
                closed(type(c)(l, r))(x))))
        if isinstance(c, Case):
            _need_general(n, "translating case")
            l, r, m = tr(c.l), tr(c.r), tr(c.motive)
            src = Sum(l, r)
            return build(lam(Arrow(l, m), Arrow(r, m), lambda f, g: _ke(n, c.motive, src)(
                closed(Case(l, r, m))(f, g))))
        raise TypeError(f"unknown constant {c!r}")

    # ------------------------------------------------------------ kolmogorov

    def kolmogorov_const(self, c: Tm) -> Tm:
        n = self.n
        J = n.J
        ko = lambda ty: ko_type(n, ty)  # noqa: E731
        eta = lambda ty: closed(n.eta_at(ty))  # noqa: E731
        kappa = lambda s, t: closed(n.kappa_at(s, t))  # noqa: E731
        if isinstance(c, Zero):
            return App(n.eta_at(NAT), ZERO)
        if isinstance(c, Suc):
            return build(eta(ko(Arrow(NAT, NAT)))(
                kappa(NAT, NAT)(lam(NAT, lambda k: eta(NAT)(closed(SUC)(k))))))
        if isinstance(c, Rec):
            sigma = c.motive
            s = ko(sigma)
            step = arrows(NAT, sigma, sigma)
            f_ty = ko(step)                               # JN -> J(Js -> Js)
            t3 = ko(Arrow(NAT, sigma))                    # JN -> Js
            t2 = ko(Arrow(step, Arrow(NAT, sigma)))
            t1 = ko(constant_type(c))

            def rec_diamond(a, f):
                return lam(NAT, lambda k0: closed(Rec(J(s)))(
                    eta(s)(a),
                    lam(NAT, J(s), lambda k, acc: diamond(n, f(eta(NAT)(k)), acc, J(s), s)),
                    k0))

            return build(eta(t1)(kappa(s, t2)(lam(s, lambda a: eta(t2)(
                kappa(f_ty, t3)(lam(f_ty, lambda f: eta(t3)(
                    kappa(NAT, s)(rec_diamond(a, f))))))))))
        if isinstance(c, Pair):
            a_ty, b_ty = J(ko(c.l)), J(ko(c.r))
            return build(eta(ko(constant_type(c)))(lam(a_ty, lambda a: eta(ko(Arrow(c.r, Prod(c.l, c.r))))(
                lam(b_ty, lambda b: eta(ko(Prod(c.l, c.r)))(closed(Pair(a_ty, b_ty))(a, b)))))))
        if isinstance(c, (Pr1, Pr2)):
            a_ty, b_ty = J(ko(c.l)), J(ko(c.r))
            out = ko(c.l) if isinstance(c, Pr1) else ko(c.r)
            return build(eta(ko(constant_type(c)))(
                kappa(ko(Prod(c.l, c.r)), out)(closed(type(c)(a_ty, b_ty)))))
        if isinstance(c, (Inl, Inr)):
            a_ty, b_ty = J(ko(c.l)), J(ko(c.r))
            summand = a_ty if isinstance(c, Inl) else b_ty
            return build(eta(ko(constant_type(c)))(lam(summand, lambda x: eta(ko(Sum(c.l, c.r)))(
                closed(type(c)(a_ty, b_ty))(x)))))
        if isinstance(c, Case):
            l, r, m = c.l, c.r, c.motive
            u, v, w = ko(Arrow(l, m)), ko(Arrow(r, m)), ko(Sum(l, r))
            t3 = ko(Arrow(Sum(l, r), m))
            t2 = ko(arrows(Arrow(r, m), Sum(l, r), m))
            t1 = ko(constant_type(c))
            case = closed(Case(J(ko(l)), J(ko(r)), J(ko(m))))
            return build(eta(t1)(kappa(u, t2)(lam(u, lambda f: eta(t2)(
                kappa(v, t3)(lam(v, lambda g: eta(t3)(kappa(w, ko(m))(case(f, g))))))))))
        raise TypeError(f"unknown constant {c!r}")

    # ------------------------------------------------------------ kuroda

    def kuroda_const(self, c: Tm) -> Tm:
        n = self.n
        J = n.J
        ku = lambda ty: ku_type(n, ty)  # noqa: E731
        eta = lambda ty: closed(n.eta_at(ty))  # noqa: E731
        if isinstance(c, Zero):
            return App(n.eta_at(NAT), ZERO)
        if isinstance(c, Suc):
            return build(eta(ku(Arrow(NAT, NAT)))(lam(NAT, lambda k: eta(NAT)(closed(SUC)(k)))))
        if isinstance(c, Rec):
            sigma = c.motive
            s = ku(sigma)
            step = arrows(NAT, sigma, sigma)
            f_ty = ku(step)                               # N -> J(s -> Js)
            t3 = ku(Arrow(NAT, sigma))
            t2 = ku(Arrow(step, Arrow(NAT, sigma)))
            t1 = ku(constant_type(c))

            def rec_bullet(a, f):
                return lam(NAT, lambda k0: closed(Rec(J(s)))(
                    eta(s)(a),
                    lam(NAT, J(s), lambda k, acc: bullet(n, f(k), acc, s, s)),
                    k0))

            return build(eta(t1)(lam(s, lambda a: eta(t2)(lam(f_ty, lambda f: eta(t3)(
                rec_bullet(a, f)))))))
        if isinstance(c, Pair):
            a_ty, b_ty = ku(c.l), ku(c.r)
            return build(eta(ku(constant_type(c)))(lam(a_ty, lambda a: eta(ku(Arrow(c.r, Prod(c.l, c.r))))(
                lam(b_ty, lambda b: eta(ku(Prod(c.l, c.r)))(closed(Pair(a_ty, b_ty))(a, b)))))))
        if isinstance(c, (Pr1, Pr2)):
            a_ty, b_ty = ku(c.l), ku(c.r)
            out = a_ty if isinstance(c, Pr1) else b_ty
            return build(eta(ku(constant_type(c)))(lam(Prod(a_ty, b_ty), lambda p: eta(out)(
                closed(type(c)(a_ty, b_ty))(p)))))
        if isinstance(c, (Inl, Inr)):
            a_ty, b_ty = ku(c.l), ku(c.r)
            summand = a_ty if isinstance(c, Inl) else b_ty
            return build(eta(ku(constant_type(c)))(lam(summand, lambda x: eta(ku(Sum(c.l, c.r)))(
                closed(type(c)(a_ty, b_ty))(x)))))
        if isinstance(c, Case):
            l, r, m = c.l, c.r, c.motive
            f_ty, g_ty = ku(Arrow(l, m)), ku(Arrow(r, m))
            t3 = ku(Arrow(Sum(l, r), m))
            t2 = ku(arrows(Arrow(r, m), Sum(l, r), m))
            case = closed(Case(ku(l), ku(r), J(ku(m))))
            return build(eta(ku(constant_type(c)))(lam(f_ty, lambda f: eta(t2)(
                lam(g_ty, lambda g: eta(t3)(case(f, g)))))))
        raise TypeError(f"unknown constant {c!r}")


__all__ = [
    "STYLES", "SimpleNucleus", "GenNucleus", "Nucleus", "ty_translate", "gentzen_type",
    "ko_type", "ku_type", "binder_type", "ke", "diamond", "bullet", "monadic_apply",
    "tm_translate", "translate_closed", "Hole",
]
