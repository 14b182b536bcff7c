"""Witness extraction: translate a closed term, apply a generic element, project.

All results are closed System T terms. Nothing is evaluated here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import prelude as P
from .build import build, closed, lam
from .nuclei import (
    CONTINUITY, GEN_CONTINUITY, MAJORIZABILITY, UNIFORM_CONTINUITY, BarRecursion, M, V,
    bar_projections, gen_nucleus, generic_element, nucleus, vm_pair,
)
from .syntax import BAIRE, NAT, SEQ, Arrow, Tm, Ty, term_has_sum, typecheck
from .translate import bullet, ku_type, tm_translate

_FN = Arrow(BAIRE, NAT)


@dataclass(frozen=True)
class ContinuityPair:
    value: Tm
    modulus: Tm


@dataclass(frozen=True)
class BarTriple:
    value: Tm
    bar: Tm
    recursor: Tm


def _require(t: Tm, ty: Ty) -> None:
    got = typecheck((), t)
    if got != ty:
        raise TypeError(f"expected a closed term of type {ty}, got {got}")


def majorant(t: Tm, rho: Ty) -> Tm:
    _require(t, rho)
    return tm_translate("gentzen", nucleus(MAJORIZABILITY), (), t)


def _apply_generic(f: Tm, kind) -> Tm:
    _require(f, _FN)
    n = nucleus(kind)
    # sums need the generalized nucleus; at N it coincides with the simple one
    tr = gen_nucleus(GEN_CONTINUITY) if kind == CONTINUITY and term_has_sum(f) else n
    fj = tm_translate("gentzen", tr, (), f)
    return build(closed(fj)(closed(generic_element(kind))))


def continuity_modulus(f: Tm) -> ContinuityPair:
    w = closed(_apply_generic(f, CONTINUITY))
    return ContinuityPair(build(V(w)), build(M(w)))


def uniform_continuity_modulus(f: Tm) -> ContinuityPair:
    w = closed(_apply_generic(f, UNIFORM_CONTINUITY))
    return ContinuityPair(build(V(w)), build(M(w)))


def bar_triple(Y: Tm, sigma: Ty = NAT) -> BarTriple:  # noqa: N803
    w = closed(_apply_generic(Y, BarRecursion(sigma)))
    bar = bar_projections(sigma)
    return BarTriple(build(bar.V(w)), build(bar.S(w)), build(bar.B(w)))


def uc_modulus_via_bar(Y: Tm) -> Tm:  # noqa: N803
    """``\\d. B(G, H^d, nil)`` with ``G s = 0`` and ``H^d(s, f) = 1 + max{f n | n <= d|s|}``."""
    rec = closed(bar_triple(Y, NAT).recursor)
    phi = P.term("phi")
    return build(lam(BAIRE, lambda d: rec(
        lam(SEQ, lambda _: 0),
        lam(SEQ, BAIRE, lambda s, f: P.suc(phi(f, d(P.seq_len(s))))),
        P.term("seq_nil"))))


def kuroda_modulus(f: Tm) -> Tm:
    """Modulus from the Kuroda translation under the generalized continuity nucleus.

    The generic seed ``\\n.<\\a.a n, \\a.n+1>`` has type ``ku(N^N) = N -> JN``; it
    is injected with eta and fed to ``f`` with the bullet application, whose
    result already lies in ``J N``.
    """
    _require(f, _FN)
    g = gen_nucleus(GEN_CONTINUITY)
    fk = tm_translate("kuroda", g, (), f)
    a_ty = ku_type(g, BAIRE)
    seed = lam(NAT, lambda n: vm_pair(lam(BAIRE, lambda a: a(n)), lam(BAIRE, lambda _: P.suc(n))))
    w = bullet(g, closed(fk), closed(g.eta_at(a_ty))(seed), a_ty, NAT)
    return build(M(w))


__all__ = [
    "ContinuityPair", "BarTriple", "majorant", "continuity_modulus",
    "uniform_continuity_modulus", "bar_triple", "uc_modulus_via_bar", "kuroda_modulus",
]
