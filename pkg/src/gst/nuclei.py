"""The concrete nuclei: identity, majorizability, lifting, continuity,
uniform continuity and general bar recursion, plus two generalized ones.

Multi-component JN values are right-nested pairs, so a bar-recursion value
``<V, S, B>`` is ``<V, <S, B>>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from . import prelude as P
from .build import B, build, closed, lam
from .errors import NoGenericElement, WrongTier
from .syntax import BAIRE, HOLE, NAT, SEQ, Arrow, Pair, Pr1, Pr2, Prod, Tm, Ty, arrows
from .translate import GenNucleus, SimpleNucleus


class Kind(Enum):
    IDENTITY = "identity"
    MAJOR = "major"
    LIFTING = "lifting"
    CONT = "cont"
    UCONT = "ucont"
    BAR = "bar"
    GEN_IDENTITY = "gen-identity"
    GEN_CONT = "gen-cont"


_PARAMETRIZED = (Kind.LIFTING, Kind.BAR)
_GENERAL = (Kind.GEN_IDENTITY, Kind.GEN_CONT)


@dataclass(frozen=True)
class NucleusKind:
    kind: Kind
    param: Optional[Ty] = None

    def __post_init__(self):
        if (self.kind in _PARAMETRIZED) != (self.param is not None):
            raise ValueError(f"{self.kind.value} takes a type parameter exactly when it is lifting or bar")

    @property
    def cli_name(self) -> str:
        return self.kind.value

    @property
    def generalized(self) -> bool:
        return self.kind in _GENERAL

    @staticmethod
    def from_cli(name: str, param: Optional[Ty] = None) -> "NucleusKind":
        kind = Kind(name)
        if kind in _PARAMETRIZED and param is None:
            param = BAIRE if kind is Kind.LIFTING else NAT
        return NucleusKind(kind, param)

    def __str__(self) -> str:
        return self.kind.value if self.param is None else f"{self.kind.value}[{self.param}]"


IDENTITY = NucleusKind(Kind.IDENTITY)
MAJORIZABILITY = NucleusKind(Kind.MAJOR)
CONTINUITY = NucleusKind(Kind.CONT)
UNIFORM_CONTINUITY = NucleusKind(Kind.UCONT)
GEN_IDENTITY = NucleusKind(Kind.GEN_IDENTITY)
GEN_CONTINUITY = NucleusKind(Kind.GEN_CONT)


def Lifting(x: Ty) -> NucleusKind:  # noqa: N802
    return NucleusKind(Kind.LIFTING, x)


def BarRecursion(sigma: Ty) -> NucleusKind:  # noqa: N802
    return NucleusKind(Kind.BAR, sigma)


CLI_NAMES = tuple(k.value for k in Kind)

# ---------------------------------------------------------------- shared pieces

_VM = Prod(Arrow(BAIRE, NAT), Arrow(BAIRE, NAT))  # <value, modulus>
_FN = Arrow(BAIRE, NAT)


def V(w) -> B:
    return closed(Pr1(_FN, _FN))(w)


def M(w) -> B:
    return closed(Pr2(_FN, _FN))(w)


def vm_pair(v, m) -> B:
    return closed(Pair(_FN, _FN))(v, m)


def _vm_eta() -> Tm:
    return build(lam(NAT, lambda n: vm_pair(lam(BAIRE, lambda _: n), lam(BAIRE, lambda _: 0))))


def _generic_seed() -> B:
    # \n. <\a. a n, \a. n + 1>
    return lam(NAT, lambda n: vm_pair(lam(BAIRE, lambda a: a(n)), lam(BAIRE, lambda _: P.suc(n))))


# ---------------------------------------------------------------- simple nuclei


def _identity() -> SimpleNucleus:
    return SimpleNucleus(NAT, build(lam(NAT, lambda n: n)),
                         build(lam(Arrow(NAT, NAT), NAT, lambda g, n: g(n))), name="identity")


def _major() -> SimpleNucleus:
    # kappa(g, n) = max(g 0, ..., g n), which is exactly phi
    return SimpleNucleus(NAT, build(lam(NAT, lambda n: n)), P.prelude_term("phi")[1],
                         monad_laws_expected=False, name="major")


def _lifting(x: Ty) -> SimpleNucleus:
    jn = Arrow(x, NAT)
    eta = build(lam(NAT, x, lambda n, _: n))
    kappa = build(lam(Arrow(NAT, jn), jn, x, lambda g, f, y: g(f(y), y)))
    omega = None
    if x == BAIRE:
        omega = build(lam(jn, BAIRE, lambda f, a: a(f(a))))
    return SimpleNucleus(jn, eta, kappa, omega=omega, name=f"lifting[{x}]")


def _cont_kappa(drop_w_modulus: bool = False) -> Tm:
    def body(g, w):
        def at(a):
            return g(V(w)(a))
        modulus = (lambda a: M(at(a))(a)) if drop_w_modulus else \
            (lambda a: P.MAX(M(at(a))(a), M(w)(a)))
        return vm_pair(lam(BAIRE, lambda a: V(at(a))(a)), lam(BAIRE, modulus))

    return build(lam(Arrow(NAT, _VM), _VM, body))


def _with_omega(jn: Ty, eta: Tm, kappa: Tm, seed: B, **kw) -> SimpleNucleus:
    omega = build(closed(kappa)(seed))
    return SimpleNucleus(jn, eta, kappa, omega=omega, **kw)


def _cont() -> SimpleNucleus:
    return _with_omega(_VM, _vm_eta(), _cont_kappa(), _generic_seed(), name="cont")


def broken_continuity() -> SimpleNucleus:
    """Continuity nucleus whose kappa forgets the modulus of ``w``.

    The eta condition still holds; the kappa condition does not. Used to show
    that the relation checker can fail.
    """
    return _with_omega(_VM, _vm_eta(), _cont_kappa(drop_w_modulus=True), _generic_seed(),
                       name="cont-broken")


def _ucont() -> SimpleNucleus:
    phi, theta = P.term("phi"), P.term("theta")

    def body(g, w):
        value = lam(BAIRE, lambda a: V(g(V(w)(a)))(a))
        modulus = lam(BAIRE, lambda d: P.MAX(
            phi(lam(NAT, lambda i: M(g(i))(d)), theta(M(w)(d), V(w), d)),
            M(w)(d)))
        return vm_pair(value, modulus)

    kappa = build(lam(Arrow(NAT, _VM), _VM, body))
    return _with_omega(_VM, _vm_eta(), kappa, _generic_seed(), name="ucont")


# ---------------------------------------------------------------- bar recursion


def bar_types(sigma: Ty) -> dict[str, Ty]:
    g_ty = Arrow(SEQ, sigma)
    h_ty = arrows(SEQ, Arrow(NAT, sigma), sigma)
    b_ty = arrows(g_ty, h_ty, SEQ, sigma)
    s_ty = Arrow(SEQ, NAT)
    rest = Prod(s_ty, b_ty)
    return {"G": g_ty, "H": h_ty, "B": b_ty, "S": s_ty, "rest": rest, "J": Prod(_FN, rest)}


class _Bar:
    def __init__(self, sigma: Ty):
        self.sigma = sigma
        self.t = bar_types(sigma)

    def V(self, w) -> B:
        return closed(Pr1(_FN, self.t["rest"]))(w)

    def _rest(self, w) -> B:
        return closed(Pr2(_FN, self.t["rest"]))(w)

    def S(self, w) -> B:
        return closed(Pr1(self.t["S"], self.t["B"]))(self._rest(w))

    def B(self, w) -> B:
        return closed(Pr2(self.t["S"], self.t["B"]))(self._rest(w))

    def triple(self, v, s, b) -> B:
        t = self.t
        return closed(Pair(_FN, t["rest"]))(v, closed(Pair(t["S"], t["B"]))(s, b))


def _bar(sigma: Ty) -> SimpleNucleus:
    bar = _Bar(sigma)
    t = bar.t
    hat = P.term("seq_hat")
    eta = build(lam(NAT, lambda n: bar.triple(
        lam(BAIRE, lambda _: n), lam(SEQ, lambda _: 1), lam(t["G"], t["H"], lambda G, _H: G))))

    def body(g, w):
        def at_hat(s):
            return g(bar.V(w)(hat(s)))
        return bar.triple(
            lam(BAIRE, lambda a: bar.V(g(bar.V(w)(a)))(a)),
            lam(SEQ, lambda s: P.term("min")(bar.S(w)(s), bar.S(at_hat(s))(s))),
            lam(t["G"], t["H"], lambda G, H: bar.B(w)(
                lam(SEQ, lambda s: bar.B(at_hat(s))(G, H, s)), H)))

    kappa = build(lam(Arrow(NAT, t["J"]), t["J"], body))
    seed = lam(NAT, lambda n: bar.triple(
        lam(BAIRE, lambda a: a(n)),
        lam(SEQ, lambda s: P.LE(n, P.seq_len(s))),
        P.term("psi", sigma)(n)))
    return _with_omega(t["J"], eta, kappa, seed, name=f"bar[{sigma}]")


def bar_projections(sigma: Ty) -> _Bar:
    """Builders for the V, S, B projections at motive ``sigma``."""
    return _Bar(sigma)


# ---------------------------------------------------------------- generalized nuclei


def _gen_identity() -> GenNucleus:
    return GenNucleus(
        HOLE,
        lambda s: build(lam(s, lambda x: x)),
        lambda s, t: build(lam(Arrow(s, t), s, lambda g, x: g(x))),
        name="gen-identity")


def _gen_cont() -> GenNucleus:
    def J(s: Ty) -> Ty:
        return Prod(Arrow(BAIRE, s), _FN)

    def eta_at(s: Ty) -> Tm:
        return build(lam(s, lambda x: closed(Pair(Arrow(BAIRE, s), _FN))(
            lam(BAIRE, lambda _: x), lam(BAIRE, lambda _: 0))))

    def kappa_at(s: Ty, t: Ty) -> Tm:
        vs, vt = (lambda w: closed(Pr1(Arrow(BAIRE, s), _FN))(w)), \
            (lambda w: closed(Pr1(Arrow(BAIRE, t), _FN))(w))
        ms, mt = (lambda w: closed(Pr2(Arrow(BAIRE, s), _FN))(w)), \
            (lambda w: closed(Pr2(Arrow(BAIRE, t), _FN))(w))

        def body(g, w):
            def at(a):
                return g(vs(w)(a))
            return closed(Pair(Arrow(BAIRE, t), _FN))(
                lam(BAIRE, lambda a: vt(at(a))(a)),
                lam(BAIRE, lambda a: P.MAX(mt(at(a))(a), ms(w)(a))))

        return build(lam(Arrow(s, J(t)), J(s), body))

    return GenNucleus(Prod(Arrow(BAIRE, HOLE), _FN), eta_at, kappa_at, name="gen-cont")


# ---------------------------------------------------------------- public API


@lru_cache(maxsize=None)
def nucleus(kind: NucleusKind) -> SimpleNucleus:
    k = kind.kind
    if k in _GENERAL:
        raise WrongTier(f"{kind} is a generalized nucleus; use gen_nucleus")
    if k is Kind.IDENTITY:
        return _identity()
    if k is Kind.MAJOR:
        return _major()
    if k is Kind.LIFTING:
        return _lifting(kind.param)
    if k is Kind.CONT:
        return _cont()
    if k is Kind.UCONT:
        return _ucont()
    return _bar(kind.param)


@lru_cache(maxsize=None)
def gen_nucleus(kind: NucleusKind) -> GenNucleus:
    if kind.kind is Kind.GEN_IDENTITY:
        return _gen_identity()
    if kind.kind is Kind.GEN_CONT:
        return _gen_cont()
    raise WrongTier(f"{kind} is a simple nucleus; use nucleus")


def any_nucleus(kind: NucleusKind):
    return gen_nucleus(kind) if kind.generalized else nucleus(kind)


def generic_element(kind: NucleusKind) -> Tm:
    if kind.generalized:
        raise NoGenericElement(f"no generic element is defined for {kind}")
    n = nucleus(kind)
    if n.omega is None:
        raise NoGenericElement(f"no generic element is defined for {kind}")
    return n.omega


__all__ = [
    "Kind", "NucleusKind", "IDENTITY", "MAJORIZABILITY", "CONTINUITY", "UNIFORM_CONTINUITY",
    "GEN_IDENTITY", "GEN_CONTINUITY", "Lifting", "BarRecursion", "CLI_NAMES", "nucleus",
    "gen_nucleus", "any_nucleus", "generic_element", "broken_continuity", "bar_types",
    "bar_projections", "V", "M", "vm_pair",
]
