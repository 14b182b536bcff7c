"""Closed System T terms that the nuclei are built from.

Finite sequences are pairs ``<entries, length>`` of type ``(N -> N) * N``;
entries at or beyond the length carry no meaning, and ``seq_hat`` replaces
them by zeros. Booleans are numerals 0 and 1.
"""

from __future__ import annotations

from functools import lru_cache

from .build import B, build, closed, lam
from .errors import UnknownPreludeName
from .syntax import (
    BAIRE, NAT, SEQ, Arrow, Pair, Pr1, Pr2, Rec, SUC, Tm, Ty, ZERO, arrows, typecheck,
)


def rec(ty: Ty) -> B:
    return closed(Rec(ty))


def pair(l: Ty, r: Ty) -> B:
    return closed(Pair(l, r))


def pr1(l: Ty, r: Ty) -> B:
    return closed(Pr1(l, r))


def pr2(l: Ty, r: Ty) -> B:
    return closed(Pr2(l, r))


suc = closed(SUC)
zero = closed(ZERO)

_NN_N = Arrow(BAIRE, NAT)

# ---------------------------------------------------------------- arithmetic

_pred = build(lam(NAT, lambda n: rec(NAT)(0, lam(NAT, NAT, lambda k, _: k), n)))

_add = build(lam(NAT, NAT, lambda m, n: rec(NAT)(m, lam(NAT, NAT, lambda _, acc: suc(acc)), n)))

_monus = build(lam(NAT, NAT, lambda m, n:
                   rec(NAT)(m, lam(NAT, NAT, lambda _, acc: closed(_pred)(acc)), n)))

# max := rec_{N->N}(\n.n, \n f. rec_N(suc n, \m g. suc (f m)))
_max = build(rec(BAIRE)(
    lam(NAT, lambda n: n),
    lam(NAT, BAIRE, lambda n, f: rec(NAT)(suc(n), lam(NAT, NAT, lambda m, _: suc(f(m)))))))

_min = build(lam(NAT, NAT, lambda m, n: closed(_monus)(m, closed(_monus)(m, n))))


@lru_cache(maxsize=None)
def _ifz(sigma: Ty) -> Tm:
    return build(lam(NAT, sigma, sigma, lambda n, a, b:
                     rec(sigma)(a, lam(NAT, sigma, lambda _k, _r: b), n)))


# le(m, n) = 1 iff m < n
_le = build(lam(NAT, NAT, lambda m, n: closed(_ifz(NAT))(closed(_monus)(n, m), 0, 1)))

MONUS, LE, IFZ_N, MAX = closed(_monus), closed(_le), closed(_ifz(NAT)), closed(_max)

# ---------------------------------------------------------------- sequences


def seq_len(s) -> B:
    return pr2(BAIRE, NAT)(s)


def seq_entries(s) -> B:
    return pr1(BAIRE, NAT)(s)


def _below_len(i, s, inside, outside) -> B:
    # inside when i < |s|
    return IFZ_N(LE(i, seq_len(s)), outside, inside)


_hat = build(lam(SEQ, NAT, lambda s, i: _below_len(i, s, seq_entries(s)(i), 0)))

_append = build(lam(SEQ, NAT, lambda s, n: pair(BAIRE, NAT)(
    lam(NAT, lambda i: _below_len(i, s, seq_entries(s)(i), n)),
    suc(seq_len(s)))))

_concat = build(lam(SEQ, BAIRE, NAT, lambda s, a, i:
                    _below_len(i, s, seq_entries(s)(i), a(MONUS(i, seq_len(s))))))

_take = build(lam(BAIRE, NAT, lambda a, n: pair(BAIRE, NAT)(a, n)))

_nil = build(pair(BAIRE, NAT)(lam(NAT, lambda _: 0), 0))

# i * alpha: head i, tail alpha
_cons = build(lam(NAT, BAIRE, NAT, lambda i, a, j:
                  rec(NAT)(i, lam(NAT, NAT, lambda k, _: a(k)), j)))

# ---------------------------------------------------------------- Phi, Theta, Psi

# phi(a, n) = max of a 0, ..., a n
_phi = build(lam(BAIRE, NAT, lambda a, n: rec(NAT)(
    a(0), lam(NAT, NAT, lambda k, acc: MAX(acc, a(suc(k)))), n)))

_THETA_MOTIVE = arrows(_NN_N, BAIRE, NAT)

# theta(0, f, d) = f d
# theta(m+1, f, d) = phi(\i. theta(m, \a. f(i * a), d . suc), d 0)
_theta = build(lam(NAT, lambda m: rec(_THETA_MOTIVE)(
    lam(_NN_N, BAIRE, lambda f, d: f(d)),
    lam(NAT, _THETA_MOTIVE, _NN_N, BAIRE, lambda _k, th, f, d: closed(_phi)(
        lam(NAT, lambda i: th(lam(BAIRE, lambda a: f(closed(_cons)(i, a))),
                             lam(NAT, lambda j: d(suc(j))))),
        d(0))),
    m)))


def _bar_types(sigma: Ty) -> tuple[Ty, Ty, Ty]:
    g_ty = Arrow(SEQ, sigma)
    h_ty = arrows(SEQ, Arrow(NAT, sigma), sigma)
    return g_ty, h_ty, arrows(g_ty, h_ty, SEQ, sigma)


@lru_cache(maxsize=None)
def _psi(sigma: Ty) -> Tm:
    # fuel (n+1) - |s| drops by one each time H extends s
    g_ty, h_ty, _ = _bar_types(sigma)
    aux_ty = Arrow(SEQ, sigma)
    return build(lam(NAT, g_ty, h_ty, SEQ, lambda n, G, H, s: rec(aux_ty)(
        G,
        lam(NAT, aux_ty, SEQ, lambda _k, r, t: H(t, lam(NAT, lambda m: r(closed(_append)(t, m))))),
        MONUS(suc(n), seq_len(s)),
        s)))


# ---------------------------------------------------------------- registry

_FIXED: dict[str, tuple[Ty, Tm]] = {
    "pred": (BAIRE, _pred),
    "add": (arrows(NAT, NAT, NAT), _add),
    "monus": (arrows(NAT, NAT, NAT), _monus),
    "max": (arrows(NAT, NAT, NAT), _max),
    "min": (arrows(NAT, NAT, NAT), _min),
    "le": (arrows(NAT, NAT, NAT), _le),
    "seq_len": (Arrow(SEQ, NAT), build(lam(SEQ, seq_len))),
    "seq_hat": (arrows(SEQ, BAIRE), _hat),
    "seq_append": (arrows(SEQ, NAT, SEQ), _append),
    "seq_concat": (arrows(SEQ, BAIRE, BAIRE), _concat),
    "seq_take": (arrows(BAIRE, NAT, SEQ), _take),
    "seq_nil": (SEQ, _nil),
    "seq_cons": (arrows(NAT, BAIRE, BAIRE), _cons),
    "phi": (arrows(BAIRE, NAT, NAT), _phi),
    "theta": (arrows(NAT, _NN_N, BAIRE, NAT), _theta),
}

_PARAMETRIC = {
    "ifz": lambda s: (arrows(NAT, s, s, s), _ifz(s)),
    "psi": lambda s: (arrows(NAT, _bar_types(s)[2]), _psi(s)),
}

FIXED_NAMES = tuple(_FIXED)
PARAMETRIC_NAMES = tuple(_PARAMETRIC)


def prelude_term(name: str, *params: Ty) -> tuple[Ty, Tm]:
    """Look up a prelude entry; ``ifz`` and ``psi`` take one type parameter."""
    if name in _FIXED:
        if params:
            raise UnknownPreludeName(f"{name} takes no type parameters")
        return _FIXED[name]
    if name in _PARAMETRIC:
        if len(params) != 1:
            raise UnknownPreludeName(f"{name} needs exactly one type parameter")
        return _PARAMETRIC[name](params[0])
    raise UnknownPreludeName(name)


def seq_term(name: str) -> tuple[Ty, Tm]:
    """Sequence operations by short name: len, hat, append, concat, take, nil."""
    return prelude_term("seq_" + name)


def theta_term() -> tuple[Ty, Tm]:
    return _FIXED["theta"]


def psi_term(sigma: Ty) -> tuple[Ty, Tm]:
    return prelude_term("psi", sigma)


def term(name: str, *params: Ty) -> B:
    """The prelude entry as a builder node, for use inside other terms."""
    return closed(prelude_term(name, *params)[1])


def check_registry() -> None:
    """Typecheck every fixed entry at its declared type (ifz/psi at N)."""
    for name in FIXED_NAMES:
        ty, tm = _FIXED[name]
        assert typecheck((), tm) == ty, name
    for name in PARAMETRIC_NAMES:
        ty, tm = prelude_term(name, NAT)
        assert typecheck((), tm) == ty, name
