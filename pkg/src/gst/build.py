"""Higher-order builder for de Bruijn terms.

Writing nuclei and prelude functionals directly with indices is error prone,
so they are written with Python lambdas instead::

    twice = build(lam(BAIRE, NAT, lambda f, n: f(f(n))))

A builder node knows how to produce a :class:`~gst.syntax.Tm` at a given
binder depth. Closed terms embed unchanged; open terms are embedded with
:func:`open_term` at the depth they were written for.
"""

from __future__ import annotations

from typing import Callable, Union

from .syntax import App, Lam, Tm, Var, numeral, shift


class B:
    """A term under construction."""

    __slots__ = ("_at",)

    def __init__(self, at: Callable[[int], Tm]):
        self._at = at

    def at(self, depth: int) -> Tm:
        return self._at(depth)

    def __call__(self, *args: "Like") -> "B":
        out: B = self
        for a in args:
            out = _app(out, coerce(a))
        return out


Like = Union[B, Tm, int]


def _app(f: B, a: B) -> B:
    return B(lambda d: App(f.at(d), a.at(d)))


def coerce(x: Like) -> B:
    if isinstance(x, B):
        return x
    if isinstance(x, int):
        t = numeral(x)
        return B(lambda d: t)
    return closed(x)


def closed(t: Tm) -> B:
    return B(lambda d: t)


def open_term(t: Tm, base: int) -> B:
    """Embed a term written for depth ``base`` at any deeper position."""
    return B(lambda d: shift(t, d - base))


def _ref(level: int) -> B:
    return B(lambda d: Var(d - level - 1))


def lam(*spec) -> B:
    """``lam(ty1, ..., tyk, fn)`` binds k variables and calls ``fn`` with them."""
    *doms, fn = spec
    if not doms:
        raise ValueError("lam needs at least one binder type")

    def at(d: int) -> Tm:
        refs = [_ref(d + i) for i in range(len(doms))]
        body = coerce(fn(*refs)).at(d + len(doms))
        for i in reversed(range(len(doms))):
            body = Lam(doms[i], body)
        return body

    return B(at)


def build(x: Like, depth: int = 0) -> Tm:
    return coerce(x).at(depth)
