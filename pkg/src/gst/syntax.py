"""Types and de Bruijn terms of System T with products and sums.

Variables are de Bruijn indices: ``Var(0)`` refers to the innermost enclosing
binder. A context is a tuple of types with the innermost binder last.
Polymorphic constants carry their type instances, so :func:`typecheck` is
syntax directed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import NonFunctionApplication, TypeMismatch, UnboundVariable

# ---------------------------------------------------------------- types


@dataclass(frozen=True, slots=True)
class Nat:
    def __str__(self) -> str:
        return show_type(self)


@dataclass(frozen=True, slots=True)
class Arrow:
    dom: "Ty"
    cod: "Ty"

    def __str__(self) -> str:
        return show_type(self)


@dataclass(frozen=True, slots=True)
class Prod:
    left: "Ty"
    right: "Ty"

    def __str__(self) -> str:
        return show_type(self)


@dataclass(frozen=True, slots=True)
class Sum:
    left: "Ty"
    right: "Ty"

    def __str__(self) -> str:
        return show_type(self)


@dataclass(frozen=True, slots=True)
class Hole:
    """Placeholder in a type template; never occurs in a term."""

    def __str__(self) -> str:
        return "_"


Ty = Union[Nat, Arrow, Prod, Sum, Hole]
Ctx = tuple  # tuple[Ty, ...], innermost binder last

NAT = Nat()
HOLE = Hole()


def arrows(*tys: Ty) -> Ty:
    """Right-nested arrow: ``arrows(a, b, c) == a -> (b -> c)``."""
    out = tys[-1]
    for t in reversed(tys[:-1]):
        out = Arrow(t, out)
    return out


BAIRE = Arrow(NAT, NAT)
SEQ = Prod(BAIRE, NAT)  # finite sequence: (entries, length)


def fill(template: Ty, ty: Ty) -> Ty:
    if isinstance(template, Hole):
        return ty
    if isinstance(template, Nat):
        return template
    if isinstance(template, Arrow):
        return Arrow(fill(template.dom, ty), fill(template.cod, ty))
    if isinstance(template, Prod):
        return Prod(fill(template.left, ty), fill(template.right, ty))
    return Sum(fill(template.left, ty), fill(template.right, ty))


def count_holes(ty: Ty) -> int:
    if isinstance(ty, Hole):
        return 1
    if isinstance(ty, Nat):
        return 0
    a, b = (ty.dom, ty.cod) if isinstance(ty, Arrow) else (ty.left, ty.right)
    return count_holes(a) + count_holes(b)


def has_sum(ty: Ty) -> bool:
    if isinstance(ty, Sum):
        return True
    if isinstance(ty, (Nat, Hole)):
        return False
    a, b = (ty.dom, ty.cod) if isinstance(ty, Arrow) else (ty.left, ty.right)
    return has_sum(a) or has_sum(b)


def show_type(ty: Ty, level: int = 0) -> str:
    # levels: 0 arrow, 1 sum, 2 product, 3 atom
    if isinstance(ty, Nat):
        return "N"
    if isinstance(ty, Hole):
        return "_"
    if isinstance(ty, Arrow):
        s = f"{show_type(ty.dom, 1)} -> {show_type(ty.cod, 0)}"
        return f"({s})" if level > 0 else s
    if isinstance(ty, Sum):
        s = f"{show_type(ty.left, 1)} + {show_type(ty.right, 2)}"
        return f"({s})" if level > 1 else s
    s = f"{show_type(ty.left, 2)} * {show_type(ty.right, 3)}"
    return f"({s})" if level > 2 else s


# ---------------------------------------------------------------- terms


@dataclass(frozen=True, slots=True)
class Var:
    index: int


@dataclass(frozen=True, slots=True)
class Lam:
    dom: Ty
    body: "Tm"


@dataclass(frozen=True, slots=True)
class App:
    fn: "Tm"
    arg: "Tm"


@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class Suc:
    pass


@dataclass(frozen=True, slots=True)
class Rec:
    motive: Ty


@dataclass(frozen=True, slots=True)
class Pair:
    l: Ty
    r: Ty


@dataclass(frozen=True, slots=True)
class Pr1:
    l: Ty
    r: Ty


@dataclass(frozen=True, slots=True)
class Pr2:
    l: Ty
    r: Ty


@dataclass(frozen=True, slots=True)
class Inl:
    l: Ty
    r: Ty


@dataclass(frozen=True, slots=True)
class Inr:
    l: Ty
    r: Ty


@dataclass(frozen=True, slots=True)
class Case:
    l: Ty
    r: Ty
    motive: Ty


Tm = Union[Var, Lam, App, Zero, Suc, Rec, Pair, Pr1, Pr2, Inl, Inr, Case]
CONSTANTS = (Zero, Suc, Rec, Pair, Pr1, Pr2, Inl, Inr, Case)

ZERO = Zero()
SUC = Suc()


def apps(fn: Tm, *args: Tm) -> Tm:
    for a in args:
        fn = App(fn, a)
    return fn


def numeral(n: int) -> Tm:
    t: Tm = ZERO
    for _ in range(n):
        t = App(SUC, t)
    return t


def numeral_value(t: Tm) -> int | None:
    """Return k if ``t`` is literally ``suc^k 0``."""
    k = 0
    while isinstance(t, App) and isinstance(t.fn, Suc):
        k += 1
        t = t.arg
    return k if isinstance(t, Zero) else None


@dataclass(frozen=True)
class Decl:
    name: str
    ty: Ty
    body: Tm


# ---------------------------------------------------------------- typing


def constant_type(c: Tm) -> Ty:
    if isinstance(c, Zero):
        return NAT
    if isinstance(c, Suc):
        return BAIRE
    if isinstance(c, Rec):
        s = c.motive
        return arrows(s, arrows(NAT, s, s), NAT, s)
    if isinstance(c, Pair):
        return arrows(c.l, c.r, Prod(c.l, c.r))
    if isinstance(c, Pr1):
        return Arrow(Prod(c.l, c.r), c.l)
    if isinstance(c, Pr2):
        return Arrow(Prod(c.l, c.r), c.r)
    if isinstance(c, Inl):
        return Arrow(c.l, Sum(c.l, c.r))
    if isinstance(c, Inr):
        return Arrow(c.r, Sum(c.l, c.r))
    if isinstance(c, Case):
        return arrows(Arrow(c.l, c.motive), Arrow(c.r, c.motive), Sum(c.l, c.r), c.motive)
    raise TypeError(f"not a constant: {c!r}")


def typecheck(ctx: Ctx, t: Tm) -> Ty:
    """Return the type of ``t`` under ``ctx`` or raise a :class:`TypeCheckError`."""
    return _infer(tuple(ctx), t, ())


def _infer(ctx: tuple, t: Tm, path: tuple) -> Ty:
    cls = type(t)
    if cls is Var:
        if not 0 <= t.index < len(ctx):
            raise UnboundVariable(t.index, len(ctx))
        return ctx[-1 - t.index]
    if cls is Lam:
        return Arrow(t.dom, _infer(ctx + (t.dom,), t.body, path + ("body",)))
    if cls is App:
        fty = _infer(ctx, t.fn, path + ("fn",))
        if not isinstance(fty, Arrow):
            raise NonFunctionApplication(fty, path)
        aty = _infer(ctx, t.arg, path + ("arg",))
        if aty != fty.dom:
            raise TypeMismatch(fty.dom, aty, path + ("arg",))
        return fty.cod
    return constant_type(t)


def is_closed(t: Tm, depth: int = 0) -> bool:
    cls = type(t)
    if cls is Var:
        return t.index < depth
    if cls is Lam:
        return is_closed(t.body, depth + 1)
    if cls is App:
        return is_closed(t.fn, depth) and is_closed(t.arg, depth)
    return True


def term_has_sum(t: Tm) -> bool:
    """True if any type annotation inside ``t`` mentions a sum."""
    cls = type(t)
    if cls is Var or cls is Zero or cls is Suc:
        return False
    if cls is Lam:
        return has_sum(t.dom) or term_has_sum(t.body)
    if cls is App:
        return term_has_sum(t.fn) or term_has_sum(t.arg)
    if cls in (Inl, Inr, Case):
        return True
    return has_sum(constant_type(t))


# ---------------------------------------------------------------- substitution


def shift(t: Tm, by: int, cutoff: int = 0) -> Tm:
    """Add ``by`` to every variable index >= ``cutoff``."""
    if by == 0:
        return t
    cls = type(t)
    if cls is Var:
        return Var(t.index + by) if t.index >= cutoff else t
    if cls is Lam:
        return Lam(t.dom, shift(t.body, by, cutoff + 1))
    if cls is App:
        return App(shift(t.fn, by, cutoff), shift(t.arg, by, cutoff))
    return t


def _subst(t: Tm, depth: int, arg: Tm) -> Tm:
    cls = type(t)
    if cls is Var:
        if t.index == depth:
            return shift(arg, depth)
        if t.index > depth:
            return Var(t.index - 1)
        return t
    if cls is Lam:
        return Lam(t.dom, _subst(t.body, depth + 1, arg))
    if cls is App:
        return App(_subst(t.fn, depth, arg), _subst(t.arg, depth, arg))
    return t


def instantiate(body: Tm, arg: Tm) -> Tm:
    """Substitute ``arg`` for index 0 in ``body`` (the body of a lambda)."""
    return _subst(body, 0, arg)


def term_size(t: Tm) -> int:
    cls = type(t)
    if cls is Lam:
        return 1 + term_size(t.body)
    if cls is App:
        return 1 + term_size(t.fn) + term_size(t.arg)
    return 1
