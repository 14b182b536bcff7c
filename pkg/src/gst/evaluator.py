"""Big-step call-by-name evaluation of System T terms.

Arguments are passed as thunks and a forced thunk caches its value
(call-by-need). T is pure and strongly normalizing, so sharing changes cost,
never results. Host functions can be injected as :class:`Foreign` values,
which is how oracles feed arbitrary sequences to object-level functionals.
"""

from __future__ import annotations

import functools
import os
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence

from .errors import BudgetExhausted, IllTypedRuntime, NotANumeral
from .syntax import (
    App, Arrow, Case, Inl, Inr, Lam, Nat, Pair, Pr1, Pr2, Prod, Rec, Suc, Sum, Tm, Ty, Var,
    Zero, constant_type,
)

DEFAULT_BUDGET = 10**8

# ---------------------------------------------------------------- values


class NatV:
    __slots__ = ("k",)

    def __init__(self, k: int):
        self.k = k

    def __repr__(self) -> str:
        return f"NatV({self.k})"


_SMALL = [NatV(i) for i in range(256)]


def nat(k: int) -> NatV:
    return _SMALL[k] if k < 256 else NatV(k)


class Closure:
    __slots__ = ("env", "dom", "body")

    def __init__(self, env, dom: Ty, body: Tm):
        self.env = env
        self.dom = dom
        self.body = body

    def __repr__(self) -> str:
        return f"Closure({self.dom})"


class PairV:
    __slots__ = ("fst", "snd")

    def __init__(self, fst: "Thunk", snd: "Thunk"):
        self.fst = fst
        self.snd = snd


class InlV:
    __slots__ = ("v",)

    def __init__(self, v: "Thunk"):
        self.v = v


class InrV:
    __slots__ = ("v",)

    def __init__(self, v: "Thunk"):
        self.v = v


class PrimPartial:
    """A constant applied to fewer arguments than its arity."""

    __slots__ = ("const", "args")

    def __init__(self, const: Tm, args: tuple):
        self.const = const
        self.args = args


class Foreign:
    """A host function. ``fn(machine, thunk)`` returns the result value."""

    __slots__ = ("fn", "label")

    def __init__(self, fn: Callable[["Machine", "Thunk"], "Value"], label: str = "foreign"):
        self.fn = fn
        self.label = label

    def __repr__(self) -> str:
        return f"Foreign({self.label})"


Value = object  # NatV | Closure | PairV | InlV | InrV | PrimPartial | Foreign


class Thunk:
    __slots__ = ("term", "env", "fn", "value")

    def __init__(self, term: Optional[Tm] = None, env=None, fn=None, value=None):
        self.term = term
        self.env = env
        self.fn = fn
        self.value = value

    def force(self, m: "Machine"):
        v = self.value
        if v is None:
            if self.fn is not None:
                v = self.fn(m)
            else:
                v = m.eval(self.term, self.env)
            self.value = v
            self.term = self.env = self.fn = None
        return v


def ready(v) -> Thunk:
    return Thunk(value=v)


def delay(fn: Callable[["Machine"], object]) -> Thunk:
    return Thunk(fn=fn)


def foreign_seq(h: Callable[[int], int], label: str = "seq") -> Foreign:
    """Wrap a host sequence ``h : N -> N`` as an object-level value."""
    return Foreign(lambda m, th: nat(h(m.force_nat(th))), label)


def foreign_fn(h: Callable[["Machine", object], object], label: str = "fn") -> Foreign:
    """Wrap a host function receiving the forced argument value."""
    return Foreign(lambda m, th: h(m, th.force(m)), label)


# ---------------------------------------------------------------- machine

_ARITY = {Suc: 1, Rec: 3, Pair: 2, Pr1: 1, Pr2: 1, Inl: 1, Inr: 1, Case: 3}


def default_budget() -> int:
    env = os.environ.get("GST_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class Machine:
    """Evaluation state: a step counter checked against a budget."""

    def __init__(self, budget: Optional[int] = None):
        self.budget = default_budget() if budget is None else budget
        self.steps = 0

    def eval(self, t: Tm, env):
        pending: list = []
        while True:
            self.steps += 1
            if self.steps > self.budget:
                raise BudgetExhausted(self.budget)
            cls = type(t)
            if cls is App:
                a = t.arg
                if type(a) is Var:
                    # reuse the bound thunk instead of wrapping it in another
                    e = env
                    for _ in range(a.index):
                        e = e[1]
                    if e is None:
                        raise IllTypedRuntime(f"unbound variable {a.index} at runtime")
                    pending.append(e[0])
                else:
                    pending.append(Thunk(a, env))
                t = t.fn
                continue
            if cls is Lam:
                if pending:
                    env = (pending.pop(), env)
                    t = t.body
                    continue
                return Closure(env, t.dom, t.body)
            if cls is Var:
                e = env
                for _ in range(t.index):
                    e = e[1]
                if e is None:
                    raise IllTypedRuntime(f"unbound variable {t.index} at runtime")
                v = e[0].force(self)
            elif cls is Zero:
                v = _SMALL[0]
            else:
                v = PrimPartial(t, ())
            # apply the head value to pending arguments, tail-calling closures
            while pending:
                if type(v) is Closure:
                    env = (pending.pop(), v.env)
                    t = v.body
                    break
                v = self.apply(v, pending.pop())
            else:
                return v

    def apply(self, f, th: Thunk):
        cls = type(f)
        if cls is Closure:
            return self.eval(f.body, (th, f.env))
        if cls is PrimPartial:
            args = f.args + (th,)
            if len(args) == _ARITY[type(f.const)]:
                return self._reduce(f.const, args)
            return PrimPartial(f.const, args)
        if cls is Foreign:
            return f.fn(self, th)
        raise IllTypedRuntime(f"cannot apply {f!r}")

    def apply_values(self, f, *args):
        for a in args:
            f = self.apply(f, a if isinstance(a, Thunk) else ready(a))
        return f

    def force_nat(self, th: Thunk) -> int:
        v = th.force(self)
        if type(v) is not NatV:
            raise IllTypedRuntime(f"expected a numeral, got {v!r}")
        return v.k

    def _reduce(self, c: Tm, args: tuple):
        cls = type(c)
        if cls is Suc:
            return nat(self.force_nat(args[0]) + 1)
        if cls is Rec:
            n = self.force_nat(args[2])
            acc, f = args[0], args[1]
            for i in range(n):
                acc = delay(_rec_step(f, i, acc))
            return acc.force(self)
        if cls is Pair:
            return PairV(args[0], args[1])
        if cls is Pr1 or cls is Pr2:
            p = args[0].force(self)
            if type(p) is not PairV:
                raise IllTypedRuntime(f"projection from {p!r}")
            return (p.fst if cls is Pr1 else p.snd).force(self)
        if cls is Inl:
            return InlV(args[0])
        if cls is Inr:
            return InrV(args[0])
        if cls is Case:
            s = args[2].force(self)
            if type(s) is InlV:
                return self.apply(args[0].force(self), s.v)
            if type(s) is InrV:
                return self.apply(args[1].force(self), s.v)
            raise IllTypedRuntime(f"case on {s!r}")
        raise IllTypedRuntime(f"unknown constant {c!r}")


def _rec_step(f: Thunk, i: int, acc: Thunk):
    def run(m: Machine):
        return m.apply(m.apply(f.force(m), ready(nat(i))), acc)

    return run


# ---------------------------------------------------------------- deep stacks
# CPython 3.10 recursion consumes the C stack; heavy evaluations hop to a
# worker thread with a large stack.

_STACK_BYTES = 1 << 29
_RECURSION_LIMIT = 250_000
_worker: Optional[ThreadPoolExecutor] = None
_worker_lock = threading.Lock()
_local = threading.local()


def _mark_deep():
    _local.deep = True


def _get_worker() -> ThreadPoolExecutor:
    global _worker
    with _worker_lock:
        if _worker is None:
            old = threading.stack_size(_STACK_BYTES)
            try:
                pool = ThreadPoolExecutor(max_workers=1, thread_name_prefix="gst-deep")
                pool.submit(_mark_deep).result()
            finally:
                threading.stack_size(old)
            if sys.getrecursionlimit() < _RECURSION_LIMIT:
                sys.setrecursionlimit(_RECURSION_LIMIT)
            _worker = pool
    return _worker


def deep(fn):
    """Run ``fn`` on the large-stack worker unless already there."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        if getattr(_local, "deep", False):
            return fn(*args, **kwargs)
        return _get_worker().submit(fn, *args, **kwargs).result()

    return wrapper


# ---------------------------------------------------------------- entry points


def make_env(values: Sequence) -> object:
    """Build a runtime environment from values listed outermost first."""
    env = None
    for v in values:
        env = (v if isinstance(v, Thunk) else ready(v), env)
    return env


@deep
def evaluate(t: Tm, env: Sequence = (), budget: Optional[int] = None):
    """Evaluate ``t`` to weak head normal form.

    ``env`` lists the values of the free variables, outermost binder first,
    in the same order as the typing context.
    """
    return Machine(budget).eval(t, make_env(env))


@deep
def eval_nat(t: Tm, env: Sequence = (), budget: Optional[int] = None) -> int:
    return readback_nat(Machine(budget).eval(t, make_env(env)))


def readback_nat(v) -> int:
    if type(v) is NatV:
        return v.k
    raise NotANumeral(f"not a numeral: {v!r}")


@deep
def apply_value(f, *args, budget: Optional[int] = None):
    return Machine(budget).apply_values(f, *args)


@deep
def force_deep(v, ty: Ty, budget: Optional[int] = None, depth: int = 64):
    """Force pair/sum components under ``v`` (not under binders)."""
    m = Machine(budget)

    def go(v, ty, d):
        if d == 0:
            return v
        if isinstance(ty, Prod) and type(v) is PairV:
            go(v.fst.force(m), ty.left, d - 1)
            go(v.snd.force(m), ty.right, d - 1)
        elif isinstance(ty, Sum) and type(v) in (InlV, InrV):
            go(v.v.force(m), ty.left if type(v) is InlV else ty.right, d - 1)
        return v

    return go(v, ty, depth)


@deep
def value_has_type(v, ty: Ty, budget: Optional[int] = None) -> bool:
    """Shallow value typing: checks the head and forces product/sum components."""
    m = Machine(budget)

    def go(v, ty) -> bool:
        cls = type(v)
        if cls is NatV:
            return isinstance(ty, Nat)
        if cls is Closure:
            return isinstance(ty, Arrow) and ty.dom == v.dom
        if cls is Foreign:
            return isinstance(ty, Arrow)
        if cls is PrimPartial:
            rest = constant_type(v.const)
            for _ in v.args:
                rest = rest.cod
            return rest == ty
        if cls is PairV:
            return (isinstance(ty, Prod) and go(v.fst.force(m), ty.left)
                    and go(v.snd.force(m), ty.right))
        if cls is InlV:
            return isinstance(ty, Sum) and go(v.v.force(m), ty.left)
        if cls is InrV:
            return isinstance(ty, Sum) and go(v.v.force(m), ty.right)
        return False

    return go(v, ty)


@deep
def ext_eq_sampled(f, g, ty: Ty, sampler, n: Optional[int] = None) -> bool:
    """Sampled extensional equality of two values of type ``ty``.

    True means no counterexample was found among ``n`` sampled argument
    spines (default: ``sampler.samples``).
    """
    from .sampling import sample_value  # sampling imports this module

    n = sampler.samples if n is None else n
    rng = sampler.rng("ext-eq")
    m = Machine()

    def same(a, b, ty) -> bool:
        if isinstance(ty, Nat):
            return readback_nat(a) == readback_nat(b)
        if isinstance(ty, Prod):
            return (same(a.fst.force(m), b.fst.force(m), ty.left)
                    and same(a.snd.force(m), b.snd.force(m), ty.right))
        if isinstance(ty, Sum):
            if type(a) is not type(b):
                return False
            return same(a.v.force(m), b.v.force(m),
                        ty.left if type(a) is InlV else ty.right)
        if isinstance(ty, Arrow):
            # one argument per level per spine, shared by both sides
            x = ready(sample_value(ty.dom, rng, sampler))
            return same(m.apply(a, x), m.apply(b, x), ty.cod)
        raise IllTypedRuntime(f"cannot compare at {ty}")

    if not isinstance(ty, (Arrow, Prod, Sum)):
        return same(f, g, ty)
    for _ in range(n):
        if not same(f, g, ty):
            return False
    return True


def show_value(v, ty: Ty, depth: int = 3) -> str:
    cls = type(v)
    if cls is NatV:
        return str(v.k)
    if depth <= 0:
        return "..."
    m = Machine()
    if cls is PairV and isinstance(ty, Prod):
        return (f"<{show_value(v.fst.force(m), ty.left, depth - 1)}, "
                f"{show_value(v.snd.force(m), ty.right, depth - 1)}>")
    if cls is InlV and isinstance(ty, Sum):
        return f"inl {show_value(v.v.force(m), ty.left, depth - 1)}"
    if cls is InrV and isinstance(ty, Sum):
        return f"inr {show_value(v.v.force(m), ty.right, depth - 1)}"
    return f"<function : {ty}>"
