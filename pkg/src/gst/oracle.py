"""Brute-force and sampled verification of extracted witnesses.

Checks evaluate terms against host-side inputs (tables of naturals, hash
based functionals) and never reuse the prelude's sequence operations, so a
bug in a prelude term cannot hide itself. Higher-type quantifiers are only
sampled: a pass is evidence, a fail comes with a replayable counterexample.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import prelude as P
from .build import build, closed, lam
from .errors import BudgetExhausted, UnsynthesizableArguments
from .evaluator import Foreign, Machine, PairV, deep, nat, readback_nat, ready
from .nuclei import Kind, NucleusKind, bar_projections, vm_pair
from .sampling import HostSeq, Sampler, random_seq, stable_hash
from .syntax import BAIRE, NAT, SEQ, Arrow, Nat, Prod, Tm, Ty, arrows, typecheck
from .translate import SimpleNucleus, tm_translate

MAX_COUNTEREXAMPLES = 10
SEQ_MAX_LEN = 4
SEQ_MAX_ENTRY = 3


# ---------------------------------------------------------------- reports


@dataclass
class VerificationReport:
    property: str
    seed: int
    samples: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def add(self, inputs: dict, observed: Any, expected: Any) -> None:
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(
                {"inputs": inputs, "observed": observed, "expected": expected})

    def to_dict(self) -> dict:
        return {"property": self.property, "seed": self.seed, "samples": self.samples,
                "verdict": self.verdict, "counterexamples": self.counterexamples}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def merge_reports(name: str, reports: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(name, reports[0].seed if reports else 0)
    for r in reports:
        out.samples += r.samples
        for c in r.counterexamples:
            if len(out.counterexamples) < MAX_COUNTEREXAMPLES:
                out.counterexamples.append(dict(c, part=r.property))
    return out


# ---------------------------------------------------------------- host helpers


def _val(m: Machine, t: Tm):
    return m.eval(t, None)


def _call(m: Machine, f, *args):
    return m.apply_values(f, *args)


def _nat(m: Machine, f, *args) -> int:
    return readback_nat(_call(m, f, *args))


def seq_value(entries) -> PairV:
    """A finite sequence ``<entries, length>``; entries past the end read as 0."""
    entries = tuple(entries)
    return PairV(ready(HostSeq(entries, 0).value()), ready(nat(len(entries))))


def read_seq(m: Machine, s) -> tuple[int, ...]:
    """The meaningful entries of a sequence value."""
    n = readback_nat(s.snd.force(m))
    fn = s.fst.force(m)
    return tuple(_nat(m, fn, nat(i)) for i in range(n))


def random_entries(rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randint(0, SEQ_MAX_ENTRY) for _ in range(rng.randint(0, SEQ_MAX_LEN)))


def concat(entries, alpha: HostSeq) -> HostSeq:
    return HostSeq(tuple(entries) + alpha.table, alpha.default)


def perturb(alpha: HostSeq, m: int, rng: random.Random, bound: int) -> HostSeq:
    """Agree with ``alpha`` below ``m``; change at least one position in [m, m+8]."""
    bound = max(bound, 1)
    length = max(len(alpha.table), m + 9)
    out = [alpha(i) for i in range(length)]
    positions = [i for i in range(m, m + 9) if rng.random() < 0.5] or [rng.randint(m, m + 8)]
    for i in positions:
        out[i] = rng.choice([v for v in range(bound + 1) if v != out[i]])
    return HostSeq(tuple(out), alpha.default)


def below(delta: HostSeq, length: int, rng: random.Random, agree: Optional[HostSeq] = None,
          upto: int = 0) -> HostSeq:
    """A random sequence pointwise at most ``delta``, copying ``agree`` below ``upto``."""
    table = tuple(agree(i) if agree is not None and i < upto else rng.randint(0, delta(i))
                  for i in range(length))
    return HostSeq(table, 0)


def _gbr_host(salt: str, bound: int):
    """G and H reading only the meaningful part of their sequence argument."""

    def G(m, th):
        return nat(stable_hash(salt, "G", read_seq(m, th.force(m))) % (bound + 1))

    def H(m, th):
        s = read_seq(m, th.force(m))
        probe = stable_hash(salt, "probe", s) % 3

        def with_f(m2, fth):
            fx = _nat(m2, fth.force(m2), nat(probe))
            return nat(stable_hash(salt, "H", s, fx) % (bound + 1))

        return Foreign(with_f, f"H{s}")

    return Foreign(G, f"G:{salt}"), Foreign(H, f"H:{salt}")


def _gbr_clause(m: Machine, S, B, G, H, entries) -> Optional[tuple]:
    """None if the GBR equation for ``entries`` holds, else (observed, expected)."""
    s = seq_value(entries)
    lhs = _nat(m, B, G, H, s)
    if _nat(m, S, s) != 0:
        rhs = _nat(m, G, s)
    else:
        rest = Foreign(lambda m2, th: _call(m2, B, G, H, seq_value(entries + (m2.force_nat(th),))),
                       "B(G,H,s*n)")
        rhs = _nat(m, H, s, rest)
    return None if lhs == rhs else (lhs, rhs)


# ---------------------------------------------------------------- witness checks


@deep
def check_continuity(f: Tm, M: Tm, sampler: Sampler) -> VerificationReport:  # noqa: N803
    rep = VerificationReport("continuity", sampler.seed)
    rng = sampler.rng("continuity")
    fv, mv = _val(Machine(), f), _val(Machine(), M)
    for _ in range(sampler.samples):
        m = Machine()
        alpha = random_seq(rng, sampler)
        modulus = _nat(m, mv, alpha.value())
        beta = perturb(alpha, modulus, rng, sampler.value_bound)
        fa, fb = _nat(m, fv, alpha.value()), _nat(m, fv, beta.value())
        rep.samples += 1
        if fa != fb:
            rep.add({"alpha": alpha.to_json(), "beta": beta.to_json(), "modulus": modulus}, fb, fa)
    return rep


@deep
def check_uniform_continuity(f: Tm, M: Tm, delta: HostSeq, prefix_bound: int = 2,  # noqa: N803
                             sampler: Optional[Sampler] = None,
                             cap: int = 10 ** 6) -> VerificationReport:
    """Exhaustive check of ``M delta`` as a modulus of uniform continuity below ``delta``.

    All prefixes of length ``M delta + prefix_bound`` bounded by ``delta`` are
    extended by zeros; ``f`` must be constant on each class of prefixes that
    agree below ``M delta``.
    """
    seed = sampler.seed if sampler is not None else 0
    rep = VerificationReport("uniform-continuity", seed)
    fv = _val(Machine(), f)
    modulus = _nat(Machine(), _val(Machine(), M), delta.value())
    length = modulus + prefix_bound
    count = 1
    for i in range(length):
        count *= delta(i) + 1
        if count > cap:
            raise BudgetExhausted(cap)
    seen: dict[tuple, tuple] = {}
    for prefix in itertools.product(*(range(delta(i) + 1) for i in range(length))):
        value = _nat(Machine(), fv, HostSeq(prefix, 0).value())
        rep.samples += 1
        key = prefix[:modulus]
        if key not in seen:
            seen[key] = (prefix, value)
        elif seen[key][1] != value:
            rep.add({"delta": delta.to_json(), "modulus": modulus,
                     "alpha": list(seen[key][0]), "beta": list(prefix)}, value, seen[key][1])
    return rep


@deep
def check_gbr(S: Tm, B: Tm, sigma: Ty, sampler: Sampler) -> VerificationReport:  # noqa: N803
    if sigma != NAT:
        raise UnsynthesizableArguments("the GBR check samples G and H at motive N only")
    rep = VerificationReport("gbr", sampler.seed)
    rng = sampler.rng("gbr")
    sv, bv = _val(Machine(), S), _val(Machine(), B)
    for i in range(sampler.samples):
        entries = random_entries(rng)
        salt = f"gbr{rng.getrandbits(48)}"
        G, H = _gbr_host(salt, sampler.value_bound)
        bad = _gbr_clause(Machine(), sv, bv, G, H, entries)
        rep.samples += 1
        if bad:
            rep.add({"s": list(entries), "G/H": salt}, *bad)
    return rep


@deep
def check_secures_monotone(S: Tm, Y: Tm, sampler: Sampler) -> VerificationReport:  # noqa: N803
    rep = VerificationReport("secures-monotone", sampler.seed)
    rng = sampler.rng("secures")
    sv, yv = _val(Machine(), S), _val(Machine(), Y)
    for _ in range(sampler.samples):
        m = Machine()
        entries = random_entries(rng)
        rep.samples += 1
        if _nat(m, sv, seq_value(entries)) == 0:
            continue
        k = rng.randint(0, SEQ_MAX_ENTRY)
        if _nat(m, sv, seq_value(entries + (k,))) == 0:
            rep.add({"s": list(entries), "n": k, "check": "monotone"}, 0, 1)
        alpha = random_seq(rng, sampler)
        ext, hat = concat(entries, alpha), HostSeq(entries, 0)
        y1, y0 = _nat(m, yv, ext.value()), _nat(m, yv, hat.value())
        if y1 != y0:
            rep.add({"s": list(entries), "alpha": alpha.to_json(), "check": "secures"}, y1, y0)
    return rep


# ---------------------------------------------------------------- relation specs

# library(m, point, rng, nucleus) -> (source int or None, target value)
Library = Callable[[Machine, Any, random.Random], tuple[Optional[int], Any]]
# base(m, point, n, w, rng) -> None when related, else (observed, expected)
Base = Callable[[Machine, Any, Optional[int], Any, random.Random], Optional[tuple]]


@dataclass(frozen=True)
class RelationSpec:
    """The base relation at N of a logical relation, plus generators.

    ``point`` draws the parameter the relation depends on (alpha, delta or
    nothing); ``library`` yields pairs known to be related at N, built from
    explicit terms and not from the nucleus' kappa. In unary mode the source
    side is absent and ``base`` receives ``n = None``.
    """

    name: str
    base: Base
    library: Library
    point: Callable[[random.Random, Sampler], Any] = lambda rng, sampler: None
    point_json: Callable[[Any], Any] = lambda p: None
    unary: bool = False
    pool: tuple = ()
    extra_pairs: Optional[Callable] = None
    generic_at_point: bool = False
    host_bound: Optional[int] = None


def _closed_cache():
    cache: dict = {}

    def get(m: Machine, key, make: Callable[[], Tm]):
        if key not in cache:
            cache[key] = _val(m, make())
        return cache[key]

    return get


def _vm_const(k: int) -> Tm:
    return build(vm_pair(lam(BAIRE, lambda _: k), lam(BAIRE, lambda _: 0)))


def _vm_proj(j: int) -> Tm:
    return build(vm_pair(lam(BAIRE, lambda b: b(j)), lam(BAIRE, lambda _: j + 1)))


def _vm_nested(j: int) -> Tm:
    return build(vm_pair(lam(BAIRE, lambda b: b(b(j))),
                         lam(BAIRE, lambda b: P.MAX(P.suc(b(j)), j + 1))))


def _vm_library(max_index: int, max_const: int = 8) -> Library:
    get = _closed_cache()

    def library(m, point: HostSeq, rng):
        which = rng.randrange(3)
        if which == 0:
            k = rng.randint(0, max_const)
            return k, get(m, ("c", k), lambda: _vm_const(k))
        j = rng.randint(0, max_index)
        if which == 1:
            return point(j), get(m, ("p", j), lambda: _vm_proj(j))
        return point(point(j)), get(m, ("n", j), lambda: _vm_nested(j))

    return library


def _continuity_base(m, alpha: HostSeq, n, w, rng, tries: int = 4):
    vw, mw = w.fst.force(m), w.snd.force(m)
    value = _nat(m, vw, alpha.value())
    if n is not None and n != value:
        return value, n
    modulus = _nat(m, mw, alpha.value())
    for _ in range(tries):
        beta = perturb(alpha, modulus, rng, 5)
        vb = _nat(m, vw, beta.value())
        if vb != value:
            return {"beta": beta.to_json(), "value": vb, "modulus": modulus}, value
    return None


def _uc_base(m, delta: HostSeq, n, w, rng, tries: int = 4):
    vw, mw = w.fst.force(m), w.snd.force(m)
    value = _nat(m, vw, delta.value())
    if n is not None and n != value:
        return value, n
    modulus = _nat(m, mw, delta.value())
    for _ in range(tries):
        a = below(delta, modulus + 9, rng)
        b = below(delta, modulus + 9, rng, agree=a, upto=modulus)
        va, vb = _nat(m, vw, a.value()), _nat(m, vw, b.value())
        if va != vb:
            return {"alpha": a.to_json(), "beta": b.to_json(), "modulus": modulus,
                    "value": vb}, va
    return None


def _bar_base(m, alpha: HostSeq, n, w, rng, tries: int = 3):
    vw = w.fst.force(m)
    rest = w.snd.force(m)
    sw, bw = rest.fst.force(m), rest.snd.force(m)
    value = _nat(m, vw, alpha.value())
    if n is not None and n != value:
        return value, n
    for _ in range(tries):
        entries = random_entries(rng)
        if _nat(m, sw, seq_value(entries)) != 0:
            k = rng.randint(0, SEQ_MAX_ENTRY)
            if _nat(m, sw, seq_value(entries + (k,))) == 0:
                return {"s": list(entries), "n": k, "check": "monotone"}, 1
            beta = random_seq(rng, Sampler())
            y1 = _nat(m, vw, concat(entries, beta).value())
            y0 = _nat(m, vw, HostSeq(entries, 0).value())
            if y1 != y0:
                return {"s": list(entries), "alpha": beta.to_json(), "check": "secures"}, y0
        G, H = _gbr_host(f"b{rng.getrandbits(32)}", 5)
        bad = _gbr_clause(m, sw, bw, G, H, entries)
        if bad:
            return {"s": list(entries), "check": "gbr", "observed": bad[0]}, bad[1]
    return None


def _bar_library() -> Library:
    get = _closed_cache()
    bar = bar_projections(NAT)
    t = bar.t

    def const(k):
        return build(bar.triple(lam(BAIRE, lambda _: k), lam(SEQ, lambda _: 1),
                                lam(t["G"], t["H"], lambda G, _H: G)))

    def proj(j):
        return build(bar.triple(lam(BAIRE, lambda b: b(j)),
                                lam(SEQ, lambda s: P.LE(j, P.seq_len(s))),
                                P.term("psi", NAT)(j)))

    def library(m, point: HostSeq, rng):
        if rng.random() < 0.5:
            k = rng.randint(0, 8)
            return k, get(m, ("c", k), lambda: const(k))
        j = rng.randint(0, 4)
        return point(j), get(m, ("p", j), lambda: proj(j))

    return library


def _seq_point(bound: Optional[int] = None):
    return lambda rng, sampler: random_seq(rng, sampler, bound)


def _seq_json(p: HostSeq):
    return p.to_json()


def continuity_spec() -> RelationSpec:
    return RelationSpec("continuity", _continuity_base, _vm_library(8), _seq_point(), _seq_json,
                        generic_at_point=True)


def uc_spec() -> RelationSpec:
    # Theta inside kappa enumerates all prefixes below delta, and nested
    # kappas multiply that by the size of each image, so everything stays small
    return RelationSpec("uniform-continuity", _uc_base, _vm_library(3, 3), _seq_point(2),
                        _seq_json, generic_at_point=True, host_bound=2)


def bar_spec() -> RelationSpec:
    return RelationSpec("bar", _bar_base, _bar_library(), _seq_point(), _seq_json,
                        generic_at_point=True)


def _maj_base(m, point, n, w, rng):
    k = readback_nat(w)
    return None if n <= k else (k, f">= {n}")


def _maj_library(m, point, rng):
    a = rng.randint(0, 8)
    return a, nat(rng.randint(a, 8))


def maj_spec(pool: tuple = ()) -> RelationSpec:
    return RelationSpec("majorizability", _maj_base, _maj_library, pool=pool,
                        extra_pairs=_maj_pairs)


def identity_spec() -> RelationSpec:
    def base(m, point, n, w, rng):
        k = readback_nat(w)
        return None if n == k else (k, n)

    def library(m, point, rng):
        k = rng.randint(0, 8)
        return k, nat(k)

    return RelationSpec("identity", base, library)


def lifting_spec(predicate: Optional[Callable[[Machine, Any, Any], bool]] = None) -> RelationSpec:
    """Lifting at X = N^N. With a predicate on JN the spec is unary (the Q lifting)."""
    get = _closed_cache()

    def library(m, x: HostSeq, rng):
        if rng.random() < 0.5:
            k = rng.randint(0, 8)
            return k, get(m, ("c", k), lambda: build(lam(BAIRE, lambda _: k)))
        j = rng.randint(0, 8)
        return x(j), get(m, ("p", j), lambda: build(lam(BAIRE, lambda b: b(j))))

    if predicate is None:
        def base(m, x, n, w, rng):
            v = _nat(m, w, x.value())
            return None if n == v else (v, n)

        return RelationSpec("lifting", base, library, _seq_point(), _seq_json,
                            generic_at_point=True)

    def unary_base(m, x, n, w, rng):
        return None if predicate(m, x, w) else ("P fails", "P holds")

    return RelationSpec("lifting-Q", unary_base, library, _seq_point(), _seq_json, unary=True,
                        generic_at_point=True)


def relation_for(kind: NucleusKind) -> RelationSpec:
    k = kind.kind
    if k is Kind.IDENTITY:
        return identity_spec()
    if k is Kind.MAJOR:
        return maj_spec()
    if k is Kind.LIFTING and kind.param == BAIRE:
        return lifting_spec()
    if k is Kind.CONT:
        return continuity_spec()
    if k is Kind.UCONT:
        return uc_spec()
    if k is Kind.BAR and kind.param == NAT:
        return bar_spec()
    raise UnsynthesizableArguments(f"no relation is provided for {kind}")


# ---------------------------------------------------------------- related pairs


def _first_order_arity(ty: Ty) -> Optional[int]:
    k = 0
    while isinstance(ty, Arrow):
        if not isinstance(ty.dom, Nat):
            return None
        ty, k = ty.cod, k + 1
    return k if isinstance(ty, Nat) and k > 0 else None


def host_nat_fn(arity: int, salt: str, bound: int) -> Foreign:
    """A curried host function N^arity -> N given by hashing its arguments."""

    def step(args: tuple):
        def fn(m, th):
            got = args + (m.force_nat(th),)
            if len(got) == arity:
                return nat(stable_hash(salt, got) % (bound + 1))
            return step(got)

        return Foreign(fn, f"h:{salt}")

    return step(())


def _lift_term(nucleus: SimpleNucleus, arity: int) -> Tm:
    # \h w1 .. wk. kappa(\n1. kappa(\n2. ... eta(h n1 .. nk)) w2) w1
    jn = nucleus.jn
    kappa, eta = closed(nucleus.kappa), closed(nucleus.eta)
    h_ty = arrows(*([NAT] * arity), NAT)

    def body(h, *ws):
        def go(i, ns):
            if i == arity:
                return eta(h(*ns))
            return kappa(lam(NAT, lambda n: go(i + 1, ns + (n,))), ws[i])
        return go(0, ())

    return build(lam(h_ty, *([jn] * arity), body))


def _maj_pairs(ty: Ty, m: Machine, rng: random.Random, sampler: Sampler, gen):
    """Majorizability pairs with the domination enforced by construction."""
    if ty == BAIRE:
        # running maximum plus one bump: monotone, dominating, and small
        x = random_seq(rng, sampler)
        bump = rng.randint(0, 1)
        table = tuple(itertools.accumulate(x.table, max))
        top = max(table[-1] if table else 0, x.default)
        y = HostSeq(tuple(v + bump for v in table), top + bump)
        return x.value(), y.value(), {"x": x.to_json(), "y": y.to_json()}
    arity = _first_order_arity(ty)
    if arity is not None:
        salt = f"h{rng.getrandbits(48)}"
        bound = sampler.value_bound
        top = bound + rng.randint(0, 2)
        return host_nat_fn(arity, salt, bound), _const_fn(arity, nat(top)), {"h": salt, "bound": top}
    if isinstance(ty, Arrow) and ty.dom == BAIRE and isinstance(ty.cod, Nat) and rng.random() < 0.5:
        c = rng.randint(0, 8)
        d = rng.randint(c, 8)
        at = lambda k: Foreign(lambda m2, th: _call(m2, th.force(m2), nat(k)), f"at{k}")  # noqa: E731
        return at(c), at(d), {"eval_at": [c, d]}
    if isinstance(ty, Arrow):
        x0, y0, desc = gen(ty.cod)
        return (Foreign(lambda m2, th: x0, "const"), Foreign(lambda m2, th: y0, "const"),
                {"const": desc})
    return None


def _const_fn(arity: int, v):
    if arity == 0:
        return v
    inner = _const_fn(arity - 1, v)
    return Foreign(lambda m, th: inner, "const")


class _Relation:
    """Sampling machinery for one spec at one point."""

    def __init__(self, spec: RelationSpec, nucleus: Optional[SimpleNucleus], sampler: Sampler,
                 rng: random.Random):
        self.spec, self.nucleus, self.sampler, self.rng = spec, nucleus, sampler, rng
        self._lift: dict = {}
        self._pool: dict = {}

    def lift(self, m: Machine, arity: int):
        if arity not in self._lift:
            self._lift[arity] = _val(m, _lift_term(self.nucleus, arity))
        return self._lift[arity]

    def pool(self, m: Machine, ty: Ty) -> list:
        if ty not in self._pool:
            pairs = []
            for u in self.spec.pool:
                if typecheck((), u) == ty and self.nucleus is not None:
                    uj = tm_translate("gentzen", self.nucleus, (), u)
                    pairs.append((_val(m, u), _val(m, uj)))
            self._pool[ty] = pairs
        return self._pool[ty]

    def pair(self, m: Machine, point, ty: Ty):
        """A related (source, target, description) triple at ``ty``."""
        rng, spec = self.rng, self.spec
        if spec.extra_pairs is not None:
            got = spec.extra_pairs(ty, m, rng, self.sampler, lambda t: self.pair(m, point, t))
            if got is not None:
                return got
        if isinstance(ty, Nat):
            n, w = spec.library(m, point, rng)
            return (None if spec.unary else nat(n)), w, n
        if isinstance(ty, Prod):
            a, b = self.pair(m, point, ty.left), self.pair(m, point, ty.right)
            src = None if spec.unary else PairV(ready(a[0]), ready(b[0]))
            return src, PairV(ready(a[1]), ready(b[1])), [a[2], b[2]]
        choices = []
        arity = _first_order_arity(ty)
        if arity is not None and self.nucleus is not None:
            choices.append("lift")
        if (ty == BAIRE and spec.generic_at_point and self.nucleus is not None
                and self.nucleus.omega is not None):
            choices.append("generic")
        if self.pool(m, ty):
            choices.append("pool")
        if not choices:
            raise UnsynthesizableArguments(f"no related pairs can be synthesized at {ty}")
        how = rng.choice(choices)
        if how == "lift":
            salt = f"h{rng.getrandbits(48)}"
            bound = spec.host_bound if spec.host_bound is not None else self.sampler.max_numeral
            h = host_nat_fn(arity, salt, bound)
            return (None if spec.unary else h), _call(m, self.lift(m, arity), h), {"lift": salt}
        if how == "generic":
            omega = _val(m, self.nucleus.omega)
            return (None if spec.unary else point.value()), omega, "generic"
        pairs = self.pool(m, ty)
        i = rng.randrange(len(pairs))
        return pairs[i][0], pairs[i][1], {"pool": i}

    def holds(self, m: Machine, point, ty: Ty, src, tgt, trace: list) -> Optional[tuple]:
        """Check ``src R_ty tgt`` along one sampled argument spine."""
        if isinstance(ty, Nat):
            n = None if self.spec.unary else readback_nat(src)
            return self.spec.base(m, point, n, tgt, self.rng)
        if isinstance(ty, Prod):
            for part, sub in (("fst", ty.left), ("snd", ty.right)):
                s = None if src is None else getattr(src, part).force(m)
                bad = self.holds(m, point, sub, s, getattr(tgt, part).force(m), trace + [part])
                if bad:
                    return bad
            return None
        if isinstance(ty, Arrow):
            x, y, desc = self.pair(m, point, ty.dom)
            trace.append(desc)
            s = None if src is None else _call(m, src, x)
            return self.holds(m, point, ty.cod, s, _call(m, tgt, y), trace)
        raise UnsynthesizableArguments(f"the relation is not defined at {ty}")


# ---------------------------------------------------------------- relation checks


@deep
def check_majorizes(t: Tm, u: Tm, rho: Ty, sampler: Sampler, bound: int = 6,
                    pool: tuple = ()) -> VerificationReport:
    """``t maj u``: exhaustive over inputs up to ``bound`` at first order, sampled above."""
    rep = VerificationReport("majorizes", sampler.seed)
    tv, uv = _val(Machine(), t), _val(Machine(), u)
    arity = 0 if isinstance(rho, Nat) else _first_order_arity(rho)
    if arity is not None and arity <= 3:
        # each side is evaluated once per input tuple, then every pair x <= y
        # (componentwise) is compared
        grid = list(itertools.product(range(bound + 1), repeat=arity))
        tvals = {x: _nat(Machine(), tv, *map(nat, x)) for x in grid}
        uvals = {y: _nat(Machine(), uv, *map(nat, y)) for y in grid}
        for y in grid:
            for x in itertools.product(*(range(k + 1) for k in y)):
                rep.samples += 1
                if tvals[x] > uvals[y]:
                    rep.add({"x": list(x), "y": list(y)}, uvals[y], f">= {tvals[x]}")
        return rep
    rel = _Relation(maj_spec(pool), None, sampler, sampler.rng("majorizes"))
    for _ in range(sampler.samples):
        trace: list = []
        bad = rel.holds(Machine(), None, rho, tv, uv, trace)
        rep.samples += 1
        if bad:
            rep.add({"arguments": trace}, *bad)
    return rep


def _point(spec: RelationSpec, rng, sampler):
    return spec.point(rng, sampler)


@deep
def check_eta_condition(nucleus: SimpleNucleus, spec: RelationSpec,
                        sampler: Sampler) -> VerificationReport:
    """``n R eta(n)`` for sampled n and points."""
    rep = VerificationReport("eta-condition", sampler.seed)
    rng = sampler.rng(f"eta/{spec.name}")
    eta = _val(Machine(), nucleus.eta)
    for _ in range(sampler.samples):
        m = Machine()
        point = _point(spec, rng, sampler)
        n = rng.randint(0, sampler.max_numeral)
        bad = spec.base(m, point, None if spec.unary else n, _call(m, eta, nat(n)), rng)
        rep.samples += 1
        if bad:
            rep.add({"point": spec.point_json(point), "n": n}, *bad)
    return rep


@deep
def check_kappa_condition(nucleus: SimpleNucleus, spec: RelationSpec,
                          sampler: Sampler) -> VerificationReport:
    """``(forall n. f n R g n) -> f R kappa g`` for f, g assembled from library pairs."""
    rep = VerificationReport("kappa-condition", sampler.seed)
    rng = sampler.rng(f"kappa/{spec.name}")
    kappa = _val(Machine(), nucleus.kappa)
    for _ in range(sampler.samples):
        m = Machine()
        point = _point(spec, rng, sampler)
        table = [spec.library(m, point, rng) for _ in range(sampler.table_length + 1)]
        *rows, default = table
        f = HostSeq(tuple(r[0] for r in rows), default[0]) if not spec.unary else None
        gs = [r[1] for r in rows]
        g = Foreign(lambda m2, th, gs=gs, d=default[1]: (
            lambda i: gs[i] if i < len(gs) else d)(m2.force_nat(th)), "g")
        n, w = spec.library(m, point, rng)
        fn = None if spec.unary else f(n)
        bad = spec.base(m, point, fn, _call(m, kappa, g, w), rng)
        rep.samples += 1
        if bad:
            rep.add({"point": spec.point_json(point), "f": None if f is None else f.to_json(),
                     "n": n}, *bad)
    return rep


@deep
def check_conclusion(nucleus: SimpleNucleus, spec: RelationSpec, t: Tm, tJ: Tm, rho: Ty,  # noqa: N803
                     sampler: Sampler) -> VerificationReport:
    """``t R_rho tJ`` along sampled spines of related arguments."""
    rep = VerificationReport("conclusion", sampler.seed)
    rng = sampler.rng(f"conclusion/{spec.name}")
    rel = _Relation(spec, nucleus, sampler, rng)
    tv = None if spec.unary else _val(Machine(), t)
    tjv = _val(Machine(), tJ)
    for _ in range(sampler.samples):
        m = Machine()
        point = _point(spec, rng, sampler)
        trace: list = []
        bad = rel.holds(m, point, rho, tv, tjv, trace)
        rep.samples += 1
        if bad:
            rep.add({"point": spec.point_json(point), "arguments": trace}, *bad)
    return rep


def check_logical_relation(nucleus: SimpleNucleus, spec: RelationSpec, t: Tm, tJ: Tm,  # noqa: N803
                           rho: Ty, sampler: Sampler) -> VerificationReport:
    parts = [check_eta_condition(nucleus, spec, sampler),
             check_kappa_condition(nucleus, spec, sampler),
             check_conclusion(nucleus, spec, t, tJ, rho, sampler)]
    return merge_reports("logical-relation", parts)


__all__ = [
    "Sampler", "HostSeq", "VerificationReport", "merge_reports", "RelationSpec",
    "check_continuity", "check_uniform_continuity", "check_majorizes", "check_gbr",
    "check_secures_monotone", "check_eta_condition", "check_kappa_condition",
    "check_conclusion", "check_logical_relation", "continuity_spec", "uc_spec", "bar_spec",
    "maj_spec", "identity_spec", "lifting_spec", "relation_for", "seq_value", "read_seq",
    "perturb", "host_nat_fn",
]
