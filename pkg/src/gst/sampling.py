"""Seeded sample streams and host-side inputs for oracles.

Every random choice goes through :meth:`Sampler.rng`, which derives an
independent ``random.Random`` from the seed and a salt string, so a check's
samples do not depend on which checks ran before it.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .evaluator import Foreign, InlV, InrV, Machine, PairV, foreign_seq, nat, ready
from .syntax import Arrow, Nat, Prod, Sum, Ty


@dataclass(frozen=True)
class Sampler:
    seed: int = 42
    max_numeral: int = 8
    value_bound: int = 5
    samples: int = 100
    table_length: int = 12

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}/{salt}")

    def with_samples(self, n: int) -> "Sampler":
        return Sampler(self.seed, self.max_numeral, self.value_bound, n, self.table_length)


@dataclass(frozen=True)
class HostSeq:
    """An infinite sequence: explicit table, then a constant default."""

    table: tuple[int, ...]
    default: int = 0

    def __call__(self, i: int) -> int:
        return self.table[i] if i < len(self.table) else self.default

    def value(self) -> Foreign:
        return foreign_seq(self, f"seq{list(self.table)}+{self.default}")

    def to_json(self) -> dict:
        return {"table": list(self.table), "default": self.default}

    def prefix(self, n: int) -> list[int]:
        return [self(i) for i in range(n)]

    @staticmethod
    def const(k: int) -> "HostSeq":
        return HostSeq((), k)

    @staticmethod
    def of(prefix, default: int = 0) -> "HostSeq":
        return HostSeq(tuple(prefix), default)


def random_seq(rng: random.Random, sampler: Sampler, bound: int | None = None) -> HostSeq:
    b = sampler.value_bound if bound is None else bound
    table = tuple(rng.randint(0, b) for _ in range(sampler.table_length))
    return HostSeq(table, rng.randint(0, b))


def stable_hash(*parts) -> int:
    h = hashlib.blake2b(repr(parts).encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


# ---------------------------------------------------------------- host functionals

_PROBES = 2


def host_functional(ty: Ty, salt: str, sampler: Sampler):
    """A deterministic host value of type ``ty``.

    Arguments are observed extensionally (numerals read back, functions
    applied to fixed probe arguments) and the result is a hash of the
    observations, so ext-equal arguments yield equal results.
    """
    return _functional(ty, salt, (), sampler)


def _functional(ty: Ty, salt: str, obs: tuple, sampler: Sampler):
    if isinstance(ty, Nat):
        return nat(stable_hash(salt, obs) % (sampler.value_bound + 1))
    if isinstance(ty, Arrow):
        def fn(m: Machine, th):
            o = observe(m, th.force(m), ty.dom, salt + f"/{len(obs)}", sampler)
            return _functional(ty.cod, salt, obs + (o,), sampler)

        return Foreign(fn, f"host:{salt}")
    if isinstance(ty, Prod):
        return PairV(ready(_functional(ty.left, salt + ".1", obs, sampler)),
                     ready(_functional(ty.right, salt + ".2", obs, sampler)))
    if isinstance(ty, Sum):
        inner = _functional(ty.left if stable_hash(salt, obs) % 2 == 0 else ty.right,
                            salt + ".s", obs, sampler)
        return InlV(ready(inner)) if stable_hash(salt, obs) % 2 == 0 else InrV(ready(inner))
    raise TypeError(f"cannot build a host value at {ty}")


def probe_values(ty: Ty, salt: str, sampler: Sampler) -> list:
    rng = random.Random(f"probe/{salt}")
    return [sample_value(ty, rng, sampler) for _ in range(_PROBES)]


def observe(m: Machine, v, ty: Ty, salt: str, sampler: Sampler):
    if isinstance(ty, Nat):
        return v.k
    if isinstance(ty, Arrow):
        return tuple(observe(m, m.apply(v, ready(p)), ty.cod, salt + "/c", sampler)
                     for p in probe_values(ty.dom, salt, sampler))
    if isinstance(ty, Prod):
        return (observe(m, v.fst.force(m), ty.left, salt + ".1", sampler),
                observe(m, v.snd.force(m), ty.right, salt + ".2", sampler))
    if isinstance(ty, Sum):
        if type(v) is InlV:
            return ("l", observe(m, v.v.force(m), ty.left, salt, sampler))
        return ("r", observe(m, v.v.force(m), ty.right, salt, sampler))
    raise TypeError(f"cannot observe at {ty}")


def sample_value(ty: Ty, rng: random.Random, sampler: Sampler):
    """Draw a value of ``ty``: numerals, host sequences, or host functionals."""
    if isinstance(ty, Nat):
        return nat(rng.randint(0, sampler.max_numeral))
    if ty == Arrow(Nat(), Nat()):
        return random_seq(rng, sampler).value()
    if isinstance(ty, Arrow):
        return host_functional(ty, f"f{rng.getrandbits(48)}", sampler)
    if isinstance(ty, Prod):
        return PairV(ready(sample_value(ty.left, rng, sampler)),
                     ready(sample_value(ty.right, rng, sampler)))
    if isinstance(ty, Sum):
        if rng.random() < 0.5:
            return InlV(ready(sample_value(ty.left, rng, sampler)))
        return InrV(ready(sample_value(ty.right, rng, sampler)))
    raise TypeError(f"cannot sample at {ty}")
