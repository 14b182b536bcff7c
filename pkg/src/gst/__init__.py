"""Monadic translations of System T and witness extraction.

Typical use::

    from gst import parse, corpus_path, continuity_modulus, check_continuity, Sampler

    src = parse(corpus_path().read_text())
    f = src.get("t43").body
    pair = continuity_modulus(f)
    report = check_continuity(f, pair.modulus, Sampler(seed=42))
"""

from importlib.resources import files
from pathlib import Path

from .evaluator import evaluate, eval_nat, readback_nat
from .extract import (
    bar_triple, continuity_modulus, kuroda_modulus, majorant, uc_modulus_via_bar,
    uniform_continuity_modulus,
)
from .nuclei import any_nucleus, gen_nucleus, generic_element, nucleus
from .oracle import (
    VerificationReport, check_continuity, check_gbr, check_logical_relation, check_majorizes,
    check_secures_monotone, check_uniform_continuity,
)
from .sampling import HostSeq, Sampler
from .surface import parse, parse_term, parse_type, pretty
from .syntax import typecheck
from .translate import tm_translate, ty_translate

__version__ = "0.1.0"


def corpus_path(name: str = "paper.gst") -> Path:
    """Path of a bundled corpus file."""
    return Path(str(files(__name__) / "corpus" / name))


__all__ = [
    "evaluate", "eval_nat", "readback_nat", "bar_triple", "continuity_modulus",
    "kuroda_modulus", "majorant", "uc_modulus_via_bar", "uniform_continuity_modulus",
    "any_nucleus", "gen_nucleus", "generic_element", "nucleus", "VerificationReport",
    "check_continuity", "check_gbr", "check_logical_relation", "check_majorizes",
    "check_secures_monotone", "check_uniform_continuity", "HostSeq", "Sampler", "parse",
    "parse_term", "parse_type", "pretty", "typecheck", "tm_translate", "ty_translate",
    "corpus_path",
]
