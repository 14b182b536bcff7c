"""The ``gst`` command line.

Exit status: 0 on success or a passing verification, 1 when a verification
finds counterexamples, 2 on bad input (syntax, types, unknown names, an
unsuitable nucleus, an exhausted evaluation budget).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import extract as X
from . import oracle as O
from .errors import GstError
from .evaluator import apply_value, evaluate, nat, readback_nat, show_value
from .nuclei import CLI_NAMES, Kind, NucleusKind, any_nucleus, bar_types, nucleus
from .sampling import HostSeq, Sampler, random_seq
from .surface import SourceFile, parse, parse_type, pretty
from .syntax import BAIRE, NAT, Arrow, Decl, Nat, Tm, Ty
from .translate import STYLES, tm_translate, ty_translate

EXTRACT_PROPERTIES = ("modulus", "ucmodulus", "ucmodulus-bar", "majorant", "bar-triple",
                      "kuroda-modulus")
VERIFY_PROPERTIES = ("continuity", "uniform", "uniform-bar", "majorant", "gbr", "secures",
                     "logical-relation")
_FN = Arrow(BAIRE, NAT)


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gst", description="System T translations and witness extraction")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_def: bool = False):
        sp.add_argument("file", help="declaration file")
        sp.add_argument("--def", dest="name", required=need_def, help="declaration to use")

    sp = sub.add_parser("check", help="parse and typecheck, print the declared types")
    common(sp)

    sp = sub.add_parser("translate", help="print translated declarations")
    common(sp)
    sp.add_argument("--style", choices=STYLES, default="gentzen")
    sp.add_argument("--nucleus", choices=CLI_NAMES, default="identity")
    sp.add_argument("--param", help="type parameter of lifting (default N -> N) or bar (default N)")

    sp = sub.add_parser("extract", help="extract a witness term")
    common(sp, need_def=True)
    sp.add_argument("--property", choices=EXTRACT_PROPERTIES, required=True)
    sp.add_argument("--emit", choices=("term", "json"), default="term")
    sp.add_argument("--seed", type=int, default=42, help="seed for the probe sequences")

    sp = sub.add_parser("verify", help="run an oracle check and print a JSON report")
    common(sp, need_def=True)
    sp.add_argument("--property", choices=VERIFY_PROPERTIES, required=True)
    sp.add_argument("--nucleus", choices=CLI_NAMES, default="cont",
                    help="nucleus for logical-relation")
    sp.add_argument("--param")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--delta", type=int, default=2,
                    help="constant bound for uniform checks (delta = \\i. DELTA)")
    sp.add_argument("--json", dest="json_path", help="also write the report here")

    sp = sub.add_parser("eval", help="evaluate a declaration, optionally applied to numerals")
    common(sp, need_def=True)
    sp.add_argument("args", nargs="*", type=int, help="numeral arguments")
    return p


# ---------------------------------------------------------------- helpers


def _load(path: str) -> SourceFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse(text)


def _decl(src: SourceFile, name: Optional[str]) -> Decl:
    if name is None:
        raise UsageError("--def is required")
    return src.get(name)


def _kind(name: str, param: Optional[str]) -> NucleusKind:
    kind = Kind(name)
    if param is not None and kind not in (Kind.LIFTING, Kind.BAR):
        raise UsageError(f"nucleus {name} takes no --param")
    return NucleusKind.from_cli(name, parse_type(param) if param else None)


def _require_fn(d: Decl) -> None:
    if d.ty != _FN:
        raise UsageError(f"{d.name} has type {d.ty}; this property needs (N -> N) -> N")


def _ident(text: str) -> str:
    return text.replace("-", "_")


def _probes(seed: int) -> list[HostSeq]:
    rng = Sampler(seed=seed).rng("cli-probes")
    return [HostSeq.const(0), HostSeq.const(1), random_seq(rng, Sampler(seed=seed))]


def _probe_lines(t: Tm, ty: Ty, seed: int) -> list[str]:
    if ty != _FN:
        return []
    out = []
    for h in _probes(seed):
        v = readback_nat(apply_value(evaluate(t), h.value()))
        out.append(f"-- probe {list(h.table)}+{h.default} => {v}")
    return out


def _emit_defs(defs: list[tuple[str, Ty, Tm]], emit: str, seed: int) -> str:
    if emit == "json":
        return json.dumps([{"name": n, "type": str(ty), "term": pretty(t)} for n, ty, t in defs],
                          indent=2) + "\n"
    lines = []
    for n, ty, t in defs:
        lines.append(f"def {n} : {ty} = {pretty(t)};")
        lines.extend(_probe_lines(t, ty, seed))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands


def cmd_check(args, out) -> int:
    src = _load(args.file)
    decls = [src.get(args.name)] if args.name else list(src)
    for d in decls:
        out.write(f"{d.name} : {d.ty}\n")
    return 0


def cmd_translate(args, out) -> int:
    src = _load(args.file)
    n = any_nucleus(_kind(args.nucleus, args.param))
    decls = [src.get(args.name)] if args.name else list(src)
    for d in decls:
        t = tm_translate(args.style, n, (), d.body)
        ty = ty_translate(args.style, n, d.ty)
        out.write(f"def {d.name}_{args.style} : {ty} = {pretty(t)};\n")
    return 0


def cmd_extract(args, out) -> int:
    src = _load(args.file)
    d = _decl(src, args.name)
    prop, base = args.property, _ident(f"{d.name}_{args.property}")
    if prop == "majorant":
        defs = [(base, d.ty, X.majorant(d.body, d.ty))]
    else:
        _require_fn(d)
        if prop == "modulus":
            defs = [(base, _FN, X.continuity_modulus(d.body).modulus)]
        elif prop == "ucmodulus":
            defs = [(base, _FN, X.uniform_continuity_modulus(d.body).modulus)]
        elif prop == "ucmodulus-bar":
            defs = [(base, _FN, X.uc_modulus_via_bar(d.body))]
        elif prop == "kuroda-modulus":
            defs = [(base, _FN, X.kuroda_modulus(d.body))]
        else:
            tri = X.bar_triple(d.body, NAT)
            bt = bar_types(NAT)
            defs = [(f"{d.name}_value", _FN, tri.value), (f"{d.name}_bar", bt["S"], tri.bar),
                    (f"{d.name}_recursor", bt["B"], tri.recursor)]
    out.write(_emit_defs(defs, args.emit, args.seed))
    return 0


def cmd_verify(args, out) -> int:
    src = _load(args.file)
    d = _decl(src, args.name)
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    sampler = Sampler(seed=args.seed, samples=args.samples)
    prop = args.property
    if prop == "majorant":
        report = O.check_majorizes(d.body, X.majorant(d.body, d.ty), d.ty, sampler)
    elif prop == "logical-relation":
        kind = _kind(args.nucleus, args.param)
        n = nucleus(kind)
        tj = tm_translate("gentzen", n, (), d.body)
        report = O.check_logical_relation(n, O.relation_for(kind), d.body, tj, d.ty, sampler)
    else:
        _require_fn(d)
        f = d.body
        if prop == "continuity":
            report = O.check_continuity(f, X.continuity_modulus(f).modulus, sampler)
        elif prop in ("uniform", "uniform-bar"):
            m = X.uniform_continuity_modulus(f).modulus if prop == "uniform" else X.uc_modulus_via_bar(f)
            report = O.check_uniform_continuity(f, m, HostSeq.const(args.delta), sampler=sampler)
        elif prop == "gbr":
            tri = X.bar_triple(f, NAT)
            report = O.check_gbr(tri.bar, tri.recursor, NAT, sampler)
        else:
            tri = X.bar_triple(f, NAT)
            report = O.check_secures_monotone(tri.bar, f, sampler)
    text = report.to_json() + "\n"
    out.write(text)
    if args.json_path:
        Path(args.json_path).write_text(text, encoding="utf-8")
    return 0 if report.passed else 1


def cmd_eval(args, out) -> int:
    src = _load(args.file)
    d = _decl(src, args.name)
    ty, v = d.ty, evaluate(d.body)
    for a in args.args:
        if not isinstance(ty, Arrow) or not isinstance(ty.dom, Nat):
            raise UsageError(f"{d.name} does not take another numeral argument")
        if a < 0:
            raise UsageError("arguments must be naturals")
        v, ty = apply_value(v, nat(a)), ty.cod
    out.write(show_value(v, ty) + "\n")
    return 0


COMMANDS = {"check": cmd_check, "translate": cmd_translate, "extract": cmd_extract,
            "verify": cmd_verify, "eval": cmd_eval}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    try:
        return COMMANDS[args.command](args, out)
    except (GstError, UsageError, ValueError) as e:
        err.write(f"gst: {type(e).__name__}: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
