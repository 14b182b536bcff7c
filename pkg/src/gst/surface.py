"""Concrete syntax: declaration files and a pretty-printer.

A file is a sequence of ``def name : type = term;`` declarations. Names of
earlier declarations, and of prelude entries, are inlined while parsing,
so every parsed body is a closed core term. Local binders shadow both.

Prelude entries that need a type take it in brackets, like the typed
constants: ``ifz[N -> N]``, ``psi[N]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from . import prelude
from .errors import ParseError, TypeMismatch, UnknownName, UnknownPreludeName
from .syntax import (
    NAT, App, Arrow, Case, Decl, Inl, Inr, Lam, Pair, Pr1, Pr2, Prod, Rec, Suc, Sum, Tm, Ty, Var,
    Zero, SUC, ZERO, numeral, numeral_value, show_type, typecheck,
)

KEYWORDS = frozenset({"def", "N", "zero", "suc", "rec", "pair", "pr1", "pr2", "inl", "inr", "case"})
_PAIRED = {"pair": Pair, "pr1": Pr1, "pr2": Pr2, "inl": Inl, "inr": Inr}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>--[^\n]*)
  | (?P<arrow>->)
  | (?P<num>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>[()\[\],:;.\\=*+])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, num, sym, eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        col = pos - start + 1
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind == "arrow":
            out.append(Token("sym", "->", line, col))
        elif kind in ("num", "ident", "sym"):
            out.append(Token(kind, m.group(), line, col))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


@dataclass(frozen=True)
class SourceFile:
    decls: tuple[Decl, ...]

    def get(self, name: str) -> Decl:
        for d in self.decls:
            if d.name == name:
                return d
        raise UnknownName(name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.decls)

    def __iter__(self) -> Iterator[Decl]:
        return iter(self.decls)


class _Parser:
    def __init__(self, text: str, known: Optional[dict[str, Decl]] = None):
        self.toks = tokenize(text)
        self.i = 0
        self.defs: dict[str, Decl] = dict(known or {})

    # ------------------------------------------------------------ tokens

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.tok
        found = tok.text or "end of input"
        return ParseError(f"{msg} (found {found!r})", tok.line, tok.col)

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("sym", "ident") and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}")
        t = self.tok
        self.i += 1
        return t

    def ident(self) -> Token:
        t = self.tok
        if t.kind != "ident" or t.text in KEYWORDS:
            raise self.error("expected an identifier")
        self.i += 1
        return t

    # ------------------------------------------------------------ file

    def file(self) -> SourceFile:
        decls = []
        while self.tok.kind != "eof":
            decls.append(self.decl())
        return SourceFile(tuple(decls))

    def decl(self) -> Decl:
        self.expect("def")
        name_tok = self.ident()
        name = name_tok.text
        if name in self.defs:
            raise ParseError(f"duplicate definition {name!r}", name_tok.line, name_tok.col)
        self.expect(":")
        ty = self.type()
        self.expect("=")
        body = self.term([])
        self.expect(";")
        found = typecheck((), body)
        if found != ty:
            raise TypeMismatch(ty, found, (name,))
        d = Decl(name, ty, body)
        self.defs[name] = d
        return d

    # ------------------------------------------------------------ types

    def type(self) -> Ty:
        left = self.sum_type()
        if self.at("->"):
            self.i += 1
            return Arrow(left, self.type())
        return left

    def sum_type(self) -> Ty:
        t = self.prod_type()
        while self.at("+"):
            self.i += 1
            t = Sum(t, self.prod_type())
        return t

    def prod_type(self) -> Ty:
        t = self.atom_type()
        while self.at("*"):
            self.i += 1
            t = Prod(t, self.atom_type())
        return t

    def atom_type(self) -> Ty:
        if self.at("N"):
            self.i += 1
            return NAT
        if self.at("("):
            self.i += 1
            t = self.type()
            self.expect(")")
            return t
        raise self.error("expected a type")

    def type_args(self, n: int) -> list[Ty]:
        self.expect("[")
        out = [self.type()]
        for _ in range(n - 1):
            self.expect(",")
            out.append(self.type())
        self.expect("]")
        return out

    # ------------------------------------------------------------ terms

    def term(self, scope: list[str]) -> Tm:
        t = self.atom(scope)
        while self.starts_atom():
            t = App(t, self.atom(scope))
        return t

    def starts_atom(self) -> bool:
        t = self.tok
        if t.kind in ("num", "ident"):
            return t.text not in ("def", "N")
        return t.kind == "sym" and t.text in ("(", "\\")

    def atom(self, scope: list[str]) -> Tm:
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return numeral(int(t.text))
        if self.at("("):
            self.i += 1
            body = self.term(scope)
            self.expect(")")
            return body
        if self.at("\\"):
            self.i += 1
            name = self.ident().text
            self.expect(":")
            dom = self.type()
            self.expect(".")
            return Lam(dom, self.term(scope + [name]))
        if t.kind != "ident":
            raise self.error("expected a term")
        self.i += 1
        word = t.text
        if word == "zero":
            return ZERO
        if word == "suc":
            return SUC
        if word == "rec":
            return Rec(*self.type_args(1))
        if word == "case":
            return Case(*self.type_args(3))
        if word in _PAIRED:
            return _PAIRED[word](*self.type_args(2))
        if word in KEYWORDS:
            raise self.error("expected a term", t)
        return self.name(word, scope, t)

    def name(self, word: str, scope: list[str], tok: Token) -> Tm:
        for depth in range(len(scope) - 1, -1, -1):
            if scope[depth] == word:
                return Var(len(scope) - 1 - depth)
        if word in self.defs:
            return self.defs[word].body
        if word in prelude.PARAMETRIC_NAMES:
            params = self.type_args(1)
            return prelude.prelude_term(word, *params)[1]
        try:
            return prelude.prelude_term(word)[1]
        except UnknownPreludeName:
            raise UnknownName(word, tok.line, tok.col) from None


def parse(text: str) -> SourceFile:
    """Parse and typecheck a declaration file."""
    return _Parser(text).file()


def parse_term(text: str, defs: Optional[SourceFile] = None) -> Tm:
    """Parse a closed term, with the declarations of ``defs`` in scope."""
    p = _Parser(text, {d.name: d for d in defs} if defs else None)
    t = p.term([])
    if p.tok.kind != "eof":
        raise p.error("unexpected trailing input")
    typecheck((), t)
    return t


def parse_type(text: str) -> Ty:
    p = _Parser(text)
    t = p.type()
    if p.tok.kind != "eof":
        raise p.error("unexpected trailing input")
    return t


# ---------------------------------------------------------------- printing


def _ty(t: Ty) -> str:
    return show_type(t)


def _const(t: Tm) -> Optional[str]:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Suc):
        return "suc"
    if isinstance(t, Rec):
        return f"rec[{_ty(t.motive)}]"
    if isinstance(t, Case):
        return f"case[{_ty(t.l)}, {_ty(t.r)}, {_ty(t.motive)}]"
    for word, cls in _PAIRED.items():
        if type(t) is cls:
            return f"{word}[{_ty(t.l)}, {_ty(t.r)}]"
    return None


def pretty(t: Tm, depth: int = 0) -> str:
    """Render a term; bound variables are named ``x<level>``.

    ``depth`` is the number of enclosing binders, whose names are
    ``x0 .. x<depth-1>``.
    """
    return _pp(t, depth, 0)


# precedence: 0 lambda allowed, 1 application head, 2 argument
def _pp(t: Tm, d: int, prec: int) -> str:
    k = numeral_value(t)
    if k is not None:
        return str(k)
    if isinstance(t, Var):
        return f"x{d - 1 - t.index}"
    if isinstance(t, Lam):
        s = f"\\x{d}:{_ty(t.dom)}. {_pp(t.body, d + 1, 0)}"
        return f"({s})" if prec > 0 else s
    if isinstance(t, App):
        head, args = t, []
        while isinstance(head, App) and numeral_value(head) is None:
            args.append(head.arg)
            head = head.fn
        s = " ".join([_pp(head, d, 1)] + [_pp(a, d, 2) for a in reversed(args)])
        return f"({s})" if prec > 1 else s
    c = _const(t)
    if c is None:
        raise TypeError(f"cannot print {t!r}")
    return c


def pretty_decl(d: Decl) -> str:
    return f"def {d.name} : {_ty(d.ty)} = {pretty(d.body)};"


def pretty_file(src: SourceFile) -> str:
    return "\n".join(pretty_decl(d) for d in src.decls) + ("\n" if src.decls else "")


__all__ = [
    "Token", "tokenize", "SourceFile", "parse", "parse_term", "parse_type", "pretty",
    "pretty_decl", "pretty_file", "KEYWORDS",
]
