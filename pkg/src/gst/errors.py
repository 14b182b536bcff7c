"""Exception hierarchy shared by every gst module."""

from __future__ import annotations


class GstError(Exception):
    """Base class for all errors raised by gst."""


class TypeCheckError(GstError, TypeError):
    """A term failed to typecheck."""


class UnboundVariable(TypeCheckError):
    def __init__(self, index: int, depth: int):
        self.index = index
        self.depth = depth
        super().__init__(f"unbound variable #{index} in a context of length {depth}")


class TypeMismatch(TypeCheckError):
    def __init__(self, expected, found, path: tuple[str, ...] = ()):
        self.expected = expected
        self.found = found
        self.path = tuple(path)
        where = "/".join(self.path) or "<root>"
        super().__init__(f"type mismatch at {where}: expected {expected}, found {found}")


class NonFunctionApplication(TypeCheckError):
    def __init__(self, found, path: tuple[str, ...] = ()):
        self.found = found
        self.path = tuple(path)
        where = "/".join(self.path) or "<root>"
        super().__init__(f"application of a non-function of type {found} at {where}")


class ParseError(GstError, SyntaxError):
    """Located syntax error in a source file."""

    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"{line}:{col}: {message}")


class UnknownName(GstError):
    def __init__(self, name: str, line: int = 0, col: int = 0):
        self.name = name
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: unknown name {name!r}")


class BudgetExhausted(GstError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"evaluation budget of {budget} steps exhausted")


class IllTypedRuntime(GstError):
    """Internal invariant breach during evaluation; always a bug."""


class NotANumeral(GstError):
    pass


class UnknownPreludeName(GstError):
    pass


class NucleusTooWeak(GstError):
    """A simple nucleus was given where sums or K-style translations need a generalized one."""


class WrongTier(GstError):
    pass


class NoGenericElement(GstError):
    pass


class UnsynthesizableArguments(GstError):
    """No generator for related argument pairs exists at the requested type."""
