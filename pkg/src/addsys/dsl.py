"""Reader and writer for system description files.

Grammar::

    document := "system" IDENT? "{" decl* "}"
    decl     := "set" IDENT "=" expr
    expr     := term ("+" term)*          direct sum
    term     := INT "*" term | atom
    atom     := "{" INT ("," INT)* "}" | "[0," INT ")" | "N0" | "(" expr ")"

``#`` starts a comment that runs to the end of the line.  Expressions
parse to unnormalized set nodes (Finite, Interval, Tail, Dilated,
DirectSum), so printing a document and reading it back gives the same
tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from addsys.errors import DslSyntaxError, DuplicateLabel, NonZeroBase
from addsys.sets import (
    Dilated,
    DirectSum,
    Finite,
    Interval,
    StructuredSet,
    Tail,
    dilated,
    direct_sum,
    to_expr,
)
from addsys.systems import AdditiveSystem, Label


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[{}\[\](),=+*])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        column = pos - line_start + 1
        if not m:
            raise DslSyntaxError(line, column, "a token", text[pos])
        kind = m.lastgroup
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            yield Token(kind, m.group(), line, column)
        pos = m.end()
    yield Token("eof", "", line, pos - line_start + 1)


@dataclass(frozen=True)
class SystemDocument:
    name: str | None
    declarations: tuple[tuple[str, StructuredSet], ...]


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: str):
        t = self.tok
        raise DslSyntaxError(t.line, t.column, expected, t.text or "end of input")

    def accept(self, text: str) -> Token | None:
        if self.tok.text == text and self.tok.kind != "eof":
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, text: str) -> Token:
        t = self.accept(text)
        if t is None:
            self.fail(repr(text))
        return t

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            self.fail(what)
        t = self.tok
        self.i += 1
        return t

    def positive(self, what: str) -> int:
        t = self.expect_kind("int", what)
        value = int(t.text)
        if value < 1:
            raise DslSyntaxError(t.line, t.column, what, t.text)
        return value

    def document(self) -> SystemDocument:
        self.expect("system")
        name = None
        if self.tok.kind == "ident":
            name = self.tok.text
            self.i += 1
        self.expect("{")
        decls: list[tuple[str, StructuredSet]] = []
        seen = set()
        while self.accept("set"):
            t = self.expect_kind("ident", "a set label")
            if t.text in seen:
                raise DuplicateLabel(f"line {t.line}: label {t.text!r} declared twice")
            seen.add(t.text)
            self.expect("=")
            decls.append((t.text, self.expr()))
        self.expect("}")
        self.expect_kind("eof", "end of input")
        return SystemDocument(name, tuple(decls))

    def expr(self) -> StructuredSet:
        terms = [self.term()]
        while self.accept("+"):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else DirectSum(tuple(terms))

    def term(self) -> StructuredSet:
        if self.tok.kind == "int":
            scale = self.positive("a positive scale")
            self.expect("*")
            return Dilated(scale, self.term())
        return self.atom()

    def atom(self) -> StructuredSet:
        start = self.tok
        if self.accept("{"):
            elems = [int(self.expect_kind("int", "an integer").text)]
            while self.accept(","):
                elems.append(int(self.expect_kind("int", "an integer").text))
            self.expect("}")
            try:
                return Finite(tuple(elems))
            except NonZeroBase:
                raise NonZeroBase(
                    f"line {start.line}, column {start.column}: set literal {{{','.join(map(str, elems))}}} lacks 0"
                ) from None
        if self.accept("["):
            zero = self.expect_kind("int", "0")
            if zero.text.lstrip("0") != "":
                raise DslSyntaxError(zero.line, zero.column, "0", zero.text)
            self.expect(",")
            length = self.positive("a positive interval length")
            self.expect(")")
            return Interval(length)
        if self.accept("N0"):
            return Tail()
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("a set: '{...}', '[0,g)', 'N0' or '('")


def parse_system(text: str) -> SystemDocument:
    return _Parser(text).document()


def parse_set_expr(text: str) -> StructuredSet:
    p = _Parser(text)
    s = p.expr()
    p.expect_kind("eof", "end of expression")
    return s


def realize(expr: StructuredSet, bound: int) -> StructuredSet:
    """Turn a parsed expression into a normalized set, checking every sum below ``bound``."""
    if isinstance(expr, Dilated):
        return dilated(expr.scale, realize(expr.inner, bound))
    if isinstance(expr, DirectSum):
        return direct_sum([realize(p, bound) for p in expr.parts], bound)
    return expr


def to_system(doc: SystemDocument, bound: int) -> AdditiveSystem:
    return AdditiveSystem(tuple((lbl, realize(e, bound)) for lbl, e in doc.declarations))


def format_label(label: Label) -> str:
    """Integer labels from dilation print as ``_k`` so they stay valid identifiers."""
    return f"_{label}" if isinstance(label, int) else label


def print_system(doc: SystemDocument) -> str:
    head = f"system {doc.name} {{" if doc.name else "system {"
    lines = [head]
    lines += [f"  set {lbl} = {to_expr(e)}" for lbl, e in doc.declarations]
    lines.append("}")
    return "\n".join(lines) + "\n"


def document_of(sys: AdditiveSystem, name: str | None = None) -> SystemDocument:
    return SystemDocument(name, tuple((format_label(lbl), s) for lbl, s in sys))
