"""A small recursive-descent parser for algebra elements and scalars.

The accepted language is described in ``docs/grammar.md``.  Every value is
parsed as an :class:`~qsp.coideal.Element`; scalars are elements supported on
the empty word.  Errors carry the 0-based character offset where parsing
stopped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coideal import ALIASES, Element, Generator
from .qfield import ONE, Scalar, as_scalar, iota, mu, q, qbracket, qint

__all__ = ["ParseError", "parse_element", "parse_scalar", "tokenize", "Token"]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.message = message
        self.pos = pos
        self.text = text

    def pointer(self) -> str:
        """The input with a caret under the failing position."""
        return f"{self.text}\n{' ' * self.pos}^"


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    value: str
    pos: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>B(?:-1|_-1|m1|0|1)(?![A-Za-z0-9_])|Dd|D1|KhatInv|Khat|mu|[A-Za-z]\w*)
  | (?P<op>[-+*/^()\[\];,·])
    """,
    re.VERBOSE,
)

_GENERATORS = {
    "B-1": Generator.Bminus1,
    "B_-1": Generator.Bminus1,
    "Bm1": Generator.Bminus1,
    "B0": Generator.B0,
    "B1": Generator.B1,
    "Dd": Generator.Dd,
    "D1": Generator.D1,
}
_INVERSES = {
    Generator.Dd: Generator.DdInv,
    Generator.DdInv: Generator.Dd,
    Generator.D1: Generator.D1Inv,
    Generator.D1Inv: Generator.D1,
}
_ALIAS_NAMES = {"X": "X", "Y": "Y", "Z": "Z", "W": "W", "K": "Khat", "Khat": "Khat", "KhatInv": "KhatInv"}


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group(kind)
            out.append(Token(kind, "*" if value == "·" else value, pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    # helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        return ParseError(message, (tok or self.tok).pos, self.text)

    def accept(self, value: str) -> bool:
        if self.tok.kind == "op" and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            got = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, got {got!r}")

    def signed_int(self) -> int:
        sign = -1 if self.accept("-") else (self.accept("+") and 1) or 1
        if self.tok.kind != "num":
            raise self.error("expected an integer")
        v = int(self.tok.value)
        self.i += 1
        return sign * v

    # grammar
    def parse(self) -> Element:
        el = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")
        return el

    def expr(self) -> Element:
        out = self.term()
        while True:
            if self.accept("+"):
                out = out + self.term()
            elif self.accept("-"):
                out = out - self.term()
            else:
                return out

    def term(self) -> Element:
        out = self.unary()
        while True:
            if self.accept("*"):
                out = out * self.unary()
            elif self.tok.kind == "op" and self.tok.value == "/":
                at = self.tok
                self.i += 1
                den = self.unary()
                out = out * Element.scalar(self._invert_scalar(den, at))
            else:
                return out

    def unary(self) -> Element:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Element:
        start = self.tok
        base = self.atom()
        if not self.accept("^"):
            return base
        at = self.tok
        if self.accept("("):
            e = self.signed_int()
            self.expect(")")
        else:
            e = self.signed_int()
        if e >= 0:
            return base**e
        inv = self._invert(base, start)
        if inv is None:
            raise self.error("negative powers need an invertible base (scalar, Dd, D1, K)", at)
        return inv ** (-e)

    def atom(self) -> Element:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return Element.scalar(int(tok.value))
        if tok.kind == "op" and tok.value == "(":
            self.i += 1
            el = self.expr()
            self.expect(")")
            return el
        if tok.kind == "op" and tok.value == "[":
            self.i += 1
            return Element.scalar(self.bracket())
        if tok.kind == "name":
            self.i += 1
            name = tok.value
            if name in _GENERATORS:
                return Element.gen(_GENERATORS[name])
            if name in _ALIAS_NAMES:
                return ALIASES[_ALIAS_NAMES[name]]
            if name == "comm":
                return self.commutator(tok)
            if name == "q":
                return Element.scalar(q(1))
            if name == "mu":
                return Element.scalar(mu(1))
            if name == "i":
                return Element.scalar(iota())
            raise ParseError(f"unknown name {name!r}", tok.pos, self.text)
        got = tok.value or "end of input"
        raise self.error(f"unexpected {got!r}")

    def commutator(self, at: Token) -> Element:
        """``comm(A, B)`` or ``comm(A, B; p)`` = ``A B - p B A`` (``p = 1`` by default)."""
        self.expect("(")
        a = self.expr()
        self.expect(",")
        b = self.expr()
        p = Element.one()
        if self.accept(";"):
            at_p = self.tok
            p = Element.scalar(self._scalar_of(self.expr(), at_p))
        self.expect(")")
        return a * b - p * b * a

    def bracket(self) -> Scalar:
        """``[n]`` or ``[x; n]`` for a scalar expression ``x``."""
        save = self.i
        try:
            n = self.signed_int()
            if self.accept("]"):
                return qint(n)
        except ParseError:
            pass
        self.i = save
        at = self.tok
        x = self._scalar_of(self.expr(), at)
        self.expect(";")
        n = self.signed_int()
        self.expect("]")
        return qbracket(x, n)

    # scalar helpers
    def _scalar_of(self, el: Element, at: Token) -> Scalar:
        if any(w for w in el.terms):
            raise self.error("expected a scalar", at)
        return el.terms.get((), as_scalar(0))

    def _invert_scalar(self, el: Element, at: Token) -> Scalar:
        c = self._scalar_of(el, at)
        if not c:
            raise self.error("division by zero", at)
        return c.inverse()

    def _invert(self, el: Element, at: Token) -> Element | None:
        if not el.terms:
            return None
        if all(not w for w in el.terms):
            c = el.terms[()]
            return Element.scalar(c.inverse())
        if len(el.terms) == 1:
            ((w, c),) = el.terms.items()
            if all(g in _INVERSES for g in w):
                return Element({tuple(_INVERSES[g] for g in reversed(w)): c.inverse()})
        return None


def parse_element(text: str) -> Element:
    """Parse an algebra expression such as ``"B0*B1 - q^-1*B1*B0"``."""
    return _Parser(text).parse()


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar expression such as ``"i*q^2"`` or ``"[mu;2] - q^-3*[mu;0]"``."""
    p = _Parser(text)
    at = p.tok
    el = p.parse()
    if any(w for w in el.terms):
        raise ParseError("expected a scalar, got an algebra element", at.pos, text)
    return el.terms.get((), as_scalar(0)) if el.terms else as_scalar(0)
