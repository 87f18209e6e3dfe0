"""Parser for quartic products of Hilb^2 divisors, e.g. ``"A.B.T.T"`` or ``"(2A - T/2).F.F.K"``.

Grammar::

    product := sum "." sum "." sum "." sum
    sum     := ["+" | "-"] term (("+" | "-") term)*
    term    := [coef ["*"]] atom
    coef    := INT ["/" INT]
    atom    := NAME | "(" sum ")"
"""

from __future__ import annotations

import re
from fractions import Fraction

from .hilb2 import Hilb2Divisor, quartic
from .lattice import C2, LatticeClass, SurfaceParams, classes

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[.+\-*/()]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        caret = f"\n  {text}\n  {' ' * position}^" if text else ""
        super().__init__(f"position {position}: {message}{caret}")


def _tokenize(text: str) -> list:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def default_names(params: SurfaceParams) -> dict:
    """Names available in every expression."""
    cl = classes(params)
    names = {
        "T": Hilb2Divisor.T(),
        "K": Hilb2Divisor(cl.K_S),
        "F": Hilb2Divisor(cl.F),
        "Fp": Hilb2Divisor(cl.F_p),
        "Fq": Hilb2Divisor(cl.F_q),
        "k": Hilb2Divisor(cl.k),
        "f": Hilb2Divisor(cl.f),
    }
    for i in range(10):
        names[f"e{i}"] = Hilb2Divisor(LatticeClass.basis(i))
    return names


class _Parser:
    def __init__(self, text: str, names: dict):
        self.text = text
        self.names = names
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def expect(self, value):
        tok = self.peek()
        if tok[0] != "op" or tok[1] != value:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            self.fail(f"expected {value!r}, found {found}")
        return self.take()

    def product(self) -> list:
        factors = [self.sum()]
        while self.peek()[:2] == ("op", "."):
            self.take()
            factors.append(self.sum())
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        if len(factors) != 4:
            raise ParseError(f"expected 4 factors separated by '.', found {len(factors)}",
                             len(self.text), self.text)
        return factors

    def sum(self) -> Hilb2Divisor:
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        total = sign * self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            total = total + sign * self.term()
        return total

    def term(self) -> Hilb2Divisor:
        coef = Fraction(1)
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            coef = Fraction(int(tok[1]))
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.peek()
                if den[0] != "int":
                    self.fail("expected an integer denominator")
                self.take()
                if int(den[1]) == 0:
                    self.fail("division by zero", den)
                coef /= int(den[1])
            if self.peek()[:2] == ("op", "*"):
                self.take()
        value = self.atom()
        # trailing "/INT" as in T/2
        while self.peek()[:2] == ("op", "/"):
            self.take()
            den = self.peek()
            if den[0] != "int":
                self.fail("expected an integer denominator")
            self.take()
            if int(den[1]) == 0:
                self.fail("division by zero", den)
            coef /= int(den[1])
        return coef * value

    def atom(self) -> Hilb2Divisor:
        tok = self.peek()
        if tok[0] == "name":
            self.take()
            if tok[1] not in self.names:
                self.fail(f"unknown name {tok[1]!r}", tok)
            return self.names[tok[1]]
        if tok[:2] == ("op", "("):
            self.take()
            inner = self.sum()
            self.expect(")")
            return inner
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        self.fail(f"expected a divisor, found {found}")


def parse_product(text: str, names: dict) -> list:
    """The four Hilb2Divisor factors of a product expression."""
    return _Parser(text, names).product()


def parse_class(text: str) -> LatticeClass:
    """Ten comma-separated integers or rationals, e.g. "1,0,0,0,0,0,0,0,0,1/2"."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 10:
        raise ValueError(f"expected 10 coordinates, got {len(parts)}")
    try:
        return LatticeClass(Fraction(s) for s in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad coordinate list {text!r}: {exc}") from None


def evaluate(text: str, params: SurfaceParams, lets: dict | None = None) -> Fraction:
    """Exact value of a quartic product on Hilb^2(S(p, q))."""
    names = default_names(params)
    for key, cls in (lets or {}).items():
        names[key] = cls if isinstance(cls, Hilb2Divisor) else Hilb2Divisor(cls)
    a, b, c, d = parse_product(text, names)
    return quartic(a, b, c, d, classes(params).K_S, C2)
