"""Exact Laurent polynomials in ``z`` (any integer exponent) and ``u`` (non-negative).

A monomial ``z^s u^r`` is keyed by the pair ``(s, r)``. Coefficients are
:class:`fractions.Fraction`; zero coefficients are never stored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_laurent` on malformed input."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _sort_key(key):
    s, r = key
    return (r, s)


class LaurentPoly:
    """Immutable element of ``Q[z, z^-1, u]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple[int, int], object]] = None):
        clean = {}
        for (s, r), c in (terms or {}).items():
            if r < 0:
                raise ValueError(f"negative u-exponent {r}")
            c = Fraction(c)
            if c:
                clean[(int(s), int(r))] = c
        self._terms = dict(sorted(clean.items(), key=lambda kv: _sort_key(kv[0])))
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, s: int, r: int, coeff=1) -> "LaurentPoly":
        return cls({(s, r): coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(self._terms.items())

    def coeff(self, s: int, r: int) -> Fraction:
        return self._terms.get((s, r), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # arithmetic
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (s1, r1), c1 in self._terms.items():
            for (s2, r2), c2 in other._terms.items():
                key = (s1 + s2, r1 + r2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("only non-negative powers")
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, ds: int = 0, dr: int = 0) -> "LaurentPoly":
        """Multiply by the monomial ``z^ds u^dr``."""
        return LaurentPoly({(s + ds, r + dr): c for (s, r), c in self._terms.items()})

    def truncate(self, max_r: int) -> "LaurentPoly":
        """Drop every term of u-degree above ``max_r``."""
        return LaurentPoly({(s, r): c for (s, r), c in self._terms.items() if r <= max_r})

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self) -> str:
        return format_laurent(self)


def laurent_arith(lhs: LaurentPoly, rhs: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown operation {op!r}")


Z = LaurentPoly.monomial(1, 0)
U = LaurentPoly.monomial(0, 1)


def zpow(n: int) -> LaurentPoly:
    return LaurentPoly.monomial(n, 0)


@dataclass(frozen=True)
class DegreeExtrema:
    """Attained degree bounds of a polynomial.

    For the zero polynomial ``min_u`` is 0 and the other fields are ``None``.
    """

    min_u: int
    max_u: Optional[int]
    min_z: Optional[int]
    max_z: Optional[int]


def degree_extrema(p: LaurentPoly) -> DegreeExtrema:
    if p.is_zero():
        return DegreeExtrema(0, None, None, None)
    ss = [s for s, _ in p._terms]
    rs = [r for _, r in p._terms]
    return DegreeExtrema(min(rs), max(rs), min(ss), max(ss))


def is_V_holomorphic(s: int, r: int, k: int) -> bool:
    """Whether ``z^s u^r`` is a polynomial in ``w = 1/z`` and ``v = z^k u``.

    ``z^s u^r = w^(kr - s) v^r``, so this holds iff ``s <= k*r``.
    """
    if r < 0 or k < 1:
        raise ValueError("need r >= 0 and k >= 1")
    return s <= k * r


def is_U_holomorphic(s: int, r: int) -> bool:
    return s >= 0 and r >= 0


# --- text format ---------------------------------------------------------

def _format_coeff_monomial(c: Fraction, s: int, r: int) -> str:
    factors = []
    if s:
        factors.append("z" if s == 1 else f"z^{s}")
    if r:
        factors.append("u" if r == 1 else f"u^{r}")
    mag = abs(c)
    if not factors:
        return str(mag)
    if mag != 1:
        factors.insert(0, str(mag))
    return "*".join(factors)


def format_laurent(p: LaurentPoly) -> str:
    """Render ``p`` in the grammar accepted by :func:`parse_laurent`."""
    if p.is_zero():
        return "0"
    parts = []
    for i, ((s, r), c) in enumerate(p.items()):
        body = _format_coeff_monomial(c, s, r)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([zu])|(\^)|(\*)|(\+)|(-)|(/))")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        kind = ("int", "var", "^", "*", "+", "-", "/")[m.lastindex - 1]
        value = int(m.group(1)) if kind == "int" else m.group(m.lastindex)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek()[0] == "-":
            self.take("-")
            sign = -1
        total = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            t = self.term()
            total = total + t if op == "+" else total - t
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return total

    def term(self) -> LaurentPoly:
        out = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            out = out * self.factor()
        return out

    def sint(self) -> int:
        neg = False
        if self.peek()[0] == "-":
            self.take("-")
            neg = True
        value = self.take("int")[1]
        return -value if neg else value

    def factor(self) -> LaurentPoly:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take("int")
            if self.peek()[0] == "/":
                self.take("/")
                den_tok = self.take("int")
                if den_tok[1] == 0:
                    raise PolySyntaxError("zero denominator", den_tok[2])
                return LaurentPoly.const(Fraction(value, den_tok[1]))
            return LaurentPoly.const(value)
        if kind == "var":
            self.take("var")
            exp = 1
            if self.peek()[0] == "^":
                self.take("^")
                exp_pos = self.peek()[2]
                exp = self.sint()
                if value == "u" and exp < 0:
                    raise PolySyntaxError("negative exponent on u", exp_pos)
            return LaurentPoly.monomial(exp, 0) if value == "z" else LaurentPoly.monomial(0, exp)
        what = "end of input" if kind == "end" else repr(value)
        raise PolySyntaxError(f"expected a number or variable, found {what}", pos)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a polynomial such as ``"z*u^2 + z^-1*u"``."""
    return _Parser(text).expr()


def as_laurent(p) -> LaurentPoly:
    if isinstance(p, LaurentPoly):
        return p
    if isinstance(p, str):
        return parse_laurent(p)
    if isinstance(p, (int, Fraction)):
        return LaurentPoly.const(p)
    raise TypeError(f"cannot interpret {p!r} as a Laurent polynomial")


def sum_polys(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[tuple[int, int], Fraction] = {}
    for p in polys:
        for key, c in p.items():
            out[key] = out.get(key, 0) + c
    return LaurentPoly(out)
