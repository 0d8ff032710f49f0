"""Polynomial scalar fields on R^4.

The metric coefficients handled by this package are smooth functions of a
point p = (x1, x2, x3, x4). Restricting them to polynomials keeps every
derivative exact: gradients and Hessians are themselves polynomials obtained
by coefficient arithmetic, so the connection and curvature routines never
depend on numerical differentiation. A central-difference routine is still
provided (`fd_gradient`) as an independent check on the analytic path.

Fields can be built programmatically (`ScalarField.coordinate`, arithmetic
operators) or parsed from a small expression grammar:

    expr     := term (('+' | '-') term)*
    term     := unary ('*' unary)*
    unary    := '-' unary | power
    power    := atom ('^' exponent)?
    atom     := literal | coordinate | '(' expr ')'
    literal  := decimal | integer '/' integer
    exponent := non-negative integer

Coordinates are named x1..x4, whitespace is insignificant and there is no
implicit multiplication. Decimal literals may carry an exponent suffix
(1e-3) so that printed fields always re-parse.
"""

from __future__ import annotations

import re

import numpy as np

__all__ = [
    "ScalarField",
    "ParseError",
    "parse_field",
    "fd_gradient",
    "as_point",
]

_NVARS = 4
_ZERO = (0, 0, 0, 0)


def as_point(p) -> np.ndarray:
    """Coerce to a float array of shape (4,), rejecting non-finite input."""
    q = np.asarray(p, dtype=float)
    if q.shape != (_NVARS,):
        raise ValueError(f"expected 4 coordinates, got shape {q.shape}")
    if not np.all(np.isfinite(q)):
        raise ValueError("point coordinates must be finite")
    return q


def _graded_lex_key(exps):
    return (-sum(exps), tuple(-e for e in exps))


class ScalarField:
    """A polynomial in x1..x4 stored as a monomial-to-coefficient map.

    The map is canonicalized on construction: zero coefficients are dropped
    and terms are kept in graded-lexicographic order, so evaluation order,
    equality and printing are all deterministic. Instances are immutable;
    sharing them across threads or pickling them into worker processes is
    safe.

    Parameters
    ----------
    terms : mapping, optional
        Maps exponent 4-tuples to coefficients, e.g. ``{(1, 1, 0, 0): 2.0}``
        for ``2*x1*x2``. Omitted or empty gives the zero field.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != _NVARS or any(
                not isinstance(e, (int, np.integer)) or e < 0 for e in exps
            ):
                raise ValueError(f"bad exponent tuple {exps!r}")
            coeff = float(coeff)
            if coeff != 0.0:
                clean[exps] = coeff
        object.__setattr__(
            self,
            "_terms",
            dict(sorted(clean.items(), key=lambda kv: _graded_lex_key(kv[0]))),
        )

    def __setattr__(self, name, value):
        raise AttributeError("ScalarField is immutable")

    def __reduce__(self):
        # bypass __setattr__ when unpickling into worker processes
        return (ScalarField, (self._terms,))

    # construction helpers

    @classmethod
    def constant(cls, value) -> "ScalarField":
        return cls({_ZERO: float(value)})

    @classmethod
    def coordinate(cls, i: int) -> "ScalarField":
        """The coordinate function x_i, i in 1..4."""
        if not 1 <= i <= _NVARS:
            raise ValueError(f"coordinate index must be 1..4, got {i}")
        exps = [0] * _NVARS
        exps[i - 1] = 1
        return cls({tuple(exps): 1.0})

    # inspection

    def terms(self) -> dict:
        """A copy of the monomial map in canonical order."""
        return dict(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; 0 for the zero field."""
        return max((sum(e) for e in self._terms), default=0)

    # evaluation and derivatives

    def __call__(self, p) -> float:
        p = as_point(p)
        total = 0.0
        for exps, coeff in self._terms.items():
            mono = coeff
            for x, e in zip(p, exps):
                if e:
                    mono *= x**e
            total += mono
        return total

    def partial(self, i: int) -> "ScalarField":
        """Exact partial derivative with respect to x_i, i in 1..4."""
        if not 1 <= i <= _NVARS:
            raise ValueError(f"coordinate index must be 1..4, got {i}")
        k = i - 1
        out = {}
        for exps, coeff in self._terms.items():
            e = exps[k]
            if e:
                lowered = list(exps)
                lowered[k] = e - 1
                out[tuple(lowered)] = coeff * e
        return ScalarField(out)

    def gradient(self, p) -> np.ndarray:
        p = as_point(p)
        return np.array([self.partial(i)(p) for i in range(1, 5)])

    def hessian(self, p) -> np.ndarray:
        """Second derivative matrix, symmetric by construction."""
        p = as_point(p)
        firsts = [self.partial(i) for i in range(1, 5)]
        h = np.empty((_NVARS, _NVARS))
        for i in range(_NVARS):
            for j in range(i, _NVARS):
                h[i, j] = h[j, i] = firsts[i].partial(j + 1)(p)
        return h

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, ScalarField):
            return other
        if isinstance(other, (int, float, np.integer, np.floating)):
            return ScalarField.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for exps, coeff in other._terms.items():
            merged[exps] = merged.get(exps, 0.0) + coeff
        return ScalarField(merged)

    __radd__ = __add__

    def __neg__(self):
        return ScalarField({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                out[key] = out.get(key, 0.0) + ca * cb
        return ScalarField(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ScalarField.constant(1.0)
        for _ in range(int(n)):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, ScalarField):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    # printing

    def to_string(self) -> str:
        """Canonical expression text; parsing it back reproduces the field."""
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self._terms.items():
            negative = coeff < 0
            magnitude = abs(coeff)
            factors = []
            for k, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{k + 1}")
                elif e > 1:
                    factors.append(f"x{k + 1}^{e}")
            if not factors:
                body = repr(magnitude)
            elif magnitude == 1.0:
                body = "*".join(factors)
            else:
                body = repr(magnitude) + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append((" - " if negative else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"ScalarField({self.to_string()!r})"


def fd_gradient(field, p, h: float | None = None) -> np.ndarray:
    """Central-difference gradient, an independent check on the exact one.

    With ``h`` omitted the step adapts per axis to 1e-5 * max(1, |x_i|).
    An explicit non-positive step is rejected.
    """
    p = as_point(p)
    if h is not None and not h > 0:
        raise ValueError("step h must be positive")
    out = np.empty(_NVARS)
    for k in range(_NVARS):
        step = h if h is not None else 1e-5 * max(1.0, abs(p[k]))
        offset = np.zeros(_NVARS)
        offset[k] = step
        out[k] = (field(p + offset) - field(p - offset)) / (2.0 * step)
    return out


# expression parsing

class ParseError(ValueError):
    """Raised on malformed field expressions; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.message = message
        self.position = position


_TOKEN_RE = re.compile(
    r"(?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^()/])"
)


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos

    @property
    def is_integer(self):
        return self.kind == "number" and not any(c in self.text for c in ".eE")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.text = text
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def at_op(self, *ops):
        tok = self.peek()
        return tok is not None and tok.kind == "op" and tok.text in ops

    def end_position(self):
        return len(self.text)

    def expression(self):
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance()
            rhs = self.term()
            node = node + rhs if op.text == "+" else node - rhs
        return node

    def term(self):
        node = self.unary()
        while self.at_op("*"):
            self.advance()
            node = node * self.unary()
        if self.at_op("/"):
            tok = self.peek()
            raise ParseError(
                "'/' is only valid inside an integer rational literal", tok.pos
            )
        return node

    def unary(self):
        if self.at_op("-"):
            self.advance()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        minus = None
        if self.at_op("-"):
            minus = self.advance()
        tok = self.peek()
        if tok is None or tok.kind != "number":
            pos = tok.pos if tok is not None else self.end_position()
            raise ParseError("expected an integer exponent", pos)
        self.advance()
        if not tok.is_integer:
            raise ParseError("non-integer exponent", tok.pos)
        if minus is not None:
            raise ParseError("negative exponent", minus.pos)
        return int(tok.text)

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.end_position())
        if tok.kind == "number":
            self.advance()
            if self.at_op("/"):
                slash = self.advance()
                if not tok.is_integer:
                    raise ParseError(
                        "rational literal requires an integer numerator", slash.pos
                    )
                denom = self.peek()
                if denom is None or denom.kind != "number" or not denom.is_integer:
                    pos = denom.pos if denom is not None else self.end_position()
                    raise ParseError(
                        "rational literal requires an integer denominator", pos
                    )
                self.advance()
                if int(denom.text) == 0:
                    raise ParseError("zero denominator in rational literal", denom.pos)
                return ScalarField.constant(int(tok.text) / int(denom.text))
            return ScalarField.constant(float(tok.text))
        if tok.kind == "ident":
            self.advance()
            if tok.text in ("x1", "x2", "x3", "x4"):
                return ScalarField.coordinate(int(tok.text[1]))
            raise ParseError(f"unknown identifier {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expression()
            if not self.at_op(")"):
                pos = self.peek().pos if self.peek() is not None else self.end_position()
                raise ParseError("expected ')'", pos)
            self.advance()
            return node
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)

    def expect_end(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)


def parse_field(text: str) -> ScalarField:
    """Parse an expression in x1..x4 into a ScalarField.

    Raises ParseError (with a 0-based character offset) on syntax errors,
    unknown identifiers and invalid exponents.
    """
    parser = _Parser(_tokenize(text), text)
    field = parser.expression()
    parser.expect_end()
    return field
