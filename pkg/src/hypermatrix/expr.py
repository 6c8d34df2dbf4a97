"""Polynomial expressions over named atoms with exact rational coefficients.

An :class:`Expression` is kept in a canonical normal form: a mapping from
monomial keys to nonzero :class:`~fractions.Fraction` coefficients, where a
key is a tuple of ``(atom name, exponent)`` pairs sorted by name.  Two
expressions are equal exactly when their mappings are equal, so symbolic
identities between hypermatrices reduce to ``==``.

    >>> x, y = atom("x"), atom("y")
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
"""
from __future__ import annotations

import numbers
import re
from fractions import Fraction
from typing import Mapping, NamedTuple

from .errors import MissingBindingError, ParseError, UnsupportedScalarError

__all__ = ["Expression", "Monomial", "atom", "constant", "parse"]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Key = tuple  # tuple[tuple[str, int], ...]


class Monomial(NamedTuple):
    coefficient: Fraction
    factors: tuple  # ((name, exponent), ...) sorted by name


def _merge_keys(a: Key, b: Key) -> Key:
    if not a:
        return b
    if not b:
        return a
    powers = dict(a)
    for name, e in b:
        powers[name] = powers.get(name, 0) + e
    return tuple(sorted(powers.items()))


def _lift(value) -> "Expression | None":
    if isinstance(value, Expression):
        return value
    if isinstance(value, numbers.Rational):
        return constant(value)
    return None


class Expression:
    """Immutable multivariate polynomial in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Fraction] | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[key] = Fraction(coeff)
        self._terms = clean
        self._hash = None

    # -- inspection -------------------------------------------------------

    def monomials(self) -> list[Monomial]:
        """Monomials in rendering order (constant first, then by factors)."""
        return [Monomial(self._terms[k], k) for k in sorted(self._terms)]

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def atoms(self) -> frozenset:
        return frozenset(name for key in self._terms for name, _ in key)

    def is_constant(self) -> bool:
        return all(key == () for key in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"expression {self} is not constant")
        return self._terms.get((), Fraction(0))

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        return Expression(terms)

    __radd__ = __add__

    def __neg__(self):
        return Expression({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        terms: dict = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = _merge_keys(ka, kb)
                terms[key] = terms.get(key, 0) + ca * cb
        return Expression(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if not other.is_constant() or not other:
            raise UnsupportedScalarError("can only divide an expression by a nonzero constant")
        inv = 1 / other.constant_value()
        return Expression({k: c * inv for k, c in self._terms.items()})

    def __pow__(self, k):
        if isinstance(k, Expression) and k.is_constant():
            k = k.constant_value()
        if not isinstance(k, numbers.Integral):
            if isinstance(k, numbers.Rational) and k.denominator == 1:
                k = k.numerator
            else:
                raise UnsupportedScalarError(f"symbolic exponent must be an integer, got {k!r}")
        k = int(k)
        if k < 0:
            raise UnsupportedScalarError("negative powers of expressions are unsupported")
        result = constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __rpow__(self, base):
        raise UnsupportedScalarError("exponentiation with a symbolic exponent is unsupported")

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Expression):
            return self._terms == other._terms
        if isinstance(other, numbers.Number):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- numeric bridge ---------------------------------------------------

    def evaluate(self, bindings: Mapping[str, complex]) -> complex:
        """Substitute numbers for atoms and return the complex value."""
        total = 0j
        for key, c in self._terms.items():
            term = complex(c)
            for name, e in key:
                try:
                    term *= complex(bindings[name]) ** e
                except KeyError:
                    raise MissingBindingError(f"no value bound for atom {name!r}") from None
            total += term
        return total

    # -- text -------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (coeff, key) in enumerate(self.monomials()):
            body = "*".join(name if e == 1 else f"{name}^{e}" for name, e in key)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                out.append(f"-{text}" if coeff < 0 else text)
            else:
                out.append(f" - {text}" if coeff < 0 else f" + {text}")
        return "".join(out)

    def __repr__(self):
        return f"Expression({str(self)!r})"


def constant(value) -> Expression:
    value = Fraction(value)
    return Expression({(): value} if value else None)


def atom(name: str) -> Expression:
    """The expression consisting of the single atom ``name``."""
    if not isinstance(name, str) or not _NAME.match(name):
        raise ValueError(f"invalid atom name {name!r}")
    return Expression({((name, 1),): Fraction(1)})


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected input at {pos} in {text!r}")
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r} in {text!r}")
            tokens.append(("sym", sym))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, sym=None):
        tok = self.peek()
        if tok[0] is None or (sym is not None and tok != ("sym", sym)):
            raise ParseError(f"expected {sym or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression text")
        e = self.sum()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return e

    def sum(self):
        e = self.product()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.product()
            e = e + rhs if op == "+" else e - rhs
        return e

    def product(self):
        e = self.unary()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                e = e * rhs
            else:
                try:
                    e = e / rhs
                except UnsupportedScalarError as exc:
                    raise ParseError(str(exc)) from None
        return e

    def unary(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("sym", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, value = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}")
            return base ** value
        return base

    def primary(self):
        kind, value = self.take()
        if kind == "num":
            return constant(value)
        if kind == "name":
            return atom(value)
        if value == "(":
            e = self.sum()
            self.take(")")
            return e
        raise ParseError(f"unexpected {value!r} in {self.text!r}")


def parse(text: str) -> Expression:
    """Parse the text rendering of an expression (inverse of ``str``)."""
    return _Parser(text).parse()
