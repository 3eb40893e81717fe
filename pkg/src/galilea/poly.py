"""Sparse multivariate polynomials over Q.

A :class:`Polynomial` lives in a ring fixed by an ordered tuple of variable
names. Observables use ``(x1, ..., xn, t)`` with time stored last, so the
time derivative (written with index 0 in physics texts) is
``partial(f, n)``. Boost parameters use ``(v1, ..., vn)``.

Terms iterate in graded-lexicographic descending order, which is also the
order used for printing.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence

from .exact import DimensionError, Matrix, ParseError, as_rational, random_rational, rational_format

Monomial = tuple[int, ...]


def observable_variables(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1)) + ("t",)


def parameter_variables(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(1, n + 1))


def _grlex_key(m: Monomial):
    return (sum(m), m)


class Polynomial:
    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, Fraction] | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        nv = len(self.variables)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nv or any(e < 0 for e in mono):
                raise DimensionError(f"monomial {mono} does not fit ring {self.variables}")
            c = as_rational(c)
            if c:
                clean[mono] = c
        self._terms = dict(sorted(clean.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls(variables)

    @classmethod
    def constant(cls, c, variables: Sequence[str]) -> "Polynomial":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise KeyError(f"unknown variable {name!r}; ring is {variables}")
        mono = tuple(int(v == name) for v in variables)
        return cls(variables, {mono: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list["Polynomial"]:
        return [cls.variable(v, variables) for v in variables]

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.is_zero()
            return self._terms == {(0,) * len(self.variables): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r}, {list(self.variables)})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise DimensionError(
                    f"variable lists differ: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.variables)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.variables, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.constant(1, self.variables)
        for _ in range(k):
            out = out * self
        return out

    # -- calculus and evaluation -----------------------------------------

    def partial(self, index: int) -> "Polynomial":
        return partial(self, index)

    def __call__(self, *point) -> Fraction:
        return poly_eval(self, point)

    def with_variables(self, variables: Sequence[str]) -> "Polynomial":
        """Re-embed into a ring whose variables are a superset of ours."""
        variables = tuple(variables)
        try:
            where = [variables.index(v) for v in self.variables]
        except ValueError:
            missing = [v for v in self.variables if v not in variables]
            raise DimensionError(f"target ring lacks {missing}") from None
        out = {}
        for m, c in self._terms.items():
            e = [0] * len(variables)
            for pos, k in zip(where, m):
                e[pos] = k
            out[tuple(e)] = c
        return Polynomial(variables, out)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + a._coerce(b)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * a._coerce(b)


def partial(f: Polynomial, index: int) -> Polynomial:
    if not 0 <= index < len(f.variables):
        raise IndexError(f"variable index {index} out of range for {f.variables}")
    out = {}
    for m, c in f._terms.items():
        k = m[index]
        if k:
            out[m[:index] + (k - 1,) + m[index + 1:]] = c * k
    return Polynomial(f.variables, out)


def gradient(f: Polynomial) -> list[Polynomial]:
    return [partial(f, i) for i in range(len(f.variables))]


def poly_eval(f: Polynomial, point: Sequence) -> Fraction:
    if len(point) != len(f.variables):
        raise DimensionError(f"point has {len(point)} coordinates, ring has {len(f.variables)}")
    pt = [as_rational(x) for x in point]
    total = Fraction(0)
    for m, c in f._terms.items():
        term = c
        for x, k in zip(pt, m):
            if k:
                term *= x ** k
        total += term
    return total


# -- formatting -----------------------------------------------------------

def _format_monomial(mono: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for name, k in zip(variables, mono):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(f._terms.items()):
        mono = _format_monomial(m, f.variables)
        mag = abs(c)
        if not mono:
            body = rational_format(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{rational_format(mag)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# -- parsing --------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r} at position {bad}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = tuple(variables)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, what: str, tok=None):
        kind, value, pos = tok or self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected {what} at position {pos}, found {found}", pos)

    def parse(self) -> Polynomial:
        total = Polynomial.zero(self.variables)
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        total = total + self.term() * sign
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            total = total + self.term() * sign
        if self.peek()[0] != "end":
            self.fail("'+', '-' or '*'")
        return total

    def term(self) -> Polynomial:
        out = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "num":
            num, _, den = value.partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {value!r} at position {pos}", pos)
            return Polynomial.constant(Fraction(int(num), int(den or 1)), self.variables)
        if kind == "ident":
            if value not in self.variables:
                raise ParseError(
                    f"unknown variable {value!r} at position {pos}; expected one of {', '.join(self.variables)}",
                    pos,
                )
            base = Polynomial.variable(value, self.variables)
            if self.peek()[:2] == ("op", "^"):
                self.take()
                ekind, evalue, epos = self.take()
                if ekind != "num" or "/" in evalue:
                    self.fail("non-negative integer exponent", (ekind, evalue, epos))
                return base ** int(evalue)
            return base
        self.fail("a number or variable", (kind, value, pos))


def poly_parse(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``term (('+'|'-') term)*`` where terms are ``*``-products of
    rational literals and ``name`` or ``name^k`` factors."""
    return _Parser(text, variables).parse()


# -- matrices of polynomials ----------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError("entry count does not match shape")
        if self.entries:
            vs = self.entries[0].variables
            if any(e.variables != vs for e in self.entries):
                raise DimensionError("all entries must share one ring")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.entries[0].variables

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        return cls(len(rows), len(rows[0]), tuple(e for r in rows for e in r))

    @classmethod
    def from_matrix(cls, m: Matrix, variables: Sequence[str]) -> "PolyMatrix":
        return cls(m.rows, m.cols, tuple(Polynomial.constant(x, variables) for x in m.entries))

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def T(self) -> "PolyMatrix":
        return PolyMatrix(self.cols, self.rows, tuple(
            self[i, j] for j in range(self.cols) for i in range(self.rows)
        ))

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionError("shape mismatch in PolyMatrix product")
        zero = Polynomial.zero(self.variables)
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a, b = self[i, k], other[k, j]
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, tuple(out))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def with_variables(self, variables: Sequence[str]) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, tuple(e.with_variables(variables) for e in self.entries))

    def evaluate(self, point: Sequence) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(poly_eval(e, point) for e in self.entries))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)


def poly_coefficient_map(m: PolyMatrix) -> list[tuple[tuple[int, int], Monomial, Fraction]]:
    """Every nonzero (position, monomial, coefficient) triple of ``m``.

    Ordered by position (row-major), then by monomial exponent tuple
    ascending, so the output is reproducible.
    """
    out = []
    for i in range(m.rows):
        for j in range(m.cols):
            for mono, c in sorted(m[i, j].terms.items()):
                out.append(((i, j), mono, c))
    return out


def random_polynomial(
    rng: random.Random,
    variables: Sequence[str],
    max_degree: int = 3,
    max_terms: int = 5,
) -> Polynomial:
    nv = len(variables)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        deg = rng.randint(0, max_degree)
        e = [0] * nv
        for _ in range(deg):
            e[rng.randrange(nv)] += 1
        terms[tuple(e)] = random_rational(rng)
    return Polynomial(variables, terms)
