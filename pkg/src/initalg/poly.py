"""Exact sparse multivariate polynomials over the rationals.

Monomials are dense exponent vectors, coefficients are `fractions.Fraction`
(always in lowest terms with positive denominator).  A polynomial stores its
terms sorted strictly descending under a fixed canonical order (DegLex with
the natural variable order), so equality is structural and hashing works.
Weighted degrees, initial forms and homogenization live here as well.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class ZeroPolynomialError(ValueError):
    """The zero polynomial was passed where a degree or a leading term is needed."""


class ParseError(ValueError):
    """Polynomial or problem-file text did not parse; carries line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class PolyRing:
    """K[X1,...,Xn] over the rationals; `homvar` names the homogenizing variable of an extended ring."""

    names: tuple[str, ...]
    homvar: str | None = None

    def __post_init__(self):
        if not self.names:
            raise ValueError("ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if any(not n for n in self.names):
            raise ValueError("variable names must be nonempty")
        if self.homvar is not None and (not self.names or self.names[-1] != self.homvar):
            raise ValueError("homogenizing variable must be the last variable")

    @property
    def n(self) -> int:
        return len(self.names)

    def var_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def monomial(self, exponents: Sequence[int]) -> Monomial:
        m = Monomial(tuple(exponents))
        if len(m.exponents) != self.n:
            raise RingMismatchError("exponent vector has wrong length")
        return m

    def var(self, i: int) -> Polynomial:
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial(self, (Term(Fraction(1), Monomial(tuple(exps))),))

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(i) for i in range(self.n))

    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c: Scalar) -> Polynomial:
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, (Term(c, Monomial((0,) * self.n)),))

    def poly(self, text: str) -> Polynomial:
        return parse_poly(self, text)

    def extend(self, homvar: str = "t") -> PolyRing:
        """Adjoin the homogenizing variable as the new last variable."""
        if self.homvar is not None:
            raise ValueError("ring is already extended")
        if homvar in self.names:
            raise ValueError(f"variable {homvar!r} already present")
        return PolyRing(self.names + (homvar,), homvar)

    def base(self) -> PolyRing:
        """Drop the homogenizing variable."""
        if self.homvar is None:
            raise ValueError("ring has no homogenizing variable")
        return PolyRing(self.names[:-1], None)

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"


@dataclass(frozen=True)
class Monomial:
    """Power product, stored as the exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def mul(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    __mul__ = mul

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def divide(self, other: Monomial) -> Monomial:
        """Exact quotient self / other."""
        if not other.divides(self):
            raise ValueError("not divisible")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def coprime(self, other: Monomial) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exponents, other.exponents))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def __repr__(self):
        return f"Monomial{self.exponents}"


@dataclass(frozen=True)
class Term:
    """Nonzero rational coefficient times a monomial."""

    coeff: Fraction
    mono: Monomial

    def __post_init__(self):
        if self.coeff == 0:
            raise ValueError("term coefficient must be nonzero")


@dataclass(frozen=True)
class WeightVector:
    """Strictly positive integral grading; the extended form for R[t] ends in 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("weight vector must be nonempty")
        if any(not isinstance(e, int) or e < 1 for e in self.entries):
            raise ValueError("weight entries must be integers >= 1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def degree(self, mono: Monomial) -> int:
        if len(mono.exponents) != self.n:
            raise RingMismatchError("weight arity does not match monomial")
        return sum(a * e for a, e in zip(self.entries, mono.exponents))

    def extend(self) -> WeightVector:
        """The weight on R[t] giving the homogenizing variable degree 1."""
        return WeightVector(self.entries + (1,))

    @staticmethod
    def ones(n: int) -> WeightVector:
        return WeightVector((1,) * n)

    def __repr__(self):
        return f"WeightVector{self.entries}"


def _canon_key(mono: Monomial):
    # canonical storage order: DegLex, natural variable order
    return (mono.degree(), mono.exponents)


class Polynomial:
    """Immutable polynomial in canonical form (terms strictly descending under DegLex)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple[Term, ...]):
        self.ring = ring
        self.terms = terms

    @staticmethod
    def from_dict(ring: PolyRing, coeffs: Mapping[Monomial, Scalar]) -> Polynomial:
        terms = []
        for mono, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(mono.exponents) != ring.n:
                raise RingMismatchError("monomial arity does not match ring")
            terms.append(Term(c, mono))
        terms.sort(key=lambda t: _canon_key(t.mono), reverse=True)
        return Polynomial(ring, tuple(terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(t.mono for t in self.terms)

    def coeff(self, mono: Monomial) -> Fraction:
        for t in self.terms:
            if t.mono == mono:
                return t.coeff
        return Fraction(0)

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return max(t.mono.degree() for t in self.terms)

    def map_coeffs(self, fn) -> Polynomial:
        return Polynomial.from_dict(self.ring, {t.mono: fn(t.coeff) for t in self.terms})

    def _check_ring(self, other: Polynomial):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials from different rings")

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        self._check_ring(other)
        acc: dict[Monomial, Fraction] = {t.mono: t.coeff for t in self.terms}
        for t in other.terms:
            acc[t.mono] = acc.get(t.mono, Fraction(0)) + t.coeff
        return Polynomial.from_dict(self.ring, acc)

    def __radd__(self, other) -> Polynomial:
        return self.__add__(other)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, tuple(Term(-t.coeff, t.mono) for t in self.terms))

    def __sub__(self, other) -> Polynomial:
        return self.__add__(-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return (-self).__add__(other)

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        self._check_ring(other)
        acc: dict[Monomial, Fraction] = {}
        for s in self.terms:
            for t in other.terms:
                m = s.mono.mul(t.mono)
                acc[m] = acc.get(m, Fraction(0)) + s.coeff * t.coeff
        return Polynomial.from_dict(self.ring, acc)

    def __rmul__(self, other) -> Polynomial:
        return self.__mul__(other)

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return format_poly(self)


def weighted_degree(f: Polynomial, w: WeightVector) -> int:
    """Largest w-degree of a monomial of f; rejects the zero polynomial."""
    if f.is_zero():
        raise ZeroPolynomialError("weighted degree of the zero polynomial is undefined")
    return max(w.degree(t.mono) for t in f.terms)


def initial_form(f: Polynomial, w: WeightVector) -> Polynomial:
    """Sum of the terms of f of maximal w-degree (a w-homogeneous polynomial)."""
    d = weighted_degree(f, w)
    return Polynomial(f.ring, tuple(t for t in f.terms if w.degree(t.mono) == d))


def is_weight_homogeneous(f: Polynomial, w: WeightVector) -> bool:
    if f.is_zero():
        return True
    degs = {w.degree(t.mono) for t in f.terms}
    return len(degs) == 1


def homogenize(f: Polynomial, w: WeightVector, extended: PolyRing | None = None) -> Polynomial:
    """Pad every term with powers of the homogenizing variable up to the top w-degree."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot homogenize the zero polynomial")
    if extended is None:
        extended = f.ring.extend()
    if extended.homvar is None or extended.names[:-1] != f.ring.names:
        raise RingMismatchError("target ring does not extend the source ring")
    d = weighted_degree(f, w)
    coeffs = {
        Monomial(t.mono.exponents + (d - w.degree(t.mono),)): t.coeff for t in f.terms
    }
    return Polynomial.from_dict(extended, coeffs)


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Evaluate f at polynomial images of its variables (one image per variable)."""
    if len(images) != f.ring.n:
        raise RingMismatchError("need one image per variable")
    if not images:
        raise ValueError("no images")
    target = images[0].ring
    if any(g.ring != target for g in images):
        raise RingMismatchError("images from different rings")
    acc = target.zero()
    for t in f.terms:
        p = target.const(t.coeff)
        for g, e in zip(images, t.mono.exponents):
            if e:
                p = p * g**e
        acc = acc + p
    return acc


def specialize_t(f: Polynomial, c: Scalar) -> Polynomial:
    """Substitute the homogenizing variable by c and land in the base ring."""
    if f.ring.homvar is None:
        raise RingMismatchError("ring has no homogenizing variable")
    base = f.ring.base()
    c = Fraction(c)
    acc: dict[Monomial, Fraction] = {}
    for t in f.terms:
        e = t.mono.exponents[-1]
        m = Monomial(t.mono.exponents[:-1])
        acc[m] = acc.get(m, Fraction(0)) + t.coeff * c**e
    return Polynomial.from_dict(base, acc)


# ---------------------------------------------------------------------------
# text format:  terms joined by + and -, a term is rational and var^exp
# factors joined by * (the star after a rational is optional)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str, line: int = 1, col_base: int = 0):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", line, col_base + pos + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), col_base + m.start(kind) + 1))
        pos = m.end()
    return tokens


def parse_poly(ring: PolyRing, text: str, line: int = 1) -> Polynomial:
    """Parse the plain text polynomial grammar, e.g. ``x^2 - 2*x*y + 1/3``."""
    tokens = _tokenize(text, line)
    if not tokens:
        raise ParseError("empty polynomial", line, 1)
    acc: dict[Monomial, Fraction] = {}
    i = 0

    def err(msg, tok=None):
        col = tok[2] if tok else (tokens[-1][2] if tokens else 1)
        raise ParseError(msg, line, col)

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            err("dangling sign")
        coeff = Fraction(sign)
        exps = [0] * ring.n
        saw_factor = False
        expect_factor = True
        while i < len(tokens):
            kind, val, col = tokens[i]
            if kind == "op" and val in "+-":
                break
            if kind == "op" and val == "*":
                if expect_factor:
                    err("unexpected '*'", tokens[i])
                i += 1
                expect_factor = True
                continue
            if kind == "int":
                num = int(val)
                i += 1
                if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "/":
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "int":
                        err("expected denominator", tokens[i - 1])
                    den = int(tokens[i][1])
                    if den == 0:
                        err("zero denominator", tokens[i])
                    i += 1
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
            elif kind == "name":
                try:
                    vi = ring.var_index(val)
                except KeyError:
                    err(f"unknown variable {val!r}", tokens[i])
                i += 1
                e = 1
                if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "int":
                        err("expected exponent", tokens[i - 1] if i <= len(tokens) else None)
                    e = int(tokens[i][1])
                    i += 1
                exps[vi] += e
            else:
                err(f"unexpected {val!r}", tokens[i])
            saw_factor = True
            expect_factor = False
        if not saw_factor:
            err("empty term")
        if expect_factor:
            err("dangling '*'")
        if coeff != 0:
            m = Monomial(tuple(exps))
            acc[m] = acc.get(m, Fraction(0)) + coeff
    return Polynomial.from_dict(ring, acc)


def format_monomial(ring: PolyRing, mono: Monomial) -> str:
    if mono.is_one():
        return "1"
    parts = []
    for name, e in zip(ring.names, mono.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, key=None) -> str:
    """Render with terms descending under `key` (canonical DegLex when omitted)."""
    if f.is_zero():
        return "0"
    if key is None:
        key = _canon_key
    out = []
    for idx, t in enumerate(sorted(f.terms, key=lambda t: key(t.mono), reverse=True)):
        c = t.coeff
        if idx == 0:
            head = "-" if c < 0 else ""
        else:
            head = " - " if c < 0 else " + "
        mag = abs(c)
        body = format_monomial(f.ring, t.mono)
        if t.mono.is_one():
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        out.append(head + body)
    return "".join(out)
