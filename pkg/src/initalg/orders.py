"""Monomial orders as key functions.

Every order exposes `key(mono)`; monomials compare by comparing keys, larger
key means larger monomial.  Base orders (lex, deglex, revlex) take an optional
variable priority permutation.  A weight order refines comparison of weighted
degrees by a base order, and its extension to the homogenizing ring breaks
degree ties in favour of the smaller power of the last variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from initalg.poly import (
    Monomial,
    ParseError,
    PolyRing,
    Polynomial,
    RingMismatchError,
    Term,
    WeightVector,
    ZeroPolynomialError,
)


class MonomialOrder:
    def key(self, mono: Monomial):
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def _permuted(exps: tuple[int, ...], perm: tuple[int, ...] | None) -> tuple[int, ...]:
    if perm is None:
        return exps
    return tuple(exps[i] for i in perm)


def _check_perm(perm, exps):
    if perm is not None and len(perm) != len(exps):
        raise RingMismatchError("order permutation does not match monomial arity")


@dataclass(frozen=True)
class Lex(MonomialOrder):
    """Pure lexicographic; `perm` lists variable indices by descending priority."""

    perm: tuple[int, ...] | None = None

    def key(self, mono: Monomial):
        _check_perm(self.perm, mono.exponents)
        return _permuted(mono.exponents, self.perm)


@dataclass(frozen=True)
class DegLex(MonomialOrder):
    """Total degree first, then lexicographic."""

    perm: tuple[int, ...] | None = None

    def key(self, mono: Monomial):
        _check_perm(self.perm, mono.exponents)
        return (mono.degree(), _permuted(mono.exponents, self.perm))


@dataclass(frozen=True)
class RevLex(MonomialOrder):
    """Degree reverse lexicographic: smaller power of the least variable wins ties."""

    perm: tuple[int, ...] | None = None

    def key(self, mono: Monomial):
        _check_perm(self.perm, mono.exponents)
        p = _permuted(mono.exponents, self.perm)
        return (mono.degree(), tuple(-e for e in reversed(p)))


@dataclass(frozen=True)
class WeightOrder(MonomialOrder):
    """Weighted degree first, ties broken by the base order."""

    weight: WeightVector
    base: MonomialOrder = field(default_factory=RevLex)

    def key(self, mono: Monomial):
        return (self.weight.degree(mono), self.base.key(mono))


@dataclass(frozen=True)
class ExtendedOrder(MonomialOrder):
    """Order on R[t] induced by a weight on R (the last variable gets weight 1).

    Compares the extended weighted degree, then prefers the smaller power of
    the homogenizing variable, then falls back to the base order on the R part.
    """

    weight: WeightVector
    base: MonomialOrder = field(default_factory=RevLex)

    def key(self, mono: Monomial):
        wext = self.weight.extend()
        r_part = Monomial(mono.exponents[:-1])
        return (wext.degree(mono), -mono.exponents[-1], self.base.key(r_part))


@dataclass(frozen=True)
class BlockOrder(MonomialOrder):
    """Compare the first `split` variables by `first`, then the rest by `second`."""

    split: int
    first: MonomialOrder
    second: MonomialOrder

    def key(self, mono: Monomial):
        head = Monomial(mono.exponents[: self.split])
        tail = Monomial(mono.exponents[self.split :])
        return (self.first.key(head), self.second.key(tail))


@dataclass(frozen=True)
class EliminationOrder(MonomialOrder):
    """Block order on arbitrary index sets: the eliminated block dominates.

    Any monomial involving an eliminated variable beats every monomial in the
    kept variables alone, so kept-only elements of a Gröbner basis generate
    the elimination ideal.
    """

    elim: tuple[int, ...]
    keep: tuple[int, ...]
    elim_order: MonomialOrder = field(default_factory=DegLex)
    keep_order: MonomialOrder = field(default_factory=RevLex)

    def key(self, mono: Monomial):
        e = mono.exponents
        head = Monomial(tuple(e[i] for i in self.elim))
        tail = Monomial(tuple(e[i] for i in self.keep))
        return (self.elim_order.key(head), self.keep_order.key(tail))


def sorted_terms(f: Polynomial, order: MonomialOrder) -> tuple[Term, ...]:
    return tuple(sorted(f.terms, key=lambda t: order.key(t.mono), reverse=True))


def leading_term(f: Polynomial, order: MonomialOrder) -> Term:
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has no leading term")
    return max(f.terms, key=lambda t: order.key(t.mono))


def leading_monomial(f: Polynomial, order: MonomialOrder) -> Monomial:
    return leading_term(f, order).mono


def leading_coeff(f: Polynomial, order: MonomialOrder) -> Fraction:
    return leading_term(f, order).coeff


def monic(f: Polynomial, order: MonomialOrder) -> Polynomial:
    c = leading_coeff(f, order)
    return f.map_coeffs(lambda q: q / c)


# ---------------------------------------------------------------------------
# order syntax:  lex | deglex | revlex, optionally with a variable
# list, or  weight(w1,...,wn; <base spec>)

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def parse_order(text: str, ring: PolyRing) -> MonomialOrder:
    """Parse specs like ``deglex``, ``lex(y,x,z)`` or ``weight(3,2,1; revlex)``."""
    order, rest = _parse_order_prefix(text.strip(), ring)
    if rest.strip():
        raise ParseError(f"trailing text in order spec: {rest.strip()!r}")
    return order


def _parse_order_prefix(text: str, ring: PolyRing):
    text = text.lstrip()
    m = _NAME_RE.match(text)
    if m is None:
        raise ParseError(f"expected an order name in {text!r}")
    name = m.group(0).lower()
    rest = text[m.end() :].lstrip()
    if name == "weight":
        if not rest.startswith("("):
            raise ParseError("weight order needs (entries; base)")
        inner, rest = _take_paren(rest)
        if ";" not in inner:
            raise ParseError("weight order needs a base order after ';'")
        entry_part, base_part = inner.split(";", 1)
        try:
            entries = tuple(int(s.strip()) for s in entry_part.split(","))
        except ValueError:
            raise ParseError(f"bad weight entries {entry_part.strip()!r}") from None
        if len(entries) != ring.n:
            raise ParseError(f"weight has {len(entries)} entries, ring has {ring.n} variables")
        try:
            w = WeightVector(entries)
        except ValueError as e:
            raise ParseError(str(e)) from None
        base, base_rest = _parse_order_prefix(base_part, ring)
        if base_rest.strip():
            raise ParseError(f"trailing text in order spec: {base_rest.strip()!r}")
        return WeightOrder(w, base), rest
    if name not in ("lex", "deglex", "revlex"):
        raise ParseError(f"unknown order {name!r}")
    perm = None
    if rest.startswith("("):
        inner, rest = _take_paren(rest)
        names = [s.strip() for s in inner.split(",")]
        if sorted(names) != sorted(ring.names):
            raise ParseError("order variable list must be a permutation of the ring variables")
        perm = tuple(ring.var_index(v) for v in names)
    cls = {"lex": Lex, "deglex": DegLex, "revlex": RevLex}[name]
    return cls(perm), rest


def _take_paren(text: str):
    assert text.startswith("(")
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return text[1:i], text[i + 1 :].lstrip()
    raise ParseError("unbalanced parentheses in order spec")


def describe_order(order: MonomialOrder, ring: PolyRing) -> str:
    """Inverse of `parse_order` for the orders it can produce."""
    if isinstance(order, WeightOrder):
        entries = ",".join(str(e) for e in order.weight.entries)
        return f"weight({entries}; {describe_order(order.base, ring)})"
    names = {Lex: "lex", DegLex: "deglex", RevLex: "revlex"}
    for cls, name in names.items():
        if type(order) is cls:
            if order.perm is None:
                return name
            vars_ = ",".join(ring.names[i] for i in order.perm)
            return f"{name}({vars_})"
    raise ValueError(f"cannot describe {order!r}")
