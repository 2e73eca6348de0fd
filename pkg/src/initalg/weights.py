"""Weight vectors realizing finitely many monomial comparisons.

Given pairs (m, n) that must satisfy m > n, produce a strictly positive
integral weight a with a.(exp m - exp n) >= 1 for every pair, canonicalized
(minimal entry sum, then lexicographically smallest, then integerized), or
raise with a Farkas certificate: nonnegative multipliers c, not all zero,
with sum c_i (exp m_i - exp n_i) <= 0 componentwise, proving no weight works.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from initalg.orders import MonomialOrder, leading_monomial, sorted_terms
from initalg.poly import Monomial, Polynomial, WeightVector
from initalg.simplex import EQ, GE, INFEASIBLE, LE, OPTIMAL, linear_program


class InfeasibleComparisons(ValueError):
    """No positive weight realizes the comparisons; carries the Farkas certificate."""

    def __init__(self, pairs, certificate: tuple[int, ...]):
        super().__init__(f"comparisons admit no positive weight (certificate {certificate})")
        self.pairs = tuple(pairs)
        self.certificate = certificate


def _integerize(values: Sequence[Fraction]) -> tuple[int, ...]:
    mult = lcm(*(v.denominator for v in values)) if values else 1
    ints = [int(v * mult) for v in values]
    g = gcd(*ints) if any(ints) else 1
    return tuple(v // g for v in ints)


def find_weight(
    pairs: Sequence[tuple[Monomial, Monomial]], n_vars: int | None = None
) -> WeightVector:
    """Canonical strictly positive integral weight a with a.m > a.n for every pair."""
    pairs = list(pairs)
    if n_vars is None:
        if not pairs:
            raise ValueError("need n_vars when the comparison set is empty")
        n_vars = len(pairs[0][0].exponents)
    if not pairs:
        return WeightVector.ones(n_vars)
    diffs = []
    for m, n in pairs:
        if len(m.exponents) != n_vars or len(n.exponents) != n_vars:
            raise ValueError("monomial arity mismatch in comparison set")
        if m == n:
            raise ValueError("comparison pair with equal monomials")
        diffs.append(tuple(a - b for a, b in zip(m.exponents, n.exponents)))

    # substitute a = 1 + x with x >= 0: gamma.x >= 1 - gamma.1
    base = [(g, GE, 1 - sum(g)) for g in diffs]
    ones = [Fraction(1)] * n_vars
    first = linear_program(ones, base)
    if first.status == INFEASIBLE:
        raise InfeasibleComparisons(pairs, _farkas_certificate(diffs))
    assert first.status == OPTIMAL
    total = first.objective(ones)

    # fix the minimal sum, then minimize the entries left to right
    fixed: list[tuple[list[Fraction], str, Fraction]] = [(ones, EQ, total)]
    values: list[Fraction] = []
    for j in range(n_vars):
        c = [Fraction(0)] * n_vars
        c[j] = Fraction(1)
        res = linear_program(c, base + fixed)
        assert res.status == OPTIMAL
        vj = res.x[j]
        values.append(vj)
        unit = [Fraction(0)] * n_vars
        unit[j] = Fraction(1)
        fixed.append((unit, EQ, vj))
    entries = _integerize([1 + v for v in values])
    return WeightVector(entries)


def _farkas_certificate(diffs: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    """Nonnegative multipliers c, summing to a nonpositive vector, normalized to integers."""
    m = len(diffs)
    n = len(diffs[0])
    cons: list[tuple[list[Fraction], str, Fraction]] = []
    for j in range(n):  # (Gamma^T c)_j <= 0
        cons.append(([Fraction(d[j]) for d in diffs], LE, Fraction(0)))
    cons.append(([Fraction(1)] * m, EQ, Fraction(1)))
    values: list[Fraction] = []
    fixed: list[tuple[list[Fraction], str, Fraction]] = []
    for j in range(m):  # lexicographically smallest certificate
        c = [Fraction(0)] * m
        c[j] = Fraction(1)
        res = linear_program(c, cons + fixed)
        assert res.status == OPTIMAL, "alternative system must be feasible by Farkas"
        vj = res.x[j]
        values.append(vj)
        unit = [Fraction(0)] * m
        unit[j] = Fraction(1)
        fixed.append((unit, EQ, vj))
    return _integerize(values)


def verify_weight(a: WeightVector, pairs: Sequence[tuple[Monomial, Monomial]]) -> bool:
    """Independent validator: every pair strictly separated by a."""
    return all(a.degree(m) > a.degree(n) for m, n in pairs)


def comparison_pairs(polys: Sequence[Polynomial], order: MonomialOrder):
    """(leading monomial, trailing monomial) pairs over all given polynomials."""
    pairs = []
    for f in polys:
        ts = sorted_terms(f, order)
        lead = ts[0].mono
        for t in ts[1:]:
            pairs.append((lead, t.mono))
    return pairs


def represent_order_by_weight(
    gens: Sequence[Polynomial], order: MonomialOrder
) -> WeightVector:
    """A weight a with ini_a = ini_order on the reduced GB of (gens), hence on the ideal."""
    from initalg.groebner import buchberger

    gb = buchberger(gens, order)
    pairs = comparison_pairs(gb.elements, order)
    if not pairs:
        return WeightVector.ones(gens[0].ring.n)
    return find_weight(pairs)


def represent_sagbi_by_weight(
    gens: Sequence[Polynomial], order: MonomialOrder, check_basis: bool = True
) -> WeightVector:
    """A weight a with ini_a(f) = leading term of f for every Sagbi generator f."""
    if check_basis:
        from initalg.sagbi import sagbi_test

        ok, witnesses = sagbi_test(gens, order)
        if not ok:
            raise ValueError("generators are not a Sagbi basis under this order")
    pairs = comparison_pairs([g for g in gens if not g.is_zero()], order)
    if not pairs:
        return WeightVector.ones(gens[0].ring.n)
    return find_weight(pairs)
