"""The one-parameter flat degeneration from an ideal to its weight-initial ideal.

Homogenizing a reduced weight-order Gröbner basis of I with respect to a
positive weight gives generators (in fact a Gröbner basis) of the total ideal
in R[t]; its t=0 fiber is the ideal of initial forms and every t=c fiber with
c nonzero is isomorphic to I.  Homogenizing arbitrary generators instead of a
Gröbner basis can produce a strictly smaller ideal, hence the GB-first shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from initalg.groebner import MonomialIdeal, ReducedGroebnerBasis, buchberger
from initalg.linalg import exact_rank_sparse
from initalg.orders import ExtendedOrder, MonomialOrder, RevLex, WeightOrder, leading_monomial
from initalg.poly import (
    Monomial,
    PolyRing,
    Polynomial,
    Scalar,
    WeightVector,
    homogenize,
    is_weight_homogeneous,
    specialize_t,
    weighted_degree,
)


def monomials_of_weight(n: int, weight: WeightVector, degree: int) -> list[Monomial]:
    """All monomials in n variables of the exact weighted degree, ascending by exponents."""
    out: list[Monomial] = []

    def rec(i: int, remaining: int, acc: list[int]):
        if i == n - 1:
            w = weight.entries[i]
            if remaining % w == 0:
                out.append(Monomial(tuple(acc + [remaining // w])))
            return
        e = 0
        while e * weight.entries[i] <= remaining:
            rec(i + 1, remaining - e * weight.entries[i], acc + [e])
            e += 1

    rec(0, degree, [])
    return out


@dataclass(frozen=True)
class HomogenizedFamily:
    """Total ideal over K[t] interpolating between I (t=1) and its initial forms (t=0)."""

    weight: WeightVector
    tiebreak: MonomialOrder
    base_gb: ReducedGroebnerBasis  # reduced GB of I under the weight-refined order
    total: ReducedGroebnerBasis  # reduced GB of the homogenized ideal in R[t]

    @property
    def ring(self) -> PolyRing:
        return self.base_gb.ring

    @property
    def extended_ring(self) -> PolyRing:
        return self.total.ring

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.total)


def homogenize_ideal(
    gens: Sequence[Polynomial],
    weight: WeightVector,
    tiebreak: MonomialOrder | None = None,
    homvar: str = "t",
) -> HomogenizedFamily:
    """Build the family: homogenize the reduced weight-order GB of (gens).

    The homogenized elements are themselves the reduced GB of the total ideal
    under the extended order (the t-free leading monomials are inherited),
    so no second Buchberger run is needed.
    """
    if tiebreak is None:
        tiebreak = RevLex()
    order = WeightOrder(weight, tiebreak)
    gb = buchberger(gens, order)
    ring_t = gb.ring.extend(homvar)
    ext_order = ExtendedOrder(weight, tiebreak)
    lifted = tuple(homogenize(g, weight, ring_t) for g in gb)
    lifted = tuple(sorted(lifted, key=lambda g: ext_order.key(leading_monomial(g, ext_order))))
    total = ReducedGroebnerBasis(ring_t, ext_order, lifted)
    return HomogenizedFamily(weight, tiebreak, gb, total)


def fiber(family: HomogenizedFamily, c: Scalar) -> tuple[Polynomial, ...]:
    """Generators of the fiber ideal at t=c, in the base ring."""
    return tuple(specialize_t(g, Fraction(c)) for g in family.total)


@dataclass(frozen=True)
class FreenessReport:
    """Degreewise comparison of standard-monomial counts with quotient dimensions."""

    ok: bool
    bound: int
    rows: tuple[tuple[int, int, int], ...]  # (degree, standard count, quotient dimension)


def freeness_basis_check(family: HomogenizedFamily, degree_bound: int | None = None) -> FreenessReport:
    """Certify K[t]-freeness of the quotient up to a degree bound.

    The candidate basis is {t^e * m} with m a standard monomial of the base
    initial ideal; in each extended degree its cardinality must match the
    exact codimension of the total ideal's graded piece.
    """
    a = family.weight
    ring = family.ring
    ring_t = family.extended_ring
    if degree_bound is None:
        top = max((weighted_degree(g, a) for g in family.base_gb), default=1)
        degree_bound = 2 * top
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    ini = family.base_gb.initial_ideal()
    a_ext = a.extend()
    order_key = family.total.order.key
    rows = []
    ok = True
    standard = 0
    for d in range(degree_bound + 1):
        standard += sum(
            1 for mono in monomials_of_weight(ring.n, a, d) if not ini.contains(mono)
        )
        # columns sorted by the extended order keep the rows near-echelon
        ambient = sorted(monomials_of_weight(ring_t.n, a_ext, d), key=order_key)
        index = {mono: i for i, mono in enumerate(ambient)}
        sparse = []
        for g in family.total:
            gd = weighted_degree(g, a_ext)
            if gd > d:
                continue
            for mult in monomials_of_weight(ring_t.n, a_ext, d - gd):
                sparse.append({index[mult.mul(t.mono)]: t.coeff for t in g.terms})
        dim = len(ambient) - exact_rank_sparse(sparse)
        rows.append((d, standard, dim))
        if standard != dim:
            ok = False
    return FreenessReport(ok, degree_bound, tuple(rows))
