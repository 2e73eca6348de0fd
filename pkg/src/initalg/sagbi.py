"""Initial algebras: subduction, the Sagbi criterion, bounded completion.

A finite generating set F of a subalgebra is a Sagbi basis when the leading
monomials of F generate the whole initial algebra.  The criterion mirrors
Buchberger: lift each binomial relation among the leading monomials to the
corresponding difference of products of generators and subduct; all
remainders must vanish.  Completion can provably run forever (the initial
algebra need not be finitely generated), so a degree cap is mandatory.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from initalg.groebner import AlgebraKernel, buchberger, presentation_kernel
from initalg.orders import MonomialOrder, RevLex, WeightOrder, leading_term, monic
from initalg.poly import (
    Monomial,
    PolyRing,
    Polynomial,
    RingMismatchError,
    Term,
    WeightVector,
    initial_form,
    weighted_degree,
)


@dataclass(frozen=True)
class SubductionStep:
    """One subtraction: coeff times the product of generators with these exponents."""

    coeff: Fraction
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class SubductionResult:
    remainder: Polynomial
    steps: tuple[SubductionStep, ...]

    def replay(self, gens: Sequence[Polynomial]) -> Polynomial:
        """Re-expand the certificate: sum of the steps plus the remainder."""
        ring = self.remainder.ring
        acc = self.remainder
        for step in self.steps:
            p = ring.const(step.coeff)
            for g, e in zip(gens, step.exponents):
                if e:
                    p = p * g**e
            acc = acc + p
        return acc


@dataclass(frozen=True)
class SagbiState:
    """Generators together with the completion verdict."""

    gens: tuple[Polynomial, ...]
    order: MonomialOrder
    truncated_at: int | None = None  # None means the Sagbi test closed

    @property
    def confirmed(self) -> bool:
        return self.truncated_at is None


def _check_subalgebra_gens(gens: Sequence[Polynomial]) -> PolyRing:
    if not gens:
        raise ValueError("need at least one subalgebra generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators from different rings")
        if g.is_zero() or all(t.mono.is_one() for t in g.terms):
            raise ValueError("subalgebra generators must be nonconstant")
    return ring


def _sort_gens(gens: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    def k(f: Polynomial):
        return (
            order.key(leading_term(f, order).mono),
            tuple((t.mono.exponents, t.coeff) for t in f.terms),
        )

    return sorted(gens, key=k)


def factor_over_monomials(target: Monomial, monos: Sequence[Monomial]) -> tuple[int, ...] | None:
    """Exponents c >= 0 with prod monos[i]^c[i] == target, or None.

    Searches depth-first, trying large exponents first, so the returned
    solution is the lexicographically largest one; generators are nonconstant,
    which bounds every exponent.
    """
    n = len(target.exponents)

    def rec(i: int, remaining: tuple[int, ...], acc: list[int]):
        if all(r == 0 for r in remaining):
            return acc + [0] * (len(monos) - i)
        if i == len(monos):
            return None
        exps = monos[i].exponents
        cap = min(r // e for r, e in zip(remaining, exps) if e > 0)
        for c in range(cap, -1, -1):
            rest = tuple(r - c * e for r, e in zip(remaining, exps))
            found = rec(i + 1, rest, acc + [c])
            if found is not None:
                return found
        return None

    found = rec(0, target.exponents, [])
    return tuple(found) if found is not None else None


def subduct_with_certificate(
    f: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder
) -> SubductionResult:
    """Subtract products of generators while the leading monomial factors over their initials.

    The remainder is 0 (f lies in the algebra generated by `gens`) or has a
    leading monomial outside the semigroup of the generators' initials.  The
    recorded steps replay to f = sum(steps) + remainder.
    """
    ring = _check_subalgebra_gens(gens)
    if f.ring != ring:
        raise RingMismatchError("polynomial and generators from different rings")
    inis = [leading_term(g, order) for g in gens]
    steps: list[SubductionStep] = []
    work = f
    while not work.is_zero():
        t = leading_term(work, order)
        c = factor_over_monomials(t.mono, [it.mono for it in inis])
        if c is None:
            break
        lead_coeff = t.coeff
        for it, e in zip(inis, c):
            lead_coeff /= it.coeff**e
        product = ring.one()
        for g, e in zip(gens, c):
            if e:
                product = product * g**e
        steps.append(SubductionStep(lead_coeff, c))
        work = work - lead_coeff * product
    return SubductionResult(work, tuple(steps))


def subduct(f: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    return subduct_with_certificate(f, gens, order).remainder


def _lifted_relations(gens: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """For each binomial syzygy Y^u - Y^v of the initial monomials, the scaled f^u - f^v."""
    ring = gens[0].ring
    inis = [leading_term(g, order) for g in gens]
    kernel = presentation_kernel(
        [Polynomial(ring, (Term(Fraction(1), it.mono),)) for it in inis]
    )
    lifts = []
    for rel in kernel.gens:
        assert len(rel.terms) == 2, "toric kernel generators are binomials"
        parts = []
        for t in rel.terms:
            prod = ring.one()
            scale = Fraction(1)
            for g, it, e in zip(gens, inis, t.mono.exponents):
                if e:
                    prod = prod * g**e
                    scale *= it.coeff**e
            parts.append((t.coeff / scale) * prod)
        lifts.append(parts[0] + parts[1])
    return lifts


def sagbi_test(
    gens: Sequence[Polynomial], order: MonomialOrder
) -> tuple[bool, tuple[Polynomial, ...]]:
    """Sagbi criterion: every lifted syzygy of the initial monomials subducts to zero.

    Returns (ok, witnesses); witnesses are the nonzero remainders, monic,
    sorted by the order. The generator list is sorted internally so the
    verdict does not depend on input ordering.
    """
    _check_subalgebra_gens(gens)
    gens = _sort_gens(gens, order)
    witnesses = []
    for lift in _lifted_relations(gens, order):
        if lift.is_zero():
            continue
        rem = subduct(lift, gens, order)
        if not rem.is_zero():
            witnesses.append(monic(rem, order))
    witnesses = _sort_gens(set(witnesses), order) if witnesses else []
    return (not witnesses, tuple(witnesses))


def sagbi_complete(
    gens: Sequence[Polynomial], order: MonomialOrder, degree_cap: int
) -> SagbiState:
    """Adjoin subduction remainders of lifted syzygies up to the degree cap.

    Ends Confirmed when the test closes; ends TruncatedAtDegree(cap) when the
    only outstanding witnesses exceed the cap (the initial algebra may be
    infinitely generated, so unbounded completion is not offered).
    """
    _check_subalgebra_gens(gens)
    if degree_cap < 1:
        raise ValueError("degree cap must be positive")
    if degree_cap < max(g.total_degree() for g in gens):
        raise ValueError("degree cap below a generator degree")
    current = _sort_gens(gens, order)
    while True:
        ok, witnesses = sagbi_test(current, order)
        if ok:
            return SagbiState(tuple(current), order, None)
        admissible = [w for w in witnesses if w.total_degree() <= degree_cap]
        if not admissible:
            return SagbiState(tuple(current), order, degree_cap)
        current = _sort_gens(current + [admissible[0]], order)


def minimalize_semigroup(monos: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """Drop monomials that are products of the others (semigroup redundancy)."""
    unique = sorted(set(monos), key=lambda m: (m.degree(), m.exponents))
    kept: list[Monomial] = []
    for i, m in enumerate(unique):
        others = [u for u in unique if u != m and not u.is_one()]
        if m.is_one():
            continue
        if others and factor_over_monomials(m, others) is not None:
            continue
        kept.append(m)
    return tuple(kept)


def initial_algebra_gens(
    state: SagbiState | Sequence[Polynomial], order: MonomialOrder | None = None
) -> tuple[Monomial, ...]:
    """Leading monomials of the (possibly truncated) Sagbi generators, minimalized."""
    if isinstance(state, SagbiState):
        gens, order = state.gens, state.order
    else:
        if order is None:
            raise ValueError("order required when passing bare generators")
        gens = tuple(state)
    _check_subalgebra_gens(gens)
    return minimalize_semigroup([leading_term(g, order).mono for g in gens])


@dataclass(frozen=True)
class InitialKernelReport:
    """Comparison of ini_b(relations of f) with the relations of the initial forms."""

    ok: bool
    image_weights: WeightVector  # b: the a-degrees of the generators
    kernel: AlgebraKernel  # relations among the f_i
    initial_kernel: AlgebraKernel  # relations among the ini_a(f_i)
    kernel_initial_forms: tuple[Polynomial, ...]  # generators of ini_b(kernel)


def kernel_initial_check(
    gens: Sequence[Polynomial],
    weight: WeightVector,
    tiebreak: MonomialOrder | None = None,
    names: Sequence[str] | None = None,
) -> InitialKernelReport:
    """Check ini_b(Ker(Y -> f)) == Ker(Y -> ini_a(f)) with b the a-degrees of the f_i.

    The caller asserts that the initial forms of the generators generate the
    whole initial algebra (e.g. after a passing Sagbi test under the refined
    order); under that hypothesis the two ideals agree.
    """
    ring = _check_subalgebra_gens(gens)
    if weight.n != ring.n:
        raise RingMismatchError("weight arity does not match ring")
    if tiebreak is None:
        tiebreak = RevLex()
    image_weights = WeightVector(tuple(weighted_degree(f, weight) for f in gens))
    kernel = presentation_kernel(list(gens), names=names)
    forms = [initial_form(f, weight) for f in gens]
    initial_kernel = presentation_kernel(forms, names=names)
    if kernel.gens:
        from initalg.groebner import initial_ideal_weight

        forms_of_kernel = initial_ideal_weight(list(kernel.gens), image_weights, tiebreak)
    else:
        forms_of_kernel = ()
    lhs = buchberger(list(forms_of_kernel), RevLex()).elements if forms_of_kernel else ()
    rhs = buchberger(list(initial_kernel.gens), RevLex()).elements if initial_kernel.gens else ()
    return InitialKernelReport(lhs == rhs, image_weights, kernel, initial_kernel, forms_of_kernel)
