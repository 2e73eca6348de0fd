from fractions import Fraction

import pytest

from initalg.orders import DegLex, Lex, RevLex, WeightOrder
from initalg.poly import Monomial, Polynomial, WeightVector

# outcome/detail registries for the end-to-end acceptance checks; the summary
# hook prints one PASS/FAIL line per check outside of output capture
ACCEPTANCE_RESULTS: dict[str, bool] = {}
ACCEPTANCE_DETAILS: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(label): end-to-end acceptance check with a summary line"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            label = marker.args[0]
            ACCEPTANCE_RESULTS[label] = ACCEPTANCE_RESULTS.get(label, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance checks")
    for label, passed in ACCEPTANCE_RESULTS.items():
        detail = ACCEPTANCE_DETAILS.get(label, "")
        suffix = f": {detail}" if passed and detail else ""
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {label}{suffix}")


def random_monomial(rng, n, max_exp=3):
    return Monomial(tuple(rng.randint(0, max_exp) for _ in range(n)))


def random_poly(rng, ring, max_terms=4, max_exp=3, max_coeff=5):
    acc = {}
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(rng, ring.n, max_exp)
        c = Fraction(rng.randint(-max_coeff, max_coeff))
        acc[m] = acc.get(m, Fraction(0)) + c
    return Polynomial.from_dict(ring, acc)


def random_homogeneous_poly(rng, ring, degree, max_terms=3, max_coeff=4, weight=None):
    """Random nonzero polynomial all of whose terms share the given (weighted) degree."""
    pool = [m for m in monomials_of_weighted_degree(ring.n, degree, weight)]
    acc = {}
    for _ in range(rng.randint(1, max_terms)):
        m = rng.choice(pool)
        c = Fraction(rng.randint(-max_coeff, max_coeff))
        acc[m] = acc.get(m, Fraction(0)) + c
    f = Polynomial.from_dict(ring, acc)
    if f.is_zero():
        m = rng.choice(pool)
        f = Polynomial.from_dict(ring, {m: Fraction(1)})
    return f


def monomials_of_weighted_degree(n, degree, weight=None):
    """All exponent vectors of the exact (weighted) total degree."""
    w = weight.entries if isinstance(weight, WeightVector) else (weight or (1,) * n)
    out = []

    def rec(i, remaining, acc):
        if i == n - 1:
            if remaining % w[i] == 0:
                out.append(Monomial(tuple(acc + [remaining // w[i]])))
            return
        e = 0
        while e * w[i] <= remaining:
            rec(i + 1, remaining - e * w[i], acc + [e])
            e += 1

    rec(0, degree, [])
    return out


def sample_orders(n):
    orders = [Lex(), DegLex(), RevLex()]
    if n == 3:
        orders += [Lex(perm=(2, 0, 1)), WeightOrder(WeightVector((2, 1, 3)), RevLex())]
    return orders
