"""End-to-end acceptance suite.

Each test implements one acceptance criterion at its full stated scale,
demands exact rational equality (zero tolerance everywhere), and prints one
PASS/FAIL line; run with ``pytest tests/test_acceptance.py -v -s`` to see the
lines as they complete.
"""

import itertools
from fractions import Fraction
from math import factorial, prod

from qhurwitz import (
    BranchConfiguration,
    Species,
    TruncatedSeries,
    WeightConfig,
    centralizer_order,
    character_table,
    colength,
    combinatorial_hurwitz_number,
    enumerate_factorizations,
    enumerate_partitions,
    frobenius_hurwitz,
    jucys_murphy_eigenvalue_check,
    path_counts,
    poly_exp,
    poly_mul,
    quantum_dilog_coeffs,
    tau_coefficients,
    transfer_matrix,
    verify_triangle,
    weight_coefficient,
)
from qhurwitz.geometric import _profile_tuples

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
FIFTH = Fraction(1, 5)


def report(name: str, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"[acceptance] {name}: {status}")
    assert not failures, f"{name}: {failures[:5]}"


def two_species_config(n: int) -> WeightConfig:
    return WeightConfig(species=(Species("E", HALF, 1), Species("H", FIFTH, 2)), n=n)


def test_criterion_1_triangle_equality():
    """Geometric = combinatorial = tau, exactly, across the stated grid."""
    failures = []
    for family in ("E", "H"):
        for q in (HALF, THIRD):
            for n in (2, 3, 4):
                config = WeightConfig(species=(Species(family, q, 1),), n=n)
                result = verify_triangle(config, (3,))
                if not result.ok:
                    failures.append((family, str(q), n, result.discrepancies[:2]))
    for n in (2, 3):
        result = verify_triangle(two_species_config(n), (2, 2))
        if not result.ok:
            failures.append(("E+H", n, result.discrepancies[:2]))
    report("criterion 1: triangle equality", failures)


def test_criterion_2_frobenius_vs_brute_force():
    """n! * character sum equals the exhaustive factorization count."""
    failures = []
    for n in range(2, 6):
        parts = enumerate_partitions(n)
        tuples = [
            extra
            for total in range(0, 4)
            for extra in _profile_tuples(n, total)
            if len(extra) <= 3
        ]
        for extra in tuples:
            for mu in parts:
                for nu in parts:
                    config = BranchConfiguration(n, extra, mu, nu)
                    lhs = factorial(n) * frobenius_hurwitz(config)
                    rhs = enumerate_factorizations(config)
                    if lhs != rhs:
                        failures.append((n, extra, mu, nu, str(lhs), rhs))
    report("criterion 2: Frobenius character sum vs brute force", failures)


def test_criterion_3_qseries_identities():
    """Product expansions and dilogarithm exponentials at K=12, z-degree 8."""
    cap, zdeg = 12, 8
    failures = []

    def geometric(base):
        return [base**j for j in range(zdeg + 1)]

    q = TruncatedSeries.variable("q", cap)
    q2 = TruncatedSeries.variable("q", cap, ("q", "p"))
    p2 = TruncatedSeries.variable("p", cap, ("q", "p"))

    products = {"E": [1] + [0] * zdeg, "E'": [1] + [0] * zdeg,
                "H": [1] + [0] * zdeg, "Q": [1] + [0] * zdeg}
    for k in range(cap + 1):
        products["E"] = poly_mul(products["E"], [1, q**k], zdeg)
        if k >= 1:
            products["E'"] = poly_mul(products["E'"], [1, q**k], zdeg)
        products["H"] = poly_mul(products["H"], geometric(q**k), zdeg)
        products["Q"] = poly_mul(products["Q"], [1, q2**k], zdeg)
        products["Q"] = poly_mul(products["Q"], geometric(p2**k), zdeg)

    def closed(family, i):
        if family == "Q":
            return weight_coefficient("Q", (q2, p2), i)
        return weight_coefficient(family, q, i)

    for family, coeffs in products.items():
        for i in range(zdeg + 1):
            if coeffs[i] != closed(family, i):
                failures.append(("product", family, i))

    dilog = [0] + list(quantum_dilog_coeffs(q, zdeg))
    dilog_minus = [c * Fraction(-1) ** k for k, c in enumerate(dilog)]
    exp_e = poly_exp([-c for c in dilog_minus], zdeg)
    exp_h = poly_exp(dilog, zdeg)
    alternating = [Fraction(-1) ** j for j in range(zdeg + 1)]
    exp_eprime = poly_mul(alternating, exp_e, zdeg)
    dilog_p = [0] + list(quantum_dilog_coeffs(p2, zdeg))
    dilog_q_minus = [
        c * Fraction(-1) ** k
        for k, c in enumerate([0] + list(quantum_dilog_coeffs(q2, zdeg)))
    ]
    exp_q = poly_exp([a - b for a, b in zip(dilog_p, dilog_q_minus)], zdeg)
    for family, side in (("E", exp_e), ("H", exp_h), ("E'", exp_eprime), ("Q", exp_q)):
        for i in range(zdeg + 1):
            if side[i] != closed(family, i):
                failures.append(("exponential", family, i))
    report("criterion 3: q-series identities in series mode", failures)


def test_criterion_4_character_table_invariants():
    """Both orthogonality relations and sum of squared dimensions, n <= 8."""
    failures = []
    for n in range(1, 9):
        table = character_table(n)
        size = len(table.partitions)
        for i in range(size):
            for j in range(size):
                row_sum = sum(
                    Fraction(
                        table.values[i][k] * table.values[j][k],
                        table.centralizer_orders[k],
                    )
                    for k in range(size)
                )
                if row_sum != (1 if i == j else 0):
                    failures.append(("row", n, i, j))
                column_sum = sum(
                    table.values[k][i] * table.values[k][j] for k in range(size)
                )
                if column_sum != (table.centralizer_orders[i] if i == j else 0):
                    failures.append(("column", n, i, j))
        dims = [table.values[k][-1] for k in range(size)]
        if sum(d * d for d in dims) != factorial(n):
            failures.append(("dimensions", n))
    report("criterion 4: character table invariants", failures)


def test_criterion_5_path_count_oracle():
    """Brute-force path counts equal the spectral values; multinomial relation."""
    failures = []
    for n in (2, 3, 4):
        parts = enumerate_partitions(n)
        for d in range(0, 4):
            for mu in parts:
                for nu in parts:
                    counts = path_counts(n, d, mu, nu)
                    for lam, (ordered, unrestricted) in counts.items():
                        expected = Fraction(
                            factorial(sum(lam)), prod(factorial(p) for p in lam)
                        ) * ordered
                        if unrestricted != expected:
                            failures.append(("multinomial", n, d, mu, nu, lam))
                    for family in ("E", "H"):
                        via_paths = combinatorial_hurwitz_number(
                            family, HALF, d, mu, nu, via="paths"
                        )
                        via_matrix = combinatorial_hurwitz_number(
                            family, HALF, d, mu, nu, via="spectral"
                        )
                        if via_paths != via_matrix:
                            failures.append((family, n, d, mu, nu))
    report("criterion 5: path count oracle vs spectral", failures)


def test_criterion_6_transfer_matrix_commutativity():
    """Zero commutators among all species/degree matrices, n <= 5."""
    failures = []
    species = (Species("E", HALF, 1), Species("E", THIRD, 1), Species("H", FIFTH, 1))
    for n in range(2, 6):
        matrices = [
            transfer_matrix(s, degree, n)
            for s in species
            for degree in range(0, 4)
        ]
        for a, b in itertools.combinations(matrices, 2):
            if not a.commutes_with(b):
                failures.append((n, a.label, b.label))
    report("criterion 6: transfer matrix commutativity", failures)


def test_criterion_7_jucys_murphy_eigenvalues():
    """Explicit group-algebra product acts diagonally with content eigenvalues."""
    failures = []
    for n in range(1, 5):
        config = WeightConfig(
            species=(Species("E", HALF, 1), Species("H", FIFTH, 2)), n=n
        )
        for lam in enumerate_partitions(n):
            if not jucys_murphy_eigenvalue_check(config, lam, 2):
                failures.append((n, lam))
    report("criterion 7: Jucys-Murphy eigenvalue relation", failures)


def test_criterion_8_degree_zero_and_parity():
    """Zero-multidegree block is diagonal, parity rule kills odd entries."""
    failures = []
    tables = []
    for family, q, n in (("E", HALF, 2), ("E", THIRD, 3), ("H", HALF, 4)):
        config = WeightConfig(species=(Species(family, q, 1),), n=n)
        tables.append(tau_coefficients(config, (3,)))
    for n in (2, 3):
        tables.append(tau_coefficients(two_species_config(n), (2, 2)))
    for table in tables:
        parts = enumerate_partitions(table.n)
        zero = (0,) * len(table.maxdeg)
        for mu in parts:
            for nu in parts:
                expected = Fraction(1, centralizer_order(mu)) if mu == nu else 0
                if table.entry(zero, mu, nu) != expected:
                    failures.append(("zero block", table.n, mu, nu))
        for degrees in table.multidegrees():
            total = sum(degrees)
            for mu in parts:
                for nu in parts:
                    if (colength(mu) + total) % 2 != colength(nu) % 2:
                        if table.entry(degrees, mu, nu) != 0:
                            failures.append(("parity", table.n, degrees, mu, nu))
    report("criterion 8: degree zero block and parity vanishing", failures)
