"""Content products and the hypergeometric tau-function coefficient pipeline.

A weight configuration determines, for every shape lam of n, the content
product

    r_lam(u_1, ..., u_S) = prod_species prod_{cells (i,j) of lam}
                           G_species(param, (shift + j - i) * u_slot)

where G is the species' weight generating function and each species tracks
its own expansion variable.  No symmetric function indeterminates are ever
materialized: the tau function "is" its coefficient table in the power sum
basis, assembled from content product coefficients and characters:

    entry(degrees, mu, nu) =
        sum_lam [u^degrees] r_lam * chi_lam(mu) chi_lam(nu) / (z_mu z_nu).

Multidegree truncation is a hard rectangular bound per slot.  The shift
defaults to 0, which is the value at which the coefficients are Hurwitz
numbers; nonzero shifts are supported for the content products and tables
only, with no enumerative meaning claimed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .characters import character_table
from .partitions import (
    Partition,
    check_partition,
    contents,
    enumerate_partitions,
    format_partition,
)
from .qweights import Species, WeightConfig, weight_coefficient
from .series import poly_mul


def species_content_coeffs(
    species: Species, lam: Partition, maxdeg: int, shift: int = 0
) -> list:
    """Coefficients, up to degree maxdeg, of the single-species content product.

    This is the product over cells of G(param, (shift + content) * u) as a
    univariate polynomial in the species' expansion variable u.  The degree 0
    coefficient is always 1; cells of content -shift contribute nothing.
    """
    weights = [weight_coefficient(species.family, species.parameter, j) for j in range(maxdeg + 1)]
    poly = [1] + [0] * maxdeg
    for c in contents(lam):
        m = shift + c
        if m == 0:
            continue
        factor = [weights[j] * m**j for j in range(maxdeg + 1)]
        poly = poly_mul(poly, factor, maxdeg)
    return poly


def content_product_coeffs(
    config: WeightConfig, lam: Partition, maxdeg: tuple[int, ...], shift: int = 0
) -> dict[tuple[int, ...], object]:
    """Multidegree-truncated coefficients of the full content product of lam.

    Keys run over the whole rectangle of multidegrees componentwise at most
    maxdeg; each species contributes only powers of its own slot variable, so
    the table is the outer product of the per-species coefficient lists.
    """
    lam = check_partition(lam)
    if sum(lam) != config.n:
        raise ValueError(f"lam must be a partition of {config.n}")
    if len(maxdeg) != len(config.species):
        raise ValueError("maxdeg must have one bound per species")
    per_species = [
        species_content_coeffs(s, lam, maxdeg[i], shift)
        for i, s in enumerate(config.species)
    ]
    table = {}
    for degrees in itertools.product(*(range(m + 1) for m in maxdeg)):
        value = 1
        for s, d in enumerate(degrees):
            value = value * per_species[s][d]
        table[degrees] = value
    return table


def schur_to_powersum(lam: Partition) -> dict[Partition, Fraction]:
    """Coefficients of the power sums P_mu in the Schur function S_lam.

    The coefficient of P_mu is chi_lam(mu) / z_mu.
    """
    lam = check_partition(lam)
    tbl = character_table(sum(lam)) if lam else None
    if tbl is None:
        return {(): Fraction(1)}
    row = tbl.values[tbl.index(lam)]
    return {
        mu: Fraction(row[j], tbl.centralizer_orders[j])
        for j, mu in enumerate(tbl.partitions)
    }


@dataclass
class HurwitzTable:
    """Dense table of Hurwitz numbers indexed by (multidegree, mu, nu).

    Entries are present for every pair of partitions of n and every
    multidegree componentwise at most maxdeg.  The zero-multidegree block is
    the diagonal delta_{mu,nu} / z_mu.
    """

    n: int
    species: tuple[Species, ...]
    maxdeg: tuple[int, ...]
    shift: int
    entries: dict

    def entry(self, degrees: tuple[int, ...], mu: Partition, nu: Partition):
        return self.entries[(tuple(degrees), tuple(mu), tuple(nu))]

    def multidegrees(self):
        return itertools.product(*(range(m + 1) for m in self.maxdeg))


def tau_coefficients(
    config: WeightConfig, maxdeg: tuple[int, ...], shift: int = 0
) -> HurwitzTable:
    """Coefficient table of the hypergeometric tau function for this configuration.

    entry(degrees, mu, nu) = sum over shapes lam of n of the multidegree
    coefficient of the content product of lam times
    chi_lam(mu) chi_lam(nu) / (z_mu z_nu).
    """
    maxdeg = tuple(int(m) for m in maxdeg)
    if any(m < 0 for m in maxdeg):
        raise ValueError("maxdeg bounds must be nonnegative")
    n = config.n
    parts = enumerate_partitions(n)
    tbl = character_table(n)
    coeff_tables = [content_product_coeffs(config, lam, maxdeg, shift) for lam in parts]
    entries = {}
    for degrees in itertools.product(*(range(m + 1) for m in maxdeg)):
        for i, mu in enumerate(parts):
            for j, nu in enumerate(parts):
                if j < i:
                    entries[(degrees, mu, nu)] = entries[(degrees, nu, mu)]
                    continue
                value = 0
                for k in range(len(parts)):
                    c = coeff_tables[k][degrees]
                    if not c:
                        continue
                    value = value + c * Fraction(
                        tbl.values[k][i] * tbl.values[k][j],
                        tbl.centralizer_orders[i] * tbl.centralizer_orders[j],
                    )
                entries[(degrees, mu, nu)] = value
    return HurwitzTable(n=n, species=config.species, maxdeg=maxdeg, shift=shift, entries=entries)


@dataclass
class TriangleReport:
    """Result of the three-pipeline comparison over a full table.

    Any disagreeing entry is listed with all three values; agreement of all
    entries is the package's primary correctness statement.
    """

    n: int
    maxdeg: tuple[int, ...]
    species: tuple[str, ...]
    checked: int
    discrepancies: list

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "maxdeg": list(self.maxdeg),
            "species": list(self.species),
            "checked": self.checked,
            "status": "ok" if self.ok else "fail",
            "discrepancies": self.discrepancies,
        }


#: Desk-scale bounds for the full triangle comparison.
TRIANGLE_N_LIMIT = 5
TRIANGLE_DEGREE_LIMIT = 3


def verify_triangle(config: WeightConfig, maxdeg: tuple[int, ...]) -> TriangleReport:
    """Compare the geometric, combinatorial and tau pipelines entrywise.

    Exact rational equality is demanded; any discrepancy is reported, not
    raised.  Bounds: n at most 5 and every slot degree at most 3, which keeps
    the branch-configuration sums at desk scale.
    """
    from .combinatorial import multispecies_transfer_matrix
    from .geometric import multispecies_hurwitz_number

    maxdeg = tuple(int(m) for m in maxdeg)
    if config.n > TRIANGLE_N_LIMIT:
        raise ValueError(f"triangle verification is limited to n <= {TRIANGLE_N_LIMIT}")
    if any(m > TRIANGLE_DEGREE_LIMIT for m in maxdeg):
        raise ValueError(
            f"triangle verification is limited to slot degrees <= {TRIANGLE_DEGREE_LIMIT}"
        )
    table = tau_coefficients(config, maxdeg)
    parts = enumerate_partitions(config.n)
    checked = 0
    discrepancies = []
    for degrees in itertools.product(*(range(m + 1) for m in maxdeg)):
        matrix = multispecies_transfer_matrix(config, degrees)
        for mu in parts:
            for nu in parts:
                tau_value = table.entry(degrees, mu, nu)
                comb_value = matrix.hurwitz_entry(mu, nu)
                geom_value = multispecies_hurwitz_number(config, degrees, mu, nu)
                checked += 1
                if not (tau_value == comb_value == geom_value):
                    discrepancies.append(
                        {
                            "degrees": list(degrees),
                            "mu": format_partition(mu),
                            "nu": format_partition(nu),
                            "geometric": str(geom_value),
                            "combinatorial": str(comb_value),
                            "tau": str(tau_value),
                        }
                    )
    return TriangleReport(
        n=config.n,
        maxdeg=maxdeg,
        species=tuple(s.describe() for s in config.species),
        checked=checked,
        discrepancies=discrepancies,
    )
