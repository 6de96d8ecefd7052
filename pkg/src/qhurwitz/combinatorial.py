"""Combinatorial pipeline: weighted transposition paths and transfer matrices.

A length-d path is a product (a_1 b_1) ... (a_d b_d) h of transpositions
(a < b) applied to an element h; its signature is the partition of d whose
parts are the sizes of the groups of steps sharing a second element b.  A
path is ordered when equal-b steps are consecutive and the run values
strictly increase, i.e. when the b-sequence is weakly increasing.

Path count normalization: the class-to-class count of signature lam is

    m~[lam] = (1/n!) #{(h, seq) : h in class(mu), signature(seq) = lam,
                       product(seq) * h in class(nu)}

and m[lam] is the same with ordered sequences only; they are related by the
multinomial factor |lam|! / prod(lam_i!).  This 1/n! pair-count convention is
the one forced by exact agreement with the geometric and tau pipelines (the
n = 2, d = 1 entry already pins it down uniquely), and the brute-force
enumeration here is the oracle that validates it.

At production scale the weighted path counts are computed spectrally: the
weight generating function evaluated on the Jucys-Murphy elements is a
central element, its matrix on the class-sum basis is

    F^c(mu, nu) = sum_lam [u^c] r_lam * chi_lam(mu) chi_lam(nu) / z_mu

with r_lam the content product, and the Hurwitz-normalized entry F^c/z_nu is
the pipeline-comparison value.  Matrices for different species and degrees
commute exactly, and multispecies counts are their matrix products.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .characters import character_table
from .errors import CapacityError
from .partitions import (
    Partition,
    centralizer_order,
    check_partition,
    contents,
    enumerate_partitions,
)
from .qweights import FAMILIES, Species, WeightConfig, weight_coefficient
from .series import TruncatedSeries
from .sn import algebra_mul, symmetric_group
from .tau import species_content_coeffs

#: Brute-force path enumeration bounds ((n choose 2)^d sequences).
PATH_LIMIT_N = 5
PATH_LIMIT_D = 4

#: Largest n for the explicit group-algebra eigenvalue check.
JM_LIMIT = 5


def signature_of(steps) -> tuple[Partition, bool]:
    """Signature and ordered flag of a transposition sequence.

    Steps are (a, b) pairs with a < b.  The signature groups steps by equal
    second element over the whole sequence; the flag is True when equal-b
    steps are consecutive with strictly increasing values across runs.
    """
    seconds = []
    for a, b in steps:
        if not 1 <= a < b:
            raise ValueError(f"steps need 1 <= a < b, got ({a}, {b})")
        seconds.append(b)
    signature = tuple(sorted(Counter(seconds).values(), reverse=True))
    ordered = all(seconds[i] <= seconds[i + 1] for i in range(len(seconds) - 1))
    return signature, ordered


def path_counts(
    n: int, d: int, mu: Partition, nu: Partition
) -> dict[Partition, tuple[Fraction, Fraction]]:
    """Brute-force class-to-class path counts by signature.

    Returns {signature: (m, m~)} over all partitions of d, with m the ordered
    count and m~ the unrestricted count, both 1/n!-normalized as in the
    module docstring.
    """
    return dict(_path_counts(n, d, check_partition(mu), check_partition(nu)))


@lru_cache(maxsize=None)
def _path_counts(
    n: int, d: int, mu: Partition, nu: Partition
) -> dict[Partition, tuple[Fraction, Fraction]]:
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("mu and nu must be partitions of n")
    if n > PATH_LIMIT_N or d > PATH_LIMIT_D:
        raise CapacityError(
            f"path enumeration is limited to n <= {PATH_LIMIT_N}, d <= {PATH_LIMIT_D}"
        )
    group = symmetric_group(n)
    table = group.table
    type_of = group.type_of
    mu_class = group.classes[mu]
    steps = group.transpositions()
    ordered_raw: dict[Partition, int] = {}
    all_raw: dict[Partition, int] = {}
    for seq in itertools.product(steps, repeat=d):
        signature, ordered = signature_of([(a, b) for a, b, _ in seq])
        acc = group.identity
        for _, _, idx in seq:
            acc = table[acc][idx]
        row = table[acc]
        hits = sum(1 for h in mu_class if type_of[row[h]] == nu)
        if not hits:
            continue
        all_raw[signature] = all_raw.get(signature, 0) + hits
        if ordered:
            ordered_raw[signature] = ordered_raw.get(signature, 0) + hits
    scale = factorial(n)
    return {
        lam: (
            Fraction(ordered_raw.get(lam, 0), scale),
            Fraction(all_raw.get(lam, 0), scale),
        )
        for lam in enumerate_partitions(d)
    }


@dataclass(frozen=True)
class TransferMatrix:
    """Matrix of a central element on the class-sum basis, canonical order.

    rows[i][j] is the coefficient of the class nu = partitions[j] in the
    image of the class mu = partitions[i]; the Hurwitz-normalized entry
    divides by z_nu.  Matrices over a fixed n commute with each other.
    """

    n: int
    partitions: tuple[Partition, ...]
    degrees: tuple[int, ...]
    label: str
    rows: tuple[tuple[object, ...], ...]

    def _index(self, mu: Partition) -> int:
        try:
            return self.partitions.index(tuple(mu))
        except ValueError:
            raise ValueError(f"{tuple(mu)} is not a partition of {self.n}") from None

    def entry(self, mu: Partition, nu: Partition):
        return self.rows[self._index(mu)][self._index(nu)]

    def hurwitz_entry(self, mu: Partition, nu: Partition):
        return self.entry(mu, nu) * Fraction(1, centralizer_order(tuple(nu)))

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        if self.n != other.n or self.partitions != other.partitions:
            raise ValueError("matrices must share the same class basis")
        size = len(self.partitions)
        rows = tuple(
            tuple(
                sum((self.rows[i][k] * other.rows[k][j] for k in range(size)), 0)
                for j in range(size)
            )
            for i in range(size)
        )
        return TransferMatrix(
            n=self.n,
            partitions=self.partitions,
            degrees=self.degrees + other.degrees,
            label=f"{self.label} {other.label}".strip(),
            rows=rows,
        )

    def commutes_with(self, other: "TransferMatrix") -> bool:
        return (self @ other).rows == (other @ self).rows


def transfer_matrix(species: Species, degree: int, n: int) -> TransferMatrix:
    """Matrix of the degree-``degree`` part of the species' central element.

    Entries are sum_lam [u^degree] r_lam * chi_lam(mu) chi_lam(nu) / z_mu;
    degree 0 is the identity matrix.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    parts = tuple(enumerate_partitions(n))
    tbl = character_table(n)
    coeffs = [species_content_coeffs(species, lam, degree)[degree] for lam in parts]
    rows = []
    for i in range(len(parts)):
        z_mu = tbl.centralizer_orders[i]
        row = []
        for j in range(len(parts)):
            value = 0
            for k in range(len(parts)):
                if not coeffs[k]:
                    continue
                value = value + coeffs[k] * Fraction(tbl.values[k][i] * tbl.values[k][j], z_mu)
            row.append(value)
        rows.append(tuple(row))
    return TransferMatrix(
        n=n,
        partitions=parts,
        degrees=(degree,),
        label=f"{species.describe()}^{degree}",
        rows=tuple(rows),
    )


def multispecies_transfer_matrix(config: WeightConfig, degrees: tuple[int, ...]) -> TransferMatrix:
    """Product of the per-species transfer matrices at the given degrees.

    The factors commute, so the slot order used here is a convention, not a
    choice.
    """
    degrees = tuple(int(c) for c in degrees)
    if len(degrees) != len(config.species):
        raise ValueError("one degree per species is required")
    product = None
    for species, degree in zip(config.species, degrees):
        factor = transfer_matrix(species, degree, config.n)
        product = factor if product is None else product @ factor
    return product


def combinatorial_hurwitz_number(
    family: str, q, d: int, mu: Partition, nu: Partition, via: str = "spectral"
):
    """Weighted path count from class mu to class nu with d steps.

    via="spectral" reads the Hurwitz-normalized transfer matrix entry (the
    production route); via="paths" runs the brute-force enumeration and
    applies the per-signature weights prod(lam_i! g_{lam_i}) / d! to the
    unrestricted counts, where g is the family coefficient sequence.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    mu = check_partition(mu)
    nu = check_partition(nu)
    if sum(mu) != sum(nu):
        raise ValueError("mu and nu must have equal weight")
    n = sum(mu)
    if via == "spectral":
        species = Species(family=family, parameter=q, slot=1)
        return transfer_matrix(species, d, n).hurwitz_entry(mu, nu)
    if via != "paths":
        raise ValueError(f"unknown route {via!r}")
    counts = path_counts(n, d, mu, nu)
    total = 0
    for lam, (_, unrestricted) in counts.items():
        if not unrestricted:
            continue
        weight = 1
        for part in lam:
            weight = weight * (factorial(part) * weight_coefficient(family, q, part))
        total = total + weight * unrestricted
    return total * Fraction(1, factorial(d))


def jucys_murphy_eigenvalue_check(config: WeightConfig, lam: Partition, max_degree: int) -> bool:
    """Check the central element acts on the shape-lam idempotent by its content product.

    Builds prod_a G(params, J_a * slot variables) explicitly in the group
    algebra (J_a the Jucys-Murphy elements), truncated at total slot degree
    max_degree, applies it to F_lam = (1/h_lam) sum_mu chi_lam(mu) C_mu, and
    compares with the content product eigenvalue times F_lam.  The expansion
    is pure group-algebra arithmetic, with no character theory on the product
    side, so the diagonalization statement is tested rather than assumed.
    """
    lam = check_partition(lam)
    n = config.n
    if sum(lam) != n:
        raise ValueError("lam must be a partition of the configuration degree")
    if n > JM_LIMIT:
        raise CapacityError(f"the eigenvalue check is limited to n <= {JM_LIMIT}")
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    variables = tuple(f"u{s.slot}" for s in config.species)
    cap = max_degree
    group = symmetric_group(n)

    def monomial(var_index: int, power: int) -> TruncatedSeries:
        expo = tuple(power if i == var_index else 0 for i in range(len(variables)))
        return TruncatedSeries(variables, cap, {expo: 1})

    coeff_lists = [
        [weight_coefficient(s.family, s.parameter, m) for m in range(cap + 1)]
        for s in config.species
    ]

    one = TruncatedSeries.one(variables, cap)
    product: dict[int, object] = {group.identity: one}
    for a in range(2, n + 1):
        jm = {group.transposition(b, a): Fraction(1) for b in range(1, a)}
        jm_powers: list[dict[int, object]] = [{group.identity: Fraction(1)}]
        for _ in range(cap):
            jm_powers.append(algebra_mul(jm_powers[-1], jm, group))
        # Coefficient of J_a^t, summed over per-species degree splits of t.
        factor: dict[int, object] = {}
        for split in itertools.product(*(range(cap + 1) for _ in variables)):
            t = sum(split)
            if t > cap:
                continue
            scalar = one
            for var_index, power in enumerate(split):
                scalar = scalar * (coeff_lists[var_index][power] * monomial(var_index, power))
            for g, c in jm_powers[t].items():
                factor[g] = factor.get(g, 0) + scalar * c
        product = algebra_mul(product, factor, group)

    tbl = character_table(n)
    lam_index = tbl.index(lam)
    hook = tbl.hook_products[lam_index]
    idempotent: dict[int, Fraction] = {}
    for i, g_type in enumerate(group.type_of):
        value = Fraction(tbl.values[lam_index][tbl.index(g_type)], hook)
        if value:
            idempotent[i] = value

    eigenvalue = one
    for var_index in range(len(config.species)):
        for c in contents(lam):
            if c == 0:
                continue
            cell_factor = one * 0
            for m in range(cap + 1):
                cell_factor = cell_factor + (
                    coeff_lists[var_index][m] * c**m
                ) * monomial(var_index, m)
            eigenvalue = eigenvalue * cell_factor

    left = algebra_mul(product, idempotent, group)
    right = {g: eigenvalue * c for g, c in idempotent.items()}
    right = {g: v for g, v in right.items() if v}
    if set(left) != set(right):
        return False
    return all(left[g] == right[g] for g in left)
