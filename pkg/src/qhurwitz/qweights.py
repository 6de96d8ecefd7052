"""Weight generating function coefficients and branch-point weights.

Four families of weight generating functions drive everything here, each an
infinite product in an expansion variable z with quantum deformation
parameter q (and p for the hybrid):

    E:  prod_{k>=0} (1 + q^k z)            coefficients E_i = q^(i(i-1)/2) / prod_{j<=i} (1-q^j)
    E': prod_{k>=1} (1 + q^k z)            coefficients E'_i = q^(i(i+1)/2) / prod_{j<=i} (1-q^j)
    H:  prod_{k>=0} (1 - q^k z)^(-1)       coefficients H_i = 1 / prod_{j<=i} (1-q^j)
    Q:  prod_{k>=0} (1 + q^k z)(1 - p^k z)^(-1)
        coefficients Q_i = sum_{m<=i} q^(m(m-1)/2) / (prod_{j<=m}(1-q^j) prod_{j<=i-m}(1-p^j))

The closed forms are pinned down by series-mode expansion of the products
(see the test suite); the displayed product bounds follow the closed forms.
All four are exponentials of the quantum dilogarithm
Li2(q, z) = sum_{k>=1} z^k / (k (1 - q^k)).

The symmetrized branch-point weight of an ordered list of colengths
(c_1, ..., c_k) averages over all orderings sigma:

    W_E  = (1/k!) sum_sigma prod_t q^((k-t) c_sigma(t)) / prod_s (1 - q^(P_s))
    W_E' = (1/k!) sum_sigma prod_t q^((k-t+1) c_sigma(t)) / prod_s (1 - q^(P_s))
    W_H  = (1/k!) sum_sigma 1 / prod_s (1 - q^(P_s))

with P_s = c_sigma(1) + ... + c_sigma(s) the running partial sums.  These are
the level sums of the corresponding products: strictly increasing levels from
0 for E, from 1 for E', weakly increasing levels from 0 for H.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .series import TruncatedSeries, reciprocal

#: Weight generating function families usable as branch-point species.
FAMILIES = ("E", "E'", "H")

#: Families accepted by weight_coefficient (Q is the single-variable hybrid).
COEFFICIENT_FAMILIES = ("E", "E'", "H", "Q")


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a" into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {text!r}") from exc


@dataclass(frozen=True)
class Species:
    """One weight-generating-function factor of a multispecies configuration.

    ``parameter`` is a Fraction in (-1, 1) in rational mode or a
    TruncatedSeries variable in series mode.  ``slot`` is the 1-based index of
    the expansion variable this species' degree is graded by.
    """

    family: str
    parameter: object
    slot: int
    label: str = "q"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown species family {self.family!r}")
        if self.slot < 1:
            raise ValueError("slot indices are 1-based")
        if isinstance(self.parameter, (int, Fraction)):
            value = Fraction(self.parameter)
            if not -1 < value < 1:
                raise ValueError(f"rational parameter must lie in (-1, 1): {value}")
            object.__setattr__(self, "parameter", value)
        elif not isinstance(self.parameter, TruncatedSeries):
            raise ValueError("parameter must be a rational or a TruncatedSeries")

    def describe(self) -> str:
        return f"{self.family}:{self.label}={self.parameter}"


@dataclass(frozen=True)
class WeightConfig:
    """Ordered list of species together with the symmetric-group degree n."""

    species: tuple[Species, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "species", tuple(self.species))
        if not self.species:
            raise ValueError("at least one species is required")
        if self.n < 1:
            raise ValueError("n must be positive")
        slots = [s.slot for s in self.species]
        if slots != list(range(1, len(slots) + 1)):
            raise ValueError("species slots must be distinct and contiguous from 1")

    def describe(self) -> str:
        return " ".join(s.describe() for s in self.species)


def parse_species_flag(text: str, slot: int) -> Species:
    """Parse a CLI species flag like "E:q=1/2" into a Species at the given slot."""
    if ":" not in text:
        raise ValueError(f"species must look like FAMILY:name=value, got {text!r}")
    family, rest = text.split(":", 1)
    family = family.strip()
    if "=" not in rest:
        raise ValueError(f"species must look like FAMILY:name=value, got {text!r}")
    label, value = rest.split("=", 1)
    label = label.strip()
    if not label:
        raise ValueError(f"species parameter needs a name: {text!r}")
    return Species(family=family, parameter=parse_rational(value), slot=slot, label=label)


def _euler_factor(q, m: int):
    """prod_{j=1}^{m} (1 - q^j)."""
    acc = q**0
    for j in range(1, m + 1):
        acc = acc * (1 - q**j)
    return acc


def weight_coefficient(family: str, params, i: int):
    """Coefficient of z^i of the named weight generating function.

    ``params`` is a single scalar for families E, E', H and a (q, p) pair for
    the hybrid Q.  Works in both scalar modes; a vanishing rational
    denominator raises PoleError.
    """
    if family not in COEFFICIENT_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if i < 0:
        raise ValueError("coefficient index must be nonnegative")
    if family == "Q":
        q, p = params
        total = 0
        for m in range(i + 1):
            term = (
                q ** (m * (m - 1) // 2)
                * reciprocal(_euler_factor(q, m))
                * reciprocal(_euler_factor(p, i - m))
            )
            total = total + term
        return total
    q = params[0] if isinstance(params, (tuple, list)) else params
    if family == "E":
        return q ** (i * (i - 1) // 2) * reciprocal(_euler_factor(q, i))
    if family == "E'":
        return q ** (i * (i + 1) // 2) * reciprocal(_euler_factor(q, i))
    return reciprocal(_euler_factor(q, i))


def quantum_dilog_coeffs(q, degree: int) -> tuple:
    """Coefficients of z^k, k = 1..degree, of Li2(q, z) = sum z^k / (k (1 - q^k))."""
    if degree < 1:
        raise ValueError("degree must be positive")
    return tuple(Fraction(1, k) * reciprocal(1 - q**k) for k in range(1, degree + 1))


def symmetrized_weight(family: str, q, colengths) -> object:
    """Symmetrized weight of a collection of branch points with given colengths.

    Averages the ordered-level weight over all orderings of the list; the
    result is invariant under permutations of ``colengths``.  The empty list
    has weight 1.  Signs are not included here: the H-family geometric sum
    carries its (-1)^(k+d) prefactor separately.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    colengths = tuple(int(c) for c in colengths)
    if any(c < 1 for c in colengths):
        raise ValueError("colengths must be positive")
    k = len(colengths)
    if k == 0:
        return q**0
    total = 0
    for order in itertools.permutations(range(k)):
        partial = 0
        denominator = q**0
        numerator_exp = 0
        for s, idx in enumerate(order):
            c = colengths[idx]
            partial += c
            denominator = denominator * (1 - q**partial)
            if family == "E":
                numerator_exp += (k - 1 - s) * c
            elif family == "E'":
                numerator_exp += (k - s) * c
        total = total + q**numerator_exp * reciprocal(denominator)
    return total * Fraction(1, factorial(k))


def bose_factor(q, c: int):
    """Occupation number q^c / (1 - q^c) of a branch point with colength c.

    With q = exp(-beta * hbar * omega) and energy c * hbar * omega this is
    the Bose gas factor 1 / (exp(beta * energy) - 1).  Rational q must lie in
    (0, 1); series-mode q is accepted formally.
    """
    if c < 1:
        raise ValueError("colength must be positive")
    if isinstance(q, (int, Fraction)):
        q = Fraction(q)
        if not 0 < q < 1:
            raise ValueError(f"q must lie in (0, 1): {q}")
    return q**c * reciprocal(1 - q**c)
