"""Smallness certificates for residue currents of Artinian monomial ideals.

For each candidate component R_alpha of the residue current, a Rees ray rho
with ord_rho(z^(alpha-1)) < ord_rho(I) is chosen. The component is then
written as z^(beta-alpha) times the Bochner-Martinelli current of the complete
intersection m^beta, beta = k * gamma, whose unique Rees ray is rho. After
pulling back and dividing out dz, the divisor of rho carries the exponent

    a = n * ord_rho(m^beta) - ord_rho(z^(beta-alpha)) - ord_rho(dz),

and the certificate is the inequality a <= r = ord_rho(I). Exponent raising
on the other divisors (multiplying by sigma_i^(r_i - a_i) near the chosen
divisor) shows only the chosen ray's bound matters.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Sequence

from .cells import taylor_complex, scarf_complex
from .errors import InvariantViolation, NotIntegrallyClosed, UnsupportedDimension
from .fan import DivisorRow, divisor_table, normal_fan, ord_dz, regularize
from .ideal import (
    Exponent,
    MonIdeal,
    as_exponent,
    contains,
    is_subideal,
    ones,
    power,
    pure_powers,
    require_artinian,
    sub,
)
from .newton import Ray, ideal_order, integral_closure, is_integrally_closed, ord, rees_valuations
from .residue import Status, residue_current

COMPLEXES = {"taylor": taylor_complex, "scarf": scarf_complex}


@dataclass(frozen=True)
class Certificate:
    alpha: Exponent
    rho: Ray
    r: int
    ord_alpha_minus_one: int
    gamma: Exponent
    k: int
    beta: Exponent
    a: int

    def violations(self) -> list[str]:
        """Invariants that fail; empty for every certificate this module builds."""
        n = len(self.alpha)
        bad = []
        if not self.ord_alpha_minus_one < self.r:
            bad.append("ord(alpha - 1) < r")
        if any(b < a for a, b in zip(self.alpha, self.beta)):
            bad.append("beta >= alpha")
        if n * ideal_order(self.rho, pure_powers(self.beta)) != ord(self.rho, self.beta):
            bad.append("n * ord(m^beta) = ord(z^beta)")
        if not self.a <= self.ord_alpha_minus_one + 1 <= self.r:
            bad.append("a <= ord(alpha - 1) + 1 <= r")
        return bad


def cofactor_products(rho: Sequence[int]) -> Exponent:
    """gamma_j = product of rho_i over i != j."""
    if min(rho) < 1:
        raise ValueError(f"ray {tuple(rho)} has a zero entry; not a compact-facet normal")
    return tuple(math.prod(rho[:j]) * math.prod(rho[j + 1:]) for j in range(len(rho)))


def certificate_exponent(alpha: Sequence[int], rho: Sequence[int], beta: Sequence[int]) -> int:
    n = len(alpha)
    return n * ideal_order(rho, pure_powers(beta)) - ord(rho, sub(beta, alpha)) - ord_dz(rho)


def find_certificate(
    alpha: Sequence[int], I: MonIdeal, rees: Sequence[tuple[Ray, int]] | None = None
) -> Certificate | None:
    """Certificate for the component R_alpha, or None if no Rees ray qualifies.

    Among qualifying rays the one with the largest deficit r - ord(alpha - 1)
    wins, ties going to the lexicographically smallest ray; k is minimal.
    """
    alpha = as_exponent(alpha)
    require_artinian(I)
    n = I.dim
    if len(alpha) != n:
        raise ValueError("alpha and ideal differ in dimension")
    if min(alpha) < 1:
        raise ValueError(f"alpha={alpha} has a zero entry; its component vanishes")
    below = sub(alpha, ones(n))
    if contains(I, below):
        raise ValueError(f"z^(alpha - 1) lies in the ideal for alpha={alpha}; the component is zero")
    if rees is None:
        rees = rees_valuations(I)
    options = [(r - ord(rho, below), rho, r) for rho, r in rees if ord(rho, below) < r]
    if not options:
        return None
    _, rho, r = min(options, key=lambda o: (-o[0], o[1]))
    gamma = cofactor_products(rho)
    k = max(1, max(-(-a // g) for a, g in zip(alpha, gamma)))
    beta = tuple(k * g for g in gamma)
    cert = Certificate(alpha, rho, r, ord(rho, below), gamma, k, beta, certificate_exponent(alpha, rho, beta))
    bad = cert.violations()
    if bad:
        raise InvariantViolation(f"certificate for alpha={alpha} breaks {bad}")
    return cert


@dataclass(frozen=True)
class Shortfall:
    """A Rees ray on which z^(alpha-1) already reaches the ideal's order."""

    rho: Ray
    r: int
    ord_alpha_minus_one: int


@dataclass(frozen=True)
class ComponentOutcome:
    face: tuple[int, ...]
    alpha: Exponent
    status: Status
    certificate: Certificate | None = None
    shortfalls: tuple[Shortfall, ...] = ()

    @property
    def failed(self) -> bool:
        return self.status is Status.CANDIDATE and self.certificate is None


@dataclass(frozen=True)
class CertReport:
    ideal: MonIdeal
    complex_kind: str
    closed: bool
    components: tuple[ComponentOutcome, ...]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def certificates(self) -> list[Certificate]:
        return [c.certificate for c in self.components if c.certificate is not None]

    @property
    def witnesses(self) -> list[ComponentOutcome]:
        return [c for c in self.components if c.failed]


def certify_ideal(I: MonIdeal, complex_kind: str = "taylor", check_resolution: bool = True) -> CertReport:
    require_artinian(I)
    if I.is_unit:
        raise ValueError("the unit ideal has no residue current to certify")
    if complex_kind not in COMPLEXES:
        raise ValueError(f"unknown complex kind {complex_kind!r}")
    t0 = time.perf_counter()
    C = COMPLEXES[complex_kind](I)
    Rf = residue_current(C, I, check=check_resolution)
    rees = rees_valuations(I)
    outcomes = []
    for comp in sorted(Rf.components, key=lambda c: (c.alpha, c.face)):
        if comp.status is Status.ZERO:
            outcomes.append(ComponentOutcome(comp.face, comp.alpha, comp.status))
            continue
        cert = find_certificate(comp.alpha, I, rees)
        short = ()
        if cert is None:
            below = sub(comp.alpha, ones(I.dim))
            short = tuple(Shortfall(rho, r, ord(rho, below)) for rho, r in rees)
        outcomes.append(ComponentOutcome(comp.face, comp.alpha, comp.status, cert, short))
    closed = not any(o.failed for o in outcomes)
    return CertReport(I, complex_kind, closed, tuple(outcomes), time.perf_counter() - t0)


def cross_validate(I: MonIdeal) -> bool:
    """The certificate decision agrees with the Newton-polyhedron closure test."""
    return certify_ideal(I).closed == is_integrally_closed(I)


def briancon_skoda_check(I: MonIdeal, nu: int | None = None) -> bool:
    """Whether closure(I)^nu lies in I; nu defaults to min(n, number of generators)."""
    require_artinian(I)
    if nu is None:
        nu = min(I.dim, len(I.gens))
    return is_subideal(power(integral_closure(I), nu), I)


@dataclass(frozen=True)
class SmallnessReport:
    ideal: MonIdeal
    divisors: tuple[DivisorRow, ...]
    fan_refined: bool
    components: tuple[Certificate, ...]


def smallness_report(I: MonIdeal) -> SmallnessReport:
    """Divisor exponents of the refined toric resolution next to each component's certificate.

    For n outside (2, 3) the table lists the Rees divisors only.
    """
    require_artinian(I)
    if not is_integrally_closed(I):
        raise NotIntegrallyClosed(f"{I} is not integrally closed; run certify for the failing component")
    try:
        rows = divisor_table(regularize(normal_fan(I)), I)
        refined = True
    except UnsupportedDimension:
        rows = [DivisorRow(rho, r, ord_dz(rho), True) for rho, r in rees_valuations(I)]
        refined = False
    report = certify_ideal(I)
    if not report.closed:
        raise InvariantViolation(f"{I} is integrally closed but a component failed to certify")
    certs = tuple(report.certificates)
    for c in certs:
        if c.a > c.r:
            raise InvariantViolation(f"certificate exponent {c.a} exceeds r={c.r}")
    return SmallnessReport(I, tuple(rows), refined, certs)


def pure_power_exponents(n: int, ell: int) -> dict[str, int]:
    """Exponents on the blow-up divisor for (z_1^l, ..., z_n^l) with its Koszul complex.

    ``from_minors`` is the generic bound from the ranks of the Koszul maps,
    ``from_bochner_martinelli`` uses the n * ord exponent minus ord(dz),
    ``improved_bound`` is (n - 1) * l + 1; the last two agree only when l = n.
    """
    if n < 1 or ell < 1:
        raise ValueError("need n, l >= 1")
    rank_sum = sum(math.comb(n - 1, k - 1) for k in range(1, n + 1))  # ranks of the Koszul maps
    return {
        "n": n,
        "ell": ell,
        "r": ell,
        "ord_dz": n - 1,
        "from_minors": rank_sum * ell - n + 1,
        "from_bochner_martinelli": n * ell - (n - 1),
        "improved_bound": (n - 1) * ell + 1,
    }
