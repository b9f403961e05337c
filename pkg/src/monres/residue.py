"""Combinatorial model of the residue current of a cellular resolution.

For an Artinian monomial ideal the current lives in top degree n, with one
component c_tau * R_alpha per face tau in K_n, where alpha is the label of tau
and R_alpha is the product of dbar(1/z_i^alpha_i). The scalars c_tau are not
modelled; a component is kept as a candidate unless it is provably zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .cells import Face, LabeledComplex, is_cellular_resolution
from .errors import DimensionMismatch, MonresError, NotAResolution
from .ideal import Exponent, MonIdeal, as_exponent, contains, intersect, ones, pure_powers, require_artinian, sub


@dataclass(frozen=True)
class CurrentTerm:
    """A product of principal values and residue factors in coordinates s_i.

    ``den[i]`` is the power of s_i in the denominator (zero or negative means
    a holomorphic factor s_i^(-den[i])); variables in ``bar`` carry
    dbar(1/s_i^den[i]) instead of a principal value.
    """

    den: tuple[int, ...]
    bar: frozenset[int]

    @property
    def is_zero(self) -> bool:
        # dbar of a holomorphic function vanishes
        return any(self.den[i] <= 0 for i in self.bar)

    def times_monomial(self, c: Sequence[int]) -> "CurrentTerm":
        """Multiply by s^c; each factor's denominator exponent drops by c_i."""
        if len(c) != len(self.den):
            raise DimensionMismatch("monomial and current differ in dimension")
        return CurrentTerm(tuple(d - x for d, x in zip(self.den, c)), self.bar)

    def times_inverse_monomial(self, c: Sequence[int]) -> "CurrentTerm | None":
        """Multiply by the principal value 1/s^c; None encodes the zero current."""
        if len(c) != len(self.den):
            raise DimensionMismatch("monomial and current differ in dimension")
        if any(x > 0 and i in self.bar for i, x in enumerate(c)):
            return None
        return CurrentTerm(tuple(d + x for d, x in zip(self.den, c)), self.bar)


def coleff_herrera(alpha: Sequence[int]) -> CurrentTerm:
    """R_alpha = dbar(1/z_n^alpha_n) ^ ... ^ dbar(1/z_1^alpha_1)."""
    alpha = as_exponent(alpha)
    return CurrentTerm(alpha, frozenset(range(len(alpha))))


def restrict_to_divisor(den: Sequence[int], j: int) -> CurrentTerm:
    """1_{s_j = 0} dbar(1/s^den): principal values except dbar(1/s_j^den_j)."""
    return CurrentTerm(tuple(den), frozenset([j]))


def monomial_annihilates(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """z^beta R_alpha = 0, decided by the formal monomial action."""
    if len(beta) != len(alpha):
        raise DimensionMismatch("beta and alpha differ in dimension")
    return coleff_herrera(alpha).times_monomial(beta).is_zero


class Status(str, Enum):
    CANDIDATE = "candidate-nonzero"
    ZERO = "provably-zero"


@dataclass(frozen=True)
class ResidueComponent:
    face: Face
    alpha: Exponent
    status: Status

    @property
    def is_candidate(self) -> bool:
        return self.status is Status.CANDIDATE


@dataclass(frozen=True)
class FormalResidue:
    dim: int
    components: tuple[ResidueComponent, ...]

    def candidates(self) -> list[ResidueComponent]:
        return [c for c in self.components if c.is_candidate]


def component_status(alpha: Exponent, I: MonIdeal) -> Status:
    # A zero entry makes R_alpha contain dbar(1) = 0. Otherwise
    # z^(alpha-1) R_alpha != 0, so a nonzero c_tau forces z^(alpha-1) outside I.
    if min(alpha) < 1 or contains(I, sub(alpha, ones(I.dim))):
        return Status.ZERO
    return Status.CANDIDATE


def residue_current(C: LabeledComplex, I: MonIdeal, check: bool = True) -> FormalResidue:
    require_artinian(I)
    if check and not is_cellular_resolution(C, I):
        raise NotAResolution("complex is not a cellular resolution of the ideal")
    n = I.dim
    top = C.faces[n] if n < len(C.faces) else ()
    comps = []
    for tau in top:
        alpha = C.label(tau)
        comps.append(ResidueComponent(tau, alpha, component_status(alpha, I)))
    return FormalResidue(n, tuple(comps))


class EmptySupport(MonresError, ValueError):
    pass


def annihilator(Rf: FormalResidue) -> MonIdeal:
    """Intersection of m^alpha over the candidate components."""
    cands = Rf.candidates()
    if not cands:
        raise EmptySupport("residue has no candidate-nonzero component")
    ann = MonIdeal.unit(Rf.dim)
    for alpha in sorted({c.alpha for c in cands}):
        ann = intersect(ann, pure_powers(alpha))
    return ann


def duality_check(C: LabeledComplex, I: MonIdeal, check: bool = True) -> bool:
    return annihilator(residue_current(C, I, check=check)) == I
