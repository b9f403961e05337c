"""Monomial ideals encoded by exponent vectors.

An exponent is a plain tuple of non-negative ints; a :class:`MonIdeal` keeps
the antichain of minimal generators in canonical (lexicographically
descending) order, so two ideals are equal iff their dataclasses compare equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotArtinianError, ZeroIdealError

Exponent = tuple[int, ...]


def as_exponent(a: Iterable[int]) -> Exponent:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise ValueError(f"negative exponent in {a}")
    return a


def divides(g: Sequence[int], a: Sequence[int]) -> bool:
    """True when z^g divides z^a."""
    return all(x <= y for x, y in zip(g, a))


def lcm(*exps: Sequence[int]) -> Exponent:
    return tuple(max(col) for col in zip(*exps))


def add(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    # may go negative; callers decide what that means
    return tuple(x - y for x, y in zip(a, b))


def ones(n: int) -> Exponent:
    return (1,) * n


@dataclass(frozen=True)
class MonIdeal:
    dim: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        for g in self.gens:
            if len(g) != self.dim:
                raise DimensionMismatch(f"generator {g} does not have length {self.dim}")

    @classmethod
    def from_gens(cls, gens: Iterable[Iterable[int]], n: int | None = None) -> "MonIdeal":
        gens = [as_exponent(g) for g in gens]
        if n is None:
            if not gens:
                raise ValueError("cannot infer the dimension of the zero ideal")
            n = len(gens[0])
        return minimalize(gens, n)

    @classmethod
    def zero(cls, n: int) -> "MonIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonIdeal":
        return cls(n, ((0,) * n,))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    def __contains__(self, a) -> bool:
        return contains(self, a)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


_VARS = "xyz"


def monomial_str(a: Sequence[int]) -> str:
    """Render an exponent as x^2*y style text (z1, z2, ... beyond three variables)."""
    names = _VARS if len(a) <= 3 else [f"z{i + 1}" for i in range(len(a))]
    parts = []
    for v, e in zip(names, a):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) or "1"


def _check_dim(n: int, exps: Iterable[Sequence[int]]) -> None:
    for a in exps:
        if len(a) != n:
            raise DimensionMismatch(f"exponent {tuple(a)} does not have length {n}")


def minimalize(raw: Iterable[Sequence[int]], n: int) -> MonIdeal:
    """Keep the divisibility-minimal exponents of ``raw``."""
    raw = [as_exponent(a) for a in raw]
    _check_dim(n, raw)
    kept: list[Exponent] = []
    # a divisor always has a total degree no larger than its multiple
    for a in sorted(set(raw), key=lambda e: (sum(e), e)):
        if not any(divides(g, a) for g in kept):
            kept.append(a)
    return MonIdeal(n, tuple(sorted(kept, reverse=True)))


def contains(I: MonIdeal, a: Sequence[int]) -> bool:
    _check_dim(I.dim, [a])
    return any(divides(g, a) for g in I.gens)


def is_subideal(I: MonIdeal, J: MonIdeal) -> bool:
    """True when I is contained in J."""
    if I.dim != J.dim:
        raise DimensionMismatch("ideals live in different dimensions")
    return all(contains(J, g) for g in I.gens)


def _require_nonzero(I: MonIdeal) -> None:
    if I.is_zero:
        raise ZeroIdealError("operation needs a nonzero ideal")


def is_artinian(I: MonIdeal) -> bool:
    """True iff every variable has a pure power among the generators."""
    _require_nonzero(I)
    if I.is_unit:
        return True
    for i in range(I.dim):
        if not any(g[i] > 0 and sum(g) == g[i] for g in I.gens):
            return False
    return True


def require_artinian(I: MonIdeal) -> None:
    if not is_artinian(I):
        raise NotArtinianError(f"{I} is not Artinian")


def intersect(I: MonIdeal, J: MonIdeal) -> MonIdeal:
    if I.dim != J.dim:
        raise DimensionMismatch("ideals live in different dimensions")
    return minimalize((lcm(g, h) for g in I.gens for h in J.gens), I.dim)


def product(I: MonIdeal, J: MonIdeal) -> MonIdeal:
    if I.dim != J.dim:
        raise DimensionMismatch("ideals live in different dimensions")
    return minimalize((add(g, h) for g in I.gens for h in J.gens), I.dim)


def power(I: MonIdeal, k: int) -> MonIdeal:
    if k < 1:
        raise ValueError("power needs k >= 1")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def pure_powers(beta: Sequence[int]) -> MonIdeal:
    """The ideal m^beta = (z_1^beta_1, ..., z_n^beta_n).

    A zero entry contributes the generator 1, giving the unit ideal.
    """
    beta = as_exponent(beta)
    n = len(beta)
    gens = []
    for i, b in enumerate(beta):
        e = [0] * n
        e[i] = b
        gens.append(tuple(e))
    return minimalize(gens, n)


def maximal_ideal_power(n: int, k: int) -> MonIdeal:
    """m^k: all monomials of total degree k in n variables."""
    gens = [a for a in itertools.product(range(k + 1), repeat=n) if sum(a) == k]
    return minimalize(gens, n)


def bounding_box(I: MonIdeal) -> Exponent:
    _require_nonzero(I)
    return lcm(*I.gens)


def standard_monomials(I: MonIdeal) -> frozenset[Exponent]:
    """All exponents outside I (finite because I is Artinian)."""
    require_artinian(I)
    box = bounding_box(I)
    return frozenset(
        a for a in itertools.product(*(range(b + 1) for b in box)) if not contains(I, a)
    )


def irreducible_decomposition(I: MonIdeal) -> frozenset[Exponent]:
    """Exponents alpha with I = intersection of the ideals m^alpha.

    Each maximal standard monomial s contributes s + (1, ..., 1).
    """
    std = standard_monomials(I)
    n = I.dim
    out = set()
    for s in std:
        if all(s[:i] + (s[i] + 1,) + s[i + 1:] not in std for i in range(n)):
            out.add(add(s, ones(n)))
    return frozenset(out)
