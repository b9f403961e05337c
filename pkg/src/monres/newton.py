"""Newton polyhedra, monomial valuations and integral closure of monomial ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch
from .ideal import Exponent, MonIdeal, _require_nonzero, bounding_box, minimalize, require_artinian, sub
from .linalg import cofactor_normal, primitive

Ray = tuple[int, ...]


def ord(rho: Sequence[int], a: Sequence[int]) -> int:  # noqa: A001 - matches the valuation's name
    """The monomial valuation of z^a along rho: the inner product <rho, a>."""
    if len(rho) != len(a):
        raise DimensionMismatch(f"ray {tuple(rho)} and exponent {tuple(a)} differ in length")
    return sum(r * x for r, x in zip(rho, a))


def ideal_order(rho: Sequence[int], I: MonIdeal) -> int:
    _require_nonzero(I)
    return min(ord(rho, g) for g in I.gens)


@dataclass(frozen=True)
class CompactFacet:
    normal: Ray
    offset: int


@dataclass(frozen=True)
class NewtonPolyhedron:
    dim: int
    facets: tuple[CompactFacet, ...]

    def __contains__(self, a) -> bool:
        if len(a) != self.dim:
            raise DimensionMismatch("point and polyhedron differ in dimension")
        if any(x < 0 for x in a):
            return False
        return all(ord(f.normal, a) >= f.offset for f in self.facets)


def compact_facets(I: MonIdeal) -> NewtonPolyhedron:
    """Enumerate the compact facets of NP(I).

    Every n-subset of generators spanning a hyperplane with a strictly
    positive normal that supports all generators gives a compact facet. For an
    Artinian ideal the only other facets are the coordinate hyperplanes,
    whose normals have zero entries, so the positivity filter is exact.
    """
    require_artinian(I)
    n = I.dim
    found: dict[Ray, int] = {}
    for pts in itertools.combinations(I.gens, n):
        base = pts[0]
        normal = cofactor_normal([sub(p, base) for p in pts[1:]])
        if not any(normal):
            continue  # affinely dependent
        if all(x <= 0 for x in normal):
            normal = tuple(-x for x in normal)
        if not all(x > 0 for x in normal):
            continue
        rho = primitive(normal)
        if rho in found:
            continue
        offset = ord(rho, base)
        if all(ord(rho, g) >= offset for g in I.gens):
            found[rho] = offset
    facets = tuple(CompactFacet(rho, r) for rho, r in sorted(found.items()))
    return NewtonPolyhedron(n, facets)


def integral_closure(I: MonIdeal) -> MonIdeal:
    """Minimal generators of the lattice points of NP(I).

    Minimal points of NP(I) cannot leave the bounding box of the generators,
    so a box scan is complete.
    """
    np_ = compact_facets(I)
    box = bounding_box(I)
    pts = (a for a in itertools.product(*(range(b + 1) for b in box)) if a in np_)
    return minimalize(pts, I.dim)


def is_integrally_closed(I: MonIdeal) -> bool:
    return integral_closure(I) == I


def rees_valuations(I: MonIdeal) -> list[tuple[Ray, int]]:
    """Rees valuations of an Artinian monomial ideal as (ray, order of I) pairs."""
    return [(f.normal, ideal_order(f.normal, I)) for f in compact_facets(I).facets]


def valuation_gap(I: MonIdeal, a: Exponent) -> list[tuple[Ray, int]]:
    """Rees rays on which z^a falls short of I, with the size of the shortfall."""
    return [(rho, r - ord(rho, a)) for rho, r in rees_valuations(I) if ord(rho, a) < r]
