"""Normal fans of Newton polyhedra and their refinement to regular fans.

Dimension 2 is handled exactly by continued-fraction (Hirzebruch-Jung)
subdivision. Dimension 3 uses repeated stellar subdivision at the
smallest lattice point of a fundamental parallelepiped.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IterationCapExceeded, UnsupportedDimension
from .ideal import MonIdeal, require_artinian
from .linalg import det, maximal_minor_gcd, rank, solve
from .newton import Ray, compact_facets, ideal_order, ord

STELLAR_CAP = 10_000


@dataclass(frozen=True)
class Cone:
    rays: tuple[int, ...]  # indices into Fan.rays

    @property
    def dim(self) -> int:
        return len(self.rays)


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple[Ray, ...]
    cones: tuple[Cone, ...]

    def cone_rays(self, c: Cone) -> list[Ray]:
        return [self.rays[i] for i in c.rays]


def _unit(n: int, i: int) -> Ray:
    return tuple(1 if j == i else 0 for j in range(n))


def _slope(r: Ray) -> Fraction | float:
    return Fraction(r[1], r[0]) if r[0] else math.inf


def _fan_2d(rays: Sequence[Ray]) -> Fan:
    rays = sorted(set(rays), key=_slope)
    cones = tuple(Cone((i, i + 1)) for i in range(len(rays) - 1))
    return Fan(2, tuple(rays), cones)


def _facet_normals(I: MonIdeal) -> list[tuple[Ray, int]]:
    """All facets of NP(I) as (normal, offset): compact ones plus coordinate hyperplanes."""
    n = I.dim
    return [(f.normal, f.offset) for f in compact_facets(I).facets] + [(_unit(n, i), 0) for i in range(n)]


def _cyclic_order(rays: list[Ray]) -> list[Ray]:
    """Sort the extreme rays of a pointed 3-d cone by angle around its centre."""
    c = [sum(r[i] for r in rays) for i in range(3)]
    norm_c = math.sqrt(sum(x * x for x in c))
    axis = [x / norm_c for x in c]

    def project(r):
        d = sum(a * b for a, b in zip(r, axis))
        return [x - d * a for x, a in zip(r, axis)]

    e1 = project(rays[0])
    l1 = math.sqrt(sum(x * x for x in e1))
    e1 = [x / l1 for x in e1]
    e2 = [axis[1] * e1[2] - axis[2] * e1[1], axis[2] * e1[0] - axis[0] * e1[2], axis[0] * e1[1] - axis[1] * e1[0]]

    def angle(r):
        p = project(r)
        return math.atan2(sum(a * b for a, b in zip(p, e2)), sum(a * b for a, b in zip(p, e1))) % (2 * math.pi)

    return sorted(rays, key=angle)


def _fan_3d(I: MonIdeal) -> Fan:
    facets = _facet_normals(I)
    maximal: list[tuple[Ray, ...]] = []
    for v in I.gens:
        tight = [rho for rho, r in facets if ord(rho, v) == r]
        if rank([list(t) for t in tight]) < 3:
            continue  # v is not a vertex of NP(I)
        ring = _cyclic_order(tight)
        start = ring.index(min(ring))
        ring = ring[start:] + ring[:start]
        for i in range(1, len(ring) - 1):
            maximal.append((ring[0], ring[i], ring[i + 1]))
    return _assemble_3d(maximal)


def _assemble_3d(maximal: Sequence[Sequence[Ray]]) -> Fan:
    rays = sorted({r for cone in maximal for r in cone})
    index = {r: i for i, r in enumerate(rays)}
    cones = sorted({tuple(sorted(index[r] for r in cone)) for cone in maximal})
    return Fan(3, tuple(rays), tuple(Cone(c) for c in cones))


def normal_fan(I: MonIdeal) -> Fan:
    """Normal fan of NP(I); its support is the positive orthant."""
    require_artinian(I)
    if I.dim == 2:
        return _fan_2d([(1, 0), (0, 1)] + [f.normal for f in compact_facets(I).facets])
    if I.dim == 3:
        return _fan_3d(I)
    raise UnsupportedDimension(f"fans are only built for n in (2, 3), got n={I.dim}")


def is_regular(c: Cone, f: Fan) -> bool:
    rows = [list(r) for r in f.cone_rays(c)]
    if len(rows) == f.dim:
        return abs(det(rows)) == 1
    return maximal_minor_gcd(rows) == 1


def _hirzebruch_jung(u: Ray, v: Ray) -> list[Ray]:
    """Rays strictly between u and v making every consecutive pair unimodular."""
    out = []
    d = u[0] * v[1] - u[1] * v[0]
    while d > 1:
        # w = (v + c u) / d is the first Hilbert basis element after u
        c = next(c for c in range(1, d) if all((vi + c * ui) % d == 0 for ui, vi in zip(u, v)))
        w = tuple((vi + c * ui) // d for ui, vi in zip(u, v))
        out.append(w)
        u, d = w, c
    return out


def _parallelepiped_point(vs: Sequence[Ray]) -> Ray:
    """Nonzero lattice point of the half-open fundamental parallelepiped with least coordinate sum."""
    upper = [sum(v[i] for v in vs) for i in range(3)]
    d = det([[v[i] for v in vs] for i in range(3)])
    best = None
    for x in sorted(itertools.product(*(range(u + 1) for u in upper)), key=lambda p: (sum(p), p)):
        if not any(x):
            continue
        lam = solve([[v[i] for v in vs] for i in range(3)], x)
        if all(0 <= t < 1 for t in lam):
            best = x
            break
    if best is None:
        raise ValueError(f"cone with determinant {d} has no interior parallelepiped point")
    return best


def _stellar_refine(cones: list[tuple[Ray, ...]], cap: int) -> list[tuple[Ray, ...]]:
    cones = sorted(cones)
    for _ in range(cap):
        bad = next((c for c in cones if abs(det([list(r) for r in c])) != 1), None)
        if bad is None:
            return cones
        w = _parallelepiped_point(bad)
        new = []
        for c in cones:
            lam = solve([[r[i] for r in c] for i in range(3)], w)
            if lam is None or any(t < 0 for t in lam):
                new.append(c)
                continue
            for j, t in enumerate(lam):
                if t > 0:
                    new.append(tuple(sorted(c[:j] + (w,) + c[j + 1:])))
        cones = sorted(set(new))
    raise IterationCapExceeded(f"stellar subdivision did not finish within {cap} steps")


def regularize(f: Fan, cap: int = STELLAR_CAP) -> Fan:
    """Refine f to a regular fan, keeping every original ray."""
    if f.dim == 2:
        rays = [f.rays[0]]
        for c in f.cones:
            u, v = f.cone_rays(c)
            rays.extend(_hirzebruch_jung(u, v))
            rays.append(v)
        return _fan_2d(rays)
    if f.dim == 3:
        maximal = [tuple(f.cone_rays(c)) for c in f.cones]
        return _assemble_3d(_stellar_refine(maximal, cap))
    raise UnsupportedDimension(f"fans are only built for n in (2, 3), got n={f.dim}")


@dataclass(frozen=True)
class DivisorRow:
    ray: Ray
    order: int  # ord_rho of the ideal
    ord_dz: int
    is_rees: bool


def ord_dz(rho: Sequence[int]) -> int:
    """Vanishing order of the pulled-back volume form along the divisor of rho."""
    return sum(rho) - 1


def divisor_table(f: Fan, I: MonIdeal) -> list[DivisorRow]:
    rees = {fc.normal for fc in compact_facets(I).facets}
    return [DivisorRow(rho, ideal_order(rho, I), ord_dz(rho), rho in rees) for rho in f.rays]


def consecutive_determinants(f: Fan) -> list[int]:
    if f.dim != 2:
        raise UnsupportedDimension("consecutive determinants only make sense for n = 2")
    return [u[0] * v[1] - u[1] * v[0] for u, v in zip(f.rays, f.rays[1:])]
