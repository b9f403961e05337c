"""Labeled simplicial complexes and their cellular free complexes.

A face is the sorted tuple of the generator indices it spans; the empty tuple
is the empty face, sitting in homological degree 0. A face with k vertices
sits in degree k and is labeled by the lcm of its vertex labels. The
differential sends e_tau to the sum over facets tau' of
sign(tau', tau) * z^(m_tau - m_tau') e_tau'.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ComplexTooLarge, DimensionMismatch, InvariantViolation, NotAResolution, ZeroIdealError
from .ideal import Exponent, MonIdeal, as_exponent, divides, lcm, pure_powers, sub
from .linalg import rank

log = logging.getLogger(__name__)

Face = tuple[int, ...]
# (sign, exponent) of a signed monomial matrix entry
Entry = tuple[int, Exponent]

TAYLOR_CAP = 20


@dataclass(frozen=True)
class LabeledComplex:
    dim: int
    generators: tuple[Exponent, ...]
    faces: tuple[tuple[Face, ...], ...]
    boundary: Mapping[Face, tuple[tuple[Face, int], ...]] = field(repr=False, compare=False)

    def label(self, face: Face) -> Exponent:
        if not face:
            return (0,) * self.dim
        return lcm(*(self.generators[i] for i in face))

    @property
    def top_degree(self) -> int:
        return len(self.faces) - 1

    def all_faces(self) -> list[Face]:
        return [f for level in self.faces for f in level]

    def __len__(self) -> int:
        return sum(len(level) for level in self.faces)


def build_complex(n: int, generators: Sequence[Sequence[int]], faces: Iterable[Face]) -> LabeledComplex:
    """Assemble a simplicial labeled complex with the alternating sign convention.

    The empty face is always added. Faces must be closed under taking facets.
    """
    gens = tuple(as_exponent(g) for g in generators)
    for g in gens:
        if len(g) != n:
            raise DimensionMismatch(f"generator {g} does not have length {n}")
    present = {()} | {tuple(sorted(f)) for f in faces}
    top = max(len(f) for f in present)
    levels: list[list[Face]] = [[] for _ in range(top + 1)]
    for f in sorted(present):
        levels[len(f)].append(f)
    boundary: dict[Face, tuple[tuple[Face, int], ...]] = {}
    for f in present:
        if not f:
            continue
        entries = []
        for j in range(len(f)):
            facet = f[:j] + f[j + 1:]
            if facet not in present:
                raise ValueError(f"face {f} is missing its facet {facet}")
            entries.append((facet, -1 if j % 2 else 1))
        boundary[f] = tuple(entries)
    return LabeledComplex(n, gens, tuple(tuple(level) for level in levels), boundary)


def _check_ideal(I: MonIdeal, cap: int) -> None:
    if I.is_zero:
        raise ZeroIdealError("a complex needs at least one generator")
    if len(I.gens) > cap:
        raise ComplexTooLarge(f"{len(I.gens)} generators exceeds the Taylor cap of {cap}")


def taylor_complex(I: MonIdeal, cap: int = TAYLOR_CAP) -> LabeledComplex:
    """The full simplex on the minimal generators of I."""
    _check_ideal(I, cap)
    r = len(I.gens)
    faces = [c for k in range(1, r + 1) for c in itertools.combinations(range(r), k)]
    return build_complex(I.dim, I.gens, faces)


def scarf_complex(I: MonIdeal, cap: int = TAYLOR_CAP) -> LabeledComplex:
    """Taylor faces whose lcm label is carried by no other Taylor face."""
    _check_ideal(I, cap)
    r = len(I.gens)
    labels = {
        c: lcm(*(I.gens[i] for i in c))
        for k in range(1, r + 1)
        for c in itertools.combinations(range(r), k)
    }
    counts = Counter(labels.values())
    faces = [c for c, b in labels.items() if counts[b] == 1]
    kept = set(faces) | {()}
    for f in faces:
        for j in range(len(f)):
            if f[:j] + f[j + 1:] not in kept:
                raise InvariantViolation(f"Scarf face {f} lost its facet")
    return build_complex(I.dim, I.gens, faces)


def koszul_complex(beta: Sequence[int]) -> LabeledComplex:
    """Koszul complex of (z_1^b_1, ..., z_n^b_n), i.e. the Taylor complex of m^beta."""
    beta = as_exponent(beta)
    if not beta or min(beta) < 1:
        raise ValueError("Koszul exponents must all be at least 1")
    return taylor_complex(pure_powers(beta))


def remove_faces(C: LabeledComplex, doomed: Iterable[Face]) -> LabeledComplex:
    """Drop the given faces together with every face containing one of them."""
    doomed = [tuple(sorted(d)) for d in doomed]
    keep = [f for f in C.all_faces() if f and not any(set(d) <= set(f) for d in doomed)]
    return build_complex(C.dim, C.generators, keep)


def boundary_matrix(C: LabeledComplex, k: int) -> list[list[Entry | None]]:
    """Signed monomial matrix of the k-th differential.

    Rows are indexed by C.faces[k-1] and columns by C.faces[k]; a zero entry is
    None.
    """
    if not 1 <= k <= C.top_degree:
        raise ValueError(f"degree {k} outside 1..{C.top_degree}")
    rows = {f: i for i, f in enumerate(C.faces[k - 1])}
    mat: list[list[Entry | None]] = [[None] * len(C.faces[k]) for _ in rows]
    for j, tau in enumerate(C.faces[k]):
        m_tau = C.label(tau)
        for facet, sign in C.boundary[tau]:
            mat[rows[facet]][j] = (sign, sub(m_tau, C.label(facet)))
    return mat


def compose_zero(C: LabeledComplex) -> bool:
    """Exact check that consecutive differentials compose to zero."""
    for k in range(1, C.top_degree):
        for tau in C.faces[k + 1]:
            m_tau = C.label(tau)
            acc: dict[Face, Counter] = defaultdict(Counter)
            for mid, s1 in C.boundary[tau]:
                m_mid = C.label(mid)
                for low, s2 in C.boundary[mid]:
                    mono = tuple(
                        a + b for a, b in zip(sub(m_tau, m_mid), sub(m_mid, C.label(low)))
                    )
                    acc[low][mono] += s1 * s2
            if any(c for poly in acc.values() for c in poly.values()):
                return False
    return True


def lcm_lattice(generators: Iterable[Sequence[int]]) -> list[Exponent]:
    """All lcms of nonempty subsets of the generators, sorted."""
    seen: set[Exponent] = set()
    for g in generators:
        g = tuple(g)
        seen |= {lcm(g, b) for b in seen}
        seen.add(g)
    return sorted(seen)


def _reduced_homology_vanishes(C: LabeledComplex, faces: set[Face]) -> bool:
    levels: dict[int, list[Face]] = defaultdict(list)
    for f in sorted(faces):
        levels[len(f)].append(f)
    top = max(levels)
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        rows = {f: i for i, f in enumerate(levels[k - 1])}
        mat = [[0] * len(levels[k]) for _ in rows]
        for j, tau in enumerate(levels[k]):
            for facet, sign in C.boundary[tau]:
                mat[rows[facet]][j] = sign
        ranks[k] = rank(mat)
    return all(len(levels[k]) == ranks[k] + ranks[k + 1] for k in range(top + 1))


def acyclicity_failures(C: LabeledComplex) -> list[Exponent]:
    """Labels b whose subcomplex of faces labeled <= b has nonzero reduced homology."""
    all_faces = C.all_faces()
    bad = []
    for b in lcm_lattice(C.generators):
        below = {f for f in all_faces if divides(C.label(f), b)}
        if not _reduced_homology_vanishes(C, below):
            bad.append(b)
    return bad


def is_cellular_resolution(C: LabeledComplex, I: MonIdeal) -> bool:
    """Bayer-Sturmfels acyclicity over Q on every label of the lcm lattice."""
    if C.dim != I.dim or set(C.generators) != set(I.gens) or len(C.faces) < 2 \
            or len(C.faces[1]) != len(I.gens):
        raise NotAResolution("complex vertices do not match the ideal's minimal generators")
    if not compose_zero(C):
        return False
    failures = acyclicity_failures(C)
    if failures:
        log.debug("acyclicity fails at labels %s", failures)
    return not failures


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89)


def prime_points(n: int, count: int = 3) -> list[tuple[int, ...]]:
    """``count`` evaluation points, each with distinct prime coordinates."""
    if n * count > len(_PRIMES):
        raise ValueError("not enough tabulated primes for this dimension")
    return [_PRIMES[i * n:(i + 1) * n] for i in range(count)]


def evaluate(mat: list[list[Entry | None]], point: Sequence[int]) -> list[list[int]]:
    out = []
    for row in mat:
        vals = []
        for e in row:
            if e is None:
                vals.append(0)
            else:
                sign, exp = e
                v = sign
                for p, x in zip(point, exp):
                    v *= p ** x
                vals.append(v)
        out.append(vals)
    return out


@dataclass(frozen=True)
class RankProfile:
    module_ranks: tuple[int, ...]  # |K_0|, ..., |K_N|
    ranks: tuple[int, ...]  # rank of phi_1, ..., phi_N
    rank_exact: bool
    stable: bool

    def rank(self, k: int) -> int:
        return self.ranks[k - 1] if 1 <= k <= len(self.ranks) else 0


def rank_profile(C: LabeledComplex, points: Sequence[Sequence[int]] | None = None) -> RankProfile:
    """Ranks of the differentials, by exact evaluation at prime points.

    The reported rank is the maximum over the points (the generic rank is
    never below a specialised one); ``stable`` records whether all points
    agreed.
    """
    points = list(points) if points is not None else prime_points(C.dim)
    per_point = []
    for pt in points:
        per_point.append(tuple(
            rank(evaluate(boundary_matrix(C, k), pt)) for k in range(1, C.top_degree + 1)
        ))
    ranks = tuple(max(col) for col in zip(*per_point)) if per_point[0] else ()
    stable = len(set(per_point)) == 1
    sizes = tuple(len(level) for level in C.faces)
    padded = ranks + (0,)
    exact = all(padded[k - 1] + padded[k] == sizes[k] for k in range(1, len(sizes)))
    return RankProfile(sizes, ranks, exact, stable)
