"""Brute-force reference computations, deliberately independent of the library code paths."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def le(a, b):
    return all(x <= y for x, y in zip(a, b))


def member(gens, a):
    return any(le(g, a) for g in gens)


def box(upper):
    return itertools.product(*(range(u + 1) for u in upper))


def minimal(points):
    pts = set(map(tuple, points))
    return sorted(p for p in pts if not any(q != p and le(q, p) for q in pts))


def ideal_in_box(gens, upper):
    return {a for a in box(upper) if member(gens, a)}


def sums_of_k(gens, k):
    """Exponents of all products of k generators (with repetition)."""
    return {tuple(map(sum, zip(*combo))) for combo in itertools.combinations_with_replacement(gens, k)}


def in_newton_polyhedron(gens, a, max_k=12):
    """a lies in NP iff k*a dominates a sum of k generators for some k."""
    for k in range(1, max_k + 1):
        ka = tuple(k * x for x in a)
        if any(le(s, ka) for s in sums_of_k(gens, k)):
            return True
    return False


def closure_bruteforce(gens, max_k=12):
    upper = [max(col) for col in zip(*gens)]
    return minimal(a for a in box(upper) if in_newton_polyhedron(gens, a, max_k))


def lower_hull_normals_2d(gens):
    """Primitive inward normals of the compact edges of NP in two variables.

    Andrew's monotone chain over the generator points; the compact edges
    are the hull edges with strictly negative slope.
    """
    pts = sorted(set(map(tuple, gens)))
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    out = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if y2 < y1:
            nx, ny = y1 - y2, x2 - x1
            g = math.gcd(nx, ny)
            out.append(((nx // g, ny // g), (nx // g) * x1 + (ny // g) * y1))
    return sorted(out)


def antichain_ideals_2d(bound):
    """All antichains in [0,bound]^2 containing pure powers of x and y, by backtracking."""
    pts = [p for p in box((bound, bound)) if p != (0, 0)]
    found = []

    def rec(i, chosen):
        if i == len(pts):
            has_x = any(p[1] == 0 for p in chosen)
            has_y = any(p[0] == 0 for p in chosen)
            if has_x and has_y:
                found.append(tuple(sorted(chosen)))
            return
        rec(i + 1, chosen)
        p = pts[i]
        if all(not le(q, p) and not le(p, q) for q in chosen):
            rec(i + 1, chosen + [p])

    rec(0, [])
    return found


def rational_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def hilbert_basis_2d(u, v):
    """Irreducible lattice points of the cone spanned by u and v (u before v)."""
    d = u[0] * v[1] - u[1] * v[0]

    def coords(p):
        # p = lam*u + mu*v
        lam = Fraction(p[0] * v[1] - p[1] * v[0], d)
        mu = Fraction(u[0] * p[1] - u[1] * p[0], d)
        return lam, mu

    hi = [u[i] + v[i] for i in range(2)]
    pts = []
    for p in itertools.product(range(hi[0] + 1), range(hi[1] + 1)):
        if p == (0, 0):
            continue
        lam, mu = coords(p)
        if 0 <= lam <= 1 and 0 <= mu <= 1:
            pts.append(p)

    def in_cone(p):
        lam, mu = coords(p)
        return lam >= 0 and mu >= 0

    basis = []
    for p in pts:
        if not any(q != p and in_cone((p[0] - q[0], p[1] - q[1])) for q in pts):
            basis.append(p)
    return basis
