"""Exact rational polyhedral cones at desk scale.

Cones are given by equality rows and inequality rows (a . x <= 0); extreme
rays are enumerated by brute-force over (n-1)-rank active sets, which is
exact and fast for the ambient dimensions this package meets (<= ~8).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from quiverforge import linalg


class ConeError(ValueError):
    pass


@dataclass
class Facet:
    rays: list  # integer ray tuples
    tight: list  # indices into the cone's inequality list


@dataclass
class PointedCone:
    ambient: int
    equalities: list
    inequalities: list
    rays: list  # integer tuples, gcd 1, cone-side orientation
    dim: int
    facets: list = field(default_factory=list)


def _dot(row, vec):
    return sum(Fraction(a) * b for a, b in zip(row, vec))


def cone_from_halfspaces(equalities, inequalities):
    """Extreme rays and facets of {x : Ex = 0, Ax <= 0}; cone must be pointed."""
    eq = [tuple(Fraction(x) for x in row) for row in equalities]
    ineq = [tuple(Fraction(x) for x in row) for row in inequalities]
    if not eq and not ineq:
        raise ConeError("no constraints given")
    n = len((eq or ineq)[0])
    all_rows = [list(r) for r in eq + ineq]
    lineality = linalg.nullspace(all_rows, ncols=n)
    if lineality:
        raise ConeError("cone has nontrivial lineality; unsupported here")
    rank_eq = linalg.rank([list(r) for r in eq]) if eq else 0
    needed = (n - 1) - rank_eq
    if needed < 0:
        raise ConeError("equality system leaves no ray directions")
    rays = {}
    for subset in combinations(range(len(ineq)), needed):
        rows = [list(r) for r in eq] + [list(ineq[i]) for i in subset]
        kernel = linalg.nullspace(rows, ncols=n)
        if len(kernel) != 1:
            continue
        v = kernel[0]
        vals = [_dot(row, v) for row in ineq]
        if all(x <= 0 for x in vals):
            ray = tuple(linalg.clear_denominators(v))
        elif all(x >= 0 for x in vals):
            ray = tuple(-x for x in linalg.clear_denominators(v))
        else:
            continue
        rays[ray] = True
    ray_list = sorted(rays)
    dim = linalg.rank([list(r) for r in ray_list]) if ray_list else 0
    facets = _collect_facets(ray_list, ineq, dim)
    return PointedCone(
        ambient=n,
        equalities=[tuple(r) for r in eq],
        inequalities=[tuple(r) for r in ineq],
        rays=ray_list,
        dim=dim,
        facets=facets,
    )


def _collect_facets(rays, ineq, dim):
    """Positive-dimensional facets, grouped by the rays they contain."""
    if dim < 2:
        return []
    groups = {}
    for idx, row in enumerate(ineq):
        on = tuple(r for r in rays if _dot(row, r) == 0)
        if not on:
            continue
        if linalg.rank([list(r) for r in on]) != dim - 1:
            continue
        groups.setdefault(on, []).append(idx)
    facets = [Facet(rays=list(on), tight=tight) for on, tight in sorted(groups.items())]
    return facets


def facet_relint_point(cone, facet):
    """An integer point in the relative interior of a facet (sum of its rays)."""
    if not facet.rays:
        raise ConeError("degenerate facet (no rays)")
    if set(facet.rays) == set(cone.rays):
        raise ConeError("facet equals the whole cone; not a proper face")
    point = [sum(r[i] for r in facet.rays) for i in range(cone.ambient)]
    point = linalg.clear_denominators(point)
    tight_set = set(facet.tight)
    for idx, row in enumerate(cone.inequalities):
        value = _dot(row, point)
        if idx in tight_set:
            if value != 0:
                raise ConeError("relint candidate misses a tight constraint")
        elif value >= 0:
            raise ConeError("relint candidate violates or saturates a non-facet constraint")
    for row in cone.equalities:
        if _dot(row, point) != 0:
            raise ConeError("relint candidate leaves the supporting hyperplane")
    return tuple(point)
