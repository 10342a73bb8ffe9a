"""Generic subdimension vectors, cones of effective weights, facet pairs."""

from dataclasses import dataclass
from itertools import product

from quiverforge import cones
from quiverforge.core import DimVector
from quiverforge.forms import Weight, euler_form, tits_form
from quiverforge.stability import subrep_exists


class GenericRepError(ValueError):
    pass


@dataclass
class EffCone:
    algebra: object
    d: DimVector
    cone: cones.PointedCone
    generic_subdims: list  # DimVectors inducing the inequalities, same order

    @property
    def dim(self):
        return self.cone.dim

    @property
    def rays(self):
        return [Weight.from_tuple(r, self.algebra.quiver.vertex_order) for r in self.cone.rays]

    @property
    def facets(self):
        return self.cone.facets


@dataclass
class StablePair:
    h1: DimVector
    h2: DimVector
    n1: int
    n2: int
    l: int


def generic_subdims(algebra, d):
    """Subdimension vectors of a generic d-dimensional module (hereditary A).

    Standard recursion: e embeds generically into d iff <e', d - e> >= 0
    for every generic subdimension vector e' of e.  Memoized per call.
    """
    if not algebra.hereditary:
        raise GenericRepError("generic subdimension recursion needs a hereditary algebra")
    order = algebra.quiver.vertex_order
    memo = {}

    def pairing(a, b):
        return euler_form(
            algebra, DimVector.from_tuple(a, order), DimVector.from_tuple(b, order)
        )

    def gsub(dt):
        if dt in memo:
            return memo[dt]
        result = []
        for et in product(*[range(x + 1) for x in dt]):
            if et == dt or not any(et):
                result.append(et)
                continue
            diff = tuple(x - y for x, y in zip(dt, et))
            if all(pairing(ep, diff) >= 0 for ep in gsub(et)):
                result.append(et)
        memo[dt] = result
        return result

    return [DimVector.from_tuple(t, order) for t in gsub(d.as_tuple(order))]


def _witness_subdims(m, seed=0):
    """Subdimension vectors admitting a subrep of an explicit witness module."""
    result = []
    undecided = []
    order = m.algebra.quiver.vertex_order
    for combo in product(*[range(m.dim[v] + 1) for v in order]):
        e = DimVector.from_tuple(combo, order)
        res = subrep_exists(m, e, seed=seed)
        if res.undecided:
            undecided.append(e)
        elif res.exists:
            result.append(e)
    if undecided:
        raise GenericRepError(f"witness subrep scan undecided at {undecided}")
    return result


def effective_cone(algebra, d, witness=None, seed=0):
    """Eff(A, d) = {theta : theta(d) = 0, theta(e) <= 0 for generic subdims e}.

    Hereditary algebras use the symbolic recursion; otherwise an explicit
    generic witness module of dimension d must be supplied, and its
    subrepresentation dimension vectors induce the inequalities.
    """
    order = algebra.quiver.vertex_order
    if witness is not None:
        if witness.dim != d:
            raise GenericRepError("witness dimension vector does not match d")
        if not witness.validate().ok:
            raise GenericRepError("witness module fails validation")
        subdims = _witness_subdims(witness, seed=seed)
    elif algebra.hereditary:
        subdims = generic_subdims(algebra, d)
    else:
        raise GenericRepError("non-hereditary algebra needs an explicit generic witness")
    active = [e for e in subdims if not e.is_zero() and e != d]
    equalities = [d.as_tuple(order)]
    inequalities = [e.as_tuple(order) for e in active]
    cone = cones.cone_from_halfspaces(equalities, inequalities)
    return EffCone(algebra=algebra, d=d, cone=cone, generic_subdims=active)


def facet_interior_weight(effcone, facet):
    """Integer weight in the relative interior of a facet of Eff(A, d)."""
    point = cones.facet_relint_point(effcone.cone, facet)
    return Weight.from_tuple(point, effcone.algebra.quiver.vertex_order)


def facet_stable_pair(algebra, h, theta0, all_pairs=False):
    """Indivisible pair (h1, h2) with h = n1 h1 + n2 h2 on a facet's wall.

    Scans lexicographically for vanishing theta0, real-root Tits values and
    nonpositive cross pairings, then verifies the arithmetic identities
    2 n1 = n2 l, 2 n2 = n1 l, n1^2 + n2^2 = l n1 n2, which together with h
    indivisible force n1 = n2 = 1 and l = 2.
    """
    order = algebra.quiver.vertex_order
    ht = h.as_tuple(order)
    pairs = []
    seen = set()
    for combo in product(*[range(x + 1) for x in ht]):
        if not any(combo) or combo == ht:
            continue
        h1 = DimVector.from_tuple(combo, order)
        if not h1.is_indivisible():
            continue
        if theta0(h1) != 0 or tits_form(algebra, h1) != 1:
            continue
        n1 = 1
        while True:
            scaled = h1.scale(n1)
            if not scaled <= h or scaled == h:
                break
            rem = h - scaled
            n2 = rem.content()
            h2 = DimVector({v: x // n2 for v, x in rem.entries.items()})
            n1 += 1
            if h2 == h1 or theta0(h2) != 0 or tits_form(algebra, h2) != 1:
                continue
            f12 = euler_form(algebra, h1, h2)
            f21 = euler_form(algebra, h2, h1)
            if f12 > 0 or f21 > 0:
                continue
            l = -f12 - f21
            m1, m2 = n1 - 1, n2
            if 2 * m1 != m2 * l or 2 * m2 != m1 * l or m1 * m1 + m2 * m2 != l * m1 * m2:
                continue
            key = frozenset([h1.as_tuple(order), h2.as_tuple(order)])
            if key in seen:
                continue
            seen.add(key)
            pairs.append(StablePair(h1=h1, h2=h2, n1=m1, n2=m2, l=l))
    if not pairs:
        raise GenericRepError(
            "no facet stable pair found; algebra outside supported class or "
            "theta0 not facet-interior"
        )
    return pairs if all_pairs else pairs[0]
