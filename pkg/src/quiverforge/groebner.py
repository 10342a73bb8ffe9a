"""Multivariate polynomials over Q and a capped Buchberger algorithm.

Only what the stability decider needs: graded-reverse-lex order, S-polynomial
reduction, and a proper-ideal test with explicit resource caps.  Exceeding a
cap raises :class:`BudgetExceeded`; callers report UNDECIDED, never a guess.
"""

from dataclasses import dataclass
from fractions import Fraction


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit the configured size or degree cap."""


@dataclass(frozen=True)
class GroebnerCaps:
    max_basis: int = 20000
    max_degree: int = 40


# A polynomial in n variables is a dict: exponent tuple -> nonzero Fraction.


def grevlex_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def leading_monomial(poly):
    return max(poly, key=grevlex_key)


def poly_const(value, nvars):
    value = Fraction(value)
    return {} if value == 0 else {(0,) * nvars: value}


def poly_var(index, nvars):
    mono = tuple(1 if i == index else 0 for i in range(nvars))
    return {mono: Fraction(1)}


def poly_add(a, b):
    out = dict(a)
    for mono, c in b.items():
        s = out.get(mono, 0) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return out


def poly_neg(a):
    return {m: -c for m, c in a.items()}


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_scale(a, c):
    c = Fraction(c)
    return {} if c == 0 else {m: c * x for m, x in a.items()}


def poly_mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(mono, 0) + ca * cb
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def term_mul(poly, mono, coeff):
    return {tuple(x + y for x, y in zip(m, mono)): coeff * c for m, c in poly.items()}


def poly_degree(poly):
    return max((sum(m) for m in poly), default=-1)


def is_constant(poly):
    return len(poly) == 1 and not any(next(iter(poly)))


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def reduce_poly(poly, basis, caps):
    """Full remainder of poly modulo the basis (multivariate division)."""
    remainder = {}
    work = dict(poly)
    lead = [(leading_monomial(g), g) for g in basis]
    while work:
        mono = leading_monomial(work)
        if sum(mono) > caps.max_degree:
            raise BudgetExceeded(f"degree cap {caps.max_degree} exceeded")
        coeff = work[mono]
        for lm, g in lead:
            if monomial_divides(lm, mono):
                factor = monomial_div(mono, lm)
                scale = coeff / g[lm]
                work = poly_sub(work, term_mul(g, factor, scale))
                break
        else:
            remainder[mono] = coeff
            del work[mono]
    return remainder


def s_polynomial(f, g):
    lf, lg = leading_monomial(f), leading_monomial(g)
    lcm = monomial_lcm(lf, lg)
    left = term_mul(f, monomial_div(lcm, lf), Fraction(1) / f[lf])
    right = term_mul(g, monomial_div(lcm, lg), Fraction(1) / g[lg])
    return poly_sub(left, right)


def buchberger(generators, caps=GroebnerCaps()):
    """Groebner basis (grevlex) of the ideal generated by ``generators``.

    Monic, inter-reduced leading terms are not guaranteed; callers should
    only rely on the ideal-membership facts below.
    """
    basis = [dict(g) for g in generators if g]
    if not basis:
        return []
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        pairs.sort(
            key=lambda ij: grevlex_key(
                monomial_lcm(
                    leading_monomial(basis[ij[0]]), leading_monomial(basis[ij[1]])
                )
            )
        )
        i, j = pairs.pop(0)
        li, lj = leading_monomial(basis[i]), leading_monomial(basis[j])
        if monomial_lcm(li, lj) == tuple(x + y for x, y in zip(li, lj)):
            continue  # coprime leading monomials: S-poly reduces to zero
        rem = reduce_poly(s_polynomial(basis[i], basis[j]), basis, caps)
        if not rem:
            continue
        if is_constant(rem):
            return [poly_const(1, len(next(iter(rem))))]
        basis.append(rem)
        if len(basis) > caps.max_basis:
            raise BudgetExceeded(f"basis cap {caps.max_basis} exceeded")
        k = len(basis) - 1
        pairs.extend((i, k) for i in range(k))
    return basis


def ideal_is_proper(generators, caps=GroebnerCaps()):
    """True iff 1 is not in the ideal (affine variety nonempty over the closure)."""
    for g in generators:
        if g and is_constant(g):
            return False
    basis = buchberger(generators, caps)
    return not any(is_constant(g) for g in basis)
