"""Ideals, Buchberger's algorithm, normal forms, colength.

The completion uses the normal pair-selection strategy (minimal lcm degree
first) plus Buchberger's coprimality criterion.  The reduced basis is unique
per order, so the output is canonical regardless of pair scheduling.
"""

from __future__ import annotations

import math
from itertools import product

from .poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    MultiPoly,
    RingMismatchError,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    reduce_mod,
)

INFINITE = math.inf


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    lm_f, lc_f = f.leading(order)
    lm_g, lc_g = g.leading(order)
    lcm = mono_lcm(lm_f, lm_g)
    fld = f.ring.field
    mf = MultiPoly(f.ring, {mono_div(lcm, lm_f): fld.inv(lc_f)})
    mg = MultiPoly(g.ring, {mono_div(lcm, lm_g): fld.inv(lc_g)})
    return mf * f - mg * g


def reduce_groebner_basis(basis, order: MonomialOrder):
    """Minimalize and tail-reduce a Groebner basis; monic, sorted by leading
    monomial (descending)."""
    basis = [g for g in basis if not g.is_zero]
    # minimalize: drop elements whose leading monomial is divisible by another's
    minimal = []
    lms = [g.leading(order)[0] for g in basis]
    for i, g in enumerate(basis):
        if any(
            j != i
            and mono_divides(lms[j], lms[i])
            and (lms[j] != lms[i] or j < i)
            for j in range(len(basis))
        ):
            continue
        minimal.append(g)
    # fully reduce each element against the others
    reduced = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1 :]
        r = reduce_mod(g, rest, order) if rest else g
        if not r.is_zero:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return reduced


def buchberger_gb(gens, order: MonomialOrder = GREVLEX):
    """Reduced Groebner basis of the ideal generated by gens."""
    G = [g.monic(order) for g in gens if not g.is_zero]
    if not G:
        return []
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def pair_rank(pair):
        i, j = pair
        lcm = mono_lcm(G[i].leading(order)[0], G[j].leading(order)[0])
        return (sum(lcm), order.key(lcm))

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.remove((i, j))
        lm_i = G[i].leading(order)[0]
        lm_j = G[j].leading(order)[0]
        if mono_mul(lm_i, lm_j) == mono_lcm(lm_i, lm_j):
            continue  # coprime leading monomials: S-poly reduces to zero
        r = reduce_mod(s_polynomial(G[i], G[j], order), G, order)
        if not r.is_zero:
            G.append(r.monic(order))
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k))
    return reduce_groebner_basis(G, order)


class Ideal:
    """An ideal with a lazily cached reduced Groebner basis.

    The cache is populate-once; a concurrent duplicate computation is benign
    because the reduced basis is unique.
    """

    def __init__(self, generators, order: MonomialOrder = GREVLEX):
        generators = list(generators)
        if not generators:
            raise ValueError("ideal needs at least one generator (use the zero poly)")
        ring = generators[0].ring
        for g in generators[1:]:
            if g.ring != ring:
                raise RingMismatchError("generators in different rings")
        self.ring = ring
        self.generators = generators
        self.order = order
        self._gb = None

    @property
    def groebner_basis(self):
        if self._gb is None:
            self._gb = buchberger_gb(self.generators, self.order)
        return self._gb

    def with_order(self, order: MonomialOrder) -> "Ideal":
        if order == self.order:
            return self
        return Ideal(self.generators, order)

    def is_zero(self) -> bool:
        return not self.groebner_basis

    def is_proper(self) -> bool:
        gb = self.groebner_basis
        return not any(g.is_constant() for g in gb)

    def contains(self, p: MultiPoly) -> bool:
        return normal_form(p, self).is_zero

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"


def normal_form(p: MultiPoly, ideal: Ideal) -> MultiPoly:
    """Unique remainder of p modulo the reduced Groebner basis."""
    gb = ideal.groebner_basis
    if not gb:
        return p
    return reduce_mod(p, gb, ideal.order)


def ideals_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise RingMismatchError("ideals in different rings")
    if a.order == b.order:
        return a.groebner_basis == b.groebner_basis
    return all(b.contains(g) for g in a.generators) and all(
        a.contains(g) for g in b.generators
    )


def colength(ideal: Ideal):
    """Dimension of ring/ideal as a k-vector space; INFINITE if unbounded."""
    gb = ideal.groebner_basis
    if not gb:
        return 0 if ideal.ring.nvars == 0 else INFINITE
    if any(g.is_constant() for g in gb):
        return 0
    n = ideal.ring.nvars
    lms = [g.leading(ideal.order)[0] for g in gb]
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lms if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for mono in product(*(range(b) for b in bounds)):
        if not any(mono_divides(lm, mono) for lm in lms):
            count += 1
    return count


def is_point_ideal(ideal: Ideal):
    """Coordinates (alpha, beta) when the reduced lex basis is
    {x - alpha, y - beta}; None otherwise."""
    if ideal.ring.nvars != 2:
        raise ValueError("point recognition needs a two-variable ring")
    gb = ideal.with_order(LEX).groebner_basis
    if len(gb) != 2:
        return None
    coords = [None, None]
    for g in gb:
        if g.degree_in(g.ring.variables[0]) + g.degree_in(g.ring.variables[1]) != 1:
            return None
        for i, name in enumerate(g.ring.variables):
            if g.degree_in(name) == 1:
                lead = g.coefficient_in(name, 1)
                rest = g.coefficient_in(name, 0)
                if not lead.is_constant() or not rest.is_constant():
                    return None
                if coords[i] is not None:
                    return None
                fld = g.ring.field
                coords[i] = fld.neg(fld.mul(rest.constant_value(),
                                            fld.inv(lead.constant_value())))
    if any(c is None for c in coords):
        return None
    return tuple(coords)
