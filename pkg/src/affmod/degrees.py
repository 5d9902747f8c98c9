"""Weighted degree functions, their fraction-field valuations, and the
exhaustive weight-family non-negativity probe.

A weight vector assigns an integer to each base-ring variable; the degree of
a polynomial is the maximal weight over its monomials (-inf for 0), which is
multiplicative and extends to fractions by deg(p/q) = deg p - deg q.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .poly import MultiPoly, Ring, ZeroPolynomialError

NEG_INF = float("-inf")


@dataclass(frozen=True)
class WeightDegree:
    """Integer weight per variable of the base ring."""

    weights: tuple

    def is_trivial(self) -> bool:
        return all(w == 0 for w in self.weights)


def weight_degree(p: MultiPoly, w: WeightDegree):
    """Max weight over the monomials of p; -inf for the zero polynomial."""
    if len(w.weights) != p.ring.nvars:
        raise ValueError("weight vector length does not match ring")
    if p.is_zero:
        return NEG_INF
    return max(sum(wi * e for wi, e in zip(w.weights, m)) for m in p.terms)


@dataclass(frozen=True)
class LocalizedFraction:
    """numerator / product of inverted elements (with multiplicities).

    Models elements of a localization like A_t; the denominator is a monomial
    in the declared inverted elements, stored as (element, multiplicity)
    pairs.
    """

    numerator: MultiPoly
    inverted: tuple = ()  # pairs (MultiPoly, positive int)

    def __post_init__(self):
        for elt, mult in self.inverted:
            if elt.is_zero:
                raise ZeroPolynomialError("inverted element is zero")
            if mult < 1:
                raise ValueError("multiplicity must be positive")

    def denominator(self) -> MultiPoly:
        ring = self.numerator.ring
        den = ring.one()
        for elt, mult in self.inverted:
            den = den * elt**mult
        return den

    def equal(self, other: "LocalizedFraction") -> bool:
        """Cross-multiplied equality of fractions."""
        return self.numerator * other.denominator() == other.numerator * self.denominator()


def fraction(numerator: MultiPoly, *inverted) -> LocalizedFraction:
    return LocalizedFraction(numerator, tuple((e, 1) for e in inverted))


def valuation_degree(f: LocalizedFraction, w: WeightDegree):
    """deg(num) - sum of deg(inverted) with multiplicity."""
    d = weight_degree(f.numerator, w)
    if d == NEG_INF:
        return NEG_INF
    for elt, mult in f.inverted:
        d -= mult * weight_degree(elt, w)
    return d


# -- the non-negativity probe ----------------------------------------------


@dataclass(frozen=True)
class ProbeResult:
    verdict: str  # "trivial-ok" | "witness" | "no-witness"
    witness: str = ""
    degree: object = None


DEFAULT_PROBE = ("x", "y", "u", "v")


def probe_elements(n: int, ring: Ring, names=DEFAULT_PROBE) -> dict:
    """The probe set on B_n: x, y, and the adjoined fractions
    u = (x-1)/(x^n*y-1) and v = (y-1)/(x^n*y-1)."""
    x, y = ring.var("x"), ring.var("y")
    t = x**n * y - 1
    available = {
        "x": fraction(x),
        "y": fraction(y),
        "u": fraction(x - 1, t),
        "v": fraction(y - 1, t),
    }
    return {name: available[name] for name in names}


def probe_nonnegativity(n: int, w: WeightDegree, names=DEFAULT_PROBE) -> ProbeResult:
    """Find a probe element of negative degree under w, if any.

    Every nonzero weight admits a witness (the finitary face of the
    degree-rigidity statement); the restricted probe without v misses the
    weight (1, 0) at n = 1, which is why "no-witness" is representable.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if w.is_trivial():
        return ProbeResult("trivial-ok")
    ring = Ring(("x", "y"))
    for name, elt in probe_elements(n, ring, names).items():
        d = valuation_degree(elt, w)
        if d < 0:
            return ProbeResult("witness", witness=name, degree=d)
    return ProbeResult("no-witness")


def exhaustive_probe(n_values, box: int, names=DEFAULT_PROBE) -> list:
    """Run the probe over every nonzero weight pair in [-box, box]^2.

    Returns a list of dicts {n, weight, verdict, witness, degree}.
    """
    results = []
    for n in n_values:
        for a, b in product(range(-box, box + 1), repeat=2):
            if (a, b) == (0, 0):
                continue
            r = probe_nonnegativity(n, WeightDegree((a, b)), names)
            results.append(
                {
                    "n": n,
                    "weight": [a, b],
                    "verdict": r.verdict,
                    "witness": r.witness,
                    "degree": r.degree,
                }
            )
    return results


# -- filtration properties on samples --------------------------------------


@dataclass
class FiltrationReport:
    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def check_F0_properties(w: WeightDegree, samples) -> FiltrationReport:
    """Sampled subring / ideal / factorial-closure checks for the degree-0
    filtration level F_0 = {deg <= 0}.

    samples is a list of (f, g) polynomial pairs.  The factorial-closure
    check only fires when both factors have non-negative degree (it is a
    statement about non-negative degree functions).
    """
    violations = []
    checked = 0
    for f, g in samples:
        checked += 1
        df, dg = weight_degree(f, w), weight_degree(g, w)
        # (a) F_0 is a subring: closed under + and *
        if df <= 0 and dg <= 0:
            if weight_degree(f + g, w) > 0:
                violations.append(("subring-add", f, g))
            if weight_degree(f * g, w) > 0:
                violations.append(("subring-mul", f, g))
        # (b) F_d is an ideal of F_0 for d <= 0
        if df <= 0 and dg <= 0:
            d = min(df, dg)
            if weight_degree(f * g, w) > d:
                violations.append(("ideal", f, g))
        # (c) factorial closure for non-negative degrees
        if (
            not f.is_zero
            and not g.is_zero
            and df >= 0
            and dg >= 0
            and weight_degree(f * g, w) <= 0
        ):
            if df > 0 or dg > 0:
                violations.append(("factorially-closed", f, g))
    return FiltrationReport(checked, violations)


def negative_degree_implies_y_divisible(m: int, h: LocalizedFraction) -> bool:
    """For h in the localization at t = x^m*y - 1 with weights (1, -m):
    negative degree forces the numerator into the ideal (y).

    Returns True when the implication holds (vacuously when deg h >= 0).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    ring = h.numerator.ring
    if ring.variables != ("x", "y"):
        raise ValueError("h must live over the base ring k[x, y]")
    x, y = ring.var("x"), ring.var("y")
    t = x**m * y - 1
    for elt, _ in h.inverted:
        if elt != t:
            raise ValueError("h is not in the declared localization at x^m*y - 1")
    w = WeightDegree((1, -m))
    if valuation_degree(h, w) >= 0:
        return True
    y_index = ring.index("y")
    return all(mono[y_index] >= 1 for mono in h.numerator.terms)
