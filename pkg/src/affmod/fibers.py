"""Classification of affine plane curve fibers.

A curve given by a bivariate polynomial that is linear in some variable is
split into a common univariate factor (whose distinct roots contribute affine
lines) and a primitive residual c'*v + d', which is an affine line when d'=0
or c' is constant, and otherwise a line punctured at the roots of c'.
Puncture counts are squarefree degrees, i.e. root counts over the algebraic
closure; no root isolation happens.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import (
    MultiPoly,
    Ring,
    UnreliableCountError,
    distinct_root_count,
    linear_decompose,
)
from .scalars import QQ


@dataclass(frozen=True)
class CurveClass:
    """One of: Empty, Point, AffineLine, PuncturedLine(r), Union(parts),
    Unknown(reason)."""

    kind: str  # "empty" | "point" | "line" | "punctured" | "union" | "unknown"
    punctures: int = 0
    parts: tuple = ()
    reason: str = ""

    def __str__(self):
        if self.kind == "empty":
            return "Empty"
        if self.kind == "point":
            return "Point"
        if self.kind == "line":
            return "A^1"
        if self.kind == "punctured":
            return f"A^1_*{self.punctures}" if self.punctures != 1 else "A^1_*"
        if self.kind == "union":
            return " u ".join(str(p) for p in self.parts)
        return f"Unknown({self.reason})"


EMPTY = CurveClass("empty")
POINT = CurveClass("point")
AFFINE_LINE = CurveClass("line")


def punctured_line(r: int) -> CurveClass:
    if r < 0:
        raise ValueError("negative puncture count")
    if r == 0:
        return AFFINE_LINE
    return CurveClass("punctured", punctures=r)


def unknown(reason: str) -> CurveClass:
    return CurveClass("unknown", reason=reason)


def _part_key(c: CurveClass):
    return (c.kind, c.punctures, c.reason)


def union(parts) -> CurveClass:
    """Flattened, canonically sorted union; singletons collapse."""
    flat = []
    for p in parts:
        if p.kind == "union":
            flat.extend(p.parts)
        else:
            flat.append(p)
    if not flat:
        return EMPTY
    if len(flat) == 1:
        return flat[0]
    return CurveClass("union", parts=tuple(sorted(flat, key=_part_key)))


def _classify_univariate(p: MultiPoly, v: str) -> CurveClass:
    try:
        r = distinct_root_count(p, v)
    except UnreliableCountError as e:
        return unknown(str(e))
    if r == 0:
        return EMPTY  # nonzero constant (or rootless unit-like factor)
    return union([AFFINE_LINE] * r)


def classify_curve(p: MultiPoly) -> CurveClass:
    """Classify the plane curve p = 0 up to isomorphism of reduced curves."""
    if p.is_zero:
        return unknown("zero polynomial does not define a curve")
    present = p.variables_present()
    if len(present) == 0:
        return EMPTY
    if len(present) == 1:
        return _classify_univariate(p, present[0])
    if len(present) > 2:
        return unknown(f"more than two variables present: {present}")

    candidates = []
    for v in present:
        if p.degree_in(v) != 1:
            continue
        try:
            dec = linear_decompose(p, v)
        except ValueError:
            continue
        lead_deg = 0 if dec.c_prime.is_constant() else dec.c_prime.total_degree()
        candidates.append((lead_deg, p.ring.index(v), dec))
    if not candidates:
        return unknown("no variable of degree one with univariate coefficients")
    # prefer the linear variable with the smaller leading coefficient degree;
    # ties broken by ring variable order (class is substitution-invariant)
    _, _, dec = min(candidates, key=lambda t: (t[0], t[1]))

    components = []
    try:
        if not dec.common.is_constant():
            w = dec.common.variables_present()[0]
            components.extend([AFFINE_LINE] * distinct_root_count(dec.common, w))
        if dec.d_prime.is_zero:
            components.append(AFFINE_LINE)  # the line v = 0
        elif dec.c_prime.is_constant():
            components.append(AFFINE_LINE)
        else:
            w = dec.c_prime.variables_present()[0]
            components.append(punctured_line(distinct_root_count(dec.c_prime, w)))
    except UnreliableCountError as e:
        return unknown(str(e))
    return union(components)


# -- fibers of the coordinate functions on Spec B_n -------------------------


def base_ring(field=None) -> Ring:
    return Ring(("x", "y"), field if field is not None else QQ)


def ambient_ring(field=None) -> Ring:
    return Ring(("x", "y", "u"), field if field is not None else QQ)


def defining_relation(n: int, ring: Ring = None) -> MultiPoly:
    """u*(x^n*y - 1) - (x - 1), the relation presenting B_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if ring is None:
        ring = ambient_ring()
    x, y, u = ring.var("x"), ring.var("y"), ring.var("u")
    return u * (x**n * y - 1) - (x - 1)


def fiber_poly(n: int, generator: str, lam, field=None) -> MultiPoly:
    """Bivariate relation of the fiber generator = lam on Spec B_n."""
    if generator not in ("x", "u", "y"):
        raise ValueError(f"generator must be one of x, u, y, not {generator!r}")
    rel = defining_relation(n, ambient_ring(field))
    return rel.substitute({generator: rel.ring.const(lam)})


@dataclass(frozen=True)
class FiberTableRow:
    generator: str
    lam: object
    fiber: MultiPoly
    curve_class: CurveClass


def fiber_table(n: int, lambdas, field=None) -> list:
    """All fibers of x, u, y at the given parameter values, classified."""
    rows = []
    for generator in ("x", "u", "y"):
        for lam in lambdas:
            p = fiber_poly(n, generator, lam, field)
            rows.append(FiberTableRow(generator, lam, p, classify_curve(p)))
    return rows


def expected_fiber_class(n: int, generator: str, lam, field=None):
    """The tabulated fiber class, with a note where the n=1 row of the
    reducible-fiber patterns degenerates to two lines.

    Returns (CurveClass, note_or_None).
    """
    fld = field if field is not None else QQ
    zero, one = fld.zero, fld.one
    lam = fld.from_int(lam) if isinstance(lam, int) else lam
    if lam == zero:
        return AFFINE_LINE, None
    if lam == one:
        if generator == "x":
            return union([AFFINE_LINE, AFFINE_LINE]), None
        if generator == "u":
            if n == 1:
                return (
                    union([AFFINE_LINE, AFFINE_LINE]),
                    "residual x^(n-1)*y - 1 degenerates to a line at n=1",
                )
            return union([AFFINE_LINE, punctured_line(1)]), None
        if n == 1:
            return (
                union([AFFINE_LINE, AFFINE_LINE]),
                "residual factor is u - 1 at n=1: two lines",
            )
        return union([AFFINE_LINE, punctured_line(n - 1)]), None
    if generator == "y":
        return punctured_line(n), None
    return punctured_line(1), None
