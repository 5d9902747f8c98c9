"""Sparse multivariate polynomials over an exact field.

Polynomials are immutable maps from exponent vectors to nonzero coefficients.
Zero coefficients are never stored, so structural equality is semantic
equality.  Monomial orders (lex, grevlex, weighted) are key functions on
exponent tuples; weighted orders break ties lexicographically so every order
here is total.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .scalars import QQ

Monomial = tuple  # exponent vector, one entry per ring variable


class RingMismatchError(ValueError):
    pass


class ZeroPolynomialError(ValueError):
    pass


class UnreliableCountError(ValueError):
    """Raised when distinct-root counting is unsound (characteristic p)."""


@dataclass(frozen=True)
class Ring:
    """An ambient polynomial ring: ordered variable names over a field."""

    variables: tuple
    field: object = dc_field(default_factory=lambda: QQ)

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if len(self.variables) > 8:
            raise ValueError("rings limited to 8 variables")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in ring {self.variables}")

    def var(self, name: str) -> "MultiPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MultiPoly(self, {tuple(e): self.field.one})

    def const(self, c) -> "MultiPoly":
        if isinstance(c, int):
            c = self.field.from_int(c)
        zero_mono = (0,) * self.nvars
        return MultiPoly(self, {zero_mono: c})

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def gens(self):
        return tuple(self.var(v) for v in self.variables)


def ring(*variables, field=None) -> Ring:
    return Ring(tuple(variables), field if field is not None else QQ)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative order on monomials.

    kind is "lex", "grevlex" or "weighted"; weighted orders carry one integer
    weight per variable and fall back to lex on equal weight.
    """

    kind: str
    weights: tuple = None

    def key(self, mono: Monomial):
        if self.kind == "lex":
            return mono
        if self.kind == "grevlex":
            return (sum(mono), tuple(-e for e in reversed(mono)))
        if self.kind == "weighted":
            w = sum(wi * e for wi, e in zip(self.weights, mono))
            return (w, mono)
        raise ValueError(f"unknown order kind {self.kind!r}")


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def weighted_order(*weights) -> MonomialOrder:
    return MonomialOrder("weighted", tuple(weights))


class MultiPoly:
    """Immutable sparse polynomial; terms map monomials to nonzero scalars."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        zero = ring.field.zero
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self, "terms", {m: c for m, c in terms.items() if c != zero}
        )
        object.__setattr__(self, "_hash", None)

    # -- basic predicates ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self):
        """The scalar value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        if self.is_zero:
            return self.ring.field.zero
        return next(iter(self.terms.values()))

    def variables_present(self) -> tuple:
        present = [False] * self.ring.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    present[i] = True
        return tuple(v for v, p in zip(self.ring.variables, present) if p)

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"rings differ: {self.ring.variables} vs {other.ring.variables}"
            )

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = f.add(out.get(m, f.zero), c)
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return MultiPoly(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        f = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = f.add(out.get(m, f.zero), f.mul(c1, c2))
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "MultiPoly":
        f = self.ring.field
        if isinstance(c, int):
            c = f.from_int(c)
        return MultiPoly(self.ring, {m: f.mul(cc, c) for m, cc in self.terms.items()})

    # -- equality / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.ring, frozenset(self.terms.items())))
            )
        return self._hash

    def __repr__(self):
        from .parse import format_poly

        return f"MultiPoly({format_poly(self)!r})"

    def __str__(self):
        from .parse import format_poly

        return format_poly(self)

    # -- structure ----------------------------------------------------------

    def total_degree(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("degree of zero polynomial")
        return max(sum(m) for m in self.terms)

    def degree_in(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self.ring.index(var)
        if self.is_zero:
            return -1
        return max(m[i] for m in self.terms)

    def coefficient_in(self, var: str, power: int) -> "MultiPoly":
        """The coefficient of var**power, as a polynomial in the same ring."""
        i = self.ring.index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i] == power:
                mm = list(m)
                mm[i] = 0
                out[tuple(mm)] = c
        return MultiPoly(self.ring, out)

    def leading(self, order: MonomialOrder):
        """Order-maximal (monomial, coefficient) pair."""
        if self.is_zero:
            raise ZeroPolynomialError("leading term of zero polynomial")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder = GREVLEX) -> "MultiPoly":
        if self.is_zero:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.field.inv(c))

    def substitute(self, bindings: dict, target: Ring = None) -> "MultiPoly":
        """Simultaneously substitute polynomials (or scalars) for variables.

        Unbound variables are carried over by name into the target ring.
        """
        for name in bindings:
            self.ring.index(name)  # raises KeyError for unknown variables
        if target is None:
            for v in bindings.values():
                if isinstance(v, MultiPoly):
                    target = v.ring
                    break
            else:
                target = self.ring
        images = []
        for name in self.ring.variables:
            v = bindings.get(name)
            if v is None:
                images.append(target.var(name))
            elif isinstance(v, MultiPoly):
                if v.ring != target:
                    raise RingMismatchError("binding images in different rings")
                images.append(v)
            else:
                images.append(target.const(v))
        if target.field != self.ring.field:
            raise RingMismatchError("substitution across different fields")
        out = target.zero()
        for m, c in self.terms.items():
            term = target.const(c)
            for img, e in zip(images, m):
                if e:
                    term = term * img**e
            out = out + term
        return out

    def in_ring(self, target: Ring) -> "MultiPoly":
        """Re-express this polynomial in another ring, matching variable names."""
        return self.substitute({}, target=target)


# -- module-level operations ------------------------------------------------


def leading_term(p: MultiPoly, order: MonomialOrder):
    return p.leading(order)


def divide_multi(p: MultiPoly, divisors, order: MonomialOrder):
    """Multivariate division: p = sum(q_i * g_i) + r, no monomial of r
    divisible by any divisor's leading monomial."""
    divisors = list(divisors)
    if any(g.is_zero for g in divisors):
        raise ZeroPolynomialError("zero divisor in division")
    for g in divisors:
        p._check_ring(g)
    ring_ = p.ring
    f = ring_.field
    lts = [g.leading(order) for g in divisors]
    quotients = [ring_.zero() for _ in divisors]
    remainder = {}
    work = p
    while not work.is_zero:
        m, c = work.leading(order)
        for i, (lm, lc) in enumerate(lts):
            if mono_divides(lm, m):
                qm = mono_div(m, lm)
                qc = f.mul(c, f.inv(lc))
                qpoly = MultiPoly(ring_, {qm: qc})
                quotients[i] = quotients[i] + qpoly
                work = work - qpoly * divisors[i]
                break
        else:
            remainder[m] = f.add(remainder.get(m, f.zero), c)
            work = work - MultiPoly(ring_, {m: c})
    return quotients, MultiPoly(ring_, remainder)


def reduce_mod(p: MultiPoly, divisors, order: MonomialOrder) -> MultiPoly:
    """Remainder of multivariate division (quotients discarded)."""
    return divide_multi(p, divisors, order)[1]


def exact_div(p: MultiPoly, g: MultiPoly, order: MonomialOrder = GREVLEX) -> MultiPoly:
    """Exact quotient p/g; raises if g does not divide p."""
    qs, r = divide_multi(p, [g], order)
    if not r.is_zero:
        raise ValueError("division is not exact")
    return qs[0]


def _require_univariate(p: MultiPoly, v: str):
    extra = [w for w in p.variables_present() if w != v]
    if extra:
        raise ValueError(f"not univariate in {v!r}: also involves {extra}")


def derivative(p: MultiPoly, v: str) -> MultiPoly:
    i = p.ring.index(v)
    f = p.ring.field
    out = {}
    for m, c in p.terms.items():
        if m[i] == 0:
            continue
        mm = list(m)
        e = mm[i]
        mm[i] = e - 1
        mm = tuple(mm)
        c2 = f.mul(c, f.from_int(e))
        out[mm] = f.add(out.get(mm, f.zero), c2)
    return MultiPoly(p.ring, out)


def gcd_univariate(p: MultiPoly, q: MultiPoly, v: str) -> MultiPoly:
    """Monic gcd of polynomials univariate in v (constants allowed)."""
    if p.is_zero and q.is_zero:
        raise ZeroPolynomialError("gcd(0, 0)")
    _require_univariate(p, v)
    _require_univariate(q, v)
    while not q.is_zero:
        p, q = q, reduce_mod(p, [q], LEX)
    return p.monic(LEX)


def squarefree_part(p: MultiPoly, v: str) -> MultiPoly:
    """Monic product of the distinct irreducible factors of p in k[v].

    In characteristic p, degrees at or above the characteristic can hide
    p-th-power factors from the derivative test, so those cases are refused.
    """
    if p.is_zero:
        raise ZeroPolynomialError("squarefree part of zero")
    _require_univariate(p, v)
    char = p.ring.field.char
    d = p.degree_in(v)
    if char and d >= char:
        raise UnreliableCountError(
            f"squarefree count unreliable: degree {d} >= characteristic {char}"
        )
    if d <= 0:
        return p.ring.one()
    g = gcd_univariate(p, derivative(p, v), v)
    return exact_div(p, g, LEX).monic(LEX)


def distinct_root_count(p: MultiPoly, v: str) -> int:
    """Number of distinct roots of p in the algebraic closure."""
    return squarefree_part(p, v).degree_in(v)


@dataclass(frozen=True)
class LinearDecomposition:
    """p = common * (c_prime * variable + d_prime) with gcd(c', d') = 1."""

    variable: str
    common: MultiPoly
    c_prime: MultiPoly
    d_prime: MultiPoly

    def reconstruct(self) -> MultiPoly:
        ring_ = self.common.ring
        v = ring_.var(self.variable)
        return self.common * (self.c_prime * v + self.d_prime)


def _univariate_in(p: MultiPoly):
    """The single variable a nonconstant polynomial involves, or None."""
    present = p.variables_present()
    if len(present) == 1:
        return present[0]
    return None


def linear_decompose(p: MultiPoly, v: str) -> LinearDecomposition:
    """Split a polynomial linear in v into common factor and primitive part.

    Requires both coefficients of v to be univariate in one shared other
    variable (or constant).
    """
    if p.degree_in(v) != 1:
        raise ValueError(f"polynomial is not linear in {v!r}")
    c = p.coefficient_in(v, 1)
    d = p.coefficient_in(v, 0)
    coeff_vars = set(c.variables_present()) | set(d.variables_present())
    if v in coeff_vars:
        raise ValueError(f"coefficients of {v!r} still involve {v!r}")
    if len(coeff_vars) > 1:
        raise ValueError(f"coefficients not univariate: involve {sorted(coeff_vars)}")
    w = next(iter(coeff_vars)) if coeff_vars else None
    if w is None:
        # both coefficients constant: gcd is 1 after normalization
        g = p.ring.one()
    else:
        g = gcd_univariate(c, d, w)
    return LinearDecomposition(
        variable=v,
        common=g,
        c_prime=exact_div(c, g, LEX),
        d_prime=exact_div(d, g, LEX),
    )
