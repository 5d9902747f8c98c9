import random

import pytest
from hypothesis import strategies as st

from affmod import Ring, ring


@pytest.fixture
def rxy() -> Ring:
    return ring("x", "y")


@pytest.fixture
def rxyu() -> Ring:
    return ring("x", "y", "u")


def random_poly(rng: random.Random, r: Ring, max_terms=4, max_exp=3, max_coef=4):
    """Small random polynomial with integer coefficients (possibly zero)."""
    p = r.zero()
    for _ in range(rng.randint(0, max_terms)):
        c = rng.randint(-max_coef, max_coef)
        mono = r.one()
        for name in r.variables:
            mono = mono * r.var(name) ** rng.randint(0, max_exp)
        p = p + mono.scale(c)
    return p


def poly_strategy(r: Ring, max_terms=5, max_exp=4, max_coef=6):
    """Hypothesis strategy for integer-coefficient polynomials in r."""
    term = st.tuples(
        st.integers(min_value=-max_coef, max_value=max_coef),
        st.tuples(*(st.integers(min_value=0, max_value=max_exp) for _ in r.variables)),
    )

    def build(terms):
        from affmod.poly import MultiPoly

        out = {}
        fld = r.field
        for c, mono in terms:
            if c:
                cur = out.get(mono, fld.zero)
                out[mono] = fld.add(cur, fld.from_int(c))
        return MultiPoly(r, out)

    return st.lists(term, max_size=max_terms).map(build)
