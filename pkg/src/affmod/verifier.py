"""End-to-end checks replayed by the CLI.

Each function re-derives one verifiable claim about the rings built from the
relation u*(x^n*y - 1) = x - 1 and returns a VerificationReport with a
transcript of the algebraic steps.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import product

from .degrees import DEFAULT_PROBE, exhaustive_probe
from .fibers import expected_fiber_class, fiber_table
from .ideals import Ideal, ideals_equal, normal_form
from .parse import format_poly
from .poly import GREVLEX, Ring, exact_div
from .report import VerificationReport
from .rings import (
    PresentedRing,
    RingMap,
    build_Bn,
    build_C1,
    build_C2,
    c1_alternate_ideal,
    c1_to_c2_map,
    samuel_check,
    verify_ring_map,
)
from .scalars import QQ, scalar_from_rational

DEFAULT_LAMBDAS = (0, 1, 2, -1, Fraction(1, 2))


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.seconds = time.perf_counter() - t0
        return report

    return wrapper


@_timed
def cmd_fibers(n: int, lambdas=DEFAULT_LAMBDAS, field=None) -> VerificationReport:
    """Compare the computed fiber classes of x, u, y against the tabulated
    general / reducible / zero patterns."""
    field = field if field is not None else QQ
    lambdas = [scalar_from_rational(field, lam) for lam in lambdas]
    transcript = []
    failures = []
    unknowns = []
    rows = fiber_table(n, lambdas, field)
    for row in rows:
        expected, note = expected_fiber_class(n, row.generator, row.lam, field)
        line = (
            f"{row.generator} = {row.lam}: {format_poly(row.fiber)} "
            f"-> {row.curve_class} (expected {expected})"
        )
        if note:
            line += f" [note: {note}]"
        transcript.append(line)
        if row.curve_class.kind == "unknown":
            unknowns.append(line)
        elif row.curve_class != expected:
            failures.append(line)
    if failures:
        status, detail = "failed", failures[0]
    elif unknowns:
        status, detail = "unknown", unknowns[0]
    else:
        status, detail = "verified", f"{len(rows)} fibers match"
    return VerificationReport(
        claim_id=f"fibers-n{n}",
        description=f"fiber classification table for n={n}",
        status=status,
        detail=detail,
        transcript=transcript,
    )


@_timed
def cmd_takanori(field=None) -> VerificationReport:
    """Replay the literal isomorphism-chain computations between the two
    four-variable surface presentations and the n=1 modification ring.

    The chain as classically written does NOT hold at the ideal level: in
    k[x,y,u,v] the ideal J = (x(uv-1)+(v+1), y(uv-1)+(u+1)) is strictly
    smaller than I = (ux-(y-1), vy-(x-1)).  The plane u = v = -1 kills both
    generators of J identically, so uv - 1 is a zero divisor modulo J and
    the cancellation that derives 1 + ux = y modulo J is invalid.  The
    repaired chain (cmd_takanori_repaired) saturates the deficient ideal
    and verifies in full.
    """
    transcript = []
    ok = True

    c1 = build_C1(field)
    c2 = build_C2(field)
    ideal_I = c1.defining
    ideal_J = c1_alternate_ideal(field)

    step1 = ideals_equal(ideal_I, ideal_J)
    transcript.append(f"I = J as ideals: {step1}")
    ok &= step1

    amb = c1.ambient
    x, y, u, v = amb.gens()
    step2a = normal_form(1 + u * x - y, ideal_J).is_zero
    step2b = normal_form(1 + v * y - x, ideal_J).is_zero
    transcript.append(f"1 + u*x = y modulo J: {step2a}")
    transcript.append(f"1 + v*y = x modulo J: {step2b}")
    ok &= step2a and step2b
    if not step1:
        transcript.append(
            "  witness: at u = v = -1 both generators of J vanish identically "
            "while u*x - (y - 1) does not, so J is strictly smaller than I"
        )
        transcript.append(
            f"  (uv - 1)*(u*x - y + 1) in J: "
            f"{ideal_J.contains((u * v - 1) * (u * x - y + 1))}; "
            "the cancellation by the zero divisor uv - 1 is where the "
            "classical derivation breaks"
        )

    phi = c1_to_c2_map(field)
    phi_on_j = RingMap(
        source=PresentedRing(amb, ideal_J, c1.generators), target=c2, images=phi.images
    )
    images = [phi_on_j.image_of(g) for g in ideal_J.generators]
    as_sets = {
        frozenset(p.terms.items()) for p in images
    } == {frozenset(g.terms.items()) for g in c2.defining.generators}
    step3 = verify_ring_map(phi_on_j) and as_sets
    transcript.append(
        "phi(x,y,u,v) = (U,V,-Y,-X) carries the generators of J onto the "
        f"defining relations of C2: {step3}"
    )
    for g, img in zip(ideal_J.generators, images):
        transcript.append(f"  phi({format_poly(g)}) = {format_poly(img)}")
    ok &= step3

    X, Y, U, V = c2.ambient.gens()
    step4 = c2.equal(V, 1 - Y * U)
    transcript.append(f"V = 1 - Y*U in C2 (so C2 is generated by X, Y, U): {step4}")
    if not step4:
        transcript.append(
            "  witness: V - 1 + Y*U is nonzero at the point X = Y = 1, U = 0, "
            "V = 5 where both defining relations of C2 vanish"
        )
    ok &= step4

    return VerificationReport(
        claim_id="isomorphism-chain",
        description="C1, C2 and the n=1 modification ring are isomorphic "
        "(literal two-generator presentations)",
        status="verified" if ok else "failed",
        detail=""
        if ok
        else "the two-generator ideals are not equal (see transcript); "
        "the saturated chain verifies",
        transcript=transcript,
    )


@_timed
def cmd_takanori_repaired(field=None) -> VerificationReport:
    """The isomorphism chain with the deficient presentation ideal enlarged
    to its saturation: I2 = (Y*U + V - 1, X*V + U - 1).

    Modulo I2 the surface relations of C2 hold, phi carries I exactly onto
    I2, and eliminating V = 1 - Y*U reduces I2 to the single n=1
    modification relation, so C1 ~ k[X,Y,U,V]/I2 ~ B_1.
    """
    transcript = []
    ok = True

    c1 = build_C1(field)
    c2 = build_C2(field)
    amb2 = c2.ambient
    X, Y, U, V = amb2.gens()
    ideal_I2 = Ideal([Y * U + V - 1, X * V + U - 1], GREVLEX)

    step1 = all(ideal_I2.contains(g) for g in c2.defining.generators)
    transcript.append(f"both defining relations of C2 lie in I2: {step1}")
    step1b = c2.defining.contains((X * Y - 1) * (V - 1 + Y * U))
    transcript.append(
        f"(X*Y - 1)*(V - 1 + Y*U) lies in C2's ideal (I2 is the saturation "
        f"at X*Y - 1): {step1b}"
    )
    ok &= step1 and step1b

    phi = c1_to_c2_map(field)
    images = [phi.image_of(g) for g in c1.defining.generators]
    step2 = ideals_equal(Ideal(images, GREVLEX), ideal_I2)
    transcript.append(f"phi(I) = I2 as ideals: {step2}")
    for g, img in zip(c1.defining.generators, images):
        transcript.append(f"  phi({format_poly(g)}) = {format_poly(img)}")
    ok &= step2

    b1 = build_Bn(1, field)
    amb1 = b1.ambient
    xb, yb, ub = amb1.var("x"), amb1.var("y"), amb1.var("u")
    eliminate_v = {"X": xb, "Y": yb, "U": ub, "V": 1 - yb * ub}
    step3 = all(
        b1.defining.contains(g.substitute(eliminate_v, target=amb1))
        for g in ideal_I2.generators
    )
    transcript.append(
        f"substituting V = 1 - Y*U sends I2 into the n=1 relation ideal: {step3}"
    )
    back = b1.defining.generators[0].substitute(
        {"x": X, "y": Y, "u": U}, target=amb2
    )
    step4 = ideal_I2.contains(back)
    transcript.append(f"the n=1 relation u*(x*y - 1) - (x - 1) lies in I2: {step4}")
    ok &= step3 and step4

    return VerificationReport(
        claim_id="isomorphism-chain-repaired",
        description="C1, C2 and the n=1 modification ring are isomorphic "
        "(saturated presentation ideal)",
        status="verified" if ok else "failed",
        detail="" if ok else "a sub-identity failed; see transcript",
        transcript=transcript,
    )


@_timed
def cmd_samuel(n: int, field=None) -> VerificationReport:
    """Check the UFD-criterion hypotheses for a = x^n*y - 1, b = x - 1."""
    base = Ring(("x", "y"), field if field is not None else QQ)
    x, y = base.var("x"), base.var("y")
    a, b = x**n * y - 1, x - 1
    rep = samuel_check(a, b)
    one = base.field.one
    point_ok = rep.point == (one, one)
    point_str = (
        "(" + ", ".join(base.field.to_str(c) for c in rep.point) + ")"
        if rep.point is not None
        else "none"
    )
    transcript = [
        f"a = {format_poly(a)}, b = {format_poly(b)}",
        f"a irreducible (prime linear form): {rep.a_irreducible}",
        f"b irreducible: {rep.b_irreducible}",
        f"a, b relatively prime: {rep.relatively_prime}",
        f"(a, b) colength: {rep.sum_colength}, point: {point_str}",
        f"A/aA: {rep.quotient_a_class}, A/bA: {rep.quotient_b_class}",
        f"verdict: {rep.verdict}",
    ]
    if rep.verdict == "hypotheses-verified" and point_ok:
        status, detail = "verified", f"center point {point_str}"
    elif rep.verdict == "unknown":
        status, detail = "unknown", rep.detail
    else:
        status, detail = "failed", rep.detail or "center point is not (1, 1)"
    return VerificationReport(
        claim_id=f"samuel-n{n}",
        description=f"UFD-criterion hypotheses for the n={n} modification",
        status=status,
        detail=detail,
        transcript=transcript,
    )


@_timed
def cmd_localization(n: int, field=None) -> VerificationReport:
    """Generator inter-expressibility of k[x^{+-1}, y, t^{+-1}] with
    t = x^n*y - 1: inverting x turns the modification chart into a
    two-variable Laurent ring."""
    base = Ring(("x", "y"), field if field is not None else QQ)
    x, y = base.var("x"), base.var("y")
    t = x**n * y - 1
    transcript = []

    # y = (t + 1) / x^n, cleared of denominators
    residual = y * x**n - (t + 1)
    step1 = residual.is_zero
    transcript.append(
        f"y*x^{n} - (t + 1) with t = {format_poly(t)}: {format_poly(residual)}"
    )

    # round trip: substituting t back into (t+1)/x^n recovers y exactly
    recovered = exact_div(t + 1, x**n)
    step2 = recovered == y
    transcript.append(f"(t + 1)/x^{n} = {format_poly(recovered)}")

    # and t is itself a polynomial in x, y (the other direction is immediate)
    transcript.append(f"t = {format_poly(t)} lies in k[x, y]")

    ok = step1 and step2
    return VerificationReport(
        claim_id=f"localization-n{n}",
        description=f"Laurent chart identity for n={n}",
        status="verified" if ok else "failed",
        detail="" if ok else "generator identity failed",
        transcript=transcript,
    )


@_timed
def cmd_main_identities(n: int, field=None, degree_bound: int = 10) -> VerificationReport:
    """The two exact polynomial identities behind the non-isomorphism
    argument (configuration m=1 < n), plus the degree bookkeeping
    enumeration for the complementary case."""
    ring = Ring(("x", "y", "Y", "c"), field if field is not None else QQ)
    x, y, Y, c = ring.gens()
    transcript = []

    if n >= 2:
        X = c * y
        T = X**n * Y - 1
        t = x * y - 1

        lhs = T * t - (1 - y)
        rhs = X**n * Y * x * y - X**n * Y - x * y + y
        id1 = lhs == rhs
        transcript.append(
            "(X^n*Y - 1)*(x*y - 1) - (1 - y) = X^n*Y*x*y - X^n*Y - x*y + y "
            f"with X = c*y: {id1}"
        )

        divisible = all(m[ring.index("y")] >= 1 for m in lhs.terms)
        transcript.append(f"that expansion is divisible by y: {divisible}")
        if divisible:
            quotient = exact_div(lhs, y)
            expected_q = X**n * Y * x - c * X ** (n - 1) * Y - x + 1
            id2 = quotient == expected_q
            transcript.append(
                f"quotient by y equals X^n*Y*x - c*X^(n-1)*Y - x + 1: {id2}"
            )
        else:
            id2 = False
    else:
        id1 = id2 = True
        transcript.append("identity chain requires n >= 2; skipped")

    # degree bookkeeping: dX = dU + n*dX + dY over non-negative integers
    solutions = [
        (dx, dy, du)
        for dx, dy, du in product(range(degree_bound + 1), repeat=3)
        if dx == du + n * dx + dy
    ]
    if n >= 2:
        enum_ok = solutions == [(0, 0, 0)]
        transcript.append(
            f"non-negative solutions of dX = dU + {n}*dX + dY, all <= "
            f"{degree_bound}: {solutions}"
        )
    else:
        enum_ok = all(dy == 0 and du == 0 for _, dy, du in solutions)
        transcript.append(
            "at n=1 the constraint degenerates to 0 = dU + dY: dX is "
            f"unconstrained ({len(solutions)} solutions); recorded, not a failure"
        )

    ok = id1 and id2 and enum_ok
    if n >= 2:
        status = "verified" if ok else "failed"
        detail = "" if ok else "identity residual nonzero; see transcript"
    else:
        status = "unknown" if ok else "failed"
        detail = "degenerate configuration at n=1; identities require n >= 2"
    return VerificationReport(
        claim_id=f"main-identities-n{n}",
        description=f"exact identity chain and degree enumeration for n={n}",
        status=status,
        detail=detail,
        transcript=transcript,
    )


@_timed
def cmd_degree_probe(n_max: int = 5, box: int = 5, names=DEFAULT_PROBE) -> VerificationReport:
    """Exhaustive weight probe: every nonzero integer weight in the box
    produces a probe element of negative degree, for every n."""
    results = exhaustive_probe(range(1, n_max + 1), box, names)
    missing = [r for r in results if r["verdict"] != "witness"]
    transcript = [
        f"probe set {list(names)}, weights in [-{box}, {box}]^2, n in 1..{n_max}: "
        f"{len(results)} cases"
    ]
    for r in missing[:10]:
        transcript.append(f"no witness: n={r['n']}, weight={tuple(r['weight'])}")
    ok = not missing
    return VerificationReport(
        claim_id="degree-probe",
        description="weight-family non-negativity probe (degree rigidity, "
        "within the weight family)",
        status="verified" if ok else "failed",
        detail=f"{len(results)} weight cases, all witnessed"
        if ok
        else f"{len(missing)} weights without witness",
        transcript=transcript,
        payload=results,
    )


def run_all(field=None, n_values=(1, 2, 3, 4, 5), lambdas=DEFAULT_LAMBDAS) -> list:
    """Every check at default parameters, sorted by claim id."""
    reports = []
    for n in n_values:
        reports.append(cmd_fibers(n, lambdas, field))
        reports.append(cmd_samuel(n, field))
        reports.append(cmd_localization(n, field))
    reports.append(cmd_takanori(field))
    reports.append(cmd_takanori_repaired(field))
    for n in n_values:
        if n >= 2:
            reports.append(cmd_main_identities(n, field))
    reports.append(cmd_degree_probe(n_max=max(n_values), box=5))
    return sorted(reports, key=lambda r: r.claim_id)
