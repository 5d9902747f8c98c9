from fractions import Fraction

import pytest

from affmod import (
    GREVLEX,
    Ideal,
    PresentedRing,
    RingMap,
    b1_swap_automorphism,
    build_Bn,
    build_C1,
    build_C2,
    build_modification,
    ideals_equal,
    ring,
    samuel_check,
    verify_ring_map,
)
from affmod.rings import c1_alternate_ideal, c1_to_c2_map, certify_irreducible, relatively_prime
from affmod.scalars import PrimeField

RXY = ring("x", "y")


class TestBuilders:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_bn_relation(self, n):
        b = build_Bn(n)
        x, y, u = b.ambient.gens()
        assert b.is_proper()
        assert b.defining.contains(u * (x**n * y - 1) - (x - 1))

    def test_bn_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            build_Bn(0)

    def test_modification_rejects_units(self):
        x, y = RXY.gens()
        with pytest.raises(ValueError):
            build_modification(RXY.one(), x - 1)
        with pytest.raises(ValueError):
            build_modification(x * y - 1, RXY.zero())

    def test_c1_c2_proper(self):
        assert build_C1().is_proper()
        assert build_C2().is_proper()

    def test_prime_field_builder(self):
        b = build_Bn(2, field=PrimeField(7))
        assert b.ambient.field == PrimeField(7)
        assert b.is_proper()


class TestQuotientEquality:
    def test_u_x_relation_in_c1(self):
        c1 = build_C1()
        x, y, u, v = c1.ambient.gens()
        # 1 + u*x = y is literally the first defining generator
        assert c1.equal(1 + u * x, y)
        assert c1.equal(1 + v * y, x)

    def test_same_relations_fail_mod_alternate_ideal(self):
        J = c1_alternate_ideal()
        amb = J.ring
        x, y, u, v = amb.gens()
        fake = PresentedRing(amb, J, amb.variables)
        assert not fake.equal(1 + u * x, y)
        assert not fake.equal(1 + v * y, x)

    def test_v_is_not_1_minus_yu_in_c2(self):
        c2 = build_C2()
        X, Y, U, V = c2.ambient.gens()
        assert not c2.equal(V, 1 - Y * U)
        # but the product with the zero divisor X*Y-1 does vanish
        assert c2.defining.contains((X * Y - 1) * (V - 1 + Y * U))

    def test_bn_u_inverts_denominator(self):
        b = build_Bn(3)
        x, y, u = b.ambient.gens()
        assert b.equal(u * (x**3 * y - 1), x - 1)


class TestRingMaps:
    def test_c1_to_c2_literal_target_rejected(self):
        # the image of C1's ideal is the saturation of C2's two-generator
        # ideal, strictly larger than that ideal, so the map is not
        # well-defined into the literal presentation
        assert not verify_ring_map(c1_to_c2_map())

    def test_c1_to_c2_saturated_target_verified(self):
        m = c1_to_c2_map()
        amb = m.target.ambient
        X, Y, U, V = amb.gens()
        saturated = PresentedRing(
            amb, Ideal([Y * U + V - 1, X * V + U - 1], GREVLEX), amb.variables
        )
        fixed = RingMap(source=m.source, target=saturated, images=m.images)
        assert verify_ring_map(fixed)

    def test_c1_to_c2_images_hit_alternate_generators(self):
        m = c1_to_c2_map()
        J = c1_alternate_ideal()
        images = [m.image_of(g) for g in J.generators]
        c2_gens = m.target.defining.generators
        assert ideals_equal(Ideal(images, GREVLEX), Ideal(c2_gens, GREVLEX))

    def test_mutated_map_rejected(self):
        m = c1_to_c2_map()
        amb = m.target.ambient
        bad = RingMap(
            source=m.source,
            target=m.target,
            images={**m.images, "u": amb.var("Y")},  # sign dropped
        )
        assert not verify_ring_map(bad)

    def test_missing_image_rejected(self):
        m = c1_to_c2_map()
        partial = RingMap(source=m.source, target=m.target,
                          images={k: v for k, v in m.images.items() if k != "v"})
        with pytest.raises(ValueError):
            verify_ring_map(partial)

    def test_b1_swap_well_defined(self):
        assert verify_ring_map(b1_swap_automorphism())

    def test_b1_swap_is_involution(self):
        m = b1_swap_automorphism()
        b1 = m.source
        for name in b1.ambient.variables:
            twice = m.image_of(m.images[name])
            assert b1.equal(twice, b1.ambient.var(name))


class TestIrreducibility:
    def test_linear_certificates(self):
        x, y = RXY.gens()
        assert certify_irreducible(x**2 * y - 1) is True
        assert certify_irreducible(x - 1) is True
        assert certify_irreducible(x * y - 1) is True

    def test_visible_factorizations(self):
        x, y = RXY.gens()
        assert certify_irreducible(x**2) is False
        assert certify_irreducible(x * (x - 1)) is False
        assert certify_irreducible(x**3 * y - x) is False
        assert certify_irreducible(RXY.one()) is False

    def test_out_of_scope(self):
        x, y = RXY.gens()
        assert certify_irreducible(x**2 * y**2 - 1) is None

    def test_relatively_prime(self):
        x, y = RXY.gens()
        assert relatively_prime(x**2 * y - 1, x - 1) is True
        assert relatively_prime(x - 1, 3 * x - 3) is False
        assert relatively_prime(x**2, x - 1) is None


class TestSamuelCheck:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_bn_pair_verified(self, n):
        x, y = RXY.gens()
        rep = samuel_check(x**n * y - 1, x - 1)
        assert rep.verdict == "hypotheses-verified"
        assert rep.point == (1, 1)
        assert rep.sum_colength == 1
        assert str(rep.quotient_a_class) == "A^1_*"
        assert str(rep.quotient_b_class) == "A^1"

    def test_reducible_a_fails(self):
        x, y = RXY.gens()
        rep = samuel_check(x * (x - 1), y - 1)
        assert rep.verdict == "failed"
        assert rep.a_irreducible is False

    def test_square_fails(self):
        x, y = RXY.gens()
        rep = samuel_check(x**2, y)
        assert rep.verdict == "failed"

    def test_non_point_center_fails(self):
        x, y = RXY.gens()
        rep = samuel_check(x * y - 1, x - y)  # meets in two points
        assert rep.verdict == "failed"
        assert rep.sum_colength == 2

    def test_out_of_scope_is_unknown_not_failed(self):
        x, y = RXY.gens()
        # a is not linear in any variable, so irreducibility and the curve
        # class are undecided, but every decidable hypothesis passes
        rep = samuel_check(x**2 * y**2 + y - 1, x)
        assert rep.verdict == "unknown"
        assert rep.a_irreducible is None
        assert rep.sum_ideal_is_point and rep.point == (0, 1)

    def test_wrong_ring_rejected(self):
        r3 = ring("x", "y", "u")
        with pytest.raises(ValueError):
            samuel_check(r3.var("x"), r3.var("y"))
