"""Tests for the scroll intersection ring."""

import random

import pytest

from gonal.chow import AmbientScroll, ChowClass, DivisorClass, intersect_number
from gonal.errors import DomainError


def brute_reduce(ambient, coeffs, rng):
    """Independent normal-form oracle: apply the two rewriting rules
    one redex at a time in random order until no redex is left."""
    terms = [(a, b, c) for (a, b), c in coeffs.items() if c]
    done = {}
    while terms:
        idx = rng.randrange(len(terms))
        a, b, c = terms.pop(idx)
        redexes = []
        if b >= 2:
            redexes.append("f")
        if a >= ambient.n - 1:
            redexes.append("D")
        if not redexes:
            done[(a, b)] = done.get((a, b), 0) + c
            continue
        rule = rng.choice(redexes)
        if rule == "f":
            continue  # f^2 = 0
        terms.append((a - 1, b + 1, c * ambient.degree))
    return {m: c for m, c in done.items() if c}


class TestAmbientScroll:
    def test_range_validation(self):
        with pytest.raises(DomainError):
            AmbientScroll(5, 2)
        with pytest.raises(DomainError):
            AmbientScroll(4, 3)  # 2n-2 = 4 = g
        with pytest.raises(DomainError, match="2n-2 < g"):
            AmbientScroll(8, 5)

    def test_derived_quantities(self):
        amb = AmbientScroll(9, 4)
        assert amb.dimension == 3
        assert amb.degree == 6


class TestNormalForm:
    def test_fiber_squared_is_zero(self):
        amb = AmbientScroll(5, 3)
        f = amb.fiber().to_chow()
        assert (f * f).is_zero()

    def test_hyperplane_square_trigonal(self):
        amb = AmbientScroll(5, 3)
        d = amb.hyperplane().to_chow()
        assert (d * d).coefficients == {(1, 1): 3}

    def test_mixed_product(self):
        # (-2D + f)(3D - f) = -13 Df on the genus-5 trigonal scroll,
        # by hand: -6 D^2 + 5 Df with D^2 = 3 Df
        amb = AmbientScroll(5, 3)
        x = ChowClass(amb, {(1, 0): -2, (0, 1): 1})
        y = ChowClass(amb, {(1, 0): 3, (0, 1): -1})
        assert (x * y).coefficients == {(1, 1): -13}

    def test_high_powers_vanish(self):
        amb = AmbientScroll(9, 4)
        d = amb.hyperplane().to_chow()
        d3 = d * d * d
        assert d3.degree() == 6  # the scroll degree g-n+1
        assert (d3 * d).is_zero()

    def test_point_class_normalization(self):
        for g, n in [(5, 3), (6, 3), (9, 4), (11, 5), (20, 6)]:
            amb = AmbientScroll(g, n)
            assert amb.point_class().degree() == 1
            top = amb.monomial(n - 2, 0) * amb.fiber()
            assert top.degree() == 1

    def test_top_hyperplane_power_is_scroll_degree(self):
        for g, n in [(5, 3), (9, 4), (13, 5)]:
            amb = AmbientScroll(g, n)
            power = amb.unit()
            for _ in range(n - 1):
                power = power * amb.hyperplane()
            assert power.degree() == g - n + 1

    def test_matches_random_order_rewriting(self):
        rng = random.Random(1234)
        for _ in range(300):
            n = rng.randrange(3, 7)
            g = rng.randrange(2 * n - 1, 2 * n + 20)
            amb = AmbientScroll(g, n)
            raw = {
                (rng.randrange(0, 2 * n), rng.randrange(0, 4)): rng.randint(-9, 9)
                for _ in range(4)
            }
            expected = brute_reduce(amb, raw, rng)
            assert ChowClass(amb, raw).coefficients == expected

    def test_negative_exponent_rejected(self):
        amb = AmbientScroll(5, 3)
        with pytest.raises(DomainError):
            ChowClass(amb, {(-1, 0): 1})


class TestRingAxioms:
    def rand_class(self, rng, amb):
        return ChowClass(
            amb,
            {
                (rng.randrange(0, amb.n), rng.randrange(0, 2)): rng.randint(-5, 5)
                for _ in range(3)
            },
        )

    def test_algebra_laws(self):
        rng = random.Random(99)
        for n in range(3, 7):
            g = 2 * n + 1
            amb = AmbientScroll(g, n)
            for _ in range(25):
                x, y, z = (self.rand_class(rng, amb) for _ in range(3))
                assert x * y == y * x
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z

    def test_unit_and_zero(self):
        amb = AmbientScroll(7, 3)
        x = ChowClass(amb, {(1, 0): 4, (0, 1): -2})
        assert amb.unit() * x == x
        assert (x - x).is_zero()
        assert (x - x).degree() == 0

    def test_scalar_multiplication(self):
        amb = AmbientScroll(7, 3)
        x = ChowClass(amb, {(1, 0): 4})
        assert 3 * x == x * 3 == ChowClass(amb, {(1, 0): 12})

    def test_mismatched_ambient_rejected(self):
        x = ChowClass(AmbientScroll(5, 3), {(1, 0): 1})
        y = ChowClass(AmbientScroll(7, 3), {(1, 0): 1})
        with pytest.raises(DomainError):
            x * y

    def test_hash_consistent_with_eq(self):
        amb = AmbientScroll(5, 3)
        x = ChowClass(amb, {(1, 0): 1, (0, 1): 2})
        y = ChowClass(amb, {(0, 1): 2, (1, 0): 1})
        assert x == y and hash(x) == hash(y)


class TestIntersectNumber:
    def test_trigonal_pairings(self):
        amb = AmbientScroll(5, 3)
        curve = ChowClass(amb, {(1, 0): 3, (0, 1): -1})
        assert intersect_number([amb.hyperplane()], curve) == 8  # 2g-2
        assert intersect_number([amb.fiber()], curve) == 3  # n

    def test_canonical_pairing_general_genus(self):
        for g in range(5, 13):
            amb = AmbientScroll(g, 3)
            omega = DivisorClass(amb, -2, g - 4)
            curve = ChowClass(amb, {(1, 0): 3, (0, 1): 4 - g})
            assert intersect_number([omega], curve) == -g - 8

    def test_codimension_mismatch_rejected(self):
        amb = AmbientScroll(9, 4)
        curve = ChowClass(amb, {(1, 0): 3})  # codim 1, plus one divisor = 2 != 3
        with pytest.raises(DomainError, match="codimension"):
            intersect_number([amb.hyperplane()], curve)

    def test_inhomogeneous_tail_rejected(self):
        amb = AmbientScroll(9, 4)
        tail = ChowClass(amb, {(1, 0): 1, (2, 0): 1})
        with pytest.raises(DomainError, match="homogeneous"):
            intersect_number([amb.hyperplane()], tail)

    def test_zero_tail_gives_zero(self):
        amb = AmbientScroll(9, 4)
        assert intersect_number([amb.hyperplane()], ChowClass(amb)) == 0


def test_repr_is_readable():
    amb = AmbientScroll(5, 3)
    assert repr(ChowClass(amb, {(1, 0): 3, (0, 1): -1})) == "3*D - f"
    assert repr(ChowClass(amb)) == "0"
    assert repr(amb.unit()) == "1"
