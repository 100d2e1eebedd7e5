"""Tests for scroll classification and its distinguished classes."""

import pytest

from gonal.chow import AmbientScroll, intersect_number
from gonal.errors import DomainError, UnsupportedError
from gonal.hirzebruch import FeBundle
from gonal.scroll import (
    ScrollSpec,
    aut_group_numerics,
    canonical_class,
    curve_class,
    generic_scroll,
    hyperplane_in_c0_f_basis,
    validate_scroll,
)


class TestGenericScroll:
    def test_trigonal_odd_genus(self):
        spec = generic_scroll(5, 3)
        assert spec.splitting == (0, 1)
        assert spec.generic_type == 1
        assert spec.big_n == 1

    def test_trigonal_even_genus(self):
        spec = generic_scroll(6, 3)
        assert spec.splitting == (0, 0)
        assert spec.generic_type == 0

    def test_tetragonal(self):
        assert generic_scroll(9, 4).splitting == (0, 0, 0)

    def test_always_valid(self):
        for n in range(3, 7):
            for g in range(2 * n - 1, 41):
                spec = generic_scroll(g, n)
                assert validate_scroll(spec.splitting, g, n)
                assert spec.is_generic

    def test_range_violation(self):
        with pytest.raises(DomainError):
            generic_scroll(4, 3)


class TestValidateScroll:
    def test_examples(self):
        assert validate_scroll((0, 1), 5, 3) is True
        assert validate_scroll((0, 3), 5, 3) is False  # N = 3 not < g-n+1 = 3
        assert validate_scroll((0, 0), 5, 3) is False  # 0 != 5 mod 2

    def test_spec_constructor_rejects_invalid(self):
        with pytest.raises(DomainError):
            ScrollSpec(AmbientScroll(5, 3), (0, 3))
        with pytest.raises(DomainError):
            ScrollSpec(AmbientScroll(5, 3), (1, 1))  # not normalized
        with pytest.raises(DomainError):
            ScrollSpec(AmbientScroll(5, 3), (0, 1, 0))  # wrong length, unsorted


class TestShift:
    def test_non_negative_integer_on_generic(self):
        for n in range(3, 7):
            for g in range(2 * n - 1, 61):
                spec = generic_scroll(g, n)
                assert (g - spec.big_n) % (n - 1) == 0
                assert spec.shift >= 0


class TestCanonicalClass:
    @pytest.mark.parametrize(
        "g,n,expected",
        [(5, 3, (-2, 1)), (9, 4, (-3, 4)), (6, 3, (-2, 2))],
    )
    def test_examples(self, g, n, expected):
        kx = canonical_class(generic_scroll(g, n))
        assert (kx.d, kx.f) == expected


class TestCurveClass:
    def test_trigonal(self):
        assert curve_class(generic_scroll(5, 3)).coefficients == {(1, 0): 3, (0, 1): -1}
        assert curve_class(generic_scroll(6, 3)).coefficients == {(1, 0): 3, (0, 1): -2}

    def test_tetragonal(self):
        curve = curve_class(generic_scroll(9, 4))
        assert curve.coefficients == {(2, 0): 4, (1, 1): -8}
        amb = curve.ambient
        assert intersect_number([amb.fiber()], curve) == 4
        assert intersect_number([amb.hyperplane()], curve) == 16

    def test_pairings_on_grid(self):
        for n in range(3, 7):
            for g in range(2 * n - 1, 41):
                spec = generic_scroll(g, n)
                curve = curve_class(spec)
                amb = spec.ambient
                assert intersect_number([amb.fiber()], curve) == n
                assert intersect_number([amb.hyperplane()], curve) == 2 * g - 2

    def test_euler_pairing_rearranged(self):
        for n in range(3, 6):
            for g in range(2 * n - 1, 41):
                spec = generic_scroll(g, n)
                minus_k_dot_c = intersect_number([-canonical_class(spec)], curve_class(spec))
                assert minus_k_dot_c == n * n + 1 - g - (n - 1) * (1 - g)


class TestAutNumerics:
    def test_examples(self):
        a = aut_group_numerics(generic_scroll(5, 3))
        assert (a.total_dim, a.vertical_dim, a.components) == (6, 3, 1)
        a = aut_group_numerics(generic_scroll(6, 3))
        assert (a.total_dim, a.vertical_dim, a.components) == (6, 3, 2)
        a = aut_group_numerics(generic_scroll(9, 4))
        assert (a.total_dim, a.vertical_dim, a.components) == (11, 8, 1)

    def test_two_components_only_for_quadric(self):
        for n in range(3, 7):
            for g in range(2 * n - 1, 30):
                a = aut_group_numerics(generic_scroll(g, n))
                assert a.components == (2 if n == 3 and g % 2 == 0 else 1)
                assert a.generic

    def test_non_generic_splitting_flagged(self):
        # (g, n) = (11, 4): N must be 2 mod 3 and < 8, so (0, 1, 4) works
        spec = ScrollSpec(AmbientScroll(11, 4), (0, 1, 4))
        assert not spec.is_generic
        a = aut_group_numerics(spec)
        assert a.components == 1
        assert not a.generic


class TestHyperplaneSurfaceBasis:
    def test_even_genus(self):
        assert hyperplane_in_c0_f_basis(generic_scroll(6, 3)) == (1, 2)

    def test_odd_genus(self):
        assert hyperplane_in_c0_f_basis(generic_scroll(5, 3)) == (1, 2)

    def test_self_intersection_matches_scroll_degree(self):
        # D = C_0 + m f has D^2 = g - 2 on the surface
        for g in range(5, 20):
            c0, m = hyperplane_in_c0_f_basis(generic_scroll(g, 3))
            d = FeBundle(g % 2, c0, m)
            assert d.intersect(d) == g - 2

    def test_higher_gonality_unsupported(self):
        with pytest.raises(UnsupportedError):
            hyperplane_in_c0_f_basis(generic_scroll(9, 4))
