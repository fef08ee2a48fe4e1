"""Basis expansion for the six model families."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curfit import (
    BasisOverflowError,
    DomainError,
    FamilyConfig,
    ModelFamily,
    basis_dimension,
    design_matrix,
    expand_basis,
)

finite_floats = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)
positive_floats = st.floats(min_value=1e-3, max_value=50.0)


def cfg(family, order=2):
    return FamilyConfig(family, order)


class TestConfig:
    @pytest.mark.parametrize("order", [0, -1, 11, 99])
    def test_order_out_of_range(self, order):
        with pytest.raises(ValueError):
            FamilyConfig(ModelFamily.POLYNOMIAL, order)

    @pytest.mark.parametrize("order", [1, 2, 10])
    def test_order_in_range(self, order):
        assert FamilyConfig(ModelFamily.POLYNOMIAL, order).order == order


class TestDimensions:
    @pytest.mark.parametrize(
        "family,c,expected",
        [
            (ModelFamily.SIMPLE, 1, 2),
            (ModelFamily.SIMPLE, 5, 2),
            (ModelFamily.MULTIPLE, 3, 4),
            (ModelFamily.POLYNOMIAL, 1, 3),
            (ModelFamily.POLYNOMIAL, 4, 3),
            (ModelFamily.LOGARITHMIC, 2, 3),
            (ModelFamily.EXPONENTIAL, 4, 5),
            (ModelFamily.SINUSOIDAL, 1, 3),
            (ModelFamily.SINUSOIDAL, 6, 3),
        ],
    )
    def test_basis_dimension(self, family, c, expected):
        assert basis_dimension(cfg(family), c) == expected

    def test_polynomial_dimension_tracks_order(self):
        assert basis_dimension(cfg(ModelFamily.POLYNOMIAL, order=7), 1) == 8


class TestExpansion:
    # [DERIVED] hand-expanded rows
    def test_simple(self):
        np.testing.assert_array_equal(
            expand_basis(cfg(ModelFamily.SIMPLE), [3.0]), [1.0, 3.0]
        )

    def test_multiple(self):
        np.testing.assert_array_equal(
            expand_basis(cfg(ModelFamily.MULTIPLE), [3.0, -2.0]), [1.0, 3.0, -2.0]
        )

    def test_polynomial_order_3_on_2(self):
        np.testing.assert_array_equal(
            expand_basis(cfg(ModelFamily.POLYNOMIAL, order=3), [2.0]),
            [1.0, 2.0, 4.0, 8.0],
        )

    def test_logarithmic(self):
        out = expand_basis(cfg(ModelFamily.LOGARITHMIC), [math.e, 1.0])
        np.testing.assert_allclose(out, [1.0, 1.0, 0.0], atol=1e-15)

    def test_exponential(self):
        out = expand_basis(cfg(ModelFamily.EXPONENTIAL), [0.0, 1.0])
        np.testing.assert_allclose(out, [1.0, 1.0, math.e], rtol=1e-15)

    def test_sinusoidal_at_zero(self):
        np.testing.assert_allclose(
            expand_basis(cfg(ModelFamily.SINUSOIDAL), [0.0]), [1.0, 0.0, 1.0]
        )

    @pytest.mark.parametrize(
        "family", [ModelFamily.SIMPLE, ModelFamily.POLYNOMIAL, ModelFamily.SINUSOIDAL]
    )
    def test_single_variable_families_ignore_later_columns(self, family):
        a = expand_basis(cfg(family), [2.0, 99.0, -7.0])
        b = expand_basis(cfg(family), [2.0, 0.0, 123.0])
        np.testing.assert_array_equal(a, b)

    def test_design_matrix_shape(self):
        x = np.arange(12.0).reshape(6, 2) + 1.0
        for family in ModelFamily:
            z = design_matrix(cfg(family), x)
            assert z.shape == (6, basis_dimension(cfg(family), 2))

    def test_design_matrix_rejects_1d(self):
        with pytest.raises(ValueError):
            design_matrix(cfg(ModelFamily.SIMPLE), np.array([1.0, 2.0]))


class TestDomains:
    @pytest.mark.parametrize("bad", [0.0, -1.0])
    def test_log_rejects_nonpositive(self, bad):
        with pytest.raises(DomainError):
            expand_basis(cfg(ModelFamily.LOGARITHMIC), [bad, 2.0])

    def test_exp_overflow(self):
        with pytest.raises(BasisOverflowError):
            expand_basis(cfg(ModelFamily.EXPONENTIAL), [1000.0])

    def test_polynomial_overflow(self):
        with pytest.raises(BasisOverflowError):
            expand_basis(cfg(ModelFamily.POLYNOMIAL, order=10), [1e100])

    def test_exp_large_but_finite_ok(self):
        out = expand_basis(cfg(ModelFamily.EXPONENTIAL), [700.0])
        assert np.isfinite(out).all()


class TestInvariants:
    @settings(max_examples=80, deadline=None)
    @given(row=st.lists(positive_floats, min_size=1, max_size=6))
    def test_leading_one_and_length(self, row):
        for family in ModelFamily:
            out = expand_basis(cfg(family), row)
            assert out[0] == 1.0
            assert len(out) == basis_dimension(cfg(family), len(row))

    @settings(max_examples=80, deadline=None)
    @given(x=finite_floats)
    def test_simple_equals_multiple_on_one_feature(self, x):
        a = expand_basis(cfg(ModelFamily.SIMPLE), [x])
        b = expand_basis(cfg(ModelFamily.MULTIPLE), [x])
        np.testing.assert_array_equal(a, b)

    @settings(max_examples=80, deadline=None)
    @given(x=finite_floats)
    def test_polynomial_order_1_equals_simple(self, x):
        a = expand_basis(cfg(ModelFamily.POLYNOMIAL, order=1), [x])
        b = expand_basis(cfg(ModelFamily.SIMPLE), [x])
        np.testing.assert_array_equal(a, b)

    @settings(max_examples=40, deadline=None)
    @given(row=st.lists(finite_floats, min_size=1, max_size=4))
    def test_purity(self, row):
        first = expand_basis(cfg(ModelFamily.SINUSOIDAL), row)
        second = expand_basis(cfg(ModelFamily.SINUSOIDAL), row)
        np.testing.assert_array_equal(first, second)
