import math

import numpy as np
import pytest
from django.core.exceptions import ValidationError
from hypothesis import given
from hypothesis import strategies as st

from bloch.exceptions import (AngleExpressionError, HermiticityError,
                              NormViolationError)
from bloch.expressions import parse_angle, parse_triple
from bloch.services import (angle_distance, cartesian_to_spherical,
                            matrix_to_cartesian, qubit_to_matrix,
                            spherical_angles, spherical_to_cartesian)
from bloch.types import CartesianVector, QubitMatrix, SphericalCoords

from .strategies import finite, unit_vectors

FOOTNOTE_VECTOR = CartesianVector(math.cos(0.2), 0.0, -math.sin(0.2))


@pytest.mark.parametrize('vector, expected', [
    (CartesianVector(1.0, 0.0, 0.0), (1.0, math.pi / 2, 0.0)),
    (CartesianVector(0.0, 0.0, 1.0), (1.0, 0.0, 0.0)),
    (FOOTNOTE_VECTOR, (1.0, math.pi / 2 + 0.2, 0.0)),
    (CartesianVector(0.0, 1.0, 0.0), (1.0, math.pi / 2, math.pi / 2)),
    (CartesianVector(0.0, 0.0, -2.0), (2.0, math.pi, 0.0)),
])
def test_cartesian_to_spherical(vector, expected):
    assert tuple(cartesian_to_spherical(vector)) == pytest.approx(
        expected, abs=1e-12
    )


def test_zero_vector_has_zero_coordinates():
    assert tuple(cartesian_to_spherical(CartesianVector(0.0, 0.0, 0.0))) == (
        0.0, 0.0, 0.0
    )


def test_negative_x_axis_azimuth_is_pi_not_minus_pi():
    coords = cartesian_to_spherical(CartesianVector(-1.0, -0.0, 0.0))
    assert coords.phi_az == math.pi


def test_pole_azimuth_is_zero_below_threshold():
    coords = cartesian_to_spherical(CartesianVector(1e-13, 1e-13, 1.0))
    assert coords.phi_az == 0.0


@pytest.mark.parametrize('coords, expected', [
    (SphericalCoords(1.0, math.pi / 2, 0.0), (1.0, 0.0, 0.0)),
    (SphericalCoords(1.0, 0.0, 1.234), (0.0, 0.0, 1.0)),
    (SphericalCoords(1.0, math.pi / 2 + 0.2, 0.0), tuple(FOOTNOTE_VECTOR)),
])
def test_spherical_to_cartesian(coords, expected):
    assert tuple(spherical_to_cartesian(coords)) == pytest.approx(
        expected, abs=1e-12
    )


def test_spherical_angles_matches_scalar_conversion(rng):
    points = rng.normal(size=(50, 3))
    theta, phi = spherical_angles(points)
    for point, theta_el, phi_az in zip(points, theta, phi):
        coords = cartesian_to_spherical(CartesianVector.from_array(point))
        assert theta_el == pytest.approx(coords.theta_el, abs=1e-15)
        assert phi_az == pytest.approx(coords.phi_az, abs=1e-15)


@given(unit_vectors())
def test_spherical_round_trip(vector):
    restored = spherical_to_cartesian(cartesian_to_spherical(vector))
    assert np.allclose(restored.as_array(), vector.as_array(), atol=1e-12)


@pytest.mark.parametrize('vector, expected', [
    (CartesianVector(0.0, 0.0, 1.0), ((1, 0), (0, -1))),
    (CartesianVector(1.0, 0.0, 0.0), ((0, 1), (1, 0))),
    (CartesianVector(0.0, 1.0, 0.0), ((0, -1j), (1j, 0))),
])
def test_qubit_to_matrix_gives_pauli_matrices(vector, expected):
    assert np.allclose(qubit_to_matrix(vector).as_array(), expected)


def test_qubit_to_matrix_rejects_non_unit_vector():
    with pytest.raises(NormViolationError):
        qubit_to_matrix(CartesianVector(1.0, 1.0, 0.0))


def test_norm_violation_is_a_validation_error():
    assert issubclass(NormViolationError, ValidationError)


@given(unit_vectors())
def test_qubit_matrix_is_hermitian_traceless_with_unit_eigenvalues(vector):
    matrix = qubit_to_matrix(vector).as_array()
    assert np.allclose(matrix, matrix.conj().T, atol=1e-12)
    assert abs(np.trace(matrix)) < 1e-12
    assert np.allclose(
        np.sort(np.linalg.eigvalsh(matrix)), (-1.0, 1.0), atol=1e-9
    )


@given(unit_vectors())
def test_qubit_matrix_round_trip(vector):
    restored = matrix_to_cartesian(qubit_to_matrix(vector))
    assert np.allclose(restored.as_array(), vector.as_array(), atol=1e-12)


@pytest.mark.parametrize('matrix, expected', [
    (QubitMatrix(1, 0, 0, -1), (0.0, 0.0, 1.0)),
    (QubitMatrix(0, 1, 1, 0), (1.0, 0.0, 0.0)),
    (QubitMatrix(0, -1j, 1j, 0), (0.0, 1.0, 0.0)),
])
def test_matrix_to_cartesian(matrix, expected):
    assert tuple(matrix_to_cartesian(matrix)) == pytest.approx(expected)


@pytest.mark.parametrize('matrix', [
    QubitMatrix(0, 1, 2, 0),
    QubitMatrix(1j, 0, 0, -1j),
    QubitMatrix(1, 0, 0, 1),
])
def test_matrix_to_cartesian_rejects_invalid_matrix(matrix):
    with pytest.raises(HermiticityError):
        matrix_to_cartesian(matrix)


@pytest.mark.parametrize('first, second, expected', [
    (0.0, 2 * math.pi, 0.0),
    (-3.0, 3.0, 2 * math.pi - 6.0),
    (0.0, math.pi, math.pi),
    (0.1, -0.1, 0.2),
])
def test_angle_distance(first, second, expected):
    assert angle_distance(first, second) == pytest.approx(expected, abs=1e-12)


@given(finite, finite)
def test_angle_distance_is_symmetric_and_bounded(first, second):
    distance = angle_distance(first, second)
    assert distance == angle_distance(second, first)
    assert 0.0 <= distance <= math.pi


@given(finite, finite, st.integers(min_value=-5, max_value=5))
def test_angle_distance_ignores_full_turns(first, second, turns):
    shifted = first + 2 * math.pi * turns
    assert angle_distance(shifted, second) == pytest.approx(
        angle_distance(first, second), abs=1e-9
    )


@given(finite, finite, finite)
def test_angle_distance_triangle_inequality(first, second, third):
    assert angle_distance(first, third) <= (
        angle_distance(first, second) + angle_distance(second, third) + 1e-12
    )


@pytest.mark.parametrize('text, expected', [
    ('pi', math.pi),
    ('e', math.e),
    ('PI', math.pi),
    ('pi/100', math.pi / 100),
    ('2pi/5', 2 * math.pi / 5),
    ('sqrt(2/13)*pi', math.sqrt(2 / 13) * math.pi),
    ('2*pi/sqrt(pi^2+(e+3)^2)',
     2 * math.pi / math.sqrt(math.pi ** 2 + (math.e + 3) ** 2)),
    ('-pi/2', -math.pi / 2),
    ('--1', 1.0),
    ('2^3^2', 512.0),
    ('1e-3', 1e-3),
    (' 0.2 ', 0.2),
    ('3 - 2 - 1', 0.0),
    ('8 / 4 / 2', 1.0),
])
def test_parse_angle(text, expected):
    assert parse_angle(text) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize('text', [
    '', 'foo', 'pi/0', 'sqrt(-1)', '1e999', '2**3', 'pi pi',
])
def test_parse_angle_rejects_invalid_expression(text):
    with pytest.raises(AngleExpressionError):
        parse_angle(text)


def test_parse_triple():
    assert parse_triple('pi/100, pi/100, 0') == pytest.approx(
        (math.pi / 100, math.pi / 100, 0.0)
    )


@pytest.mark.parametrize('text', ['1,2', '1,2,3,4', '1,,2'])
def test_parse_triple_requires_three_values(text):
    with pytest.raises(AngleExpressionError):
        parse_triple(text)
