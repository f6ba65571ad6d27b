import math

import numpy as np

from .constants import POLE_TOLERANCE, TAU, VALIDATION_TOLERANCE
from .exceptions import HermiticityError, NormViolationError
from .types import CartesianVector, QubitMatrix, SphericalCoords


def cartesian_to_spherical(vector):
    x, y, z = vector
    hxy = math.hypot(x, y)
    r = math.hypot(hxy, z)
    theta_el = math.atan2(hxy, z)
    if hxy < POLE_TOLERANCE:
        return SphericalCoords(r, theta_el, 0.0)
    phi_az = math.atan2(y, x)
    if phi_az == -math.pi:
        phi_az = math.pi
    return SphericalCoords(r, theta_el, phi_az)


def spherical_angles(points):
    """Vectorised (theta_el, phi_az) for an ``(..., 3)`` array of points."""
    points = np.asarray(points, dtype=float)
    x, y, z = points[..., 0], points[..., 1], points[..., 2]
    hxy = np.hypot(x, y)
    theta_el = np.arctan2(hxy, z)
    phi_az = np.where(hxy < POLE_TOLERANCE, 0.0, np.arctan2(y, x))
    phi_az = np.where(phi_az == -np.pi, np.pi, phi_az)
    return theta_el, phi_az


def spherical_to_cartesian(coords):
    r, theta_el, phi_az = coords
    return CartesianVector(
        r * math.sin(theta_el) * math.cos(phi_az),
        r * math.sin(theta_el) * math.sin(phi_az),
        r * math.cos(theta_el),
    )


def require_unit(vector, name='Вектор'):
    norm = vector.norm
    if abs(norm - 1.0) > VALIDATION_TOLERANCE:
        raise NormViolationError(
            f'{name} должен иметь единичную норму, получено {norm!r}'
        )
    return vector


def qubit_to_matrix(vector):
    require_unit(vector, 'Кубит')
    x, y, z = vector
    return QubitMatrix(complex(z), complex(x, -y), complex(x, y), complex(-z))


def matrix_to_cartesian(matrix):
    m11, m12, m21, m22 = matrix.m11, matrix.m12, matrix.m21, matrix.m22
    if (
        abs(m12 - m21.conjugate()) > VALIDATION_TOLERANCE
        or abs(m11.imag) > VALIDATION_TOLERANCE
        or abs(m22.imag) > VALIDATION_TOLERANCE
        or abs(m11 + m22) > VALIDATION_TOLERANCE
    ):
        raise HermiticityError(
            'Матрица кубита должна быть эрмитовой и бесследовой'
        )
    return CartesianVector(
        ((m12 + m21) / 2).real,
        ((m21 - m12) / 2j).real,
        m11.real,
    )


def angle_distance(first, second):
    """Shorter arc between two angles, in [0, pi]; works on arrays too."""
    difference = np.abs(np.subtract(first, second)) % TAU
    return np.minimum(difference, TAU - difference)
