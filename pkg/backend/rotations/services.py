import cmath
import math

import numpy as np

from bloch.constants import VALIDATION_TOLERANCE
from bloch.exceptions import NormViolationError
from bloch.services import matrix_to_cartesian, qubit_to_matrix
from bloch.types import CartesianVector, EulerAngles, QubitMatrix

from .types import Axis, RotationMatrix3, SU2Matrix

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI = (
    np.array(((0, 1), (1, 0)), dtype=complex),
    np.array(((0, -1j), (1j, 0)), dtype=complex),
    np.array(((1, 0), (0, -1)), dtype=complex),
)
BASIS = (
    CartesianVector(1.0, 0.0, 0.0),
    CartesianVector(0.0, 1.0, 0.0),
    CartesianVector(0.0, 0.0, 1.0),
)
ROTATION_ALBUM = (
    EulerAngles(0.0, 0.0, math.pi / 8),
    EulerAngles(0.0, 0.0, -math.pi / 8),
    EulerAngles(0.0, math.pi / 8, 0.0),
    EulerAngles(0.0, -math.pi / 8, 0.0),
    EulerAngles(0.0, math.pi / 8, math.pi / 8),
    EulerAngles(0.0, -math.pi / 8, -math.pi / 8),
)
ALBUM_STEPS = 8
DIAGONAL_AXIS = Axis.from_direction(1.0, 1.0, 1.0)
DIAGONAL_ANGLE = math.pi / 8
DIAGONAL_STEPS = 16


def su2_from_euler(angles):
    phi, theta, psi = angles
    cos_half = math.cos(theta / 2)
    sin_half = math.sin(theta / 2)
    return SU2Matrix(
        cmath.exp(-0.5j * (phi + psi)) * cos_half,
        -cmath.exp(-0.5j * (phi - psi)) * sin_half,
        cmath.exp(0.5j * (phi - psi)) * sin_half,
        cmath.exp(0.5j * (phi + psi)) * cos_half,
    )


def su2_from_axis(axis, angle):
    norm = float(np.linalg.norm(axis.as_array()))
    if abs(norm - 1.0) > VALIDATION_TOLERANCE:
        raise NormViolationError(
            f'Ось вращения должна иметь единичную норму, получено {norm!r}'
        )
    n_sigma = sum(
        component * pauli for component, pauli in zip(axis, PAULI)
    )
    return SU2Matrix.from_array(
        IDENTITY_2 * math.cos(angle / 2)
        - 1j * n_sigma * math.sin(angle / 2)
    )


def rotate_su2(vector, unitary):
    """Conjugate the qubit matrix: ``M' = U M U^dagger``."""
    matrix = qubit_to_matrix(vector).as_array()
    u = unitary.as_array()
    rotated = QubitMatrix.from_array(u @ matrix @ u.conj().T)
    return matrix_to_cartesian(rotated)


def z_factor(angle):
    c, s = math.cos(angle), math.sin(angle)
    return RotationMatrix3(((c, s, 0.0), (-s, c, 0.0), (0.0, 0.0, 1.0)))


def y_factor(angle):
    c, s = math.cos(angle), math.sin(angle)
    return RotationMatrix3(((c, 0.0, -s), (0.0, 1.0, 0.0), (s, 0.0, c)))


def euler_factors(angles):
    """The three factors ``(S3(psi), S2(theta), S1(phi))``."""
    return z_factor(angles.psi), y_factor(angles.theta), z_factor(angles.phi)


def euler_entries(phi, theta, psi):
    """Expanded product ``S3(psi) S2(theta) S1(phi)`` as nested tuples."""
    cf, sf = math.cos(phi), math.sin(phi)
    ct, st = math.cos(theta), math.sin(theta)
    cp, sp = math.cos(psi), math.sin(psi)
    return (
        (cp * ct * cf - sp * sf, cp * ct * sf + sp * cf, -cp * st),
        (-sp * ct * cf - cp * sf, -sp * ct * sf + cp * cf, sp * st),
        (st * cf, st * sf, ct),
    )


def euler_matrix(angles):
    """Euler matrix acting on row vectors: ``q' = q . S``."""
    return RotationMatrix3(euler_entries(*angles))


def rotate_euler(vector, matrix):
    return CartesianVector.from_array(vector.as_array() @ matrix.as_array())


def so3_from_su2(unitary):
    """Row-vector 3x3 matrix of the rotation induced by ``unitary``.

    Row ``i`` is the image of the i-th basis vector, so that
    ``rotate_euler(v, so3_from_su2(u)) == rotate_su2(v, u)``.
    """
    return RotationMatrix3.from_array(
        [rotate_su2(vector, unitary).as_array() for vector in BASIS]
    )


def trajectory(vector, rotate, steps):
    """Start point and the ``steps`` points ``rotate`` leads to."""
    points = [vector]
    for _ in range(steps):
        vector = rotate(vector)
        points.append(vector)
    return points


def euler_trajectory(vector, angles, steps):
    matrix = euler_matrix(angles)
    return trajectory(
        vector, lambda point: rotate_euler(point, matrix), steps
    )


def su2_trajectory(vector, unitary, steps):
    return trajectory(
        vector, lambda point: rotate_su2(point, unitary), steps
    )


def album_trajectories(vector, conjugate=True):
    """Labelled trajectories of the rotation album and the diagonal turn.

    Yields ``(label, title, points)``. With ``conjugate`` the steps go
    through SU(2), otherwise through the row-vector 3x3 matrices.
    """
    for number, angles in enumerate(ROTATION_ALBUM, start=1):
        if conjugate:
            points = su2_trajectory(
                vector, su2_from_euler(angles), ALBUM_STEPS
            )
        else:
            points = euler_trajectory(vector, angles, ALBUM_STEPS)
        title = (
            f'phi={angles.phi:.4g}, theta={angles.theta:.4g}, '
            f'psi={angles.psi:.4g}'
        )
        yield f'album_{number}', title, points
    unitary = su2_from_axis(DIAGONAL_AXIS, DIAGONAL_ANGLE)
    if conjugate:
        points = su2_trajectory(vector, unitary, DIAGONAL_STEPS)
    else:
        matrix = so3_from_su2(unitary)
        points = trajectory(
            vector, lambda point: rotate_euler(point, matrix), DIAGONAL_STEPS
        )
    yield 'diagonal', f'ось (1,1,1), шаг {DIAGONAL_ANGLE:.4g}', points
