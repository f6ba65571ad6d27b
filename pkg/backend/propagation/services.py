import math

import numpy as np
from django.core.exceptions import ValidationError

from bloch.constants import DEFAULT_BASE_VECTOR, GROUP_TOLERANCE, TAU
from bloch.exceptions import DegenerateRotationError, NormViolationError
from bloch.services import (angle_distance, cartesian_to_spherical,
                            require_unit, spherical_angles)
from bloch.types import CartesianVector, EulerAngles
from rotations.services import (euler_entries, euler_matrix, rotate_euler,
                                rotate_su2, su2_from_euler, trajectory)
from rotations.types import RotationMatrix3

from .types import ErrorSeries, Generator3, Pipeline

DEFAULT_BASE = CartesianVector(*DEFAULT_BASE_VECTOR)
SQRT5 = math.sqrt(5)
NEAR_HALF_TURN = -0.9


def rotation_rate(angles):
    return angles.phi + angles.psi


def angular_frequency(angles):
    return math.hypot(angles.theta, rotation_rate(angles))


def _apply(row, entries):
    return tuple(
        row[0] * entries[0][j]
        + row[1] * entries[1][j]
        + row[2] * entries[2][j]
        for j in range(3)
    )


def _sin_ratio(omega, t):
    if omega == 0:
        return t
    return math.sin(omega * t) / omega


def _cos_ratio(omega, t):
    if omega == 0:
        return t * t / 2
    return 2 * math.sin(omega * t / 2) ** 2 / omega ** 2


def _limit_entries(t, theta, rate):
    omega = math.hypot(theta, rate)
    sr = _sin_ratio(omega, t)
    cr = _cos_ratio(omega, t)
    return (
        (math.cos(omega * t), -rate * sr, theta * sr),
        (rate * sr, 1 - rate ** 2 * cr, theta * rate * cr),
        (-theta * sr, theta * rate * cr, 1 - theta ** 2 * cr),
    )


def _limit_array(ts, angles):
    """``S_P`` for every time in ``ts``; shape ``ts.shape + (3, 3)``."""
    ts = np.asarray(ts, dtype=float)
    theta = angles.theta
    rate = rotation_rate(angles)
    omega = math.hypot(theta, rate)
    sr = ts * np.sinc(omega * ts / math.pi)
    cr = 0.5 * (ts * np.sinc(omega * ts / TAU)) ** 2
    matrices = np.empty(ts.shape + (3, 3))
    matrices[..., 0, 0] = np.cos(omega * ts)
    matrices[..., 0, 1] = -rate * sr
    matrices[..., 0, 2] = theta * sr
    matrices[..., 1, 0] = rate * sr
    matrices[..., 1, 1] = 1 - rate ** 2 * cr
    matrices[..., 1, 2] = theta * rate * cr
    matrices[..., 2, 0] = -theta * sr
    matrices[..., 2, 1] = theta * rate * cr
    matrices[..., 2, 2] = 1 - theta ** 2 * cr
    return matrices


def _flow_array(ts, matrix):
    """``exp(t K)`` for every time in ``ts`` and an antisymmetric ``K``."""
    ts = np.asarray(ts, dtype=float)[..., np.newaxis, np.newaxis]
    omega = math.hypot(matrix[2, 1], matrix[0, 2], matrix[1, 0])
    sr = ts * np.sinc(omega * ts / math.pi)
    cr = 0.5 * (ts * np.sinc(omega * ts / TAU)) ** 2
    return np.eye(3) + sr * matrix + cr * (matrix @ matrix)


def _cross_matrix(axis):
    x, y, z = axis
    return np.array(((0.0, -z, y), (z, 0.0, -x), (-y, x, 0.0)))


def delta_pair(w, w_err):
    """Wrapped azimuth and elevation discrepancies of two vectors."""
    for vector in (w, w_err):
        if not vector.norm:
            raise NormViolationError('Нулевой вектор не имеет направления')
    first = cartesian_to_spherical(w)
    second = cartesian_to_spherical(w_err)
    return (
        float(angle_distance(first.phi_az, second.phi_az)),
        float(angle_distance(first.theta_el, second.theta_el)),
    )


def _delta_arrays(points, err_points):
    theta, phi = spherical_angles(points)
    theta_err, phi_err = spherical_angles(err_points)
    return angle_distance(phi, phi_err), angle_distance(theta, theta_err)


def poisoned_vector(base, err, pipeline=Pipeline.EULER):
    if pipeline == Pipeline.SU2:
        return rotate_su2(base, su2_from_euler(err.as_euler()))
    return CartesianVector(*_apply(tuple(base), euler_entries(*err)))


def sp_general(t, angles):
    """Limit matrix ``S_P(t)`` of successive infinitesimal Euler rotations.

    Evaluated in real form: ``cosh(t sqrt(-w^2))`` is ``cos(w t)`` and
    ``sinh(t sqrt(-w^2)) / sqrt(-w^2)`` is ``sin(w t) / w`` with
    ``w = sqrt(theta^2 + (phi + psi)^2)``. At ``w = 0`` the matrix is the
    identity.
    """
    return RotationMatrix3(
        _limit_entries(t, angles.theta, rotation_rate(angles))
    )


def sp_special(t):
    c = math.cos(SQRT5 * t)
    s = math.sin(SQRT5 * t) / SQRT5
    return RotationMatrix3((
        (c, -2 * s, s),
        (2 * s, (4 * c + 1) / 5, -2 * (c - 1) / 5),
        (-s, -2 * (c - 1) / 5, (c + 4) / 5),
    ))


def limit_convergence_check(t, angles, s):
    """Frobenius distance between ``S(angles t / s)^s`` and the limit.

    The Euler matrix acts on row vectors, so its flow runs backwards in
    the limit parameter: the power converges to ``S_P(-t)``.
    """
    if s < 1:
        raise ValidationError('Число шагов должно быть положительным')
    step = euler_matrix(angles.scaled(t / s)).as_array()
    power = np.linalg.matrix_power(step, s)
    return float(np.linalg.norm(power - _limit_array(-t, angles), 'fro'))


def generator(angles):
    rate = rotation_rate(angles)
    theta = angles.theta
    return Generator3((
        (0.0, -rate, theta),
        (rate, 0.0, 0.0),
        (-theta, 0.0, 0.0),
    ))


def generator_eigenvalues(angles):
    omega = angular_frequency(angles)
    return 0j, complex(0, omega), complex(0, -omega)


def period(angles):
    omega = angular_frequency(angles)
    if omega == 0:
        raise DegenerateRotationError(
            'Вращение вырождено (theta = 0 и phi + psi = 0): '
            'период не определён'
        )
    return TAU / omega


def matrix_exp_generator(j, t):
    """``exp(t J)`` by the Rodrigues formula."""
    matrix = j.as_array()
    if np.max(np.abs(matrix + matrix.T)) > GROUP_TOLERANCE:
        raise ValidationError('Генератор должен быть антисимметричным')
    axis = np.array((matrix[2, 1], matrix[0, 2], matrix[1, 0]))
    omega = float(np.linalg.norm(axis))
    return RotationMatrix3.from_array(
        np.eye(3)
        + _sin_ratio(omega, t) * matrix
        + _cos_ratio(omega, t) * matrix @ matrix
    )


def step_generator(step):
    """Generator whose flow at time ``-i`` is exactly ``S(step)^i``.

    Inverts Rodrigues on the step matrix. For ``phi = psi`` the axis has
    no x component, so the result has the shape of ``generator``.
    """
    matrix = euler_matrix(step).as_array()
    skew = (matrix - matrix.T) / 2
    sin_axis = np.array((skew[2, 1], skew[0, 2], skew[1, 0]))
    cos_omega = (np.trace(matrix) - 1) / 2
    omega = math.atan2(float(np.linalg.norm(sin_axis)), cos_omega)
    if cos_omega > NEAR_HALF_TURN:
        log = skew / np.sinc(omega / math.pi)
    else:
        outer = ((matrix + matrix.T) / 2 - cos_omega * np.eye(3)) / (
            1 - cos_omega
        )
        column = int(np.argmax(np.diag(outer)))
        axis = outer[:, column] / math.sqrt(outer[column, column])
        if axis @ sin_axis < 0:
            axis = -axis
        log = omega * _cross_matrix(axis)
    return Generator3.from_array(-log)


def delta_closed_form(err, t, angles, base=DEFAULT_BASE):
    entries = _limit_entries(t, angles.theta, rotation_rate(angles))
    row = tuple(base)
    err_row = _apply(row, euler_entries(*err))
    return delta_pair(
        CartesianVector(*_apply(row, entries)),
        CartesianVector(*_apply(err_row, entries)),
    )


def delta_curve(err, ts, angles, base=DEFAULT_BASE):
    """``delta_closed_form`` over an array of times as ``(az, el)``."""
    matrices = _limit_array(ts, angles)
    err_row = np.array(_apply(tuple(base), euler_entries(*err)))
    return _delta_arrays(base.as_array() @ matrices, err_row @ matrices)


def closed_form_series(err, angles, ts, base=DEFAULT_BASE):
    delta_az, delta_el = delta_curve(err, ts, angles, base)
    return ErrorSeries.from_arrays(ts, delta_az, delta_el)


def _points(vectors):
    return np.array([vector.as_array() for vector in vectors])


def simulate(v, v_err, step, steps, pipeline=Pipeline.EULER):
    """Discrepancies after ``i`` synchronous rotations, ``i = 0..steps``.

    The limit pipeline samples the flow of ``step_generator(step)`` at
    ``-i``, which passes through the Euler iterates.
    """
    require_unit(v, 'Исходный вектор')
    require_unit(v_err, 'Искажённый вектор')
    if steps < 0:
        raise ValidationError('Число шагов не может быть отрицательным')
    index = np.arange(steps + 1, dtype=float)
    if pipeline == Pipeline.CLOSED:
        matrices = _flow_array(-index, step_generator(step).as_array())
        points = v.as_array() @ matrices
        err_points = v_err.as_array() @ matrices
    else:
        if pipeline == Pipeline.SU2:
            unitary = su2_from_euler(step)

            def rotate(vector):
                return rotate_su2(vector, unitary)
        else:
            matrix = euler_matrix(step)

            def rotate(vector):
                return rotate_euler(vector, matrix)
        points = _points(trajectory(v, rotate, steps))
        err_points = _points(trajectory(v_err, rotate, steps))
    delta_az, delta_el = _delta_arrays(points, err_points)
    return ErrorSeries.from_arrays(index, delta_az, delta_el)


def discrete_delta(err, t, s, base=DEFAULT_BASE):
    """Discrepancies after ``t`` rotations by ``S(2pi/s, 2pi/s, 2pi/s)``."""
    if s < 1 or t < 0:
        raise ValidationError(
            'Нужны s >= 1 и неотрицательное число поворотов t'
        )
    step = 2 * math.pi / s
    power = np.linalg.matrix_power(
        euler_matrix(EulerAngles(step, step, step)).as_array(), t
    )
    err_row = np.array(_apply(tuple(base), euler_entries(*err)))
    return delta_pair(
        CartesianVector.from_array(base.as_array() @ power),
        CartesianVector.from_array(err_row @ power),
    )
