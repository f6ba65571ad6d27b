import logging
import math

import numpy as np
from django.core.exceptions import ValidationError
from scipy import integrate, optimize

from bloch.constants import (CASE_NUM_STARTS, CONSTANT_SIGNAL_TOLERANCE,
                             DEFAULT_NUM_STARTS, DEFAULT_SEED,
                             FUNCTION_TOLERANCE, MAX_EVALUATIONS,
                             PERIOD_GRID_POINTS, PERIOD_MAX_DIVISOR,
                             PERIOD_MAX_MULTIPLE, PERIOD_REFINE_TOLERANCE,
                             PERIOD_REFINE_WINDOW, PERIOD_TOLERANCE,
                             QUAD_LIMIT, QUAD_TOLERANCE, SERIES_POINTS, TAU)
from bloch.exceptions import PeriodEstimationError, SearchFailedError
from bloch.types import EulerAngles
from propagation.services import (DEFAULT_BASE, angular_frequency,
                                  closed_form_series, delta_closed_form,
                                  delta_curve, period)
from propagation.types import ErrorAngles

from .types import (TARGET_INDEX, CaseReport, ExtremumResult, Mode,
                    PeriodEstimate, Target)

logger = logging.getLogger(__name__)

UNIT_ANGLES = EulerAngles(1.0, 1.0, 1.0)
SEARCH_DIMENSION = 4


def wrap_into_box(point, low, high):
    """Map every coordinate into ``[low, high)`` modulo the box width."""
    wrapped = low + np.mod(np.asarray(point, dtype=float) - low, high - low)
    return np.where(wrapped >= high, low, wrapped)


def _evaluate(target, point, angles, base):
    eps_x, eps_y, eps_z, t = point
    return delta_closed_form(
        ErrorAngles(eps_x, eps_y, eps_z), t, angles, base
    )[TARGET_INDEX[target]]


def find_extremum(
    target,
    mode,
    base_vector=DEFAULT_BASE,
    angles=UNIT_ANGLES,
    num_starts=DEFAULT_NUM_STARTS,
    seed=DEFAULT_SEED,
    max_evaluations=MAX_EVALUATIONS,
    search_box=(0.0, TAU),
):
    """Multi-start Nelder-Mead search over ``(eps_x, eps_y, eps_z, t)``.

    Start ``i`` draws its initial point from its own generator seeded with
    ``(seed, i)``, so the first ``n`` starts are the same for any
    ``num_starts >= n``. Starts that fail or end on a non-finite value are
    dropped.
    """
    target, mode = Target(target), Mode(mode)
    if num_starts < 1:
        raise ValidationError('Число стартов должно быть не меньше 1')
    low, high = search_box
    sign = -1.0 if mode == Mode.MAX else 1.0

    def objective(point):
        return sign * _evaluate(
            target, wrap_into_box(point, low, high), angles, base_vector
        )

    logger.info(
        'Поиск %s по %d стартам, seed=%d, углы %s',
        f'{mode.value}_{target.value}', num_starts, seed, tuple(angles),
    )
    best_value, best_at = None, None
    for index in range(num_starts):
        start = np.random.default_rng([seed, index]).uniform(
            low, high, SEARCH_DIMENSION
        )
        try:
            result = optimize.minimize(
                objective,
                start,
                method='Nelder-Mead',
                options={
                    'fatol': FUNCTION_TOLERANCE,
                    'xatol': FUNCTION_TOLERANCE,
                    'maxfev': max_evaluations,
                },
            )
            at = wrap_into_box(result.x, low, high)
            value = _evaluate(target, at, angles, base_vector)
        except (ArithmeticError, ValueError, ValidationError) as error:
            logger.warning('Старт %d отброшен: %s', index, error)
            continue
        if not math.isfinite(value):
            logger.warning('Старт %d отброшен: значение %r', index, value)
            continue
        if best_value is None or sign * value < sign * best_value:
            best_value, best_at = value, at
    if best_value is None:
        raise SearchFailedError('Ни один старт поиска не завершился')
    return ExtremumResult(
        target=target,
        mode=mode,
        value=float(best_value),
        at=tuple(float(component) for component in best_at),
        base_vector=base_vector,
        angles=angles,
        num_starts=num_starts,
        seed=seed,
    )


def time_averaged_error(
    target,
    err,
    angles,
    base_vector=DEFAULT_BASE,
    tolerance=QUAD_TOLERANCE,
):
    """Mean discrepancy over one period by adaptive quadrature."""
    index = TARGET_INDEX[Target(target)]
    length = period(angles)
    integral, estimate = integrate.quad(
        lambda t: delta_closed_form(err, t, angles, base_vector)[index],
        0.0,
        length,
        epsabs=tolerance * length,
        epsrel=0.0,
        limit=QUAD_LIMIT,
    )
    logger.debug(
        'Среднее по периоду %.6g: интеграл %.17g, оценка ошибки %.3g',
        length, integral, estimate,
    )
    return float(np.clip(integral / length, 0.0, math.pi))


def _period_candidates(analytic):
    divisors = [analytic / k for k in range(PERIOD_MAX_DIVISOR, 1, -1)]
    multiples = [analytic * k for k in range(1, PERIOD_MAX_MULTIPLE + 1)]
    return divisors + multiples


def estimate_period_numeric(target, err, angles, base_vector=DEFAULT_BASE):
    """Smallest shift among ``T/k`` and ``k T`` that reproduces the curve.

    A constant curve has every shift as a period; the analytic period is
    returned with ``degenerate`` set.
    """
    index = TARGET_INDEX[Target(target)]
    analytic = period(angles)
    grid = np.linspace(0.0, analytic, PERIOD_GRID_POINTS, endpoint=False)
    values = delta_curve(err, grid, angles, base_vector)[index]
    if np.ptp(values) < CONSTANT_SIGNAL_TOLERANCE:
        logger.info('Кривая постоянна, период берётся аналитический')
        return PeriodEstimate(analytic, True)

    def mismatch(shift):
        shifted = delta_curve(err, grid + shift, angles, base_vector)[index]
        return float(np.max(np.abs(values - shifted)))

    for candidate in _period_candidates(analytic):
        error = mismatch(candidate)
        if error >= PERIOD_TOLERANCE:
            continue
        refined = optimize.minimize_scalar(
            mismatch,
            bounds=(
                candidate * (1 - PERIOD_REFINE_WINDOW),
                candidate * (1 + PERIOD_REFINE_WINDOW),
            ),
            method='bounded',
            options={'xatol': PERIOD_REFINE_TOLERANCE},
        )
        if refined.fun < error:
            candidate = float(refined.x)
        logger.debug('Найден период %.17g (невязка %.3g)', candidate, error)
        return PeriodEstimate(candidate, False)
    raise PeriodEstimationError(
        f'Период не найден среди кандидатов до {PERIOD_MAX_MULTIPLE}T'
    )


def elevation_sup(angles, base_vector=DEFAULT_BASE):
    """Supremum of the elevation discrepancy over all error angles and times.

    The clean vector moves on a circle about ``(0, theta, phi + psi)``; the
    poisoned one can sit anywhere, so the bound is set by the lowest and
    highest points of that circle.
    """
    base = base_vector.as_array()
    omega = angular_frequency(angles)
    if omega == 0:
        z_low = z_high = base[2]
    else:
        axis = np.array((0.0, angles.theta, angles.phi + angles.psi)) / omega
        projection = float(base @ axis)
        radius = math.sqrt(max(0.0, 1.0 - projection ** 2))
        spread = radius * math.sqrt(max(0.0, 1.0 - axis[2] ** 2))
        z_low = projection * axis[2] - spread
        z_high = projection * axis[2] + spread
    return max(
        math.acos(np.clip(z_low, -1.0, 1.0)),
        math.acos(np.clip(-z_high, -1.0, 1.0)),
    )


def run_case_study(
    spec,
    num_starts=CASE_NUM_STARTS,
    seed=DEFAULT_SEED,
    series_points=SERIES_POINTS,
    max_evaluations=MAX_EVALUATIONS,
):
    logger.info('Кейс %s: углы %s', spec.label, tuple(spec.angles))
    analytic = period(spec.angles)
    estimate = estimate_period_numeric(
        Target.ELEVATION, spec.series_err, spec.angles, spec.base_vector
    )
    extrema = {}
    for mode in Mode:
        for target in Target:
            result = find_extremum(
                target,
                mode,
                base_vector=spec.base_vector,
                angles=spec.angles,
                num_starts=num_starts,
                seed=seed,
                max_evaluations=max_evaluations,
                search_box=spec.err_search,
            )
            extrema[result.kind] = result
    series = closed_form_series(
        spec.series_err,
        spec.angles,
        np.linspace(0.0, analytic, series_points),
        spec.base_vector,
    )
    return CaseReport(
        label=spec.label,
        angles=spec.angles,
        analytic_period=analytic,
        numeric_period=estimate.period,
        period_degenerate=estimate.degenerate,
        elevation_sup=elevation_sup(spec.angles, spec.base_vector),
        series=series,
        extrema=extrema,
    )
