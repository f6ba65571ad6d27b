import csv
import io
import json
import math
from dataclasses import asdict

import numpy as np
from django.template.loader import render_to_string

from bloch.constants import MINIMUM_DISPLAY, REPORT_SCHEMA_VERSION, TAU

SERIES_HEADER = ('t', 'delta_az', 'delta_el')
TRAJECTORY_HEADER = ('x', 'y', 'z')
EXTREMUM_HEADER = ('kind', 'value', 'eps_x', 'eps_y', 'eps_z', 't')
CASE_HEADER = (
    'label', 'phi', 'theta', 'psi', 'analytic_period', 'numeric_period',
    'max_az', 'max_el', 'min_az', 'min_el', 'elevation_sup',
)
PLOT_WIDTH = 800
PLOT_HEIGHT = 400
PLOT_MARGIN = 50
AZIMUTH_COLOR = '#1f77b4'
ELEVATION_COLOR = '#ff7f0e'
SPHERE_SIZE = 400
SPHERE_RADIUS = 150
VIEW_AZIMUTH = math.radians(30)
VIEW_ELEVATION = math.radians(20)


def format_number(value):
    return format(value, '.17g')


def format_value(value):
    """Human-readable value: anything below the display floor is ``≈0``."""
    if abs(value) < MINIMUM_DISPLAY:
        return '≈0'
    return format_number(value)


def render_table(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            format_number(cell) if isinstance(cell, float) else cell
            for cell in row
        )
    return buffer.getvalue()


def render_csv(series):
    return render_table(SERIES_HEADER, series)


def render_json(command, parameters, **sections):
    payload = {
        'schema_version': REPORT_SCHEMA_VERSION,
        'command': command,
        'parameters': parameters,
        **sections,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + '\n'


def config_parameters(config):
    parameters = asdict(config)
    for name in ('command', 'output', 'plot'):
        parameters.pop(name)
    return parameters


def series_payload(series):
    return [sample._asdict() for sample in series]


def _scale(values, low, high, start, end):
    span = (high - low) or 1.0
    return [start + (value - low) / span * (end - start) for value in values]


def _polyline(xs, ys):
    return ' '.join(f'{x:.2f},{y:.2f}' for x, y in zip(xs, ys))


def render_svg(series, title=''):
    """Two polylines over ``[0, pi]``: azimuth in blue, elevation in orange."""
    ts = series.ts
    left, right = PLOT_MARGIN, PLOT_WIDTH - PLOT_MARGIN
    top, bottom = PLOT_MARGIN, PLOT_HEIGHT - PLOT_MARGIN
    xs = _scale(ts, ts[0], ts[-1], left, right) if len(ts) else []
    ticks = [
        {'label': label, 'y': f'{y:.2f}'}
        for label, y in zip(
            ('0', 'π/2', 'π'),
            _scale((0.0, math.pi / 2, math.pi), 0.0, math.pi, bottom, top),
        )
    ]
    return render_to_string('experiments/series.svg', {
        'title': title,
        'width': PLOT_WIDTH,
        'height': PLOT_HEIGHT,
        'left': left,
        'right': right,
        'top': top,
        'bottom': bottom,
        'ticks': ticks,
        't_start': format(ts[0], '.4g') if len(ts) else '0',
        't_end': format(ts[-1], '.4g') if len(ts) else '0',
        'azimuth_color': AZIMUTH_COLOR,
        'elevation_color': ELEVATION_COLOR,
        'azimuth_points': _polyline(
            xs, _scale(series.delta_az, 0.0, math.pi, bottom, top)
        ),
        'elevation_points': _polyline(
            xs, _scale(series.delta_el, 0.0, math.pi, bottom, top)
        ),
    })


def render_trajectory_csv(points):
    return render_table(
        TRAJECTORY_HEADER, (tuple(point) for point in points)
    )


def _project(points):
    """Orthographic view of unit-sphere points; screen y grows downwards."""
    a, b = VIEW_AZIMUTH, VIEW_ELEVATION
    right = np.array((-math.sin(a), math.cos(a), 0.0))
    up = np.array((
        -math.cos(a) * math.sin(b), -math.sin(a) * math.sin(b), math.cos(b)
    ))
    centre = SPHERE_SIZE / 2
    return (
        centre + SPHERE_RADIUS * points @ right,
        centre - SPHERE_RADIUS * points @ up,
    )


def render_sphere_svg(points, title=''):
    """Trajectory on the Bloch sphere with the equator for reference."""
    xs, ys = _project(np.array([tuple(point) for point in points]))
    circle = np.linspace(0.0, TAU, 73)
    equator = np.column_stack(
        (np.cos(circle), np.sin(circle), np.zeros_like(circle))
    )
    return render_to_string('experiments/sphere.svg', {
        'title': title,
        'size': SPHERE_SIZE,
        'centre': SPHERE_SIZE // 2,
        'radius': SPHERE_RADIUS,
        'color': AZIMUTH_COLOR,
        'equator_points': _polyline(*_project(equator)),
        'path_points': _polyline(xs, ys),
        'markers': [
            {'x': f'{x:.2f}', 'y': f'{y:.2f}'} for x, y in zip(xs, ys)
        ],
    })


def extremum_payload(result):
    eps_x, eps_y, eps_z, t = result.at
    return {
        'kind': result.kind,
        'value': result.value,
        'at': {'eps_x': eps_x, 'eps_y': eps_y, 'eps_z': eps_z, 't': t},
        'base_vector': asdict(result.base_vector),
        'angles': asdict(result.angles),
        'num_starts': result.num_starts,
        'seed': result.seed,
    }


def extremum_row(result):
    return (result.kind, result.value, *result.at)


def case_payload(spec, report):
    phi, theta, psi = spec.stated_angles or tuple(spec.angles)
    return {
        'label': report.label,
        'stated_angles': {'phi': phi, 'theta': theta, 'psi': psi},
        'angles': asdict(report.angles),
        'stated_period': spec.stated_period,
        'stated_max_elevation': spec.stated_max_elevation,
        'analytic_period': report.analytic_period,
        'numeric_period': report.numeric_period,
        'period_degenerate': report.period_degenerate,
        'elevation_sup': report.elevation_sup,
        'extrema': [
            extremum_payload(result) for result in report.extrema.values()
        ],
    }


def case_row(report):
    return (
        report.label, *report.angles, report.analytic_period,
        report.numeric_period, report.max_az, report.max_el,
        report.min_az, report.min_el, report.elevation_sup,
    )


def write_output(path, text):
    with open(path, 'w', encoding='utf-8', newline='') as file:
        file.write(text)
