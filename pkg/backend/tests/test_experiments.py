import csv
import json
import math
from io import StringIO

import pytest
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

import manage
from bloch.constants import (CASE_NUM_STARTS, DEFAULT_NUM_STARTS, DEFAULT_SEED,
                             MAX_EVALUATIONS, QUAD_TOLERANCE)
from blochprop import __main__ as entry_point
from experiments.services import format_value


def run(name, *args, **options):
    out = StringIO()
    call_command(name, *args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


def read_rows(path):
    with open(path, encoding='utf-8', newline='') as file:
        return list(csv.reader(file))


def exit_code(name, **options):
    with pytest.raises(CommandError) as error:
        run(name, **options)
    return error.value.returncode


def test_simulate_writes_figure_series(tmp_path):
    path = tmp_path / 'figure.csv'
    out = run('simulate', output=str(path))
    assert str(path) in out
    assert b'\r' not in path.read_bytes()
    header, *rows = read_rows(path)
    assert header == ['t', 'delta_az', 'delta_el']
    assert len(rows) == 201
    assert float(rows[0][0]) == 0.0
    assert float(rows[-1][0]) == 200.0
    assert float(rows[0][2]) == pytest.approx(0.2, abs=1e-12)
    for _, delta_az, delta_el in rows:
        assert 0.0 <= float(delta_az) <= math.pi
        assert 0.0 <= float(delta_el) <= math.pi


def test_simulate_without_error_gives_zero_series(tmp_path):
    path = tmp_path / 'zero.csv'
    run('simulate', err='0,0,0', output=str(path))
    _, *rows = read_rows(path)
    assert all(row[1:] == ['0', '0'] for row in rows)


def test_simulate_pipelines_agree(tmp_path):
    tables = {}
    for pipeline in ('su2', 'euler'):
        path = tmp_path / f'{pipeline}.csv'
        run('simulate', pipeline=pipeline, output=str(path))
        tables[pipeline] = read_rows(path)[1:]
    for su2_row, euler_row in zip(tables['su2'], tables['euler']):
        for su2_cell, euler_cell in zip(su2_row, euler_row):
            assert float(su2_cell) == pytest.approx(
                float(euler_cell), abs=1e-9
            )


def test_simulate_divisions_set_the_step(tmp_path):
    by_step = tmp_path / 'step.csv'
    by_divisions = tmp_path / 'divisions.csv'
    run('simulate', step='pi/100, pi/100, pi/100', output=str(by_step))
    run('simulate', s='200', output=str(by_divisions))
    assert by_step.read_text() == by_divisions.read_text()


def test_simulate_prints_to_stdout_without_output():
    out = run('simulate', steps='3')
    assert out.splitlines()[0] == 't,delta_az,delta_el'
    assert len(out.splitlines()) == 5


def test_simulate_renders_svg(tmp_path):
    path = tmp_path / 'figure.svg'
    run('simulate', output=str(path), output_format='svg')
    text = path.read_text(encoding='utf-8')
    assert text.startswith('<svg')
    assert text.count('<polyline') == 2
    assert '#1f77b4' in text and '#ff7f0e' in text
    assert '50.00,350.00' in text


def test_simulate_plot_goes_with_csv(tmp_path):
    data = tmp_path / 'figure.csv'
    plot = tmp_path / 'figure.svg'
    run('simulate', output=str(data), plot=str(plot))
    assert data.read_text().startswith('t,delta_az,delta_el')
    assert plot.read_text(encoding='utf-8').startswith('<svg')


def test_simulate_renders_json(tmp_path):
    path = tmp_path / 'figure.json'
    run('simulate', output=str(path), output_format='json', pipeline='closed')
    report = json.loads(path.read_text(encoding='utf-8'))
    assert report['schema_version'] == 1
    assert report['command'] == 'simulate'
    assert report['parameters']['steps'] == 200
    assert report['parameters']['pipeline'] == 'closed'
    assert report['parameters']['vec'] == {'x': 1.0, 'y': 0.0, 'z': 0.0}
    assert len(report['series']) == 201
    assert set(report['series'][0]) == {'t', 'delta_az', 'delta_el'}


@pytest.mark.parametrize('options', [
    {'vec': '2,0,0'},
    {'vec': '1,0'},
    {'err': 'foo,0,0'},
    {'step': 'pi/0,0,0'},
    {'pipeline': 'bogus'},
    {'steps': '-1'},
    {'output_format': 'png'},
])
def test_simulate_rejects_invalid_input(options):
    assert exit_code('simulate', **options) == 1


def test_simulate_reports_unwritable_path(tmp_path):
    path = tmp_path / 'missing' / 'figure.csv'
    assert exit_code('simulate', output=str(path)) == 2


def test_extrema_report_is_deterministic(tmp_path):
    first = tmp_path / 'first.json'
    second = tmp_path / 'second.json'
    for path in (first, second):
        out = run(
            'extrema', num_starts='3', seed='5', output=str(path)
        )
    assert first.read_text() == second.read_text()
    report = json.loads(first.read_text(encoding='utf-8'))
    assert report['command'] == 'extrema'
    assert report['parameters']['num_starts'] == 3
    assert report['parameters']['seed'] == 5
    assert [item['kind'] for item in report['extrema']] == [
        'max_az', 'max_el', 'min_az', 'min_el',
    ]
    for item in report['extrema']:
        assert 0.0 <= item['value'] <= math.pi
        assert set(item['at']) == {'eps_x', 'eps_y', 'eps_z', 't'}
    assert 'max_el: ' in out


def test_extrema_csv(tmp_path):
    path = tmp_path / 'extrema.csv'
    run(
        'extrema', vec='0,0,1', num_starts='2', output=str(path),
        output_format='csv',
    )
    header, *rows = read_rows(path)
    assert header == ['kind', 'value', 'eps_x', 'eps_y', 'eps_z', 't']
    assert [row[0] for row in rows] == [
        'max_az', 'max_el', 'min_az', 'min_el',
    ]


@pytest.mark.parametrize('options', [
    {'num_starts': '0'},
    {'seed': '-1'},
    {'angles': '1,1'},
])
def test_extrema_rejects_invalid_input(options):
    assert exit_code('extrema', **options) == 1


def test_period_reports_analytic_and_numeric_values():
    lines = run('period', angles='1,1,1').splitlines()
    values = dict(line.split(': ', 1) for line in lines)
    assert float(values['analytic']) == pytest.approx(
        2 * math.pi / math.sqrt(5), rel=1e-15
    )
    assert float(values['numeric']) == pytest.approx(
        2 * math.pi / math.sqrt(5), abs=1e-6
    )


def test_period_warns_about_constant_curve():
    out = run('period', angles='1,1,1', err='0,0,0', target='az')
    assert 'difference: ' + format_value(0.0) in out
    assert 'Кривая постоянна' in out


@pytest.mark.parametrize('options', [
    {'angles': '1,0,-1'},
    {'angles': '1,1,1', 'target': 'up'},
])
def test_period_rejects_invalid_input(options):
    assert exit_code('period', **options) == 1


def test_average_prints_both_targets():
    lines = run('average', tolerance='1e-6').splitlines()
    values = dict(line.split(': ', 1) for line in lines)
    assert set(values) == {'az', 'el'}
    for value in values.values():
        assert 0.0 <= float(value) <= math.pi


def test_average_without_error():
    assert run('average', err='0,0,0').splitlines() == ['az: 0', 'el: 0']


@pytest.mark.parametrize('tolerance', ['0', '-1e-8', 'nan'])
def test_average_rejects_bad_tolerance(tolerance):
    assert exit_code('average', tolerance=tolerance) == 1


def test_cases_writes_series_and_summary(tmp_path):
    out = run(
        'cases', only='case3', num_starts='2', points='20',
        output=str(tmp_path),
    )
    assert out.startswith('case3: T=')
    header, *rows = read_rows(tmp_path / 'case3.csv')
    assert header == ['t', 'delta_az', 'delta_el']
    assert len(rows) == 20
    summary = json.loads(
        (tmp_path / 'summary.json').read_text(encoding='utf-8')
    )
    assert summary['command'] == 'cases'
    (case,) = summary['cases']
    assert case['label'] == 'case3'
    assert case['angles'] == {'phi': math.e, 'theta': math.pi, 'psi': 3.0}
    assert case['stated_angles'] == {
        'phi': math.pi, 'theta': math.e, 'psi': 3.0,
    }
    assert case['numeric_period'] == pytest.approx(
        case['stated_period'], rel=1e-6
    )
    assert len(case['extrema']) == 4


def test_cases_csv_summary(tmp_path):
    run(
        'cases', only='case4_sub2', num_starts='1', points='5',
        output=str(tmp_path), output_format='csv',
    )
    header, *rows = read_rows(tmp_path / 'summary.csv')
    assert header[:4] == ['label', 'phi', 'theta', 'psi']
    assert [row[0] for row in rows] == ['case4_sub2']
    assert float(rows[0][2]) == math.pi


def test_cases_rejects_unknown_label(tmp_path):
    assert exit_code('cases', only='case9', output=str(tmp_path)) == 1


def test_cases_accepts_output_flag(tmp_path):
    run(
        'cases', '--output', str(tmp_path), '--only', 'case3',
        '--starts', '1', '--points', '5',
    )
    assert (tmp_path / 'case3.csv').exists()
    assert (tmp_path / 'summary.json').exists()


@pytest.mark.slow
def test_cases_default_run_reports_every_case(tmp_path):
    run('cases', num_starts='5', output=str(tmp_path))
    summary = json.loads(
        (tmp_path / 'summary.json').read_text(encoding='utf-8')
    )
    assert len(summary['cases']) == 7
    assert len(list(tmp_path.glob('case*.csv'))) == 7
    for case in summary['cases']:
        period = case['analytic_period']
        assert abs(period - case['numeric_period']) < 1e-6 * period


ALBUM_LABELS = [f'album_{number}' for number in range(1, 7)] + ['diagonal']


def test_rotations_writes_trajectories_and_plots(tmp_path):
    out = run('rotations', output=str(tmp_path))
    assert 'album_1: 9 точек' in out
    for label in ALBUM_LABELS:
        assert (tmp_path / f'{label}.csv').exists()
        svg = (tmp_path / f'{label}.svg').read_text(encoding='utf-8')
        assert svg.startswith('<svg')
        assert svg.count('<polyline') == 2
        assert '125.00,244.43' in svg
    header, *rows = read_rows(tmp_path / 'album_1.csv')
    assert header == ['x', 'y', 'z']
    assert len(rows) == 9
    assert [float(cell) for cell in rows[-1]] == pytest.approx(
        [-1.0, 0.0, 0.0], abs=1e-12
    )
    _, *rows = read_rows(tmp_path / 'diagonal.csv')
    assert len(rows) == 17
    assert [float(cell) for cell in rows[-1]] == pytest.approx(
        [1.0, 0.0, 0.0], abs=1e-12
    )


def test_rotations_pipelines_agree(tmp_path):
    for pipeline in ('su2', 'euler'):
        run('rotations', pipeline=pipeline, output=str(tmp_path / pipeline))
    for label in ALBUM_LABELS:
        su2_rows = read_rows(tmp_path / 'su2' / f'{label}.csv')[1:]
        euler_rows = read_rows(tmp_path / 'euler' / f'{label}.csv')[1:]
        assert len(su2_rows) == len(euler_rows)
        for su2_row, euler_row in zip(su2_rows, euler_rows):
            assert [float(cell) for cell in su2_row] == pytest.approx(
                [float(cell) for cell in euler_row], abs=1e-12
            )


@pytest.mark.parametrize('options', [
    {'pipeline': 'closed'},
    {'vec': '2,0,0'},
])
def test_rotations_rejects_invalid_input(options, tmp_path):
    assert exit_code('rotations', output=str(tmp_path), **options) == 1


def test_module_entry_point_delegates_to_manage():
    assert entry_point.main is manage.main


def test_settings_defaults_follow_constants():
    assert settings.BLOCHPROP_NUM_STARTS == DEFAULT_NUM_STARTS
    assert settings.BLOCHPROP_CASE_STARTS == CASE_NUM_STARTS
    assert settings.BLOCHPROP_SEED == DEFAULT_SEED
    assert settings.BLOCHPROP_MAX_EVALUATIONS == MAX_EVALUATIONS
    assert settings.BLOCHPROP_QUAD_TOLERANCE == QUAD_TOLERANCE
