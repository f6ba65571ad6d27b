from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError

from analysis.cases import load_case_specs
from analysis.services import run_case_study
from bloch.constants import SERIES_POINTS

from ...forms import CasesForm
from ...services import (CASE_HEADER, case_payload, case_row,
                         config_parameters, format_value, render_csv,
                         render_json, render_table, write_output)
from ..base import ExperimentCommand


class Command(ExperimentCommand):
    help = (
        'Прогоняет встроенные кейсы: периоды, экстремумы и ряды '
        'расхождений за один период.'
    )
    form_class = CasesForm

    def add_arguments(self, parser):
        parser.add_argument(
            '--output-dir', '--output', dest='output', default='.'
        )
        parser.add_argument('--seed', default=settings.BLOCHPROP_SEED)
        parser.add_argument(
            '--starts', dest='num_starts',
            default=settings.BLOCHPROP_CASE_STARTS,
        )
        parser.add_argument(
            '--max-evaluations', default=settings.BLOCHPROP_MAX_EVALUATIONS
        )
        parser.add_argument('--points', default=SERIES_POINTS)
        parser.add_argument(
            '--format', dest='output_format', default='json',
            help='Формат сводки: json или csv',
        )
        parser.add_argument(
            '--only', default='', help='Метки кейсов через запятую'
        )

    def run(self, config):
        specs = load_case_specs(settings.FILE_PATH_CASES)
        if config.only:
            unknown = set(config.only) - {spec.label for spec in specs}
            if unknown:
                raise ValidationError(
                    f'Неизвестные кейсы: {", ".join(sorted(unknown))}'
                )
            specs = [spec for spec in specs if spec.label in config.only]
        directory = Path(config.output)
        directory.mkdir(parents=True, exist_ok=True)
        reports = []
        for spec in specs:
            report = run_case_study(
                spec,
                num_starts=config.num_starts,
                seed=config.seed,
                series_points=config.points,
                max_evaluations=config.max_evaluations,
            )
            write_output(
                directory / f'{spec.label}.csv', render_csv(report.series)
            )
            reports.append((spec, report))
            self.stdout.write(
                f'{spec.label}: T={format_value(report.analytic_period)} '
                f'max_el={format_value(report.max_el)} '
                f'max_az={format_value(report.max_az)} '
                f'min_el={format_value(report.min_el)} '
                f'min_az={format_value(report.min_az)}'
            )
        if config.output_format == 'csv':
            summary = directory / 'summary.csv'
            text = render_table(
                CASE_HEADER, (case_row(report) for _, report in reports)
            )
        else:
            summary = directory / 'summary.json'
            text = render_json(
                config.command,
                config_parameters(config),
                cases=[case_payload(spec, report) for spec, report in reports],
            )
        write_output(summary, text)
        self.stdout.write(self.style.SUCCESS(
            f'Кейсов: {len(reports)}, сводка записана в {summary}'
        ))
