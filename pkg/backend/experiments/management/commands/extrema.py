from django.conf import settings

from analysis.services import find_extremum
from analysis.types import Mode, Target

from ...forms import ExtremaForm
from ...services import (EXTREMUM_HEADER, config_parameters, extremum_payload,
                         extremum_row, format_value, render_json,
                         render_table)
from ..base import ExperimentCommand


class Command(ExperimentCommand):
    help = (
        'Максимумы и минимумы расхождений азимута и угла места '
        'по углам ошибки и времени.'
    )
    form_class = ExtremaForm

    def add_arguments(self, parser):
        parser.add_argument('--vec', default='1,0,0')
        parser.add_argument('--angles', default='1,1,1')
        parser.add_argument('--seed', default=settings.BLOCHPROP_SEED)
        parser.add_argument(
            '--starts', dest='num_starts',
            default=settings.BLOCHPROP_NUM_STARTS,
        )
        parser.add_argument(
            '--max-evaluations', default=settings.BLOCHPROP_MAX_EVALUATIONS
        )
        parser.add_argument('--output', default='')
        parser.add_argument(
            '--format', dest='output_format', default='json',
            help='json или csv',
        )

    def run(self, config):
        results = [
            find_extremum(
                target,
                mode,
                base_vector=config.vec,
                angles=config.angles,
                num_starts=config.num_starts,
                seed=config.seed,
                max_evaluations=config.max_evaluations,
            )
            for mode in Mode
            for target in Target
        ]
        if config.output_format == 'csv':
            text = render_table(
                EXTREMUM_HEADER, (extremum_row(result) for result in results)
            )
        else:
            text = render_json(
                config.command,
                config_parameters(config),
                extrema=[extremum_payload(result) for result in results],
            )
        self.emit(text, config.output)
        if config.output:
            for result in results:
                self.stdout.write(
                    f'{result.kind}: {format_value(result.value)}'
                )
