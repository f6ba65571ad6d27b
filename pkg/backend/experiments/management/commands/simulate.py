from propagation.services import poisoned_vector, simulate
from propagation.types import Pipeline

from ...forms import SimulateForm
from ...services import (config_parameters, render_csv, render_json,
                         render_svg, series_payload, write_output)
from ..base import ExperimentCommand


class Command(ExperimentCommand):
    help = (
        'Синхронно поворачивает исходный и искажённый кубиты и '
        'выводит ряд расхождений азимута и угла места.'
    )
    form_class = SimulateForm

    def add_arguments(self, parser):
        parser.add_argument('--vec', default='1,0,0')
        parser.add_argument('--err', default='0,0.2,0')
        parser.add_argument('--step', default='pi/100,pi/100,pi/100')
        parser.add_argument(
            '--s', help='Число делений оборота: шаг 2pi/s по всем углам'
        )
        parser.add_argument('--steps', default='200')
        parser.add_argument('--pipeline', default=Pipeline.EULER.value)
        parser.add_argument('--output', default='')
        parser.add_argument(
            '--format', dest='output_format', default='csv',
            help='csv, svg или json',
        )
        parser.add_argument('--plot', default='')

    def run(self, config):
        v_err = poisoned_vector(config.vec, config.err, config.pipeline)
        series = simulate(
            config.vec, v_err, config.step, config.steps, config.pipeline
        )
        title = f'{config.steps} поворотов, {config.pipeline.label}'
        if config.output_format == 'svg':
            text = render_svg(series, title)
        elif config.output_format == 'json':
            text = render_json(
                config.command,
                config_parameters(config),
                series=series_payload(series),
            )
        else:
            text = render_csv(series)
        self.emit(text, config.output)
        if config.plot:
            write_output(config.plot, render_svg(series, title))
            self.stdout.write(
                self.style.SUCCESS(f'График записан в {config.plot}')
            )
