from analysis.services import estimate_period_numeric
from analysis.types import Target
from propagation.services import period

from ...forms import PeriodForm
from ...services import format_number, format_value
from ..base import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Аналитический и численный период кривых ошибки.'
    form_class = PeriodForm

    def add_arguments(self, parser):
        parser.add_argument('--angles', required=True)
        parser.add_argument('--err', default='0,0.2,0')
        parser.add_argument('--vec', default='1,0,0')
        parser.add_argument('--target', default=Target.ELEVATION.value)

    def run(self, config):
        analytic = period(config.angles)
        estimate = estimate_period_numeric(
            config.target, config.err, config.angles, config.vec
        )
        self.stdout.write(f'analytic: {format_number(analytic)}')
        self.stdout.write(f'numeric: {format_number(estimate.period)}')
        self.stdout.write(
            f'difference: {format_value(abs(estimate.period - analytic))}'
        )
        if estimate.degenerate:
            self.stdout.write(self.style.WARNING(
                'Кривая постоянна: численный период совпадает '
                'с аналитическим по определению'
            ))
