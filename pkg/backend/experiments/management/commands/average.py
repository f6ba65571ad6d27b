from django.conf import settings

from analysis.services import time_averaged_error
from analysis.types import Target

from ...forms import AverageForm
from ...services import format_number
from ..base import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Средние по периоду расхождения азимута и угла места.'
    form_class = AverageForm

    def add_arguments(self, parser):
        parser.add_argument('--err', default='0,0.2,0')
        parser.add_argument('--angles', default='1,1,1')
        parser.add_argument('--vec', default='1,0,0')
        parser.add_argument(
            '--tolerance', default=settings.BLOCHPROP_QUAD_TOLERANCE
        )

    def run(self, config):
        for target in Target:
            value = time_averaged_error(
                target,
                config.err,
                config.angles,
                base_vector=config.vec,
                tolerance=config.tolerance,
            )
            self.stdout.write(f'{target.value}: {format_number(value)}')
