from pathlib import Path

from propagation.types import Pipeline
from rotations.services import album_trajectories

from ...forms import RotationsForm
from ...services import (render_sphere_svg, render_trajectory_csv,
                         write_output)
from ..base import ExperimentCommand


class Command(ExperimentCommand):
    help = (
        'Траектории альбома поворотов на сфере Блоха и поворота вокруг '
        'диагональной оси: CSV с точками и SVG для каждой.'
    )
    form_class = RotationsForm

    def add_arguments(self, parser):
        parser.add_argument('--vec', default='1,0,0')
        parser.add_argument('--pipeline', default=Pipeline.SU2.value)
        parser.add_argument(
            '--output-dir', '--output', dest='output', default='.'
        )

    def run(self, config):
        directory = Path(config.output)
        directory.mkdir(parents=True, exist_ok=True)
        trajectories = album_trajectories(
            config.vec, conjugate=config.pipeline == Pipeline.SU2
        )
        count = 0
        for label, title, points in trajectories:
            write_output(
                directory / f'{label}.csv', render_trajectory_csv(points)
            )
            write_output(
                directory / f'{label}.svg', render_sphere_svg(points, title)
            )
            self.stdout.write(f'{label}: {len(points)} точек')
            count += 1
        self.stdout.write(self.style.SUCCESS(
            f'Траекторий: {count}, файлы записаны в {directory}'
        ))
