import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from bloch.exceptions import PeriodEstimationError, SearchFailedError

from ..services import write_output

logger = logging.getLogger(__name__)

INVALID_INPUT = 1
IO_FAILURE = 2


def form_errors(form):
    return '; '.join(
        f'{name}: {message}'
        for name, messages in form.errors.items()
        for message in messages
    )


class ExperimentCommand(BaseCommand):
    """Validates flags with ``form_class`` and maps failures to exit codes."""

    form_class = None

    def handle(self, *args, **options):
        form = self.form_class(data={
            name: options[name]
            for name in self.form_class.base_fields
            if options.get(name) is not None
        })
        if not form.is_valid():
            raise CommandError(form_errors(form), returncode=INVALID_INPUT)
        config = form.to_config()
        logger.debug('Запуск %s с параметрами %s', config.command, config)
        try:
            self.run(config)
        except ValidationError as error:
            raise CommandError(
                '; '.join(error.messages), returncode=INVALID_INPUT
            ) from error
        except (PeriodEstimationError, SearchFailedError) as error:
            raise CommandError(str(error), returncode=INVALID_INPUT) from error
        except OSError as error:
            raise CommandError(
                f'Ошибка ввода-вывода: {error}', returncode=IO_FAILURE
            ) from error

    def run(self, config):
        raise NotImplementedError

    def emit(self, text, path):
        """Write ``text`` to ``path``, or to stdout when no path is given."""
        if not path:
            self.stdout.write(text, ending='')
            return
        write_output(path, text)
        self.stdout.write(self.style.SUCCESS(f'Результат записан в {path}'))
