"""Built-in case studies: rotation-rate triples with their stated periods.

The table lists each triple in the order (psi, theta, phi). Some stated
periods only fit a reordering of the triple, so the assignment is chosen
as the first ordering whose analytic period equals the stated one.
"""
import csv
import itertools
import logging
import math

from django.core.exceptions import ValidationError

from bloch.constants import PERIOD_MATCH_TOLERANCE
from bloch.expressions import parse_angle
from bloch.types import EulerAngles
from propagation.services import period

from .types import CaseSpec

logger = logging.getLogger(__name__)


def resolve_assignment(stated, stated_period):
    for candidate in itertools.permutations(stated):
        angles = EulerAngles(*candidate)
        try:
            candidate_period = period(angles)
        except ValidationError:
            continue
        if math.isclose(
            candidate_period, stated_period, rel_tol=PERIOD_MATCH_TOLERANCE
        ):
            if candidate != tuple(stated):
                logger.info(
                    'Углы %s переставлены в %s под период %.17g',
                    stated, candidate, stated_period,
                )
            return angles
    raise ValidationError(
        f'Ни одна перестановка углов {stated} не даёт период '
        f'{stated_period!r}'
    )


def load_case_specs(path):
    specs = []
    with open(path, encoding='utf-8', newline='') as file:
        for row in csv.DictReader(file):
            stated = tuple(
                parse_angle(row[name]) for name in ('phi', 'theta', 'psi')
            )
            stated_period = parse_angle(row['period'])
            specs.append(CaseSpec(
                label=row['label'].strip(),
                angles=resolve_assignment(stated, stated_period),
                stated_angles=stated,
                stated_period=stated_period,
                stated_max_elevation=parse_angle(row['max_elevation']),
            ))
    return specs
