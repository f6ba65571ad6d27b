from dataclasses import dataclass

from bloch.constants import (DEFAULT_BASE_VECTOR, DEFAULT_ERROR_ANGLES,
                             DEFAULT_NUM_STARTS, DEFAULT_SEED,
                             MAX_EVALUATIONS, QUAD_TOLERANCE, SERIES_POINTS)
from bloch.types import CartesianVector, EulerAngles
from propagation.types import ErrorAngles, Pipeline


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one command run."""

    command: str
    vec: CartesianVector = CartesianVector(*DEFAULT_BASE_VECTOR)
    err: ErrorAngles = ErrorAngles(*DEFAULT_ERROR_ANGLES)
    angles: EulerAngles = EulerAngles(1.0, 1.0, 1.0)
    step: EulerAngles = None
    steps: int = 0
    pipeline: Pipeline = Pipeline.EULER
    seed: int = DEFAULT_SEED
    num_starts: int = DEFAULT_NUM_STARTS
    max_evaluations: int = MAX_EVALUATIONS
    tolerance: float = QUAD_TOLERANCE
    target: str = 'el'
    points: int = SERIES_POINTS
    output: str = ''
    output_format: str = 'csv'
    plot: str = ''
    only: tuple = ()
