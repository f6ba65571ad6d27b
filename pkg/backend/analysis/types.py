from dataclasses import dataclass, field
from typing import NamedTuple

from django.core.exceptions import ValidationError
from django.db import models

from bloch.constants import DEFAULT_BASE_VECTOR, DEFAULT_ERROR_ANGLES, TAU
from bloch.types import CartesianVector, EulerAngles
from propagation.types import ErrorAngles, ErrorSeries


class Target(models.TextChoices):
    AZIMUTH = 'az', 'Азимут'
    ELEVATION = 'el', 'Угол места'


class Mode(models.TextChoices):
    MAX = 'max', 'Максимум'
    MIN = 'min', 'Минимум'


TARGET_INDEX = {Target.AZIMUTH: 0, Target.ELEVATION: 1}


class PeriodEstimate(NamedTuple):
    period: float
    degenerate: bool


@dataclass(frozen=True)
class ExtremumResult:
    target: Target
    mode: Mode
    value: float
    at: tuple
    base_vector: CartesianVector
    angles: EulerAngles
    num_starts: int
    seed: int

    @property
    def kind(self):
        return f'{self.mode.value}_{self.target.value}'

    @property
    def err(self):
        return ErrorAngles(*self.at[:3])

    @property
    def t(self):
        return self.at[3]


@dataclass(frozen=True)
class CaseSpec:
    label: str
    angles: EulerAngles
    base_vector: CartesianVector = CartesianVector(*DEFAULT_BASE_VECTOR)
    err_search: tuple = (0.0, TAU)
    series_err: ErrorAngles = ErrorAngles(*DEFAULT_ERROR_ANGLES)
    stated_angles: tuple = None
    stated_period: float = None
    stated_max_elevation: float = None

    def __post_init__(self):
        if not any(self.angles):
            raise ValidationError(
                f'Кейс {self.label}: углы вращения не могут быть все нулевыми'
            )


@dataclass(frozen=True)
class CaseReport:
    label: str
    angles: EulerAngles
    analytic_period: float
    numeric_period: float
    period_degenerate: bool
    elevation_sup: float
    series: ErrorSeries
    extrema: dict = field(default_factory=dict)

    @property
    def max_az(self):
        return self.extrema['max_az'].value

    @property
    def max_el(self):
        return self.extrema['max_el'].value

    @property
    def min_az(self):
        return self.extrema['min_az'].value

    @property
    def min_el(self):
        return self.extrema['min_el'].value
