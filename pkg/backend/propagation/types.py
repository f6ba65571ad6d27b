import math
from dataclasses import astuple, dataclass
from typing import NamedTuple

import numpy as np
from django.core.exceptions import ValidationError
from django.db import models

from bloch.types import EulerAngles


class Pipeline(models.TextChoices):
    SU2 = 'su2', 'Сопряжение в SU(2)'
    EULER = 'euler', 'Матрица Эйлера'
    CLOSED = 'closed', 'Предельная матрица'


@dataclass(frozen=True)
class ErrorAngles:
    """Poisoning offset: ``v_err = v . S(eps_x, eps_y, eps_z)``."""

    eps_x: float
    eps_y: float
    eps_z: float

    def __iter__(self):
        return iter(astuple(self))

    def as_euler(self):
        return EulerAngles(self.eps_x, self.eps_y, self.eps_z)


class DeltaSample(NamedTuple):
    t: float
    delta_az: float
    delta_el: float


@dataclass(frozen=True)
class ErrorSeries:
    samples: tuple

    def __post_init__(self):
        previous = -math.inf
        for sample in self.samples:
            if not sample.t > previous:
                raise ValidationError(
                    'Моменты времени ряда должны строго возрастать'
                )
            previous = sample.t
            if not (
                0.0 <= sample.delta_az <= math.pi
                and 0.0 <= sample.delta_el <= math.pi
            ):
                raise ValidationError(
                    f'Расхождение вне отрезка [0, pi] при t={sample.t!r}'
                )

    @classmethod
    def from_arrays(cls, ts, delta_az, delta_el):
        return cls(tuple(
            DeltaSample(float(t), float(az), float(el))
            for t, az, el in zip(ts, delta_az, delta_el)
        ))

    def __len__(self):
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    @property
    def ts(self):
        return np.array([sample.t for sample in self.samples])

    @property
    def delta_az(self):
        return np.array([sample.delta_az for sample in self.samples])

    @property
    def delta_el(self):
        return np.array([sample.delta_el for sample in self.samples])


@dataclass(frozen=True)
class Generator3:
    entries: tuple

    @classmethod
    def from_array(cls, matrix):
        return cls(tuple(
            tuple(float(value) for value in row)
            for row in np.asarray(matrix, dtype=float)
        ))

    def as_array(self):
        return np.array(self.entries, dtype=float)
