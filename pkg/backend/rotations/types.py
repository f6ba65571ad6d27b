import math
from dataclasses import astuple, dataclass

import numpy as np


@dataclass(frozen=True)
class SU2Matrix:
    u11: complex
    u12: complex
    u21: complex
    u22: complex

    @classmethod
    def from_array(cls, matrix):
        (u11, u12), (u21, u22) = np.asarray(matrix, dtype=complex)
        return cls(complex(u11), complex(u12), complex(u21), complex(u22))

    def as_array(self):
        return np.array(
            ((self.u11, self.u12), (self.u21, self.u22)), dtype=complex
        )

    def dagger(self):
        return SU2Matrix.from_array(self.as_array().conj().T)

    def __matmul__(self, other):
        return SU2Matrix.from_array(self.as_array() @ other.as_array())


@dataclass(frozen=True)
class RotationMatrix3:
    """Row-vector rotation: a vector ``v`` maps to ``v @ S``."""

    entries: tuple

    @classmethod
    def from_array(cls, matrix):
        return cls(tuple(
            tuple(float(value) for value in row)
            for row in np.asarray(matrix, dtype=float)
        ))

    def as_array(self):
        return np.array(self.entries, dtype=float)

    def __matmul__(self, other):
        return RotationMatrix3.from_array(self.as_array() @ other.as_array())


@dataclass(frozen=True)
class Axis:
    nx: float
    ny: float
    nz: float

    @classmethod
    def from_direction(cls, x, y, z):
        norm = math.hypot(x, y, z)
        return cls(x / norm, y / norm, z / norm)

    def __iter__(self):
        return iter(astuple(self))

    def as_array(self):
        return np.array(astuple(self), dtype=float)
