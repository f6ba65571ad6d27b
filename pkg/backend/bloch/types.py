import math
from dataclasses import astuple, dataclass

import numpy as np


@dataclass(frozen=True)
class CartesianVector:
    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, values):
        x, y, z = (float(value) for value in values)
        return cls(x, y, z)

    def __iter__(self):
        return iter(astuple(self))

    def as_array(self):
        return np.array(astuple(self), dtype=float)

    @property
    def norm(self):
        return math.hypot(self.x, self.y, self.z)


@dataclass(frozen=True)
class SphericalCoords:
    """ISO 80000-2: ``theta_el`` from +z in [0, pi], ``phi_az`` in (-pi, pi]"""

    r: float
    theta_el: float
    phi_az: float

    def __iter__(self):
        return iter(astuple(self))


@dataclass(frozen=True)
class QubitMatrix:
    m11: complex
    m12: complex
    m21: complex
    m22: complex

    @classmethod
    def from_array(cls, matrix):
        (m11, m12), (m21, m22) = np.asarray(matrix, dtype=complex)
        return cls(complex(m11), complex(m12), complex(m21), complex(m22))

    def as_array(self):
        return np.array(
            ((self.m11, self.m12), (self.m21, self.m22)), dtype=complex
        )


@dataclass(frozen=True)
class EulerAngles:
    """Rotation triple (phi, theta, psi) in radians.

    The canonical ranges 0 <= phi <= 2pi, 0 <= theta <= pi, 0 <= psi <= 4pi
    are not enforced: extremum searches sweep all three over [0, 2pi).
    """

    phi: float
    theta: float
    psi: float

    def __iter__(self):
        return iter(astuple(self))

    def scaled(self, factor):
        return EulerAngles(
            self.phi * factor, self.theta * factor, self.psi * factor
        )
