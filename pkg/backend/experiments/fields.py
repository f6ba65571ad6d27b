from django import forms

from bloch.expressions import parse_angle, parse_triple
from bloch.services import require_unit
from bloch.types import CartesianVector, EulerAngles
from propagation.types import ErrorAngles


class AngleField(forms.CharField):

    def to_python(self, value):
        value = super().to_python(value)
        if value in self.empty_values:
            return None
        return parse_angle(value)


class TripleField(forms.CharField):
    value_class = tuple

    def to_python(self, value):
        value = super().to_python(value)
        if value in self.empty_values:
            return None
        return self.value_class(*parse_triple(value))


class VectorField(TripleField):
    value_class = CartesianVector

    def to_python(self, value):
        vector = super().to_python(value)
        if vector is not None:
            require_unit(vector, 'Вектор кубита')
        return vector


class AnglesField(TripleField):
    value_class = EulerAngles


class ErrorAnglesField(TripleField):
    value_class = ErrorAngles
