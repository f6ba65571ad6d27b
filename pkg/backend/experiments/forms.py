import math
from dataclasses import fields

from django import forms

from analysis.types import Target
from bloch.constants import TAU
from bloch.types import EulerAngles
from propagation.types import Pipeline

from .fields import AnglesField, ErrorAnglesField, VectorField
from .types import RunConfig

SERIES_FORMATS = (('csv', 'CSV'), ('svg', 'SVG'), ('json', 'JSON'))
REPORT_FORMATS = (('json', 'JSON'), ('csv', 'CSV'))
CONFIG_FIELDS = frozenset(field.name for field in fields(RunConfig))


class ExperimentForm(forms.Form):
    command = None

    def to_config(self):
        return RunConfig(command=self.command, **{
            name: value
            for name, value in self.cleaned_data.items()
            if name in CONFIG_FIELDS and value not in (None, '')
        })


class SearchForm(ExperimentForm):
    vec = VectorField()
    angles = AnglesField()
    seed = forms.IntegerField(min_value=0)
    num_starts = forms.IntegerField(min_value=1)
    max_evaluations = forms.IntegerField(min_value=1)


class SimulateForm(ExperimentForm):
    command = 'simulate'

    vec = VectorField()
    err = ErrorAnglesField()
    step = AnglesField(required=False)
    s = forms.IntegerField(min_value=1, required=False)
    steps = forms.IntegerField(min_value=0)
    pipeline = forms.ChoiceField(choices=Pipeline.choices)
    output = forms.CharField(required=False)
    output_format = forms.ChoiceField(choices=SERIES_FORMATS)
    plot = forms.CharField(required=False)

    def clean_pipeline(self):
        return Pipeline(self.cleaned_data['pipeline'])

    def clean(self):
        cleaned_data = super().clean()
        divisions = cleaned_data.get('s')
        if divisions:
            angle = TAU / divisions
            cleaned_data['step'] = EulerAngles(angle, angle, angle)
        elif cleaned_data.get('step') is None and 'step' not in self.errors:
            self.add_error('step', 'Нужен шаг --step или число делений --s')
        return cleaned_data


class ExtremaForm(SearchForm):
    command = 'extrema'

    output = forms.CharField(required=False)
    output_format = forms.ChoiceField(choices=REPORT_FORMATS)


class PeriodForm(ExperimentForm):
    command = 'period'

    vec = VectorField()
    err = ErrorAnglesField()
    angles = AnglesField()
    target = forms.ChoiceField(choices=Target.choices)

    def clean_target(self):
        return Target(self.cleaned_data['target'])


class AverageForm(ExperimentForm):
    command = 'average'

    vec = VectorField()
    err = ErrorAnglesField()
    angles = AnglesField()
    tolerance = forms.FloatField()

    def clean_tolerance(self):
        tolerance = self.cleaned_data['tolerance']
        if not (math.isfinite(tolerance) and tolerance > 0):
            raise forms.ValidationError(
                'Допуск квадратуры должен быть положительным'
            )
        return tolerance


class CasesForm(ExperimentForm):
    command = 'cases'

    output = forms.CharField()
    seed = forms.IntegerField(min_value=0)
    num_starts = forms.IntegerField(min_value=1)
    max_evaluations = forms.IntegerField(min_value=1)
    points = forms.IntegerField(min_value=2)
    output_format = forms.ChoiceField(choices=REPORT_FORMATS)
    only = forms.CharField(required=False)

    def clean_only(self):
        only = self.cleaned_data['only']
        return tuple(
            label.strip() for label in only.split(',') if label.strip()
        )


class RotationsForm(ExperimentForm):
    command = 'rotations'

    vec = VectorField()
    pipeline = forms.ChoiceField(choices=[
        choice for choice in Pipeline.choices
        if choice[0] != Pipeline.CLOSED
    ])
    output = forms.CharField()

    def clean_pipeline(self):
        return Pipeline(self.cleaned_data['pipeline'])
