import os

import django
import numpy as np
import pytest
from hypothesis import settings

settings.register_profile('blochprop', max_examples=1000, deadline=None)
settings.load_profile('blochprop')


def pytest_configure():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'blochprop.settings')
    django.setup()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
