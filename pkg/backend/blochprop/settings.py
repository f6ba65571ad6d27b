import os
from pathlib import Path

from dotenv import load_dotenv

from bloch.constants import (CASE_NUM_STARTS, DEFAULT_NUM_STARTS, DEFAULT_SEED,
                             MAX_EVALUATIONS, QUAD_TOLERANCE)

load_dotenv()

SECRET_KEY = os.getenv('SECRET_KEY') or 'for_test'

BASE_DIR = Path(__file__).resolve().parent.parent

INSTALLED_APPS = [
    'bloch.apps.BlochConfig',
    'rotations.apps.RotationsConfig',
    'propagation.apps.PropagationConfig',
    'analysis.apps.AnalysisConfig',
    'experiments.apps.ExperimentsConfig',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]

DATABASES = {}

LANGUAGE_CODE = 'ru-RU'

USE_I18N = True

FILE_PATH_CASES = BASE_DIR / 'data' / 'cases.csv'

BLOCHPROP_NUM_STARTS = int(os.getenv('BLOCHPROP_NUM_STARTS', DEFAULT_NUM_STARTS))

BLOCHPROP_CASE_STARTS = int(os.getenv('BLOCHPROP_CASE_STARTS', CASE_NUM_STARTS))

BLOCHPROP_SEED = int(os.getenv('BLOCHPROP_SEED', DEFAULT_SEED))

BLOCHPROP_MAX_EVALUATIONS = int(os.getenv('BLOCHPROP_MAX_EVALUATIONS', MAX_EVALUATIONS))

BLOCHPROP_QUAD_TOLERANCE = float(os.getenv('BLOCHPROP_QUAD_TOLERANCE', QUAD_TOLERANCE))

BLOCHPROP_LOG_LEVEL = os.getenv('BLOCHPROP_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': BLOCHPROP_LOG_LEVEL,
            'propagate': False,
        }
        for app in (
            'bloch', 'rotations', 'propagation', 'analysis', 'experiments'
        )
    },
}
