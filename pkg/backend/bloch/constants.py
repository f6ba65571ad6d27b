import math

TAU = 2 * math.pi
ROUND_TRIP_TOLERANCE = 1e-12
VALIDATION_TOLERANCE = 1e-9
POLE_TOLERANCE = 1e-12
GROUP_TOLERANCE = 1e-12
DEFAULT_BASE_VECTOR = (1.0, 0.0, 0.0)
POLE_BASE_VECTOR = (0.0, 0.0, 1.0)
DEFAULT_ERROR_ANGLES = (0.0, 0.2, 0.0)
DEFAULT_NUM_STARTS = 1000
DEFAULT_SEED = 42
MAX_EVALUATIONS = 2000
FUNCTION_TOLERANCE = 1e-10
QUAD_TOLERANCE = 1e-8
QUAD_LIMIT = 500
PERIOD_TOLERANCE = 1e-6
PERIOD_GRID_POINTS = 2000
PERIOD_MAX_DIVISOR = 8
PERIOD_MAX_MULTIPLE = 9
CONSTANT_SIGNAL_TOLERANCE = 1e-12
MINIMUM_DISPLAY = 1e-6
SERIES_POINTS = 400
REPORT_SCHEMA_VERSION = 1
PERIOD_REFINE_WINDOW = 1e-4
PERIOD_REFINE_TOLERANCE = 1e-12
CASE_NUM_STARTS = 200
PERIOD_MATCH_TOLERANCE = 1e-12
