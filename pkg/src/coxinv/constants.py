LOGGER_NAME = 'coxinv'
LOG_FILE_FILE_NAME = 'coxinv.log'
CONFIG_FILE_NAME = 'config.yaml'
APP_DIRECTORY_NAME = 'coxinv'
CONFIG_FILE_VARIABLE = 'COXINV_CONFIG_FILE'
LOG_FILE_VARIABLE = 'COXINV_LOG_FILE'
DEFAULT_SEED = 0
DEFAULT_POINTS_PER_PRIME = 40
"""Modular sample points drawn for each of the three primes."""
DEFAULT_SOLVER_POINT_CAP = 4096
"""The invariant solver doubles its evaluation points up to this many before giving up."""
DEFAULT_HOLDOUT_POINTS = 5
MAX_RESAMPLES = 64
"""Attempts per modular sample point before a vanishing denominator is reported as a failure."""
GROUP_CLOSURE_CAP = 20000
"""Breadth-first closure stops here; a larger group means the generators are corrupted."""
RANDOM_WORDS = 20
"""Random generator words used to extend intertwining checks beyond the generators."""
SOLVER_COORDINATE_RANGE = (-9, 9)
TWO_ROUTE_POINTS = 10
"""Points at which the two ways of evaluating a Y_j in the H4(9) coordinates must agree."""
