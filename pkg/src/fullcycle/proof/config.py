"""Centralized constants and logging for the longest-cycle proof pipeline."""

import logging
import os

# --- Charge Arithmetic (integer half-units) ---
HALF_UNITS_PER_UNIT = 2
WHITE_VERTEX_CHARGE = 3 * HALF_UNITS_PER_UNIT   # 3 units per white vertex
FACE_SHARE = 1 * HALF_UNITS_PER_UNIT            # 1 unit to each incident face
RULE_A_AMOUNT = 1                               # 1/2 unit
RULE_B_AMOUNT = 2                               # 1 unit
FACE_CHARGE_LIMIT = 2                           # final charge of any face of a longest cycle
WHITE_FACE_FINAL = 2

# --- Search ---
GIRTH = 5
BUDGET_CHECK_INTERVAL = 1024  # nodes between wall-clock checks
SEED_RADIUS = 1               # reroute radius of the heuristic that seeds the exact search

# --- Local Rerouting ---
DEFAULT_RADIUS = 1
MAX_REROUTE_RADIUS = 3
LOCAL_SEARCH_NODE_LIMIT = 200_000

# --- Logging Configuration ---
# Set FC_DEBUG=1 to enable debug logging
DEBUG_MODE = os.environ.get("FC_DEBUG", "0") == "1"


def setup_logger(name: str = "fullcycle.proof"):
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter(
            '%(asctime)s | %(levelname)s | %(name)s: %(message)s',
            datefmt='%H:%M:%S'
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.setLevel(logging.DEBUG if DEBUG_MODE else logging.INFO)
        logger.propagate = False
    return logger


logger = setup_logger()


def format_units(half_units: int) -> str:
    """Render a half-unit amount as whole units ("1/2", "1", "3/2")."""
    whole, rest = divmod(abs(half_units), HALF_UNITS_PER_UNIT)
    sign = "-" if half_units < 0 else ""
    if rest == 0:
        return f"{sign}{whole}"
    return f"{sign}{abs(half_units)}/{HALF_UNITS_PER_UNIT}"
