import os
import json
import logging
from typing import Any, Dict, Optional

import yaml

"""fullcycle - Core Configuration System."""

# --- 1. LOGGING CONFIGURATION ---
LOG_LEVEL = os.getenv("FC_LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("FC_LOG_FILE", None)
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s [%(filename)s:%(lineno)d] - %(message)s'

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
    format=LOG_FORMAT,
    handlers=[
        logging.StreamHandler(),
        logging.FileHandler(LOG_FILE) if LOG_FILE else logging.NullHandler()
    ]
)
logger = logging.getLogger("fullcycle")


def set_log_level(level: str, log_file: Optional[str] = None):
    """Adjust the package loggers after import (used by the CLI flags)."""
    numeric = getattr(logging, level.upper(), logging.INFO)
    for name in ("fullcycle", "fullcycle.proof"):
        logging.getLogger(name).setLevel(numeric)
    if log_file:
        handler = logging.FileHandler(log_file)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)


# --- 2. PATH MANAGEMENT ---
PACKAGE_ROOT = os.path.dirname(os.path.abspath(__file__))
PROJECT_ROOT = os.path.dirname(os.path.dirname(PACKAGE_ROOT))
OUTPUT_DIR = os.path.join(PROJECT_ROOT, "output")

# --- 3. PERFORMANCE & LIMITS ---
MAX_WORKER_PROCESSES = os.cpu_count() or 4
DEFAULT_WORKERS = int(os.getenv("FC_WORKERS", "1"))
DEFAULT_NODE_LIMIT = 10**8
DEFAULT_TIME_LIMIT = 60.0  # seconds per instance
ORACLE_MAX_ORDER = 30

# --- 4. GRAPH CONSTANTS ---
MIN_FULLERENE_ORDER = 20
PENTAGON_COUNT = 12
ALLOWED_FACE_SIZES = (5, 6)
PLANAR_CODE_MAX_ORDER = 255

# --- 5. FORMATS ---
PLANAR_CODE_HEADER = b">>planar_code<<"
GRAPH_FORMATS_SUPPORTED = ["planar_code", "json"]
REPORT_CSV_COLUMNS = [
    "graph_id", "n", "f", "pentagons", "length", "optimal", "w",
    "p3_ok", "pentagon_ok", "two_white_ok", "max_charge_halfunits",
    "conserved", "bound", "bound_ok", "ms",
]

# --- 6. DEFAULTS ---
DEFAULT_SEED = 0
DEFAULT_REROUTE_RADIUS = 1
VERSION = "1.0.0"

# Keys accepted in YAML/JSON run files and the CLI option they feed.
RUN_CONFIG_KEYS = {
    ("budget", "nodes"): "budget_nodes",
    ("budget", "secs"): "budget_secs",
    ("forbid",): "forbid",
    ("radius",): "radius",
    ("seed",): "seed",
    ("workers",): "workers",
}


def load_run_config(path: str) -> Dict[str, Any]:
    """Read a YAML or JSON run file and flatten it into CLI option names."""
    with open(path, 'r') as f:
        data = yaml.safe_load(f) if path.endswith(('.yaml', '.yml')) else json.load(f)
    data = data or {}
    if not isinstance(data, dict):
        raise ValueError(f"run file {path} must hold a mapping, got {type(data).__name__}")
    run = data.get('run', data)

    flat: Dict[str, Any] = {}
    for keys, option in RUN_CONFIG_KEYS.items():
        node: Any = run
        for key in keys:
            if not isinstance(node, dict) or key not in node:
                node = None
                break
            node = node[key]
        if node is not None:
            flat[option] = node
    return flat


def get_settings() -> Dict[str, Any]:
    return {k: v for k, v in globals().items() if k.isupper()}
