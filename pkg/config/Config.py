# Config.py
"""
Configuration module for the 2-site Voronoi toolkit.

- Loads environment variables using python-dotenv (if available)
- Provides typed constants for all configuration fields
- Designed for clean imports: `from config.Config import DEFAULT_GRID_WIDTH`
"""

import os
import logging
import sys
from dotenv import load_dotenv

# Load .env file if present
load_dotenv()


def _int_env(name: str, default: int) -> int:
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return default


def _float_env(name: str, default: float) -> float:
    try:
        return float(os.getenv(name, repr(default)))
    except ValueError:
        return default


# ---------- Parallelism ----------
AVAILABLE_PARALLELISM: int = len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
BISITE_THREADS: int = max(1, _int_env("BISITE_THREADS", AVAILABLE_PARALLELISM))

# ---------- Raster defaults ----------
DEFAULT_GRID_WIDTH: int = _int_env("BISITE_GRID_WIDTH", 512)
DEFAULT_GRID_HEIGHT: int = _int_env("BISITE_GRID_HEIGHT", 512)
BBOX_INFLATION: float = _float_env("BISITE_BBOX_INFLATION", 0.25)
# rows per evaluation chunk; fixed so results never depend on the thread count
RASTER_CHUNK_ROWS: int = max(1, _int_env("BISITE_CHUNK_ROWS", 16))
DEFAULT_SEED: int = _int_env("BISITE_SEED", 0)

# ---------- Tolerances ----------
TIE_RTOL: float = _float_env("BISITE_TIE_RTOL", 1e-12)
VALUE_TOL: float = _float_env("BISITE_VALUE_TOL", 1e-9)
RIGHT_ANGLE_RTOL: float = _float_env("BISITE_RIGHT_ANGLE_RTOL", 1e-9)
DEDUP_TOL: float = _float_env("BISITE_DEDUP_TOL", 1e-9)
ARRANGEMENT_MERGE_TOL: float = _float_env("BISITE_ARRANGEMENT_MERGE_TOL", 1e-9)
AGREEMENT_THRESHOLD: float = _float_env("BISITE_AGREEMENT", 0.999)

# ---------- Constructions ----------
MAX_GENERICITY_RETRIES: int = _int_env("BISITE_MAX_RETRIES", 100)

# ---------- Logging ----------
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
logging.basicConfig(level=LOG_LEVEL, format="%(asctime)s %(levelname)s %(message)s", stream=sys.stderr)


# ---------- Helper for Debug ----------
def debug_print_config():
    """Print current config values for debugging."""
    print("2-site Voronoi Configuration:")
    print(f"  BISITE_THREADS = {BISITE_THREADS} (available {AVAILABLE_PARALLELISM})")
    print(f"  DEFAULT_GRID = {DEFAULT_GRID_WIDTH}x{DEFAULT_GRID_HEIGHT}")
    print(f"  BBOX_INFLATION = {BBOX_INFLATION}")
    print(f"  RASTER_CHUNK_ROWS = {RASTER_CHUNK_ROWS}")
    print(f"  DEFAULT_SEED = {DEFAULT_SEED}")
    print(f"  TIE_RTOL = {TIE_RTOL}")
    print(f"  VALUE_TOL = {VALUE_TOL}")
    print(f"  RIGHT_ANGLE_RTOL = {RIGHT_ANGLE_RTOL}")
    print(f"  DEDUP_TOL = {DEDUP_TOL}")
    print(f"  ARRANGEMENT_MERGE_TOL = {ARRANGEMENT_MERGE_TOL}")
    print(f"  AGREEMENT_THRESHOLD = {AGREEMENT_THRESHOLD}")
    print(f"  MAX_GENERICITY_RETRIES = {MAX_GENERICITY_RETRIES}")
    print(f"  LOG_LEVEL = {LOG_LEVEL}")
