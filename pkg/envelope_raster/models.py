import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from distances import DistanceSpec, SitePair

UNDEFINED = -1
TIE = -2

# sample offset inside a cell when jitter is on: half a cell plus a small
# irrational fraction, so lattice-aligned sites never coincide with samples
JITTER_FRACTION = (math.sqrt(5.0) - 1.0) / 2.0 * 1e-3


class Mode(str, Enum):
    Nearest = "nearest"
    Furthest = "furthest"


class GridSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    bbox: tuple[float, float, float, float]
    width: int = 512
    height: int = 512
    jitter: bool = True

    @model_validator(mode="after")
    def _check(self):
        xmin, ymin, xmax, ymax = self.bbox
        if not all(math.isfinite(v) for v in self.bbox):
            raise ValueError("bbox must be finite")
        if not (xmin < xmax and ymin < ymax):
            raise ValueError(f"bbox must satisfy xmin < xmax and ymin < ymax, got {self.bbox}")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("grid width and height must be positive")
        return self

    @property
    def dx(self) -> float:
        return (self.bbox[2] - self.bbox[0]) / self.width

    @property
    def dy(self) -> float:
        return (self.bbox[3] - self.bbox[1]) / self.height

    @property
    def offset(self) -> float:
        return 0.5 + (JITTER_FRACTION if self.jitter else 0.0)

    def xs(self) -> np.ndarray:
        return self.bbox[0] + (np.arange(self.width) + self.offset) * self.dx

    def ys(self) -> np.ndarray:
        return self.bbox[1] + (np.arange(self.height) + self.offset) * self.dy

    def cell_diagonal(self) -> float:
        return math.hypot(self.dx, self.dy)

    def describe(self) -> str:
        return f"{self.width}x{self.height}"


@dataclass(frozen=True)
class RasterDiagram:
    """
    labels[r, c] is the index into candidates of the owning pair (the
    lexicographic winner when ties[r, c] is set) or UNDEFINED. Row r samples
    y = ymin + (r + offset) * dy, so row 0 is the bottom of the bbox.
    """
    labels: np.ndarray
    ties: np.ndarray
    mode: Mode
    spec: DistanceSpec
    candidates: tuple[SitePair, ...]
    grid: GridSpec
    n_sites: int

    def grid_with_sentinels(self) -> np.ndarray:
        return np.where(self.ties, TIE, self.labels)

    def pair_codes(self) -> np.ndarray:
        """Labels as i * n + j codes, comparable across candidate lists; sentinels kept."""
        codes = np.array([p.i * self.n_sites + p.j for p in self.candidates], dtype=np.int64)
        out = np.where(self.labels >= 0, codes[np.clip(self.labels, 0, None)], UNDEFINED)
        return np.where(self.ties, TIE, out)

    def nonempty_pairs(self) -> set[SitePair]:
        owned = self.labels[(self.labels >= 0) & ~self.ties]
        return {self.candidates[k] for k in np.unique(owned)}


@dataclass(frozen=True)
class PairRegion:
    pair: SitePair
    cells: int
    components: int


@dataclass(frozen=True)
class RegionStats:
    per_pair: tuple[PairRegion, ...]
    nonempty_pairs: int
    tie_cells: int
    undefined_cells: int
    raster_vertices: int
    total_cells: int = field(default=0)
