from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.Config import BISITE_THREADS, DEFAULT_GRID_HEIGHT, DEFAULT_GRID_WIDTH, DEFAULT_SEED
from constructions import Provenance
from distances import DistanceKind
from envelope_raster import Mode
from verify import THEOREMS

COMMANDS = ("compute", "verify", "bench", "generate", "arrangement")


class RunConfig(BaseModel):
    """Validated command-line run; `c` stays None unless given so commands can apply their own default."""
    model_config = ConfigDict(frozen=True)

    command: str
    input: Optional[Path] = None
    kind: Optional[DistanceKind] = None
    c: Optional[float] = None
    mode: Mode = Mode.Nearest
    width: int = DEFAULT_GRID_WIDTH
    height: int = DEFAULT_GRID_HEIGHT
    bbox: Optional[tuple[float, float, float, float]] = None
    jitter: bool = True
    seed: int = DEFAULT_SEED
    n: Optional[int] = None
    threads: int = BISITE_THREADS
    output: Optional[Path] = None
    stats: Optional[Path] = None
    theorem: Optional[str] = None
    multiplier: float = 1e3
    construction: Provenance = Provenance.RandomGeneral
    d: float = 10.0
    spread: float = 0.05
    repeats: int = Field(default=3, ge=1)

    @field_validator("width", "height", "threads")
    @classmethod
    def _positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("n")
    @classmethod
    def _site_count(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 2:
            raise ValueError(f"need at least 2 sites, got {v}")
        return v

    @model_validator(mode="after")
    def _check_command(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command '{self.command}'")
        if self.command in ("compute", "arrangement") and self.input is None:
            raise ValueError(f"{self.command} needs an input points file")
        if self.command == "compute" and self.kind is None:
            raise ValueError("compute needs --distance")
        if self.command == "verify" and self.theorem not in THEOREMS + ("all",):
            raise ValueError(f"unknown check '{self.theorem}'; expected one of {', '.join(THEOREMS + ('all',))}")
        if self.bbox is not None:
            xmin, ymin, xmax, ymax = self.bbox
            if not (xmin < xmax and ymin < ymax):
                raise ValueError(f"bbox must satisfy xmin < xmax and ymin < ymax, got {self.bbox}")
        return self
