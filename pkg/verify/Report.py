from typing import Optional, Union

from pydantic import BaseModel, Field

from envelope_raster import GridSpec

Number = Union[int, float]


class Report(BaseModel):
    """Outcome of one verification check; `passed` is derived from `counts` by the check."""
    theorem: str
    passed: bool
    counts: dict[str, Number] = Field(default_factory=dict)
    details: list[str] = Field(default_factory=list)
    seed: Optional[int] = None
    n: int
    grid: Optional[dict] = None
    thresholds: dict[str, Number] = Field(default_factory=dict)

    @staticmethod
    def grid_info(grid: Optional[GridSpec]) -> Optional[dict]:
        if grid is None:
            return None
        return {"width": grid.width, "height": grid.height, "bbox": list(grid.bbox), "jitter": grid.jitter}

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)
