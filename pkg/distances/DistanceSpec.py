from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator


class DistanceKind(str, Enum):
    Circumradius = "circumradius"
    ContainingRadius = "containing"
    ViewAngle = "viewangle"
    InscribedRadius = "inradius"
    CccSegmentDist = "ccc-dist"
    CccArea = "ccc-area"
    CccPerimeter = "ccc-perimeter"
    ParamPerimeter = "param-perimeter"


class DistanceSpec(BaseModel):
    """Selects one of the eight 2-site distance functions; c only matters for ParamPerimeter."""
    model_config = ConfigDict(frozen=True)

    kind: DistanceKind
    c: float = 1.0

    @model_validator(mode="after")
    def _check_c(self):
        if self.kind is DistanceKind.ParamPerimeter and self.c < -1.0:
            raise ValueError(f"ParamPerimeter requires c >= -1, got {self.c}")
        return self

    @property
    def uses_c(self) -> bool:
        return self.kind is DistanceKind.ParamPerimeter

    def label(self) -> str:
        if self.uses_c:
            return f"{self.kind.value}(c={self.c:g})"
        return self.kind.value


class DistanceValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: Optional[float] = None
    defined: bool = True

    @model_validator(mode="after")
    def _check_defined(self):
        if self.defined and self.value is None:
            raise ValueError("a defined DistanceValue needs a value")
        if not self.defined and self.value is not None:
            raise ValueError("an undefined DistanceValue carries no value")
        return self

    @classmethod
    def undefined(cls) -> "DistanceValue":
        return cls(value=None, defined=False)


class SitePair(BaseModel):
    """Unordered site pair stored as i < j."""
    model_config = ConfigDict(frozen=True)

    i: int
    j: int

    @model_validator(mode="after")
    def _check_order(self):
        if not 0 <= self.i < self.j:
            raise ValueError(f"SitePair needs 0 <= i < j, got ({self.i}, {self.j})")
        return self

    @classmethod
    def of(cls, a: int, b: int) -> "SitePair":
        return cls(i=min(a, b), j=max(a, b))

    def as_tuple(self) -> tuple[int, int]:
        return self.i, self.j
