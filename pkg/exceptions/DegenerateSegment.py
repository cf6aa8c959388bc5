from .GeometryError import GeometryError

class DegenerateSegment(GeometryError):
    """A segment has identical endpoints."""
