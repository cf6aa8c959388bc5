from .GeometryError import GeometryError

class DegenerateInput(GeometryError):
    """The site set is degenerate (e.g. all collinear) for this structure."""
