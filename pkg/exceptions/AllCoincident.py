from .GeometryError import GeometryError

class AllCoincident(GeometryError):
    """All three points of an enclosing-circle query coincide."""
