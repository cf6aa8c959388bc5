from .GeometryError import GeometryError

class DuplicatePoint(GeometryError):
    """Two inputs that must be distinct coincide."""
