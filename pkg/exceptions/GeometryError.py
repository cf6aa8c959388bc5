class GeometryError(Exception):
    """Base class for geometry errors."""
