from .GeometryError import GeometryError

class EmptyCandidates(GeometryError):
    """No candidate site pairs were supplied."""
