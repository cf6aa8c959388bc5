class InputParseError(Exception):
    """Custom exception for malformed points files."""
    pass
