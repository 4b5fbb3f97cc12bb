class CapacityError(RuntimeError):
    """A requested computation exceeds a documented size cap."""
