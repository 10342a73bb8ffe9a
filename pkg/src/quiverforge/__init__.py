"""quiverforge: exact invariants of bound quiver algebra representations."""

__version__ = "0.1.0"
