"""Linear codes over Z_q: constructions, exact parameters and covering radii."""

__version__ = "0.1.0"
