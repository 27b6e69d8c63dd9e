"""stuq: exact q-series engine for STU-model curve counting."""

from .series import BiSeries, LaurentSeries, Rat, SeriesError

__all__ = ["BiSeries", "LaurentSeries", "Rat", "SeriesError"]
__version__ = "0.1.0"
