"""Shard polytopes, quotientopes and their Minkowski coordinates, with exact arithmetic."""

__version__ = "0.1.0"
