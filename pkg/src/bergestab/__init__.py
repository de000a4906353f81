"""Turán numbers of Berge matchings: constructions, exact searches and certified stability checks."""

__version__ = "0.1.0"
