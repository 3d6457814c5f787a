"""Exact workbench for finite spectral triples of the Pati-Salam family."""

__version__ = "0.1.0"
