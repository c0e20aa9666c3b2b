"""Spectral correspondence for cyclic Higgs bundles, computed exactly on an affine chart."""
__version__ = "0.1.0"
