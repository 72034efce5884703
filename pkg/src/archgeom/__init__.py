"""Hyperbolic (Poincare model) geometry and box-counting fractal analysis."""

__version__ = "0.1.0"
