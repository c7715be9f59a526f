"""Coherence and entanglement harvesting model for Gaussian-switched
Unruh-DeWitt detector pairs and triples.

All quantities are dimensionless: `coupling` is the interaction strength,
`gap` is the detector frequency times the switching width, and separations
are in units of the switching width.
"""

from ._core import (
    correlation_c,
    correlation_x,
    erf,
    erfc,
    erfcx,
    figure_csv,
    selftest,
    three_detector,
    transition_probability,
    two_detector,
)

__all__ = [
    "correlation_c",
    "correlation_x",
    "erf",
    "erfc",
    "erfcx",
    "figure_csv",
    "selftest",
    "three_detector",
    "transition_probability",
    "two_detector",
]

__version__ = "0.1.0"
