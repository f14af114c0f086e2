"""Exact Romanovski polynomials, the hypergeometric family they belong to, and
the Scarf II / non-central angular problems built on them."""
from .hypergeq import HypergeqParams, classify, master_coefficients, rodrigues_poly
from .polycore import ExactPoly, QArctanForm
from .romanovski import RomanovskiParams, romanovski
from .scarf import ScarfParams, spectrum_II, wavefunction_II

__version__ = "0.1.0"

__all__ = [
    "ExactPoly",
    "QArctanForm",
    "HypergeqParams",
    "classify",
    "master_coefficients",
    "rodrigues_poly",
    "RomanovskiParams",
    "romanovski",
    "ScarfParams",
    "spectrum_II",
    "wavefunction_II",
]
