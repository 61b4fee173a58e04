"""Candidate Bernstein-Sato exponents of plane curve singularities.

Generating series from characteristic sequences and resolution graphs,
monodromy bookkeeping, Newton-polygon candidate roots, and numerical
residues of Mellin-type integrals.
"""

from .charseq import CharSeq, NewtonPairs, parse_charseq, parse_newton_pairs, yano_data, yano_series
from .fracseries import FracSeries, block
from .newton import NewtonPolygon, bf_roots, polygon_from_support
from .resgraph import (
    ResGraph,
    eigenvalue_multiplicities,
    extended_yano_series,
    from_newton_pairs,
    milnor_number,
)

__version__ = "0.1.0"
