"""Mellin-type integrals: continuation, poles, residues."""

from .beta import beta_identity_check, recognize_beta, reproduce_example_43, x3y3_x7_y8_residue
from .continuation import AxisFunction, direct_mellin, g_continuation
from .integrals import (
    Integrand,
    PoleReport,
    axis_function,
    candidate_poles,
    certify_positive,
    monomial_change,
    residue_at,
)
from .pipeline import load_pipeline, pipeline_from_dict, run_pipeline
from .poly import Poly1, Poly2, parse_poly2
from .quadrature import DEFAULT_CONFIG, QuadConfig, beta
