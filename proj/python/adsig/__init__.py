"""Exact distance-spectrum checks for affine resolvable designs.

The heavy lifting lives in the C++ extension ``adsig._core``; this package
adds small conveniences for working with the JSON reports.
"""

import json

try:
    from . import _core
except ImportError:  # development builds keep the extension on sys.path
    import _core

Design = _core.Design
DesignError = _core.DesignError
DesignParams = _core.DesignParams
HadamardMatrix = _core.HadamardMatrix
Signature = _core.Signature
build_affine_geometry = _core.build_affine_geometry
build_hadamard_paley = _core.build_hadamard_paley
build_hadamard_sylvester = _core.build_hadamard_sylvester
case_signature = _core.case_signature
char_poly = _core.char_poly
design_from_json = _core.design_from_json
design_to_json = _core.design_to_json
det_exact = _core.det_exact
distance_matrix = _core.distance_matrix
hadamard_to_affine_design = _core.hadamard_to_affine_design
incidence_matrix = _core.incidence_matrix
inertia = _core.inertia
predicted_charpoly = _core.predicted_charpoly
signature_from_factors = _core.signature_from_factors
structured_det = _core.structured_det
sweep_json = _core.sweep_json
validate_affine = _core.validate_affine
verify_design_json = _core.verify_design_json

__all__ = [
    "Design",
    "DesignError",
    "DesignParams",
    "HadamardMatrix",
    "Signature",
    "build_affine_geometry",
    "build_hadamard_paley",
    "build_hadamard_sylvester",
    "case_signature",
    "char_poly",
    "design_from_json",
    "design_to_json",
    "det_exact",
    "distance_matrix",
    "hadamard_to_affine_design",
    "incidence_matrix",
    "inertia",
    "predicted_charpoly",
    "signature_from_factors",
    "structured_det",
    "sweep",
    "sweep_json",
    "validate_affine",
    "verify",
    "verify_design_json",
]


def verify(design):
    """Run every verification check on ``design``; returns the report dict."""
    return json.loads(verify_design_json(design))


def sweep(n_max, mu_max):
    """Compare the two signature predictions over a parameter grid."""
    return json.loads(sweep_json(n_max, mu_max))
