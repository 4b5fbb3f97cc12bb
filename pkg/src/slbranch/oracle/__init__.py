"""Brute-force matrix-group oracle used to cross-check the parametric counts."""

from .field import ZechField, zech_field
from .groups import (
    ORACLE_CAP,
    ConjClasses,
    GroupSpec,
    OracleGroup,
    centralizer_scan,
    class_splitting,
    det_image_of_centralizer,
    element_order,
    oracle_group,
    orbit_size,
)
from .matrices import MatrixSpace, matrix_space
from .reps import class_rep, embedding, minimal_polynomial

__all__ = [
    "ORACLE_CAP",
    "ConjClasses",
    "GroupSpec",
    "MatrixSpace",
    "OracleGroup",
    "ZechField",
    "centralizer_scan",
    "class_splitting",
    "det_image_of_centralizer",
    "element_order",
    "matrix_space",
    "oracle_group",
    "orbit_size",
    "zech_field",
    "class_rep",
    "embedding",
    "minimal_polynomial",
]
