"""Edge-to-edge sphere tilings by congruent a^3b quadrilaterals.

Angles and arc lengths are measured in units of pi throughout.
"""

from .errors import (
    A3bError,
    DegeneracyError,
    DegenerateBetaError,
    DomainError,
    GeometricInconsistencyError,
    InconsistentQuadrilateralError,
    InvalidParameterError,
    PreconditionError,
    RhombusReductionError,
    SingularConfigurationError,
)
from .trig_kernel import AngleQuad, EdgePair, Quadrilateral, check_quad, make_quad
from .quad_family import ModuliPoint, emt_quad, flip_admissible, moduli_point_quad
from .tiling_model import Tiling, from_corners, validate, vertex_census
from .generator import apply_flips, build_emt, enumerate_flip_tilings, sporadic
from .geometry_realizer import emt_coordinates, export_json, export_obj, load_json, realize_by_propagation

__version__ = "0.1.0"

__all__ = [
    "A3bError",
    "DegeneracyError",
    "DegenerateBetaError",
    "DomainError",
    "GeometricInconsistencyError",
    "InconsistentQuadrilateralError",
    "InvalidParameterError",
    "PreconditionError",
    "RhombusReductionError",
    "SingularConfigurationError",
    "AngleQuad",
    "EdgePair",
    "Quadrilateral",
    "check_quad",
    "make_quad",
    "ModuliPoint",
    "emt_quad",
    "flip_admissible",
    "moduli_point_quad",
    "Tiling",
    "from_corners",
    "validate",
    "vertex_census",
    "apply_flips",
    "build_emt",
    "enumerate_flip_tilings",
    "sporadic",
    "emt_coordinates",
    "export_json",
    "export_obj",
    "load_json",
    "realize_by_propagation",
]
