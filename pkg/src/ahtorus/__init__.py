"""Exact Altmann-Hausen presentations of fully hyperbolic torus actions."""

from .algebra import (
    check_equivariant_hypersurface,
    evaluate,
    invariant_ring_generators,
    presentation_bounded,
    sections_plane,
    toric_sections,
)
from .classification import (
    UNDECIDED,
    CurveSpec,
    MuAction,
    Verdict,
    a1_check,
    linearization_verdict,
    mu_invariance_check,
    product_split,
    snc_check,
)
from .fan2d import coarsest_refinement, surface_info
from .fixed_points import SubtorusDirection, fixed_components, fixed_locus_survey, oracle_fixed_points_linear
from .lattice import IntMatrix, cokernel_map, section, smith_normal_form, validate_exact_sequence
from .polyhedra import Cone, Polyhedron, line_slice_positive_length, minkowski_sum, support_min
from .presentation import AHPresentation, ah_presentation, fully_hyperbolic_check, shift_equivalent

__version__ = "0.1.0"
