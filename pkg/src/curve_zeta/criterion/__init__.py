"""B1-facet pole criterion, closed-form residues and the nondegeneracy test."""

from .formulas import (
    F_identity_terms,
    Side,
    closed_form_residue,
    facet_contribution,
    facet_residue,
    factor_F,
    noncompact_residue,
    noncompact_vertex_term,
    ray_frame,
    three_term_sum,
    vertex_contribution,
)
from .frame import FrameError, ProofFacetFrame, frame_for_facet
from .nondegeneracy import (
    FaceStatus,
    NondegeneracyReport,
    edge_polynomial,
    has_singular_torus_root,
    nondegeneracy_check,
)
from .verdict import (
    CriterionEntry,
    CriterionVerdict,
    ResidueCheck,
    predicted_poles,
    verify_criterion,
)

__all__ = [
    "F_identity_terms",
    "Side",
    "closed_form_residue",
    "facet_contribution",
    "facet_residue",
    "factor_F",
    "noncompact_residue",
    "noncompact_vertex_term",
    "ray_frame",
    "three_term_sum",
    "vertex_contribution",
    "FrameError",
    "ProofFacetFrame",
    "frame_for_facet",
    "FaceStatus",
    "NondegeneracyReport",
    "edge_polynomial",
    "has_singular_torus_root",
    "nondegeneracy_check",
    "CriterionEntry",
    "CriterionVerdict",
    "ResidueCheck",
    "predicted_poles",
    "verify_criterion",
]
