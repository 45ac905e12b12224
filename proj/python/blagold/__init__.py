"""Blaschke products, golden-ratio constructions and Poncelet ellipses."""

from ._core import (  # noqa: F401
    ALPHA,
    CHORD_THRESHOLD,
    BlagoldError,
    BlaschkeProduct,
    ChordClassification,
    ChordSolution,
    Ellipse,
    GoldenRectangle,
    GoldenTriangle,
    InscribedEllipseSolution,
    PonceletReport,
    TolerancePolicy,
    blaschke3_ellipse,
    construct_identifying_product,
    degree4_ellipse,
    degree4_product_from_foci,
    divides_in_golden_ratio,
    fujimura_cubic,
    fujimura_partner_focus,
    golden_blaschke_ellipse,
    golden_chords,
    golden_rectangle,
    golden_triangle,
    identification_residual,
    inscribed_ellipse_foci,
    is_interspersed,
    preimages_on_circle,
    render_figure,
    rotate_blaschke_ellipse,
    steiner_foci,
    verify_poncelet,
)

__all__ = [name for name in dir() if not name.startswith("_")]
