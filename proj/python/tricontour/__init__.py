"""Fourier-type series on constant-width triangle curves.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from tricontour._core import (  # noqa: F401
    INFINITE_SMOOTHNESS,
    CkWitness,
    Contour,
    GlyphDocument,
    JacobsthalCoeffs,
    OperatorConfig,
    QuotientTableRow,
    Regime,
    RenderOptions,
    SampledLoop,
    ShapeMetrics,
    SpectralSeries,
    TricontourError,
    WidthParam,
    __version__,
    analyze,
    ck_convergence_witness,
    curvature_radius,
    cw_coefficients,
    cw_inner_product,
    cw_synthesize,
    diff_quotient_table,
    dilate,
    emit_svg,
    evaluate,
    extract_path_data,
    growth_ratio,
    inverse_cosine_partial,
    inverse_sine_partial,
    jacobsthal_closed,
    jacobsthal_sequence,
    load_glyph,
    loop_distance,
    loop_norm,
    max_smoothness,
    minimal_transform_samples,
    normalize,
    parse_points_csv,
    parse_svg_path,
    rational_sqrt,
    resample_arclength,
    shape_metrics,
    smoothness_threshold,
    spectrum_from_json,
    spectrum_to_json,
    support_function,
    sweep_filename,
    synthesize,
    tail_sum,
    transform_glyph,
    triangle_mode_spectrum,
    triangle_point,
    triangle_transform,
    truncate,
    truncate_glyph,
    truncated_inverse,
)
