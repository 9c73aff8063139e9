"""Demyanov converter on finite families of planar convex polytopes.

Coordinates are exact: they come back as ``fractions.Fraction`` and may be
given as ints, Fractions, or strings such as ``"1/2"``. Floats are rejected.
"""

from ._core import (
    CapExceeded,
    ClaimViolated,
    Collection,
    CycleResult,
    DegenerateSector,
    EmptyInput,
    Error,
    GenerationFailed,
    InvariantViolation,
    ParseError,
    Polytope,
    SearchReport,
    builtin_counterexample,
    convex_hull,
    converter_image,
    demyanov_convert,
    edge_normals,
    evaluate_counterexample_claim,
    exposed_face,
    fan_rays,
    iterate_until_cycle,
    parse_family,
    random_family,
    reflect_y,
    render_svg,
    sampled_convert,
    search_cycles,
    serialize_family,
    support_value,
    test_directions,
    verify_counterexample_claim,
)

__all__ = [name for name in dir() if not name.startswith("_")]
