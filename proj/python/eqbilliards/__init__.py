"""Periodic billiard orbits in the equilateral triangle."""

from ._core import (
    CollinearityViolation,
    InvalidClass,
    NotOnBoundary,
    OrbitClass,
    VertexHit,
    classify_odd_period,
    count_classes,
    count_primitive,
    enumerate_classes,
    example_primitive,
    fagnano,
    fold,
    render_folded,
    render_unfolded,
    run_cli,
    simulate,
    table,
    verify,
)

__all__ = [
    "CollinearityViolation",
    "InvalidClass",
    "NotOnBoundary",
    "OrbitClass",
    "VertexHit",
    "classify_odd_period",
    "count_classes",
    "count_primitive",
    "enumerate_classes",
    "example_primitive",
    "fagnano",
    "fold",
    "render_folded",
    "render_unfolded",
    "run_cli",
    "simulate",
    "table",
    "verify",
]
