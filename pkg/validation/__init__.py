"""Validation module with Pydantic schemas"""

from validation.schemas import (
    ApplyOptions,
    CheckOptions,
    ComplexDocument,
    IdealDocument,
    IdealRenderOptions,
    MapDocument,
    MorphismOptions,
    ProductOptions,
)

__all__ = [
    "ComplexDocument",
    "MapDocument",
    "IdealDocument",
    "ApplyOptions",
    "ProductOptions",
    "MorphismOptions",
    "CheckOptions",
    "IdealRenderOptions",
]
