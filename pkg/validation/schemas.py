"""Pydantic schemas for input validation

Text documents are tokenized by ``handlers.formats`` and validated here
before any model is built. Cross-field failures raise ``PydanticCustomError``
with a ``path`` in their context so the parser can point at the offending
token.
"""

from typing import Annotated, Callable, List, Optional, Tuple

from pydantic import AfterValidator, BaseModel, Field, field_validator, model_validator
from pydantic_core import PydanticCustomError

from config import AUDIT_LIMIT, MAX_VERTICES, VARIABLE_PREFIXES
from models.complex import SimplicialComplex
from models.ideal import SqfIdeal
from models.kinds import Category, FunctorKind, ProductKind
from models.set_map import SetMap
from models.vertex_set import VertexSet
from utils.validators import ideal_label_problem, label_problem


def _label_check(rule: Callable[[str], Optional[str]]) -> Callable[[str], str]:
    def check(value: str) -> str:
        problem = rule(value)
        if problem:
            raise PydanticCustomError(
                "invalid_label",
                "invalid label '{label}': {problem}",
                {"label": value, "problem": problem},
            )
        return value

    return check


Label = Annotated[str, AfterValidator(_label_check(label_problem))]
# ring labels must also survive the monomial syntax
IdealLabel = Annotated[str, AfterValidator(_label_check(ideal_label_problem))]


def _check_distinct(field: str, labels: List[str]) -> None:
    seen = set()
    for i, label in enumerate(labels):
        if label in seen:
            raise PydanticCustomError(
                "duplicate_label",
                "duplicate label '{label}'",
                {"label": label, "path": (field, i)},
            )
        seen.add(label)


def _check_known(field: str, known: set, groups: List[List[str]]) -> None:
    for i, group in enumerate(groups):
        for j, label in enumerate(group):
            if label not in known:
                raise PydanticCustomError(
                    "unknown_label",
                    "unknown label '{label}'",
                    {"label": label, "path": (field, i, j)},
                )


# === DOCUMENTS ===


class ComplexDocument(BaseModel):
    """A complex as read from text; ``facets=None`` is the void complex"""

    vertices: List[Label] = Field(..., max_length=MAX_VERTICES, description="Vertex labels")
    facets: Optional[List[List[Label]]] = Field(None, description="Generating sets")

    @model_validator(mode="after")
    def validate_facets(self) -> "ComplexDocument":
        """Facet labels must be vertices, listed once per facet"""
        _check_distinct("vertices", self.vertices)
        if self.facets:
            _check_known("facets", set(self.vertices), self.facets)
            for i, facet in enumerate(self.facets):
                if len(set(facet)) != len(facet):
                    raise PydanticCustomError(
                        "repeated_member", "label repeated inside a facet", {"path": ("facets", i)}
                    )
        return self

    def to_complex(self) -> SimplicialComplex:
        vertices = VertexSet(tuple(self.vertices))
        if self.facets is None:
            return SimplicialComplex.void(vertices)
        return SimplicialComplex.from_labels(vertices, self.facets)


class MapDocument(BaseModel):
    """A total map as a list of ``source -> target`` pairs"""

    domain: List[Label] = Field(..., max_length=MAX_VERTICES)
    codomain: List[Label] = Field(..., max_length=MAX_VERTICES)
    assignment: List[Tuple[Label, Label]] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_total(self) -> "MapDocument":
        """Every domain label is sent exactly once into the codomain"""
        _check_distinct("domain", self.domain)
        _check_distinct("codomain", self.codomain)
        domain, codomain = set(self.domain), set(self.codomain)
        mapped = set()

        for i, (source, target) in enumerate(self.assignment):
            if source not in domain:
                raise PydanticCustomError(
                    "unknown_label",
                    "'{label}' is not in the domain",
                    {"label": source, "path": ("assignment", i, 0)},
                )
            if target not in codomain:
                raise PydanticCustomError(
                    "unknown_label",
                    "'{label}' is not in the codomain",
                    {"label": target, "path": ("assignment", i, 1)},
                )
            if source in mapped:
                raise PydanticCustomError(
                    "duplicate_label",
                    "'{label}' is mapped twice",
                    {"label": source, "path": ("assignment", i, 0)},
                )
            mapped.add(source)

        missing = [lb for lb in self.domain if lb not in mapped]
        if missing:
            raise PydanticCustomError(
                "not_total",
                "map is not total, unmapped: {labels}",
                {"labels": " ".join(missing), "path": ("assignment",)},
            )
        return self

    def to_map(self) -> SetMap:
        return SetMap.from_mapping(
            VertexSet(tuple(self.domain)), VertexSet(tuple(self.codomain)), dict(self.assignment)
        )


class IdealDocument(BaseModel):
    """Generator supports over a ring; ``[[]]`` is the unit ideal"""

    ring: List[IdealLabel] = Field(..., max_length=MAX_VERTICES)
    generators: List[List[Label]] = Field(default_factory=list)
    prefix: str = Field(default="x", description="Variable prefix")

    @field_validator("prefix")
    @classmethod
    def validate_prefix(cls, v: str) -> str:
        if v not in VARIABLE_PREFIXES:
            raise ValueError(f"prefix must be one of: {', '.join(VARIABLE_PREFIXES)}")
        return v

    @model_validator(mode="after")
    def validate_generators(self) -> "IdealDocument":
        _check_distinct("ring", self.ring)
        _check_known("generators", set(self.ring), self.generators)
        return self

    def to_ideal(self) -> SqfIdeal:
        ring = VertexSet(tuple(self.ring))
        return SqfIdeal(ring, tuple(ring.mask(g) for g in self.generators))


# === COMMAND OPTIONS ===


def _tag(v):
    return v.strip().lower().replace("-", "_") if isinstance(v, str) else v


class ApplyOptions(BaseModel):
    functor: FunctorKind

    @field_validator("functor", mode="before")
    @classmethod
    def normalize(cls, v):
        return _tag(v)


class ProductOptions(BaseModel):
    kind: ProductKind
    route: str = Field(default="direct")

    @field_validator("kind", mode="before")
    @classmethod
    def normalize(cls, v):
        return _tag(v)

    @field_validator("route")
    @classmethod
    def validate_route(cls, v: str) -> str:
        if v not in ("direct", "adjoint", "ideal"):
            raise ValueError("route must be one of: direct, adjoint, ideal")
        return v


class MorphismOptions(BaseModel):
    category: Category

    @field_validator("category", mode="before")
    @classmethod
    def normalize(cls, v):
        return _tag(v)


class CheckOptions(BaseModel):
    """Audit parameters"""

    trials: int = Field(..., ge=1, description="Number of random trials")
    max_vertices: int = Field(..., ge=1, le=AUDIT_LIMIT, description="Largest vertex set")
    seed: int = Field(..., ge=0, description="Root seed")


class IdealRenderOptions(BaseModel):
    prefix: str = Field(default="x")

    @field_validator("prefix")
    @classmethod
    def validate_prefix(cls, v: str) -> str:
        if v not in VARIABLE_PREFIXES:
            raise ValueError(f"prefix must be one of: {', '.join(VARIABLE_PREFIXES)}")
        return v
