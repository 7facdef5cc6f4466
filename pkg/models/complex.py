"""Simplicial complexes stored as facet antichains"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Tuple

from config import ENUMERATION_LIMIT
from models.vertex_set import Subset, VertexSet
from utils.error_handler import ConstructionError, VertexSetMismatchError, ensure_guard
from utils.helpers import is_submask, maximal_masks, minimal_transversals, popcount, submasks


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """A downward closed family of subsets of ``vertices``

    Stored by its facets, kept as an antichain in canonical order. The void
    complex has no facets at all; the complex ``{∅}`` has the single facet 0.
    """

    vertices: VertexSet
    facet_masks: Tuple[int, ...]

    def __post_init__(self):
        full = self.vertices.full
        for mask in self.facet_masks:
            if mask < 0 or mask & ~full:
                raise ConstructionError(f"facet mask {mask} exceeds {self.vertices!r}")
        facets = sorted(maximal_masks(self.facet_masks), key=self.vertices.sort_key)
        object.__setattr__(self, "facet_masks", tuple(facets))

    # === CONSTRUCTION ===

    @classmethod
    def from_masks(cls, vertices: VertexSet, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(vertices, tuple(masks))

    @classmethod
    def from_facets(cls, vertices: VertexSet, sets: Iterable[Subset]) -> "SimplicialComplex":
        """Complex generated by ``sets``; non-maximal inputs are dropped

        Example:
            >>> A = VertexSet.of("123")
            >>> SimplicialComplex.from_facets(A, [A.subset("12"), A.subset("1")]).facets
            ({1 2},)
        """
        return cls(vertices, tuple(vertices.coerce(s).mask for s in sets))

    @classmethod
    def from_labels(cls, vertices: VertexSet, facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        return cls(vertices, tuple(vertices.mask(f) for f in facets))

    @classmethod
    def void(cls, vertices: VertexSet) -> "SimplicialComplex":
        return cls(vertices, ())

    @classmethod
    def empty_face(cls, vertices: VertexSet) -> "SimplicialComplex":
        """The complex {∅}"""
        return cls(vertices, (0,))

    @classmethod
    def simplex(cls, vertices: VertexSet) -> "SimplicialComplex":
        return cls(vertices, (vertices.full,))

    @classmethod
    def boundary(cls, vertices: VertexSet) -> "SimplicialComplex":
        """All proper subsets; void when ``vertices`` is empty"""
        full = vertices.full
        return cls(vertices, tuple(full ^ (1 << i) for i in range(len(vertices))))

    @classmethod
    def from_cofacet_masks(cls, vertices: VertexSet, masks: Iterable[int]) -> "SimplicialComplex":
        """Complex whose minimal non-faces are generated by ``masks``

        Facets are the complements of the minimal transversals of the
        non-face family.
        """
        full = vertices.full
        return cls(vertices, tuple(full & ~t for t in minimal_transversals(masks)))

    @classmethod
    def from_cofacets(cls, vertices: VertexSet, sets: Iterable[Subset]) -> "SimplicialComplex":
        return cls.from_cofacet_masks(vertices, (vertices.coerce(s).mask for s in sets))

    # === QUERIES ===

    @property
    def facets(self) -> Tuple[Subset, ...]:
        return tuple(Subset(self.vertices, m) for m in self.facet_masks)

    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    def contains_mask(self, mask: int) -> bool:
        return any(is_submask(mask, facet) for facet in self.facet_masks)

    def is_face(self, subset: Subset) -> bool:
        return self.contains_mask(self.vertices.coerce(subset).mask)

    def face_masks(self) -> List[int]:
        """Every face, in canonical order"""
        ensure_guard("faces", len(self.vertices), ENUMERATION_LIMIT)
        found = set()
        for facet in self.facet_masks:
            found.update(submasks(facet))
        return sorted(found, key=self.vertices.sort_key)

    def faces(self) -> List[Subset]:
        return [Subset(self.vertices, m) for m in self.face_masks()]

    @cached_property
    def cofacet_masks(self) -> Tuple[int, ...]:
        """Minimal non-faces: minimal transversals of the facet complements"""
        full = self.vertices.full
        found = minimal_transversals(full & ~facet for facet in self.facet_masks)
        return tuple(sorted(found, key=self.vertices.sort_key))

    def cofacets(self) -> List[Subset]:
        return [Subset(self.vertices, m) for m in self.cofacet_masks]

    @property
    def dimension(self) -> Optional[int]:
        """Largest facet size minus one; None for the void complex"""
        if self.is_void:
            return None
        return max(popcount(m) for m in self.facet_masks) - 1

    @property
    def support_mask(self) -> int:
        mask = 0
        for facet in self.facet_masks:
            mask |= facet
        return mask

    def support(self) -> Subset:
        """Vertices ``a`` with {a} a face"""
        return Subset(self.vertices, self.support_mask)

    def cosupport(self) -> Subset:
        """Vertices ``a`` with the complement of {a} a face"""
        full = self.vertices.full
        mask = 0
        for i in range(len(self.vertices)):
            if self.contains_mask(full ^ (1 << i)):
                mask |= 1 << i
        return Subset(self.vertices, mask)

    # === COMPARISON ===

    def _aligned_facets(self, other: "SimplicialComplex") -> Tuple[int, ...]:
        if other.vertices != self.vertices:
            raise VertexSetMismatchError(
                f"complexes on {self.vertices!r} and {other.vertices!r}"
            )
        if other.vertices.labels == self.vertices.labels:
            return other.facet_masks
        return tuple(self.vertices.translate(m, other.vertices) for m in other.facet_masks)

    def is_subcomplex(self, other: "SimplicialComplex") -> bool:
        """Every face of ``self`` is a face of ``other``"""
        theirs = self._aligned_facets(other)
        return all(any(is_submask(m, t) for t in theirs) for m in self.facet_masks)

    def __le__(self, other: "SimplicialComplex") -> bool:
        return self.is_subcomplex(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if other.vertices != self.vertices:
            return False
        return set(self._aligned_facets(other)) == set(self.facet_masks)

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(f.members for f in self.facets)))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex({self.vertices!r}, void)"
        return f"SimplicialComplex({self.vertices!r}, {' '.join(map(repr, self.facets))})"

    # === RE-HOUSING ===

    def rehouse(self, vertices: VertexSet) -> "SimplicialComplex":
        """The same faces seen on a larger vertex set"""
        if not self.vertices.issubset(vertices):
            raise VertexSetMismatchError(f"{self.vertices!r} is not inside {vertices!r}")
        return SimplicialComplex(
            vertices, tuple(vertices.translate(m, self.vertices) for m in self.facet_masks)
        )

    def relabel(self, mapping: dict) -> "SimplicialComplex":
        """Rename vertices through a bijection ``old label -> new label``"""
        vertices = VertexSet(tuple(mapping[lb] for lb in self.vertices.labels))
        return SimplicialComplex(vertices, self.facet_masks)
