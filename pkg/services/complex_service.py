"""Operations on simplicial complexes"""

import logging

from models.complex import SimplicialComplex
from models.vertex_set import Subset, VertexSet
from utils.error_handler import VertexSetMismatchError
from utils.helpers import is_submask, iter_bits, mask_of

logger = logging.getLogger(__name__)


def _project(mask: int, positions: list) -> int:
    """Compress ``mask`` onto the bit positions listed in ``positions``"""
    return mask_of(j for j, i in enumerate(positions) if mask >> i & 1)


class ComplexService:
    """Constructions on complexes: duals, links, joins and lattice operations"""

    @staticmethod
    def alexander_dual(X: SimplicialComplex) -> SimplicialComplex:
        """{A∖N : N not a face}; its facets are the complements of the cofacets"""
        full = X.vertices.full
        return SimplicialComplex(X.vertices, tuple(full & ~n for n in X.cofacet_masks))

    @staticmethod
    def restriction(X: SimplicialComplex, E: Subset) -> SimplicialComplex:
        """Faces of ``X`` inside ``E``, housed on ``E``"""
        e = X.vertices.coerce(E).mask
        positions = list(iter_bits(e))
        vertices = X.vertices.restrict(e)
        return SimplicialComplex(vertices, tuple(_project(f & e, positions) for f in X.facet_masks))

    @staticmethod
    def link(X: SimplicialComplex, E: Subset) -> SimplicialComplex:
        """{F ⊆ A∖E : F ∪ E ∈ X}; void when ``E`` is not a face"""
        e = X.vertices.coerce(E).mask
        rest = X.vertices.full & ~e
        positions = list(iter_bits(rest))
        vertices = X.vertices.restrict(rest)
        facets = tuple(_project(f & ~e, positions) for f in X.facet_masks if is_submask(e, f))
        return SimplicialComplex(vertices, facets)

    @staticmethod
    def join(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
        """{D ∪ C : D ∈ X, C ∈ Y} on the disjoint union of vertex sets

        ``{∅}`` is the unit and the void complex is absorbing.
        """
        vertices = X.vertices.concat(Y.vertices)
        shift = len(X.vertices)
        facets = tuple(d | (c << shift) for d in X.facet_masks for c in Y.facet_masks)
        return SimplicialComplex(vertices, facets)

    @staticmethod
    def cone(X: SimplicialComplex, B: VertexSet) -> SimplicialComplex:
        return ComplexService.join(X, SimplicialComplex.simplex(B))

    @staticmethod
    def cone_over(X: SimplicialComplex, E: Subset) -> SimplicialComplex:
        """Cone with apex ``E`` where ``E`` already lies in the vertex set

        Only meaningful when no facet of ``X`` meets ``E``.
        """
        e = X.vertices.coerce(E).mask
        return SimplicialComplex(X.vertices, tuple(f | e for f in X.facet_masks))

    @staticmethod
    def _check_same(X: SimplicialComplex, Y: SimplicialComplex) -> tuple:
        if X.vertices != Y.vertices:
            raise VertexSetMismatchError(f"complexes on {X.vertices!r} and {Y.vertices!r}")
        return tuple(X.vertices.translate(m, Y.vertices) for m in Y.facet_masks)

    @staticmethod
    def lattice_meet(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
        """Intersection of face sets"""
        theirs = ComplexService._check_same(X, Y)
        return SimplicialComplex(X.vertices, tuple(d & c for d in X.facet_masks for c in theirs))

    @staticmethod
    def lattice_join(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
        """Union of face sets"""
        theirs = ComplexService._check_same(X, Y)
        return SimplicialComplex(X.vertices, X.facet_masks + theirs)

    @staticmethod
    def nonface_complement_masks(X: SimplicialComplex) -> tuple:
        """Maximal non-face complements, i.e. complements of the cofacets"""
        full = X.vertices.full
        return tuple(full & ~n for n in X.cofacet_masks)

    @staticmethod
    def rehouse_through(X: SimplicialComplex, f) -> SimplicialComplex:
        """Transport ``X`` along an injective map onto the map's codomain"""
        masks = (f.domain.translate(m, X.vertices) for m in X.facet_masks)
        return SimplicialComplex(f.codomain, tuple(f.image_mask(m) for m in masks))
