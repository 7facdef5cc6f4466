"""Products of complexes on A∪B and on A×B

Each kind is computed three ways: directly from facets or cofacets, through
the adjoint functors along inclusions or projections, and from the ideals.
"""

import logging

from config import ENUMERATION_LIMIT, PRODUCT_LIMIT
from models.complex import SimplicialComplex
from models.ideal import SqfIdeal
from models.kinds import FunctorKind, ProductKind
from models.vertex_set import VertexSet
from services.adjoint_service import AdjointService
from services.complex_service import ComplexService
from services.ideal_service import IdealService
from services.setmap_service import SetMapService
from utils.error_handler import PreconditionError, ensure_guard
from utils.helpers import is_submask, iter_bits, power_set_masks

logger = logging.getLogger(__name__)

UNION_FUNCTOR = {
    ProductKind.DISJOINT_UNION: FunctorKind.EE,
    ProductKind.EXTERNAL_JOIN: FunctorKind.SS,
    ProductKind.OR_UNION: FunctorKind.SS,
    ProductKind.CONE_UNION: FunctorKind.AA,
}


def _require_union(kind: ProductKind) -> None:
    if kind.is_cartesian:
        raise PreconditionError(f"'{kind.value}' is a cartesian product")


def _require_cartesian(kind: ProductKind) -> None:
    if not kind.is_cartesian:
        raise PreconditionError(f"'{kind.value}' is not a cartesian product")


def _combine(kind: ProductKind, left: SimplicialComplex, right: SimplicialComplex) -> SimplicialComplex:
    if kind.is_meet:
        return ComplexService.lattice_meet(left, right)
    return ComplexService.lattice_join(left, right)


class ProductService:
    """The eight product constructions"""

    # === ON A∪B ===

    @staticmethod
    def union_product(kind: ProductKind, X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
        """Meet or join of the images of ``X`` and ``Y`` along the two inclusions

        DISJOINT_UNION joins the EE images, EXTERNAL_JOIN meets the SS images,
        OR_UNION joins the SS images and CONE_UNION meets the AA images.
        """
        _require_union(kind)
        union = X.vertices.concat(Y.vertices)
        functor = UNION_FUNCTOR[kind]
        left = AdjointService.apply(functor, SetMapService.inclusion(X.vertices, union), X)
        right = AdjointService.apply(functor, SetMapService.inclusion(Y.vertices, union), Y)
        return _combine(kind, left, right)

    @staticmethod
    def union_product_direct(kind: ProductKind, X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
        """The same products by testing every C ⊆ A∪B against its face description"""
        _require_union(kind)
        union = X.vertices.concat(Y.vertices)
        ensure_guard("union_product_direct", len(union), ENUMERATION_LIMIT)
        n = len(X.vertices)
        a_full, b_full = X.vertices.full, Y.vertices.full

        def face(c: int) -> bool:
            ca, cb = c & a_full, c >> n
            in_x, in_y = X.contains_mask(ca), Y.contains_mask(cb)
            if kind is ProductKind.DISJOINT_UNION:
                return (cb == 0 and in_x) or (ca == 0 and in_y)
            if kind is ProductKind.EXTERNAL_JOIN:
                return in_x and in_y
            if kind is ProductKind.OR_UNION:
                return in_x or in_y
            return (in_x or cb != b_full) and (in_y or ca != a_full)

        members = [c for c in power_set_masks(len(union)) if face(c)]
        return SimplicialComplex(union, tuple(members))

    @staticmethod
    def union_product_ideal(kind: ProductKind, I_X: SqfIdeal, I_Y: SqfIdeal) -> SqfIdeal:
        """The ideal of a union product from the two ideals

        DISJOINT_UNION: I_X + I_Y + (x^+_A)(y^+_B). A void factor has the
        unit ideal and contributes (x^+_A) instead.
        EXTERNAL_JOIN: I_X + I_Y.
        OR_UNION: I_X ∩ I_Y, which equals I_X·I_Y.
        CONE_UNION: I_X·(y^•_B) + (x^•_A)·I_Y.
        """
        _require_union(kind)
        ring = I_X.ring.concat(I_Y.ring)
        ix, iy = IdealService.extend(I_X, ring), IdealService.extend(I_Y, ring)
        a_vars = ring.subset(I_X.ring.labels)
        b_vars = ring.subset(I_Y.ring.labels)

        if kind is ProductKind.EXTERNAL_JOIN:
            return IdealService.sum(ix, iy)
        if kind is ProductKind.OR_UNION:
            return IdealService.intersect(ix, iy)
        if kind is ProductKind.CONE_UNION:
            return IdealService.sum(
                IdealService.product(ix, IdealService.monomial_ideal(ring, b_vars)),
                IdealService.product(IdealService.monomial_ideal(ring, a_vars), iy),
            )

        if I_X.is_unit and I_Y.is_unit:
            return SqfIdeal.unit(ring)
        if I_X.is_unit:
            return IdealService.sum(IdealService.variables_ideal(ring, a_vars), iy)
        if I_Y.is_unit:
            return IdealService.sum(ix, IdealService.variables_ideal(ring, b_vars))
        mixed = IdealService.product(
            IdealService.variables_ideal(ring, a_vars), IdealService.variables_ideal(ring, b_vars)
        )
        return IdealService.sum(IdealService.sum(ix, iy), mixed)

    # === ON A×B ===

    @staticmethod
    def cartesian_product(kind: ProductKind, X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
        """Direct construction on A×B

        Lower kinds are generated by products D×C: facet pairs for the meet,
        D×B and A×C for the join. Upper kinds are described by non-face
        complements U×V where U, V range over cofacet complements: U×B or A×V
        for the meet, U×V for the join. A non-face complement U×V corresponds
        to the minimal non-face (A×B)∖(U×V).
        """
        _require_cartesian(kind)
        A, B = X.vertices, Y.vertices
        AB = SetMapService.product_vertices(A, B)
        width = len(B)

        def block(a_mask: int, b_mask: int) -> int:
            mask = 0
            for i in iter_bits(a_mask):
                for j in iter_bits(b_mask):
                    mask |= 1 << (i * width + j)
            return mask

        if not kind.is_upper:
            if kind is ProductKind.CART_MEET_LOWER:
                facets = [block(d, c) for d in X.facet_masks for c in Y.facet_masks]
            else:
                facets = [block(d, B.full) for d in X.facet_masks]
                facets += [block(A.full, c) for c in Y.facet_masks]
            return SimplicialComplex(AB, tuple(facets))

        ensure_guard("cartesian_product", len(A) * len(B), PRODUCT_LIMIT)
        x_cofacets, y_cofacets = X.cofacet_masks, Y.cofacet_masks
        if kind is ProductKind.CART_MEET_UPPER:
            cofacets = [block(n, B.full) for n in x_cofacets]
            cofacets += [block(A.full, m) for m in y_cofacets]
        else:
            cofacets = [
                block(n, B.full) | block(A.full, m) for n in x_cofacets for m in y_cofacets
            ]
        return SimplicialComplex.from_cofacet_masks(AB, cofacets)

    @staticmethod
    def cartesian_product_by_projections(
        kind: ProductKind, X: SimplicialComplex, Y: SimplicialComplex
    ) -> SimplicialComplex:
        """Meet or join of the pullbacks along the projections

        Lower kinds pull back with SE, upper kinds with SA.
        """
        _require_cartesian(kind)
        p_a, p_b = SetMapService.projections(X.vertices, Y.vertices)
        functor = FunctorKind.SA if kind.is_upper else FunctorKind.SE
        left = AdjointService.apply(functor, p_a, X)
        right = AdjointService.apply(functor, p_b, Y)
        return _combine(kind, left, right)

    @staticmethod
    def cartesian_product_ideal(
        kind: ProductKind, I_X: SqfIdeal, I_Y: SqfIdeal, A: VertexSet, B: VertexSet
    ) -> SqfIdeal:
        """Minimal S ⊆ A×B satisfying the generator test of ``kind``

        Lower kinds test the projections p_A(S), p_B(S); upper kinds test
        the cores {a : {a}×B ⊆ S} and {b : A×{b} ⊆ S}. Meets take either
        test, joins need both.
        """
        _require_cartesian(kind)
        ensure_guard("cartesian_product_ideal", len(A) * len(B), PRODUCT_LIMIT)
        ix = IdealService.extend(I_X, A) if I_X.ring.labels != A.labels else I_X
        iy = IdealService.extend(I_Y, B) if I_Y.ring.labels != B.labels else I_Y
        p_a, p_b = SetMapService.projections(A, B)
        AB = p_a.domain
        project = p_a.core_mask if kind.is_upper else p_a.image_mask
        project_b = p_b.core_mask if kind.is_upper else p_b.image_mask

        def generates(s: int) -> bool:
            in_x = ix.contains_mask(project(s))
            in_y = iy.contains_mask(project_b(s))
            return (in_x or in_y) if kind.is_meet else (in_x and in_y)

        found = []
        for s in power_set_masks(len(AB)):
            if any(is_submask(g, s) for g in found):
                continue
            if generates(s):
                found.append(s)
        return SqfIdeal(AB, tuple(found))
