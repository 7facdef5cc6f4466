"""Morphisms in SC0, SC1, SC2 and their Stanley-Reisner ring homomorphisms

SC0 and SC1 morphisms ``X -> Y`` are maps ``f: A -> B``. An SC2 morphism
``X -> Y`` is a map ``g: B -> A`` going the other way. The ring map always
runs from the ring of ``Y`` (variables ``y_b``) to the ring of ``X``.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Tuple

from config import MORPHISM_ENUMERATION_LIMIT
from models.complex import SimplicialComplex
from models.ideal import SqfIdeal
from models.kinds import CATEGORY_FLAVOR, Category, FunctorKind, RingHomFlavor
from models.set_map import SetMap
from models.vertex_set import VertexSet
from services.adjoint_service import AdjointService
from services.ideal_service import IdealService
from services.setmap_service import SetMapService
from utils.error_handler import (
    InconsistencyError,
    PreconditionError,
    VertexSetMismatchError,
    ensure_guard,
)
from utils.helpers import iter_bits, transversals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RingHomDescriptor:
    """Formal ring map ``k[y_source] -> k[x_target]``

    ``images[b]`` is a mask over ``target_ring``: the summed variables for
    SUM_OF_VARS (empty means 0), the monomial support for SQUAREFREE_MONOMIAL
    (empty means 1), and a single bit for SINGLE_VARIABLE.
    """

    flavor: RingHomFlavor
    source_ring: VertexSet
    target_ring: VertexSet
    images: Tuple[int, ...]

    def image_of(self, label: str) -> int:
        return self.images[self.source_ring.index(label)]

    def render_image(self, label: str, prefix: str = "x") -> str:
        mask = self.image_of(label)
        names = [f"{prefix}_{lb}" for lb in self.target_ring.sorted_labels(mask)]
        if self.flavor is RingHomFlavor.SUM_OF_VARS:
            return " + ".join(names) if names else "0"
        return "*".join(names) if names else "1"

    def render(self, source_prefix: str = "y", target_prefix: str = "x") -> List[str]:
        """One ``y_b -> image`` line per source variable, sorted by label"""
        return [
            f"{source_prefix}_{lb} -> {self.render_image(lb, target_prefix)}"
            for lb in sorted(self.source_ring.labels)
        ]


@dataclass(frozen=True)
class MorphismWitness:
    """A candidate morphism; validity is recomputed on every access"""

    category: Category
    map: SetMap
    source: SimplicialComplex
    target: SimplicialComplex

    @property
    def is_valid(self) -> bool:
        return CategoryService.is_morphism(self.category, self.map, self.source, self.target)

    @property
    def descriptor(self) -> RingHomDescriptor:
        return CategoryService.ring_hom(self.category, self.map)


class CategoryService:
    """Morphism checks, ring map descriptors and composition"""

    @staticmethod
    def _check_ends(category: Category, f: SetMap, X: SimplicialComplex, Y: SimplicialComplex):
        if category is Category.SC2:
            a_side, b_side = f.codomain, f.domain
        else:
            a_side, b_side = f.domain, f.codomain
        if X.vertices != a_side or Y.vertices != b_side:
            raise VertexSetMismatchError(
                f"{category.value} morphism needs X on {a_side!r} and Y on {b_side!r}"
            )

    @staticmethod
    def is_morphism(category: Category, f: SetMap, X: SimplicialComplex, Y: SimplicialComplex) -> bool:
        """Check the defining inclusion and its adjoint form; both must agree

        SC0: EE(X) ⊆ Y, equivalently X ⊆ SE(Y).
        SC1: SS(X) ⊆ Y, equivalently X ⊆ SA(Y).
        SC2 with g = ``f``: X ⊆ SS(g)(Y), equivalently SE(g)(X) ⊆ Y.
        """
        CategoryService._check_ends(category, f, X, Y)
        apply = AdjointService.apply

        if category is Category.SC0:
            direct = apply(FunctorKind.EE, f, X) <= Y
            adjoint = X <= apply(FunctorKind.SE, f, Y)
        elif category is Category.SC1:
            direct = apply(FunctorKind.SS, f, X) <= Y
            adjoint = X <= apply(FunctorKind.SA, f, Y)
        else:
            direct = X <= apply(FunctorKind.SS, f, Y)
            adjoint = apply(FunctorKind.SE, f, X) <= Y

        if direct != adjoint:
            logger.error(
                f"Morphism check disagrees for {category.value}: direct={direct}, adjoint={adjoint}"
            )
            raise InconsistencyError(f"{category.value} morphism test and its adjoint form disagree")
        return direct

    @staticmethod
    def ring_hom(category: Category, f: SetMap) -> RingHomDescriptor:
        """Descriptor of the induced map of Stanley-Reisner rings

        SC0 sends y_b to the sum of the fiber variables, SC1 to their product,
        SC2 sends y_b to x_{g(b)}.
        """
        flavor = CATEGORY_FLAVOR[category]
        if category is Category.SC2:
            images = tuple(1 << t for t in f.assignment)
            return RingHomDescriptor(flavor, f.domain, f.codomain, images)
        return RingHomDescriptor(flavor, f.codomain, f.domain, f.fiber_masks)

    @staticmethod
    def first_failing_generator(
        d: RingHomDescriptor, I_Y: SqfIdeal, I_X: SqfIdeal
    ) -> Optional[int]:
        """A generator of ``I_Y`` (mask over ``d.source_ring``) whose image leaves ``I_X``"""
        if I_Y.ring != d.source_ring or I_X.ring != d.target_ring:
            raise VertexSetMismatchError("ideal rings do not match the ring map")

        for g in I_Y.generator_masks:
            c = d.source_ring.translate(g, I_Y.ring)
            blocks = [d.images[b] for b in iter_bits(c)]
            if d.flavor is RingHomFlavor.SUM_OF_VARS:
                # a zero factor sends the whole generator to 0
                terms = transversals(blocks)
            else:
                support = 0
                for block in blocks:
                    support |= block
                terms = iter((support,))
            if not all(I_X.contains_mask(I_X.ring.translate(t, d.target_ring)) for t in terms):
                return g
        return None

    @staticmethod
    def verify_well_defined(d: RingHomDescriptor, I_Y: SqfIdeal, I_X: SqfIdeal) -> bool:
        """Every generator of ``I_Y`` lands in ``I_X``"""
        return CategoryService.first_failing_generator(d, I_Y, I_X) is None

    @staticmethod
    def is_morphism_by_rings(category: Category, f: SetMap, X: SimplicialComplex, Y: SimplicialComplex) -> bool:
        """Morphism test through the ring map on Stanley-Reisner ideals"""
        CategoryService._check_ends(category, f, X, Y)
        d = CategoryService.ring_hom(category, f)
        return CategoryService.verify_well_defined(
            d, IdealService.sr_ideal(Y), IdealService.sr_ideal(X)
        )

    @staticmethod
    def identity_morphism(category: Category, X: SimplicialComplex) -> MorphismWitness:
        return MorphismWitness(category, SetMapService.identity(X.vertices), X, X)

    @staticmethod
    def compose_morphisms(m1: MorphismWitness, m2: MorphismWitness) -> MorphismWitness:
        """``m2 ∘ m1`` for ``m1: X -> Y`` and ``m2: Y -> Z``

        In SC2 the underlying maps run backwards, so they compose as g1∘g2.
        """
        if m1.category is not m2.category:
            raise PreconditionError("cannot compose morphisms of different categories")
        if m1.target != m2.source:
            raise PreconditionError("target of the first morphism is not the source of the second")

        if m1.category is Category.SC2:
            composed = SetMapService.compose(m1.map, m2.map)
        else:
            composed = SetMapService.compose(m2.map, m1.map)
        return MorphismWitness(m1.category, composed, m1.source, m2.target)

    @staticmethod
    def compose_descriptors(first: RingHomDescriptor, second: RingHomDescriptor) -> RingHomDescriptor:
        """``first ∘ second`` where ``second`` feeds variables into ``first``'s source"""
        if first.flavor is not second.flavor:
            raise PreconditionError("cannot compose ring maps of different flavors")
        if second.target_ring != first.source_ring:
            raise VertexSetMismatchError("ring maps do not chain")

        images = []
        for mask in second.images:
            mask = first.source_ring.translate(mask, second.target_ring)
            combined = 0
            for b in iter_bits(mask):
                combined |= first.images[b]
            images.append(combined)
        return RingHomDescriptor(first.flavor, second.source_ring, first.target_ring, tuple(images))

    @staticmethod
    def all_maps(domain: VertexSet, codomain: VertexSet) -> Iterator[SetMap]:
        ensure_guard("all_maps", len(codomain) ** len(domain), MORPHISM_ENUMERATION_LIMIT)
        for assignment in product(range(len(codomain)), repeat=len(domain)):
            yield SetMap(domain, codomain, assignment)

    @staticmethod
    def enumerate_morphisms(
        category: Category, X: SimplicialComplex, Y: SimplicialComplex
    ) -> List[SetMap]:
        """Every map giving a morphism ``X -> Y``, assignments in lexicographic order"""
        if category is Category.SC2:
            maps = CategoryService.all_maps(Y.vertices, X.vertices)
        else:
            maps = CategoryService.all_maps(X.vertices, Y.vertices)
        return [f for f in maps if CategoryService.is_morphism(category, f, X, Y)]
