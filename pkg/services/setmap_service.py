"""Set map constructions: factorization, sections, composition"""

import logging
from itertools import product
from typing import List, Tuple

from models.set_map import SetMap
from models.vertex_set import Subset, VertexSet
from utils.error_handler import PreconditionError, VertexSetMismatchError
from utils.helpers import iter_bits
from utils.validators import pair_label

logger = logging.getLogger(__name__)


class SetMapService:
    """Building and combining set maps"""

    @staticmethod
    def identity(vertices: VertexSet) -> SetMap:
        return SetMap(vertices, vertices, tuple(range(len(vertices))))

    @staticmethod
    def inclusion(subset: VertexSet, ambient: VertexSet) -> SetMap:
        """The inclusion of ``subset`` into ``ambient`` by labels"""
        if not subset.issubset(ambient):
            raise VertexSetMismatchError(f"{subset!r} is not inside {ambient!r}")
        return SetMap(subset, ambient, tuple(ambient.index(lb) for lb in subset.labels))

    @staticmethod
    def product_vertices(A: VertexSet, B: VertexSet) -> VertexSet:
        """A×B with pair labels, ordered by (a-index, b-index)"""
        return VertexSet(tuple(pair_label(a, b) for a in A.labels for b in B.labels))

    @staticmethod
    def projections(A: VertexSet, B: VertexSet) -> Tuple[SetMap, SetMap]:
        """The two projections out of A×B"""
        AB = SetMapService.product_vertices(A, B)
        width = len(B)
        p_a = SetMap(AB, A, tuple(i // width for i in range(len(AB))))
        p_b = SetMap(AB, B, tuple(i % width for i in range(len(AB))))
        return p_a, p_b

    @staticmethod
    def factorize(f: SetMap) -> Tuple[SetMap, SetMap]:
        """Split ``f`` as a surjection onto f(A) followed by an inclusion

        f(A) keeps the codomain's label order.
        """
        image = f.image_of_domain
        if image == f.codomain.full:
            return f, SetMapService.identity(f.codomain)

        middle = f.codomain.restrict(image)
        s = SetMap(f.domain, middle, tuple(middle.index(f.codomain.labels[t]) for t in f.assignment))
        return s, SetMapService.inclusion(middle, f.codomain)

    @staticmethod
    def sections(f: SetMap) -> List[SetMap]:
        """Every s with f∘s = id, first codomain label varying slowest

        Example:
            fibers {1,2} and {3} give a->1 b->3 then a->2 b->3
        """
        if not f.is_surjective:
            raise PreconditionError("sections need a surjective map")
        choices = [list(iter_bits(fiber)) for fiber in f.fiber_masks]
        return [SetMap(f.codomain, f.domain, picked) for picked in product(*choices)]

    @staticmethod
    def is_section(f: SetMap, s: SetMap) -> bool:
        return (
            s.domain == f.codomain
            and s.codomain == f.domain
            and SetMapService.compose(f, s) == SetMapService.identity(f.codomain)
        )

    @staticmethod
    def compose(g: SetMap, f: SetMap) -> SetMap:
        """g∘f: apply ``f`` first"""
        if f.codomain != g.domain:
            raise VertexSetMismatchError(
                f"cannot compose: {f.codomain!r} is not {g.domain!r}"
            )
        lookup = [g.domain.index(lb) for lb in f.codomain.labels]
        return SetMap(f.domain, g.codomain, tuple(g.assignment[lookup[t]] for t in f.assignment))

    @staticmethod
    def image_set(f: SetMap) -> Subset:
        return Subset(f.codomain, f.image_of_domain)

    @staticmethod
    def empty_fiber_set(f: SetMap) -> Subset:
        """E = B∖f(A)"""
        return Subset(f.codomain, f.empty_fiber_mask)
