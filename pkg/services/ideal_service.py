"""Stanley-Reisner ideals and squarefree ideal algebra"""

import logging
from typing import Iterable

from config import ENUMERATION_LIMIT
from models.complex import SimplicialComplex
from models.ideal import SqfIdeal, SqfMonomial
from models.kinds import FunctorKind
from models.set_map import SetMap
from models.vertex_set import Subset, VertexSet
from services.setmap_service import SetMapService
from utils.error_handler import (
    PreconditionError,
    VertexSetMismatchError,
    ensure_guard,
)
from utils.helpers import is_submask, iter_bits, power_set_masks, transversals

logger = logging.getLogger(__name__)


def _same_ring(I: SqfIdeal, J: SqfIdeal) -> tuple:
    """Generators of ``J`` over the ring of ``I``"""
    if I.ring != J.ring:
        raise VertexSetMismatchError(f"ideals over {I.ring!r} and {J.ring!r}")
    return tuple(I.ring.translate(g, J.ring) for g in J.generator_masks)


def _require_surjective(f: SetMap) -> None:
    if not f.is_surjective:
        raise PreconditionError("operation needs a surjective map")


class IdealService:
    """Ideal algebra on minimal generator supports"""

    # === STANLEY-REISNER CORRESPONDENCE ===

    @staticmethod
    def sr_ideal(X: SimplicialComplex) -> SqfIdeal:
        """Generated by the monomials of the minimal non-faces"""
        return SqfIdeal(X.vertices, X.cofacet_masks)

    @staticmethod
    def complex_of_ideal(I: SqfIdeal) -> SimplicialComplex:
        """The complex whose non-faces are the supports of monomials in ``I``"""
        return SimplicialComplex.from_cofacet_masks(I.ring, I.generator_masks)

    # === BUILDING BLOCKS ===

    @staticmethod
    def variables_ideal(ring: VertexSet, E: Subset) -> SqfIdeal:
        """(x^+_E), the ideal of the variables of ``E``"""
        return SqfIdeal(ring, tuple(1 << i for i in iter_bits(ring.coerce(E).mask)))

    @staticmethod
    def monomial_ideal(ring: VertexSet, E: Subset) -> SqfIdeal:
        """(x^•_E); the unit ideal when ``E`` is empty"""
        return SqfIdeal(ring, (ring.coerce(E).mask,))

    @staticmethod
    def membership(I: SqfIdeal, S: Subset) -> bool:
        return I.contains(SqfMonomial(S))

    # === ALGEBRA ===

    @staticmethod
    def sum(I: SqfIdeal, J: SqfIdeal) -> SqfIdeal:
        return SqfIdeal(I.ring, I.generator_masks + _same_ring(I, J))

    @staticmethod
    def intersect(I: SqfIdeal, J: SqfIdeal) -> SqfIdeal:
        """Pairwise least common multiples"""
        theirs = _same_ring(I, J)
        return SqfIdeal(I.ring, tuple(g | h for g in I.generator_masks for h in theirs))

    @staticmethod
    def product(I: SqfIdeal, J: SqfIdeal) -> SqfIdeal:
        """Squarefree product: pairwise support unions

        Ideals over disjoint rings are first placed on the merged ring.
        """
        if I.ring != J.ring:
            ring = I.ring.concat(J.ring)
            I, J = IdealService.extend(I, ring), IdealService.extend(J, ring)
        theirs = _same_ring(I, J)
        if I.variable_support & _union(theirs):
            logger.warning("Product of ideals with overlapping variable blocks")
        return SqfIdeal(I.ring, tuple(g | h for g in I.generator_masks for h in theirs))

    @staticmethod
    def colon(I: SqfIdeal, m: SqfMonomial) -> SqfIdeal:
        """(I : x^•_E), generated by the generators with ``E`` stripped"""
        e = I.ring.coerce(m.support).mask
        return SqfIdeal(I.ring, tuple(g & ~e for g in I.generator_masks))

    @staticmethod
    def contract(I: SqfIdeal, A: Subset) -> SqfIdeal:
        """I ∩ k[x_A], housed on ``A``"""
        a = I.ring.coerce(A).mask
        sub_ring = I.ring.restrict(a)
        kept = (g for g in I.generator_masks if is_submask(g, a))
        return SqfIdeal(sub_ring, tuple(sub_ring.translate(g, I.ring) for g in kept))

    @staticmethod
    def extend(I: SqfIdeal, ring: VertexSet) -> SqfIdeal:
        """The ideal generated by ``I`` in a larger polynomial ring"""
        if not I.ring.issubset(ring):
            raise VertexSetMismatchError(f"{I.ring!r} is not inside {ring!r}")
        return SqfIdeal(ring, tuple(ring.translate(g, I.ring) for g in I.generator_masks))

    # === ALONG INJECTIONS ===

    @staticmethod
    def _push(I: SqfIdeal, f: SetMap) -> SqfIdeal:
        masks = (f.domain.translate(g, I.ring) for g in I.generator_masks)
        return SqfIdeal(f.codomain, tuple(f.image_mask(g) for g in masks))

    @staticmethod
    def _pull(I: SqfIdeal, f: SetMap) -> SqfIdeal:
        """Rename an ideal on f(A) to the domain variables"""
        masks = (f.codomain.translate(g, I.ring) for g in I.generator_masks)
        return SqfIdeal(f.domain, tuple(f.preimage_mask(g) for g in masks))

    @staticmethod
    def injection_dictionary(kind: FunctorKind, f: SetMap, I: SqfIdeal) -> SqfIdeal:
        """Ideal of ``kind(f, complex_of_ideal(I))`` for injective ``f``

        With E the codomain elements outside the image:
        EE gives I + (x^+_E), SS gives I, AA gives I·(x^•_E),
        SE gives I ∩ k[x_A] and SA gives (I : x^•_E) ∩ k[x_A].
        """
        if not f.is_injective:
            raise PreconditionError("injection dictionary needs an injective map")
        empty = SetMapService.empty_fiber_set(f)
        image = SetMapService.image_set(f)

        if kind.is_pushforward:
            if I.ring != f.domain:
                raise VertexSetMismatchError(f"ideal over {I.ring!r}, map domain is {f.domain!r}")
            moved = IdealService._push(I, f)
            if kind is FunctorKind.EE:
                return IdealService.sum(moved, IdealService.variables_ideal(f.codomain, empty))
            if kind is FunctorKind.SS:
                return moved
            return IdealService.intersect(moved, IdealService.monomial_ideal(f.codomain, empty))

        if I.ring != f.codomain:
            raise VertexSetMismatchError(f"ideal over {I.ring!r}, map codomain is {f.codomain!r}")
        if kind is FunctorKind.SA:
            I = IdealService.colon(I, SqfMonomial(I.ring.coerce(empty)))
        contracted = IdealService.contract(I, I.ring.coerce(image))
        return IdealService._pull(contracted, f)

    # === ALONG SURJECTIONS ===

    @staticmethod
    def fiber_substitute(I: SqfIdeal, f: SetMap) -> SqfIdeal:
        """Replace each generator y^•_C by x^•_{f⁻¹(C)}; gives the upper complex"""
        _require_surjective(f)
        masks = (f.codomain.translate(g, I.ring) for g in I.generator_masks)
        return SqfIdeal(f.domain, tuple(f.preimage_mask(g) for g in masks))

    @staticmethod
    def fiber_expand(I: SqfIdeal, f: SetMap) -> SqfIdeal:
        """Replace each y^•_C by the product of the fiber variable ideals

        The product of the (x^+_{A_b}) over b in C is generated by the
        transversal monomials. Gives the lower complex.
        """
        _require_surjective(f)
        generators = []
        for g in I.generator_masks:
            c = f.codomain.translate(g, I.ring)
            blocks = [f.fiber_masks[b] for b in iter_bits(c)]
            generators.extend(transversals(blocks))
        return SqfIdeal(f.domain, tuple(generators))

    @staticmethod
    def core_ideal(I: SqfIdeal, f: SetMap, definitional: bool = False) -> SqfIdeal:
        """Generated by the f-cores of the monomials in ``I``

        ``core`` is monotone, so the cores of the generators already give the
        minimal ones. ``definitional`` walks every monomial instead.
        """
        _require_surjective(f)
        masks = [f.domain.translate(g, I.ring) for g in I.generator_masks]
        if not definitional:
            return SqfIdeal(f.codomain, tuple(f.core_mask(g) for g in masks))

        ensure_guard("core_ideal", len(f.domain), ENUMERATION_LIMIT)
        cores = {
            f.core_mask(d)
            for d in power_set_masks(len(f.domain))
            if any(is_submask(g, d) for g in masks)
        }
        return SqfIdeal(f.codomain, tuple(cores))

    @staticmethod
    def transversal_test_ideal(I: SqfIdeal, f: SetMap) -> SqfIdeal:
        """Minimal C whose every transversal monomial lies in ``I``

        These are the non-faces of the image complex.
        """
        _require_surjective(f)
        ensure_guard("transversal_test_ideal", len(f.codomain), ENUMERATION_LIMIT)
        found = []
        for c in power_set_masks(len(f.codomain)):
            if any(is_submask(g, c) for g in found):
                continue
            blocks = [f.fiber_masks[b] for b in iter_bits(c)]
            if all(
                I.contains_mask(I.ring.translate(t, f.domain)) for t in transversals(blocks)
            ):
                found.append(c)
        return SqfIdeal(f.codomain, tuple(found))

    @staticmethod
    def image_test_ideal(I: SqfIdeal, f: SetMap) -> SqfIdeal:
        """Minimal C with x^•_{f⁻¹(C)} in ``I``; the ideal of SS of the complex"""
        ensure_guard("image_test_ideal", len(f.codomain), ENUMERATION_LIMIT)
        found = []
        for c in power_set_masks(len(f.codomain)):
            if any(is_submask(g, c) for g in found):
                continue
            if I.contains_mask(I.ring.translate(f.preimage_mask(c), f.domain)):
                found.append(c)
        return SqfIdeal(f.codomain, tuple(found))


def _union(masks: Iterable[int]) -> int:
    total = 0
    for m in masks:
        total |= m
    return total
