"""The five adjoint functors induced by a set map

For ``f: A -> B`` the chain EE ⊣ SE ⊣ SS ⊣ SA ⊣ AA relates complexes on A
and complexes on B. EE, SE and SS have facet-level formulas for every map.
SA is computed from cofacets and AA from the maximal sets with a given core.
``apply`` routes injective and surjective maps to their specialised forms and
factors every other map through its image.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List

from config import ENUMERATION_LIMIT
from models.complex import SimplicialComplex
from models.kinds import FunctorKind
from models.set_map import SetMap
from services.complex_service import ComplexService
from services.setmap_service import SetMapService
from utils.error_handler import (
    PreconditionError,
    VertexSetMismatchError,
    ensure_guard,
)
from utils.helpers import is_submask, iter_bits, power_set_masks, transversals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberInterval:
    """All Z with ``lower ⊆ Z ⊆ upper`` solve the equation, unless ``empty``"""

    kind: FunctorKind
    lower: SimplicialComplex
    upper: SimplicialComplex
    empty: bool

    def contains(self, Z: SimplicialComplex) -> bool:
        return not self.empty and self.lower <= Z and Z <= self.upper


def _on_domain(f: SetMap, X: SimplicialComplex) -> None:
    if X.vertices != f.domain:
        raise VertexSetMismatchError(f"complex on {X.vertices!r}, map domain is {f.domain!r}")


def _on_codomain(f: SetMap, Y: SimplicialComplex) -> None:
    if Y.vertices != f.codomain:
        raise VertexSetMismatchError(
            f"complex on {Y.vertices!r}, map codomain is {f.codomain!r}"
        )


def _domain_masks(f: SetMap, X: SimplicialComplex) -> tuple:
    return tuple(f.domain.translate(m, X.vertices) for m in X.facet_masks)


def _codomain_masks(f: SetMap, Y: SimplicialComplex) -> tuple:
    return tuple(f.codomain.translate(m, Y.vertices) for m in Y.facet_masks)


class AdjointService:
    """Evaluating EE, SE, SS, SA and AA along a set map"""

    # === GENERAL FORMULAS ===

    @staticmethod
    def shriek_shriek(f: SetMap, X: SimplicialComplex) -> SimplicialComplex:
        """EE: generated by the images of the facets of ``X``"""
        _on_domain(f, X)
        return SimplicialComplex(f.codomain, tuple(f.image_mask(m) for m in _domain_masks(f, X)))

    @staticmethod
    def star_shriek(f: SetMap, Y: SimplicialComplex) -> SimplicialComplex:
        """SE: {T : f(T) ∈ Y}, generated by the preimages of the facets"""
        _on_codomain(f, Y)
        return SimplicialComplex(f.domain, tuple(f.preimage_mask(m) for m in _codomain_masks(f, Y)))

    @staticmethod
    def star_star(f: SetMap, X: SimplicialComplex) -> SimplicialComplex:
        """SS: {C : f⁻¹(C) ∈ X}, generated by the cores of the facets"""
        _on_domain(f, X)
        return SimplicialComplex(f.codomain, tuple(f.core_mask(m) for m in _domain_masks(f, X)))

    @staticmethod
    def star_upper(f: SetMap, Y: SimplicialComplex) -> SimplicialComplex:
        """SA: {T : core(T) ∈ Y}

        ``core(T) ⊇ N`` exactly when ``f⁻¹(N) ⊆ T``, so the non-faces are
        generated by the preimages of the cofacets of ``Y``.
        """
        _on_codomain(f, Y)
        cofacets = (f.codomain.translate(n, Y.vertices) for n in Y.cofacet_masks)
        return SimplicialComplex.from_cofacet_masks(
            f.domain, (f.preimage_mask(n) for n in cofacets)
        )

    @staticmethod
    def star_upper_definitional(f: SetMap, Y: SimplicialComplex) -> SimplicialComplex:
        """SA by filtering every subset of the domain"""
        _on_codomain(f, Y)
        ensure_guard("star_upper", len(f.domain), ENUMERATION_LIMIT)
        members = {
            t
            for t in power_set_masks(len(f.domain))
            if Y.contains_mask(Y.vertices.translate(f.core_mask(t), f.codomain))
        }
        return SimplicialComplex(f.domain, tuple(_maximal_members(members, len(f.domain))))

    @staticmethod
    def maximal_d_for_core(f: SetMap, core: int) -> List[int]:
        """Maximal D ⊆ A with core_f(D) = ``core``

        These are the facets of the join of Δ(f⁻¹(C)) with the boundaries
        ∂Δ(A_b) for the nonempty fibers outside C. Empty when C misses an
        empty-fiber element.
        """
        if not is_submask(f.empty_fiber_mask, core):
            return []
        base = f.preimage_mask(core)
        outside = [
            fiber for b, fiber in enumerate(f.fiber_masks) if fiber and not core >> b & 1
        ]
        spread = 0
        for fiber in outside:
            spread |= fiber
        return [base | (spread & ~dropped) for dropped in transversals(outside)]

    @staticmethod
    def upper_upper(f: SetMap, X: SimplicialComplex) -> SimplicialComplex:
        """AA: C is a face iff every D with core_f(D) = C is a face of ``X``

        Checking the maximal such D suffices. A C missing some empty-fiber
        element is the core of nothing and is kept.
        """
        _on_domain(f, X)
        ensure_guard("upper_upper", len(f.codomain), ENUMERATION_LIMIT)
        facets = _domain_masks(f, X)
        members = set()
        for c in range(1 << len(f.codomain)):
            candidates = AdjointService.maximal_d_for_core(f, c)
            if all(any(is_submask(d, F) for F in facets) for d in candidates):
                members.add(c)
        return SimplicialComplex(f.codomain, tuple(_maximal_members(members, len(f.codomain))))

    # === INJECTIONS ===

    @staticmethod
    def _pull_back_labels(f: SetMap, Z: SimplicialComplex) -> SimplicialComplex:
        """Rename a complex living on f(A) to the domain labels"""
        names = {f.codomain.labels[t]: a for a, t in zip(f.domain.labels, f.assignment)}
        return Z.relabel(names).rehouse(f.domain)

    @staticmethod
    def _injection(kind: FunctorKind, f: SetMap, Z: SimplicialComplex) -> SimplicialComplex:
        image = SetMapService.image_set(f)
        empty = SetMapService.empty_fiber_set(f)

        if kind is FunctorKind.SE:
            restricted = ComplexService.restriction(Z, image)
            return AdjointService._pull_back_labels(f, restricted)
        if kind is FunctorKind.SA:
            linked = ComplexService.link(Z, empty)
            return AdjointService._pull_back_labels(f, linked)

        moved = ComplexService.rehouse_through(Z, f)
        if kind is FunctorKind.EE:
            return moved
        coned = ComplexService.cone_over(moved, empty)
        if kind is FunctorKind.SS:
            return coned

        # cone_E(X) ∪ cone_A(∂Δ(E)); the second cone is void when E is empty
        e = empty.mask
        sphere_cone = SimplicialComplex(
            f.codomain, tuple(image.mask | (e ^ (1 << i)) for i in iter_bits(e))
        )
        return ComplexService.lattice_join(coned, sphere_cone)

    # === SURJECTIONS ===

    @staticmethod
    def _require_surjective(f: SetMap) -> None:
        if not f.is_surjective:
            raise PreconditionError("operation needs a surjective map")

    @staticmethod
    def lower_complex(f: SetMap, Y: SimplicialComplex) -> SimplicialComplex:
        """Y_f, whose facets are the preimages of the facets of ``Y``"""
        AdjointService._require_surjective(f)
        return AdjointService.star_shriek(f, Y)

    @staticmethod
    def upper_complex(f: SetMap, Y: SimplicialComplex) -> SimplicialComplex:
        """Y^f, whose cofacets are the preimages of the cofacets of ``Y``"""
        AdjointService._require_surjective(f)
        return AdjointService.star_upper(f, Y)

    @staticmethod
    def is_lower(f: SetMap, X: SimplicialComplex) -> bool:
        """Every facet meets each fiber in nothing or the whole fiber"""
        AdjointService._require_surjective(f)
        _on_domain(f, X)
        return all(
            f.preimage_mask(f.image_mask(F)) == F for F in _domain_masks(f, X)
        )

    @staticmethod
    def is_upper(f: SetMap, X: SimplicialComplex) -> bool:
        """Faces are saturated: D ∈ X and core(D') = core(D) give D' ∈ X"""
        AdjointService._require_surjective(f)
        return AdjointService.star_upper(f, AdjointService.star_star(f, X)) == X

    # === DISPATCH ===

    @staticmethod
    def general(kind: FunctorKind) -> Callable[[SetMap, SimplicialComplex], SimplicialComplex]:
        return _GENERAL[kind]

    @staticmethod
    def apply(kind: FunctorKind, f: SetMap, Z: SimplicialComplex) -> SimplicialComplex:
        """Evaluate ``kind`` along ``f``

        Injective and surjective maps use their specialised forms; any other
        map is factored as an inclusion after a surjection.
        """
        if kind.is_pushforward:
            _on_domain(f, Z)
        else:
            _on_codomain(f, Z)

        if f.is_injective:
            return AdjointService._injection(kind, f, Z)
        if f.is_surjective:
            return _GENERAL[kind](f, Z)

        s, i = SetMapService.factorize(f)
        logger.debug(f"Factoring {f!r} through {s.codomain!r} for {kind.value}")
        if kind.is_pushforward:
            return AdjointService.apply(kind, i, AdjointService.apply(kind, s, Z))
        return AdjointService.apply(kind, s, AdjointService.apply(kind, i, Z))

    # === INTERVALS AND SECTIONS ===

    @staticmethod
    def fiber_interval(kind: FunctorKind, f: SetMap, target: SimplicialComplex) -> FiberInterval:
        """Solutions of ``kind(f, Z) = target`` as an interval

        SE and SA solve for a complex on the codomain, bounded by the
        functors on either side; SS solves for a complex on the domain
        between SE(target) and SA(target).
        """
        run = AdjointService.apply
        if kind is FunctorKind.SE:
            lower, upper = run(FunctorKind.EE, f, target), run(FunctorKind.SS, f, target)
        elif kind is FunctorKind.SA:
            lower, upper = run(FunctorKind.SS, f, target), run(FunctorKind.AA, f, target)
        elif kind is FunctorKind.SS:
            lower, upper = run(FunctorKind.SE, f, target), run(FunctorKind.SA, f, target)
        else:
            raise PreconditionError(f"no fiber interval for functor '{kind.value}'")

        empty = run(kind, f, lower) != target
        return FiberInterval(kind=kind, lower=lower, upper=upper, empty=empty)

    @staticmethod
    def section_transfer(
        f: SetMap, s: SetMap, kind: FunctorKind, Y: SimplicialComplex
    ) -> SimplicialComplex:
        """Carry ``Y`` on B to A along a section ``s`` of ``f``"""
        if kind not in (FunctorKind.EE, FunctorKind.SS, FunctorKind.AA):
            raise PreconditionError(f"section transfer takes ee, ss or aa, not {kind.value}")
        if not SetMapService.is_section(f, s):
            raise PreconditionError(f"{s!r} is not a section of {f!r}")
        return AdjointService.apply(kind, s, Y)


def _maximal_members(members: set, size: int) -> List[int]:
    """Maximal elements of a downward closed family of masks"""
    return [
        m
        for m in members
        if not any((m | (1 << i)) in members for i in range(size) if not m >> i & 1)
    ]


_GENERAL: Dict[FunctorKind, Callable[[SetMap, SimplicialComplex], SimplicialComplex]] = {
    FunctorKind.EE: AdjointService.shriek_shriek,
    FunctorKind.SE: AdjointService.star_shriek,
    FunctorKind.SS: AdjointService.star_star,
    FunctorKind.SA: AdjointService.star_upper,
    FunctorKind.AA: AdjointService.upper_upper,
}
