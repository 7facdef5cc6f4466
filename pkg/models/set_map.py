"""Total maps between vertex sets"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Tuple

from models.vertex_set import Subset, VertexSet
from utils.error_handler import ConstructionError, VertexSetMismatchError
from utils.helpers import is_submask, iter_bits


@dataclass(frozen=True, eq=False)
class SetMap:
    """A total function ``domain -> codomain``

    ``assignment[i]`` is the codomain index of the ``i``-th domain label.
    """

    domain: VertexSet
    codomain: VertexSet
    assignment: Tuple[int, ...]

    def __post_init__(self):
        assignment = tuple(self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if len(assignment) != len(self.domain):
            raise ConstructionError(
                f"map assigns {len(assignment)} labels, domain has {len(self.domain)}"
            )
        for target in assignment:
            if not 0 <= target < len(self.codomain):
                raise ConstructionError(f"target index {target} outside codomain")

    @classmethod
    def from_mapping(
        cls, domain: VertexSet, codomain: VertexSet, mapping: Mapping[str, str]
    ) -> "SetMap":
        """Build from ``label -> label``; every domain label must be mapped

        Example:
            >>> f = SetMap.from_mapping(
            ...     VertexSet.of("123"), VertexSet.of("ab"), {"1": "a", "2": "a", "3": "b"}
            ... )
            >>> f.is_surjective
            True
        """
        missing = [lb for lb in domain.labels if lb not in mapping]
        if missing:
            raise ConstructionError(f"map is not total, unmapped: {' '.join(missing)}")
        extra = [lb for lb in mapping if lb not in domain]
        if extra:
            raise ConstructionError(f"map sends unknown labels: {' '.join(sorted(extra))}")
        return cls(domain, codomain, tuple(codomain.index(mapping[lb]) for lb in domain.labels))

    def as_dict(self) -> Dict[str, str]:
        return {
            label: self.codomain.labels[target]
            for label, target in zip(self.domain.labels, self.assignment)
        }

    def __call__(self, label: str) -> str:
        return self.codomain.labels[self.assignment[self.domain.index(label)]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.as_dict() == other.as_dict()
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, frozenset(self.as_dict().items())))

    def __repr__(self) -> str:
        pairs = " ".join(f"{a}->{b}" for a, b in sorted(self.as_dict().items()))
        return f"SetMap({pairs})"

    # === FIBERS ===

    @cached_property
    def fiber_masks(self) -> Tuple[int, ...]:
        """Domain mask of each codomain element's fiber"""
        fibers = [0] * len(self.codomain)
        for i, target in enumerate(self.assignment):
            fibers[target] |= 1 << i
        return tuple(fibers)

    @cached_property
    def image_of_domain(self) -> int:
        mask = 0
        for target in self.assignment:
            mask |= 1 << target
        return mask

    @property
    def empty_fiber_mask(self) -> int:
        """Codomain elements with nothing mapped to them"""
        return self.codomain.full & ~self.image_of_domain

    @property
    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    @property
    def is_surjective(self) -> bool:
        return self.empty_fiber_mask == 0

    # === MASK LEVEL ===

    def image_mask(self, mask: int) -> int:
        result = 0
        for i in iter_bits(mask):
            result |= 1 << self.assignment[i]
        return result

    def preimage_mask(self, mask: int) -> int:
        result = 0
        for b in iter_bits(mask):
            result |= self.fiber_masks[b]
        return result

    def core_mask(self, mask: int) -> int:
        """Codomain elements whose whole fiber lies inside ``mask``"""
        result = 0
        for b, fiber in enumerate(self.fiber_masks):
            if is_submask(fiber, mask):
                result |= 1 << b
        return result

    # === SUBSET LEVEL ===

    def _in_domain(self, subset: Subset) -> int:
        if subset.over != self.domain:
            raise VertexSetMismatchError(f"{subset!r} is not a subset of the domain")
        return self.domain.coerce(subset).mask

    def _in_codomain(self, subset: Subset) -> int:
        if subset.over != self.codomain:
            raise VertexSetMismatchError(f"{subset!r} is not a subset of the codomain")
        return self.codomain.coerce(subset).mask

    def image(self, subset: Subset) -> Subset:
        return Subset(self.codomain, self.image_mask(self._in_domain(subset)))

    def preimage(self, subset: Subset) -> Subset:
        return Subset(self.domain, self.preimage_mask(self._in_codomain(subset)))

    def core(self, subset: Subset) -> Subset:
        """{b : f⁻¹(b) ⊆ D}; always contains the empty-fiber elements"""
        return Subset(self.codomain, self.core_mask(self._in_domain(subset)))

    def fiber(self, label: str) -> Subset:
        return Subset(self.domain, self.fiber_masks[self.codomain.index(label)])
