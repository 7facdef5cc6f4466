"""Squarefree monomials and monomial ideals"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from models.vertex_set import Subset, VertexSet
from utils.error_handler import ConstructionError, VertexSetMismatchError
from utils.helpers import is_submask, minimal_masks


@dataclass(frozen=True, eq=False)
class SqfMonomial:
    """The product of the variables indexed by ``support``"""

    support: Subset

    @property
    def ring(self) -> VertexSet:
        return self.support.over

    @property
    def mask(self) -> int:
        return self.support.mask

    @classmethod
    def of(cls, ring: VertexSet, labels: Iterable[str]) -> "SqfMonomial":
        return cls(ring.subset(labels))

    def divides(self, other: "SqfMonomial") -> bool:
        return self.support.issubset(other.support)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SqfMonomial):
            return NotImplemented
        return self.support == other.support

    def __hash__(self) -> int:
        return hash(self.support)

    def __repr__(self) -> str:
        if not self.mask:
            return "1"
        return "*".join(f"x_{lb}" for lb in sorted(self.support.labels))


@dataclass(frozen=True, eq=False)
class SqfIdeal:
    """Squarefree monomial ideal given by its minimal generator supports

    No generators is the zero ideal; the single generator 0 is the unit ideal.
    """

    ring: VertexSet
    generator_masks: Tuple[int, ...]

    def __post_init__(self):
        full = self.ring.full
        for mask in self.generator_masks:
            if mask < 0 or mask & ~full:
                raise ConstructionError(f"generator mask {mask} exceeds {self.ring!r}")
        generators = sorted(minimal_masks(self.generator_masks), key=self.ring.sort_key)
        object.__setattr__(self, "generator_masks", tuple(generators))

    @classmethod
    def from_masks(cls, ring: VertexSet, masks: Iterable[int]) -> "SqfIdeal":
        return cls(ring, tuple(masks))

    @classmethod
    def from_generators(cls, ring: VertexSet, generators: Iterable[Subset]) -> "SqfIdeal":
        return cls(ring, tuple(ring.coerce(g).mask for g in generators))

    @classmethod
    def zero(cls, ring: VertexSet) -> "SqfIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: VertexSet) -> "SqfIdeal":
        return cls(ring, (0,))

    @property
    def generators(self) -> Tuple[SqfMonomial, ...]:
        return tuple(SqfMonomial(Subset(self.ring, m)) for m in self.generator_masks)

    @property
    def is_zero(self) -> bool:
        return not self.generator_masks

    @property
    def is_unit(self) -> bool:
        return self.generator_masks == (0,)

    @property
    def variable_support(self) -> int:
        mask = 0
        for g in self.generator_masks:
            mask |= g
        return mask

    def contains_mask(self, mask: int) -> bool:
        """Membership of the monomial with support ``mask``"""
        return any(is_submask(g, mask) for g in self.generator_masks)

    def contains(self, monomial: SqfMonomial) -> bool:
        if monomial.ring != self.ring:
            raise VertexSetMismatchError(f"monomial over {monomial.ring!r}, ideal over {self.ring!r}")
        return self.contains_mask(self.ring.coerce(monomial.support).mask)

    def __contains__(self, monomial: object) -> bool:
        return isinstance(monomial, SqfMonomial) and self.contains(monomial)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SqfIdeal):
            return NotImplemented
        if other.ring != self.ring:
            return False
        theirs = {self.ring.translate(m, other.ring) for m in other.generator_masks}
        return theirs == set(self.generator_masks)

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(g.support.members for g in self.generators)))

    def __repr__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(map(repr, self.generators)) + ")"
