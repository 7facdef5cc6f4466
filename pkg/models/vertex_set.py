"""Vertex sets and subsets"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Tuple

from config import MAX_VERTICES
from utils.error_handler import (
    ConstructionError,
    DisjointnessError,
    VertexSetMismatchError,
)
from utils.helpers import full_mask, iter_bits, mask_of, popcount
from utils.validators import label_problem


@dataclass(frozen=True, eq=False)
class VertexSet:
    """Ordered finite set of distinct labels

    The order fixes bit positions of subset masks. Equality ignores order,
    so masks are remapped whenever two equal vertex sets disagree on it.
    """

    labels: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)

        if len(labels) > MAX_VERTICES:
            raise ConstructionError(
                f"vertex set has {len(labels)} labels, at most {MAX_VERTICES} allowed"
            )
        for label in labels:
            problem = label_problem(label)
            if problem:
                raise ConstructionError(f"invalid label '{label}': {problem}")
        if len(set(labels)) != len(labels):
            duplicates = sorted({lb for lb in labels if labels.count(lb) > 1})
            raise ConstructionError(f"duplicate labels: {' '.join(duplicates)}")

        object.__setattr__(self, "_index", {lb: i for i, lb in enumerate(labels)})

    @classmethod
    def of(cls, labels: Iterable[str]) -> "VertexSet":
        return cls(tuple(labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.labels == other.labels or self.label_set == other.label_set

    def __hash__(self) -> int:
        return hash(self.label_set)

    def __repr__(self) -> str:
        return f"VertexSet({' '.join(self.labels)})"

    @property
    def label_set(self) -> frozenset:
        return frozenset(self.labels)

    @property
    def full(self) -> int:
        return full_mask(len(self.labels))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ConstructionError(f"unknown label '{label}'") from None

    def mask(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(label) for label in labels)

    def labels_of(self, mask: int) -> Tuple[str, ...]:
        """Labels of ``mask`` in vertex order"""
        return tuple(self.labels[i] for i in iter_bits(mask))

    def sorted_labels(self, mask: int) -> Tuple[str, ...]:
        return tuple(sorted(self.labels_of(mask)))

    def sort_key(self, mask: int) -> Tuple[int, Tuple[str, ...]]:
        """Canonical order: cardinality, then lexicographic member list"""
        return popcount(mask), self.sorted_labels(mask)

    def subset(self, labels: Iterable[str]) -> "Subset":
        return Subset(self, self.mask(labels))

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def everything(self) -> "Subset":
        return Subset(self, self.full)

    def is_disjoint(self, other: "VertexSet") -> bool:
        return not (self.label_set & other.label_set)

    def issubset(self, other: "VertexSet") -> bool:
        return self.label_set <= other.label_set

    def restrict(self, mask: int) -> "VertexSet":
        """The vertex set of the members of ``mask``, order kept"""
        return VertexSet(self.labels_of(mask))

    def concat(self, other: "VertexSet") -> "VertexSet":
        """Disjoint union with this set's labels first"""
        if not self.is_disjoint(other):
            shared = sorted(self.label_set & other.label_set)
            raise DisjointnessError(f"vertex sets share labels: {' '.join(shared)}")
        return VertexSet(self.labels + other.labels)

    def translate(self, mask: int, source: "VertexSet") -> int:
        """Re-express a mask over ``source`` as a mask over this set

        ``source`` must be a subset of this vertex set by labels.
        """
        if source.labels == self.labels:
            return mask
        return mask_of(self.index(label) for label in source.labels_of(mask))

    def coerce(self, subset: "Subset") -> "Subset":
        """The same subset expressed over this vertex set"""
        if subset.over is self or subset.over.labels == self.labels:
            return subset
        if subset.over != self:
            raise VertexSetMismatchError(
                f"subset over {subset.over!r} used with {self!r}"
            )
        return Subset(self, self.translate(subset.mask, subset.over))


@dataclass(frozen=True, eq=False)
class Subset:
    """Membership indicator over a vertex set"""

    over: VertexSet
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.over.full:
            raise ConstructionError(f"mask {self.mask} exceeds {self.over!r}")

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.over.labels_of(self.mask)

    @property
    def members(self) -> frozenset:
        return frozenset(self.labels)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.over and bool(self.mask >> self.over.index(label) & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        if self.over.labels == other.over.labels:
            return self.mask == other.mask
        return self.over == other.over and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.over, self.members))

    def __repr__(self) -> str:
        return "{" + " ".join(sorted(self.labels)) + "}"

    def _align(self, other: "Subset") -> int:
        return self.over.coerce(other).mask

    def issubset(self, other: "Subset") -> bool:
        return self.mask & ~self._align(other) == 0

    def __le__(self, other: "Subset") -> bool:
        return self.issubset(other)

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.over, self.mask | self._align(other))

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.over, self.mask & self._align(other))

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.over, self.mask & ~self._align(other))

    def complement(self) -> "Subset":
        return Subset(self.over, self.over.full & ~self.mask)
