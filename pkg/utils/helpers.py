"""Bit-mask helpers

Subsets of an ordered vertex set are stored as ``int`` masks: bit ``i`` is set
when the ``i``-th vertex is a member.
"""

from itertools import product
from typing import Iterable, Iterator, List, Sequence

from cachetools import LRUCache, cached

from config import CACHE_SIZE


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, lowest first"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def full_mask(size: int) -> int:
    return (1 << size) - 1


def is_submask(small: int, large: int) -> bool:
    return small & ~large == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, from ``mask`` itself down to 0"""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@cached(LRUCache(maxsize=CACHE_SIZE))
def power_set_masks(size: int) -> tuple:
    """Every mask over ``size`` bits, ordered by (popcount, value)"""
    return tuple(sorted(range(1 << size), key=lambda m: (popcount(m), m)))


def maximal_masks(masks: Iterable[int]) -> List[int]:
    """Maximal elements under inclusion, duplicates removed"""
    kept: List[int] = []
    for mask in sorted(set(masks), key=popcount, reverse=True):
        if not any(is_submask(mask, other) for other in kept):
            kept.append(mask)
    return kept


def minimal_masks(masks: Iterable[int]) -> List[int]:
    """Minimal elements under inclusion, duplicates removed"""
    kept: List[int] = []
    for mask in sorted(set(masks), key=popcount):
        if not any(is_submask(other, mask) for other in kept):
            kept.append(mask)
    return kept


def minimal_transversals(edges: Iterable[int]) -> List[int]:
    """Minimal sets meeting every edge of a hypergraph

    Berge multiplication: the transversal family is grown one edge at a time
    and reduced to its minimal elements after each step.

    An empty hypergraph has the single transversal 0. A hypergraph with an
    empty edge has none.

    Example:
        >>> sorted(minimal_transversals([0b011, 0b110]))
        [2, 5]
    """
    family = [0]
    for edge in minimal_masks(edges):
        if edge == 0:
            return []
        grown = set()
        for partial in family:
            if partial & edge:
                grown.add(partial)
            else:
                for bit in iter_bits(edge):
                    grown.add(partial | (1 << bit))
        family = minimal_masks(grown)
    return family


def transversals(blocks: Sequence[int]) -> Iterator[int]:
    """Masks picking exactly one bit from each block

    Nothing is produced when some block is empty; one empty mask when there
    are no blocks.
    """
    choices = [list(iter_bits(block)) for block in blocks]
    for picked in product(*choices):
        yield mask_of(picked)
