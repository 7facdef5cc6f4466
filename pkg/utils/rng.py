"""Seeded random generation of complexes, maps and ideals

Every generator wraps ``numpy.random.default_rng`` (PCG64) seeded from a
``SeedSequence``. Child generators are spawned from the sequence, so trial
``k`` of a run draws the same values whatever the other trials do.
"""

from typing import List, Optional, Union

import numpy as np

from config import ORACLE_LIMIT
from models.complex import SimplicialComplex
from models.ideal import SqfIdeal
from models.set_map import SetMap
from models.vertex_set import VertexSet
from services.ideal_service import IdealService
from utils.error_handler import ensure_guard
from utils.helpers import popcount


class SeededGenerator:
    """Deterministic source of random combinatorial objects"""

    def __init__(self, seed: Union[int, np.random.SeedSequence, None] = None):
        if isinstance(seed, np.random.SeedSequence):
            self._sequence = seed
        else:
            self._sequence = np.random.SeedSequence(seed)
        self.rng = np.random.default_rng(self._sequence)

    @property
    def entropy(self) -> Optional[int]:
        return self._sequence.entropy

    def spawn(self, count: int) -> List["SeededGenerator"]:
        """Independent child generators"""
        return [SeededGenerator(child) for child in self._sequence.spawn(count)]

    def random(self) -> float:
        return float(self.rng.random())

    def randint(self, low: int, high: int) -> int:
        """Integer in [low, high]"""
        return int(self.rng.integers(low, high + 1))

    # === OBJECTS ===

    def vertex_set(self, size: int, prefix: str = "v") -> VertexSet:
        return VertexSet(tuple(f"{prefix}{i}" for i in range(1, size + 1)))

    def complex(self, vertices: VertexSet, density: Optional[float] = None) -> SimplicialComplex:
        """Random complex; a random density is drawn when none is given"""
        if density is None:
            density = self.random()
        return random_complex(vertices, self, density)

    def map(self, domain: VertexSet, codomain: VertexSet) -> SetMap:
        if len(domain) and not len(codomain):
            raise ValueError(f"no map from {domain!r} to the empty set")
        assignment = self.rng.integers(0, max(len(codomain), 1), size=len(domain))
        return SetMap(domain, codomain, tuple(int(t) for t in assignment))

    def surjection(self, domain: VertexSet, codomain: VertexSet) -> SetMap:
        """Random surjection; needs |domain| ≥ |codomain|"""
        if len(domain) < len(codomain):
            raise ValueError("no surjection onto a larger set")
        order = self.rng.permutation(len(domain))
        assignment = [0] * len(domain)
        for rank, i in enumerate(order):
            if rank < len(codomain):
                assignment[i] = rank
            else:
                assignment[i] = int(self.rng.integers(0, len(codomain)))
        return SetMap(domain, codomain, tuple(assignment))

    def injection(self, domain: VertexSet, codomain: VertexSet) -> SetMap:
        """Random injection; needs |domain| ≤ |codomain|"""
        if len(domain) > len(codomain):
            raise ValueError("no injection into a smaller set")
        targets = self.rng.permutation(len(codomain))[: len(domain)]
        return SetMap(domain, codomain, tuple(int(t) for t in targets))

    def ideal(self, ring: VertexSet, density: Optional[float] = None) -> SqfIdeal:
        """Ideal of a random complex"""
        return IdealService.sr_ideal(self.complex(ring, density))


def random_complex(
    vertices: VertexSet, seed: Union[int, SeededGenerator], density: float
) -> SimplicialComplex:
    """Random complex on ``vertices``

    Each subset S is drawn independently with probability
    ``density ** (|S| + 1)`` and the drawn sets generate the complex, so the
    void complex and ``{∅}`` both have positive probability. Density 0 gives
    the void complex when the first draw is below 1/2 and ``{∅}`` otherwise.
    Density 1 gives the full simplex.
    """
    ensure_guard("random_complex", len(vertices), ORACLE_LIMIT)
    gen = seed if isinstance(seed, SeededGenerator) else SeededGenerator(seed)

    if density >= 1.0:
        return SimplicialComplex.simplex(vertices)
    if density <= 0.0:
        if gen.random() < 0.5:
            return SimplicialComplex.void(vertices)
        return SimplicialComplex.empty_face(vertices)

    masks = np.arange(1 << len(vertices))
    sizes = np.array([popcount(int(m)) for m in masks])
    draws = gen.rng.random(len(masks))
    picked = masks[draws < np.power(density, sizes + 1)]
    return SimplicialComplex(vertices, tuple(int(m) for m in picked))
