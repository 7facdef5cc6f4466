"""Hypothesis strategies and exhaustive enumerators for small inputs"""

from itertools import combinations, product
from typing import Iterator, List

from hypothesis import strategies as st

from models.complex import SimplicialComplex
from models.ideal import SqfIdeal
from models.set_map import SetMap
from models.vertex_set import VertexSet
from utils.helpers import maximal_masks


def labels(size: int, prefix: str) -> VertexSet:
    return VertexSet(tuple(f"{prefix}{i}" for i in range(1, size + 1)))


def vertex_sets(min_size: int = 0, max_size: int = 4, prefix: str = "a"):
    return st.integers(min_size, max_size).map(lambda n: labels(n, prefix))


@st.composite
def complexes(draw, vertices: VertexSet):
    """Any complex on ``vertices``, void and {∅} included"""
    top = (1 << len(vertices)) - 1
    masks = draw(st.lists(st.integers(0, top), max_size=5))
    return SimplicialComplex(vertices, tuple(masks))


@st.composite
def maps(draw, max_domain: int = 4, max_codomain: int = 3):
    """Any total map between small vertex sets"""
    m = draw(st.integers(1, max_codomain))
    n = draw(st.integers(0, max_domain))
    assignment = draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    return SetMap(labels(n, "a"), labels(m, "b"), tuple(assignment))


@st.composite
def surjections(draw, max_domain: int = 4):
    n = draw(st.integers(1, max_domain))
    m = draw(st.integers(1, n))
    extra = draw(st.lists(st.integers(0, m - 1), min_size=n - m, max_size=n - m))
    assignment = draw(st.permutations(list(range(m)) + extra))
    return SetMap(labels(n, "a"), labels(m, "b"), tuple(assignment))


@st.composite
def injections(draw, max_codomain: int = 4):
    m = draw(st.integers(0, max_codomain))
    n = draw(st.integers(0, m))
    targets = draw(st.permutations(list(range(m))))
    return SetMap(labels(n, "a"), labels(m, "b"), tuple(targets[:n]))


@st.composite
def composable_maps(draw, max_size: int = 3):
    """(f, g) with f: A -> B and g: B -> C"""
    n = draw(st.integers(0, max_size))
    m = draw(st.integers(1, max_size))
    k = draw(st.integers(1, max_size))
    f = draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    g = draw(st.lists(st.integers(0, k - 1), min_size=m, max_size=m))
    A, B, C = labels(n, "a"), labels(m, "b"), labels(k, "c")
    return SetMap(A, B, tuple(f)), SetMap(B, C, tuple(g))


@st.composite
def map_with_complexes(draw, map_strategy=None):
    """(f, X on the domain, Y on the codomain)"""
    f = draw(map_strategy if map_strategy is not None else maps())
    return f, draw(complexes(f.domain)), draw(complexes(f.codomain))


@st.composite
def ideals(draw, ring: VertexSet, block: int = -1):
    """Any squarefree ideal on ``ring`` whose generators lie inside ``block``"""
    top = (1 << len(ring)) - 1
    block = top if block < 0 else block
    masks = draw(st.lists(st.integers(0, top), max_size=4))
    return SqfIdeal(ring, tuple(m & block for m in masks))


@st.composite
def disjoint_block_ideals(draw, ring: VertexSet):
    """(I, J) on ``ring`` using complementary blocks of variables"""
    top = (1 << len(ring)) - 1
    block = draw(st.integers(0, top))
    return draw(ideals(ring, block)), draw(ideals(ring, top & ~block))


def all_complexes(vertices: VertexSet) -> List[SimplicialComplex]:
    """Every complex on ``vertices``; keep it to three vertices or fewer"""
    masks = range(1 << len(vertices))
    found = {}
    for r in range(len(masks) + 1):
        for family in combinations(masks, r):
            facets = tuple(sorted(maximal_masks(family)))
            found.setdefault(facets, SimplicialComplex(vertices, facets))
    return list(found.values())


def all_maps(domain: VertexSet, codomain: VertexSet) -> Iterator[SetMap]:
    for assignment in product(range(len(codomain)), repeat=len(domain)):
        yield SetMap(domain, codomain, assignment)
