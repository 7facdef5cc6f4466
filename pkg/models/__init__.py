"""Core data types"""

from models.complex import SimplicialComplex
from models.ideal import SqfIdeal, SqfMonomial
from models.set_map import SetMap
from models.vertex_set import Subset, VertexSet

__all__ = [
    "SetMap",
    "SimplicialComplex",
    "SqfIdeal",
    "SqfMonomial",
    "Subset",
    "VertexSet",
]
