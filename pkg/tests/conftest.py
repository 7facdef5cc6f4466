"""Shared fixtures"""

import io
from pathlib import Path

import pytest
from hypothesis import settings

from handlers.dispatcher import run
from models.complex import SimplicialComplex
from models.set_map import SetMap
from models.vertex_set import VertexSet

FIXTURES = Path(__file__).parent / "fixtures"

# some properties loop over every small complex inside one example
settings.register_profile("srcx", deadline=None)
settings.load_profile("srcx")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def fold():
    """f: {1,2,3} -> {a,b} with fibers {1,2} and {3}"""
    A, B = VertexSet.of("123"), VertexSet.of("ab")
    return SetMap.from_mapping(A, B, {"1": "a", "2": "a", "3": "b"})


@pytest.fixture
def merge():
    """Identity on a b x y, with r1 and r2 both sent to r"""
    A = VertexSet(("a", "b", "x", "y", "r1", "r2"))
    B = VertexSet(("a", "b", "x", "y", "r"))
    mapping = {"a": "a", "b": "b", "x": "x", "y": "y", "r1": "r", "r2": "r"}
    return SetMap.from_mapping(A, B, mapping)


@pytest.fixture
def merge_source(merge):
    return SimplicialComplex.from_labels(
        merge.domain,
        [["a", "r1", "x", "y"], ["b", "r1", "x", "y"], ["r1", "r2", "x"], ["r1", "r2", "y"]],
    )


@pytest.fixture
def cli():
    """Run the CLI in-process; returns (exit code, stdout, stderr)"""

    def invoke(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = run([str(a) for a in argv], out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    return invoke


@pytest.fixture
def write_file(tmp_path):
    """Write text to a temporary file and return its path"""

    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
