"""Text formats for complexes, maps and ideals

Complex::

    vertices: a b x y r
    facets: {a x y} {b x y} {r x} {r y}

``facets: -`` is the void complex and ``facets: {}`` is {∅}.

Map::

    domain: a b r1 r2
    codomain: a b r
    map: a->a b->b r1->r r2->r

Ideal::

    ring: 1 2 3
    I = (x_1*x_3, x_2*x_3)

Ring labels cannot contain ``*``, the variable separator.

Lines starting with ``#`` are comments. Rendering is canonical: labels
sorted, facets and generators in (size, members) order, so parsing a
rendered value and rendering it again gives the same text.
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from config import MONOMIAL_SEPARATOR, VARIABLE_PREFIXES, VOID_TOKEN
from models.complex import SimplicialComplex
from models.ideal import SqfIdeal
from models.set_map import SetMap
from models.vertex_set import VertexSet
from utils.error_handler import ParseError, PreconditionError
from utils.validators import ideal_label_problem
from validation.schemas import ComplexDocument, IdealDocument, MapDocument

logger = logging.getLogger(__name__)

Position = Tuple[int, int]
Model = TypeVar("Model", bound=BaseModel)

SECTION = re.compile(r"^(\s*)([A-Za-z]+)\s*:")
IDEAL_LINE = re.compile(r"^(\s*)I\s*=")
VARIABLE = re.compile(r"^([A-Za-z])_(.+)$")


@dataclass
class _Line:
    """The part of a line after its ``key:`` header"""

    number: int
    column: int  # 1-based column of ``body[0]``
    body: str


# === TOKENIZING ===


def _sections(text: str, keys: Tuple[str, ...], ideal: bool = False) -> Dict[str, _Line]:
    found: Dict[str, _Line] = {}
    last = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last = number
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue

        if ideal:
            match = IDEAL_LINE.match(raw)
            if match:
                key = "I"
                if key in found:
                    raise ParseError("ideal given twice", number, len(match.group(1)) + 1)
                found[key] = _Line(number, match.end() + 1, raw[match.end():])
                continue

        match = SECTION.match(raw)
        if not match:
            raise ParseError(f"malformed line '{stripped}'", number, len(raw) - len(raw.lstrip()) + 1)
        key = match.group(2)
        if key not in keys:
            raise ParseError(f"unknown section '{key}'", number, len(match.group(1)) + 1)
        if key in found:
            raise ParseError(f"section '{key}' given twice", number, len(match.group(1)) + 1)
        found[key] = _Line(number, match.end() + 1, raw[match.end():])

    wanted = keys + (("I",) if ideal else ())
    for key in wanted:
        if key not in found:
            name = "I = (...)" if key == "I" else f"{key}:"
            raise ParseError(f"missing '{name}' line", max(last, 1), 1)
    return found


def _words(line: _Line, field: str, positions: Dict[tuple, Position]) -> List[str]:
    positions[(field,)] = (line.number, line.column)
    words = []
    for i, match in enumerate(re.finditer(r"\S+", line.body)):
        positions[(field, i)] = (line.number, line.column + match.start())
        words.append(match.group())
    return words


def _braced_groups(line: _Line, field: str, positions: Dict[tuple, Position]) -> List[List[str]]:
    """``{a b} {c}`` as label lists, recording the column of every label"""
    positions[(field,)] = (line.number, line.column)
    groups: List[List[str]] = []
    body = line.body
    i = 0
    while i < len(body):
        ch = body[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "{":
            raise ParseError(f"expected '{{', found '{ch}'", line.number, line.column + i)

        close = body.find("}", i + 1)
        if close < 0:
            raise ParseError("unclosed '{'", line.number, line.column + i)
        inner = body[i + 1:close]
        nested = inner.find("{")
        if nested >= 0:
            raise ParseError("nested '{'", line.number, line.column + i + 1 + nested)

        index = len(groups)
        positions[(field, index)] = (line.number, line.column + i)
        members = []
        for j, match in enumerate(re.finditer(r"\S+", inner)):
            positions[(field, index, j)] = (line.number, line.column + i + 1 + match.start())
            members.append(match.group())
        groups.append(members)
        i = close + 1
    return groups


def _split_top_level(text: str, offset: int) -> List[Tuple[str, int]]:
    """Split at commas outside parentheses, keeping each piece's offset"""
    pieces = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append((text[start:i], offset + start))
            start = i + 1
    pieces.append((text[start:], offset + start))
    return pieces


def _locate(positions: Dict[tuple, Position], path: tuple) -> Optional[Position]:
    path = tuple(path)
    while path:
        if path in positions:
            return positions[path]
        path = path[:-1]
    return None


def _validate(model: Type[Model], positions: Dict[tuple, Position], **data) -> Model:
    """Build ``model`` and turn the first validation error into a ParseError"""
    try:
        return model(**data)
    except ValidationError as e:
        first = e.errors()[0]
        path = (first.get("ctx") or {}).get("path") or first["loc"]
        line, column = _locate(positions, path) or (0, 0)
        logger.debug(f"{model.__name__} rejected at {path}: {first['msg']}")
        raise ParseError(first["msg"], line, column) from None


# === PARSING ===


def parse_complex(text: str) -> SimplicialComplex:
    sections = _sections(text, ("vertices", "facets"))
    positions: Dict[tuple, Position] = {}
    vertices = _words(sections["vertices"], "vertices", positions)

    facets_line = sections["facets"]
    if not facets_line.body.strip():
        raise ParseError(
            f"no facets given, write '{VOID_TOKEN}' for the void complex",
            facets_line.number,
            facets_line.column,
        )
    if facets_line.body.strip() == VOID_TOKEN:
        facets = None
    else:
        facets = _braced_groups(facets_line, "facets", positions)

    document = _validate(ComplexDocument, positions, vertices=vertices, facets=facets)
    return document.to_complex()


def parse_map(text: str) -> SetMap:
    sections = _sections(text, ("domain", "codomain", "map"))
    positions: Dict[tuple, Position] = {}
    domain = _words(sections["domain"], "domain", positions)
    codomain = _words(sections["codomain"], "codomain", positions)

    map_line = sections["map"]
    pairs = []
    for i, word in enumerate(_words(map_line, "assignment", positions)):
        line, column = positions[("assignment", i)]
        parts = word.split("->")
        if len(parts) != 2:
            raise ParseError(f"expected 'source->target', found '{word}'", line, column)
        positions[("assignment", i, 0)] = (line, column)
        positions[("assignment", i, 1)] = (line, column + len(parts[0]) + 2)
        pairs.append((parts[0], parts[1]))

    document = _validate(MapDocument, positions, domain=domain, codomain=codomain, assignment=pairs)
    return document.to_map()


def parse_ideal(text: str) -> Tuple[SqfIdeal, str]:
    """The ideal and the variable prefix it was written with"""
    sections = _sections(text, ("ring",), ideal=True)
    positions: Dict[tuple, Position] = {}
    ring = _words(sections["ring"], "ring", positions)

    line = sections["I"]
    body = line.body.strip()
    start = line.column + line.body.index(body[0]) if body else line.column
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError("expected '(...)' after 'I ='", line.number, start)

    inner = body[1:-1]
    generators: List[List[str]] = []
    prefixes = set()
    positions[("generators",)] = (line.number, start)
    positions[("prefix",)] = (line.number, start)

    if inner.strip() != "0":
        for index, (piece, offset) in enumerate(_split_top_level(inner, start + 1)):
            column = offset + len(piece) - len(piece.lstrip())
            piece = piece.strip()
            positions[("generators", index)] = (line.number, column)
            if not piece:
                raise ParseError("empty generator", line.number, column)
            if piece == "1":
                generators.append([])
                continue

            labels = []
            for j, variable in enumerate(piece.split(MONOMIAL_SEPARATOR)):
                match = VARIABLE.match(variable.strip())
                if not match:
                    raise ParseError(
                        f"expected a variable like x_a, found '{variable.strip()}'",
                        line.number,
                        column,
                    )
                prefixes.add(match.group(1))
                labels.append(match.group(2))
                positions[("generators", index, j)] = (line.number, column)
                column += len(variable) + 1
            generators.append(labels)

    if len(prefixes) > 1:
        raise ParseError(f"mixed variable prefixes: {' '.join(sorted(prefixes))}", line.number, start)
    prefix = prefixes.pop() if prefixes else VARIABLE_PREFIXES[0]

    document = _validate(
        IdealDocument, positions, ring=ring, generators=generators, prefix=prefix
    )
    return document.to_ideal(), document.prefix


# === RENDERING ===


def _braces(vertices: VertexSet, mask: int) -> str:
    return "{" + " ".join(vertices.sorted_labels(mask)) + "}"


def render_labels(key: str, labels) -> str:
    return f"{key}: {' '.join(sorted(labels))}".rstrip()


def render_complex(X: SimplicialComplex) -> str:
    if X.is_void:
        facets = VOID_TOKEN
    else:
        facets = " ".join(_braces(X.vertices, m) for m in X.facet_masks)
    return f"{render_labels('vertices', X.vertices.labels)}\nfacets: {facets}\n"


def render_monomial(vertices: VertexSet, mask: int, prefix: str = "x") -> str:
    if not mask:
        return "1"
    return MONOMIAL_SEPARATOR.join(f"{prefix}_{lb}" for lb in vertices.sorted_labels(mask))


def render_generators(I: SqfIdeal, prefix: str = "x") -> str:
    if I.is_zero:
        return "(0)"
    return "(" + ", ".join(render_monomial(I.ring, g, prefix) for g in I.generator_masks) + ")"


def render_ideal(I: SqfIdeal, prefix: str = "x") -> str:
    for label in I.ring.labels:
        problem = ideal_label_problem(label)
        if problem:
            raise PreconditionError(f"label '{label}' cannot be written as an ideal: {problem}")
    return f"{render_labels('ring', I.ring.labels)}\nI = {render_generators(I, prefix)}\n"


def render_map(f: SetMap) -> str:
    pairs = " ".join(f"{a}->{b}" for a, b in sorted(f.as_dict().items()))
    return (
        f"{render_labels('domain', f.domain.labels)}\n"
        f"{render_labels('codomain', f.codomain.labels)}\n"
        f"map: {pairs}".rstrip()
        + "\n"
    )


def render_info(X: SimplicialComplex) -> str:
    """Summary of a complex, one ``key: value`` per line"""
    dimension = "void" if X.dimension is None else str(X.dimension)
    cofacets = " ".join(_braces(X.vertices, m) for m in X.cofacet_masks) or VOID_TOKEN
    lines = [
        render_labels("vertices", X.vertices.labels),
        f"dimension: {dimension}",
        f"facet count: {len(X.facet_masks)}",
        f"cofacet count: {len(X.cofacet_masks)}",
        render_labels("support", X.support().labels),
        render_labels("cosupport", X.cosupport().labels),
        render_complex(X).splitlines()[1],
        f"cofacets: {cofacets}",
    ]
    return "\n".join(lines) + "\n"


# === FILES ===


def _load(path: str, parse: Callable):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror}", source=path) from None
    try:
        return parse(text)
    except ParseError as e:
        raise e.with_source(path) from None


def load_complex(path: str) -> SimplicialComplex:
    return _load(path, parse_complex)


def load_map(path: str) -> SetMap:
    return _load(path, parse_map)


def load_ideal(path: str) -> Tuple[SqfIdeal, str]:
    return _load(path, parse_ideal)
