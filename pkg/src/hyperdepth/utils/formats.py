"""Reading and writing hypergraph files.

Text format: one edge per line, vertex names separated by whitespace or
commas; ``#`` starts a comment. An optional first line
``vertices: a b c`` fixes the ambient vertex order and may declare
vertices lying in no edge; otherwise vertices are numbered in order of
first appearance.

JSON format: ``{"vertices": [...], "edges": [[...], ...]}``, with
``vertices`` optional.
"""

import hashlib
import json
from pathlib import Path
from typing import IO, Any, Dict, List, Optional, Union

from ..core.errors import ParseError
from ..core.hypergraph import Hypergraph, make_hypergraph

HEADER = "vertices:"

Source = Union[str, Path, IO[str]]


def _tokens(line: str) -> List[str]:
    return line.replace(",", " ").split()


def parse_text(text: str) -> Hypergraph:
    declared: Optional[List[str]] = None
    edges: List[List[str]] = []
    seen: Dict[str, None] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith(HEADER):
            if declared is not None or edges:
                raise ParseError("the vertices header must come before any edge", lineno)
            declared = _tokens(line[len(HEADER):])
            continue
        names = _tokens(line)
        if declared is not None:
            for name in names:
                if name not in declared:
                    raise ParseError(f"vertex {name!r} is not in the vertices header", lineno)
        edges.append(names)
        for name in names:
            seen.setdefault(name)
    vertices = declared if declared is not None else list(seen)
    return make_hypergraph(vertices, edges)


def parse_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno) from e
    if not isinstance(data, dict) or not isinstance(data.get("edges"), list):
        raise ParseError("expected an object with an 'edges' list")
    edges = data["edges"]
    for e in edges:
        if not isinstance(e, list) or not all(isinstance(v, str) for v in e):
            raise ParseError(f"edge {e!r} is not a list of vertex names")
    vertices = data.get("vertices")
    if vertices is None:
        vertices = list(dict.fromkeys(v for e in edges for v in e))
    elif not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("'vertices' must be a list of vertex names")
    return make_hypergraph(vertices, edges)


def parse_string(text: str) -> Hypergraph:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def parse_input(source: Source) -> Hypergraph:
    """Parse a path or an open text stream."""
    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            text = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"{path} is not UTF-8: {e}") from e
    else:
        try:
            text = source.read()
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not UTF-8: {e}") from e
    return parse_string(text)


def to_text(G: Hypergraph) -> str:
    lines = [f"{HEADER} " + " ".join(G.names)]
    lines.extend(" ".join(edge) for edge in G.edge_names())
    return "\n".join(lines) + "\n"


def to_dict(G: Hypergraph) -> Dict[str, Any]:
    return {"vertices": list(G.names), "edges": G.edge_names()}


def to_json(G: Hypergraph, indent: Optional[int] = 2) -> str:
    return json.dumps(to_dict(G), indent=indent)


def canonical_digest(G: Hypergraph) -> str:
    """sha256 of the canonical text form."""
    return hashlib.sha256(to_text(G).encode("utf-8")).hexdigest()
