"""Bundled example hypergraphs."""

from importlib.resources import files
from pathlib import PurePosixPath
from typing import Dict, List, Optional

from ..core.hypergraph import Hypergraph
from ..utils.formats import parse_string

FIXTURES: Dict[str, str] = {
    "no_leaf_triangles": "no_leaf_triangles.txt",
    "small_hypertree": "small_hypertree.txt",
    "tree12_deep": "tree12_deep.txt",
    "tree12_flat": "tree12_flat.txt",
}

# short names accepted on the command line
ALIASES: Dict[str, str] = {
    "ex22": "no_leaf_triangles",
    "ex22_left": "no_leaf_triangles",
    "ex22_right": "small_hypertree",
    "ex34": "tree12_deep",
    "ex35": "tree12_flat",
}


def fixture_names() -> List[str]:
    return list(FIXTURES)


def resolve_fixture(source: str) -> Optional[str]:
    """Canonical fixture name for ``name``, ``fixtures/name`` or ``name.txt``; None if unknown."""
    path = PurePosixPath(source.replace("\\", "/"))
    if path.parts[:1] == ("fixtures",):
        path = PurePosixPath(*path.parts[1:]) if len(path.parts) > 1 else PurePosixPath()
    if len(path.parts) != 1:
        return None
    name = path.stem if path.suffix == ".txt" else path.name
    if name in FIXTURES:
        return name
    return ALIASES.get(name)


def fixture_text(name: str) -> str:
    canonical = resolve_fixture(name)
    if canonical is None:
        available = ", ".join([*FIXTURES, *ALIASES])
        raise KeyError(f"Unknown fixture {name!r}; available: {available}")
    return files(__package__).joinpath(FIXTURES[canonical]).read_text(encoding="utf-8")


def load_fixture(name: str) -> Hypergraph:
    return parse_string(fixture_text(name))
