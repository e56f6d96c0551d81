"""Graph documents shipped with the package.

``mixed4`` reproduces a 4-vertex multigraph with every kind of element,
``components7`` a simple graph mixing AP and AC components, ``altpath``/``altcycle`` a
single Type III component whose associated component is a path/cycle,
``uniconnected`` a small uniconnected graph and ``km3`` the complete mixed
graph on three vertices.
"""
from __future__ import annotations

from importlib import resources

from ..graph import MixedGraph
from ..io import parse


def names() -> list[str]:
    return sorted(p.name[:-3] for p in resources.files(__name__).iterdir() if p.name.endswith(".mg"))


def text(name: str) -> str:
    return resources.files(__name__).joinpath(f"{name}.mg").read_text()


def load(name: str) -> MixedGraph:
    if name not in names():
        raise KeyError(f"no fixture {name!r}; available: {', '.join(names())}")
    return parse(text(name))


def path(name: str):
    """Filesystem path of a fixture (for passing to the command line)."""
    return resources.files(__name__).joinpath(f"{name}.mg")
