"""Small named triangulations shipped with the package."""

from __future__ import annotations

from typing import Sequence

from .complex import SimplicialComplex
from .errors import SimplicialError

_LETTERS = "abcdefghijklmnopqrstuvwxyz"

# facets as words in a, b, c, ... (a = first vertex)
_FACETS = {
    "realProjectivePlane": "bef aef cdf adf bcf cde bde ace abd abc",
    # minimal 7-vertex (Moebius) torus
    "minimalTorus": "cfg afg beg aeg cdg bdg def bef adf bcf cde ace abd abc",
    # obtained from a 4x4 grid Klein bottle by link-condition edge contractions
    "kleinBottle": "abd abf adg aef aeg bcg bch bde beh bfg cde cdh ceg dgh efh fgh",
}

_ALIASES = {
    "rp2": "realProjectivePlane",
    "realprojectiveplane": "realProjectivePlane",
    "torus": "minimalTorus",
    "minimaltorus": "minimalTorus",
    "klein": "kleinBottle",
    "kleinbottle": "kleinBottle",
}

NAMES = tuple(_FACETS)


def _vertex_count(name: str) -> int:
    return len(set(_FACETS[name].replace(" ", "")))


def named_complex(name: str, vertices: Sequence[str] | None = None) -> SimplicialComplex:
    """One of ``realProjectivePlane``, ``kleinBottle``, ``minimalTorus``.

    The triangulation uses the first 6, 8 or 7 labels of ``vertices``
    (default a, b, c, ...); any further labels are kept as non-vertices.
    """
    key = name if name in _FACETS else _ALIASES.get(name.lower())
    if key is None:
        raise SimplicialError(f"unknown complex {name!r}; choose from {', '.join(NAMES)}")
    need = _vertex_count(key)
    if vertices is None:
        vertices = _LETTERS[:need]
    vertices = tuple(vertices)
    if len(vertices) < need:
        raise SimplicialError(f"{key} needs {need} vertices, got {len(vertices)}")
    facets = [tuple(_LETTERS.index(c) for c in word) for word in _FACETS[key].split()]
    return SimplicialComplex(vertices, facets)
