"""Simplicial maps given by vertex assignments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .complex import Face, SimplicialComplex
from .errors import SimplicialError
from .smith import Matrix, zeros


@dataclass(frozen=True)
class SimplicialMap:
    """Vertex assignment ``images[i]`` = target index of source vertex i.

    Faces are not checked at construction; see :meth:`is_well_defined`.
    """

    source: SimplicialComplex
    target: SimplicialComplex
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source.vertices):
            raise SimplicialError(
                f"{len(self.images)} images for {len(self.source.vertices)} source vertices"
            )
        n = len(self.target.vertices)
        if any(not 0 <= i < n for i in self.images):
            raise SimplicialError("image index outside the target vertex set")

    def image(self, face: Face) -> Face:
        return tuple(sorted({self.images[v] for v in face}))

    def offending_facet(self) -> Face | None:
        """First source facet whose image is not a target face."""
        for f in self.source.facets:
            if not self.target.contains(self.image(f)):
                return f
        return None

    def is_well_defined(self) -> bool:
        return self.offending_facet() is None

    def as_dict(self) -> dict[str, str]:
        return {
            self.source.vertices[i]: self.target.vertices[j] for i, j in enumerate(self.images)
        }


def make_map(target: SimplicialComplex, source: SimplicialComplex, images: Sequence[str] | Mapping[str, str]) -> SimplicialMap:
    """Map sending source vertex k to the target vertex labelled ``images[k]``.

    ``images`` may also be a mapping from source labels to target labels.
    """
    if isinstance(images, Mapping):
        missing = [v for v in source.vertices if v not in images]
        if missing or len(images) != len(source.vertices):
            raise SimplicialError(f"images must cover exactly the source vertices; missing {missing}")
        images = [images[v] for v in source.vertices]
    images = list(images)
    if len(images) != len(source.vertices):
        raise SimplicialError(
            f"{len(images)} images for {len(source.vertices)} source vertices"
        )
    return SimplicialMap(source, target, tuple(target.index(w) for w in images))


def identity_map(cx: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(cx, cx, tuple(range(len(cx.vertices))))


def compose(psi: SimplicialMap, phi: SimplicialMap) -> SimplicialMap:
    """psi after phi."""
    if phi.target != psi.source:
        raise SimplicialError("target of the first map is not the source of the second")
    return SimplicialMap(phi.source, psi.target, tuple(psi.images[i] for i in phi.images))


def _sort_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def induced_chain_map(phi: SimplicialMap) -> dict[int, Matrix]:
    """Matrices of the induced map on reduced chains, keyed by dimension.

    A face on which the map is not injective goes to 0; otherwise to its
    sorted image with the sign of the sorting permutation.  Rows follow the
    target's sorted faces, columns the source's.
    """
    bad = phi.offending_facet()
    if bad is not None:
        raise SimplicialError(
            f"map is not simplicial: facet {list(phi.source.labels_of(bad))} has no image face"
        )
    src, tgt = phi.source.faces(), phi.target.faces()
    out = {}
    for d, cols in src.items():
        rows = tgt.get(d, [])
        pos = {f: i for i, f in enumerate(rows)}
        m = zeros(len(rows), len(cols))
        for c, f in enumerate(cols):
            img = [phi.images[v] for v in f]
            if len(set(img)) < len(img):
                continue
            m[pos[tuple(sorted(img))]][c] = _sort_sign(img)
        out[d] = m
    return out
