"""Abstract simplicial complexes on an ordered vertex set.

A complex is stored by its facets.  Faces are tuples of vertex indices in
increasing order; the vertex order fixed at construction determines every
orientation sign computed downstream.

Two degenerate complexes are kept apart: the *void* complex has no faces at
all, the *empty* complex has only the empty face.
"""

from __future__ import annotations

import math
import re
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import NotAFaceError, SimplicialError, VoidComplexError
from .monomials import (
    Monomial,
    MonomialIdeal,
    h_vector_from_f_vector,
    minimal_transversals,
)

Face = tuple[int, ...]

VOID_DIM = -math.inf


def face_key(face: Face):
    return (len(face), face)


def _natural_key(label: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", label)]


def _maximal(faces: Iterable[frozenset[int]]) -> list[Face]:
    faces = set(faces)
    by_size = sorted(faces, key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for f in by_size:
        if not any(f < g for g in kept):
            kept.append(f)
    return sorted((tuple(sorted(f)) for f in kept), key=face_key)


class SimplicialComplex:
    """A simplicial complex with a declared, ordered vertex set.

    ``facets`` are index tuples; they are maximalized on construction, so any
    generating family of faces may be passed.  An empty ``facets`` gives the
    void complex, ``[()]`` the empty complex.
    """

    def __init__(self, vertices: Sequence[str], facets: Iterable[Iterable[int]] = ()):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            dup = next(v for v in self.vertices if self.vertices.count(v) > 1)
            raise SimplicialError(f"duplicate vertex {dup!r}")
        n = len(self.vertices)
        sets = []
        for f in facets:
            f = tuple(f)
            s = frozenset(f)
            if len(s) != len(f):
                raise SimplicialError(f"repeated vertex in face {f}")
            if any(not 0 <= i < n for i in s):
                raise SimplicialError(f"vertex index out of range in face {f}")
            sets.append(s)
        self.facets: tuple[Face, ...] = tuple(_maximal(sets))

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_faces(
        cls, faces: Iterable[Sequence[str]], vertices: Sequence[str] | None = None
    ) -> SimplicialComplex:
        """Smallest complex containing the given faces (given by vertex labels).

        Without ``vertices`` the vertex set is the labels used, naturally sorted.
        """
        faces = [tuple(f) for f in faces]
        if vertices is None:
            vertices = sorted({v for f in faces for v in f}, key=_natural_key)
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        idx_faces = []
        for f in faces:
            if len(set(f)) != len(f):
                raise SimplicialError(f"duplicated vertex in face {list(f)}")
            try:
                idx_faces.append(tuple(index[v] for v in f))
            except KeyError as e:
                raise SimplicialError(f"unknown vertex label {e.args[0]!r}") from None
        return cls(vertices, idx_faces)

    @classmethod
    def void(cls, vertices: Sequence[str]) -> SimplicialComplex:
        return cls(vertices, [])

    @classmethod
    def empty(cls, vertices: Sequence[str]) -> SimplicialComplex:
        return cls(vertices, [()])

    @classmethod
    def from_nonfaces(cls, ideal: MonomialIdeal) -> SimplicialComplex:
        """The complex whose Stanley-Reisner ideal is the squarefree ``ideal``."""
        if not ideal.is_squarefree():
            raise SimplicialError(f"ideal is not squarefree: {ideal}")
        n = len(ideal.variables)
        everything = frozenset(range(n))
        covers = minimal_transversals(ideal.supports())
        return cls(ideal.variables, [tuple(sorted(everything - c)) for c in covers])

    # -- basic structure --------------------------------------------------

    @property
    def kind(self) -> str:
        if not self.facets:
            return "void"
        if self.facets == ((),):
            return "empty"
        return "complex"

    def is_void(self) -> bool:
        return not self.facets

    def _require_nonvoid(self, what: str):
        if not self.facets:
            raise VoidComplexError(f"{what} is undefined for the void complex")

    @property
    def dim(self):
        """Largest face dimension; ``-inf`` for the void complex."""
        if not self.facets:
            return VOID_DIM
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def _face_masks(self) -> frozenset[int]:
        masks = set()
        for f in self.facets:
            fm = 0
            for v in f:
                fm |= 1 << v
            sub = fm
            while True:
                masks.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        return frozenset(masks)

    def index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise SimplicialError(f"unknown vertex label {label!r}") from None

    def face_of(self, labels: Iterable[str]) -> Face:
        """Index face for a collection of vertex labels (not checked for membership)."""
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise SimplicialError(f"duplicated vertex in face {labels}")
        return tuple(sorted(self.index(v) for v in labels))

    def labels_of(self, face: Face) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in face)

    def contains(self, face: Iterable[int]) -> bool:
        m = 0
        for v in face:
            m |= 1 << v
        return m in self._face_masks

    __contains__ = contains

    @cached_property
    def _faces(self) -> dict[int, list[Face]]:
        out: dict[int, list[Face]] = {}
        for m in self._face_masks:
            f = tuple(i for i in range(len(self.vertices)) if m >> i & 1)
            out.setdefault(len(f) - 1, []).append(f)
        return {d: sorted(out[d]) for d in sorted(out)}

    def faces(self) -> dict[int, list[Face]]:
        """Faces by dimension, each list lexicographic in vertex indices."""
        return {d: list(fs) for d, fs in self._faces.items()}

    def faces_of_dim(self, d: int) -> list[Face]:
        return list(self._faces.get(d, []))

    def all_faces(self) -> list[Face]:
        return [f for d in self._faces for f in self._faces[d]]

    def f_vector(self) -> list[int]:
        """Entry j counts faces with j vertices, j = 0 .. dim + 1."""
        self._require_nonvoid("the f-vector")
        return [len(self._faces[d]) for d in range(-1, self.dim + 1)]

    def h_vector(self) -> list[int]:
        self._require_nonvoid("the h-vector")
        return h_vector_from_f_vector(self.f_vector())

    def euler_characteristic(self, reduced: bool = False) -> int:
        self._require_nonvoid("the Euler characteristic")
        chi = sum((-1) ** d * len(fs) for d, fs in self._faces.items() if d >= 0)
        return chi - 1 if reduced else chi

    # -- derived complexes ------------------------------------------------

    def skeleton(self, k: int) -> SimplicialComplex:
        if k < -1:
            raise SimplicialError("skeleton dimension must be at least -1")
        if self.is_void() or k >= self.dim:
            return self
        return SimplicialComplex(
            self.vertices,
            (c for f in self.facets for c in combinations(f, min(k + 1, len(f)))),
        )

    def link(self, face: Iterable[int]) -> SimplicialComplex:
        face = tuple(sorted(face))
        if not self.contains(face):
            raise NotAFaceError(f"{list(self.labels_of(face))} is not a face")
        fs = set(face)
        return SimplicialComplex(
            self.vertices,
            (tuple(v for v in f if v not in fs) for f in self.facets if fs <= set(f)),
        )

    def induced_subcomplex(self, labels: Iterable[str]) -> SimplicialComplex:
        """Faces inside the given vertex subset, on that subset (in global order)."""
        keep = sorted(self.index(v) for v in set(labels))
        if self.is_void():
            return SimplicialComplex.void(self.labels_of(keep))
        renumber = {v: i for i, v in enumerate(keep)}
        return SimplicialComplex(
            self.labels_of(keep),
            (tuple(renumber[v] for v in f if v in renumber) for f in self.facets),
        )

    def minimal_nonfaces(self) -> list[Face]:
        """Minimal vertex subsets (of the declared vertex set) that are not faces."""
        if self.is_void():
            return [()]
        n = len(self.vertices)
        found = set()
        for m in self._face_masks:
            for v in range(n):
                bit = 1 << v
                if m & bit:
                    continue
                cand = m | bit
                if cand in self._face_masks or cand in found:
                    continue
                if all(cand & ~(1 << u) in self._face_masks for u in range(n) if cand >> u & 1):
                    found.add(cand)
        return sorted(
            (tuple(i for i in range(n) if c >> i & 1) for c in found), key=face_key
        )

    def alexander_dual(self) -> SimplicialComplex:
        """Complements of nonfaces, relative to the full declared vertex set."""
        if self.is_void() and not self.vertices:
            raise VoidComplexError("the void complex on no vertices has no dual")
        everything = set(range(len(self.vertices)))
        return SimplicialComplex(
            self.vertices,
            (tuple(sorted(everything - set(n))) for n in self.minimal_nonfaces()),
        )

    def stanley_reisner_ideal(self) -> MonomialIdeal:
        if self.is_void():
            raise VoidComplexError("the void complex has the unit Stanley-Reisner ideal")
        gens = []
        for nf in self.minimal_nonfaces():
            exps = [0] * len(self.vertices)
            for i in nf:
                exps[i] = 1
            gens.append(Monomial(self.vertices, tuple(exps)))
        return MonomialIdeal(self.vertices, gens).sorted()

    # -- validation & comparison -----------------------------------------

    def check(self) -> tuple[bool, list[str]]:
        """Re-verify the structural invariants; returns (ok, diagnostics)."""
        return is_well_defined_complex(self.vertices, self.facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    def __hash__(self):
        return hash((self.vertices, self.facets))

    def format_face(self, face: Face, sep: str = "") -> str:
        return sep.join(self.labels_of(face)) if face else "{}"

    def __repr__(self):
        if self.is_void():
            return "SimplicialComplex(void)"
        sep = "" if all(len(v) == 1 for v in self.vertices) else "*"
        body = " ".join(self.format_face(f, sep) for f in self.facets)
        return f"SimplicialComplex | {body} |"


def is_well_defined_complex(vertices: Sequence[str], facets: Sequence[Face]) -> tuple[bool, list[str]]:
    """Check raw (vertices, facets) data without maximalizing it first."""
    problems = []
    if len(set(vertices)) != len(vertices):
        problems.append("vertex labels not distinct")
    n = len(vertices)
    for f in facets:
        if any(not 0 <= i < n for i in f):
            problems.append(f"facet {tuple(f)} has an index out of range")
        if list(f) != sorted(set(f)):
            problems.append(f"facet {tuple(f)} is not strictly increasing")
    sets = [frozenset(f) for f in facets]
    if any(a <= b for i, a in enumerate(sets) for j, b in enumerate(sets) if i != j):
        problems.append("facets not an antichain")
    if () in [tuple(f) for f in facets] and len(facets) > 1:
        problems.append("the empty face is listed beside other facets")
    return not problems, problems


def simplex(n: int, vertices: Sequence[str]) -> SimplicialComplex:
    """Full n-simplex on the first n + 1 vertices."""
    if n < -1:
        raise SimplicialError("simplex dimension must be at least -1")
    if len(vertices) < n + 1:
        raise SimplicialError(f"a {n}-simplex needs {n + 1} vertices, got {len(vertices)}")
    return SimplicialComplex(vertices, [tuple(range(n + 1))])
