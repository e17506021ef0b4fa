"""Text formats: JSON documents for complexes, ideals, labellings and maps,
and a line format for databases of small manifolds.

Canonical serializations are single-line JSON with a fixed key order and a
trailing newline, so equal objects always serialize to equal bytes.
"""

from __future__ import annotations

import json
import re
from collections.abc import Mapping
from importlib import resources
from pathlib import Path
from typing import Iterator

from .complex import SimplicialComplex
from .errors import NotFoundError, ParseError, SimplicialError
from .maps import SimplicialMap, make_map
from .monomials import Monomial, MonomialIdeal
from .resolutions import LabelledComplex

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    return doc


def _dump(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=True) + "\n"


def _string_list(doc: dict, key: str) -> list[str]:
    value = doc.get(key)
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"field {key!r} must be a list of strings")
    seen = set()
    for v in value:
        if v in seen:
            raise ParseError(f"field {key!r}: duplicate entry {v!r}")
        seen.add(v)
    return value


# -- complexes ------------------------------------------------------------------


def complex_from_doc(doc: dict) -> SimplicialComplex:
    vertices = _string_list(doc, "vertices")
    facets = doc.get("facets")
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, str) for v in f) for f in facets
    ):
        raise ParseError("field 'facets' must be a list of lists of strings")
    kind = doc.get("kind")
    try:
        cx = SimplicialComplex.from_faces(facets, vertices)
    except SimplicialError as e:
        raise ParseError(f"field 'facets': {e}") from None
    if kind is not None:
        if kind not in ("void", "empty"):
            raise ParseError(f"field 'kind' must be 'void' or 'empty', got {kind!r}")
        if cx.kind != kind:
            raise ParseError(f"field 'kind' says {kind!r} but the facets describe a {cx.kind} complex")
    return cx


def complex_to_doc(cx: SimplicialComplex) -> dict:
    doc = {"vertices": list(cx.vertices), "facets": [list(cx.labels_of(f)) for f in cx.facets]}
    if cx.kind != "complex":
        doc["kind"] = cx.kind
    return doc


def parse_complex(text: str) -> SimplicialComplex:
    return complex_from_doc(_load_json(text))


def serialize_complex(cx: SimplicialComplex) -> str:
    return _dump(complex_to_doc(cx))


# -- ideals ---------------------------------------------------------------------


def _monomials(doc: dict, key: str, variables: list[str]) -> list[Monomial]:
    value = doc.get(key)
    if not isinstance(value, list):
        raise ParseError(f"field {key!r} must be a list")
    out = []
    for k, g in enumerate(value):
        try:
            if isinstance(g, str):
                out.append(Monomial.parse(g, variables))
            elif isinstance(g, list) and all(isinstance(e, int) for e in g):
                out.append(Monomial(tuple(variables), tuple(g)))
            else:
                raise SimplicialError("expected an exponent list or a monomial string")
        except SimplicialError as e:
            raise ParseError(f"field {key!r}, entry {k}: {e}") from None
    return out


def ideal_from_doc(doc: dict) -> MonomialIdeal:
    variables = _string_list(doc, "variables")
    return MonomialIdeal(variables, _monomials(doc, "generators", variables))


def ideal_to_doc(ideal: MonomialIdeal) -> dict:
    return {
        "variables": list(ideal.variables),
        "generators": [list(g.exponents) for g in ideal.generators],
    }


def parse_ideal(text: str) -> MonomialIdeal:
    return ideal_from_doc(_load_json(text))


def serialize_ideal(ideal: MonomialIdeal) -> str:
    return _dump(ideal_to_doc(ideal))


# -- labelled complexes -------------------------------------------------------


def labelled_from_doc(doc: dict) -> LabelledComplex:
    cx = complex_from_doc(doc)
    variables = _string_list(doc, "variables")
    labels = _monomials(doc, "labels", variables)
    try:
        return LabelledComplex(cx, tuple(labels))
    except SimplicialError as e:
        raise ParseError(f"field 'labels': {e}") from None


def labelled_to_doc(lc: LabelledComplex) -> dict:
    doc = complex_to_doc(lc.complex)
    doc["variables"] = list(lc.variables)
    doc["labels"] = [list(m.exponents) for m in lc.labels]
    return doc


def parse_labelled(text: str) -> LabelledComplex:
    return labelled_from_doc(_load_json(text))


def serialize_labelled(lc: LabelledComplex) -> str:
    return _dump(labelled_to_doc(lc))


# -- maps -------------------------------------------------------------------------


def _complex_ref(value, key: str, base: Path | None) -> SimplicialComplex:
    if isinstance(value, dict):
        return complex_from_doc(value)
    if isinstance(value, str):
        path = Path(value)
        if base is not None and not path.is_absolute():
            path = base / path
        try:
            return parse_complex(path.read_text())
        except OSError as e:
            raise ParseError(f"field {key!r}: cannot read {value!r}: {e.strerror}") from None
    raise ParseError(f"field {key!r} must be a complex document or a file path")


def map_from_doc(doc: dict, base: Path | None = None) -> SimplicialMap:
    source = _complex_ref(doc.get("source"), "source", base)
    target = _complex_ref(doc.get("target"), "target", base)
    images = doc.get("images")
    if not isinstance(images, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in images.items()
    ):
        raise ParseError("field 'images' must map source labels to target labels")
    try:
        return make_map(target, source, images)
    except SimplicialError as e:
        raise ParseError(f"field 'images': {e}") from None


def map_to_doc(phi: SimplicialMap) -> dict:
    return {
        "source": complex_to_doc(phi.source),
        "target": complex_to_doc(phi.target),
        "images": phi.as_dict(),
    }


def parse_map(text: str, base: Path | None = None) -> SimplicialMap:
    return map_from_doc(_load_json(text), base)


def serialize_map(phi: SimplicialMap) -> str:
    return _dump(map_to_doc(phi))


# -- manifold databases ------------------------------------------------------

_RECORD = re.compile(r"^\s*(\d+)\s+(\d+)\s+(\d+)\s*:(.*)$")


def vertex_labels(n: int) -> list[str]:
    """a, b, c, ... for up to 26 vertices, else v1 .. vn."""
    if n <= len(_LETTERS):
        return list(_LETTERS[:n])
    return [f"v{k}" for k in range(1, n + 1)]


class ManifoldDatabase(Mapping):
    """Complexes keyed by (dimension, vertex count, index)."""

    def __init__(self, records: dict[tuple[int, int, int], SimplicialComplex] | None = None):
        self._records = dict(records or {})

    def __getitem__(self, key):
        try:
            return self._records[tuple(key)]
        except KeyError:
            raise NotFoundError(f"no manifold with key {tuple(key)}") from None

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(sorted(self._records))

    def __len__(self):
        return len(self._records)

    def get_manifold(self, d: int, n: int, index: int) -> SimplicialComplex:
        return self[(d, n, index)]


def parse_manifold_db(text: str) -> ManifoldDatabase:
    """Read ``d n index : v v v, v v v, ...`` records (vertices numbered 1..n).

    ``#`` starts a comment; blank lines are skipped.
    """
    records = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _RECORD.match(line)
        if m is None:
            raise ParseError("expected 'd n index : facets'", lineno)
        d, n, index = (int(g) for g in m.group(1, 2, 3))
        key = (d, n, index)
        if key in records:
            raise ParseError(f"duplicate key {key}", lineno)
        facets = []
        for chunk in m.group(4).split(","):
            chunk = chunk.strip()
            if not re.fullmatch(r"\d+(\s+\d+)*", chunk):
                raise ParseError(f"malformed facet {chunk!r}", lineno)
            facet = [int(t) for t in chunk.split()]
            if len(facet) != d + 1:
                raise ParseError(f"facet {chunk!r} has {len(facet)} vertices, expected {d + 1}", lineno)
            if len(set(facet)) != len(facet):
                raise ParseError(f"facet {chunk!r} repeats a vertex", lineno)
            if any(not 1 <= v <= n for v in facet):
                raise ParseError(f"facet {chunk!r} has a vertex outside 1..{n}", lineno)
            facets.append(tuple(sorted(v - 1 for v in facet)))
        records[key] = SimplicialComplex(vertex_labels(n), facets)
    return ManifoldDatabase(records)


def serialize_manifold_db(db: ManifoldDatabase) -> str:
    lines = []
    for d, n, index in db:
        cx = db[(d, n, index)]
        body = ", ".join(" ".join(str(v + 1) for v in f) for f in cx.facets)
        lines.append(f"{d} {n} {index} : {body}")
    return "\n".join(lines) + ("\n" if lines else "")


def load_manifold_database(path=None) -> ManifoldDatabase:
    """Load a database file; without ``path`` the bundled sample is used."""
    if path is None:
        text = resources.files("simplicial").joinpath("data/manifolds_sample.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_manifold_db(text)
