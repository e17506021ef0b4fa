import json

import pytest

from simplicial import LabelledComplex, MonomialIdeal, ParseError, make_map, named_complex
from simplicial.errors import NotFoundError
from simplicial.formats import (
    load_manifold_database,
    parse_complex,
    parse_ideal,
    parse_labelled,
    parse_manifold_db,
    parse_map,
    serialize_complex,
    serialize_ideal,
    serialize_labelled,
    serialize_manifold_db,
    serialize_map,
    vertex_labels,
)
from simplicial.homology import homology_groups

BOWTIE_DOC = '{"vertices": ["v", "w", "x", "y", "z"], "facets": [["v", "w", "x"], ["x", "y", "z"]]}\n'


def test_complex_round_trip(bowtie):
    assert parse_complex(BOWTIE_DOC) == bowtie
    assert serialize_complex(bowtie) == BOWTIE_DOC
    assert serialize_complex(parse_complex(serialize_complex(bowtie))) == BOWTIE_DOC


def test_complex_absorbs_and_kinds():
    cx = parse_complex('{"vertices": ["a", "b"], "facets": [["a", "b"], ["a"]]}')
    assert serialize_complex(cx) == '{"vertices": ["a", "b"], "facets": [["a", "b"]]}\n'
    void = parse_complex('{"vertices": ["a"], "facets": []}')
    assert json.loads(serialize_complex(void))["kind"] == "void"
    empty = parse_complex('{"vertices": ["a"], "facets": [[]], "kind": "empty"}')
    assert empty.kind == "empty"
    assert parse_complex(serialize_complex(empty)) == empty


@pytest.mark.parametrize(
    "text,match",
    [
        ('{"vertices": ["a", "a"], "facets": []}', "duplicate entry 'a'"),
        ('{"vertices": ["a"], "facets": [["b"]]}', "unknown vertex"),
        ('{"vertices": ["a"], "facets": [["a"]], "kind": "void"}', "kind"),
        ('{"vertices": "a", "facets": []}', "vertices"),
        ("[1, 2]", "JSON object"),
    ],
)
def test_complex_errors(text, match):
    with pytest.raises(ParseError, match=match):
        parse_complex(text)


def test_json_syntax_error_has_line():
    with pytest.raises(ParseError, match="line 2"):
        parse_complex('{"vertices": [],\n "facets": [}')


def test_ideal_round_trip(j_prime):
    text = serialize_ideal(j_prime)
    assert parse_ideal(text) == j_prime
    assert [str(g) for g in parse_ideal(text)] == [str(g) for g in j_prime]
    strings = parse_ideal('{"variables": ["a", "b"], "generators": ["a*b", "b^2"]}')
    assert strings == MonomialIdeal.from_strings("ab", ["a*b", "b^2"])
    with pytest.raises(ParseError, match="entry 0"):
        parse_ideal('{"variables": ["a"], "generators": ["q"]}')


def test_labelled_round_trip(gamma, j_ideal):
    lc = LabelledComplex(gamma, j_ideal.generators)
    assert parse_labelled(serialize_labelled(lc)) == lc
    with pytest.raises(ParseError, match="labels"):
        parse_labelled(
            '{"vertices": ["a"], "facets": [["a"]], "variables": ["t"], "labels": [[1], [1]]}'
        )


def test_map_round_trip(bowtie, tmp_path):
    phi = make_map(bowtie, bowtie, list("vwxxx"))
    assert parse_map(serialize_map(phi)) == phi
    (tmp_path / "b.json").write_text(BOWTIE_DOC)
    doc = {"source": "b.json", "target": "b.json", "images": phi.as_dict()}
    assert parse_map(json.dumps(doc), tmp_path) == phi
    doc["images"] = {"v": "v"}
    with pytest.raises(ParseError, match="images"):
        parse_map(json.dumps(doc), tmp_path)
    doc["source"] = "missing.json"
    with pytest.raises(ParseError, match="cannot read"):
        parse_map(json.dumps(doc), tmp_path)


def test_vertex_labels():
    assert vertex_labels(3) == ["a", "b", "c"]
    assert vertex_labels(27)[:2] == ["v1", "v2"]


def test_sample_database():
    db = load_manifold_database()
    torus = db.get_manifold(2, 7, 6)
    assert torus == named_complex("minimalTorus")
    assert [str(g) for g in homology_groups(torus).values()] == ["0", "0", "Z^2", "Z"]
    assert str(homology_groups(db[(2, 6, 101)])[1]) == "Z/2"
    with pytest.raises(NotFoundError):
        db.get_manifold(3, 9, 1)
    with pytest.raises(KeyError):
        db[(9, 9, 9)]


def test_database_round_trip():
    db = load_manifold_database()
    again = parse_manifold_db(serialize_manifold_db(db))
    assert list(again) == list(db)
    assert all(again[k] == db[k] for k in db)
    assert len(parse_manifold_db("# only a comment\n\n")) == 0


@pytest.mark.parametrize(
    "text,line,match",
    [
        ("2 3 1 : 1 2 3\n2 3 1 : 1 2 3", 2, "duplicate key"),
        ("# c\n2 3 1 : 1 2 2", 2, "repeats a vertex"),
        ("2 3 1 : 1 2", 1, "expected 3"),
        ("\n\n2 3 1 : 1 2 4", 3, "outside 1..3"),
        ("2 3 : 1 2 3", 1, "expected 'd n index"),
        ("2 3 1 : 1 2 3,", 1, "malformed facet"),
    ],
)
def test_database_errors(text, line, match):
    with pytest.raises(ParseError, match=match) as info:
        parse_manifold_db(text)
    assert str(info.value).startswith(f"line {line}:")
