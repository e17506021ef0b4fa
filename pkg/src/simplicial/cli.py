"""Command-line interface.

Every subcommand computes one JSON-compatible result.  ``--format json``
prints it inside ``{"schema": "1", "command": ..., "result": ...}``; the
default text format renders the same value.  Inputs may be bare documents
or such JSON envelopes, so JSON output can be piped into the next command.

Exit status: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .complex import SimplicialComplex
from .errors import SimplicialError
from .homology import field_dimension, reduced_chain_complex, reisner_witness
from .monomials import dual_ideal, hilbert_series_reduced, irreducible_decomposition
from .named import NAMES, named_complex
from .resolutions import (
    LabelledComplex,
    buchberger_complex,
    format_betti,
    is_resolution,
    lyubeznik_complex,
    minimal_betti,
    scarf_complex,
    taylor_complex,
)

SCHEMA = "1"


class UsageError(Exception):
    pass


# -- reading inputs ----------------------------------------------------------------


def _read_doc(args) -> dict:
    try:
        text = Path(args.input).read_text() if args.input not in (None, "-") else sys.stdin.read()
    except OSError as e:
        raise SimplicialError(f"cannot read {args.input}: {e.strerror}") from None
    doc = formats._load_json(text)
    if "schema" in doc and "result" in doc:
        doc = doc["result"]
        if isinstance(doc, dict) and "labelled" in doc:
            doc = doc["labelled"]
        if not isinstance(doc, dict):
            raise SimplicialError("piped result is not a document")
    return doc


def _complex(args) -> SimplicialComplex:
    doc = _read_doc(args)
    if "generators" in doc:
        return SimplicialComplex.from_nonfaces(formats.ideal_from_doc(doc))
    return formats.complex_from_doc(doc)


def _ideal(args):
    doc = _read_doc(args)
    if "generators" not in doc:
        if "facets" in doc:
            return formats.complex_from_doc(doc).stanley_reisner_ideal()
        raise SimplicialError("expected an ideal document with 'variables' and 'generators'")
    return formats.ideal_from_doc(doc)


def _face_arg(cx: SimplicialComplex, text: str):
    labels = [t for t in (p.strip() for p in text.split(",")) if t]
    return cx.face_of(labels)


def _char(p: int) -> int:
    if p < 0:
        raise UsageError(f"--char must be 0 or a prime, got {p}")
    return p


def _range(text: str | None, default: range) -> range:
    if text is None:
        return default
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise UsageError(f"--range expects A..B, got {text!r}") from None


# -- result builders ---------------------------------------------------------------


def _cx(cx: SimplicialComplex) -> dict:
    return formats.complex_to_doc(cx)


def _face_labels(cx, face) -> list[str]:
    return list(cx.labels_of(face))


def cmd_faces(args):
    cx = _complex(args)
    return {str(d): [_face_labels(cx, f) for f in fs] for d, fs in cx.faces().items()}


def cmd_fvector(args):
    return _complex(args).f_vector()


def cmd_hvector(args):
    return _complex(args).h_vector()


def cmd_euler(args):
    return _complex(args).euler_characteristic(reduced=args.reduced)


def cmd_dim(args):
    d = _complex(args).dim
    return d if isinstance(d, int) else None


def cmd_skeleton(args):
    return _cx(_complex(args).skeleton(args.k))


def cmd_link(args):
    cx = _complex(args)
    return _cx(cx.link(_face_arg(cx, args.face)))


def cmd_dual(args):
    return _cx(_complex(args).alexander_dual())


def cmd_sr_ideal(args):
    return formats.ideal_to_doc(_complex(args).stanley_reisner_ideal())


def cmd_from_ideal(args):
    return _cx(SimplicialComplex.from_nonfaces(_ideal(args)))


def cmd_dual_ideal(args):
    return formats.ideal_to_doc(dual_ideal(_ideal(args)))


def cmd_irreducible(args):
    return [formats.ideal_to_doc(c) for c in irreducible_decomposition(_ideal(args))]


def cmd_hilbert(args):
    num, exp = hilbert_series_reduced(_complex(args))
    return {"numerator": num, "denominatorExponent": exp}


def _groups(args, cohomology: bool):
    cx = _complex(args)
    c = reduced_chain_complex(cx)
    degrees = _range(args.range, c.degrees)
    group = c.cohomology if cohomology else c.homology
    out = {}
    for i in degrees:
        g = group(i)
        if args.char is None:
            out[str(i)] = g.to_json()
        else:
            # cohomology over a field has the same dimension as homology
            h = c.homology
            out[str(i)] = field_dimension(h(i), h(i - 1), _char(args.char))
    return out


def cmd_homology(args):
    return _groups(args, cohomology=False)


def cmd_cohomology(args):
    return _groups(args, cohomology=True)


def cmd_is_cm(args):
    cx = _complex(args)
    w = reisner_witness(cx, _char(args.char))
    if w is None:
        return {"cohenMacaulay": True}
    face, j = w
    return {"cohenMacaulay": False, "witness": {"face": _face_labels(cx, face), "degree": j}}


def cmd_chain(args):
    cx = _complex(args)
    c = reduced_chain_complex(cx)
    return {
        "degrees": list(c.degrees),
        "ranks": [c.rank(i) for i in c.degrees],
        "boundaries": {str(i): c.boundary(i) for i in c.degrees if i > c.degrees.start},
    }


_METHODS = {
    "taylor": taylor_complex,
    "scarf": scarf_complex,
    "buchberger": buchberger_complex,
}


def _order(text: str | None):
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"--order expects comma-separated integers, got {text!r}") from None


def _supported(args) -> LabelledComplex:
    ideal = _ideal(args)
    if args.method == "lyubeznik":
        return lyubeznik_complex(ideal, _order(args.order))
    if args.order is not None:
        raise UsageError("--order only applies to --method lyubeznik")
    return _METHODS[args.method](ideal)


def cmd_resolution(args):
    lc = _supported(args)
    return {
        "method": args.method,
        "labelled": formats.labelled_to_doc(lc),
        "ranks": lc.chain_complex().ranks(),
    }


def _labelled_or_method(args) -> LabelledComplex:
    if args.method is not None:
        return _supported(args)
    doc = _read_doc(args)
    if "labels" not in doc:
        raise SimplicialError("expected a labelled complex document (or pass --method)")
    return formats.labelled_from_doc(doc)


def cmd_check_resolution(args):
    lc = _labelled_or_method(args)
    ok, failures = is_resolution(lc, _char(args.char))
    return {
        "resolution": ok,
        "failures": [
            {"multidegree": list(f.multidegree.exponents), "degree": f.homological_degree, "dimension": f.dimension}
            for f in failures
        ],
    }


def cmd_betti(args):
    if args.minimal:
        table = minimal_betti(_ideal(args), _char(args.char))
    else:
        table = _labelled_or_method(args).chain_complex().betti_table()
    out = table.to_json()
    rows, grid = table.rows()
    out["rows"] = rows
    out["grid"] = grid
    return out


def cmd_map_check(args):
    doc = _read_doc(args)
    base = Path(args.input).parent if args.input not in (None, "-") else None
    phi = formats.map_from_doc(doc, base)
    bad = phi.offending_facet()
    out = {"wellDefined": bad is None}
    if bad is not None:
        out["facet"] = _face_labels(phi.source, bad)
        out["image"] = _face_labels(phi.target, phi.image(bad))
    return out


def cmd_db(args):
    db = formats.load_manifold_database(args.input if args.input not in (None, "-") else None)
    return _cx(db.get_manifold(args.d, args.n, args.index))


def cmd_named(args):
    vertices = args.vertices.split(",") if args.vertices else None
    return _cx(named_complex(args.name, vertices))


# -- text rendering ----------------------------------------------------------------


def _word(labels) -> str:
    if not labels:
        return "{}"
    sep = "" if all(len(v) == 1 for v in labels) else "*"
    return sep.join(labels)


def _render_complex(doc) -> str:
    if doc.get("kind") == "void":
        return "void"
    return " ".join(_word(f) for f in doc["facets"])


def _render_ideal(doc) -> str:
    if not doc["generators"]:
        return "0"
    from .monomials import Monomial

    return ", ".join(str(Monomial(tuple(doc["variables"]), tuple(g))) for g in doc["generators"])


def _render_group(g) -> str:
    parts = []
    if g["rank"] == 1:
        parts.append("Z")
    elif g["rank"] > 1:
        parts.append(f"Z^{g['rank']}")
    parts += [f"Z/{d}" for d in g["torsion"]]
    return " + ".join(parts) if parts else "0"


def _render_poly(coeffs) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
        mag = abs(c)
        body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _vec(xs) -> str:
    return " ".join(str(x) for x in xs)


def _render_matrix(m) -> list[str]:
    if not m or not m[0]:
        return ["  (empty)"]
    w = max(len(str(x)) for row in m for x in row)
    return ["  | " + " ".join(f"{x:>{w}}" for x in row) + " |" for row in m]


def _render_betti(r) -> str:
    return format_betti(r["totals"], r["rows"], r["grid"])


def _render(command: str, r) -> str:
    if command in ("skeleton", "link", "dual", "from-ideal", "db", "named"):
        return _render_complex(r)
    if command in ("sr-ideal", "dual-ideal"):
        return _render_ideal(r)
    if command == "irreducible":
        return "\n".join(f"({_render_ideal(c)})" for c in r)
    if command == "faces":
        return "\n".join(f"{d}: {' '.join(_word(f) for f in fs)}" for d, fs in r.items())
    if command in ("fvector", "hvector"):
        return _vec(r)
    if command == "dim":
        return "-inf" if r is None else str(r)
    if command == "euler":
        return str(r)
    if command == "hilbert":
        e = r["denominatorExponent"]
        den = "1" if e == 0 else ("(1 - T)" if e == 1 else f"(1 - T)^{e}")
        return f"({_render_poly(r['numerator'])}) / {den}"
    if command in ("homology", "cohomology"):
        return "\n".join(
            f"{i}: {_render_group(g) if isinstance(g, dict) else g}" for i, g in r.items()
        )
    if command == "is-cm":
        if r["cohenMacaulay"]:
            return "true"
        w = r["witness"]
        return f"false (link of {_word(w['face'])} has nonzero homology in degree {w['degree']})"
    if command == "chain":
        lines = ["ranks: " + _vec(r["ranks"]) + f" (degrees {r['degrees'][0]}..{r['degrees'][-1]})"]
        for i, m in r["boundaries"].items():
            lines.append(f"d{i}:")
            lines += _render_matrix(m)
        return "\n".join(lines)
    if command == "resolution":
        return "facets: " + _render_complex(r["labelled"]) + "\nranks: " + _vec(r["ranks"])
    if command == "check-resolution":
        lines = ["true" if r["resolution"] else "false"]
        for f in r["failures"]:
            md = ", ".join(str(x) for x in f["multidegree"])
            lines.append(f"degree {f['degree']} at {{{md}}}: dimension {f['dimension']}")
        return "\n".join(lines)
    if command == "betti":
        return _render_betti(r)
    if command == "map-check":
        if r["wellDefined"]:
            return "true"
        return f"false (facet {_word(r['facet'])} maps to nonface {_word(r['image'])})"
    raise AssertionError(command)


def render_text(command: str, result) -> str:
    return _render(command, result) + "\n"


def render_json(command: str, result) -> str:
    return json.dumps({"schema": SCHEMA, "command": command, "result": result}) + "\n"


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="input document (default: stdin)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="simplicial",
        description="Simplicial complexes, Stanley-Reisner ideals, homology and monomial resolutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("faces", cmd_faces, "faces by dimension")
    add("fvector", cmd_fvector, "f-vector")
    add("hvector", cmd_hvector, "h-vector")
    add("euler", cmd_euler, "Euler characteristic").add_argument("--reduced", action="store_true")
    add("dim", cmd_dim, "dimension")
    add("skeleton", cmd_skeleton, "k-skeleton").add_argument("k", type=int)
    add("link", cmd_link, "link of a face (comma-separated labels)").add_argument("face")
    add("dual", cmd_dual, "Alexander dual")
    add("sr-ideal", cmd_sr_ideal, "Stanley-Reisner ideal")
    add("from-ideal", cmd_from_ideal, "complex of a squarefree ideal")
    add("dual-ideal", cmd_dual_ideal, "Alexander dual of a squarefree ideal")
    add("irreducible", cmd_irreducible, "irreducible decomposition")
    add("hilbert", cmd_hilbert, "reduced Hilbert series")
    for name, func in (("homology", cmd_homology), ("cohomology", cmd_cohomology)):
        p = add(name, func, f"reduced {name}")
        p.add_argument("--char", type=int, default=None, help="field characteristic")
        p.add_argument("--range", default=None, help="degrees A..B")
    add("is-cm", cmd_is_cm, "Reisner's Cohen-Macaulay test").add_argument("--char", type=int, default=0)
    add("chain", cmd_chain, "reduced chain complex")

    def method_args(p, required):
        p.add_argument(
            "--method",
            choices=("taylor", "scarf", "lyubeznik", "buchberger"),
            required=required,
            default=None,
        )
        p.add_argument("--order", default=None, help="Lyubeznik order, e.g. 2,1,0,3,4")

    method_args(add("resolution", cmd_resolution, "supporting complex of an ideal"), True)
    p = add("check-resolution", cmd_check_resolution, "verify a labelled complex resolves")
    method_args(p, False)
    p.add_argument("--char", type=int, default=0)
    p = add("betti", cmd_betti, "Betti table")
    method_args(p, False)
    p.add_argument("--minimal", action="store_true", help="minimal Betti numbers of the ideal")
    p.add_argument("--char", type=int, default=0)
    add("map-check", cmd_map_check, "check a simplicial map document")

    db = sub.add_parser("db", help="manifold database")
    dbsub = db.add_subparsers(dest="db_command", required=True, metavar="ACTION")
    get = dbsub.add_parser("get", parents=[common], help="look up (d, n, index)")
    get.add_argument("d", type=int)
    get.add_argument("n", type=int)
    get.add_argument("index", type=int)
    get.set_defaults(func=cmd_db)

    p = add("named", cmd_named, f"named complex: {', '.join(NAMES)}")
    p.add_argument("name")
    p.add_argument("--vertices", default=None, help="comma-separated labels")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = args.func(args)
    except UsageError as e:
        print(f"simplicial: error: {e}", file=sys.stderr)
        return 2
    except SimplicialError as e:
        print(f"simplicial: {e}", file=sys.stderr)
        return 1
    render = render_json if args.format == "json" else render_text
    sys.stdout.write(render(args.command, result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
