"""Monomial labellings of simplicial complexes and the free complexes they support.

A labelled complex assigns a monomial to each vertex; a face is labelled by
the lcm of its vertex labels.  Its supported complex has one free summand per
face, twisted by that label.  Whether it resolves R/J is decided one
multidegree at a time: for each b in the lcm lattice of the labels, the
subcomplex of faces with label dividing b must be acyclic over the field.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, NamedTuple, Sequence

from .complex import Face, SimplicialComplex, simplex
from .errors import SimplicialError
from .homology import field_bettis
from .monomials import (
    MAX_GENERATORS,
    Monomial,
    MonomialIdeal,
    divides,
    lcm,
    lcm_lattice,
    strictly_divides,
)


@dataclass(frozen=True)
class LabelledComplex:
    complex: SimplicialComplex
    labels: tuple[Monomial, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(labels) != len(self.complex.vertices):
            raise SimplicialError(
                f"{len(labels)} labels for {len(self.complex.vertices)} vertices"
            )
        if labels and any(m.variables != labels[0].variables for m in labels):
            raise SimplicialError("labels live over different variable sets")
        object.__setattr__(self, "labels", labels)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.labels[0].variables if self.labels else ()

    def face_label(self, face: Face) -> Monomial:
        return lcm((self.labels[i] for i in face), self.variables)

    def chain_complex(self) -> MultigradedComplex:
        return MultigradedComplex.supported_on(self)


class MultigradedComplex:
    """Free multigraded complex supported on a labelled simplicial complex.

    Homological degree i holds one summand R(-a_F) per face F of dimension
    i - 1.  ``signs[i][r][c]`` is the sign of the pair (row face, column face)
    in the boundary from degree i to degree i - 1; the matching monomial
    coefficient is always y^(a_F - a_G), so it is not stored.
    """

    def __init__(self, summands: dict[int, list[tuple[Face, Monomial]]], signs: dict[int, list[list[int]]]):
        self.summands = summands
        self.signs = signs

    @classmethod
    def supported_on(cls, lc: LabelledComplex) -> MultigradedComplex:
        faces = lc.complex.faces()
        summands = {d + 1: [(f, lc.face_label(f)) for f in fs] for d, fs in faces.items()}
        signs = {}
        for i in summands:
            if i == 0:
                continue
            rows = [f for f, _ in summands[i - 1]]
            pos = {f: r for r, f in enumerate(rows)}
            m = [[0] * len(summands[i]) for _ in rows]
            for c, (f, _) in enumerate(summands[i]):
                for k in range(len(f)):
                    m[pos[f[:k] + f[k + 1:]]][c] = -1 if k % 2 else 1
            signs[i] = m
        return cls(summands, signs)

    @property
    def length(self) -> int:
        return max(self.summands) if self.summands else -1

    def ranks(self) -> list[int]:
        return [len(self.summands[i]) for i in range(self.length + 1)]

    def multidegrees(self, i: int) -> list[Monomial]:
        return [m for _, m in self.summands.get(i, [])]

    def entry(self, i: int, row: int, col: int):
        """(sign, monomial) of the boundary entry, or None when it is zero."""
        s = self.signs[i][row][col]
        if not s:
            return None
        return s, self.summands[i][col][1] / self.summands[i - 1][row][1]

    def boundary(self, i: int) -> list[list]:
        return [
            [self.entry(i, r, c) for c in range(len(self.summands[i]))]
            for r in range(len(self.summands[i - 1]))
        ]

    def check(self) -> bool:
        """True iff each d_i d_{i+1} cancels; all paths share one monomial, so
        summing the sign products per entry decides it."""
        for i in range(1, self.length):
            a, b = self.signs[i], self.signs[i + 1]
            for r in range(len(a)):
                for c in range(len(b[0]) if b else 0):
                    if sum(a[r][k] * b[k][c] for k in range(len(b))):
                        return False
        return True

    def betti_table(self) -> BettiTable:
        counts = Counter()
        for i, items in self.summands.items():
            for _, m in items:
                counts[i, m.exponents] += 1
        variables = next(iter(self.summands[0]))[1].variables if self.summands else ()
        return BettiTable(variables, counts)

    def to_json(self) -> dict:
        return {
            "ranks": self.ranks(),
            "multidegrees": {
                str(i): [list(m.exponents) for m in self.multidegrees(i)]
                for i in range(self.length + 1)
            },
            "boundaries": {
                str(i): [
                    {
                        "row": r,
                        "col": c,
                        "sign": self.signs[i][r][c],
                        "exponentVector": list(self.entry(i, r, c)[1].exponents),
                    }
                    for r in range(len(self.signs[i]))
                    for c in range(len(self.signs[i][r]))
                    if self.signs[i][r][c]
                ]
                for i in range(1, self.length + 1)
            },
        }


def labelled_chain_complex(cx: SimplicialComplex, labels: Sequence[Monomial]) -> MultigradedComplex:
    return LabelledComplex(cx, tuple(labels)).chain_complex()


class BettiTable:
    """Multigraded counts keyed by (homological degree, exponent vector)."""

    def __init__(self, variables: Sequence[str], counts: dict[tuple[int, tuple[int, ...]], int]):
        self.variables = tuple(variables)
        self.counts = {k: v for k, v in counts.items() if v}

    @property
    def pdim(self) -> int:
        return max((i for i, _ in self.counts), default=-1)

    def totals(self) -> list[int]:
        out = [0] * (self.pdim + 1)
        for (i, _), v in self.counts.items():
            out[i] += v
        return out

    def graded(self) -> dict[tuple[int, int], int]:
        """Counts keyed by (homological degree, total degree)."""
        out: Counter = Counter()
        for (i, b), v in self.counts.items():
            out[i, sum(b)] += v
        return dict(out)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.counts == other.counts

    def __le__(self, other: BettiTable) -> bool:
        return all(v <= other.counts.get(k, 0) for k, v in self.counts.items())

    def __repr__(self):
        return f"BettiTable(totals={self.totals()})"

    def rows(self) -> tuple[list[int], list[list[int]]]:
        """Grid with row j, column i holding the count in total degree i + j."""
        g = self.graded()
        if not g:
            return [], []
        js = sorted({d - i for i, d in g})
        lo, hi = js[0], js[-1]
        grid = [
            [g.get((i, i + j), 0) for i in range(self.pdim + 1)] for j in range(lo, hi + 1)
        ]
        return list(range(lo, hi + 1)), grid

    def text(self) -> str:
        rows, grid = self.rows()
        return format_betti(self.totals(), rows, grid)

    def to_json(self) -> dict:
        return {
            "totals": self.totals(),
            "multigraded": [
                {"degree": i, "multidegree": list(b), "count": v}
                for (i, b), v in sorted(self.counts.items())
            ],
        }


def format_betti(totals: list[int], row_ids: list[int], grid: list[list[int]]) -> str:
    """Betti grid: columns are homological degrees, row j holds degree i + j."""
    cols = len(totals)
    width = max([len(str(x)) for x in totals] + [len(str(cols - 1)), 1])
    label_w = max([len("total:")] + [len(f"{j}:") for j in row_ids])

    def fmt(vals):
        return " ".join(f"{v:>{width}}" for v in vals)

    lines = [" " * label_w + " " + fmt(range(cols)), f"{'total:':>{label_w}} " + fmt(totals)]
    for j, row in zip(row_ids, grid):
        lines.append(f"{f'{j}:':>{label_w}} " + fmt("." if v == 0 else v for v in row))
    return "\n".join(lines)


# -- restriction and acyclicity ----------------------------------------------


def restrict_to_degree(lc: LabelledComplex, b: Monomial) -> SimplicialComplex:
    """Subcomplex of faces whose label divides ``b`` (same vertex set)."""
    keep = {i for i, m in enumerate(lc.labels) if divides(m, b)}
    return SimplicialComplex(
        lc.complex.vertices, (tuple(v for v in f if v in keep) for f in lc.complex.facets)
    )


class ResolutionFailure(NamedTuple):
    multidegree: Monomial
    homological_degree: int
    dimension: int


def resolution_failures(lc: LabelledComplex, characteristic: int = 0) -> list[ResolutionFailure]:
    """Every (b, i) where the supported complex has nonzero homology H_i in degree b.

    H_i of the supported complex in multidegree b is the reduced homology
    H_{i-1} of the restriction to b.  Degree 0 (the cokernel R/J) is not a
    failure and is never reported.
    """
    if lc.complex.is_void():
        return []
    seen = set()
    failures = []
    for b in lcm_lattice(lc.labels):
        key = frozenset(i for i, m in enumerate(lc.labels) if divides(m, b))
        if key in seen:
            continue
        seen.add(key)
        for j, dim in field_bettis(restrict_to_degree(lc, b), characteristic).items():
            if dim:
                failures.append(ResolutionFailure(b, j + 1, dim))
    return sorted(failures, key=lambda f: (f.homological_degree, f.multidegree.exponents))


def is_resolution(lc: LabelledComplex, characteristic: int = 0) -> tuple[bool, list[ResolutionFailure]]:
    failures = resolution_failures(lc, characteristic)
    return not failures, failures


# -- classical supporting complexes -------------------------------------------


def _generators(ideal) -> tuple[Monomial, ...]:
    gens = tuple(ideal.generators if isinstance(ideal, MonomialIdeal) else ideal)
    if len(gens) > MAX_GENERATORS:
        raise SimplicialError(
            f"{len(gens)} generators exceeds the enumeration limit of {MAX_GENERATORS}"
        )
    return gens


def _vertex_names(r: int) -> list[str]:
    return [f"x{i}" for i in range(r)]


def _grow(r: int, is_face: Callable[[tuple[int, ...]], bool]) -> list[Face]:
    """All faces of a downward-closed family, grown by appending larger indices."""
    faces = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for f in frontier:
            start = f[-1] + 1 if f else 0
            for v in range(start, r):
                g = f + (v,)
                if is_face(g):
                    nxt.append(g)
        faces += nxt
        frontier = nxt
    return faces


def _labelled(gens, faces, vertices) -> LabelledComplex:
    names = list(vertices) if vertices is not None else _vertex_names(len(gens))
    return LabelledComplex(SimplicialComplex(names, faces), gens)


def taylor_complex(ideal, vertices=None) -> LabelledComplex:
    """Full simplex on the generators, vertex k labelled by generator k."""
    gens = _generators(ideal)
    if not gens or any(g.is_one() for g in gens):
        raise SimplicialError("the Taylor complex needs a proper nonzero ideal")
    names = list(vertices) if vertices is not None else _vertex_names(len(gens))
    return LabelledComplex(simplex(len(gens) - 1, names), gens)


def scarf_complex(ideal, vertices=None) -> LabelledComplex:
    """Subsets of generators whose lcm no other subset attains.

    A subset F is unique iff every generator dividing lcm(F) lies in F and
    dropping any member of F lowers the lcm.
    """
    gens = _generators(ideal)
    variables = gens[0].variables if gens else ()

    def unique(f):
        top = lcm((gens[i] for i in f), variables)
        members = set(f)
        if any(divides(g, top) for i, g in enumerate(gens) if i not in members):
            return False
        return all(
            lcm((gens[i] for i in f if i != j), variables) != top for j in f
        )

    return _labelled(gens, _grow(len(gens), unique), vertices)


def lyubeznik_complex(ideal, order: Sequence[int] | None = None, vertices=None) -> LabelledComplex:
    """Rooted subsets for the total order gens[order[0]] < gens[order[1]] < ...

    F (a set of positions in that order) is a face iff no m_q divides the lcm
    of the members of F placed after q.
    """
    gens = _generators(ideal)
    r = len(gens)
    order = list(range(r)) if order is None else [int(i) for i in order]
    if sorted(order) != list(range(r)):
        raise SimplicialError(f"order {order} is not a permutation of 0..{r - 1}")
    rank = {g: k for k, g in enumerate(order)}
    ordered = [gens[i] for i in order]
    variables = gens[0].variables if gens else ()

    def rooted(f):
        ks = sorted(rank[i] for i in f)
        for q in range(r):
            tail = [ordered[k] for k in ks if k > q]
            if tail and divides(ordered[q], lcm(tail, variables)):
                return False
        return True

    return _labelled(gens, _grow(r, rooted), vertices)


def buchberger_complex(ideal, vertices=None) -> LabelledComplex:
    """Subsets whose lcm is strictly divided by no generator."""
    gens = _generators(ideal)
    variables = gens[0].variables if gens else ()

    def ok(f):
        top = lcm((gens[i] for i in f), variables)
        return not any(strictly_divides(g, top) for g in gens)

    return _labelled(gens, _grow(len(gens), ok), vertices)


# -- minimal Betti numbers ------------------------------------------------


def upper_koszul_complex(ideal: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """Squarefree tau inside supp(b) with x^(b - tau) in the ideal."""
    support = b.support
    faces = []
    for k in range(len(support) + 1):
        for tau in combinations(support, k):
            exps = list(b.exponents)
            for i in tau:
                exps[i] -= 1
            if ideal.contains(Monomial(b.variables, tuple(exps))):
                faces.append(tau)
    return SimplicialComplex(ideal.variables, faces)


def minimal_betti(ideal: MonomialIdeal, characteristic: int = 0) -> BettiTable:
    """Multigraded Betti numbers of R/I over the field of given characteristic.

    beta_{i+1, b}(R/I) = dim H_{i-1}(K^b) for the upper Koszul complex K^b,
    which can only be nonzero for b in the lcm lattice.
    """
    gens = _generators(ideal)
    n = len(ideal.variables)
    counts = Counter({(0, (0,) * n): 1})
    for b in lcm_lattice(gens):
        kb = upper_koszul_complex(ideal, b)
        if kb.is_void():
            continue
        for j, dim in field_bettis(kb, characteristic).items():
            if dim:
                counts[j + 2, b.exponents] += dim
    return BettiTable(ideal.variables, counts)


def betti_table(c: MultigradedComplex) -> BettiTable:
    return c.betti_table()
