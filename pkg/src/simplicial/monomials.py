"""Monomials as exponent vectors and monomial ideals.

Everything here is exact and purely combinatorial: a monomial is a tuple of
natural numbers attached to an ordered tuple of variable names, and an ideal
is stored by its minimal generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import SimplicialError

# lcm-lattice style enumeration is exponential in the generator count
MAX_GENERATORS = 24


@dataclass(frozen=True)
class Monomial:
    variables: tuple[str, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.variables) != len(self.exponents):
            raise SimplicialError(
                f"monomial has {len(self.exponents)} exponents for "
                f"{len(self.variables)} variables"
            )
        if any(e < 0 for e in self.exponents):
            raise SimplicialError("exponents must be natural numbers")

    @classmethod
    def one(cls, variables: Sequence[str]) -> Monomial:
        variables = tuple(variables)
        return cls(variables, (0,) * len(variables))

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> Monomial:
        """Read ``"y0^2*y1"`` (ASCII ``*`` and ``^``); ``"1"`` is the unit."""
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        exps = [0] * len(variables)
        text = text.strip()
        if text == "1":
            return cls(variables, tuple(exps))
        for factor in text.split("*"):
            m = re.fullmatch(r"\s*([^\s^*]+)\s*(?:\^\s*(\d+))?\s*", factor)
            if m is None:
                raise SimplicialError(f"cannot parse monomial factor {factor!r}")
            name, power = m.group(1), m.group(2)
            if name not in index:
                raise SimplicialError(f"unknown variable {name!r} in {text!r}")
            exps[index[name]] += int(power) if power is not None else 1
        return cls(variables, tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def _check(self, other: Monomial):
        if self.variables != other.variables:
            raise SimplicialError("monomials live over different variable sets")

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(
            self.variables, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def __truediv__(self, other: Monomial) -> Monomial:
        self._check(other)
        if not divides(other, self):
            raise SimplicialError(f"{other} does not divide {self}")
        return Monomial(
            self.variables, tuple(a - b for a, b in zip(self.exponents, other.exponents))
        )

    def __str__(self):
        parts = []
        for name, e in zip(self.variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _grlex_key(m: Monomial):
    return (m.degree, m.exponents)


def lcm(monomials: Iterable[Monomial], variables: Sequence[str] | None = None) -> Monomial:
    """Componentwise maximum; the lcm of nothing is 1 (needs ``variables``)."""
    ms = list(monomials)
    if not ms:
        if variables is None:
            raise SimplicialError("lcm of an empty list needs the variable set")
        return Monomial.one(variables)
    first = ms[0]
    if variables is not None and tuple(variables) != first.variables:
        raise SimplicialError("monomials live over different variable sets")
    exps = list(first.exponents)
    for m in ms[1:]:
        first._check(m)
        exps = [max(a, b) for a, b in zip(exps, m.exponents)]
    return Monomial(first.variables, tuple(exps))


def divides(a: Monomial, b: Monomial) -> bool:
    a._check(b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def strictly_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b / x_i`` for every variable ``x_i`` in supp(b).

    Equivalently ``a_i < b_i`` wherever ``b_i >= 1`` and ``a_i = 0`` elsewhere.
    """
    a._check(b)
    return all(x < y if y else x == 0 for x, y in zip(a.exponents, b.exponents))


class MonomialIdeal:
    """A monomial ideal stored by its minimal generators.

    Generators keep the order in which they were supplied (after dropping
    non-minimal ones), which matters when they label the vertices of a
    complex.  Use :func:`minimalize` for the canonical graded-lex order.
    The zero ideal has no generators; the unit ideal has the single
    generator 1.
    """

    def __init__(self, variables: Sequence[str], generators: Iterable[Monomial] = ()):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise SimplicialError("variable names must be distinct")
        gens: list[Monomial] = []
        for g in generators:
            if g.variables != self.variables:
                raise SimplicialError("generator lives over a different variable set")
            gens.append(g)
        self.generators = tuple(_minimal(gens))

    @classmethod
    def from_exponents(cls, variables, exponent_vectors) -> MonomialIdeal:
        variables = tuple(variables)
        return cls(variables, (Monomial(variables, tuple(e)) for e in exponent_vectors))

    @classmethod
    def from_strings(cls, variables, texts: Iterable[str]) -> MonomialIdeal:
        variables = tuple(variables)
        return cls(variables, (Monomial.parse(t, variables) for t in texts))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.variables == other.variables and set(self.generators) == set(
            other.generators
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.generators)))

    def __repr__(self):
        return f"MonomialIdeal({', '.join(map(str, self.generators)) or '0'})"

    __str__ = __repr__

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    __contains__ = contains

    def sorted(self) -> MonomialIdeal:
        out = MonomialIdeal(self.variables)
        out.generators = tuple(sorted(self.generators, key=_grlex_key, reverse=True))
        return out

    def supports(self) -> list[frozenset[int]]:
        """Generator supports as index sets; requires a squarefree ideal."""
        if not self.is_squarefree():
            raise SimplicialError(f"ideal is not squarefree: {self}")
        return [frozenset(g.support) for g in self.generators]


def _minimal(gens: list[Monomial]) -> list[Monomial]:
    out: list[Monomial] = []
    seen = set()
    for i, g in enumerate(gens):
        if g in seen:
            continue
        if any(
            divides(h, g) and h != g for j, h in enumerate(gens) if j != i
        ):
            continue
        seen.add(g)
        out.append(g)
    return out


def minimalize(gens: Sequence[Monomial]) -> MonomialIdeal:
    """Minimal generators of the ideal spanned by ``gens``, largest first in graded lex."""
    gens = list(gens)
    if not gens:
        raise SimplicialError("minimalize needs the variable set for an empty list")
    variables = gens[0].variables
    return MonomialIdeal(variables, gens).sorted()


def minimal_transversals(edges: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-minimal vertex sets meeting every edge (Berge's algorithm).

    An empty edge admits no transversal, so the result is then empty.
    """
    trans: set[frozenset[int]] = {frozenset()}
    for edge in sorted(set(edges), key=lambda e: (len(e), sorted(e))):
        grown = set()
        for t in trans:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | {v} for v in edge)
        trans = {t for t in grown if not any(s < t for s in grown)}
        if not trans:
            break
    return sorted(trans, key=lambda t: (len(t), sorted(t)))


def _product_of_variables(variables, indices) -> Monomial:
    exps = [0] * len(variables)
    for i in indices:
        exps[i] = 1
    return Monomial(tuple(variables), tuple(exps))


def dual_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual of a squarefree monomial ideal.

    Generators of the dual are the variable products over the minimal
    transversals of the generator supports, which are the complements of the
    facets of the complex whose Stanley-Reisner ideal is ``ideal``.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise SimplicialError("dual ideal needs a proper nonzero ideal")
    covers = minimal_transversals(ideal.supports())
    return MonomialIdeal(
        ideal.variables, (_product_of_variables(ideal.variables, c) for c in covers)
    ).sorted()


def irreducible_decomposition(ideal: MonomialIdeal) -> list[MonomialIdeal]:
    """Irreducible components of a squarefree ideal, each generated by variables.

    The zero ideal yields a single zero component (no proper components).
    """
    covers = minimal_transversals(ideal.supports())
    comps = [
        MonomialIdeal(
            ideal.variables,
            (_product_of_variables(ideal.variables, [i]) for i in sorted(c)),
        )
        for c in covers
    ]
    return sorted(comps, key=lambda c: [g.exponents for g in c.generators], reverse=True)


def lcm_lattice(gens: Sequence[Monomial]) -> list[Monomial]:
    """Distinct lcms of nonempty subsets of ``gens``, by closure under joins."""
    gens = list(gens)
    if len(gens) > MAX_GENERATORS:
        raise SimplicialError(
            f"{len(gens)} generators exceeds the enumeration limit of {MAX_GENERATORS}"
        )
    found = {g.exponents: g for g in gens}
    frontier = list(found.values())
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                j = lcm([m, g])
                if j.exponents not in found:
                    found[j.exponents] = j
                    new.append(j)
        frontier = new
    return sorted(found.values(), key=_grlex_key)


def h_vector_from_f_vector(f: Sequence[int]) -> list[int]:
    """h_j for 0 <= j <= d where d + 2 = len(f)."""
    d = len(f) - 2
    return [
        sum((-1) ** (j - k) * comb(d + 1 - k, j - k) * f[k] for k in range(j + 1))
        for j in range(d + 1)
    ]


def hilbert_series_reduced(complex_) -> tuple[list[int], int]:
    """Numerator coefficients and the exponent of (1 - T) for k[V]/I.

    The numerator is the h-vector, with h_{d+1} appended when it is
    nonzero (it equals (-1)^d times the reduced Euler characteristic).
    """
    f = complex_.f_vector()
    d = len(f) - 2
    h = h_vector_from_f_vector(f)
    top = sum((-1) ** (d + 1 - k) * f[k] for k in range(d + 2))
    if top:
        h.append(top)
    return h, d + 1
