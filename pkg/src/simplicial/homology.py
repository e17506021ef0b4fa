"""Reduced simplicial (co)homology over the integers and over prime fields."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .complex import Face, SimplicialComplex
from .errors import SimplicialError, VoidComplexError
from .smith import Matrix, matmul, smith_normal_form, transpose, zeros


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise SimplicialError("free rank must be nonnegative")
        t = tuple(self.torsion)
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise SimplicialError(f"invalid invariant factors {list(t)}")
        object.__setattr__(self, "torsion", t)

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


@dataclass
class ChainComplexZ:
    """Free Z-complex with ``boundaries[i]`` mapping degree i to degree i - 1.

    ``ranks`` is keyed by a contiguous range of degrees.  For a simplicial
    complex ``basis[i]`` holds the sorted faces of dimension i.
    """

    ranks: dict[int, int]
    boundaries: dict[int, Matrix]
    basis: dict[int, list[Face]] = field(default_factory=dict)

    @property
    def degrees(self) -> range:
        if not self.ranks:
            return range(0)
        return range(min(self.ranks), max(self.ranks) + 1)

    def rank(self, i: int) -> int:
        return self.ranks.get(i, 0)

    def boundary(self, i: int) -> Matrix:
        """Matrix of d_i : C_i -> C_{i-1}, zero outside the stored range."""
        if i in self.boundaries:
            return self.boundaries[i]
        return zeros(self.rank(i - 1), self.rank(i))

    def check(self) -> bool:
        """True iff every composite d_i d_{i+1} vanishes."""
        for i in self.degrees:
            prod = matmul(self.boundary(i), self.boundary(i + 1), inner=self.rank(i))
            if any(any(row) for row in prod):
                return False
        return True

    @cached_property
    def _snf(self):
        return {i: smith_normal_form(self.boundary(i)) for i in self.degrees}

    def _smith(self, i):
        if i in self._snf:
            return self._snf[i]
        return smith_normal_form(self.boundary(i))

    def homology(self, i: int) -> AbelianGroup:
        r = self.rank(i)
        if r == 0:
            return AbelianGroup()
        below = self._smith(i).rank
        above = self._smith(i + 1)
        return AbelianGroup(r - below - above.rank, tuple(above.invariant_factors))

    def cohomology(self, i: int) -> AbelianGroup:
        """Homology at degree i of the dual complex with coboundary d_{i+1}^T."""
        r = self.rank(i)
        if r == 0:
            return AbelianGroup()
        out_rank = smith_normal_form(transpose(self.boundary(i + 1), self.rank(i + 1))).rank
        incoming = smith_normal_form(transpose(self.boundary(i), self.rank(i)))
        return AbelianGroup(r - out_rank - incoming.rank, tuple(incoming.invariant_factors))


def boundary_matrix(rows: list[Face], cols: list[Face]) -> Matrix:
    """Signed incidence: removing the k-th smallest vertex carries sign (-1)^k."""
    pos = {f: i for i, f in enumerate(rows)}
    m = zeros(len(rows), len(cols))
    for j, f in enumerate(cols):
        for k in range(len(f)):
            m[pos[f[:k] + f[k + 1:]]][j] = -1 if k % 2 else 1
    return m


def reduced_chain_complex(cx: SimplicialComplex) -> ChainComplexZ:
    if cx.is_void():
        raise VoidComplexError("the void complex has no reduced chain complex")
    faces = cx.faces()
    ranks = {d: len(fs) for d, fs in faces.items()}
    bds = {d: boundary_matrix(faces[d - 1], faces[d]) for d in faces if d >= 0}
    return ChainComplexZ(ranks, bds, faces)


def homology(cx: SimplicialComplex, i: int) -> AbelianGroup:
    return reduced_chain_complex(cx).homology(i)


def cohomology(cx: SimplicialComplex, i: int) -> AbelianGroup:
    return reduced_chain_complex(cx).cohomology(i)


def homology_groups(cx: SimplicialComplex) -> dict[int, AbelianGroup]:
    """All reduced homology groups, degrees -1 .. dim."""
    c = reduced_chain_complex(cx)
    return {i: c.homology(i) for i in c.degrees}


def _check_characteristic(p: int):
    if p == 0:
        return
    from sympy import isprime

    if p < 0 or not isprime(p):
        raise SimplicialError(f"characteristic must be 0 or a prime, got {p}")


def field_dimension(h_i: AbelianGroup, h_below: AbelianGroup, p: int) -> int:
    """dim H_i(-; F_p) from integral groups by universal coefficients."""
    _check_characteristic(p)
    if p == 0:
        return h_i.rank
    return (
        h_i.rank
        + sum(1 for d in h_i.torsion if d % p == 0)
        + sum(1 for d in h_below.torsion if d % p == 0)
    )


def betti_over_field(cx: SimplicialComplex, i: int, characteristic: int = 0) -> int:
    """Dimension of reduced H_i over Q (characteristic 0) or F_p."""
    _check_characteristic(characteristic)
    c = reduced_chain_complex(cx)
    return field_dimension(c.homology(i), c.homology(i - 1), characteristic)


def field_bettis(cx: SimplicialComplex, characteristic: int = 0) -> dict[int, int]:
    _check_characteristic(characteristic)
    c = reduced_chain_complex(cx)
    groups = {i: c.homology(i) for i in range(c.degrees.start - 1, c.degrees.stop)}
    return {
        i: field_dimension(groups[i], groups[i - 1] if i - 1 in groups else AbelianGroup(), characteristic)
        for i in c.degrees
    }


def reisner_witness(cx: SimplicialComplex, characteristic: int = 0):
    """First (face, j) with nonzero H_j(link(face)) for j < dim link, or None."""
    if cx.is_void():
        raise VoidComplexError("Cohen-Macaulayness is undefined for the void complex")
    _check_characteristic(characteristic)
    for face in cx.all_faces():
        lk = cx.link(face)
        bettis = field_bettis(lk, characteristic)
        for j in range(-1, lk.dim):
            if bettis.get(j, 0):
                return face, j
    return None


def is_cohen_macaulay(cx: SimplicialComplex, characteristic: int = 0) -> bool:
    """Reisner's criterion over the field of the given characteristic."""
    return reisner_witness(cx, characteristic) is None


def is_cohen_macaulay_by_depth(cx: SimplicialComplex, characteristic: int = 0) -> bool:
    """Auslander-Buchsbaum check: |V| - pdim(k[V]/I) == dim + 1."""
    from .resolutions import minimal_betti

    if cx.is_void():
        raise VoidComplexError("Cohen-Macaulayness is undefined for the void complex")
    table = minimal_betti(cx.stanley_reisner_ideal(), characteristic)
    return len(cx.vertices) - table.pdim == cx.dim + 1
