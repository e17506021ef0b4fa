"""Small worked examples, mostly degenerate cases of each operation."""

from simplicial import (
    LabelledComplex,
    Monomial,
    MonomialIdeal,
    SimplicialComplex,
    buchberger_complex,
    cohomology,
    dual_ideal,
    irreducible_decomposition,
    is_cohen_macaulay,
    is_resolution,
    labelled_chain_complex,
    lyubeznik_complex,
    minimal_betti,
    minimalize,
    named_complex,
    reduced_chain_complex,
    scarf_complex,
    simplex,
    smith_normal_form,
    strictly_divides,
    taylor_complex,
)
from simplicial.homology import field_bettis

Y = ("y0", "y1", "y2", "y3")


def test_minimalize_drops_multiples():
    gens = [Monomial.parse(t, Y) for t in ["y1*y3", "y2^2", "y0*y2", "y1^2", "y0^2", "y0^2*y1"]]
    ideal = minimalize(gens)
    assert len(ideal) == 5 and Monomial.parse("y0^2*y1", Y) not in ideal.generators


def test_strict_divisibility_examples():
    p = lambda t: Monomial.parse(t, Y)  # noqa: E731
    assert strictly_divides(p("y0*y2"), p("y0^2*y1^2*y2^2*y3"))
    assert not strictly_divides(p("y2^2"), p("y0*y1^2*y2^2*y3"))


def test_ideal_duality_edge_cases():
    all_vars = MonomialIdeal.from_strings("abc", ["a", "b", "c"])
    assert [str(g) for g in dual_ideal(all_vars)] == ["a*b*c"]
    comps = irreducible_decomposition(MonomialIdeal.from_strings("abc", ["a*b"]))
    assert [[str(g) for g in c] for c in comps] == [["a"], ["b"]]
    # zero ideal: a single zero component, i.e. no proper components
    assert irreducible_decomposition(MonomialIdeal("abc")) == [MonomialIdeal("abc")]


def test_chain_complex_shapes(gamma):
    c = reduced_chain_complex(gamma)
    assert list(c.degrees) == [-1, 0, 1, 2]
    assert [c.rank(i) for i in c.degrees] == [1, 4, 4, 1]
    point = reduced_chain_complex(simplex(0, "a"))
    assert [point.rank(i) for i in point.degrees] == [1, 1] and point.boundary(0) == [[1]]
    hollow = SimplicialComplex.from_faces(["ab", "bc", "ac"])
    d1 = reduced_chain_complex(hollow).boundary(1)
    assert len(d1) == 3 and all(sum(col) == 0 for col in zip(*d1))


def test_smith_degenerate():
    s = smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert s.rank == 3 and s.invariant_factors == []
    assert smith_normal_form([[0, 0, 0]]).invariant_factors == []


def test_cohomology_small():
    two_points = SimplicialComplex.from_faces(["a", "b"])
    assert str(cohomology(two_points, 0)) == "Z"
    assert all(cohomology(simplex(3, "abcd"), i).is_zero() for i in range(4))
    assert field_bettis(named_complex("minimalTorus"), 0) == {-1: 0, 0: 0, 1: 2, 2: 1}
    assert is_cohen_macaulay(simplex(3, "abcd"))


def test_labelled_edge_cases(gamma, j_ideal):
    c = labelled_chain_complex(gamma, j_ideal.generators)
    assert [m.exponents for m in c.multidegrees(2)] == [
        (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1), (1, 1, 1, 1)
    ]
    m = Monomial.parse("y0*y1", Y)
    single = labelled_chain_complex(simplex(0, ["x0"]), [m])
    assert single.ranks() == [1, 1] and single.boundary(1) == [[(1, m)]]
    empty = LabelledComplex(SimplicialComplex.empty([]), ())
    assert empty.chain_complex().betti_table().totals() == [1]


def test_single_generator_and_coprime():
    one = MonomialIdeal.from_strings(Y, ["y0*y1"])
    for build in (taylor_complex, scarf_complex, lyubeznik_complex, buchberger_complex):
        assert build(one).complex == simplex(0, ["x0"])
    assert minimal_betti(one).totals() == [1, 1]
    coprime = MonomialIdeal.from_strings("ab", ["a", "b"])
    assert scarf_complex(coprime).complex == simplex(1, ["x0", "x1"])
    abbc = MonomialIdeal.from_strings("abc", ["a*b", "b*c"])
    assert buchberger_complex(abbc).complex == simplex(1, ["x0", "x1"])
    assert is_resolution(taylor_complex(abbc))[0]


def test_bowtie_projective_dimension(bowtie):
    table = minimal_betti(bowtie.stanley_reisner_ideal())
    assert table.pdim == 3 and 5 - (bowtie.dim + 1) == 2
