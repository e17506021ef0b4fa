import random

import pytest

from oracles import brute_scarf_faces, face_set, hochster_betti, random_complex, signed_permutation_equivalent
from simplicial import (
    LabelledComplex,
    Monomial,
    MonomialIdeal,
    SimplicialError,
    buchberger_complex,
    is_resolution,
    labelled_chain_complex,
    lyubeznik_complex,
    minimal_betti,
    restrict_to_degree,
    scarf_complex,
    simplex,
    taylor_complex,
)

Y = ("y0", "y1", "y2", "y3")


def mono(text):
    return Monomial.parse(text, Y)


def readable(matrix):
    """Boundary entries as (sign, exponent vector), 0 for zero entries."""
    return [[0 if e is None else (e[0], e[1].exponents) for e in row] for row in matrix]


# boundary maps of the chain complex on Gamma labelled by J, entry by entry
GAMMA_BOUNDARIES = {
    1: [[(1, (1, 1, 0, 0)), (1, (1, 0, 1, 0)), (1, (1, 0, 0, 1)), (1, (0, 1, 1, 1))]],
    2: [
        [(-1, (0, 0, 1, 0)), (-1, (0, 0, 0, 1)), 0, 0],
        [(1, (0, 1, 0, 0)), 0, (-1, (0, 0, 0, 1)), 0],
        [0, (1, (0, 1, 0, 0)), (1, (0, 0, 1, 0)), (-1, (0, 1, 1, 0))],
        [0, 0, 0, (1, (1, 0, 0, 0))],
    ],
    3: [[(1, (0, 0, 0, 1))], [(-1, (0, 0, 1, 0))], [(1, (0, 1, 0, 0))], [0]],
}


def test_gamma_labelled_complex(gamma, j_ideal):
    c = labelled_chain_complex(gamma, j_ideal.generators)
    assert c.ranks() == [1, 4, 4, 1]
    assert c.check()
    assert [m for m in c.multidegrees(1)] == list(j_ideal.generators)
    for i, expected in GAMMA_BOUNDARIES.items():
        assert readable(c.boundary(i)) == expected


def test_boundaries_up_to_column_signs(gamma, j_ideal):
    c = labelled_chain_complex(gamma, j_ideal.generators)
    flipped = [[None if x == 0 else (-x[0], Monomial(Y, x[1])) for x in row] for row in GAMMA_BOUNDARIES[2]]
    assert signed_permutation_equivalent(c.boundary(2), flipped)


def test_gamma_is_resolution(gamma, j_ideal):
    lc = LabelledComplex(gamma, j_ideal.generators)
    assert is_resolution(lc) == (True, [])
    assert lc.chain_complex().betti_table() == minimal_betti(j_ideal)


def test_reversed_labels_fail(gamma, j_ideal):
    lc = LabelledComplex(gamma, tuple(reversed(j_ideal.generators)))
    ok, failures = is_resolution(lc)
    assert not ok
    assert [(f.multidegree.exponents, f.homological_degree, f.dimension) for f in failures] == [
        ((1, 1, 0, 1), 1, 1)
    ]


def test_labelled_complex_validation(gamma):
    with pytest.raises(SimplicialError):
        LabelledComplex(gamma, (mono("y0"),))


def test_restrict_to_degree(gamma, j_ideal):
    lc = LabelledComplex(gamma, j_ideal.generators)
    assert restrict_to_degree(lc, mono("y0*y1*y2")).facets == ((0, 1),)
    assert restrict_to_degree(lc, mono("1")).kind == "empty"
    assert restrict_to_degree(lc, mono("y0*y1*y2*y3")) == gamma


def test_j_prime_suite(j_prime):
    taylor = taylor_complex(j_prime)
    assert taylor.chain_complex().ranks() == [1, 5, 10, 10, 5, 1]
    assert taylor == LabelledComplex(simplex(4, [f"x{i}" for i in range(5)]), j_prime.generators)
    assert lyubeznik_complex(j_prime).complex == simplex(4, [f"x{i}" for i in range(5)])

    buch = buchberger_complex(j_prime)
    assert {"".join(buch.complex.labels_of(f)) for f in buch.complex.facets} == {
        "x0x2x3x4",
        "x0x1x2x3",
    }
    assert buch.chain_complex().ranks() == [1, 5, 9, 7, 2]
    assert is_resolution(buch)[0]
    assert buch.chain_complex().betti_table() == minimal_betti(j_prime)
    assert minimal_betti(j_prime).totals() == [1, 5, 9, 7, 2]
    assert lyubeznik_complex(j_prime, [2, 1, 0, 3, 4]) == buch
    assert scarf_complex(j_prime) == buch


def test_lyubeznik_rejects_bad_order(j_prime):
    with pytest.raises(SimplicialError, match="permutation"):
        lyubeznik_complex(j_prime, [0, 0, 1, 2, 3])


def test_taylor_rejects_trivial_ideals():
    with pytest.raises(SimplicialError):
        taylor_complex(MonomialIdeal(Y))
    with pytest.raises(SimplicialError):
        taylor_complex(MonomialIdeal.from_strings(Y, ["1"]))


def test_betti_table_text(j_prime):
    table = minimal_betti(j_prime)
    assert table.pdim == 4
    lines = table.text().splitlines()
    assert lines[0].split() == ["0", "1", "2", "3", "4"]
    assert lines[1].split() == ["total:", "1", "5", "9", "7", "2"]


def random_ideal(rng, max_gens=6, max_vars=4, max_exp=3):
    n = rng.randint(1, max_vars)
    variables = [f"z{i}" for i in range(n)]
    while True:
        gens = [
            Monomial(tuple(variables), tuple(rng.randint(0, max_exp) for _ in range(n)))
            for _ in range(rng.randint(1, max_gens))
        ]
        ideal = MonomialIdeal(variables, gens)
        if not ideal.is_unit():
            return ideal


def test_containments_and_resolutions():
    rng = random.Random(21)
    for _ in range(40):
        ideal = random_ideal(rng)
        faces = {name: face_set(f(ideal).complex) for name, f in [
            ("taylor", taylor_complex),
            ("scarf", scarf_complex),
            ("lyubeznik", lyubeznik_complex),
            ("buchberger", buchberger_complex),
        ]}
        assert faces["scarf"] <= faces["buchberger"] <= faces["taylor"]
        assert faces["scarf"] <= faces["lyubeznik"]
        assert faces["scarf"] == brute_scarf_faces(ideal.generators)
        table = minimal_betti(ideal)
        for f in (taylor_complex, buchberger_complex, lyubeznik_complex):
            lc = f(ideal)
            assert is_resolution(lc)[0]
            assert table <= lc.chain_complex().betti_table()


def test_minimal_betti_matches_hochster():
    rng = random.Random(22)
    for _ in range(25):
        cx = random_complex(rng, max_vertices=5)
        if cx.kind != "complex":
            continue
        sr = cx.stanley_reisner_ideal()
        if sr.is_zero():
            continue
        for p in (0, 2):
            got = minimal_betti(sr, p).counts
            assert {k: v for k, v in got.items() if v} == hochster_betti(cx, p)


def test_restriction_monotone(gamma, j_ideal):
    lc = LabelledComplex(gamma, j_ideal.generators)
    rng = random.Random(23)
    for _ in range(30):
        a = Monomial(Y, tuple(rng.randint(0, 2) for _ in Y))
        b = a * Monomial(Y, tuple(rng.randint(0, 1) for _ in Y))
        assert face_set(restrict_to_degree(lc, a)) <= face_set(restrict_to_degree(lc, b))


def test_characteristic_dependent_resolution():
    # RP^2 labelled by distinct variables, so restrictions are induced subcomplexes
    from simplicial import named_complex

    rp2 = named_complex("realProjectivePlane")
    variables = tuple(f"t{i}" for i in range(6))
    labels = [Monomial(variables, tuple(int(i == k) for i in range(6))) for k in range(6)]
    lc = LabelledComplex(rp2, tuple(labels))
    # the full restriction is RP^2 itself, acyclic over Q but not over F_2
    full = Monomial(variables, (1,) * 6)
    assert all(f.multidegree != full for f in is_resolution(lc, 0)[1])
    assert any(f.multidegree == full for f in is_resolution(lc, 2)[1])
