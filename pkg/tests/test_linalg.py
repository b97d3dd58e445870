from fractions import Fraction

import pytest
from oracles import charpoly_cofactor, root_zero_multiplicity

from nutorbits import (CirculantSpec, Graph, IntPoly, ResourceCapError,
                       cartesian_product, char_poly, circulant, complete_graph,
                       integer_scaled, is_nut, kernel_basis,
                       kernel_vector_from_factors, product_spectrum_check)
from nutorbits.linalg import EigenvectorMismatch, matvec

X = IntPoly.x()


def test_kernel_of_k2_is_trivial():
    assert kernel_basis(complete_graph(2).adjacency_matrix()) == []


def test_kernel_of_c4_frozen(c4):
    # char poly x^4 - 4x^2 has a double root at 0; the canonical reduced
    # basis pairs opposite vertices
    basis = kernel_basis(c4.adjacency_matrix())
    assert basis == [
        (Fraction(1), Fraction(0), Fraction(-1), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0), Fraction(-1)),
    ]


def test_kernel_of_circ_10_12_is_alternating(circ_10_12):
    basis = kernel_basis(circ_10_12.adjacency_matrix())
    assert len(basis) == 1
    assert basis[0] == tuple(Fraction((-1) ** i) for i in range(10))


def test_kernel_vectors_are_exact_on_random_matrices():
    # deterministic pseudorandom integer matrices; A v must be exactly zero
    import random
    rng = random.Random(7)
    for trial in range(40):
        n = rng.randint(1, 8)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        for v in kernel_basis(a):
            assert all(x == 0 for x in matvec(a, v))


def test_kernel_rank_nullity_on_rectifiable_cases():
    zero3 = [[0] * 3 for _ in range(3)]
    basis = kernel_basis(zero3)
    assert len(basis) == 3
    ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert kernel_basis(ident) == []


def test_is_nut_verdicts(circ_10_12, c4):
    v = is_nut(circ_10_12)
    assert v.is_nut and v.nullity == 1 and v.is_full

    v = is_nut(c4)
    assert not v.is_nut and v.nullity == 2 and not v.is_full

    v = is_nut(circulant(CirculantSpec(12, {1, 2, 3, 4})))
    assert not v.is_nut

    # K1 has nullity 1 with a full vector but is never a nut graph
    v = is_nut(complete_graph(1))
    assert v.nullity == 1 and v.is_full and not v.is_nut


def test_integer_scaled():
    assert integer_scaled((Fraction(1, 2), Fraction(-1, 3))) == (3, -2)
    assert integer_scaled((Fraction(2), Fraction(4))) == (1, 2)
    assert integer_scaled(()) == ()


def test_char_poly_frozen_values(c4, k4):
    assert char_poly(complete_graph(2).adjacency_matrix()) == X ** 2 - 1
    # (x - 3)(x + 1)^3 expanded
    assert char_poly(k4.adjacency_matrix()) == X ** 4 - 6 * X ** 2 - 8 * X - 3
    assert char_poly(c4.adjacency_matrix()) == X ** 4 - 4 * X ** 2


def test_char_poly_matches_cofactor_oracle_up_to_6():
    import random
    from itertools import combinations
    rng = random.Random(99)
    graphs = [complete_graph(m) for m in range(1, 5)]
    for trial in range(20):
        n = rng.randint(2, 6)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        graphs.append(Graph(n, tuple(sorted(edges))))
    for g in graphs:
        a = g.adjacency_matrix()
        assert char_poly(a) == charpoly_cofactor(a)


def test_nullity_equals_charpoly_zero_multiplicity():
    # cross-oracle on all graphs used elsewhere plus samples up to order 10
    for spec in [(4, {1}), (6, {1}), (8, {1, 4}), (10, {1, 2}), (10, {1, 5}),
                 (10, {2, 5}), (9, {1, 3})]:
        g = circulant(CirculantSpec(*spec))
        a = g.adjacency_matrix()
        assert len(kernel_basis(a)) == root_zero_multiplicity(char_poly(a))


def test_product_spectrum_check_named_pairs(c4, k4):
    k1, k2 = complete_graph(1), complete_graph(2)
    c6 = circulant(CirculantSpec(6, {1}))
    family = [k1, k2, k4, c4, c6]
    for g in family:
        for h in family:
            assert product_spectrum_check(g, h)


def test_product_spectrum_check_cap():
    big = circulant(CirculantSpec(10, {1}))
    with pytest.raises(ResourceCapError):
        product_spectrum_check(big, circulant(CirculantSpec(7, {1})))


def test_kernel_vector_from_factors_prop3_style(k4):
    g = circulant(CirculantSpec(10, {1, 5}))
    u = [(-1) ** i for i in range(10)]     # eigenvalue -3
    w = kernel_vector_from_factors(u, [1, 1, 1, 1], g, k4)
    assert len(w) == 40 and all(e != 0 for e in w)
    assert all(x == 0 for x in matvec(cartesian_product(g, k4).adjacency_matrix(), w))


def test_kernel_vector_from_factors_prop2_style():
    g = circulant(CirculantSpec(22, {2, 3, 4, 11}))
    u = [(-1) ** i for i in range(22)]     # eigenvalue 1
    k2 = complete_graph(2)
    w = kernel_vector_from_factors(u, [1, -1], g, k2)   # K2 eigenvalue -1
    assert len(w) == 44 and all(e != 0 for e in w)
    assert all(x == 0 for x in matvec(cartesian_product(g, k2).adjacency_matrix(), w))


def test_kernel_vector_from_factors_edgeless():
    e3, e2 = Graph(3, ()), Graph(2, ())
    w = kernel_vector_from_factors([1, 1, 1], [1, 1], e3, e2)
    assert w == tuple(Fraction(1) for _ in range(6))


def test_kernel_vector_from_factors_fullness_tracks_inputs(k4):
    # a non-full factor eigenvector produces a non-full product vector
    w = kernel_vector_from_factors([1, 0, -1, 0], [1, 1],
                                   circulant(CirculantSpec(4, {1})), Graph(2, ()))
    assert any(e == 0 for e in w)


def test_kernel_vector_from_factors_errors(c4, k4):
    with pytest.raises(EigenvectorMismatch) as err:
        kernel_vector_from_factors([1, 0, 0, 0], [1, 1], c4, Graph(2, ()))
    assert err.value.row == 1
    with pytest.raises(ValueError, match="cancel"):
        kernel_vector_from_factors([1, 1, 1, 1], [1, 1], k4, Graph(2, ()))
    with pytest.raises(ValueError, match="nonzero"):
        kernel_vector_from_factors([0, 0, 0, 0], [1, 1], c4, Graph(2, ()))


def test_nut_check_stays_fast_at_desk_scale():
    import time
    g = circulant(CirculantSpec(200, {1, 2, 3}))
    start = time.perf_counter()
    is_nut(g)
    assert time.perf_counter() - start < 10.0
