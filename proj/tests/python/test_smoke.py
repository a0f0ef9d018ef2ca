"""Smoke tests for the python bindings."""

from fractions import Fraction

import mclat


def test_pseudo_polynomial_k2():
    z = mclat.z_state_weighted(mclat.complete_graph(2), mclat.paper_weight_matrix(2))
    assert str(z.poly) == "311x^311 + 106x^53 + 7x^7"
    assert z.poly.terms() == [((311,), 311), ((53,), 106), ((7,), 7)]


def test_reconstruction_round_trip():
    w, ok = mclat.admissible_matrix(3, 9)
    assert ok
    g = mclat.Multigraph(5, [(0, 1), (0, 1), (2, 3)])
    z = mclat.z_state_weighted(g, w)
    back = mclat.reconstruct_pseudo(z)
    assert mclat.is_isomorphic(back, g)


def test_symbolic_reconstruction():
    g = mclat.Multigraph(4, [(0, 1), (1, 2)])
    back = mclat.reconstruct_symbolic(mclat.z_state_symbolic(g, 4))
    assert mclat.is_isomorphic(back, g)


def test_big_integers_cross_the_boundary():
    assert mclat.nth_prime(387420489) == 8448283757
    w = mclat.paper_weight_matrix(3)
    assert w.prime(3, 3) == 8448283757


def test_tutte_k3():
    t = mclat.tutte_deletion_contraction(mclat.Matroid.graphic(mclat.complete_graph(3)))
    assert str(t) == "x^2 + x + y"
    assert t == mclat.tutte_subset_expansion(mclat.Matroid.graphic(mclat.complete_graph(3)))


def test_theta_of_the_length8_code_is_e4():
    e8 = mclat.BinaryCode.from_text("11111111\n01010101\n00110011\n00001111\n")
    assert e8.is_self_dual() and e8.is_doubly_even()
    assert mclat.weight_enumerator_enum(e8) == mclat.p8_polynomial()
    assert mclat.theta_from_code(e8, 80) == mclat.eisenstein_e4(80)
    assert mclat.gram_determinant(e8) == Fraction(1)


def test_pipeline_tree_pair():
    path = mclat.path_graph(4)
    star = mclat.Multigraph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    report = mclat.run_pipeline(path, star, precision_quarters=40)
    assert report["tutte_equal"] is True
    assert report["graphs_nonisomorphic"] is True
    assert report["wenum_equal"] is True
    assert report["theta_equal_to_precision"]["equal"] is True
    assert report["lattice_rank"] == 16
    assert report["lattice_isomorphism"] == "not certified"


def test_search_returns_tequivalent_pairs():
    pairs = mclat.search_tequivalent(5, 4)
    assert pairs
    a, b = pairs[0]
    assert not mclat.is_isomorphic(a, b)
    ta = mclat.tutte_deletion_contraction(mclat.Matroid.graphic(a))
    tb = mclat.tutte_deletion_contraction(mclat.Matroid.graphic(b))
    assert ta == tb
