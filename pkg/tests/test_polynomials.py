import math
from fractions import Fraction

import pytest

from linkinv.diagram import (
    DiagramError,
    connected_sum,
    crossing_change,
    disjoint_union,
    is_alternating,
    mirror,
    parse_pd,
    simplify,
    smooth_crossing,
    unknot,
)
from linkinv.families import braid_closure, pretzel, torus2, turks_head
from linkinv.goeritz import link_determinant, signature_and_nullity
from linkinv.graphs import spanning_tree_count, tait_graph
from linkinv.polynomials import (
    bracket_state_sum,
    chebyshev_S,
    chebyshev_T,
    conway_at,
    conway_to_omega,
    conway_via_skein,
    determinant_from_conway,
    determinant_via_bracket,
    evaluate_at_zeta8,
    family_closed_forms,
    is_reduced,
    jones_in_A,
    kauffman_bracket,
    omega_to_conway,
    potential_bundle,
    pretzel_conway,
    state_circle_count,
    state_tools,
    torus2_conway,
    traczyk_signature,
    turaev_genus_diagram,
    turks_head_det,
    wheel_det,
)
from linkinv.rings import GaussInt, LaurentPoly, Zeta8
from linkinv.seifert import seifert_matrix
from linkinv.signatures import conway_of

from corpus import corpus, reduced_alternating

LEFT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
POS_KINK = "X(2,2,1,1)"


def z_poly(terms):
    return LaurentPoly(dict(terms), "z")


def A_poly(terms):
    return LaurentPoly(dict(terms), "A")


def conway_any(d):
    """Seifert-matrix Conway polynomial where possible, skein oracle for split projections."""
    if d.is_connected_projection:
        return conway_of(seifert_matrix(d).V)
    return conway_via_skein(d)


def test_potential_bundle_examples():
    assert potential_bundle([[-1, 0], [1, -1]])["conway"] == z_poly({0: 1, 2: 1})
    assert potential_bundle([[1, -1], [0, -1]])["conway"] == z_poly({0: 1, 2: -1})
    empty = potential_bundle([])
    assert empty["omega"] == LaurentPoly.const(1, "x") and empty["conway"] == LaurentPoly.const(1, "z")


def test_alexander_of_the_trefoil():
    delta = potential_bundle([[-1, 0], [1, -1]])["alexander"]
    # t - 1 + t^-1 written in t^(1/2)
    assert delta == LaurentPoly({2: 1, 0: -1, -2: 1}, "t_half")


def test_skein_examples():
    assert conway_via_skein(torus2(3)) == z_poly({0: 1, 2: 1})
    assert conway_via_skein(torus2(2)) == z_poly({1: 1})
    assert conway_via_skein(unknot(2)).is_zero()
    assert conway_via_skein(disjoint_union(torus2(3), torus2(2))).is_zero()


@pytest.mark.parametrize("name,d", corpus())
def test_conway_pipelines_agree(name, d):
    assert conway_via_skein(d) == conway_of(seifert_matrix(d).V)


@pytest.mark.parametrize("name,d", corpus())
def test_skein_relation_at_every_crossing(name, d):
    z = LaurentPoly.monomial(1, 1, "z")
    for p in range(d.crossing_count):
        other = crossing_change(d, p)
        plus, minus = (d, other) if d.sign(p) == 1 else (other, d)
        zero = smooth_crossing(d, p, "oriented")
        assert conway_any(plus) - conway_any(minus) == z * conway_any(zero)


@pytest.mark.parametrize("name,d", corpus())
def test_three_way_determinant(name, d):
    det = link_determinant(d)
    assert determinant_via_bracket(d) == det
    assert determinant_from_conway(conway_via_skein(d)) == det


@pytest.mark.parametrize("name,d", corpus())
def test_omega_symmetry_and_round_trip(name, d):
    omega = potential_bundle(seifert_matrix(d))["omega"]
    flipped = LaurentPoly({-e: c * (-1) ** (e % 2) for e, c in omega.items()}, "x")
    assert flipped == omega
    assert conway_to_omega(omega_to_conway(omega)) == omega


def test_bracket_examples():
    assert kauffman_bracket(unknot()) == LaurentPoly.const(1, "A")
    assert kauffman_bracket(parse_pd(POS_KINK)) == A_poly({3: -1})
    # the left trefoil of the PD convention; the opposite chirality has the mirrored exponents
    left = kauffman_bracket(parse_pd(LEFT_TREFOIL))
    assert left == A_poly({7: 1, 3: -1, -5: -1})
    assert kauffman_bracket(mirror(parse_pd(LEFT_TREFOIL))) == A_poly({-7: 1, -3: -1, 5: -1})
    assert determinant_via_bracket(torus2(3)) == -3
    assert math.isqrt(determinant_via_bracket(turks_head(4)).norm()) == 45
    assert determinant_via_bracket(turks_head(2)) == 5


def test_bracket_cap():
    with pytest.raises(DiagramError):
        kauffman_bracket(turks_head(5), cap=8)


@pytest.mark.parametrize("name,d", [(n, d) for n, d in corpus() if d.crossing_count <= 9])
def test_frontier_bracket_matches_the_state_sum(name, d):
    assert kauffman_bracket(d) == bracket_state_sum(d)


@pytest.mark.parametrize("name,d", corpus())
def test_bracket_under_reidemeister_moves(name, d):
    kinked = connected_sum(d, parse_pd(POS_KINK))
    assert kauffman_bracket(kinked) == kauffman_bracket(d) * A_poly({3: -1})
    negkinked = connected_sum(d, mirror(parse_pd(POS_KINK)))
    assert kauffman_bracket(negkinked) == kauffman_bracket(d) * A_poly({-3: -1})
    assert jones_in_A(simplify(d)) == jones_in_A(d)


def test_bracket_is_invariant_under_r2():
    d = braid_closure(3, [1, -1, 2, 2, 2])
    assert kauffman_bracket(d) == kauffman_bracket(simplify(d))


def test_jones_of_the_right_trefoil():
    assert jones_in_A(torus2(3)) == A_poly({-16: -1, -12: 1, -4: 1})


@pytest.mark.parametrize("name,d", [(n, d) for n, d in corpus() if is_alternating(d) and d.is_connected_projection])
def test_alternating_determinant_structure(name, d):
    det = math.isqrt(link_determinant(d).norm())
    assert det == spanning_tree_count(tait_graph(d)[0])
    # <D> at A^4 = -1 is A^(B - W) times a positive integer
    B, W = state_circle_count(d, "s-"), state_circle_count(d, "s+")
    value = evaluate_at_zeta8(kauffman_bracket(d), W - B)
    assert value == Zeta8.gen_power(0) * det
    for p in range(d.crossing_count):
        a = math.isqrt(link_determinant(smooth_crossing(d, p, "zero")).norm())
        b = math.isqrt(link_determinant(smooth_crossing(d, p, "infinity")).norm())
        assert det == a + b


def test_state_tools_examples():
    t = torus2(3)
    assert state_tools(t, "s+")["circle_count"] == 2 and state_tools(t, "s-")["circle_count"] == 3
    assert state_tools(t, "s+")["adequate"] and state_tools(t, "s-")["adequate"]
    assert state_tools(torus2(2), "s+")["circle_count"] == 2
    kink = parse_pd(POS_KINK)
    assert not (state_tools(kink, "s+")["adequate"] and state_tools(kink, "s-")["adequate"])
    g = state_tools(t, {0: 1, 1: -1, 2: 1})["graph"]
    assert len(g.edges) == 3


@pytest.mark.parametrize("name,d", corpus())
def test_oriented_state_is_the_seifert_state(name, d):
    st = state_tools(d, "oriented")
    assert st["markers"] == tuple(1 if d.sign(p) == 1 else -1 for p in range(d.crossing_count))
    if d.is_connected_projection:
        assert st["circle_count"] == d.crossing_count + 1 - len(seifert_matrix(d).V)


def test_turaev_genus():
    assert all(turaev_genus_diagram(d) == 0 for _, d in reduced_alternating())
    assert turaev_genus_diagram(torus2(3)) == 0
    # sigma1^4 sigma2^4 closes to a connected sum of two alternating pieces
    assert turaev_genus_diagram(braid_closure(3, [1, 1, 1, 1, 2, 2, 2, 2])) == 0
    assert turaev_genus_diagram(braid_closure(3, [1, 2] * 4)) == 3


@pytest.mark.parametrize("name,d", reduced_alternating(9))
def test_traczyk_formulas(name, d):
    r = traczyk_signature(d)
    assert r["from_tree"] == r["from_states"] == signature_and_nullity(d)["sigma"]
    assert Fraction(r["writhe"] + r["s_plus"] - r["s_minus"], 2) == r["d_plus"] - r["d_minus"]


def test_traczyk_examples_and_errors():
    assert traczyk_signature(torus2(3))["sigma"] == -2
    assert all(traczyk_signature(torus2(k))["sigma"] == 1 - k for k in range(2, 9))
    assert traczyk_signature(turks_head(2))["sigma"] == 0
    with pytest.raises(DiagramError):
        traczyk_signature(braid_closure(3, [1, 2] * 4))
    with pytest.raises(DiagramError):
        traczyk_signature(torus2(1))
    assert not is_reduced(torus2(1))


def test_closed_forms():
    assert [turks_head_det(n) for n in range(2, 9)] == [5, 16, 45, 121, 320, 841, 2205]
    assert chebyshev_T(6, 3) == 322
    assert [chebyshev_S(i, 2) for i in range(4)] == [1, 2, 3, 4]
    assert torus2_conway(3) == z_poly({0: 1, 2: 1})
    assert all(torus2_conway(k) == conway_via_skein(torus2(k)) for k in range(1, 9))
    assert family_closed_forms("turks_head_det", 6) == 320
    # the generalized wheel with a = b = 1 is the Turk's head
    assert all(wheel_det(1, 1, n) == turks_head_det(n) for n in range(2, 8))


@pytest.mark.parametrize("n", range(2, 7))
def test_turks_head_conway_evaluation(n):
    value = conway_at(conway_via_skein(turks_head(n)), GaussInt(0, -2))
    assert math.isqrt(value.norm()) == chebyshev_T(n, 3) - 2


@pytest.mark.parametrize("cols", [(1, 1, 1), (3, 1, 1), (1, -3, 3), (-1, 3, -5), (5, 7, -3), (1, 1, 1, 1, 1)])
def test_pretzel_conway_closed_form(cols):
    assert pretzel_conway(cols) == conway_via_skein(pretzel(*cols))


def test_pretzel_5_7_minus_3_has_trivial_conway():
    assert pretzel_conway((5, 7, -3)) == LaurentPoly.const(1, "z")


def test_named_knot_polynomials():
    assert conway_via_skein(torus2(5)) == z_poly({0: 1, 2: 3, 4: 1})
    six_two = braid_closure(3, [-1, 2, -1, 2, 2, 2])
    assert conway_via_skein(six_two) == z_poly({0: 1, 2: -1, 4: -1})
    assert link_determinant(six_two) == -11
    assert conway_via_skein(braid_closure(3, [1, 2] * 4)) == z_poly({0: 1, 2: 5, 4: 5, 6: 1})
