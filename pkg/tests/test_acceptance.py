"""Acceptance checks, one per criterion.

Every comparison is exact (integers, Gaussian integers, rationals), so the
numeric tolerance is zero.  Each check must also finish within
TIME_BUDGET seconds.  Results are collected in RESULTS and printed one line
per criterion at the end of the pytest run, or by running this file.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import pytest

from linkinv.diagram import crossing_change, smooth_crossing
from linkinv.families import braid_closure, pretzel, torus2, turks_head
from linkinv.goeritz import generalized_goeritz, goeritz_data, link_determinant, signature_and_nullity
from linkinv.graphs import SignedPlanarGraph, kirchhoff, spanning_tree_count, tait_graph
from linkinv.lattice import area, parse_and_validate, planar_reduce
from linkinv.polynomials import (
    bracket_state_sum,
    conway_via_skein,
    determinant_via_bracket,
    evaluate_at_zeta8,
    kauffman_bracket,
    potential_bundle,
    state_circle_count,
    traczyk_signature,
    turks_head_det,
)
from linkinv.quasi_alt import certificate_is_valid, pretzel_qa_expected, qa_certify, thm71_check
from linkinv.rings import LaurentPoly, Zeta8, i_power
from linkinv.seifert import seifert_matrix
from linkinv.signatures import (
    UnitDirection,
    classical_signature,
    conway_of,
    omega_at_i_psi,
    phase_consistency,
    signature_function,
    tl_signature,
)
from linkinv.diagram import is_alternating

from corpus import corpus, knots, pretzel_cases, reduced_alternating, small_multigraphs, two_white_regions
from oracles import fraction_det, tree_count_deletion_contraction

TOLERANCE = 0  # exact arithmetic throughout
TIME_BUDGET = 10.0  # seconds per criterion

RESULTS: dict = {}
CRITERIA: list = []


def criterion(number: int, title: str):
    def wrap(fn):
        CRITERIA.append((number, title, fn))
        return fn
    return wrap


class Failed(AssertionError):
    pass


def check(cond, message):
    if not cond:
        raise Failed(message)


def z_poly(coeffs):
    return LaurentPoly({2 * k: c for k, c in enumerate(coeffs) if c}, "z")


def abs_det(d):
    return math.isqrt(link_determinant(d).norm())


@criterion(1, "Kirchhoff matrix and matrix-tree theorem")
def kirchhoff_criterion():
    g = SignedPlanarGraph(3, ((0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 2, 1)))
    check(kirchhoff(g)["kirchhoff"] == [[3, -2], [-2, 3]], "example Kirchhoff matrix")
    check(spanning_tree_count(g) == 5, "example tree count")
    count = 0
    for n, edges in small_multigraphs():
        h = SignedPlanarGraph(n, tuple((u, v, 1) for u, v in edges))
        check(spanning_tree_count(h) == tree_count_deletion_contraction(n, edges), f"graph {n} {edges}")
        count += 1
    return f"{count} graphs"


@criterion(2, "T(2,k) Goeritz data, signature and determinant for k = 1..8")
def torus_criterion():
    for k in range(1, 9):
        d = torus2(k)
        col = two_white_regions(d)
        g = goeritz_data(d, col)
        check(g.G == [[k]] and g.mu == k, f"G, mu for k={k}")
        check(signature_and_nullity(d) == {"sigma": 1 - k, "nullity": 0}, f"sigma for k={k}")
        want = i_power(1 - k) * k
        check(link_determinant(d) == want, f"Goeritz Det for k={k}")
        check(determinant_via_bracket(d) == want, f"bracket Det for k={k}")
    return "k = 1..8"


@criterion(3, "Turk's head determinants and signatures")
def turks_head_criterion():
    want = [5, 16, 45, 121, 320, 841, 2205]
    for n, w in zip(range(2, 9), want):
        check(turks_head_det(n) == w, f"closed form n={n}")
        d = turks_head(n)
        check(signature_and_nullity(d)["sigma"] == 0, f"sigma n={n}")
        if n <= 6:
            check(math.isqrt(determinant_via_bracket(d).norm()) == w, f"bracket n={n}")
    check(kauffman_bracket(turks_head(4)) == bracket_state_sum(turks_head(4)), "state sum Th_4")
    return "n = 2..8"


@criterion(4, "Seifert matrices of the trefoil and figure-eight; det(V - V^T) = 1 on knots")
def seifert_criterion():
    V3, V8 = seifert_matrix(torus2(3)).V, seifert_matrix(turks_head(2)).V
    check(potential_bundle(V3)["conway"] == z_poly([1, 1]) and classical_signature(V3) == -2, "trefoil")
    check(potential_bundle(V8)["conway"] == z_poly([1, -1]) and classical_signature(V8) == 0, "figure-eight")
    ks = knots()
    for name, d in ks:
        V = seifert_matrix(d).V
        S = [[V[i][j] - V[j][i] for j in range(len(V))] for i in range(len(V))]
        check(fraction_det(S) == 1, f"det(V - V^T) for {name}")
    return f"{len(ks)} knots"


def _conway_any(d):
    return conway_of(seifert_matrix(d).V) if d.is_connected_projection else conway_via_skein(d)


@criterion(5, "Skein oracle equals the Seifert pipeline; skein relation at every crossing")
def skein_criterion():
    z = LaurentPoly.monomial(1, 1, "z")
    crossings = 0
    for name, d in corpus():
        check(conway_via_skein(d) == potential_bundle(seifert_matrix(d))["conway"], f"pipelines for {name}")
        for p in range(d.crossing_count):
            other = crossing_change(d, p)
            plus, minus = (d, other) if d.sign(p) == 1 else (other, d)
            zero = smooth_crossing(d, p, "oriented")
            check(_conway_any(plus) - _conway_any(minus) == z * _conway_any(zero), f"skein at {name} p={p}")
            crossings += 1
    return f"{len(corpus())} fixtures, {crossings} crossings"


@criterion(6, "Tristram-Levine signature functions")
def tl_criterion():
    f = signature_function([[-1, 0], [1, -1]])
    lo, hi = f.jumps[0].interval
    check(len(f.jumps) == 1 and lo <= Fraction(1, 2) <= hi, "trefoil jump at 1/2")
    check(f.interval_values == (0, -2) and f.jumps[0].value == -1, "trefoil values")
    f8 = signature_function(seifert_matrix(turks_head(2)).V)
    check(f8.jumps == () and f8.interval_values == (0,), "figure-eight is zero")
    f62 = signature_function(seifert_matrix(braid_closure(3, [-1, 2, -1, 2, 2, 2])).V)
    root = 0.5 * math.sqrt((1 + math.sqrt(5)) / 2)
    lo, hi = f62.jumps[0].interval
    check(len(f62.jumps) == 1 and float(lo) < root < float(hi), "6_2 jump location")
    g = lambda r: 16 * r ** 4 - 4 * r ** 2 - 1
    check(g(lo) * g(hi) < 0, "6_2 interval brackets the exact root")
    check(f62.interval_values == (0, -2) and f62.jumps[0].value == -1, "6_2 values")
    for name, d in corpus():
        check(tl_signature(seifert_matrix(d).V, UnitDirection(0, 1))["sigma"] == 0, f"sigma_i for {name}")
    return f"6_2 jump in [{float(lo):.6f}, {float(hi):.6f}]"


PAIRS = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2), (1, 4),
         (4, 1), (3, 4), (4, 3), (1, 5), (5, 1), (2, 5), (5, 2), (1, 7), (7, 3), (5, 6)]


@criterion(7, "Phase law, Murasugi congruence and pretzel(5,7,-3)")
def phase_criterion():
    directions = [UnitDirection(a, b) for a, b in PAIRS]
    checked = 0
    for name, d in corpus():
        V = seifert_matrix(d).V
        for psi in directions:
            if omega_at_i_psi(V, psi) == (0, 0):
                continue
            check(phase_consistency(V, psi), f"phase law for {name} at {psi}")
            checked += 1
    for name, d in knots():
        check((signature_and_nullity(d)["sigma"] - abs_det(d) + 1) % 4 == 0, f"Murasugi for {name}")
    P = seifert_matrix(pretzel(5, 7, -3)).V
    check(conway_of(P) == LaurentPoly.const(1, "z") and classical_signature(P) == 0, "pretzel(5,7,-3)")
    fP = signature_function(P)
    check(fP.jumps == () and fP.interval_values == (0,), "pretzel(5,7,-3) function")
    return f"{checked} phase evaluations"


@criterion(8, "Traczyk formulas and the state-circle identity on reduced alternating fixtures")
def traczyk_criterion():
    rows = reduced_alternating(9)
    for name, d in rows:
        r = traczyk_signature(d)
        check(r["from_tree"] == r["from_states"] == signature_and_nullity(d)["sigma"], f"Traczyk for {name}")
        check(Fraction(r["writhe"] + r["s_plus"] - r["s_minus"], 2) == r["d_plus"] - r["d_minus"],
              f"identity for {name}")
    return f"{len(rows)} diagrams"


@criterion(9, "Alternating structure: additivity, tree count and bracket phase")
def alternating_criterion():
    rows = [(n, d) for n, d in corpus() if is_alternating(d) and d.is_connected_projection]
    for name, d in rows:
        det = abs_det(d)
        check(det == spanning_tree_count(tait_graph(d)[0]), f"tree count for {name}")
        B, W = state_circle_count(d, "s-"), state_circle_count(d, "s+")
        check(evaluate_at_zeta8(kauffman_bracket(d), W - B) == Zeta8.gen_power(0) * det, f"phase for {name}")
        for p in range(d.crossing_count):
            a = abs_det(smooth_crossing(d, p, "zero"))
            b = abs_det(smooth_crossing(d, p, "infinity"))
            check(det == a + b, f"additivity for {name} p={p}")
    return f"{len(rows)} diagrams"


@criterion(10, "Determinant additivity is equivalent to the signature conditions")
def thm71_criterion():
    checked = 0
    for name, d in corpus():
        for p in range(d.crossing_count):
            try:
                r = thm71_check(d, p)
            except ValueError:
                continue
            check(r["a_holds"] == r["b_holds"], f"{name} p={p}: {r['details']}")
            checked += 1
    return f"{checked} crossings"


@criterion(11, "Quasi-alternating certification")
def qa_criterion():
    r = qa_certify(torus2(3))
    check(r.status == "certified" and (r.qacti_lower, r.qacti_upper) == (2, 2), "trefoil at depth 2")
    rows = [(n, d) for n, d in reduced_alternating(8)]
    for name, d in rows:
        r = qa_certify(d)
        check(r.status == "certified", f"{name} certified")
        check(r.qacti_lower <= r.qacti_upper <= r.det_bound_upper, f"sandwich for {name}")
        check(certificate_is_valid(r.certificate, d), f"certificate for {name}")
    certified = 0
    for (e, ps, qs), d, det in pretzel_cases():
        r = qa_certify(d, depth_budget=7, node_budget=300)
        if r.status == "certified":
            certified += 1
            check(pretzel_qa_expected(e, ps, qs), f"pretzel {(e, ps, qs)} certified but classified non-QA")
            check(r.qacti_lower <= r.qacti_upper <= r.det_bound_upper or det == 1, f"sandwich {(e, ps, qs)}")
    return f"{len(rows)} alternating, {certified} pretzels certified"


@criterion(12, "Lattice words and planar reduction")
def lattice_criterion():
    t = parse_and_validate("x^2 z^3 y^2 x^-1 z^-2 y^-3 z x^2 y^2 x^-3 y^-1 z^-2")
    check(len(t) == 24, "trefoil word has 24 edges")
    check(len(parse_and_validate("x y X Y")) == 4, "unknot word has 4 edges")
    for a in range(1, 5):
        for b in range(1, 5):
            w = parse_and_validate(f"x^{a} y^{b} x^-{a} y^-{b}")
            areas = [area(w)] + [s["area"] for s in planar_reduce(w)]
            check(all(x >= y for x, y in zip(areas, areas[1:])) and areas[-1] == 1, f"{a}x{b} rectangle")
    return "rectangles up to 4x4"


def run_criterion(number: int) -> dict:
    _, title, fn = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        detail = fn()
        ok, message = True, detail
    except Failed as exc:
        ok, message = False, str(exc)
    elapsed = time.perf_counter() - start
    if ok and elapsed > TIME_BUDGET:
        ok, message = False, f"took {elapsed:.1f} s, budget {TIME_BUDGET:.0f} s"
    RESULTS[number] = {"title": title, "ok": ok, "detail": message, "seconds": elapsed}
    return RESULTS[number]


def summary_lines() -> list:
    lines = []
    for number, title, _ in sorted(CRITERIA):
        r = RESULTS.get(number)
        if r is None:
            lines.append(f"criterion {number:2d}: NOT RUN  {title}")
        else:
            verdict = "PASS" if r["ok"] else "FAIL"
            lines.append(f"criterion {number:2d}: {verdict}  {title} ({r['detail']}; {r['seconds']:.2f} s)")
    return lines


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number):
    r = run_criterion(number)
    assert r["ok"], r["detail"]


if __name__ == "__main__":
    for number, _, _ in CRITERIA:
        run_criterion(number)
    print("\n".join(summary_lines()))
