from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from linkinv.linalg import charpoly, det, inertia, isolate_roots, laurent_det, refine_root, symmetric_signature
from linkinv.rings import GaussInt, LaurentPoly

from oracles import float_inertia, fraction_det, hermitian_as_complex


def square(n_max=5, lo=-6, hi=6):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


@given(square())
def test_det_matches_rational_elimination(M):
    assert det(M) == fraction_det(M)


def test_det_of_empty_matrix_is_one():
    assert det([]) == 1


@given(square(4, -3, 3))
def test_gaussian_det_expands_by_real_and_imaginary_parts(M):
    G = [[GaussInt(x, x % 3 - 1) for x in row] for row in M]
    value = det(G)
    expect = np.linalg.det(np.array(hermitian_as_complex(G)))
    assert abs(complex(value.re, value.im) - expect) < 1e-6 * max(1, abs(expect))


@settings(max_examples=80)
@given(square(5, -4, 4))
def test_inertia_matches_numerical_eigenvalues(M):
    S = [[M[i][j] + M[j][i] for j in range(len(M))] for i in range(len(M))]
    assert inertia(S) == float_inertia(S)


@settings(max_examples=60)
@given(square(4, -3, 3), square(4, -3, 3))
def test_hermitian_inertia_matches_numerical_eigenvalues(R, Q):
    n = min(len(R), len(Q))
    H = [[GaussInt(R[i][j] + R[j][i], Q[i][j] - Q[j][i]) for j in range(n)] for i in range(n)]
    assert inertia(H) == float_inertia(hermitian_as_complex(H))


def test_charpoly_and_signature_small():
    assert charpoly([[2, 1], [1, 2]]) == [1, -4, 3]
    assert symmetric_signature([[0, 1], [1, 0]]) == {"sigma": 0, "nullity": 0}
    assert symmetric_signature([[1, 1], [1, 1]]) == {"sigma": 1, "nullity": 1}


def test_laurent_det_of_trefoil_matrix():
    # det(xV - x^-1 V^T) for V = [[-1, 0], [1, -1]]
    assert laurent_det([[-1, 0], [1, -1]]) == LaurentPoly({2: 1, 0: -1, -2: 1}, "x")


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_root_isolation_finds_the_distinct_numerical_roots(coeffs):
    roots = isolate_roots(coeffs, Fraction(-10), Fraction(10))
    numeric = sorted(r.real for r in np.roots(list(reversed(coeffs))) if abs(r.imag) < 1e-3 and -10 <= r.real <= 10)
    distinct = [x for k, x in enumerate(numeric) if k == 0 or x - numeric[k - 1] > 1e-2]
    assert len(roots) == len(distinct)
    for a, b, _ in roots:
        lo, hi = refine_root(coeffs, a, b, Fraction(1, 10 ** 6))
        assert any(float(lo) - 1e-2 <= x <= float(hi) + 1e-2 for x in distinct)
