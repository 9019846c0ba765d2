"""Exact linear algebra over Z and Z[i].

Determinants and characteristic polynomials are delegated to sympy's
DomainMatrix (fraction-free elimination and Berkowitz), which keeps every
intermediate an exact integer.  Signatures are then read off the
characteristic polynomial by Descartes' rule, exact for real-rooted
polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import Poly, Rational, symbols
from sympy.polys.domains import ZZ, ZZ_I
from sympy.polys.matrices import DomainMatrix

from .rings import GaussInt, LaurentPoly

Matrix = list  # list of rows


def _is_gauss(M) -> bool:
    return any(isinstance(v, GaussInt) for row in M for v in row)


def _to_domain(M) -> DomainMatrix:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if _is_gauss(M):
        rows = [[ZZ_I(GaussInt.coerce(v).re, GaussInt.coerce(v).im) for v in row] for row in M]
        return DomainMatrix(rows, (n, n), ZZ_I)
    return DomainMatrix([[ZZ(int(v)) for v in row] for row in M], (n, n), ZZ)


def _from_domain_elt(v):
    if hasattr(v, "x") and hasattr(v, "y"):
        return GaussInt(int(v.x), int(v.y))
    return int(v)


def det(M: Sequence[Sequence]) -> int | GaussInt:
    """Exact determinant of an integer or Gaussian-integer matrix (1 for 0x0)."""
    if len(M) == 0:
        return 1
    return _from_domain_elt(_to_domain(M).det())


def charpoly(M: Sequence[Sequence]) -> list:
    """Coefficients of det(t*I - M), leading coefficient first."""
    if len(M) == 0:
        return [1]
    return [_from_domain_elt(c) for c in _to_domain(M).charpoly()]


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def conj_transpose(M):
    return [[GaussInt.coerce(v).conj() for v in col] for col in zip(*M)] if M else []


def is_symmetric(M) -> bool:
    return all(M[i][j] == M[j][i] for i in range(len(M)) for j in range(i))


def is_hermitian(M) -> bool:
    n = len(M)
    for i in range(n):
        for j in range(i, n):
            if GaussInt.coerce(M[i][j]) != GaussInt.coerce(M[j][i]).conj():
                return False
    return True


def _sign_changes(coeffs: Sequence[int]) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(M) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric or Hermitian matrix."""
    if _is_gauss(M):
        if not is_hermitian(M):
            raise ValueError("matrix is not Hermitian")
    elif not is_symmetric(M):
        raise ValueError("matrix is not symmetric")
    n = len(M)
    coeffs = []
    for c in charpoly(M):
        if isinstance(c, GaussInt):
            if c.im != 0:
                raise ArithmeticError("Hermitian characteristic polynomial is not real")
            c = c.re
        coeffs.append(c)
    zero = 0
    while zero < n and coeffs[n - zero] == 0:
        zero += 1
    trimmed = coeffs[: n + 1 - zero]
    pos = _sign_changes(trimmed)
    # roots of p(-t): flip sign of odd-degree terms; degree of term k is n - k
    neg = _sign_changes([c if (n - k) % 2 == 0 else -c for k, c in enumerate(trimmed)])
    if pos + neg + zero != n:
        raise ArithmeticError("characteristic polynomial is not real-rooted")
    return pos, neg, zero


def symmetric_signature(M) -> dict:
    """Signature and nullity of a symmetric integer (or Hermitian Gaussian) matrix."""
    pos, neg, zero = inertia(M)
    return {"sigma": pos - neg, "nullity": zero}


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


def laurent_det(V) -> LaurentPoly:
    """det(x V - x^{-1} V^T) as a Laurent polynomial in x.

    Computed as x^{-n} det(x^2 V - V^T) over Z[x].
    """
    n = len(V)
    if any(len(row) != n for row in V):
        raise ValueError("Seifert matrix is not square")
    if n == 0:
        return LaurentPoly.const(1, "x")
    R = ZZ["x"]
    x = R.gens[0]
    rows = [[x ** 2 * int(V[i][j]) - int(V[j][i]) for j in range(n)] for i in range(n)]
    d = DomainMatrix(rows, (n, n), R).det()
    terms = {int(m[0]) - n: int(c) for m, c in d.to_dict().items()}
    return LaurentPoly(terms, "x")


_w = symbols("w")


def isolate_roots(coeffs: Sequence[int], lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction, int]]:
    """Isolating intervals (a, b, multiplicity) for real roots of sum c_k w^k in [lo, hi].

    Intervals are disjoint, each contains exactly one distinct root; a
    degenerate interval a == b means the root is rational and exact.
    """
    if not any(coeffs):
        raise ValueError("zero polynomial has no isolated roots")
    p = Poly(list(reversed([int(c) for c in coeffs])), _w)
    if p.degree() <= 0:
        return []
    out = []
    for (a, b), k in p.intervals(inf=Rational(lo.numerator, lo.denominator),
                                 sup=Rational(hi.numerator, hi.denominator)):
        out.append((Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)), int(k)))
    return out


def refine_root(coeffs: Sequence[int], a: Fraction, b: Fraction, eps: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval to width < eps."""
    if a == b:
        return a, b
    # refinement needs a square-free polynomial; the distinct roots are the same
    p = Poly(list(reversed([int(c) for c in coeffs])), _w).sqf_part()
    ra, rb = p.refine_root(Rational(a.numerator, a.denominator), Rational(b.numerator, b.denominator),
                           eps=Rational(eps.numerator, eps.denominator))
    return Fraction(int(ra.p), int(ra.q)), Fraction(int(rb.p), int(rb.q))
