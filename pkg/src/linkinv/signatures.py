"""Tristram-Levine signatures at unit-circle parameters.

The parameter is psi on the unit circle with Re psi >= 0, and xi = -psi^2.
For Re psi > 0 the Hermitian form (1 - conj xi) V + (1 - xi) V^T is
2 Re(psi) times conj(psi) V + psi V^T, so signatures are read off the
integer form (a - bi) V + (a + bi) V^T for psi = (a + bi)/|a + bi|.  At
psi = i that form is i(V^T - V), whose spectrum is symmetric.

Omega(i psi) is Conway at z = -2i Re psi, so for a knot the signature can
only jump where Conway vanishes at z^2 = -4 (Re psi)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .linalg import isolate_roots, refine_root, symmetric_signature
from .polynomials import omega_to_conway
from .linalg import laurent_det
from .rings import GaussInt, LaurentPoly


@dataclass(frozen=True)
class UnitDirection:
    """psi = (a + bi)/sqrt(a^2 + b^2), reduced, with a > 0 or (a = 0 and b > 0)."""

    a: int
    b: int

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if a == 0 and b == 0:
            raise ValueError("direction (0, 0) is not on the unit circle")
        g = gcd(a, b)
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def re_squared(self) -> Fraction:
        return Fraction(self.a * self.a, self.a * self.a + self.b * self.b)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}


def _matrix(V) -> list:
    return V.V if hasattr(V, "V") else V


def hermitian_form(V, psi: UnitDirection) -> list:
    V = _matrix(V)
    n = len(V)
    w, wb = GaussInt(psi.a, psi.b), GaussInt(psi.a, -psi.b)
    return [[wb * V[i][j] + w * V[j][i] for j in range(n)] for i in range(n)]


def tl_signature(V, psi: UnitDirection) -> dict:
    V = _matrix(V)
    if any(len(row) != len(V) for row in V):
        raise ValueError("Seifert matrix must be square")
    if not V:
        return {"sigma": 0, "nullity": 0}
    return symmetric_signature(hermitian_form(V, psi))


def classical_signature(V) -> int:
    return tl_signature(V, UnitDirection(1, 0))["sigma"]


def conway_of(V) -> LaurentPoly:
    V = _matrix(V)
    if not V:
        return LaurentPoly.const(1, "z")
    return omega_to_conway(laurent_det(V))


# ---------------------------------------------------------------------------
# the step function for knots


@dataclass(frozen=True)
class Jump:
    poly: tuple  # integer coefficients in r = Re psi, constant term first
    interval: tuple  # (lo, hi) isolating the root, Fractions
    multiplicity: int
    value: int | tuple  # (min, max) when the averaging rule does not apply
    flagged: bool


@dataclass(frozen=True)
class SignatureFunction:
    jumps: tuple
    interval_values: tuple  # one more than jumps, ordered by increasing Re psi
    samples: tuple  # the direction used on each open interval

    def to_json(self) -> dict:
        def q(x):
            return str(x)

        return {
            "jumps": [{"poly": list(j.poly), "interval": [q(j.interval[0]), q(j.interval[1])],
                       "multiplicity": j.multiplicity,
                       "value": list(j.value) if isinstance(j.value, tuple) else j.value,
                       "flagged": j.flagged} for j in self.jumps],
            "interval_values": list(self.interval_values),
            "samples": [s.to_json() for s in self.samples],
        }


def jump_polynomial(conway: LaurentPoly) -> list:
    """Conway at z^2 = -4 r^2 as integer coefficients in r, constant term first."""
    if any(e % 2 for e, _ in conway.items()):
        raise ValueError("Conway polynomial has odd powers; not a knot")
    top = conway.max_degree() if not conway.is_zero() else 0
    out = [0] * (top + 1)
    for e, c in conway.items():
        out[e] = c * (-4) ** (e // 2)
    return out


def _direction_between(lo: Fraction, hi: Fraction | None) -> UnitDirection:
    """A rational direction with lo < Re psi < hi (hi None meaning 1)."""
    # Re psi = t / sqrt(1 + t^2) with t = a / b, monotone in t
    L = lo * lo / (1 - lo * lo)
    U = None if hi is None or hi >= 1 else hi * hi / (1 - hi * hi)
    m = 0
    while True:
        scale = 4 ** m
        k = isqrt((L * scale).numerator // (L * scale).denominator) + 1
        t2 = Fraction(k * k, scale)
        if t2 > L and (U is None or t2 < U):
            return UnitDirection(k, 2 ** m)
        m += 1


def signature_function(V) -> SignatureFunction:
    V = _matrix(V)
    conway = conway_of(V)
    det_value = sum(c * (-4) ** (e // 2) for e, c in conway.items() if e % 2 == 0)
    if any(e % 2 for e, _ in conway.items()) or det_value % 2 == 0:
        raise ValueError("signature_function needs a knot")
    poly = jump_polynomial(conway)
    roots = isolate_roots(poly, Fraction(0), Fraction(1)) if len(poly) > 1 else []
    # refine until the isolating intervals are strictly apart and inside (0, 1)
    eps = Fraction(1, 16)
    while True:
        ok = all(a > 0 and b < 1 for a, b, _ in roots)
        ok = ok and all(roots[i][1] < roots[i + 1][0] for i in range(len(roots) - 1))
        if ok:
            break
        roots = [(*refine_root(poly, a, b, eps), k) for a, b, k in roots]
        eps /= 16
    edges = [Fraction(0)] + [x for a, b, _ in roots for x in (a, b)] + [Fraction(1)]
    samples, values = [], []
    for i in range(len(roots) + 1):
        lo, hi = edges[2 * i], edges[2 * i + 1]
        psi = _direction_between(lo, hi)
        samples.append(psi)
        values.append(tl_signature(V, psi)["sigma"])
    jumps = []
    for i, (a, b, k) in enumerate(roots):
        left, right = values[i], values[i + 1]
        if k == 1 and abs(left - right) == 2:
            jumps.append(Jump(tuple(poly), (a, b), k, (left + right) // 2, False))
        else:
            jumps.append(Jump(tuple(poly), (a, b), k, (min(left, right), max(left, right)), True))
    return SignatureFunction(tuple(jumps), tuple(values), tuple(samples))


# ---------------------------------------------------------------------------
# phase law


def omega_at_i_psi(V, psi: UnitDirection) -> tuple[Fraction, Fraction]:
    """Omega(i psi) = E + i O / sqrt(a^2 + b^2), returned as the rationals (E, O)."""
    conway = conway_of(V)
    r2 = psi.a * psi.a + psi.b * psi.b
    z2 = Fraction(-4 * psi.a * psi.a, r2)
    even = odd = Fraction(0)
    for e, c in conway.items():
        if e % 2 == 0:
            even += c * z2 ** (e // 2)
        else:
            # z = -2i a / r
            odd += c * z2 ** (e // 2) * (-2 * psi.a)
    return even, odd


def phase_consistency(V, psi: UnitDirection) -> bool:
    even, odd = omega_at_i_psi(V, psi)
    if even == 0 and odd == 0:
        raise ValueError("Omega vanishes at i psi; this is a jump point")
    if even and odd:
        return False
    phase = GaussInt((even > 0) - (even < 0), (odd > 0) - (odd < 0))
    sigma = tl_signature(V, psi)["sigma"]
    return GaussInt(0, 1) ** (sigma % 4) == phase
