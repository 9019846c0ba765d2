"""Exact rings used throughout: Gaussian integers, Z[zeta_8] and Laurent polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True)
class GaussInt:
    re: int = 0
    im: int = 0

    @staticmethod
    def coerce(x) -> "GaussInt":
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return GaussInt(x, 0)
        raise TypeError(f"cannot coerce {x!r} to GaussInt")

    def __add__(self, other):
        o = GaussInt.coerce(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussInt.coerce(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussInt.coerce(other) - self

    def __mul__(self, other):
        o = GaussInt.coerce(other)
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Gaussian integer")
        result, base = GaussInt(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def exact_div(self, other) -> "GaussInt":
        """Division that must be exact (used by fraction-free elimination)."""
        o = GaussInt.coerce(other)
        num = self * o.conj()
        n = o.norm()
        if num.re % n or num.im % n:
            raise ArithmeticError(f"{self} is not divisible by {o}")
        return GaussInt(num.re // n, num.im // n)

    def unit_phase(self) -> int | None:
        """k in 0..3 with self = i^k * (positive integer), or None."""
        if self.im == 0 and self.re > 0:
            return 0
        if self.re == 0 and self.im > 0:
            return 1
        if self.im == 0 and self.re < 0:
            return 2
        if self.re == 0 and self.im < 0:
            return 3
        return None

    def to_json(self) -> dict:
        return {"re": self.re, "im": self.im}

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"


I = GaussInt(0, 1)


def i_power(k: int) -> GaussInt:
    return [GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1)][k % 4]


@dataclass(frozen=True)
class Zeta8:
    """Element c0 + c1*A + c2*A^2 + c3*A^3 of Z[A], A^4 = -1.

    A is the eighth root of unity with A^2 = -i, the value at which the
    bracket specialises to the link determinant.
    """

    c: tuple = (0, 0, 0, 0)

    @staticmethod
    def coerce(x) -> "Zeta8":
        if isinstance(x, Zeta8):
            return x
        if isinstance(x, int):
            return Zeta8((x, 0, 0, 0))
        raise TypeError(f"cannot coerce {x!r} to Zeta8")

    @staticmethod
    def gen_power(k: int) -> "Zeta8":
        k %= 8
        sign = -1 if k >= 4 else 1
        c = [0, 0, 0, 0]
        c[k % 4] = sign
        return Zeta8(tuple(c))

    def __add__(self, other):
        o = Zeta8.coerce(other)
        return Zeta8(tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = Zeta8.coerce(other)
        return Zeta8(tuple(a - b for a, b in zip(self.c, o.c)))

    def __neg__(self):
        return Zeta8(tuple(-a for a in self.c))

    def __mul__(self, other):
        o = Zeta8.coerce(other)
        out = [0, 0, 0, 0]
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                k = i + j
                if k >= 4:
                    out[k - 4] -= a * b
                else:
                    out[k] += a * b
        return Zeta8(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use gen_power for negative powers of A")
        result, base = Zeta8((1, 0, 0, 0)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == (other, 0, 0, 0)
        if isinstance(other, Zeta8):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def to_gauss(self) -> GaussInt:
        c0, c1, c2, c3 = self.c
        if c1 or c3:
            raise ArithmeticError(f"{self} does not lie in Z[i]")
        # A^2 = -i
        return GaussInt(c0, -c2)


class LaurentPoly:
    """Integer Laurent polynomial in one named variable.

    ``var`` is a tag only ('x', 'z', 't_half', 'A'); arithmetic between
    different tags is refused.
    """

    __slots__ = ("terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "z"):
        self.terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self.var = var

    @classmethod
    def const(cls, c: int, var: str = "z") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: int, c: int = 1, var: str = "z") -> "LaurentPoly":
        return cls({e: c}, var)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], var: str = "z", low: int = 0) -> "LaurentPoly":
        return cls({low + k: c for k, c in enumerate(coeffs)}, var)

    def _check(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.var != self.var and other.terms and self.terms:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return other

    def __add__(self, other):
        o = self._check(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly({-e * -n: c ** -n}, self.var)
        result = LaurentPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms and (self.var == other.var or not self.terms)
        return NotImplemented

    def __hash__(self):
        return hash((self.var, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_degree(self) -> int:
        return max(self.terms) if self.terms else 0

    def coeff(self, e: int) -> int:
        return self.terms.get(e, 0)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def substitute_power(self, k: int, var: str | None = None) -> "LaurentPoly":
        """p(v) -> p(v^k)."""
        return LaurentPoly({e * k: c for e, c in self.terms.items()}, var or self.var)

    def with_var(self, var: str) -> "LaurentPoly":
        return LaurentPoly(self.terms, var)

    def evaluate(self, value, one=1, inverse=None):
        """Horner-free evaluation in any ring supporting + and *.

        Negative exponents need ``inverse`` (the ring inverse of ``value``).
        """
        total = one * 0
        for e, c in self.terms.items():
            if e >= 0:
                total = total + (value ** e) * c
            else:
                if inverse is None:
                    raise ValueError("negative exponent needs an inverse")
                total = total + (inverse ** (-e)) * c
        return total

    def evaluate_fraction(self, q: Fraction) -> Fraction:
        q = Fraction(q)
        return sum((Fraction(c) * q ** e for e, c in self.terms.items()), Fraction(0))

    def items(self):
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {"var": self.var, "terms": [[e, c] for e, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data["terms"]}, data["var"])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*{self.var}")
            else:
                parts.append(f"{c}*{self.var}^{e}")
        return " + ".join(parts)
