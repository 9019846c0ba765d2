"""Lattice knots: cyclic words over x, y, z and their inverses, the square
moves, and area-decreasing reduction of planar lattice knots.

Positions index the traced polygon v_0, ..., v_{n-1}, where letter i runs
from v_i to v_{i+1}.  DH1 at vertex i moves v_i to the opposite corner of
the square spanned by its two edges; DH2 at edge i pushes the edge one
step in a perpendicular direction; DH2_inv at i removes the bump formed by
letters i, i+1, i+2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

AXES = "xyz"
UNIT = {
    "x": (1, 0, 0), "X": (-1, 0, 0),
    "y": (0, 1, 0), "Y": (0, -1, 0),
    "z": (0, 0, 1), "Z": (0, 0, -1),
}
LETTER = {v: k for k, v in UNIT.items()}
_TOKEN = re.compile(r"\s*([xyzXYZ])(?:\s*\^\s*(-?\d+)|(⁻¹))?\s*")


class LatticeError(ValueError):
    pass


def _add(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def _neg(u):
    return (-u[0], -u[1], -u[2])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


@dataclass(frozen=True)
class LatticeWord:
    letters: tuple  # single characters from UNIT
    base: tuple = (0, 0, 0)

    @property
    def vertices(self) -> list:
        out = [self.base]
        for ch in self.letters[:-1]:
            out.append(_add(out[-1], UNIT[ch]))
        return out

    def __len__(self):
        return len(self.letters)

    def axis_stats(self) -> dict:
        return {a: sum(1 for ch in self.letters if ch.lower() == a) for a in AXES}

    def plane_axes(self) -> tuple:
        return tuple(a for a, k in self.axis_stats().items() if k)

    def to_text(self) -> str:
        out = []
        for ch in self.letters:
            if out and out[-1][0] == ch:
                out[-1][1] += 1
            else:
                out.append([ch, 1])
        return " ".join(ch if k == 1 else f"{ch}^{k}" for ch, k in out)

    def canonical(self) -> tuple:
        """Least rotation of the letters; equal for the same polygon up to translation."""
        n = len(self.letters)
        return min(self.letters[i:] + self.letters[:i] for i in range(n))

    def to_json(self) -> dict:
        return {"word": self.to_text(), "length": len(self), "axes": self.axis_stats(),
                "vertices": [list(v) for v in self.vertices]}


def validate(w: LatticeWord) -> LatticeWord:
    if not w.letters:
        raise LatticeError("empty word")
    end = w.base
    for ch in w.letters:
        end = _add(end, UNIT[ch])
    if end != w.base:
        raise LatticeError("word is not closed: exponent sums are not all zero")
    verts = w.vertices
    seen = {}
    for i, v in enumerate(verts):
        if v in seen:
            raise LatticeError(f"polygon is not simple: vertex {v} is visited at steps {seen[v]} and {i}")
        seen[v] = i
    if len(verts) < 4:
        raise LatticeError("a simple closed lattice polygon has at least 4 edges")
    return w


def parse_and_validate(text: str) -> LatticeWord:
    letters = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise LatticeError(f"cannot read lattice word at column {pos + 1}: {text[pos:pos + 10]!r}")
        ch, exp, inv = m.group(1), m.group(2), m.group(3)
        k = -1 if inv else int(exp) if exp is not None else 1
        if k < 0:
            ch = ch.swapcase()
            k = -k
        letters.extend(ch * k)
        pos = m.end()
    return validate(LatticeWord(tuple(letters)))


# ---------------------------------------------------------------------------
# moves


def _rotate(w: LatticeWord, i: int) -> LatticeWord:
    """The same polygon traced from v_i."""
    n = len(w)
    i %= n
    return LatticeWord(w.letters[i:] + w.letters[:i], w.vertices[i])


def dh1(w: LatticeWord, i: int) -> LatticeWord:
    n = len(w)
    verts = w.vertices
    a, b = UNIT[w.letters[(i - 1) % n]], UNIT[w.letters[i % n]]
    if _dot(a, b) != 0:
        raise LatticeError(f"DH1 needs a corner at vertex {i}")
    corner = _add(verts[(i - 1) % n], b)
    if corner in set(verts):
        raise LatticeError("DH1 square is obstructed")
    r = _rotate(w, i - 1)
    out = LatticeWord((r.letters[1], r.letters[0]) + r.letters[2:], r.base)
    return validate(out)


def dh2(w: LatticeWord, i: int, direction: str) -> LatticeWord:
    if direction not in UNIT:
        raise LatticeError(f"unknown direction {direction!r}")
    n = len(w)
    e, dvec = UNIT[w.letters[i % n]], UNIT[direction]
    if _dot(e, dvec) != 0:
        raise LatticeError("DH2 direction must be perpendicular to the edge")
    verts = w.vertices
    p, q = _add(verts[i % n], dvec), _add(verts[(i + 1) % n], dvec)
    vs = set(verts)
    if p in vs or q in vs:
        raise LatticeError("DH2 square is obstructed")
    r = _rotate(w, i)
    out = LatticeWord((direction, r.letters[0], LETTER[_neg(dvec)]) + r.letters[1:], r.base)
    return validate(out)


def dh2_inv(w: LatticeWord, i: int) -> LatticeWord:
    n = len(w)
    if n <= 4:
        raise LatticeError("DH2_inv would leave fewer than 4 edges")
    a, b, c = (UNIT[w.letters[(i + k) % n]] for k in range(3))
    if c != _neg(a) or _dot(a, b) != 0:
        raise LatticeError(f"letters {i}..{i + 2} do not bound three sides of a unit square")
    r = _rotate(w, i)
    return validate(LatticeWord((r.letters[1],) + r.letters[3:], r.base))


def apply_move(w: LatticeWord, move: str, position: int, direction: str | None = None) -> LatticeWord:
    if move == "DH1":
        return dh1(w, position)
    if move == "DH2":
        if direction is None:
            raise LatticeError("DH2 needs a direction")
        return dh2(w, position, direction)
    if move == "DH2_inv":
        return dh2_inv(w, position)
    raise LatticeError(f"unknown move {move!r}")


# ---------------------------------------------------------------------------
# planar reduction


def area(w: LatticeWord) -> int:
    """Enclosed area of a planar word (shoelace formula)."""
    axes = w.plane_axes()
    if len(axes) > 2:
        raise LatticeError("word is not planar")
    if len(axes) < 2:
        return 0
    i, j = AXES.index(axes[0]), AXES.index(axes[1])
    verts = w.vertices
    twice = 0
    for k, v in enumerate(verts):
        u = verts[(k + 1) % len(verts)]
        twice += v[i] * u[j] - u[i] * v[j]
    return abs(twice) // 2


def _candidates(w: LatticeWord):
    n = len(w)
    for i in range(n):
        yield ("DH2_inv", i)
    for i in range(n):
        yield ("DH1", i)


def planar_reduce(w: LatticeWord) -> list:
    """Area-decreasing moves down to the unit square.

    Each step takes the first move (bump removals before corner flips, by
    position) that lowers the area by one; a planar polygon that is not the
    unit square always admits one.
    """
    if len(w.plane_axes()) > 2:
        raise LatticeError("word is not planar")
    plane = w.plane_axes()
    trace = []
    a = area(w)
    while a > 1:
        for move, i in _candidates(w):
            try:
                nxt = apply_move(w, move, i)
            except LatticeError:
                continue
            if nxt.plane_axes() == plane and area(nxt) == a - 1:
                break
        else:
            raise LatticeError("no area-decreasing move found")
        w, a = nxt, a - 1
        trace.append({"move": move, "position": i, "word": w.to_text(), "area": a})
    return trace
