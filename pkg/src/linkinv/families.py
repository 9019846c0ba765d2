"""Standard diagram families: closed braids, T(2,k), pretzels and Turk's heads."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import DiagramError, LinkDiagram, _assemble, unknot


@dataclass(frozen=True)
class FamilySpec:
    variant: str  # torus2, pretzel, braid_closure, turks_head
    params: tuple

    def __post_init__(self):
        v, p = self.variant, self.params
        if v == "torus2":
            if len(p) != 1:
                raise DiagramError("torus2 takes one integer")
        elif v == "turks_head":
            if len(p) != 1 or p[0] < 1:
                raise DiagramError("turks_head takes one positive integer")
        elif v == "pretzel":
            if not p or any(k == 0 for k in p):
                raise DiagramError("pretzel needs at least one nonzero column")
        elif v == "braid_closure":
            if len(p) != 2:
                raise DiagramError("braid_closure takes (strands, word)")
            strands, word = p
            if strands < 1:
                raise DiagramError("a braid needs at least one strand")
            for g in word:
                if g == 0 or abs(g) >= strands:
                    raise DiagramError(f"generator {g} is invalid on {strands} strands")
        else:
            raise DiagramError(f"unknown family {v!r}")


def braid_closure(strands: int, word) -> LinkDiagram:
    """Closure of a braid; generators are signed indices, strands run upward.

    Slots at a crossing counterclockwise are SW, SE, NE, NW.  A positive
    generator puts the SE -> NW strand under.
    """
    word = [int(g) for g in word]
    FamilySpec("braid_closure", (strands, tuple(word)))
    cur = list(range(1, strands + 1))
    fresh = strands + 1
    slots = []
    heads = {}
    for g in word:
        i = abs(g) - 1
        sw, se = cur[i], cur[i + 1]
        nw, ne = fresh, fresh + 1
        fresh += 2
        k = len(slots)
        if g > 0:
            slots.append([se, ne, nw, sw])
            heads[se], heads[sw] = (k, 0), (k, 3)
        else:
            slots.append([sw, se, ne, nw])
            heads[sw], heads[se] = (k, 0), (k, 1)
        cur[i], cur[i + 1] = nw, ne
    # close up: the label leaving the top at position i is the one entering at the bottom
    sub = {}
    free = 0
    for pos in range(strands):
        if cur[pos] == pos + 1:
            free += 1
        else:
            sub[cur[pos]] = pos + 1
    slots = [[sub.get(v, v) for v in x] for x in slots]
    return _assemble(slots, free, heads)[0]


def torus2(k: int) -> LinkDiagram:
    """Closure of sigma_1^k; positive crossings for k > 0."""
    return braid_closure(2, [1 if k > 0 else -1] * abs(k))


def turks_head(n: int) -> LinkDiagram:
    """Closure of the 3-braid (sigma_1 sigma_2^{-1})^n."""
    FamilySpec("turks_head", (n,))
    return braid_closure(3, [1, -2] * n)


def pretzel(*cols: int) -> LinkDiagram:
    """Pretzel link with vertical twist columns of n_1, ..., n_m half twists.

    Column crossings are stacked top to bottom; slots counterclockwise are
    NW, SW, SE, NE.  Adjacent columns are joined across the top and bottom,
    the last column back to the first around the outside.
    """
    if len(cols) == 1 and isinstance(cols[0], (list, tuple)):
        cols = tuple(cols[0])
    FamilySpec("pretzel", tuple(cols))
    m = len(cols)
    top = list(range(1, m + 1))  # top[j] joins column j-1's NE to column j's NW
    bot = list(range(m + 1, 2 * m + 1))
    fresh = 2 * m + 1
    slots = []
    for j, n in enumerate(cols):
        left, right = top[j], top[(j + 1) % m]
        count = abs(n)
        for k in range(count):
            if k == count - 1:
                sw, se = bot[j], bot[(j + 1) % m]
            else:
                sw, se = fresh, fresh + 1
                fresh += 2
            nw, ne = left, right
            ccw = [nw, sw, se, ne]
            if n > 0:
                ccw = ccw[1:] + ccw[:1]
            slots.append(ccw)
            left, right = sw, se
    return _assemble(slots, 0, {})[0]


def construct(spec: FamilySpec) -> LinkDiagram:
    v, p = spec.variant, spec.params
    if v == "torus2":
        return torus2(p[0]) if p[0] else unknot(2)
    if v == "turks_head":
        return turks_head(p[0])
    if v == "pretzel":
        return pretzel(*p)
    return braid_closure(p[0], p[1])


_BRAID = re.compile(r"^\s*braid\s+(\d+)\s*:\s*((?:[+-]?\d+\s*)*)$", re.S)


def parse_braid(text: str) -> LinkDiagram:
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
    m = _BRAID.match(body)
    if not m:
        raise DiagramError(f"braid text must read 'braid <strands>: <generators>', got {body[:40]!r}")
    strands = int(m.group(1))
    word = [int(t) for t in m.group(2).split()]
    if not word:
        return unknot(strands)
    return braid_closure(strands, word)
