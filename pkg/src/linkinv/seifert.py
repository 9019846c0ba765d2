"""Seifert circles, the Seifert graph and Seifert matrices.

The surface is built the usual way: one disk per Seifert circle, nested
disks stacked with the inner ones higher, and a half-twisted band at every
crossing.  Homology classes are fundamental cycles of the Seifert graph.

Linking numbers lk(a+, b) are counted as half the signed crossings of the
projections, with the curves drawn in a controlled way.  At a crossing p
both smoothing arcs point north: the left arc sits at x = -1, the right
arc at x = +1, and a curve crossing the band at parameter t in [0, 1]
projects to (x, x(1 - 2t)).  On a disk a curve enters from the boundary
(a short leg), runs forward along the circle at a fixed depth inside the
collar and leaves by another leg.  The curve a+ runs deeper and crosses
bands at t = 1/3, the curve b at t = 2/3.  Three kinds of crossings occur:

  legs       a leg of a+ inside the run of b on the same circle: -1 for an
             entering leg, +1 for a leaving leg;
  band centre  both curves use band p; the smaller t is higher when p is
             positive, the larger when p is negative;
  nested band  a band joining a circle to one nested inside it passes over
             the collar of the outer circle: each run of one curve there
             covering the band attachment of the other contributes the
             direction (+1 left to right) of that band crossing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .diagram import DiagramError, LinkDiagram
from .graphs import SignedPlanarGraph


@dataclass(frozen=True)
class SeifertData:
    circles: list  # each a list of edges in order
    crossing_sites: list  # per circle, crossings in order
    s: int
    graph: SignedPlanarGraph  # vertices circles, edge k = crossing k (left circle, right circle, sign)
    genus: int
    orientation: list  # +1 if the circle bounds its disk on the left
    parent: list  # nesting: enclosing circle or None
    depth: list


def _arcs(d: LinkDiagram, p: int) -> tuple[int, int]:
    """Incoming edges of the left and right smoothing arcs at p."""
    a, b, c, e = d.crossings[p]
    return (e, a) if d.sign(p) == 1 else (a, b)


def seifert_successor(d: LinkDiagram) -> dict:
    succ = {}
    for p, (a, b, c, e) in enumerate(d.crossings):
        if d.sign(p) == 1:
            succ[a], succ[e] = b, c
        else:
            succ[a], succ[b] = e, c
    return succ


def seifert_data(d: LinkDiagram) -> SeifertData:
    if not d.is_connected_projection:
        raise DiagramError("Seifert data needs a connected projection; split the diagram first")
    if d.crossing_count == 0:
        g = SignedPlanarGraph(1, ())
        return SeifertData([[]], [[]], 1, g, 0, [1], [None], [0])
    d.check_planar()
    succ = seifert_successor(d)
    circle_of = {}
    circles = []
    for e in range(1, d.edge_count + 1):
        if e in circle_of:
            continue
        cyc = []
        f = e
        while f not in circle_of:
            circle_of[f] = len(circles)
            cyc.append(f)
            f = succ[f]
        circles.append(cyc)
    sites = [[d.head(e)[0] for e in cyc] for cyc in circles]
    edges = []
    for p in range(d.crossing_count):
        eL, eR = _arcs(d, p)
        edges.append((circle_of[eL], circle_of[eR], d.sign(p)))
    graph = SignedPlanarGraph(len(circles), tuple(edges))

    # regions of the smoothed diagram: faces glued across each band gap
    faces, _ = d.darts_faces
    parent = list(range(len(faces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in range(d.crossing_count):
        if d.sign(p) == 1:
            f, g = d.quadrant_face(p, 1), d.quadrant_face(p, 3)
        else:
            f, g = d.quadrant_face(p, 0), d.quadrant_face(p, 2)
        parent[find(f)] = find(g)
    # left and right region of every circle, read at its first site
    sides = []
    for k, cyc in enumerate(circles):
        p = sites[k][0]
        eL, eR = _arcs(d, p)
        pos = d.sign(p) == 1
        if circle_of[eL] == k:
            left = d.quadrant_face(p, 2 if pos else 3)  # west of the left arc
            right = d.quadrant_face(p, 1 if pos else 0)  # the band gap
        else:
            left = d.quadrant_face(p, 1 if pos else 0)
            right = d.quadrant_face(p, 0 if pos else 1)  # east of the right arc
        sides.append((find(left), find(right)))
    # region tree rooted at the region of face 0; circles are its edges
    adj: dict = {}
    for k, (l, r) in enumerate(sides):
        adj.setdefault(l, []).append((r, k))
        adj.setdefault(r, []).append((l, k))
    root = find(0)
    reg_depth = {root: 0}
    reg_parent_circle = {root: None}
    orient = [0] * len(circles)
    cparent = [None] * len(circles)
    cdepth = [0] * len(circles)
    queue = deque([root])
    while queue:
        r = queue.popleft()
        for r2, k in adj.get(r, []):
            if r2 in reg_depth:
                continue
            reg_depth[r2] = reg_depth[r] + 1
            reg_parent_circle[r2] = k
            cparent[k] = reg_parent_circle[r]
            cdepth[k] = 0 if cparent[k] is None else cdepth[cparent[k]] + 1
            orient[k] = 1 if sides[k][0] == r2 else -1
            queue.append(r2)
    if any(o == 0 for o in orient):
        raise DiagramError("Seifert circles do not form a planar nesting")
    s = len(circles)
    n = d.component_count
    twice_genus = 2 - (s + n - d.crossing_count)
    if twice_genus % 2:
        raise DiagramError("genus parity failed")
    return SeifertData(circles, sites, s, graph, twice_genus // 2, orient, cparent, cdepth)


# ---------------------------------------------------------------------------
# homology basis


def fundamental_cycles(sd: SeifertData) -> list:
    """Fundamental cycles of a BFS spanning tree, as lists of (crossing, direction).

    Direction +1 means the cycle crosses the band from the left circle to the
    right circle.
    """
    g = sd.graph
    n = g.vertex_count
    inc = {v: [] for v in range(n)}
    for k, (u, v, _) in enumerate(g.edges):
        inc[u].append(k)
        inc[v].append(k)
    up_edge = {0: None}
    par = {0: None}
    order = [0]
    queue = deque([0])
    tree = set()
    while queue:
        v = queue.popleft()
        for k in sorted(inc[v]):
            u, w, _ = g.edges[k]
            x = w if u == v else u
            if x not in par:
                par[x] = v
                up_edge[x] = k
                tree.add(k)
                order.append(x)
                queue.append(x)

    def path_to_root(v):
        out = []
        while par[v] is not None:
            out.append(v)
            v = par[v]
        out.append(v)
        return out

    def step(k, frm):
        u, w, _ = g.edges[k]
        return (k, 1) if frm == u else (k, -1)

    cycles = []
    for k, (u, w, _) in enumerate(g.edges):
        if k in tree:
            continue
        # walk u -> w across band k, then back along the tree from w to u
        pu, pw = path_to_root(u), path_to_root(w)
        common = set(pu) & set(pw)
        lca = next(v for v in pu if v in common)
        cyc = [(k, 1)]
        v = w
        while v != lca:
            cyc.append(step(up_edge[v], v))
            v = par[v]
        down = []
        v = u
        while v != lca:
            down.append(v)
            v = par[v]
        for v in reversed(down):
            cyc.append(step(up_edge[v], par[v]))
        cycles.append(cyc)
    return cycles


# ---------------------------------------------------------------------------
# linking numbers


_T_A, _T_B = Fraction(1, 3), Fraction(2, 3)


def _position(sd: SeifertData, d: LinkDiagram, circle: int, p: int, t: Fraction) -> Fraction:
    """Scalar position along a circle of the attachment of band p at parameter t."""
    eL, _ = _arcs(d, p)
    left = sd.graph.edges[p][0] == circle
    y = 2 * t - 1 if left else 1 - 2 * t
    k = sd.crossing_sites[circle].index(p)
    return 3 * k + (y + 1)


def _staples(sd: SeifertData, d: LinkDiagram, cyc: list, t: Fraction) -> dict:
    """circle -> (start, end) positions of the run of the curve on that circle."""
    out = {}
    m = len(cyc)
    for i in range(m):
        p, dr = cyc[i]
        q, dq = cyc[(i + 1) % m]
        u, w, _ = sd.graph.edges[p]
        circle = w if dr == 1 else u
        out[circle] = (_position(sd, d, circle, p, t), _position(sd, d, circle, q, t))
    return out


def _inside(sd: SeifertData, circle: int, run: tuple, x: Fraction) -> bool:
    length = 3 * len(sd.crossing_sites[circle])
    start, end = run
    off_x = (x - start) % length
    off_e = (end - start) % length
    return 0 < off_x < off_e


def _cross(u, v) -> int:
    z = u[0] * v[1] - u[1] * v[0]
    return (z > 0) - (z < 0)


def linking_entry(sd: SeifertData, d: LinkDiagram, alpha: list, beta: list) -> int:
    """lk(alpha+, beta) for two fundamental cycles."""
    runs_a = _staples(sd, d, alpha, _T_A)
    runs_b = _staples(sd, d, beta, _T_B)
    total = 0
    # legs of alpha+ under or over the runs of beta
    for circle, (sa, ea) in runs_a.items():
        if circle in runs_b:
            if _inside(sd, circle, runs_b[circle], sa):
                total -= 1
            if _inside(sd, circle, runs_b[circle], ea):
                total += 1
    # band centres
    dirs_b = dict(beta)
    for p, da in alpha:
        if p not in dirs_b:
            continue
        db = dirs_b[p]
        va = (da, da * (1 - 2 * _T_A))
        vb = (db, db * (1 - 2 * _T_B))
        over, under = (va, vb) if d.sign(p) == 1 else (vb, va)
        total += _cross(over, under)
    # nested bands over the collar of the outer circle
    for cyc, t, other_runs in ((alpha, _T_A, runs_b), (beta, _T_B, runs_a)):
        for p, dr in cyc:
            u, w, _ = sd.graph.edges[p]
            outer = None
            if sd.parent[w] == u and sd.orientation[u] == -1:
                outer = u
            elif sd.parent[u] == w and sd.orientation[w] == 1:
                outer = w
            if outer is None or outer not in other_runs:
                continue
            if _inside(sd, outer, other_runs[outer], _position(sd, d, outer, p, t)):
                total += dr
    if total % 2:
        raise ArithmeticError("odd crossing count between closed curves")
    return total // 2


@dataclass(frozen=True)
class SeifertMatrix:
    V: list
    basis: list


def seifert_matrix(d: LinkDiagram) -> SeifertMatrix:
    sd = seifert_data(d)
    cycles = fundamental_cycles(sd)
    # a nested band must have its outer circle on the expected side
    for p, (u, w, _) in enumerate(sd.graph.edges):
        if sd.orientation[u] == -1 and sd.orientation[w] == 1:
            raise ArithmeticError("both circles at a crossing claim to enclose the band")
    V = [[linking_entry(sd, d, a, b) for b in cycles] for a in cycles]
    return SeifertMatrix(V, cycles)
