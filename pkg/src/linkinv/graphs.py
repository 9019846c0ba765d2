"""Signed planar graphs, Kirchhoff matrices and the Tait correspondence."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import CheckerboardColoring, DiagramError, LinkDiagram, _assemble, faces_and_coloring, unknot
from .linalg import det


@dataclass(frozen=True)
class SignedPlanarGraph:
    vertex_count: int
    edges: tuple  # (u, v, sign)
    rotation: tuple | None = None  # per vertex: cyclic tuple of edge ids (a loop appears twice)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v), int(s)) for u, v, s in self.edges))
        if self.vertex_count < 0:
            raise DiagramError("negative vertex count")
        for k, (u, v, s) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise DiagramError(f"edge {k} has an endpoint out of range")
            if s not in (1, -1):
                raise DiagramError(f"edge {k} sign must be +1 or -1")
        if self.rotation is not None:
            rot = tuple(tuple(int(e) for e in r) for r in self.rotation)
            object.__setattr__(self, "rotation", rot)
            if len(rot) != self.vertex_count:
                raise DiagramError("rotation must list every vertex")
            for w in range(self.vertex_count):
                want = sorted([k for k, (u, v, _) in enumerate(self.edges) if u == w]
                              + [k for k, (u, v, _) in enumerate(self.edges) if v == w])
                if sorted(rot[w]) != want:
                    raise DiagramError(f"rotation at vertex {w} does not list its edge ends exactly once")

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = {0}
        stack = [0]
        nbrs = {w: [] for w in range(self.vertex_count)}
        for u, v, _ in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        while stack:
            w = stack.pop()
            for x in nbrs[w]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return len(seen) == self.vertex_count

    def component_count(self) -> int:
        parent = list(range(self.vertex_count))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        return len({find(i) for i in range(self.vertex_count)})

    def all_same_sign(self) -> bool:
        return len({s for _, _, s in self.edges}) <= 1


def kirchhoff(g: SignedPlanarGraph, deleted: int = 0) -> dict:
    """Adjacency, degree, Laplacian and reduced Laplacian; loops are ignored."""
    n = g.vertex_count
    A = [[0] * n for _ in range(n)]
    deg = [0] * n
    for u, v, _ in g.edges:
        if u == v:
            continue
        A[u][v] += 1
        A[v][u] += 1
        deg[u] += 1
        deg[v] += 1
    D = [[deg[i] if i == j else 0 for j in range(n)] for i in range(n)]
    L = [[D[i][j] - A[i][j] for j in range(n)] for i in range(n)]
    keep = [i for i in range(n) if i != deleted]
    Q = [[L[i][j] for j in keep] for i in keep] if n else []
    return {"adjacency": A, "degree": D, "laplacian": L, "kirchhoff": Q}


def spanning_tree_count(g: SignedPlanarGraph, deleted: int = 0) -> int:
    if g.vertex_count == 0:
        return 0
    return int(det(kirchhoff(g, deleted)["kirchhoff"]))


# ---------------------------------------------------------------------------
# Tait graphs


def crossing_eta(d: LinkDiagram, coloring: CheckerboardColoring, p: int) -> int:
    """+1 when the quadrant between slots b and c is black, else -1."""
    return 1 if coloring.color[d.quadrant_face(p, 1)] == 1 else -1


def tait_graph(d: LinkDiagram, coloring: CheckerboardColoring | None = None) -> tuple[SignedPlanarGraph, list]:
    """Black-face graph with one signed edge per crossing.

    Returns the graph and the list of face ids used as its vertices.  Edge
    k is crossing k; its sign is eta.  Rotations list crossings in
    counterclockwise order around each black face.
    """
    if coloring is None:
        _, coloring = faces_and_coloring(d)
    if d.crossing_count == 0:
        return SignedPlanarGraph(1, (), ((),)), [coloring.black()[0]]
    faces, _ = d.darts_faces
    black = coloring.black()
    vid = {f: k for k, f in enumerate(black)}
    edges = []
    for p in range(d.crossing_count):
        eta = crossing_eta(d, coloring, p)
        if eta == 1:
            u, v = d.quadrant_face(p, 1), d.quadrant_face(p, 3)
        else:
            u, v = d.quadrant_face(p, 0), d.quadrant_face(p, 2)
        edges.append((vid[u], vid[v], eta))
    rot = []
    for f in black:
        # darts run clockwise around the face; reverse for counterclockwise order
        rot.append(tuple(i for i, _ in reversed(faces[f])))
    return SignedPlanarGraph(len(black), tuple(edges), tuple(rot)), black


def diagram_from_graph(g: SignedPlanarGraph) -> LinkDiagram:
    """Medial diagram: each edge becomes a crossing, its ends on the two vertex regions.

    With the edge drawn west (first end) to east (second end), the slots
    counterclockwise are NE, NW, SW, SE.  A positive edge puts the NE-SW
    strand under, so the vertex region sits between slots b and c.
    """
    if g.rotation is None:
        raise DiagramError("diagram_from_graph needs a rotation system")
    if not g.is_connected():
        raise DiagramError("diagram_from_graph needs a connected graph")
    if not g.edges:
        if g.vertex_count != 1:
            raise DiagramError("edgeless graph must have one vertex")
        return unknot(1)
    NE, NW, SW, SE = 0, 1, 2, 3
    # which end of an edge each rotation entry is: loops list end 0 first
    ends = []
    for w, r in enumerate(g.rotation):
        seen = set()
        row = []
        for e in r:
            u, v, _ = g.edges[e]
            if u == v:
                row.append((e, 0 if e not in seen else 1))
                seen.add(e)
            else:
                row.append((e, 0 if u == w else 1))
        ends.append(row)
    slots = [[None] * 4 for _ in g.edges]
    label = 1
    for w, row in enumerate(ends):
        m = len(row)
        for k, (e, end) in enumerate(row):
            e2, end2 = row[(k + 1) % m]
            s1 = NW if end == 0 else SE  # side facing the next edge counterclockwise
            s2 = SW if end2 == 0 else NE  # side facing the previous edge
            slots[e][s1] = label
            slots[e2][s2] = label
            label += 1
    out = []
    for e, (u, v, s) in enumerate(g.edges):
        row = slots[e]
        out.append(row if s == 1 else row[1:] + row[:1])
    d, _ = _assemble(out, 0, {})
    d.check_planar()
    return d


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> SignedPlanarGraph:
    """``v <count>``, ``e <u> <v> <+|->`` and ``rot <v>: <edge ids>``; vertices and edges 0-based."""
    n = None
    edges = []
    rots = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"v\s+(\d+)", line)
        if m:
            n = int(m.group(1))
            continue
        m = re.fullmatch(r"e\s+(\d+)\s+(\d+)\s+([+-])", line)
        if m:
            edges.append((int(m.group(1)), int(m.group(2)), 1 if m.group(3) == "+" else -1))
            continue
        m = re.fullmatch(r"rot\s+(\d+)\s*:\s*((?:\d+\s*)*)", line)
        if m:
            rots[int(m.group(1))] = tuple(int(t) for t in m.group(2).split())
            continue
        raise DiagramError(f"graph syntax error on line {lineno}: {raw!r}")
    if n is None:
        raise DiagramError("graph text needs a 'v <count>' line")
    rotation = None
    if rots:
        rotation = tuple(rots.get(w, ()) for w in range(n))
    return SignedPlanarGraph(n, tuple(edges), rotation)


def graph_to_text(g: SignedPlanarGraph) -> str:
    lines = [f"v {g.vertex_count}"]
    lines += [f"e {u} {v} {'+' if s == 1 else '-'}" for u, v, s in g.edges]
    if g.rotation is not None:
        lines += [f"rot {w}: " + " ".join(map(str, r)) for w, r in enumerate(g.rotation)]
    return "\n".join(lines)
