"""Oriented link diagrams given by PD codes.

A crossing is a 4-tuple (a, b, c, d) of edge labels read counterclockwise
from the incoming under-edge, so the under strand runs a -> c.  Edges are
numbered consecutively along each component; that numbering is the
orientation.  The crossing is positive when the over strand runs d -> b.

Faces come from the rotation system.  A dart (X, s) is the edge leaving
crossing X through slot s; following it to its other end (Y, j) the next
dart of the same face is (Y, j+1).  Every face lies to the right of its
darts, so the quadrant between slots s and s+1 of X is the face of dart
(X, s+1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Sequence


class DiagramError(ValueError):
    """Raised for malformed or unsupported diagram input."""


# ---------------------------------------------------------------------------
# the diagram type


@dataclass(frozen=True, eq=False)
class LinkDiagram:
    crossings: tuple  # tuple of 4-tuples of ints
    free_loops: int = 0  # crossingless, unlinked unknotted components

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        if self.free_loops < 0:
            raise DiagramError("negative number of free loops")
        self._orient()

    # -- validation and orientation ------------------------------------

    def _orient(self):
        X = self.crossings
        n_edges = 2 * len(X)
        occ: dict[int, list] = {}
        for i, x in enumerate(X):
            if len(x) != 4:
                raise DiagramError(f"crossing {i} does not have four entries")
            for s, e in enumerate(x):
                occ.setdefault(e, []).append((i, s))
        labels = set(occ)
        if labels != set(range(1, n_edges + 1)):
            missing = sorted(set(range(1, n_edges + 1)) - labels)
            extra = sorted(labels - set(range(1, n_edges + 1)))
            raise DiagramError(f"edge labels must be 1..{n_edges}; missing {missing}, unexpected {extra}")
        for e, o in occ.items():
            if len(o) != 2:
                raise DiagramError(f"edge {e} appears {len(o)} times, expected exactly 2")

        # strands through crossings join labels into components
        parent = {e: e for e in labels}

        def find(e):
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        for a, b, c, d in X:
            parent[find(a)] = find(c)
            parent[find(b)] = find(d)
        groups: dict[int, list] = {}
        for e in sorted(labels):
            groups.setdefault(find(e), []).append(e)
        comps = sorted(groups.values(), key=lambda g: g[0])
        comp_of = {}
        nxt = {}
        for k, g in enumerate(comps):
            lo, hi = g[0], g[-1]
            if g != list(range(lo, hi + 1)):
                raise DiagramError(f"component edges {g} are not consecutively numbered")
            if len(g) == 1:
                raise DiagramError(f"edge {lo} forms a component through a single crossing")
            for e in g:
                comp_of[e] = k
                nxt[e] = e + 1 if e < hi else lo

        head = {}  # edge -> occurrence where it is incoming
        tail = {}

        def set_dir(e_in, e_out, i, s_in, s_out):
            for e, table, o in ((e_in, head, (i, s_in)), (e_out, tail, (i, s_out))):
                if e in table and table[e] != o:
                    raise DiagramError(f"edge {e} is {'incoming' if table is head else 'outgoing'} twice")
                table[e] = o

        for i, (a, b, c, d) in enumerate(X):
            if nxt[a] != c:
                raise DiagramError(f"crossing {i}: under strand {a}->{c} is not consecutive")
            set_dir(a, c, i, 0, 2)
        signs = [0] * len(X)
        pending = []
        for i, (a, b, c, d) in enumerate(X):
            if nxt[d] == b and nxt[b] != d:
                signs[i] = 1
            elif nxt[b] == d and nxt[d] != b:
                signs[i] = -1
            elif nxt[b] == d and nxt[d] == b:
                pending.append(i)  # two-edge component; decided below
                continue
            else:
                raise DiagramError(f"crossing {i}: over pair {{{b},{d}}} is not consecutive")
            if signs[i] == 1:
                set_dir(d, b, i, 3, 1)
            else:
                set_dir(b, d, i, 1, 3)
        # two-edge components: the over strand follows the numeric successor
        # (the wraparound step must then be an under pass).  A component that
        # only passes over is read at its first crossing with the lower label
        # incoming, and its other crossing follows.
        under_comps = {comp_of[x[0]] for x in X}
        for i in list(pending):
            a, b, c, d = X[i]
            if comp_of[b] in under_comps:
                pending.remove(i)
                signs[i] = 1 if b == d + 1 else -1
                if signs[i] == 1:
                    set_dir(d, b, i, 3, 1)
                else:
                    set_dir(b, d, i, 1, 3)

        def incoming_here(e, o):
            if e in head:
                return head[e] == o
            if e in tail:
                return tail[e] != o
            return None

        while pending:
            progress = False
            for i in list(pending):
                a, b, c, d = X[i]
                rd, rb = incoming_here(d, (i, 3)), incoming_here(b, (i, 1))
                if rd is True or rb is False:
                    signs[i] = 1
                elif rb is True or rd is False:
                    signs[i] = -1
                else:
                    continue
                pending.remove(i)
                progress = True
                if signs[i] == 1:
                    set_dir(d, b, i, 3, 1)
                else:
                    set_dir(b, d, i, 1, 3)
            if not progress:
                i = pending.pop(0)
                a, b, c, d = X[i]
                signs[i] = 1 if d < b else -1
                if signs[i] == 1:
                    set_dir(d, b, i, 3, 1)
                else:
                    set_dir(b, d, i, 1, 3)
        for e in labels:
            if e not in head or e not in tail:
                raise DiagramError(f"edge {e} has inconsistent direction")
        object.__setattr__(self, "_occ", {e: tuple(o) for e, o in occ.items()})
        object.__setattr__(self, "_head", head)
        object.__setattr__(self, "_tail", tail)
        object.__setattr__(self, "_signs", tuple(signs))
        object.__setattr__(self, "_comps", tuple(tuple(g) for g in comps))
        object.__setattr__(self, "_comp_of", comp_of)
        object.__setattr__(self, "_next", nxt)

    # -- basic accessors ----------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def signs(self) -> tuple:
        return self._signs

    def sign(self, p: int) -> int:
        return self._signs[p]

    @property
    def writhe(self) -> int:
        return sum(self._signs)

    @property
    def component_edges(self) -> tuple:
        """Edge sequences of the components that meet crossings."""
        return self._comps

    @property
    def component_count(self) -> int:
        return len(self._comps) + self.free_loops

    def component_of(self, e: int) -> int:
        return self._comp_of[e]

    def next_edge(self, e: int) -> int:
        return self._next[e]

    def occurrences(self, e: int) -> tuple:
        return self._occ[e]

    def head(self, e: int) -> tuple:
        """(crossing, slot) where edge e enters."""
        return self._head[e]

    def tail(self, e: int) -> tuple:
        return self._tail[e]

    def other_end(self, i: int, s: int) -> tuple:
        o1, o2 = self._occ[self.crossings[i][s]]
        return o2 if o1 == (i, s) else o1

    def over_in_slot(self, p: int) -> int:
        """Slot of the incoming over edge: 3 for positive crossings, 1 for negative."""
        return 3 if self._signs[p] == 1 else 1

    def key(self) -> tuple:
        return (self.crossings, self.free_loops)

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        body = " ".join("X(%d,%d,%d,%d)" % x for x in self.crossings)
        extra = f", free_loops={self.free_loops}" if self.free_loops else ""
        return f"LinkDiagram({body!r}{extra})"

    def to_pd(self) -> str:
        parts = []
        if self.free_loops or not self.crossings:
            parts.append(f"components={self.component_count}")
        parts.extend("X(%d,%d,%d,%d)" % x for x in self.crossings)
        return " ".join(parts)

    # -- projection structure -----------------------------------------

    @cached_property
    def projection_parts(self) -> list:
        """Connected pieces of the projection as sorted lists of crossing ids."""
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for (i, _), (j, _) in self._occ.values():
            parent[find(i)] = find(j)
        parts: dict[int, list] = {}
        for i in range(len(self.crossings)):
            parts.setdefault(find(i), []).append(i)
        return sorted(parts.values())

    @property
    def is_connected_projection(self) -> bool:
        pieces = len(self.projection_parts) + self.free_loops
        return pieces == 1

    @cached_property
    def darts_faces(self) -> tuple:
        """(faces, face_of) where faces are lists of darts and face_of maps dart -> face id.

        Faces are ordered by their smallest dart.  Crossingless loops are
        not represented here.
        """
        face_of: dict = {}
        faces = []
        for i in range(len(self.crossings)):
            for s in range(4):
                if (i, s) in face_of:
                    continue
                fid = len(faces)
                cyc = []
                dart = (i, s)
                while dart not in face_of:
                    face_of[dart] = fid
                    cyc.append(dart)
                    j, t = self.other_end(*dart)
                    dart = (j, (t + 1) % 4)
                if dart != (i, s):
                    raise DiagramError("face traversal did not close; rotation system is inconsistent")
                faces.append(cyc)
        return faces, face_of

    def check_planar(self):
        faces, face_of = self.darts_faces
        parts = self.projection_parts
        count: dict[int, int] = {}
        part_of = {}
        for k, part in enumerate(parts):
            for i in part:
                part_of[i] = k
        for f in faces:
            k = part_of[f[0][0]]
            count[k] = count.get(k, 0) + 1
        for k, part in enumerate(parts):
            if count.get(k, 0) != len(part) + 2:
                raise DiagramError(
                    f"projection piece with {len(part)} crossings has {count.get(k, 0)} faces, "
                    f"expected {len(part) + 2}; the diagram is not planar")

    def quadrant_face(self, p: int, s: int) -> int:
        """Face in the quadrant between slots s and s+1 at crossing p."""
        return self.darts_faces[1][(p, (s + 1) % 4)]


# ---------------------------------------------------------------------------
# text input


_TOKEN = re.compile(r"\s+|#[^\n]*|components\s*=\s*(\d+)|X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_pd(text: str, component_count: int | None = None) -> LinkDiagram:
    """Parse PD text; ``components=n`` (or the argument) sets the total component count."""
    pos = 0
    crossings = []
    declared = component_count
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            snippet = text[pos:pos + 12]
            raise DiagramError(f"syntax error at line {line}, column {col}: {snippet!r}")
        if m.group(1) is not None:
            declared = int(m.group(1))
        elif m.group(2) is not None:
            vals = tuple(int(m.group(k)) for k in range(2, 6))
            if min(vals) <= 0:
                raise DiagramError(f"edge labels must be positive at position {pos}")
            crossings.append(vals)
        pos = m.end()
    d = LinkDiagram(tuple(crossings), 0)
    if declared is None:
        if not crossings:
            raise DiagramError("empty diagram needs a components=n header")
        free = 0
    else:
        free = declared - len(d.component_edges)
        if free < 0:
            raise DiagramError(f"components={declared} is fewer than the {len(d.component_edges)} found")
    d = LinkDiagram(d.crossings, free)
    d.check_planar()
    return d


# ---------------------------------------------------------------------------
# assembly from unoriented slot lists


def _assemble(slots: Sequence[Sequence[Hashable]], free_loops: int = 0,
              heads: dict | None = None) -> tuple[LinkDiagram, list]:
    """Build a canonical LinkDiagram from crossings given as slot lists.

    ``slots[i]`` lists four labels counterclockwise with the under strand at
    slots 0 and 2; each label occurs exactly twice overall.  ``heads`` maps
    a label to the occurrence (i, s) where it should be incoming; on each
    component the hint of its smallest hinted label wins.  Components are
    ordered by smallest label and numbered from it.  Returns the diagram and
    the rotation applied to each crossing tuple.
    """
    heads = heads or {}
    occ: dict = {}
    for i, x in enumerate(slots):
        for s, e in enumerate(x):
            occ.setdefault(e, []).append((i, s))
    for e, o in occ.items():
        if len(o) != 2:
            raise DiagramError(f"label {e!r} occurs {len(o)} times")

    def other(o, e):
        o1, o2 = occ[e]
        return o2 if o1 == o else o1

    def walk(e, h):
        """Labels and head occurrences of the component, starting with edge e entering at h."""
        seq = []
        while True:
            seq.append((e, h))
            i, s = h
            out = (i, (s + 2) % 4)
            f = slots[i][out[1]]
            h = other(out, f)
            e = f
            if (e, h) == seq[0]:
                return seq
            if len(seq) > 4 * len(slots) + 4:
                raise DiagramError("component walk did not close")

    seen = set()
    comps = []
    for e in sorted(occ):
        if e in seen:
            continue
        # discover the component unoriented, then orient it
        o1, o2 = sorted(occ[e])
        seq = walk(e, o2)
        members = {f for f, _ in seq}
        seen |= members
        hinted = sorted(f for f in members if f in heads and heads[f] in occ[f])
        if hinted:
            f = hinted[0]
            idx = [k for k, (g, _) in enumerate(seq) if g == f][0]
            if seq[idx][1] != heads[f]:
                seq = walk(e, o1)
        comps.append(seq)

    comps.sort(key=lambda seq: min(f for f, _ in seq))
    relabel = {}
    head_of = {}
    n = 1
    for k, seq in enumerate(comps):
        start = min(range(len(seq)), key=lambda t: seq[t][0])
        seq = seq[start:] + seq[:start]
        if len(seq) == 2:
            seq = _two_edge_fix(seq, slots, occ, n)
        comps[k] = seq
        for f, h in seq:
            relabel[f] = n
            head_of[f] = h
            n += 1
    out = []
    rots = []
    for i, x in enumerate(slots):
        r = 0 if head_of[x[0]] == (i, 0) else 2
        y = tuple(relabel[x[(r + t) % 4]] for t in range(4))
        out.append(y)
        rots.append(r)
    return LinkDiagram(tuple(out), free_loops), rots


def _two_edge_fix(seq, slots, occ, n):
    """Order a two-edge component so that its PD numbering reads back correctly.

    With labels n, n+1 the step n+1 -> n must happen at an under pass.  A
    component that only passes over is oriented so that at its first crossing
    the over strand runs from n to n+1; its orientation does not affect the
    link type.
    """
    (e1, h1), (e2, h2) = seq
    if h2[1] % 2 == 0:
        return seq
    if h1[1] % 2 == 0:
        return [(e2, h2), (e1, h1)]
    first = min(h1[0], h2[0])
    # label n is e1 (incoming at h1); the rule wants label n incoming at the first crossing
    if h1[0] == first:
        return seq
    # reverse: e1 now enters at its other occurrence
    o = [q for q in occ[e1] if q != h1][0]
    p = [q for q in occ[e2] if q != h2][0]
    return [(e1, o), (e2, p)]


def unknot(components: int = 1) -> LinkDiagram:
    return LinkDiagram((), components)


# ---------------------------------------------------------------------------
# editing


def _current_heads(d: LinkDiagram) -> dict:
    return {e: d.head(e) for e in range(1, d.edge_count + 1)}


def _slots(d: LinkDiagram) -> list:
    return [list(x) for x in d.crossings]


def _remove(d: LinkDiagram, removed: Iterable[int], joins: Sequence[tuple]) -> tuple[LinkDiagram, list]:
    """Delete crossings and reconnect their slot ends along ``joins``.

    ``joins`` pairs occurrences (i, s) at removed crossings.  Returns the new
    diagram and, for each surviving crossing, its new index (or None).
    """
    removed = set(removed)
    parent: dict = {}

    def find(e):
        parent.setdefault(e, e)
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    X = d.crossings
    for (i, s), (j, t) in joins:
        a, b = find(X[i][s]), find(X[j][t])
        if a != b:
            parent[max(a, b)] = min(a, b)
    heads = {}
    classes_alive = set()
    keep = [i for i in range(len(X)) if i not in removed]
    new_index = {i: k for k, i in enumerate(keep)}
    slots = []
    for i in keep:
        row = []
        for s, e in enumerate(X[i]):
            r = find(e)
            row.append(r)
            classes_alive.add(r)
        slots.append(row)
    for e in range(1, d.edge_count + 1):
        h = d.head(e)
        if h[0] in new_index:
            r = find(e)
            heads.setdefault(r, (new_index[h[0]], h[1]))
    all_classes = {find(e) for i in removed for e in X[i]}
    free = d.free_loops + len(all_classes - classes_alive)
    nd, _ = _assemble(slots, free, heads)
    return nd, [new_index.get(i) for i in range(len(X))]


SMOOTHING_MODES = ("zero", "infinity", "oriented")


def smoothing_joins(d: LinkDiagram, p: int, mode: str) -> list:
    """Slot pairs joined when smoothing crossing p.

    zero joins (a,b) and (c,d); infinity joins (a,d) and (b,c); oriented is
    zero at positive crossings and infinity at negative ones.
    """
    if mode == "oriented":
        mode = "zero" if d.sign(p) == 1 else "infinity"
    if mode == "zero":
        pairs = ((0, 1), (2, 3))
    elif mode == "infinity":
        pairs = ((0, 3), (1, 2))
    else:
        raise DiagramError(f"unknown smoothing mode {mode!r}")
    return [((p, s), (p, t)) for s, t in pairs]


@lru_cache(maxsize=50_000)
def smooth_crossing(d: LinkDiagram, p: int, mode: str) -> LinkDiagram:
    if not 0 <= p < d.crossing_count:
        raise DiagramError(f"no crossing {p}")
    return _remove(d, [p], smoothing_joins(d, p, mode))[0]


def mirror(d: LinkDiagram) -> LinkDiagram:
    slots = [[x[(t + 1) % 4] for t in range(4)] for x in d.crossings]
    heads = {e: (i, (s - 1) % 4) for e, (i, s) in _current_heads(d).items()}
    return _assemble(slots, d.free_loops, heads)[0]


def crossing_change(d: LinkDiagram, p: int) -> LinkDiagram:
    if not 0 <= p < d.crossing_count:
        raise DiagramError(f"no crossing {p}")
    slots = _slots(d)
    slots[p] = [slots[p][(t + 1) % 4] for t in range(4)]
    heads = {e: (i, (s - 1) % 4) if i == p else (i, s) for e, (i, s) in _current_heads(d).items()}
    return _assemble(slots, d.free_loops, heads)[0]


def reverse_component(d: LinkDiagram, j: int) -> LinkDiagram:
    if not 0 <= j < d.component_count:
        raise DiagramError(f"no component {j}")
    if j >= len(d.component_edges):
        return d
    heads = _current_heads(d)
    for e in d.component_edges[j]:
        heads[e] = d.tail(e)
    return _assemble(_slots(d), d.free_loops, heads)[0]


def connected_sum(d1: LinkDiagram, d2: LinkDiagram, e1: int | None = None, e2: int | None = None) -> LinkDiagram:
    """Splice d1 and d2 by cutting edge e1 of d1 and e2 of d2 (default: edge 1 of each)."""
    if d1.crossing_count == 0 or d2.crossing_count == 0:
        base = d2 if d1.crossing_count == 0 else d1
        other = d1 if d1.crossing_count == 0 else d2
        if other.component_count < 1:
            raise DiagramError("connected sum needs a component on each side")
        return LinkDiagram(base.crossings, base.free_loops + other.free_loops - 1) \
            if base.crossing_count else unknot(d1.free_loops + d2.free_loops - 1)
    e1 = 1 if e1 is None else e1
    e2 = 1 if e2 is None else e2
    if not 1 <= e1 <= d1.edge_count or not 1 <= e2 <= d2.edge_count:
        raise DiagramError("cut edge out of range")
    shift = d1.edge_count
    slots = [list(x) for x in d1.crossings] + [[v + shift for v in x] for x in d2.crossings]
    off = d1.crossing_count
    h1 = d1.head(e1)
    h2 = d2.head(e2)
    # e1 now runs from its tail in d1 to the head of e2 in d2, and vice versa
    slots[h1[0]][h1[1]] = e2 + shift
    slots[off + h2[0]][h2[1]] = e1
    heads = {e: d1.head(e) for e in range(1, d1.edge_count + 1)}
    heads.update({e + shift: (off + d2.head(e)[0], d2.head(e)[1]) for e in range(1, d2.edge_count + 1)})
    heads[e1] = (off + h2[0], h2[1])
    heads[e2 + shift] = h1
    return _assemble(slots, d1.free_loops + d2.free_loops, heads)[0]


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    shift = d1.edge_count
    slots = [list(x) for x in d1.crossings] + [[v + shift for v in x] for x in d2.crossings]
    off = d1.crossing_count
    heads = {e: d1.head(e) for e in range(1, d1.edge_count + 1)}
    heads.update({e + shift: (off + d2.head(e)[0], d2.head(e)[1]) for e in range(1, d2.edge_count + 1)})
    return _assemble(slots, d1.free_loops + d2.free_loops, heads)[0]


def edit(d: LinkDiagram, action: str, *args) -> LinkDiagram:
    """Dispatch for mirror, crossing_change(p), reverse_component(j), connected_sum(d2, e, e2)."""
    table = {
        "mirror": mirror,
        "crossing_change": crossing_change,
        "reverse_component": reverse_component,
        "connected_sum": connected_sum,
    }
    if action not in table:
        raise DiagramError(f"unknown edit {action!r}")
    return table[action](d, *args)


# ---------------------------------------------------------------------------
# reducing Reidemeister moves


def _find_r1(d: LinkDiagram):
    for i, x in enumerate(d.crossings):
        for s in range(4):
            if x[s] == x[(s + 1) % 4]:
                return i, s
    return None


def _find_r2(d: LinkDiagram):
    faces, _ = d.darts_faces
    for f in faces:
        if len(f) != 2:
            continue
        (i, s), (j, t1) = f
        if i == j:
            continue
        # dart (i, s) arrives at j in slot t1 - 1
        t = (t1 - 1) % 4
        if s % 2 != t % 2:
            continue  # the edge is over at one end and under at the other
        return (i, j)
    return None


def _erase(d: LinkDiagram, crossings) -> LinkDiagram:
    """Delete crossings while keeping both strands through each of them."""
    joins = []
    for i in crossings:
        joins += [((i, 0), (i, 2)), ((i, 1), (i, 3))]
    return _remove(d, crossings, joins)[0]


@lru_cache(maxsize=50_000)
def simplify(d: LinkDiagram) -> LinkDiagram:
    """Apply crossing-reducing R1 and R2 moves until none applies."""
    while True:
        hit = _find_r1(d)
        if hit is not None:
            d = _erase(d, [hit[0]])
            continue
        hit = _find_r2(d)
        if hit is not None:
            d = _erase(d, hit)
            continue
        return d


# ---------------------------------------------------------------------------
# statistics


def is_alternating(d: LinkDiagram) -> bool:
    for comp in d.component_edges:
        kinds = [d.head(e)[1] % 2 for e in comp]
        if any(kinds[k] == kinds[k - 1] for k in range(len(kinds))):
            return False
    return True


def linking_matrix(d: LinkDiagram) -> list:
    n = d.component_count
    twice = [[0] * n for _ in range(n)]
    for p, (a, b, c, e) in enumerate(d.crossings):
        i, j = d.component_of(a), d.component_of(b)
        if i != j:
            twice[i][j] += d.sign(p)
            twice[j][i] += d.sign(p)
    for row in twice:
        for k, v in enumerate(row):
            if v % 2:
                raise DiagramError("odd mixed crossing count; diagram is not closed")
            row[k] = v // 2
    return twice


def diagram_stats(d: LinkDiagram) -> dict:
    return {
        "writhe": d.writhe,
        "crossing_signs": list(d.signs),
        "components": d.component_count,
        "linking_matrix": linking_matrix(d),
        "is_alternating": is_alternating(d),
    }


# ---------------------------------------------------------------------------
# faces and checkerboard colorings


@dataclass(frozen=True)
class FaceSet:
    faces: tuple  # each face: tuple of (edge, side) with side 'R' for the dart direction
    darts: tuple  # each face: tuple of darts (crossing, slot)
    adjacency: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CheckerboardColoring:
    color: tuple  # per face: 0 white, 1 black
    unbounded_face: int

    def white(self) -> list:
        return [f for f, c in enumerate(self.color) if c == 0]

    def black(self) -> list:
        return [f for f, c in enumerate(self.color) if c == 1]


def faces_and_coloring(d: LinkDiagram, unbounded: int | None = None) -> tuple[FaceSet, CheckerboardColoring]:
    if d.crossing_count == 0:
        if d.free_loops != 1:
            raise DiagramError("disconnected projection; process split parts separately")
        if unbounded not in (None, 0, 1):
            raise DiagramError(f"invalid face id {unbounded}")
        u = unbounded or 0
        fs = FaceSet(faces=((), ()), darts=((), ()), adjacency={0: {1}, 1: {0}})
        return fs, CheckerboardColoring(color=(0, 1) if u == 0 else (1, 0), unbounded_face=u)
    if not d.is_connected_projection:
        raise DiagramError("disconnected projection; process split parts separately")
    d.check_planar()
    faces, face_of = d.darts_faces
    u = 0 if unbounded is None else unbounded
    if not 0 <= u < len(faces):
        raise DiagramError(f"invalid face id {unbounded}")
    adj: dict[int, set] = {f: set() for f in range(len(faces))}
    for dart, f in face_of.items():
        g = face_of[d.other_end(*dart)]
        adj[f].add(g)
    color = [None] * len(faces)
    color[u] = 0
    stack = [u]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if color[g] is None:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise DiagramError("faces cannot be checkerboard colored")
    named = tuple(tuple((d.crossings[i][s], "R") for i, s in f) for f in faces)
    fs = FaceSet(faces=named, darts=tuple(tuple(f) for f in faces), adjacency=adj)
    return fs, CheckerboardColoring(color=tuple(color), unbounded_face=u)


# ---------------------------------------------------------------------------
# split parts


def split_parts(d: LinkDiagram) -> list:
    """Connected projection pieces as separate diagrams (free loops become unknots)."""
    out = []
    for part in d.projection_parts:
        idx = {i: k for k, i in enumerate(part)}
        slots = [list(d.crossings[i]) for i in part]
        heads = {}
        for e in range(1, d.edge_count + 1):
            h = d.head(e)
            if h[0] in idx:
                heads[e] = (idx[h[0]], h[1])
        out.append(_assemble(slots, 0, heads)[0])
    out.extend(unknot(1) for _ in range(d.free_loops))
    return out
