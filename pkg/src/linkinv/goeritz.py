"""Goeritz matrices, the signature/nullity corrections and the link determinant.

Local conventions at a crossing p = (a, b, c, d), with Q_xy the quadrant
between slots x and y:

    eta(p)   = +1 if Q_bc is black, else -1   (orientation free)
    type II  : the oriented smoothing joins the two black quadrants,
               which happens exactly when eta(p) = sign(p)
    mu       = sum of eta over type II crossings
    g_ij     = -sum of eta over crossings meeting white faces X_i and X_j

These reproduce the T(2,k) computation: with the inner and outer regions
white and all crossings positive, G' = [[k,-k],[-k,k]], every crossing is
of type II and mu = k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import CheckerboardColoring, LinkDiagram, faces_and_coloring, split_parts
from .graphs import crossing_eta, tait_graph
from .linalg import block_diag, det, symmetric_signature
from .rings import GaussInt, i_power


@dataclass(frozen=True)
class GoeritzData:
    G_unreduced: list
    G: list
    white_faces: list  # face ids, X_0 first
    eta: tuple
    ctype: tuple  # "I" or "II" per crossing
    mu: int
    beta: int


def goeritz_data(d: LinkDiagram, coloring: CheckerboardColoring | None = None) -> GoeritzData:
    if coloring is None:
        _, coloring = faces_and_coloring(d)
    if d.crossing_count == 0:
        return GoeritzData([[0]], [], [coloring.unbounded_face], (), (), 0, 1)
    white = [coloring.unbounded_face] + [f for f in coloring.white() if f != coloring.unbounded_face]
    idx = {f: k for k, f in enumerate(white)}
    n = len(white)
    Gp = [[0] * n for _ in range(n)]
    etas, ctypes = [], []
    mu = 0
    for p in range(d.crossing_count):
        eta = crossing_eta(d, coloring, p)
        etas.append(eta)
        if eta == d.sign(p):
            ctypes.append("II")
            mu += eta
        else:
            ctypes.append("I")
        if eta == 1:
            f, g = d.quadrant_face(p, 0), d.quadrant_face(p, 2)
        else:
            f, g = d.quadrant_face(p, 1), d.quadrant_face(p, 3)
        i, j = idx[f], idx[g]
        if i != j:
            Gp[i][j] -= eta
            Gp[j][i] -= eta
    for i in range(n):
        Gp[i][i] = -sum(Gp[i][j] for j in range(n) if j != i)
    G = [row[1:] for row in Gp[1:]]
    beta = tait_graph(d, coloring)[0].component_count()
    return GoeritzData(Gp, G, white, tuple(etas), tuple(ctypes), mu, beta)


def signature_and_nullity(d: LinkDiagram, coloring: CheckerboardColoring | None = None) -> dict:
    """sigma = sigma(G) - mu and nul = nul(G) + beta - 1, added over split parts."""
    parts = split_parts(d) if not d.is_connected_projection else [d]
    if len(parts) > 1:
        sig = nul = 0
        for part in parts:
            r = signature_and_nullity(part)
            sig += r["sigma"]
            nul += r["nullity"]
        return {"sigma": sig, "nullity": nul + len(parts) - 1}
    data = goeritz_data(d, coloring)
    r = symmetric_signature(data.G)
    return {"sigma": r["sigma"] - data.mu, "nullity": r["nullity"] + data.beta - 1}


def generalized_goeritz(d: LinkDiagram, coloring: CheckerboardColoring | None = None) -> list:
    """H = G (+) diag(-eta over type II crossings) (+) zero block of size beta - 1."""
    data = goeritz_data(d, coloring)
    A = [[-e] for e, t in zip(data.eta, data.ctype) if t == "II"]
    A = block_diag(*[[[row[0]]] for row in A]) if A else []
    Z = [[0] * (data.beta - 1) for _ in range(data.beta - 1)]
    return block_diag(data.G, A, Z)


def link_determinant(d: LinkDiagram, coloring: CheckerboardColoring | None = None) -> GaussInt:
    """det(i H); zero for diagrams whose projection splits."""
    if not d.is_connected_projection:
        return GaussInt(0, 0)
    H = generalized_goeritz(d, coloring)
    return i_power(len(H)) * det(H)
