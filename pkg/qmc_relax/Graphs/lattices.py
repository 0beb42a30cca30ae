"""Lattice generators: square grid, kagome and Shastry-Sutherland."""

import numpy as np
import networkx as nx

from qmc_relax.Graphs.graph import Graph, GraphError

def _collect(pairs, weight):
    # merge pairs that coincide after wrapping, keeping the first weight
    edges = {}
    for i, j in pairs:
        if i == j:
            continue
        key = (min(i, j), max(i, j))
        if key not in edges:
            edges[key] = weight
    return edges

def gen_square(L, periodic=True):
    """Generate the L x L nearest neighbour grid with unit weights.

    Vertex (row r, column c) has index r*L + c and position (c, r).  With
    periodic boundaries both directions wrap; for L=2 the wrapped bonds
    coincide with the existing ones and are stored once.

    Args:
        L (int): linear size, >= 2
        periodic (bool): wrap both directions

    Returns:
        Graph: n = L*L
    """
    L = int(L)
    if L < 2:
        raise GraphError(f"invalid-parameter: square lattice needs L >= 2, not {L}")
    G = nx.grid_2d_graph(L, L, periodic=periodic)
    index = lambda node: node[0] * L + node[1]
    edges = _collect(((index(u), index(v)) for u, v in G.edges()), 1.0)
    coords = [(float(v % L), float(v // L)) for v in range(L * L)]
    meta = {"family": "square", "L": L, "periodic": bool(periodic)}
    return Graph(L * L, [(i, j, w) for (i, j), w in edges.items()],
                 coords, meta, name=f"square{L * L}")

# kagome unit cell on the triangular Bravais lattice a1=(2,0), a2=(1,sqrt3)
KAGOME_A1 = np.array([2.0, 0.0])
KAGOME_A2 = np.array([1.0, np.sqrt(3.0)])
KAGOME_BASIS = [np.array([0.0, 0.0]),
                np.array([1.0, 0.0]),
                np.array([0.5, np.sqrt(3.0) / 2.0])]

def gen_kagome(cx, cy, periodic=True):
    """Generate a cx x cy kagome lattice (3 sites per cell, unit weights).

    Site s of cell (x, y) has index 3*(y*cx + x) + s with s in {A=0, B=1,
    C=2}.  Bonds: the three in-cell bonds AB, AC, BC plus B(x,y)-A(x+1,y),
    C(x,y)-A(x,y+1) and B(x,y)-C(x+1,y-1).  With periodic boundaries every
    site has coordination 4 and |E| = 2n.
    """
    cx, cy = int(cx), int(cy)
    if cx < 1 or cy < 1:
        raise GraphError(
            f"invalid-parameter: kagome needs positive cell counts, not ({cx}, {cy})"
        )
    if periodic and (cx < 2 or cy < 2):
        raise GraphError(
            "invalid-parameter: periodic kagome with a single cell along an "
            "axis produces duplicate bonds"
        )
    site = lambda x, y, s: 3 * (y * cx + x) + s
    pairs = []
    for y in range(cy):
        for x in range(cx):
            pairs += [(site(x, y, 0), site(x, y, 1)),
                      (site(x, y, 0), site(x, y, 2)),
                      (site(x, y, 1), site(x, y, 2))]
            for (dx, dy, s, t) in [(1, 0, 1, 0), (0, 1, 2, 0), (1, -1, 1, 2)]:
                xx, yy = x + dx, y + dy
                if periodic:
                    xx, yy = xx % cx, yy % cy
                elif not (0 <= xx < cx and 0 <= yy < cy):
                    continue
                pairs.append((site(x, y, s), site(xx, yy, t)))
    keys = [(min(i, j), max(i, j)) for i, j in pairs]
    if len(set(keys)) != len(keys):
        raise GraphError("invalid-parameter: kagome construction produced duplicate bonds")
    coords = []
    for y in range(cy):
        for x in range(cx):
            origin = x * KAGOME_A1 + y * KAGOME_A2
            coords += [tuple(origin + b) for b in KAGOME_BASIS]
    n = 3 * cx * cy
    meta = {"family": "kagome", "cx": cx, "cy": cy, "periodic": bool(periodic)}
    return Graph(n, [(i, j, 1.0) for i, j in keys], coords, meta,
                 name=f"kagome{n}")

def gen_shastry_sutherland(L, J, J_D):
    """Generate the periodic L x L Shastry-Sutherland lattice.

    Grid bonds carry weight J.  Faces whose lower-left corner (x, y) has both
    coordinates even get the diagonal (x,y)-(x+1,y+1), faces with both odd get
    (x+1,y)-(x,y+1), all with weight J_D, so every vertex lies on exactly one
    diagonal.  Zero weights are kept as edges.
    """
    L = int(L)
    if L < 2 or L % 2 != 0:
        raise GraphError(f"invalid-parameter: Shastry-Sutherland needs even L >= 2, not {L}")
    if J < 0 or J_D < 0:
        raise GraphError("invalid-parameter: couplings must be non-negative")
    square = gen_square(L, periodic=True)
    idx = lambda x, y: (y % L) * L + (x % L)
    edges = {(i, j): float(J) for i, j, _ in square.edges}
    for y in range(L):
        for x in range(L):
            if x % 2 == 0 and y % 2 == 0:
                a, b = idx(x, y), idx(x + 1, y + 1)
            elif x % 2 == 1 and y % 2 == 1:
                a, b = idx(x + 1, y), idx(x, y + 1)
            else:
                continue
            edges[(min(a, b), max(a, b))] = float(J_D)
    meta = {"family": "shastry_sutherland", "L": L, "J": float(J),
            "J_D": float(J_D), "periodic": True}
    return Graph(L * L, [(i, j, w) for (i, j), w in edges.items()],
                 square.coords, meta, name=f"ss{L * L}")

def diagonal_edges(g):
    """The J_D (dimer) bonds of a Shastry-Sutherland graph, as (i, j) pairs."""
    L = g.meta["L"]
    out = []
    for i, j, _ in g.edges:
        xi, yi = i % L, i // L
        xj, yj = j % L, j // L
        dx = min((xi - xj) % L, (xj - xi) % L)
        dy = min((yi - yj) % L, (yj - yi) % L)
        if dx == 1 and dy == 1:
            out.append((i, j))
    return out
