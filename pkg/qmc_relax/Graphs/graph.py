"""Weighted interaction graph used as a Quantum Max Cut instance."""

import json
import copy

import numpy as np
import networkx as nx

class GraphError(Exception):
    pass

def canonical_edges(edges, n):
    """Return edges sorted and in canonical (i < j) order.

    Args:
        edges (iterable): (i, j, w) triples, in any vertex order
        n (int): the number of vertices

    Returns:
        list: sorted list of (i, j, w) with 0 <= i < j < n

    Raises:
        GraphError: on self loops, out of range vertices, negative weights or
                    repeated pairs
    """
    canon = {}
    for e in edges:
        i, j, w = int(e[0]), int(e[1]), float(e[2])
        if i == j:
            raise GraphError(f"Self loop on vertex {i}")
        if i > j:
            i, j = j, i
        if i < 0 or j >= n:
            raise GraphError(f"Edge ({i}, {j}) out of range for n={n}")
        if w < 0.0 or not np.isfinite(w):
            raise GraphError(f"Edge ({i}, {j}) has invalid weight {w}")
        if (i, j) in canon:
            raise GraphError(f"Duplicate edge ({i}, {j})")
        canon[(i, j)] = w
    return [(i, j, canon[(i, j)]) for (i, j) in sorted(canon)]


class Graph:
    """Weighted graph (n, edges, coords, meta).

    Every edge is stored as (i, j, w) with 0 <= i < j < n and w >= 0, edges
    are sorted lexicographically.  coords is either None or a list of n 2D
    positions.  meta is a free-form dictionary (lattice family, parameters,
    seed).
    """
    def __init__(self, n, edges, coords=None, meta=None, name=None):
        if int(n) < 1:
            raise GraphError(f"Vertex count must be >= 1, not {n}")
        self.n = int(n)
        self.edges = canonical_edges(edges, self.n)
        if coords is not None:
            if len(coords) != self.n:
                raise GraphError(
                    f"coords has {len(coords)} entries, expected {self.n}"
                )
            coords = [(float(c[0]), float(c[1])) for c in coords]
        self.coords = coords
        self.meta = dict(meta) if meta is not None else {}
        self.name = name if name is not None else self.meta.get("family", "graph")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges and
                self.coords == other.coords)

    def __repr__(self):
        return f"Graph(name={self.name}, n={self.n}, edges={len(self.edges)})"

    def num_edges(self):
        return len(self.edges)

    def total_weight(self):
        return float(sum(w for _, _, w in self.edges))

    def edge_set(self):
        return set((i, j) for i, j, _ in self.edges)

    def weight_dict(self):
        return {(i, j): w for i, j, w in self.edges}

    def neighbours(self, v):
        nb = []
        for i, j, _ in self.edges:
            if i == v:
                nb.append(j)
            elif j == v:
                nb.append(i)
        return sorted(nb)

    def copy(self):
        return copy.deepcopy(self)

    def relabel(self, perm):
        """Return a graph with vertex v renamed to perm[v]."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel requires a permutation of the vertices")
        edges = [(perm[i], perm[j], w) for i, j, w in self.edges]
        coords = None
        if self.coords is not None:
            coords = [None] * self.n
            for v, c in enumerate(self.coords):
                coords[perm[v]] = c
        return Graph(self.n, edges, coords, self.meta, self.name)

    def to_networkx(self):
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        for i, j, w in self.edges:
            G.add_edge(i, j, weight=w)
        return G

    @staticmethod
    def from_networkx(G, meta=None, name=None):
        nodes = sorted(G.nodes())
        index = {v: k for k, v in enumerate(nodes)}
        edges = [(index[u], index[v], d.get("weight", 1.0))
                 for u, v, d in G.edges(data=True)]
        return Graph(len(nodes), edges, meta=meta, name=name)

    def to_dict(self):
        out = {"name": self.name,
               "n": self.n,
               "edges": [[i, j, w] for i, j, w in self.edges],
               "meta": self.meta}
        if self.coords is not None:
            out["coords"] = [list(c) for c in self.coords]
        return out

    @staticmethod
    def from_dict(d):
        try:
            return Graph(d["n"], d["edges"], d.get("coords", None),
                         d.get("meta", {}), d.get("name", None))
        except KeyError as e:
            raise GraphError(f"Instance is missing key: {e}")


def load_instance(path):
    """Load a graph from the instance JSON format."""
    with open(path) as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as e:
            raise GraphError(f"Could not parse instance file {path}: {e}")
    return Graph.from_dict(d)

def save_instance(g, path):
    with open(path, "w") as fh:
        json.dump(g.to_dict(), fh)
