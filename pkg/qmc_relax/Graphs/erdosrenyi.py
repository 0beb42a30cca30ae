import networkx as nx

from qmc_relax.Graphs.graph import Graph, GraphError

def gen_erdos_renyi(n, p, seed):
    """G(n, p) random graph with unit weights, deterministic in the seed."""
    if int(n) < 2:
        raise GraphError(f"invalid-parameter: Erdos-Renyi needs n >= 2, not {n}")
    if not (0.0 <= p <= 1.0):
        raise GraphError(f"invalid-parameter: probability {p} outside [0, 1]")
    G = nx.gnp_random_graph(int(n), float(p), seed=int(seed))
    meta = {"family": "erdos_renyi", "n": int(n), "p": float(p),
            "seed": int(seed)}
    return Graph(int(n), [(u, v, 1.0) for u, v in G.edges()], meta=meta,
                 name=f"er{n}_p{p}_s{seed}")
