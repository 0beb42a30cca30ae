import numpy as np

from qmc_relax.Graphs.graph import Graph, GraphError

def apply_disorder(g, sigma, seed):
    """Multiply each non-zero coupling by (1 + sigma*X), X standard normal.

    Draws that would make a weight non-positive are rejected and redrawn; the
    number of redraws is stored in meta["disorder_resamples"].

    Args:
        g (Graph): the instance
        sigma (float): relative disorder strength, >= 0
        seed (int): seed of the random generator

    Returns:
        Graph: a new graph with the disordered weights
    """
    if sigma < 0:
        raise GraphError(f"invalid-parameter: sigma must be >= 0, not {sigma}")
    if sigma == 0:
        out = g.copy()
        out.meta["disorder_sigma"] = 0.0
        out.meta["disorder_seed"] = int(seed)
        out.meta["disorder_resamples"] = 0
        return out
    rng = np.random.default_rng(seed)
    resamples = 0
    edges = []
    for i, j, w in g.edges:
        if w == 0.0:
            edges.append((i, j, w))
            continue
        factor = 1.0 + sigma * rng.standard_normal()
        while factor <= 0.0:
            resamples += 1
            factor = 1.0 + sigma * rng.standard_normal()
        edges.append((i, j, w * factor))
    meta = dict(g.meta)
    meta["disorder_sigma"] = float(sigma)
    meta["disorder_seed"] = int(seed)
    meta["disorder_resamples"] = resamples
    return Graph(g.n, edges, g.coords, meta, g.name)
