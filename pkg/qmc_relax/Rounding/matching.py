from qmc_relax.Rounding.hypergeometric import RoundingError

S_EDGE = "S"
T_EDGE = "T"
U_EDGE = "U"

def extract_matching(sol, g, t=0.771):
    """Split the edges of g by the relaxed singlet weight y.

    S holds edges with y > t, T the remaining edges touching a vertex of S,
    U the rest.

    Args:
        sol (RelaxSolution): relaxation optimum
        g (Graph): the instance the relaxation was built for
        t (float): threshold, 3/4 < t <= 1

    Returns:
        (list, list): the matching S as vertex pairs and one class tag per
        edge of g, in edge order

    Raises:
        RoundingError: when S is not a matching
    """
    if not (0.75 < t <= 1.0):
        raise RoundingError(f"invalid-parameter: threshold t={t} not in (3/4, 1]")
    if sol.n != g.n:
        raise RoundingError(f"solution has {sol.n} vertices, graph has {g.n}")
    matching = []
    matched = {}
    for i, j, w in g.edges:
        if sol.y_pair(i, j) <= t:
            continue
        for v in (i, j):
            if v in matched:
                a, b = matched[v]
                raise RoundingError(
                    f"inconsistent-solution: edges ({a}, {b}) and ({i}, {j}) "
                    f"both exceed t={t} at vertex {v}"
                )
        matched[i] = matched[j] = (i, j)
        matching.append((i, j))
    classes = []
    S = set(matching)
    for i, j, w in g.edges:
        if (i, j) in S:
            classes.append(S_EDGE)
        elif i in matched or j in matched:
            classes.append(T_EDGE)
        else:
            classes.append(U_EDGE)
    return matching, classes
