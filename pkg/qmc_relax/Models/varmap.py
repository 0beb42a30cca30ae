from itertools import combinations

from qmc_relax.Models.scaling import ModelError

class VariableMap:
    """Variable ids of the relaxation.

    pair_index: {(i, j), i < j: id} over all C(n, 2) pairs, lexicographic.
    quad_index: {((i, j, k, l), p): id} for product p in
                0: (ij)(kl), 1: (ik)(jl), 2: (il)(jk).
    """
    def __init__(self, n):
        self.n = int(n)
        self.pair_index = {}
        for pair in combinations(range(self.n), 2):
            self.pair_index[pair] = len(self.pair_index)
        self.quad_index = {}
        self.quads = []

    @property
    def num_pairs(self):
        return len(self.pair_index)

    @property
    def num_vars(self):
        return len(self.pair_index) + len(self.quad_index)

    def pair(self, i, j):
        if i == j:
            raise ModelError(f"No variable for the pair ({i}, {j})")
        return self.pair_index[(min(i, j), max(i, j))]

    def pairs(self):
        return list(self.pair_index.keys())

    def add_quad(self, quad):
        quad = tuple(sorted(quad))
        if len(set(quad)) != 4:
            raise ModelError(f"Quadruple {quad} must hold four distinct vertices")
        if (quad, 0) in self.quad_index:
            raise ModelError(f"Quadruple {quad} already has product variables")
        start = self.num_vars
        for p in range(3):
            self.quad_index[(quad, p)] = start + p
        self.quads.append(quad)
        return start

    def quad(self, quad, p):
        return self.quad_index[(tuple(sorted(quad)), p)]

    def quad_pair_vars(self, quad):
        """Pair ids in the order x12, x13, x14, x23, x24, x34."""
        i, j, k, l = sorted(quad)
        return [self.pair(a, b) for a, b in
                ((i, j), (i, k), (i, l), (j, k), (j, l), (k, l))]

    def quad_product_vars(self, quad):
        return [self.quad(quad, p) for p in range(3)]

    def to_dict(self):
        return {"n": self.n,
                "quads": [list(q) for q in self.quads]}
