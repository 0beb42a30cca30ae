"""Rounding a Pauli level-1 relaxation optimum to an explicit state.

Two families of states are produced from the Gram vectors of M: products of
single-qubit states obtained by a Gaussian projection to R^3, and the same
with the high-singlet edges of the matching S replaced by exact singlets.
"""

import time

import numpy as np

from qmc_relax.Exact.stateenergy import state_energy
from qmc_relax.Models.scaling import QMC_MAX
from qmc_relax.Rounding.hypergeometric import RoundingError, expected_edge_value
from qmc_relax.Rounding.assignment import BlochAssignment
from qmc_relax.Rounding.matching import extract_matching, S_EDGE, T_EDGE
from qmc_relax.Rounding.gram import gram_vectors

DEFAULT_T = 0.771
SAMPLE_CHUNK = 1024

class RoundingResult:
    """Energies (QMC-max scaling) of the rounded states of one solution."""
    def __init__(self, expected_energy_S, expected_energy_prod,
                 best_sampled_energy, samples, seed, t, matching, edge_classes,
                 best_assignment, relaxation_objective, sample_stats):
        self.expected_energy_S = float(expected_energy_S)
        self.expected_energy_prod = float(expected_energy_prod)
        self.best_sampled_energy = best_sampled_energy
        self.samples = int(samples)
        self.seed = seed
        self.t = float(t)
        self.matching = matching
        self.edge_classes = edge_classes
        self.best_assignment = best_assignment
        self.relaxation_objective = float(relaxation_objective)
        self.sample_stats = sample_stats

    @property
    def expected_best(self):
        return max(self.expected_energy_S, self.expected_energy_prod)

    @property
    def guarantee_ratio(self):
        if abs(self.relaxation_objective) < 1e-12:
            return 1.0
        return self.expected_best / self.relaxation_objective

    def to_dict(self):
        return {"t": self.t,
                "samples": self.samples,
                "seed": self.seed,
                "matching": [list(p) for p in self.matching],
                "edge_classes": list(self.edge_classes),
                "expected_energy_S": self.expected_energy_S,
                "expected_energy_prod": self.expected_energy_prod,
                "best_sampled_energy": self.best_sampled_energy,
                "sample_stats": self.sample_stats,
                "relaxation_objective": self.relaxation_objective,
                "guarantee_ratio": self.guarantee_ratio,
                "best_state": (self.best_assignment.to_dict()
                               if self.best_assignment is not None else None)}

def expected_energies(sol, g, matching, classes):
    """Deterministic expectations over the projection of both states.

    Returns:
        (float, float): expected QMC-max energy of the singlet state and of
        the product state
    """
    M = sol.M
    e_prod = 0.0
    e_S = 0.0
    for (i, j, w), cls in zip(g.edges, classes):
        g_e = w * expected_edge_value(M[i, j])
        e_prod += g_e
        if cls == S_EDGE:
            e_S += w
        elif cls == T_EDGE:
            e_S += 0.25 * w
        else:
            e_S += g_e
    return e_S, e_prod

def _normalise(P):
    norms = np.linalg.norm(P, axis=-1, keepdims=True)
    out = np.where(norms > 1e-300, P / np.maximum(norms, 1e-300), 0.0)
    # a zero projection has probability zero; pick a fixed direction for it
    out[..., 2] = np.where(norms[..., 0] > 1e-300, out[..., 2], 1.0)
    return out

def round(sol, g, t=DEFAULT_T, samples=100, seed=0, verbose=False):
    """Round a SOC+P1 solution.

    Args:
        sol (RelaxSolution): optimum carrying the moment matrix M
        g (Graph): the instance
        t (float): singlet threshold on y
        samples (int): number of projection draws
        seed: seed of numpy.random.default_rng

    Returns:
        RoundingResult
    """
    if sol.M is None:
        raise RoundingError(
            "precondition: rounding needs the moment matrix of a Pauli "
            "level-1 (SOC_P1) solution"
        )
    if samples < 0:
        raise RoundingError(f"invalid-parameter: samples={samples}")
    t_start = time.time()
    matching, classes = extract_matching(sol, g, t)
    V = gram_vectors(sol.M)
    e_S, e_prod = expected_energies(sol, g, matching, classes)
    if verbose:
        print(f"Matching of {len(matching)} edges, expected energies "
              f"S {e_S:.6f} prod {e_prod:.6f}")

    I = np.array([e[0] for e in g.edges], dtype=np.int64)
    J = np.array([e[1] for e in g.edges], dtype=np.int64)
    W = np.array([e[2] for e in g.edges], dtype=np.float64)
    is_S = np.array([c == S_EDGE for c in classes], dtype=bool)
    is_T = np.array([c == T_EDGE for c in classes], dtype=bool)

    rng = np.random.default_rng(seed)
    sums = np.zeros(2)
    sums2 = np.zeros(2)
    best = (-np.inf, None, None)
    done = 0
    while done < samples:
        size = min(SAMPLE_CHUNK, samples - done)
        R = rng.standard_normal((size, 3, V.shape[1]))
        theta = _normalise(np.einsum("nr,cdr->cnd", V, R))
        prod = 0.25 * W * (1.0 - np.sum(theta[:, I, :] * theta[:, J, :], axis=2))
        singlet = np.where(is_S, W, np.where(is_T, 0.25 * W, prod))
        energies = np.stack([singlet.sum(axis=1), prod.sum(axis=1)], axis=1)
        sums += energies.sum(axis=0)
        sums2 += (energies * energies).sum(axis=0)
        c, k = np.unravel_index(np.argmax(energies), energies.shape)
        if energies[c, k] > best[0]:
            best = (energies[c, k], k == 0, theta[c].copy())
        done += size

    stats = {}
    best_energy = None
    best_assignment = None
    if samples > 0:
        mean = sums / samples
        stderr = np.sqrt(np.maximum(sums2 / samples - mean * mean, 0.0) / samples)
        stats = {"mean_S": mean[0], "stderr_S": stderr[0],
                 "mean_prod": mean[1], "stderr_prod": stderr[1]}
        stats = {k: float(v) for k, v in stats.items()}
        _, with_singlets, theta = best
        best_assignment = BlochAssignment(g.n, matching if with_singlets else [],
                                          theta)
        best_energy = state_energy(g, best_assignment, QMC_MAX)
    if verbose:
        print(f"Best sampled energy: {best_energy}")
        print(f"Time taken: {time.time() - t_start:.3f}")
    return RoundingResult(e_S, e_prod, best_energy, samples, seed, t, matching,
                          classes, best_assignment, sol.objective["qmc_max"],
                          stats)
