import time

import numpy as np

from qmc_relax.Graphs.erdosrenyi import gen_erdos_renyi
from qmc_relax.Models.scaling import VARBENCH
from qmc_relax.Models.socmodel import ALL
from qmc_relax.Models.relaxsolution import solve_relaxation, level_tag, SOC, SOC_P1
from qmc_relax.Exact.groundstate import ground_energy, MAX_LANCZOS_QUBITS
from qmc_relax.Analysis.sweepresult import AnalysisError

ER_MAX_QUBITS = 20
MAX_REDRAWS = 1000

class ERStudy:
    """Relaxation over exact energy ratios (VarBench) of random instances."""
    def __init__(self, n, p, relaxation, seed, ratios, seeds):
        self.n = n
        self.p = p
        self.relaxation = relaxation
        self.seed = seed
        self.ratios = np.asarray(ratios, dtype=np.float64)
        self.seeds = list(seeds)

    @property
    def mean(self):
        return float(np.mean(self.ratios))

    @property
    def stderr(self):
        if len(self.ratios) < 2:
            return 0.0
        return float(np.std(self.ratios, ddof=1) / np.sqrt(len(self.ratios)))

    def to_dict(self):
        return {"n": self.n, "p": self.p, "relaxation": self.relaxation,
                "seed": self.seed, "instances": len(self.ratios),
                "mean": self.mean, "stderr": self.stderr,
                "ratios": self.ratios.tolist(), "seeds": self.seeds}

def draw_instances(n, p, instances, seed):
    """Seeded G(n, p) graphs; draws without edges are replaced."""
    rng = np.random.default_rng(seed)
    out = []
    redraws = 0
    while len(out) < instances:
        s = int(rng.integers(2 ** 31 - 1))
        g = gen_erdos_renyi(n, p, s)
        if g.num_edges() == 0:
            redraws += 1
            if redraws > MAX_REDRAWS:
                raise AnalysisError(f"G({n}, {p}) keeps producing empty graphs")
            continue
        out.append(g)
    return out

def run_er_study(n, p, instances, relaxation=SOC, seed=0, opts=None,
                 triple_policy=ALL, verbose=False):
    """Mean ratio of relaxation objective to ground energy on G(n, p).

    Both energies are in VarBench scaling and negative, so a ratio above 1
    means the relaxation lies below the exact energy.

    Returns:
        ERStudy
    """
    relaxation = level_tag(relaxation)
    if relaxation not in (SOC, SOC_P1):
        raise AnalysisError(f"invalid-parameter: ER study supports SOC and SOC_P1, not {relaxation}")
    if n > min(ER_MAX_QUBITS, MAX_LANCZOS_QUBITS):
        raise AnalysisError(f"dimension cap exceeded: exact energies need n <= {ER_MAX_QUBITS}")
    if not (0.0 < p <= 1.0):
        raise AnalysisError(f"invalid-parameter: p={p} not in (0, 1]")
    if instances < 1:
        raise AnalysisError(f"invalid-parameter: instances={instances}")
    st = time.time()
    ratios = []
    seeds = []
    for g in draw_instances(n, p, instances, seed):
        relax = solve_relaxation(g, relaxation, triple_policy, opts=opts)
        exact = ground_energy(g, VARBENCH)
        ratios.append(relax.objective["varbench"] / exact)
        seeds.append(g.meta["seed"])
        if verbose:
            print(f"{g.name}: {relaxation} {relax.objective['varbench']:.6f} "
                  f"ED {exact:.6f} ratio {ratios[-1]:.4f}")
    if verbose:
        print("Time taken: ", time.time() - st)
    return ERStudy(n, p, relaxation, seed, ratios, seeds)
