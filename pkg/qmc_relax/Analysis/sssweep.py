"""Shastry-Sutherland sweeps over the coupling ratio J/J_D (J_D = 1)."""

import time

import numpy as np

from qmc_relax.Graphs.lattices import gen_shastry_sutherland
from qmc_relax.Graphs.disorder import apply_disorder
from qmc_relax.Models.scaling import VARBENCH
from qmc_relax.Models.relaxsolution import solve_relaxation, level_tag, SOC, SOC_P1
from qmc_relax.Exact.groundstate import ground_energy
from qmc_relax.Analysis.sweepresult import SweepResult, AnalysisError

ED_MAX_QUBITS = 20

def _level_key(level):
    return level.lower()

def _instance(L, ratio, sigma, seed):
    g = gen_shastry_sutherland(L, ratio, 1.0)
    return apply_disorder(g, sigma, seed)

def solve_point(g, levels, with_ed, opts=None):
    point = {}
    for level in levels:
        sol = solve_relaxation(g, level, opts=opts)
        point[_level_key(level)] = sol.objective["varbench"]
        if level == SOC:
            point["edges"] = [list(e) for e in sol.edge_values(g)]
    point["ed"] = ground_energy(g, VARBENCH) if with_ed else None
    return point

def run_ss_sweep(L, ratios, sigma=0.0, seed=0, levels=(SOC, SOC_P1),
                 with_ed=None, opts=None, verbose=False):
    """Relaxation objectives of the L x L Shastry-Sutherland model.

    Args:
        L (int): even side length
        ratios: grid of J/J_D values
        sigma (float): disorder strength, one disorder draw per point
        seed (int): disorder seed, shared by every grid point
        with_ed (bool): attach exact energies; defaults to L*L <= 20

    Returns:
        SweepResult
    """
    levels = [level_tag(l) for l in levels]
    n = L * L
    if with_ed is None:
        with_ed = n <= ED_MAX_QUBITS
    elif with_ed and n > ED_MAX_QUBITS:
        raise AnalysisError(f"dimension cap exceeded: exact energies need L*L <= {ED_MAX_QUBITS}")
    st = time.time()
    points = []
    for r in ratios:
        g = _instance(L, float(r), sigma, seed)
        point = solve_point(g, levels, with_ed, opts)
        point["value"] = float(r)
        points.append(point)
        if verbose:
            summary = " ".join(f"{k}={point[k]:.6f}" for k in point
                               if k not in ("edges", "value") and point[k] is not None)
            print(f"J/J_D={r:.4f} {summary}")
    if verbose:
        print("Time taken: ", time.time() - st)
    meta = {"family": "shastry_sutherland", "L": L, "sigma": sigma,
            "levels": levels, "tol": opts.tol if opts is not None else None}
    return SweepResult("J/J_D", points, [seed], None, meta)

def find_kink(grid, values):
    """Grid point with the largest jump in finite-difference slope.

    Returns:
        (float, float): location and size of the slope change
    """
    grid = np.asarray(grid, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    if grid.size < 3 or grid.size != values.size:
        raise AnalysisError("find_kink needs at least three matching grid points")
    slopes = np.diff(values) / np.diff(grid)
    jumps = np.abs(np.diff(slopes))
    k = int(np.argmax(jumps))
    return float(grid[k + 1]), float(jumps[k])

def run_disorder_study(L, ratio, sigma, seeds, levels=(SOC, SOC_P1), opts=None,
                       verbose=False):
    """Mean exact/relaxation ratio over disorder draws at one J/J_D.

    Returns:
        dict: per level key, mean and standard error of ED / objective and the
        individual ratios
    """
    levels = [level_tag(l) for l in levels]
    if L * L > ED_MAX_QUBITS:
        raise AnalysisError(f"dimension cap exceeded: exact energies need L*L <= {ED_MAX_QUBITS}")
    ratios = {_level_key(l): [] for l in levels}
    for s in seeds:
        g = _instance(L, ratio, sigma, s)
        point = solve_point(g, levels, True, opts)
        for l in levels:
            ratios[_level_key(l)].append(point["ed"] / point[_level_key(l)])
        if verbose:
            print(f"seed {s}: " + " ".join(f"{k}={v[-1]:.6f}" for k, v in ratios.items()))
    out = {}
    for k, v in ratios.items():
        v = np.asarray(v)
        err = float(np.std(v, ddof=1) / np.sqrt(v.size)) if v.size > 1 else 0.0
        out[k] = {"mean": float(np.mean(v)), "stderr": err, "ratios": v.tolist()}
    return out
