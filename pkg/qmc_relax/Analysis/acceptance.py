"""Verification suites run by qmr_verify.

Every suite returns a SuiteReport of named checks.  quick=True reduces the
sample counts and skips the expensive instances so a suite runs in seconds.
"""

import time

import numpy as np
import mpmath

from qmc_relax.Conic.solution import SolverOptions
from qmc_relax.Graphs.graph import Graph
from qmc_relax.Graphs.lattices import gen_square, gen_kagome
from qmc_relax.Graphs.erdosrenyi import gen_erdos_renyi
from qmc_relax.Models.scaling import VARBENCH
from qmc_relax.Models.socmodel import pt_soc_params
from qmc_relax.Models.relaxsolution import solve_relaxation, SOC, SOC_P1
from qmc_relax.Exact.groundstate import ground_energy
from qmc_relax.Symmetry.permutations import all_permutations, compose, parse
from qmc_relax.Symmetry.partitions import partitions
from qmc_relax.Symmetry.young import young_orthogonal_irrep
from qmc_relax.Symmetry.characters import weingarten
from qmc_relax.Symmetry.invariant import (
    random_invariant_operator, reconstruct_operator, is_state, alternating_sum
)
from qmc_relax.Symmetry.threequbit import (
    check_lm_pt, pt_value, qubit_triple_operator
)
from qmc_relax.Symmetry.fourqubit import PAIRS, PRODUCTS, fourqubit_feasible
from qmc_relax.Rounding.hypergeometric import (
    F, hyp2f1_half, expected_edge_value, monte_carlo_edge_value, t_prime
)
from qmc_relax.Rounding.rounding import round as round_solution
from qmc_relax.Analysis.sweepresult import AnalysisError
from qmc_relax.Analysis.ratiolp import solve_ratio_lp, ratio_lp_vertices, scan_F
from qmc_relax.Analysis.erstudy import run_er_study
from qmc_relax.Analysis.sssweep import run_ss_sweep, find_kink, run_disorder_study

SQ3 = np.sqrt(3.0)
SQ2 = np.sqrt(2.0)
SQ6 = np.sqrt(6.0)

# orthogonal irreps of S_3 and S_4 in the standard-tableaux basis
REFERENCE_IRREPS = {
    ((2, 1), "id"): np.eye(2),
    ((2, 1), "(12)"): np.array([[1.0, 0.0], [0.0, -1.0]]),
    ((2, 1), "(23)"): 0.5 * np.array([[-1.0, SQ3], [SQ3, 1.0]]),
    ((2, 1), "(13)"): 0.5 * np.array([[-1.0, -SQ3], [-SQ3, 1.0]]),
    ((2, 1), "(123)"): 0.5 * np.array([[-1.0, SQ3], [-SQ3, -1.0]]),
    ((2, 1), "(132)"): 0.5 * np.array([[-1.0, -SQ3], [SQ3, -1.0]]),
    ((3, 1), "(12)(34)"): np.array([[-1.0, 2 * SQ2, 0.0],
                                    [2 * SQ2, 1.0, 0.0],
                                    [0.0, 0.0, -3.0]]) / 3.0,
    ((3, 1), "(13)(24)"): -np.array([[1.0, SQ2, -SQ6],
                                     [SQ2, 2.0, SQ3],
                                     [-SQ6, SQ3, 0.0]]) / 3.0,
    ((3, 1), "(14)(23)"): -np.array([[1.0, SQ2, SQ6],
                                     [SQ2, 2.0, -SQ3],
                                     [SQ6, -SQ3, 0.0]]) / 3.0,
}

BOUNDARY_MARGIN = 1e-7
GUARANTEE_RATIO = 0.526

class Check:
    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}

class SuiteReport:
    def __init__(self, name, checks, elapsed):
        self.name = name
        self.checks = checks
        self.elapsed = elapsed

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {"suite": self.name, "passed": self.passed,
                "elapsed": self.elapsed,
                "checks": [c.to_dict() for c in self.checks]}

def _close(name, value, expected, tol):
    return Check(name, abs(value - expected) <= tol,
                 f"{value:.10g} vs {expected:.10g} (tol {tol:g})")

def _irreps_checks():
    checks = []
    worst = 0.0
    for (parts, text), R in REFERENCE_IRREPS.items():
        s = parse(text, sum(parts))
        worst = max(worst, np.max(np.abs(young_orthogonal_irrep(parts, s) - R)))
    checks.append(Check("irrep tables", worst <= 1e-12, f"max deviation {worst:.2e}"))
    worst_hom = 0.0
    worst_orth = 0.0
    for k in (3, 4):
        perms = all_permutations(k)
        for lam in partitions(k):
            for s in perms:
                Rs = young_orthogonal_irrep(lam, s)
                worst_orth = max(worst_orth,
                                 np.max(np.abs(Rs @ Rs.T - np.eye(Rs.shape[0]))))
                for t in perms:
                    dev = (young_orthogonal_irrep(lam, compose(s, t)) -
                           Rs @ young_orthogonal_irrep(lam, t))
                    worst_hom = max(worst_hom, np.max(np.abs(dev)))
    checks.append(Check("homomorphism S3 S4", worst_hom <= 1e-12, f"{worst_hom:.2e}"))
    checks.append(Check("orthogonality S3 S4", worst_orth <= 1e-12, f"{worst_orth:.2e}"))
    checks.append(_close("Wg(id, d=2)", weingarten((1, 1), 2), 1.0 / 3.0, 1e-15))
    checks.append(_close("Wg((12), d=2)", weingarten((2,), 2), -1.0 / 6.0, 1e-15))
    return checks

def suite_symmetry(quick=False, seed=0, opts=None):
    checks = _irreps_checks()
    rng = np.random.default_rng(seed)
    count = 100 if quick else 1000

    worst = 0.0
    for k, d in ((2, 2), (3, 2), (3, 3), (4, 2), (4, 3)):
        op, A = random_invariant_operator(k, d, rng)
        worst = max(worst, np.max(np.abs(reconstruct_operator(op) - A)))
    checks.append(Check("reconstruction round trip", worst <= 1e-10, f"{worst:.2e}"))

    worst = 0.0
    for _ in range(count):
        x, y, z = rng.uniform(-1.0, 1.0, 3)
        worst = max(worst, abs(alternating_sum(qubit_triple_operator(x, y, z))))
        op, _ = random_invariant_operator(3, 2, rng)
        worst = max(worst, abs(alternating_sum(op)))
    checks.append(Check("qubit [1,1,1] weight vanishes", worst <= 1e-12, f"{worst:.2e}"))

    for k, d in ((3, 2), (3, 3), (4, 2), (4, 3)):
        n = count if d ** k <= 27 else max(count // 10, 20)
        mismatch = 0
        for _ in range(n):
            op, A = random_invariant_operator(k, d, rng)
            lam = np.linalg.eigvalsh(A)[0]
            if abs(lam) < BOUNDARY_MARGIN:
                continue
            if is_state(op) != (lam >= 0.0):
                mismatch += 1
        checks.append(Check(f"block test vs spectrum k={k} d={d}", mismatch == 0,
                            f"{mismatch} of {n} disagree"))

    mismatch = 0
    for _ in range(count):
        op, A = random_invariant_operator(4, 2, rng)
        lam = np.linalg.eigvalsh(A)[0]
        if abs(lam) < BOUNDARY_MARGIN:
            continue
        pairs = [op.expect[parse(f"({i + 1}{j + 1})", 4)] for i, j in PAIRS]
        prods = [op.expect[parse("({}{})({}{})".format(a + 1, b + 1, c + 1, e + 1), 4)]
                 for (a, b), (c, e) in PRODUCTS]
        spectral = lam >= 0.0
        if not (fourqubit_feasible(pairs, prods) == is_state(op) == spectral):
            mismatch += 1
    checks.append(Check("four-qubit blocks vs 16x16 spectrum", mismatch == 0,
                        f"{mismatch} of {count} disagree"))

    points = 1000 if quick else 10000
    mismatch = 0
    for x, y, z in rng.uniform(-1.0, 1.0, size=(points, 3)):
        lam = np.linalg.eigvalsh(reconstruct_operator(qubit_triple_operator(x, y, z)))[0]
        if abs(lam) < BOUNDARY_MARGIN:
            continue
        if check_lm_pt(x, y, z) != (lam >= -1e-9):
            mismatch += 1
    checks.append(Check("LM and PT vs 8x8 spectrum", mismatch == 0,
                        f"{mismatch} of {points} disagree"))
    return checks

def suite_soc_param(quick=False, seed=0, opts=None):
    rng = np.random.default_rng(seed)
    count = 10 ** 5 if quick else 10 ** 6
    V = rng.uniform(-1.0, 1.0, size=(count, 3))
    lm = V.sum(axis=1)
    V = V[(lm >= 0.0) & (lm <= 3.0)]
    A, b, c, d = pt_soc_params()
    lhs = np.linalg.norm(V @ A.T + b, axis=1)
    rhs = V @ c + d
    pt = 3.0 - pt_value(V[:, 0], V[:, 1], V[:, 2])
    soc = rhs - lhs
    sharp = (np.abs(pt) > 1e-9) & (np.abs(soc) > 1e-9)
    bad = int(np.sum((pt[sharp] >= 0.0) != (soc[sharp] >= 0.0)))
    return [Check("PT quadratic vs SOC form", bad == 0,
                  f"{bad} of {int(sharp.sum())} LM points disagree")]

def _objective(g, level, opts):
    return solve_relaxation(g, level, opts=opts).objective["varbench"]

def _complete(n):
    return Graph(n, [(i, j, 1.0) for i in range(n) for j in range(i + 1, n)],
                 name=f"K{n}")

def suite_closed_form(quick=False, seed=0, opts=None):
    edge = Graph(2, [(0, 1, 1.0)], name="edge")
    triangle = Graph(3, [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)], name="triangle")
    checks = [
        _close("edge SOC", _objective(edge, SOC, opts), -3.0, 1e-6),
        _close("edge SOC+P1", _objective(edge, SOC_P1, opts), -3.0, 1e-6),
        _close("edge ED", ground_energy(edge), -3.0, 1e-6),
        _close("triangle SOC", _objective(triangle, SOC, opts), -3.0, 1e-6),
        _close("triangle ED", ground_energy(triangle), -3.0, 1e-6),
    ]
    sizes = (10,) if quick else (10, 12)
    for n in sizes:
        Kn = _complete(n)
        m = n * (n - 1) // 2
        checks.append(_close(f"K{n} SOC", _objective(Kn, SOC, opts), -m, 1e-5))
        checks.append(_close(f"K{n} SOC+P1", _objective(Kn, SOC_P1, opts), -1.5 * n, 1e-5))
        checks.append(_close(f"K{n} ED", ground_energy(Kn), -1.5 * n, 1e-5))
    return checks

def suite_table1(quick=False, seed=0, opts=None):
    square = gen_square(4)
    kagome = gen_kagome(3, 2)
    checks = [_close("square-16 SOC", _objective(square, SOC, opts), -64.0, 1e-3),
              _close("kagome-18 SOC", _objective(kagome, SOC, opts), -36.0, 1e-3)]
    if quick:
        return checks
    checks += [
        _close("square-16 SOC+P1", _objective(square, SOC_P1, opts), -160.0 / 3.0, 5e-3),
        _close("square-16 ED", ground_energy(square), -44.9139, 1e-3),
        _close("kagome-18 SOC+P1", _objective(kagome, SOC_P1, opts), -36.0, 1e-3),
        _close("kagome-18 ED", ground_energy(kagome), -32.1931, 1e-3),
    ]
    return checks

def suite_rounding(quick=False, seed=0, opts=None):
    checks = [_close("F(1/4)", F(0.25), 1.0, 1e-10),
              _close("F(1)", F(1.0), 0.5, 1e-10),
              _close("H(1)", hyp2f1_half(1.0), 3.0 * np.pi / 8.0, 1e-12)]
    with mpmath.workdps(30):
        ref = float(mpmath.hyp2f1(0.5, 0.5, 2.5, 0.25))
    checks.append(_close("H(1/4) vs extended precision", hyp2f1_half(0.25), ref, 1e-13))
    scan = scan_F()
    checks.append(Check("F grid minimum", 0.496 <= scan["min"] <= 0.5 + 1e-12,
                        f"min {scan['min']:.6f} at {scan['argmin']:.3f}"))
    checks.append(Check("F decreasing on (0, 4/5]", scan["monotone"]))
    samples = 10 ** 5 if quick else 10 ** 6
    for n, x in enumerate((1.0 / 3.0, 0.8, 1.0)):
        M = 1.0 - 4.0 * x
        mean, err = monte_carlo_edge_value(M, samples, seed + n)
        exact = expected_edge_value(M)
        checks.append(Check(f"Monte Carlo F at x={x:.4f}",
                            abs(mean - exact) <= 3.0 * err + 1e-12,
                            f"{mean:.6f} +- {err:.1e} vs {exact:.6f}"))
    return checks

def suite_threshold(quick=False, seed=0, opts=None):
    lp = solve_ratio_lp(0.771)
    enum, _ = ratio_lp_vertices(0.771)
    return [
        _close("t'(0.771)", t_prime(0.771), 0.7284, 5e-4),
        _close("ratio LP conic vs breakpoints", lp.value, enum, 1e-6),
        Check("ratio LP bounds", 0.498 <= lp.value <= min(lp.F_t, 1.0) + 1e-9,
              f"r={lp.value:.6f} F(t)={lp.F_t:.6f} F(t')={lp.F_tprime:.6f} "
              f"(alpha, beta, gamma)=({lp.alpha:.4f}, {lp.beta:.4f}, {lp.gamma:.4f}); "
              f"deviation from {GUARANTEE_RATIO}: {lp.value - GUARANTEE_RATIO:+.4f}"),
    ]

def suite_guarantee(quick=False, seed=0, opts=None):
    instances = 5 if quick else 50
    rng = np.random.default_rng(seed)
    low = []
    above = []
    worst = np.inf
    for _ in range(instances):
        g = gen_erdos_renyi(12, 0.4, int(rng.integers(2 ** 31 - 1)))
        if g.num_edges() == 0:
            continue
        sol = solve_relaxation(g, SOC_P1, opts=opts)
        res = round_solution(sol, g, samples=100, seed=seed)
        worst = min(worst, res.guarantee_ratio)
        if res.guarantee_ratio < GUARANTEE_RATIO:
            low.append(g.name)
        if res.best_sampled_energy > res.relaxation_objective + 1e-6:
            above.append(g.name)
    return [Check(f"expected best >= {GUARANTEE_RATIO} x relaxation", not low,
                  f"worst ratio {worst:.4f}; failing {low}"),
            Check("sampled energy <= relaxation", not above, f"failing {above}")]

def suite_er(quick=False, seed=0, opts=None):
    checks = [_close("ER(10, 1) SOC ratio",
                     run_er_study(10, 1.0, 1, SOC, seed, opts).mean, 3.0, 1e-4)]
    if not quick:
        checks.append(_close("ER(12, 1) SOC ratio",
                             run_er_study(12, 1.0, 1, SOC, seed, opts).mean,
                             11.0 / 3.0, 1e-2))
    study = run_er_study(10, 0.2, 20 if quick else 200, SOC, seed, opts)
    checks.append(Check("ER ratios are lower bounds",
                        np.all(study.ratios >= 1.0 - 1e-6),
                        f"min {study.ratios.min():.6f}"))
    if not quick:
        checks.append(_close("ER(10, 0.2) SOC ratio", study.mean, 1.03, 0.03))
    return checks

def suite_ss(quick=False, seed=0, opts=None):
    point = run_ss_sweep(4, [0.4], 0.0, seed, opts=opts).points[0]
    checks = [_close("SS-16 SOC at 0.4", point["soc"], -24.0, 1e-3),
              _close("SS-16 SOC+P1 at 0.4", point["soc_p1"], -24.0, 1e-3),
              _close("SS-16 ED at 0.4", point["ed"], -24.0, 1e-3)]
    grid = np.round(np.arange(0.3, 0.7001, 0.05 if quick else 0.025), 6)
    sweep = run_ss_sweep(4, grid, 0.0, seed, levels=(SOC,), with_ed=False, opts=opts)
    at, jump = find_kink(sweep.grid, sweep.objectives("soc"))
    checks.append(Check("SOC slope kink near 0.5", 0.45 <= at <= 0.55,
                        f"kink at {at:.3f}, slope change {jump:.3f}"))
    seeds = range(seed, seed + (5 if quick else 100))
    study = run_disorder_study(4, 0.4, 0.05, seeds, levels=(SOC,), opts=opts)
    checks.append(_close("SS-16 disorder ED/SOC", study["soc"]["mean"], 1.0, 2e-3))
    return checks

SUITES = {
    "symmetry": suite_symmetry,
    "soc-param": suite_soc_param,
    "closed-form": suite_closed_form,
    "table1": suite_table1,
    "rounding": suite_rounding,
    "threshold": suite_threshold,
    "guarantee": suite_guarantee,
    "er": suite_er,
    "ss": suite_ss,
}

def run_suite(name, quick=False, seed=0, opts=None, verbose=False):
    if name not in SUITES:
        raise AnalysisError(f"Unknown verification suite {name}; "
                            f"choose from {', '.join(SUITES)}")
    if opts is None:
        opts = SolverOptions()
    st = time.time()
    checks = SUITES[name](quick, seed, opts)
    report = SuiteReport(name, checks, time.time() - st)
    if verbose:
        for c in checks:
            print(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
        print("Time taken: ", report.elapsed)
    return report
