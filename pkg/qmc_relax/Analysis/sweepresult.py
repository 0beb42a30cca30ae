import csv
import json

import numpy as np

import qmc_relax

SWEEP_FORMAT_VERSION = 0.1

class AnalysisError(Exception):
    pass

LEVEL_KEYS = ("soc", "soc_p1", "soc_4")

class SweepResult:
    """Objectives of a family of instances over a parameter grid.

    Each point is a dict with the parameter "value", one VarBench objective
    per solved level ("soc", "soc_p1"), "ed" when exact energies were
    computed, and optionally "edges": rows [i, j, w, x_ij] of the SOC optimum.
    """
    def __init__(self, parameter, points, seeds=None, samples=None, meta=None):
        self.parameter = parameter
        self.points = list(points)
        self.seeds = list(seeds) if seeds is not None else []
        self.samples = samples
        self.meta = dict(meta) if meta is not None else {}

    @property
    def grid(self):
        return np.array([p["value"] for p in self.points])

    def objectives(self, key):
        return np.array([np.nan if p.get(key) is None else p[key]
                         for p in self.points], dtype=np.float64)

    def sandwich_violations(self, tol=1e-6):
        """Grid values where SOC <= SOC+P1 <= ED fails beyond tol."""
        bad = []
        for p in self.points:
            chain = [p[k] for k in ("soc", "soc_p1", "ed") if p.get(k) is not None]
            if any(a > b + tol for a, b in zip(chain, chain[1:])):
                bad.append(p["value"])
        return bad

    def rows(self):
        keys = [k for k in LEVEL_KEYS + ("ed",)
                if any(p.get(k) is not None for p in self.points)]
        out = []
        for p in self.points:
            row = {self.parameter: p["value"]}
            for k in keys:
                row[k] = p.get(k)
            if p.get("ed") is not None:
                for k in keys:
                    if k != "ed" and p.get(k):
                        row[f"ed_over_{k}"] = p["ed"] / p[k]
            out.append(row)
        return out

    def metadata(self):
        return {"format_version": SWEEP_FORMAT_VERSION,
                "provenance": f"qmc_relax {qmc_relax.__version__}",
                "parameter": self.parameter,
                "seeds": self.seeds,
                "samples": self.samples,
                "meta": self.meta,
                "points": self.points}

    def write_csv(self, path):
        rows = self.rows()
        fieldnames = []
        for row in rows:
            fieldnames += [k for k in row if k not in fieldnames]
        with open(path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=fieldnames)
            w.writeheader()
            for row in rows:
                w.writerow(row)

    def write_json(self, path):
        with open(path, "w") as fh:
            json.dump(self.metadata(), fh, indent=2)

    @staticmethod
    def from_json(path):
        with open(path) as fh:
            d = json.load(fh)
        if d.get("format_version") != SWEEP_FORMAT_VERSION:
            raise AnalysisError(
                f"Sweep file {path} has format version {d.get('format_version')}, "
                f"expected {SWEEP_FORMAT_VERSION}"
            )
        return SweepResult(d["parameter"], d["points"], d.get("seeds"),
                           d.get("samples"), d.get("meta"))
