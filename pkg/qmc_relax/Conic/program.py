"""Standard form conic program

    minimise    c.x + offset
    subject to  A x + s = b,  s in K

with K a product of ZERO, NONNEG, SOC and PSD cones (see cones.py).
"""

import json

import numpy as np
import scipy.sparse as sp

from qmc_relax.Conic.cones import (
    Cone, ConicError, ZERO, NONNEG, SOC, PSD, CONE_KINDS, svec_index, SQRT2
)

PROGRAM_FORMAT_VERSION = 0.1

class ConicProgram:
    def __init__(self, c, A, b, cones, offset=0.0):
        self.c = np.asarray(c, dtype=np.float64).ravel()
        self.A = sp.csc_matrix(A, dtype=np.float64)
        self.b = np.asarray(b, dtype=np.float64).ravel()
        self.cones = list(cones)
        self.offset = float(offset)
        self.validate()

    @property
    def num_vars(self):
        return self.c.shape[0]

    @property
    def num_rows(self):
        return self.b.shape[0]

    def validate(self):
        m = sum(cone.dim for cone in self.cones)
        if self.A.shape != (m, self.num_vars):
            raise ConicError(
                f"invalid-program: A has shape {self.A.shape}, cones and c "
                f"require ({m}, {self.num_vars})"
            )
        if self.b.shape[0] != m:
            raise ConicError(
                f"invalid-program: b has {self.b.shape[0]} rows, cones require {m}"
            )
        # canonical cone order
        rank = [CONE_KINDS.index(cone.kind) for cone in self.cones]
        if rank != sorted(rank):
            raise ConicError("invalid-program: cones must be ordered ZERO, NONNEG, SOC, PSD")
        if not (np.all(np.isfinite(self.c)) and np.all(np.isfinite(self.b))
                and np.all(np.isfinite(self.A.data))):
            raise ConicError("invalid-program: non-finite data")

    def objective(self, x):
        return float(self.c @ x) + self.offset

    def slack(self, x):
        return self.b - self.A @ x

    def scaled(self, lam):
        """The same program with objective vector multiplied by lam."""
        return ConicProgram(lam * self.c, self.A, self.b, self.cones,
                            lam * self.offset)

    def to_dict(self):
        A = self.A.tocoo()
        return {"version": PROGRAM_FORMAT_VERSION,
                "c": self.c.tolist(),
                "offset": self.offset,
                "A": {"shape": list(A.shape),
                      "row": A.row.tolist(),
                      "col": A.col.tolist(),
                      "data": A.data.tolist()},
                "b": self.b.tolist(),
                "cones": [cone.to_list() for cone in self.cones]}

    @staticmethod
    def from_dict(d):
        if d.get("version") != PROGRAM_FORMAT_VERSION:
            raise ConicError(f"Unsupported program format version {d.get('version')}")
        a = d["A"]
        A = sp.coo_matrix((a["data"], (a["row"], a["col"])), shape=a["shape"])
        cones = [Cone(kind, size) for kind, size in d["cones"]]
        return ConicProgram(d["c"], A, d["b"], cones, d.get("offset", 0.0))

    def dump(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh)

    @staticmethod
    def load(path):
        with open(path) as fh:
            return ConicProgram.from_dict(json.load(fh))


class ProgramBuilder:
    """Accumulate rows cone by cone and assemble a ConicProgram.

    A row is a pair (coeffs, rhs) with coeffs a dict {variable: a} and reads
    a.x + s = rhs.  Helper methods translate the usual forms:
        add_equality: a.x == rhs
        add_leq:      a.x <= rhs
        add_geq:      a.x >= rhs
    Rows are emitted in the order they were added, per cone kind.
    """
    def __init__(self, num_vars=0):
        self.num_vars = int(num_vars)
        self.c = {}
        self.offset = 0.0
        self._zero = []
        self._nonneg = []
        self._soc = []
        self._psd = []

    def add_variables(self, k):
        start = self.num_vars
        self.num_vars += int(k)
        return start

    def set_objective(self, coeffs, offset=0.0):
        self.c = dict(coeffs)
        self.offset = float(offset)

    def add_equality(self, coeffs, rhs):
        self._zero.append((dict(coeffs), float(rhs)))

    def add_leq(self, coeffs, rhs):
        self._nonneg.append((dict(coeffs), float(rhs)))

    def add_geq(self, coeffs, rhs):
        self._nonneg.append(({k: -v for k, v in coeffs.items()}, -float(rhs)))

    def add_affine_soc(self, rows):
        """Add ||(f_1(x), ..., f_m(x))|| <= f_0(x) for affine f_r.

        Each f_r is given as (coeffs, const) meaning coeffs.x + const, the
        first entry being f_0.
        """
        if len(rows) < 1:
            raise ConicError("invalid-program: empty SOC block")
        self._soc.append([({k: -v for k, v in coeffs.items()}, float(const))
                          for coeffs, const in rows])

    def add_affine_psd(self, entries, s):
        """Add the constraint S(x) >= 0 (PSD) for an s x s affine matrix.

        entries maps (i, j) with i >= j to (coeffs, const) so that
        S_ij = coeffs.x + const; missing entries are zero.
        """
        rows = [({}, 0.0) for _ in range(s * (s + 1) // 2)]
        for (i, j), (coeffs, const) in entries.items():
            if i < j:
                i, j = j, i
            scale = 1.0 if i == j else SQRT2
            rows[svec_index(i, j, s)] = (
                {k: -scale * v for k, v in coeffs.items()}, scale * float(const)
            )
        self._psd.append((s, rows))

    def build(self):
        cones = []
        all_rows = []
        if self._zero:
            cones.append(Cone(ZERO, len(self._zero)))
            all_rows += self._zero
        if self._nonneg:
            cones.append(Cone(NONNEG, len(self._nonneg)))
            all_rows += self._nonneg
        for block in self._soc:
            cones.append(Cone(SOC, len(block)))
            all_rows += block
        for s, block in self._psd:
            cones.append(Cone(PSD, s))
            all_rows += block
        rows, cols, data = [], [], []
        b = np.zeros(len(all_rows))
        for r, (coeffs, rhs) in enumerate(all_rows):
            for k in sorted(coeffs):
                if coeffs[k] != 0.0:
                    rows.append(r)
                    cols.append(k)
                    data.append(coeffs[k])
            b[r] = rhs
        A = sp.coo_matrix((data, (rows, cols)),
                          shape=(len(all_rows), self.num_vars))
        c = np.zeros(self.num_vars)
        for k, v in self.c.items():
            c[k] = v
        return ConicProgram(c, A, b, cones, self.offset)
