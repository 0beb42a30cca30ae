import csv
import json
import os

from qmc_relax.Analysis.sweepresult import AnalysisError

COLOR_SCALE = {"x": [-1.0, 1.0], "colors": ["blue", "red"],
               "meaning": "x = -1 is a singlet edge, x = +1 a triplet edge"}
HEATMAP_FIELDS = ("i", "j", "w", "x", "xi", "yi", "xj", "yj")

def _edge_rows(values, g):
    if hasattr(values, "edge_values"):
        return values.edge_values(g)
    if isinstance(values, dict):
        if "edges" not in values:
            raise AnalysisError("sweep point carries no per-edge values")
        return [tuple(e) for e in values["edges"]]
    return [tuple(e) for e in values]

def emit_heatmap(values, g, path):
    """Write per-edge x values with vertex coordinates for plotting.

    Args:
        values: a RelaxSolution, a sweep point with "edges", or rows (i, j, w, x)
        g (Graph): the instance, with coordinates
        path (str): CSV path; the color convention goes next to it as JSON

    Returns:
        list: the rows written
    """
    if g.coords is None:
        raise AnalysisError(f"missing coords: {g.name} has no vertex coordinates")
    rows = []
    for i, j, w, x in _edge_rows(values, g):
        xi, yi = g.coords[int(i)]
        xj, yj = g.coords[int(j)]
        rows.append(dict(zip(HEATMAP_FIELDS,
                             (int(i), int(j), float(w), float(x), xi, yi, xj, yj))))
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=HEATMAP_FIELDS)
        w.writeheader()
        w.writerows(rows)
    with open(os.path.splitext(path)[0] + ".json", "w") as fh:
        json.dump({"instance": g.name, "color_scale": COLOR_SCALE}, fh, indent=2)
    return rows
