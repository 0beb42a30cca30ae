"""Plain text edge list format.

Each non-blank line holds `i j w` (0-based vertex indices, decimal weight).
`#` starts a comment.  A comment line of the form `# n N` fixes the vertex
count, otherwise n is one more than the largest index seen.
"""

from qmc_relax.Graphs.graph import Graph, GraphError

def parse_edgelist(lines, name=None):
    edges = []
    n = None
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            fields = stripped[1:].split()
            if len(fields) == 2 and fields[0] == "n":
                try:
                    n = int(fields[1])
                except ValueError:
                    raise GraphError(f"line {lineno}: bad vertex count {fields[1]}")
            continue
        stripped = stripped.split("#")[0].strip()
        if stripped == "":
            continue
        fields = stripped.split()
        if len(fields) != 3:
            raise GraphError(f"line {lineno}: expected 'i j w', got '{stripped}'")
        try:
            i, j, w = int(fields[0]), int(fields[1]), float(fields[2])
        except ValueError:
            raise GraphError(f"line {lineno}: could not parse '{stripped}'")
        if w < 0:
            raise GraphError(f"line {lineno}: negative weight {w}")
        if i < 0 or j < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        edges.append((i, j, w))
    if n is None:
        n = max([max(i, j) for i, j, _ in edges], default=0) + 1
    return Graph(n, edges, meta={"family": "edgelist"}, name=name)

def load_edgelist(path):
    with open(path) as fh:
        return parse_edgelist(fh.readlines(), name=path)

def save_edgelist(g, path):
    with open(path, "w") as fh:
        fh.write(f"# n {g.n}\n")
        for i, j, w in g.edges:
            fh.write(f"{i} {j} {w!r}\n")
