"""Integer partitions, Young diagrams and standard tableaux."""

from functools import lru_cache

from qmc_relax.Symmetry.permutations import SymmetryError

class Partition:
    """A weakly decreasing tuple of positive integers.

    Args:
        parts (iterable of int): the row lengths of the Young diagram
    """
    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise SymmetryError(f"invalid partition {parts}: parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise SymmetryError(f"invalid partition {parts}: parts must not increase")
        self.parts = parts

    @property
    def k(self):
        return sum(self.parts)

    @property
    def height(self):
        return len(self.parts)

    def valid_for(self, d):
        return self.height <= d

    def boxes(self):
        return [(r, c) for r, length in enumerate(self.parts) for c in range(length)]

    def conjugate(self):
        return Partition([sum(1 for p in self.parts if p > c)
                          for c in range(self.parts[0])] if self.parts else [])

    def hook(self, r, c):
        arm = self.parts[r] - c - 1
        leg = sum(1 for rr in range(r + 1, self.height) if self.parts[rr] > c)
        return arm + leg + 1

    def removable_rows(self):
        """Rows whose last box is a removable corner, bottom row first."""
        rows = []
        for r in range(self.height - 1, -1, -1):
            if r == self.height - 1 or self.parts[r] > self.parts[r + 1]:
                rows.append(r)
        return rows

    def remove_box(self, r):
        parts = list(self.parts)
        parts[r] -= 1
        return Partition([p for p in parts if p > 0])

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

def as_partition(p):
    return p if isinstance(p, Partition) else Partition(p)

@lru_cache(maxsize=None)
def _partitions(k, largest):
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)

def partitions(k):
    """All partitions of k, in reverse lexicographic order ([k] first)."""
    return [Partition(p) for p in _partitions(k, k)]

@lru_cache(maxsize=None)
def _tableaux(parts):
    if sum(parts) == 0:
        return ((),)
    lam = Partition(parts)
    k = lam.k
    out = []
    for r in lam.removable_rows():
        smaller = lam.remove_box(r)
        for t in _tableaux(smaller.parts):
            rows = [list(row) for row in t]
            while len(rows) <= r:
                rows.append([])
            rows[r].append(k)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)

def standard_tableaux(lam):
    """Standard Young tableaux of shape lam with entries 1..k.

    Ordered by placing the largest letter in a removable corner, bottom row
    first, and recursing.  For [2,1] this gives [[1,2],[3]] then [[1,3],[2]].
    """
    lam = as_partition(lam)
    return [list(list(row) for row in t) for t in _tableaux(lam.parts)]

def hook_dimension(lam):
    """Number of standard tableaux, via the hook length formula."""
    lam = as_partition(lam)
    num = 1
    for i in range(2, lam.k + 1):
        num *= i
    den = 1
    for r, c in lam.boxes():
        den *= lam.hook(r, c)
    return num // den
