"""Permutations of {0, ..., k-1} stored as tuples of images.

A permutation s maps x to s[x].  Products compose right to left:
compose(s, t)[x] = s[t[x]], so that R(st) = R(s) R(t) for every
representation R.  Text notation uses 1-based cycles, e.g. "(12)(34)".
"""

import re
from functools import lru_cache

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import SymmetricGroup

class SymmetryError(Exception):
    pass

def identity(k):
    return tuple(range(k))

@lru_cache(maxsize=None)
def all_permutations(k):
    """All k! permutations, sorted lexicographically by image tuple."""
    if k == 0:
        return (tuple(),)
    if k == 1:
        return ((0,),)
    return tuple(sorted(tuple(p.array_form) for p in SymmetricGroup(k).generate()))

def compose(s, t):
    return tuple(s[x] for x in t)

def inverse(s):
    out = [0] * len(s)
    for x, y in enumerate(s):
        out[y] = x
    return tuple(out)

def cycle_type(s):
    """Cycle lengths in weakly decreasing order, fixed points included."""
    p = Permutation(list(s))
    out = []
    for length, count in p.cycle_structure.items():
        out += [length] * count
    return tuple(sorted(out, reverse=True))

def sign(s):
    return Permutation(list(s)).signature()

def cycles(s):
    """Non-trivial cycles of s, each starting at its smallest element."""
    return [tuple(c) for c in Permutation(list(s)).cyclic_form]

def from_cycles(cyc, k):
    """Build a permutation of k letters from 0-based cycles."""
    img = list(range(k))
    for c in cyc:
        for a, b in zip(c, c[1:] + c[:1]):
            if not (0 <= a < k):
                raise SymmetryError(f"letter {a} out of range for k={k}")
            img[a] = b
    if sorted(img) != list(range(k)):
        raise SymmetryError(f"cycles {cyc} do not define a permutation")
    return tuple(img)

_CYCLE_RE = re.compile(r"\(([0-9 ,]*)\)")

def parse(text, k):
    """Parse 1-based cycle notation such as "(123)" or "(12)(34)"."""
    text = text.strip()
    if text in ("", "id", "()"):
        return identity(k)
    cyc = []
    for m in _CYCLE_RE.finditer(text):
        body = m.group(1).replace(",", " ")
        if " " in body.strip():
            letters = [int(v) - 1 for v in body.split()]
        else:
            letters = [int(v) - 1 for v in body.strip()]
        if len(letters) > 1:
            cyc.append(tuple(letters))
    if not cyc and text not in ("", "id"):
        raise SymmetryError(f"could not parse permutation '{text}'")
    return from_cycles(cyc, k)

def to_text(s):
    cyc = cycles(s)
    if not cyc:
        return "id"
    return "".join("(" + "".join(str(a + 1) for a in c) + ")" for c in cyc)

def adjacent_word(s):
    """Indices i_1, ..., i_L with s = s_{i_1} s_{i_2} ... s_{i_L}, s_i = (i, i+1).

    The word is reduced (its length is the number of inversions of s).
    """
    cur = list(s)
    word = []
    done = False
    while not done:
        done = True
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                # cur <- cur o s_i
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i)
                done = False
                break
    return list(reversed(word))

def class_representative(parts):
    """A permutation whose cycle type is the given partition."""
    k = sum(parts)
    cyc = []
    start = 0
    for length in parts:
        cyc.append(tuple(range(start, start + length)))
        start += length
    return from_cycles([c for c in cyc if len(c) > 1], k)
