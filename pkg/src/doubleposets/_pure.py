"""Pure-Python fallbacks for the hot kernels.

Same results as :mod:`doubleposets._kernels`, computed with Python integers
(arbitrary width, so the canonical-labelling routine has no size ceiling)
and vectorized numpy where it helps.  Selected by the dispatch layer when
numba is unavailable or disabled.
"""

from itertools import permutations

import numpy as np


def picture_count(e_up1, e_up2, f_up1, f_up2):
    """Count pictures between two mask families (tuples of int bitmasks)."""
    n = len(e_up1)
    if len(f_up1) != n:
        return 0
    if n == 0:
        return 1
    count = 0
    phi = [0] * n
    unused = (1 << n) - 1

    def extend(pos, unused):
        nonlocal count
        if pos == n:
            count += 1
            return
        rest = unused
        while rest:
            low = rest & (-rest)
            rest ^= low
            f = low.bit_length() - 1
            ok = True
            for k in range(pos):
                fk = phi[k]
                if e_up1[k] >> pos & 1 and not f_up2[fk] >> f & 1:
                    ok = False
                    break
                if e_up1[pos] >> k & 1 and not f_up2[f] >> fk & 1:
                    ok = False
                    break
                if f_up1[fk] >> f & 1 and not e_up2[k] >> pos & 1:
                    ok = False
                    break
                if f_up1[f] >> fk & 1 and not e_up2[pos] >> k & 1:
                    ok = False
                    break
            if ok:
                phi[pos] = f
                extend(pos + 1, unused ^ low)
        return

    extend(0, unused)
    return count


def picture_count_matrix(a_up1, a_up2, b_up1, b_up2):
    na = len(a_up1)
    nb = len(b_up1)
    out = np.zeros((na, nb), np.int64)
    a1 = [tuple(int(x) for x in row) for row in a_up1]
    a2 = [tuple(int(x) for x in row) for row in a_up2]
    b1 = [tuple(int(x) for x in row) for row in b_up1]
    b2 = [tuple(int(x) for x in row) for row in b_up2]
    for i in range(na):
        for j in range(nb):
            out[i, j] = picture_count(a1[i], a2[i], b1[j], b2[j])
    return out


def canon_minimize(up1, up2, n):
    """Minimal (w1, w2, old_of_new) over relabellings; arbitrary n.

    Works on the sparse pair lists instead of the dense bit matrix: for a
    relabelling lam (old -> new), bit (lam[x]*n + lam[y]) of the word is set
    for each old pair (x, y).
    """
    pairs1 = []
    pairs2 = []
    for i in range(n):
        m1 = int(up1[i])
        while m1:
            low = m1 & (-m1)
            m1 ^= low
            pairs1.append((i, low.bit_length() - 1))
        m2 = int(up2[i])
        while m2:
            low = m2 & (-m2)
            m2 ^= low
            pairs2.append((i, low.bit_length() - 1))
    top = n * n - 1
    best = None
    best_lam = None
    for lam in permutations(range(n)):
        w1 = 0
        for x, y in pairs1:
            w1 |= 1 << (top - (lam[x] * n + lam[y]))
        w2 = 0
        for x, y in pairs2:
            w2 |= 1 << (top - (lam[x] * n + lam[y]))
        key = (w1, w2)
        if best is None or key < best:
            best = key
            best_lam = lam
    if best is None:  # n == 0
        return 0, 0, ()
    old_of_new = [0] * n
    for old, new in enumerate(best_lam):
        old_of_new[new] = old
    return best[0], best[1], tuple(old_of_new)


def ideal_masks(down, n):
    """All downward-closed subset masks, increasing; ``down`` per-element masks."""
    out = []
    for s in range(1 << n):
        need = 0
        rest = s
        while rest:
            low = rest & (-rest)
            rest ^= low
            need |= down[low.bit_length() - 1]
        if need & ~s == 0:
            out.append(s)
    return out


def surjection_mask(table, weak, strict):
    """Vectorized row filter over a letter table; see the kernel twin."""
    m = table.shape[0]
    ok = np.ones(m, dtype=bool)
    for a, b in weak:
        ok &= table[:, a] <= table[:, b]
    for a, b in strict:
        ok &= table[:, a] < table[:, b]
    return ok.astype(np.uint8)
