"""Hot enumeration kernels, written so numba can compile them unchanged.

Every function here takes plain numpy arrays of int64 bitmasks (bit j of
``up[i]`` set means i is below j in the order) and uses only loops, so the
same source runs either interpreted or under ``numba.njit``.  The
interpreted path is slow; :mod:`doubleposets._pure` holds the hand-tuned
pure-Python equivalents that the dispatch layer prefers when numba is off.
"""

import numpy as np


def picture_count(e_up1, e_up2, f_up1, f_up2):
    """Count bijections E->F increasing (E,<1)->(F,<2) with increasing inverse.

    Backtracking over assignments of E-elements in index order, pruning on
    both monotonicity conditions after each assignment.
    """
    n = e_up1.shape[0]
    if f_up1.shape[0] != n:
        return 0
    if n == 0:
        return 1
    phi = np.zeros(n, np.int64)
    cand = np.zeros(n, np.int64)
    used = np.zeros(n, np.uint8)
    count = 0
    pos = 0
    while True:
        if pos == n:
            count += 1
            pos -= 1
            used[phi[pos]] = 0
            cand[pos] = phi[pos] + 1
            continue
        f = cand[pos]
        placed = False
        while f < n:
            if used[f] == 0:
                ok = True
                for k in range(pos):
                    fk = phi[k]
                    if (e_up1[k] >> pos) & 1 and not (f_up2[fk] >> f) & 1:
                        ok = False
                        break
                    if (e_up1[pos] >> k) & 1 and not (f_up2[f] >> fk) & 1:
                        ok = False
                        break
                    if (f_up1[fk] >> f) & 1 and not (e_up2[k] >> pos) & 1:
                        ok = False
                        break
                    if (f_up1[f] >> fk) & 1 and not (e_up2[pos] >> k) & 1:
                        ok = False
                        break
                if ok:
                    phi[pos] = f
                    used[f] = 1
                    pos += 1
                    if pos < n:
                        cand[pos] = 0
                    placed = True
                    break
            f += 1
        if not placed:
            pos -= 1
            if pos < 0:
                break
            used[phi[pos]] = 0
            cand[pos] = phi[pos] + 1
    return count


def picture_count_matrix(a_up1, a_up2, b_up1, b_up2):
    """Picture counts for every pair drawn from two families of equal size.

    ``a_up1`` is an (A, n) array whose row i holds the first-order up-masks
    of family member i; likewise the other three.  Returns an (A, B) int64
    matrix of counts.
    """
    na = a_up1.shape[0]
    nb = b_up1.shape[0]
    out = np.zeros((na, nb), np.int64)
    for i in range(na):
        for j in range(nb):
            out[i, j] = picture_count(a_up1[i], a_up2[i], b_up1[j], b_up2[j])
    return out


def canon_minimize(up1, up2, n):
    """Minimal relabelled encoding of a mask pair over all n! relabellings.

    The encoding packs the first order's n*n adjacency bits (row-major,
    most significant first) into ``w1`` and the second order's into ``w2``;
    the minimum of (w1, w2) over relabellings is a complete isomorphism
    invariant.  Requires n <= 7 so each word fits in an int64.  Returns
    (w1, w2, old_of_new) for the first permutation attaining the minimum
    in lexicographic enumeration order.
    """
    best1 = np.int64(0)
    best2 = np.int64(0)
    q = np.zeros(n, np.int64)
    best_q = np.zeros(n, np.int64)
    for i in range(n):
        q[i] = i
        best_q[i] = i
    first = True
    while True:
        w1 = np.int64(0)
        w2 = np.int64(0)
        for i in range(n):
            qi = q[i]
            for j in range(n):
                qj = q[j]
                w1 = (w1 << 1) | ((up1[qi] >> qj) & 1)
                w2 = (w2 << 1) | ((up2[qi] >> qj) & 1)
        if first or w1 < best1 or (w1 == best1 and w2 < best2):
            first = False
            best1 = w1
            best2 = w2
            for i in range(n):
                best_q[i] = q[i]
        # next_permutation on q
        k = n - 2
        while k >= 0 and q[k] >= q[k + 1]:
            k -= 1
        if k < 0:
            break
        m = n - 1
        while q[m] <= q[k]:
            m -= 1
        t = q[k]
        q[k] = q[m]
        q[m] = t
        lo = k + 1
        hi = n - 1
        while lo < hi:
            t = q[lo]
            q[lo] = q[hi]
            q[hi] = t
            lo += 1
            hi -= 1
    return best1, best2, best_q


def ideal_masks(down, n):
    """Bitmasks of all downward-closed subsets, in increasing mask order.

    ``down[i]`` is the mask of elements strictly below i; a subset S is an
    ideal iff every member's down-set lies inside S.
    """
    total = 1 << n
    good = np.zeros(total, np.uint8)
    count = 0
    for s in range(total):
        need = np.int64(0)
        rest = s
        while rest:
            i = 0
            low = rest & (-rest)
            while (low >> i) & 1 == 0:
                i += 1
            need |= down[i]
            rest ^= low
        if need & ~s == 0:
            good[s] = 1
            count += 1
    out = np.zeros(count, np.int64)
    k = 0
    for s in range(total):
        if good[s]:
            out[k] = s
            k += 1
    return out


def surjection_mask(table, weak, strict):
    """Row mask: which assignments in ``table`` satisfy all order conditions.

    ``table`` is (m, n) of letters; row r passes iff table[r, a] <= table[r, b]
    for every (a, b) in ``weak`` and table[r, a] < table[r, b] for every
    (a, b) in ``strict``.
    """
    m = table.shape[0]
    out = np.ones(m, np.uint8)
    for r in range(m):
        ok = True
        for p in range(weak.shape[0]):
            if table[r, weak[p, 0]] > table[r, weak[p, 1]]:
                ok = False
                break
        if ok:
            for p in range(strict.shape[0]):
                if table[r, strict[p, 0]] >= table[r, strict[p, 1]]:
                    ok = False
                    break
        if not ok:
            out[r] = 0
    return out
