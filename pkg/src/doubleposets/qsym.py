"""Quasi-symmetric functions in the monomial basis, exactly.

Elements are integer combinations of compositions, read as monomial basis
coordinates, so every identity checked here is a finite exact equality.
The generating function of a double poset counts, for each composition of
fiber sizes, the surjections onto an initial segment that respect both
order conditions; it is computed by brute force over cached surjection
tables.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import _accel
from .dposets import DoublePoset
from .errors import SizeCapError
from .linear import IntCombination, accumulate, checked
from .perms import Permutation, SElement, descent_composition

Composition = tuple[int, ...]

GAMMA_CAP = 8


class QElement(IntCombination):
    """Integer combination of compositions (monomial coordinates)."""


def check_composition(parts) -> Composition:
    parts = tuple(parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


@lru_cache(maxsize=None)
def surjection_table(n: int, k: int):
    """All surjections {0..n-1} -> {1..k}: letter table plus composition ids.

    Returns (table, comp_ids, comps) where table is (m, n) int8, comps lists
    the distinct fiber-size compositions, and comp_ids[r] indexes the
    composition of row r.
    """
    rows: list[tuple[int, ...]] = []
    row = [0] * n

    def extend(pos: int, used: int):
        if k - bin(used).count("1") > n - pos:
            return
        if pos == n:
            rows.append(tuple(row))
            return
        for letter in range(1, k + 1):
            row[pos] = letter
            extend(pos + 1, used | (1 << (letter - 1)))

    extend(0, 0)
    table = np.array(rows, dtype=np.int8).reshape(len(rows), n)
    comps: list[Composition] = []
    index: dict[Composition, int] = {}
    ids = np.zeros(len(rows), dtype=np.int64)
    for r, letters in enumerate(rows):
        comp = tuple(letters.count(letter) for letter in range(1, k + 1))
        hit = index.get(comp)
        if hit is None:
            hit = len(comps)
            index[comp] = hit
            comps.append(comp)
        ids[r] = hit
    return table, ids, comps


def order_condition_pairs(d: DoublePoset):
    """Split the first order's pairs by whether the second order forces
    strict increase."""
    weak = []
    strict = []
    for a, b in sorted(d.r1.pairs):
        if d.r2.has(b, a):
            strict.append((a, b))
        else:
            weak.append((a, b))
    return weak, strict


def gamma(d: DoublePoset, cap: int = GAMMA_CAP) -> QElement:
    """Generating function of a double poset in monomial coordinates.

    The coefficient of a composition (c_1..c_k) counts surjections onto
    {1..k} with those fiber sizes that weakly increase along the first
    order and strictly increase where the second order is reversed.
    Homogeneous of degree n.
    """
    if d.n > cap:
        raise SizeCapError(f"generating function capped at n={cap}, got n={d.n}")
    if d.n == 0:
        return QElement.term(())
    weak, strict = order_condition_pairs(d)
    out: dict[Composition, int] = {}
    for k in range(1, d.n + 1):
        table, ids, comps = surjection_table(d.n, k)
        mask = _accel.surjection_mask(table, weak, strict).astype(bool)
        counts = np.bincount(ids[mask], minlength=len(comps))
        for comp, count in zip(comps, counts):
            if count:
                accumulate(out, comp, int(count))
    return QElement(out)


@lru_cache(maxsize=None)
def _quasi_shuffle(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    """Interleavings of two compositions where facing parts may merge."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[Composition, int] = {}
    for rest, c in _quasi_shuffle(a[1:], b):
        accumulate(acc, (a[0],) + rest, c)
    for rest, c in _quasi_shuffle(a, b[1:]):
        accumulate(acc, (b[0],) + rest, c)
    for rest, c in _quasi_shuffle(a[1:], b[1:]):
        accumulate(acc, (a[0] + b[0],) + rest, c)
    return tuple(sorted(acc.items()))


def qsym_product(x: QElement, y: QElement) -> QElement:
    out: dict[Composition, int] = {}
    for a, c in x.items():
        for b, d in y.items():
            cd = checked(c * d)
            for comp, mult in _quasi_shuffle(a, b):
                accumulate(out, comp, checked(cd * mult))
    return QElement(out)


def qsym_coproduct(x: QElement) -> list[tuple[Composition, Composition, int]]:
    """Deconcatenation terms (left, right, coefficient), sorted."""
    acc: dict[tuple[Composition, Composition], int] = {}
    for comp, c in x.items():
        for i in range(len(comp) + 1):
            accumulate(acc, (comp[:i], comp[i:]), c)
    return [(left, right, c) for (left, right), c in sorted(acc.items())]


@lru_cache(maxsize=None)
def _compositions_of(total: int) -> tuple[Composition, ...]:
    if total == 0:
        return ((),)
    out = []
    for first in range(1, total + 1):
        for rest in _compositions_of(total - first):
            out.append((first,) + rest)
    return tuple(out)


def compositions_of(total: int) -> tuple[Composition, ...]:
    """All compositions of a nonnegative integer."""
    return _compositions_of(total)


@lru_cache(maxsize=None)
def fundamental_to_monomial(comp: Composition) -> QElement:
    """Fundamental basis element as a sum of monomials over refinements."""
    comp = check_composition(comp)
    pieces: list[Composition] = [()]
    for part in comp:
        pieces = [
            prefix + split for prefix in pieces for split in _compositions_of(part)
        ]
    return QElement({piece: 1 for piece in pieces})


def fundamental_of(sigma: Permutation) -> QElement:
    if sigma.n == 0:
        return QElement.term(())
    return fundamental_to_monomial(descent_composition(sigma))


def F_of(a: SElement) -> QElement:
    """Linear extension of the descent-composition fundamental expansion."""
    out = QElement.zero()
    for sigma, c in a.items():
        out = out + fundamental_of(sigma).scaled(c)
    return out
