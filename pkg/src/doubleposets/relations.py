"""Finite strict partial orders on {0, ..., n-1}.

Relations are stored transitively closed so comparability is a single pair
lookup; ideals, decompositions and linear extensions are exact enumerations
with deterministic output order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _accel
from .errors import CycleError


@dataclass(frozen=True)
class Relation:
    """A transitively closed strict partial order.

    ``pairs`` holds ordered pairs (i, j) meaning i is below j.  Instances
    are assumed closed, irreflexive and acyclic; run untrusted input through
    :func:`validate`, which closes and checks.  ``up``/``down`` are derived
    per-element bitmasks (bit j of ``up[i]`` set iff (i, j) in pairs).
    """

    n: int
    pairs: frozenset[tuple[int, int]]
    up: tuple[int, ...] = field(init=False, compare=False, repr=False)
    down: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        up = [0] * self.n
        down = [0] * self.n
        for i, j in self.pairs:
            up[i] |= 1 << j
            down[j] |= 1 << i
        object.__setattr__(self, "up", tuple(up))
        object.__setattr__(self, "down", tuple(down))

    def has(self, i: int, j: int) -> bool:
        return (i, j) in self.pairs

    def is_total(self) -> bool:
        return 2 * len(self.pairs) == self.n * (self.n - 1)

    def reverse(self) -> Relation:
        return Relation(self.n, frozenset((j, i) for i, j in self.pairs))

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (the transitive reduction), sorted."""
        out = []
        for i, j in self.pairs:
            if not any(self.has(i, k) and self.has(k, j) for k in range(self.n)):
                out.append((i, j))
        return sorted(out)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def empty_relation(n: int) -> Relation:
    return Relation(n, frozenset())


def chain_relation(n: int) -> Relation:
    """The natural total order 0 < 1 < ... < n-1."""
    return Relation(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def validate(pairs, n: int) -> Relation:
    """Close ``pairs`` transitively and return the Relation, or fail loudly.

    Raises IndexError for out-of-range indices and CycleError when the
    closure would be reflexive or contain a 2-cycle.
    """
    if n < 0:
        raise IndexError(f"negative element count {n}")
    up = [0] * n
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"pair ({i}, {j}) out of range for n={n}")
        if i == j:
            raise CycleError(f"reflexive pair ({i}, {i})")
        up[i] |= 1 << j
    # Warshall closure on bitmask rows.
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    closed = set()
    for i in range(n):
        if up[i] >> i & 1:
            raise CycleError(f"cycle through element {i}")
        m = up[i]
        while m:
            low = m & (-m)
            m ^= low
            j = low.bit_length() - 1
            if up[j] >> i & 1:
                raise CycleError(f"elements {i} and {j} are mutually comparable")
            closed.add((i, j))
    return Relation(n, frozenset(closed))


def _members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & (-mask)
        mask ^= low
        out.append(low.bit_length() - 1)
    return tuple(out)


def lower_ideals(r: Relation) -> list[tuple[int, ...]]:
    """All downward-closed subsets, sorted by size then members."""
    masks = _accel.ideal_masks(r.down, r.n)
    ideals = [_members(m) for m in masks]
    ideals.sort(key=lambda t: (len(t), t))
    return ideals


def decompositions(r: Relation) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs (ideal, complement); the complement is upward closed."""
    full = set(range(r.n))
    out = []
    for ideal in lower_ideals(r):
        rest = tuple(sorted(full.difference(ideal)))
        out.append((ideal, rest))
    return out


def induced(r: Relation, subset) -> Relation:
    """Restriction to ``subset``, relabelled 0..k-1 by ascending original index."""
    elems = sorted(set(subset))
    for e in elems:
        if not 0 <= e < r.n:
            raise IndexError(f"element {e} out of range for n={r.n}")
    index = {e: i for i, e in enumerate(elems)}
    pairs = frozenset(
        (index[i], index[j]) for (i, j) in r.pairs if i in index and j in index
    )
    return Relation(len(elems), pairs)


def linear_extensions(r: Relation) -> list[tuple[int, ...]]:
    """All orderings of the elements compatible with r, lexicographically."""
    n = r.n
    down = r.down
    out = []
    seq = [0] * n

    def extend(pos: int, placed: int):
        if pos == n:
            out.append(tuple(seq))
            return
        for e in range(n):
            if placed >> e & 1:
                continue
            if down[e] & ~placed:
                continue
            seq[pos] = e
            extend(pos + 1, placed | (1 << e))

    extend(0, 0)
    return out
