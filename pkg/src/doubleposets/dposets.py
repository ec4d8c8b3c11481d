"""Double posets: one ground set carrying two strict partial orders.

Provides the combinatorial layer everything else builds on: composition,
ideal decomposition, picture enumeration and counting, graphs of increasing
bijections, the permutation and Ferrers-diagram constructions, and exact
canonical forms for isomorphism classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _accel
from .errors import (
    InvalidPartitionError,
    NotIncreasingError,
    NotSpecialError,
    SizeCapError,
)
from .relations import Relation, chain_relation, decompositions, empty_relation, induced

CANONICALIZATION_CAP = 10


@dataclass(frozen=True)
class DoublePoset:
    """Ground set {0..n-1} with two closed strict orders ``r1`` and ``r2``."""

    n: int
    r1: Relation
    r2: Relation

    def __post_init__(self):
        if self.r1.n != self.n or self.r2.n != self.n:
            raise ValueError("order sizes disagree with element count")


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total byte encoding of a double poset in its minimal labelling.

    Equal keys exactly characterise isomorphic double posets.  The byte
    layout is decodable: element count, then the row-major adjacency bits
    of each order in the canonical labelling (see :func:`decode`).
    """

    n: int
    key: bytes

    def hex(self) -> str:
        return self.key.hex()


def empty_dp() -> DoublePoset:
    return DoublePoset(0, empty_relation(0), empty_relation(0))


def point() -> DoublePoset:
    return DoublePoset(1, empty_relation(1), empty_relation(1))


def compose(e: DoublePoset, f: DoublePoset) -> DoublePoset:
    """Disjoint union; first orders side by side, all of e below all of f in r2."""
    n = e.n + f.n
    shift = e.n
    p1 = set(e.r1.pairs)
    p2 = set(e.r2.pairs)
    for i, j in f.r1.pairs:
        p1.add((i + shift, j + shift))
    for i, j in f.r2.pairs:
        p2.add((i + shift, j + shift))
    for i in range(e.n):
        for j in range(f.n):
            p2.add((i, j + shift))
    return DoublePoset(n, Relation(n, frozenset(p1)), Relation(n, frozenset(p2)))


def restrict(d: DoublePoset, subset) -> DoublePoset:
    elems = tuple(sorted(set(subset)))
    return DoublePoset(len(elems), induced(d.r1, elems), induced(d.r2, elems))


def decompose(d: DoublePoset) -> list[tuple[DoublePoset, DoublePoset]]:
    """One (ideal part, complement part) per lower ideal of the first order."""
    return [
        (restrict(d, ideal), restrict(d, rest))
        for ideal, rest in decompositions(d.r1)
    ]


def tilde(d: DoublePoset) -> DoublePoset:
    """Both orders reversed; an involution."""
    return DoublePoset(d.n, d.r1.reverse(), d.r2.reverse())


def relabel(d: DoublePoset, lam) -> DoublePoset:
    """Apply the bijection ``lam`` (old index -> new index) to both orders."""
    p1 = frozenset((lam[i], lam[j]) for i, j in d.r1.pairs)
    p2 = frozenset((lam[i], lam[j]) for i, j in d.r2.pairs)
    return DoublePoset(d.n, Relation(d.n, p1), Relation(d.n, p2))


# ---------------------------------------------------------------------------
# canonical forms


def _key_from_words(n: int, w1: int, w2: int) -> bytes:
    nbits = n * n
    nbytes = (nbits + 7) // 8
    pad = 8 * nbytes - nbits
    return (
        bytes([n])
        + (w1 << pad).to_bytes(nbytes, "big")
        + (w2 << pad).to_bytes(nbytes, "big")
    )


def _words_from_key(key: bytes) -> tuple[int, int, int]:
    n = key[0]
    nbits = n * n
    nbytes = (nbits + 7) // 8
    pad = 8 * nbytes - nbits
    w1 = int.from_bytes(key[1 : 1 + nbytes], "big") >> pad
    w2 = int.from_bytes(key[1 + nbytes :], "big") >> pad
    return n, w1, w2


_canon_cache: dict[DoublePoset, tuple[CanonicalForm, tuple[int, ...]]] = {}


def canonicalize(
    d: DoublePoset, cap: int = CANONICALIZATION_CAP
) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form plus a witness relabelling (old index -> new index).

    The key is the lexicographically smallest concatenated adjacency
    encoding over all relabellings, so it is constant on isomorphism
    classes and distinct across them.  Exhaustive over n! relabellings,
    hence the size cap.
    """
    if d.n > cap:
        raise SizeCapError(f"canonicalization capped at n={cap}, got n={d.n}")
    hit = _canon_cache.get(d)
    if hit is not None:
        return hit
    w1, w2, old_of_new = _accel.canon_minimize(d.r1.up, d.r2.up, d.n)
    lam = [0] * d.n
    for new, old in enumerate(old_of_new):
        lam[old] = new
    result = (CanonicalForm(d.n, _key_from_words(d.n, w1, w2)), tuple(lam))
    _canon_cache[d] = result
    return result


def canonical_form(d: DoublePoset, cap: int = CANONICALIZATION_CAP) -> CanonicalForm:
    return canonicalize(d, cap)[0]


_decode_cache: dict[CanonicalForm, DoublePoset] = {}


def decode(form: CanonicalForm) -> DoublePoset:
    """The canonical representative encoded by a key."""
    hit = _decode_cache.get(form)
    if hit is not None:
        return hit
    n, w1, w2 = _words_from_key(form.key)
    top = n * n - 1

    def unpack(w: int) -> frozenset:
        pairs = set()
        while w:
            low = w & (-w)
            w ^= low
            cell = top - (low.bit_length() - 1)
            pairs.add(divmod(cell, n))
        return frozenset(pairs)

    d = DoublePoset(n, Relation(n, unpack(w1)), Relation(n, unpack(w2)))
    _decode_cache[form] = d
    return d


# ---------------------------------------------------------------------------
# pictures and the basis pairing


def pictures(e: DoublePoset, f: DoublePoset) -> list[tuple[int, ...]]:
    """All bijections E -> F increasing from (E,<1) to (F,<2) whose inverse
    is increasing from (F,<1) to (E,<2).

    Returned as tuples phi with phi[x] the image of x, in lexicographic
    order of that tuple.
    """
    n = e.n
    if f.n != n:
        return []
    e1, e2 = e.r1.up, e.r2.up
    f1, f2 = f.r1.up, f.r2.up
    out = []
    phi = [0] * n

    def extend(pos: int, unused: int):
        if pos == n:
            out.append(tuple(phi))
            return
        rest = unused
        while rest:
            low = rest & (-rest)
            rest ^= low
            cand = low.bit_length() - 1
            ok = True
            for k in range(pos):
                fk = phi[k]
                if e1[k] >> pos & 1 and not f2[fk] >> cand & 1:
                    ok = False
                    break
                if e1[pos] >> k & 1 and not f2[cand] >> fk & 1:
                    ok = False
                    break
                if f1[fk] >> cand & 1 and not e2[k] >> pos & 1:
                    ok = False
                    break
                if f1[cand] >> fk & 1 and not e2[pos] >> k & 1:
                    ok = False
                    break
            if ok:
                phi[pos] = cand
                extend(pos + 1, unused ^ low)

    extend(0, (1 << n) - 1)
    return out


def pairing_basis(e: DoublePoset, f: DoublePoset) -> int:
    """Number of pictures from e to f; symmetric, isomorphism-invariant."""
    if e.n != f.n:
        return 0
    return _accel.count_pictures(e.r1.up, e.r2.up, f.r1.up, f.r2.up)


# ---------------------------------------------------------------------------
# internal product at the basis level


def increasing_bijections(e: DoublePoset, f: DoublePoset) -> list[tuple[int, ...]]:
    """All bijections increasing from (E,<1) to (F,<2), lexicographically."""
    n = e.n
    if f.n != n:
        return []
    e1 = e.r1.up
    f2 = f.r2.up
    out = []
    phi = [0] * n

    def extend(pos: int, unused: int):
        if pos == n:
            out.append(tuple(phi))
            return
        rest = unused
        while rest:
            low = rest & (-rest)
            rest ^= low
            cand = low.bit_length() - 1
            ok = True
            for k in range(pos):
                if e1[k] >> pos & 1 and not f2[phi[k]] >> cand & 1:
                    ok = False
                    break
                if e1[pos] >> k & 1 and not f2[cand] >> phi[k] & 1:
                    ok = False
                    break
            if ok:
                phi[pos] = cand
                extend(pos + 1, unused ^ low)

    extend(0, (1 << n) - 1)
    return out


def internal_graph(e: DoublePoset, f: DoublePoset, phi) -> DoublePoset:
    """Graph double poset of an increasing bijection phi: (E,<1) -> (F,<2).

    Elements are the pairs (x, phi(x)), indexed by x.  First order compares
    images inside F's first order, second order compares sources inside E's
    second order.
    """
    n = e.n
    phi = tuple(phi)
    if f.n != n or sorted(phi) != list(range(n)):
        raise NotIncreasingError("phi is not a bijection between the ground sets")
    for x, y in e.r1.pairs:
        if not f.r2.has(phi[x], phi[y]):
            raise NotIncreasingError(
                f"phi maps the first-order pair ({x}, {y}) outside the second order"
            )
    p1 = frozenset((x, y) for x in range(n) for y in range(n) if f.r1.has(phi[x], phi[y]))
    return DoublePoset(n, Relation(n, p1), e.r2)


def internal_product_basis(e: DoublePoset, f: DoublePoset) -> list[DoublePoset]:
    """Graphs over every increasing bijection, with multiplicity."""
    return [internal_graph(e, f, phi) for phi in increasing_bijections(e, f)]


# ---------------------------------------------------------------------------
# standard constructions


def from_permutation(word) -> DoublePoset:
    """Double poset of a permutation: natural second order, the word's
    order of values (1-based, mapped down to 0-based elements) as first."""
    word = tuple(word)
    n = len(word)
    order = [v - 1 for v in word]
    p1 = frozenset(
        (order[i], order[j]) for i in range(n) for j in range(i + 1, n)
    )
    return DoublePoset(n, Relation(n, p1), chain_relation(n))


def pi_from_partition(parts) -> DoublePoset:
    """Special double poset on the Ferrers diagram of a partition.

    Cells (x, y) with 0 <= y < number of parts and 0 <= x < parts[y].
    First order is the coordinatewise product order; second order lists
    higher rows first, then left to right.
    """
    parts = tuple(parts)
    if any(p <= 0 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise InvalidPartitionError(f"not weakly decreasing positive parts: {parts}")
    cells = [(x, y) for y in range(len(parts)) for x in range(parts[y])]
    index = {c: i for i, c in enumerate(cells)}
    p1 = set()
    p2 = set()
    for x, y in cells:
        for u, v in cells:
            if (x, y) == (u, v):
                continue
            if x <= u and y <= v:
                p1.add((index[(x, y)], index[(u, v)]))
            if y > v or (y == v and x < u):
                p2.add((index[(x, y)], index[(u, v)]))
    n = len(cells)
    return DoublePoset(n, Relation(n, frozenset(p1)), Relation(n, frozenset(p2)))


# ---------------------------------------------------------------------------
# special double posets


def is_special(d: DoublePoset) -> bool:
    """True when the second order is total."""
    return d.r2.is_total()


def is_naturally_labelled(d: DoublePoset) -> bool:
    """Special, with the second order extending the first."""
    return is_special(d) and d.r1.pairs <= d.r2.pairs


def labelling(d: DoublePoset) -> tuple[int, ...]:
    """The unique order isomorphism from (E,<2) onto {1..n}.

    Returned as a tuple with entry e equal to the 1-based label of e.
    """
    if not is_special(d):
        raise NotSpecialError("labelling requires a total second order")
    down = d.r2.down
    return tuple(1 + bin(down[e]).count("1") for e in range(d.n))


def p_partition_violation(values, d: DoublePoset) -> bool:
    """Whether element values break the order conditions of d.

    ``values[e]`` must weakly increase along the first order, strictly
    so on first-order pairs that the second order reverses.
    """
    r2 = d.r2
    for a, b in d.r1.pairs:
        if r2.has(b, a):
            if values[a] >= values[b]:
                return True
        elif values[a] > values[b]:
            return True
    return False
