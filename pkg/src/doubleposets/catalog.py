"""Exhaustive and seeded-random generation of small posets and double posets.

Exhaustive enumeration of double-poset classes is quadratic in the number
of labelled posets, so it is capped where the counts explode; beyond the
caps the check suites fall back to seeded random sampling.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations

from .dposets import CanonicalForm, DoublePoset, canonical_form, decode
from .errors import SizeCapError
from .relations import Relation, chain_relation, validate

ALL_POSETS_CAP = 5
ALL_DOUBLE_POSETS_CAP = 4
SPECIAL_CAP = 5


@lru_cache(maxsize=None)
def naturally_ordered_relations(n: int) -> tuple[Relation, ...]:
    """All closed orders contained in the natural order 0 < 1 < ... < n-1."""
    ascending = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for bits in range(1 << len(ascending)):
        chosen = [p for k, p in enumerate(ascending) if bits >> k & 1]
        pairs = set(chosen)
        if all(
            (a, d) in pairs
            for a, b in chosen
            for c, d in chosen
            if b == c
        ):
            out.append(Relation(n, frozenset(pairs)))
    return tuple(out)


@lru_cache(maxsize=None)
def all_relations(n: int) -> tuple[Relation, ...]:
    """All labelled posets on {0..n-1}.

    Every poset is a relabelling of one whose order sits inside the natural
    order (relabel by any linear extension), so the natural ones are
    expanded over all permutations and deduplicated.
    """
    if n > ALL_POSETS_CAP:
        raise SizeCapError(f"labelled poset enumeration capped at n={ALL_POSETS_CAP}")
    seen: set[frozenset] = set()
    out: list[Relation] = []
    for base in naturally_ordered_relations(n):
        for lam in permutations(range(n)):
            pairs = frozenset((lam[i], lam[j]) for i, j in base.pairs)
            if pairs not in seen:
                seen.add(pairs)
                out.append(Relation(n, pairs))
    out.sort(key=lambda r: sorted(r.pairs))
    return tuple(out)


@lru_cache(maxsize=None)
def all_double_posets(n: int) -> tuple[DoublePoset, ...]:
    """Canonical representatives of every double-poset class of degree n."""
    if n > ALL_DOUBLE_POSETS_CAP:
        raise SizeCapError(
            f"double poset enumeration capped at n={ALL_DOUBLE_POSETS_CAP}"
        )
    rels = all_relations(n)
    keys: set[CanonicalForm] = set()
    for r1 in rels:
        for r2 in rels:
            keys.add(canonical_form(DoublePoset(n, r1, r2)))
    return tuple(decode(k) for k in sorted(keys))


@lru_cache(maxsize=None)
def special_double_posets(n: int) -> tuple[DoublePoset, ...]:
    """One representative per special class: each labelled poset with the
    natural total order as second order (distinct labelled posets give
    non-isomorphic double posets, since only the identity preserves the
    natural chain)."""
    if n > SPECIAL_CAP:
        raise SizeCapError(f"special enumeration capped at n={SPECIAL_CAP}")
    nat = chain_relation(n)
    return tuple(DoublePoset(n, r1, nat) for r1 in all_relations(n))


def random_relation(n: int, rng: random.Random) -> Relation:
    """Transitive closure of a random forward-edge set under a random
    topological shuffle; each forward pair kept with probability 1/2."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = [
        (order[i], order[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.5
    ]
    return validate(pairs, n)


def random_double_poset(n: int, rng: random.Random) -> DoublePoset:
    return DoublePoset(n, random_relation(n, rng), random_relation(n, rng))


def sample_double_posets(n: int, count: int, rng: random.Random) -> list[DoublePoset]:
    """Canonical representatives of ``count`` sampled classes (deduplicated,
    so fewer may come back)."""
    keys: set[CanonicalForm] = set()
    for _ in range(count):
        keys.add(canonical_form(random_double_poset(n, rng)))
    return [decode(k) for k in sorted(keys)]


def sample_special_double_posets(n: int, count: int, rng: random.Random) -> list[DoublePoset]:
    nat = chain_relation(n)
    seen: set[Relation] = set()
    for _ in range(count):
        seen.add(random_relation(n, rng))
    return [DoublePoset(n, r1, nat) for r1 in sorted(seen, key=lambda r: sorted(r.pairs))]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, largest-first parts, in lexicographic order."""
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []

    def extend(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return tuple(sorted(out))
