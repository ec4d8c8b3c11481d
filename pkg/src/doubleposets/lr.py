"""Lattice words, standard tableaux, and Littlewood-Richardson counting.

Words are tuples of positive letters.  Tableaux are stored bottom row
first, so the row word reads the stored rows in order and the reading word
reads them in reverse.  The counting rules pair a special double poset with
the Ferrers-diagram poset of a partition by filtering lattice words whose
complement (or mirror, against the order-reversed poset) fits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dposets import (
    DoublePoset,
    is_special,
    labelling,
    p_partition_violation,
    tilde,
)
from .errors import (
    LengthMismatchError,
    NotAPartitionError,
    NotLatticeError,
    NotSpecialError,
    PreconditionError,
    SizeMismatchError,
)
from .perms import Permutation, identity, reversal, standardize

Word = tuple[int, ...]
Partition = tuple[int, ...]


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if any(p < 1 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise NotAPartitionError(f"not weakly decreasing positive parts: {parts}")
    return parts


def is_lattice(word) -> bool:
    """Every prefix holds at least as many i's as (i+1)'s, for all i."""
    counts: dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts.get(letter - 1, 0) < counts[letter]:
            return False
    return True


def complement(word) -> Word:
    """Exchange letters i and k+1-i, where k is the largest letter."""
    word = tuple(word)
    if not word:
        return ()
    k = max(word)
    return tuple(k + 1 - letter for letter in word)


def mirror(word) -> Word:
    return tuple(reversed(word))


def weight(word) -> Partition:
    """Letter multiplicities of 1, 2, ... as a partition."""
    word = tuple(word)
    if not word:
        return ()
    k = max(word)
    counts = [0] * k
    for letter in word:
        counts[letter - 1] += 1
    if any(counts[i] < counts[i + 1] for i in range(k - 1)) or 0 in counts:
        raise NotAPartitionError(f"multiplicities {tuple(counts)} are not a partition")
    return tuple(counts)


def fits_into(word, d: DoublePoset) -> bool:
    """Whether assigning letter word[omega(e)-1] to each element e respects
    both order conditions of the (special) double poset."""
    word = tuple(word)
    if not is_special(d):
        raise NotSpecialError("fits-into requires a total second order")
    if len(word) != d.n:
        raise LengthMismatchError(f"word length {len(word)} != ground set size {d.n}")
    omega = labelling(d)
    values = tuple(word[omega[e] - 1] for e in range(d.n))
    return not p_partition_violation(values, d)


@lru_cache(maxsize=None)
def lattice_words(parts: Partition) -> tuple[Word, ...]:
    """All lattice words of the given weight, lexicographically."""
    parts = check_partition(parts)
    n = sum(parts)
    k = len(parts)
    word = [0] * n
    counts = [0] * (k + 1)
    out: list[Word] = []

    def extend(pos: int):
        if pos == n:
            out.append(tuple(word))
            return
        for letter in range(1, k + 1):
            if counts[letter] >= parts[letter - 1]:
                continue
            if letter > 1 and counts[letter - 1] <= counts[letter]:
                continue
            counts[letter] += 1
            word[pos] = letter
            extend(pos + 1)
            counts[letter] -= 1

    extend(0)
    return tuple(out)


@dataclass(frozen=True)
class Tableau:
    """Standard Young tableau; ``rows[0]`` is the bottom (longest) row."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def is_standard(self) -> bool:
        shape = self.shape()
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            return False
        entries = sorted(v for row in self.rows for v in row)
        if entries != list(range(1, self.n + 1)):
            return False
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for lower, upper in zip(self.rows, self.rows[1:]):
            if any(lower[i] >= upper[i] for i in range(len(upper))):
                return False
        return True


def tableau_from_lattice(word) -> Tableau:
    """Place position p in row j exactly when the p-th letter is j."""
    word = tuple(word)
    if not is_lattice(word):
        raise NotLatticeError(f"not a lattice word: {word}")
    k = max(word) if word else 0
    rows: list[list[int]] = [[] for _ in range(k)]
    for pos, letter in enumerate(word, start=1):
        rows[letter - 1].append(pos)
    return Tableau(tuple(tuple(r) for r in rows))


def read_word(t: Tableau) -> Word:
    """Concatenation of the rows starting from the last stored (top) row."""
    out: list[int] = []
    for row in reversed(t.rows):
        out.extend(row)
    return tuple(out)


def row_word(t: Tableau) -> Permutation:
    """Rows concatenated bottom row first, as a permutation."""
    out: list[int] = []
    for row in t.rows:
        out.extend(row)
    return Permutation(tuple(out))


def mirror_read_word(t: Tableau) -> Word:
    return mirror(read_word(t))


def young_subgroup_longest(parts: Partition) -> Permutation:
    """Longest element of the block-diagonal subgroup with the given block
    sizes: each block reversed in place."""
    word: list[int] = []
    offset = 0
    for part in parts:
        word.extend(range(offset + part, offset, -1))
        offset += part
    return Permutation(tuple(word))


@dataclass(frozen=True)
class StIdentityReport:
    """Results of the standardisation identities for one word."""

    word: Word
    complement_ok: bool
    mirror_ok: bool
    row_word_ok: bool | None  # None when the word is not lattice

    def all_ok(self) -> bool:
        return self.complement_ok and self.mirror_ok and self.row_word_ok is not False


def st_identities_check(word) -> StIdentityReport:
    """Verify the standardisation identities for complement and mirror.

    With w0 the order-reversing permutation and g the longest element of
    the block subgroup of the weight, checks st(complement) = w0.g.st(w)
    and st(mirror) = g.st(w).w0; both need strictly decreasing weight
    parts.  When the word is lattice, also checks that st(w) inverts the
    row word of its tableau.
    """
    word = tuple(word)
    parts = weight(word)
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise PreconditionError(
            f"weight {parts} must be strictly decreasing for these identities"
        )
    n = len(word)
    st_w = standardize(word)
    w0 = reversal(n)
    g = young_subgroup_longest(parts)
    complement_ok = standardize(complement(word)) == w0.compose(g).compose(st_w)
    mirror_ok = standardize(mirror(word)) == g.compose(st_w).compose(w0)
    row_ok = None
    if is_lattice(word):
        row_ok = st_w == row_word(tableau_from_lattice(word)).inverse()
    return StIdentityReport(word, complement_ok, mirror_ok, row_ok)


def _check_lr_inputs(d: DoublePoset, parts) -> Partition:
    parts = check_partition(parts)
    if not is_special(d):
        raise NotSpecialError("counting rules require a total second order")
    if sum(parts) != d.n:
        raise SizeMismatchError(
            f"partition weight {sum(parts)} != ground set size {d.n}"
        )
    return parts


def lr_count_complement(d: DoublePoset, parts) -> int:
    """Lattice words of the given weight whose complements fit into d."""
    parts = _check_lr_inputs(d, parts)
    return sum(1 for w in lattice_words(parts) if fits_into(complement(w), d))


def lr_count_mirror(d: DoublePoset, parts) -> int:
    """Lattice words of the given weight whose mirrors fit into the
    order-reversed double poset."""
    parts = _check_lr_inputs(d, parts)
    flipped = tilde(d)
    return sum(1 for w in lattice_words(parts) if fits_into(mirror(w), flipped))


def fits_standardization_check(word, d: DoublePoset) -> tuple[bool, bool]:
    """(word fits, its standardisation fits); the two always agree."""
    word = tuple(word)
    return fits_into(word, d), fits_into(standardize(word).word, d)


def permutation_fits(sigma: Permutation, d: DoublePoset) -> bool:
    return fits_into(sigma.word, d)


def conjugate_by_reversal(sigma: Permutation) -> Permutation:
    """w0 . sigma . w0 for the order-reversing word w0."""
    w0 = reversal(sigma.n)
    return w0.compose(sigma).compose(w0)


__all__ = [
    "Partition",
    "StIdentityReport",
    "Tableau",
    "Word",
    "check_partition",
    "complement",
    "conjugate_by_reversal",
    "fits_into",
    "fits_standardization_check",
    "is_lattice",
    "lattice_words",
    "lr_count_complement",
    "lr_count_mirror",
    "mirror",
    "mirror_read_word",
    "permutation_fits",
    "read_word",
    "row_word",
    "st_identities_check",
    "standardize",
    "tableau_from_lattice",
    "weight",
    "young_subgroup_longest",
]
