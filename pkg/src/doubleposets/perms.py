"""The Hopf algebra of permutations and the linear-extension map onto it.

Permutations are 1-based one-line words.  The product is the shifted
shuffle, the coproduct standardises the two sides of every concatenation
split, and the scalar product pairs mutually inverse permutations.  Special
double posets (total second order) map in by summing their linear
extensions, read through the labelling of the second order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import DElement
from .dposets import DoublePoset, decode, is_special, labelling
from .errors import EmptyError, NotSpecialError
from .linear import IntCombination, accumulate, checked
from .relations import linear_extensions


@dataclass(frozen=True, order=True)
class Permutation:
    """One-line notation over {1..n}; the empty word is the identity of S_0."""

    word: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"not a permutation word: {self.word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.word)
        for pos, v in enumerate(self.word, start=1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """Functional composition: (self . other)(i) = self(other(i))."""
        if other.n != self.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.word[v - 1] for v in other.word))

    def __repr__(self):
        return f"Permutation({''.join(map(str, self.word)) if self.n and max(self.word) <= 9 else self.word})"


def perm(*values: int) -> Permutation:
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    """The order-reversing word n, n-1, ..., 1."""
    return Permutation(tuple(range(n, 0, -1)))


class SElement(IntCombination):
    """Integer combination of permutations."""


def standardize(word) -> Permutation:
    """Rank the positions of a word, equal letters numbered left to right."""
    word = tuple(word)
    ranks = [0] * len(word)
    order = sorted(range(len(word)), key=lambda p: (word[p], p))
    for rank, pos in enumerate(order, start=1):
        ranks[pos] = rank
    return Permutation(tuple(ranks))


def shifted_shuffle(sigma: Permutation, tau: Permutation) -> SElement:
    """Sum of all interleavings of sigma with tau shifted up by |sigma|."""
    left = sigma.word
    right = tuple(v + sigma.n for v in tau.word)
    out: dict[Permutation, int] = {}
    word = [0] * (len(left) + len(right))

    def merge(i: int, j: int, pos: int):
        if i == len(left) and j == len(right):
            accumulate(out, Permutation(tuple(word)), 1)
            return
        if i < len(left):
            word[pos] = left[i]
            merge(i + 1, j, pos + 1)
        if j < len(right):
            word[pos] = right[j]
            merge(i, j + 1, pos + 1)

    merge(0, 0, 0)
    return SElement(out)


def product_s(a: SElement, b: SElement) -> SElement:
    out = SElement.zero()
    for s, c in a.items():
        for t, d in b.items():
            out = out + shifted_shuffle(s, t).scaled(checked(c * d))
    return out


def coproduct_s(sigma: Permutation) -> list[tuple[Permutation, Permutation]]:
    """Standardised prefix/suffix pairs for every cut of the word."""
    w = sigma.word
    return [
        (standardize(w[:i]), standardize(w[i:])) for i in range(len(w) + 1)
    ]


def joellenbeck(a: SElement, b: SElement) -> int:
    """Bilinear pairing that matches each permutation with its inverse."""
    total = 0
    for s, c in a.items():
        d = b.coeff(s.inverse())
        if d:
            total = checked(total + checked(c * d))
    return total


def internal_s(a: SElement, b: SElement) -> SElement:
    """Bilinear functional composition; zero across unequal degrees."""
    out: dict[Permutation, int] = {}
    for s, c in a.items():
        for t, d in b.items():
            if s.n != t.n:
                continue
            accumulate(out, s.compose(t), checked(c * d))
    return SElement(out)


def descent_composition(sigma: Permutation) -> tuple[int, ...]:
    """Lengths of the maximal ascending runs of the word."""
    w = sigma.word
    if not w:
        raise EmptyError("descent composition of the empty permutation")
    parts = []
    run = 1
    for i in range(1, len(w)):
        if w[i] > w[i - 1]:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return tuple(parts)


def linear_extensions_special(d: DoublePoset) -> list[Permutation]:
    """Linear extensions of the first order read through the labelling.

    Each extension sequence e_1..e_n becomes the permutation with word
    omega(e_1)..omega(e_n), so its inverse composed with omega increases
    from (E,<1) into {1..n}.
    """
    if not is_special(d):
        raise NotSpecialError("linear extensions as permutations need a total second order")
    omega = labelling(d)
    return [
        Permutation(tuple(omega[e] for e in seq)) for seq in linear_extensions(d.r1)
    ]


def lmap(a: DElement) -> SElement:
    """Sum of linear extensions of every (special) basis term, linearly."""
    out: dict[Permutation, int] = {}
    for key, c in a.items():
        for sigma in linear_extensions_special(decode(key)):
            accumulate(out, sigma, c)
    return SElement(out)
