"""Independent reference enumerations used to cross-check the main paths.

Everything here is deliberately written against different machinery than
the operations it validates: tableau counts come from corner removal, Schur
expansions from semistandard fillings, and classical product coefficients
from skew fillings with a lattice reading word.  None of it touches the
picture or lattice-word code.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def syt_count(shape: tuple[int, ...]) -> int:
    """Standard Young tableaux of a shape, by removing corner cells.

    The largest entry sits in a corner; strip it and recurse.
    """
    if not shape:
        return 1
    total = 0
    for r in range(len(shape)):
        is_corner = r == len(shape) - 1 or shape[r] > shape[r + 1]
        if not is_corner:
            continue
        smaller = list(shape)
        smaller[r] -= 1
        if smaller[r] == 0:
            smaller.pop()
        total += syt_count(tuple(smaller))
    return total


def _semistandard_fillings(shape: tuple[int, ...], max_letter: int):
    """Yield content vectors of all semistandard fillings of ``shape``.

    English convention: row 0 on top, rows weakly increase left to right,
    columns strictly increase downward.  Content is the tuple of letter
    multiplicities over 1..max_letter.
    """
    rows = [list(range(c)) for c in shape]  # placeholder storage
    content = [0] * max_letter

    def fill(r: int, c: int):
        if r == len(shape):
            yield tuple(content)
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = rows[r][c - 1] if c > 0 else 1
        if r > 0 and c < shape[r - 1]:
            lo = max(lo, rows[r - 1][c] + 1)
        for letter in range(lo, max_letter + 1):
            rows[r][c] = letter
            content[letter - 1] += 1
            yield from fill(nr, nc)
            content[letter - 1] -= 1

    if not shape:
        yield ()
        return
    yield from fill(0, 0)


def schur_monomial_expansion(shape: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Monomial quasi-symmetric coordinates of the Schur function of a shape.

    The coefficient of a composition is the number of semistandard fillings
    whose content is exactly that composition (letters 1..k all used).
    Fillings with an unused intermediate letter belong to a different,
    packed composition and are skipped here.
    """
    n = sum(shape)
    if n == 0:
        return {(): 1}
    out: dict[tuple[int, ...], int] = {}
    for content in _semistandard_fillings(tuple(shape), n):
        k = max(i + 1 for i, m in enumerate(content) if m) if any(content) else 0
        packed = content[:k]
        if 0 in packed:
            continue
        out[packed] = out.get(packed, 0) + 1
    return out


def skew_lattice_count(
    outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...]
) -> int:
    """Semistandard fillings of outer/inner with the given content whose
    reverse reading word (rows top to bottom, right to left) is lattice.

    This is the classical rule for the coefficient of the outer shape in
    the product of the inner shape with the content shape.
    """
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
        return 0
    cells = [
        (r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner[r] - 1, -1)
    ]
    if len(cells) != sum(content):
        return 0
    k = len(content)
    remaining = list(content)
    counts = [0] * (k + 1)
    entries: dict[tuple[int, int], int] = {}

    def extend(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        total = 0
        for letter in range(1, k + 1):
            if remaining[letter - 1] == 0:
                continue
            if letter > 1 and counts[letter - 1] <= counts[letter]:
                continue
            right = entries.get((r, c + 1))
            if right is not None and letter > right:
                continue
            above = entries.get((r - 1, c))
            if above is not None and letter <= above:
                continue
            entries[(r, c)] = letter
            remaining[letter - 1] -= 1
            counts[letter] += 1
            total += extend(i + 1)
            counts[letter] -= 1
            remaining[letter - 1] += 1
            del entries[(r, c)]
        return total

    return extend(0)
