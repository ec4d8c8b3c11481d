"""Sparse integer linear combinations over hashable basis keys.

Coefficients are checked signed 64-bit integers: any intermediate or stored
value outside that range raises OverflowError instead of growing silently.
Zero coefficients are never stored.
"""

from __future__ import annotations

from typing import Iterable, Iterator

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def checked(v: int) -> int:
    if not INT64_MIN <= v <= INT64_MAX:
        raise OverflowError(f"coefficient {v} exceeds signed 64-bit range")
    return v


def accumulate(terms: dict, key, delta: int) -> None:
    """Add ``delta`` to ``terms[key]`` with overflow checking and zero pruning."""
    v = checked(terms.get(key, 0) + delta)
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


class IntCombination:
    """Immutable-by-convention mapping from basis keys to nonzero ints."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | Iterable[tuple[object, int]] = ()):
        data = dict(terms)
        self._terms = {k: checked(v) for k, v in data.items() if v}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def term(cls, key, coeff: int = 1):
        return cls({key: coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, key) -> int:
        return self._terms.get(key, 0)

    def items(self) -> Iterator[tuple[object, int]]:
        return iter(self._terms.items())

    def keys(self):
        return self._terms.keys()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, IntCombination):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            accumulate(out, k, v)
        return type(self)(out)

    def __sub__(self, other):
        if not isinstance(other, IntCombination):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            accumulate(out, k, -v)
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._terms.items()})

    def scaled(self, k: int):
        if k == 0:
            return type(self)()
        return type(self)({key: checked(k * v) for key, v in self._terms.items()})

    def __rmul__(self, k):
        if isinstance(k, int):
            return self.scaled(k)
        return NotImplemented

    def __repr__(self):
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(
            f"{v}*{k!r}" for k, v in sorted(self._terms.items(), key=lambda t: repr(t[0]))
        )
        return f"{type(self).__name__}({body})"
