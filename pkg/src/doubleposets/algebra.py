"""The graded Hopf algebra of double posets over the integers.

Elements are sparse integer combinations of canonical forms.  Product is
the linearised composition, coproduct the linearised ideal decomposition,
and the antipode comes from the standard recursion available in any graded
connected bialgebra.  The bilinear picture-counting pairing and the
internal (degree-preserving) product are included.

Basis-level results are memoised on canonical keys, so repeated axiom
sweeps over the same small bases stay cheap.
"""

from __future__ import annotations

from .dposets import (
    CanonicalForm,
    DoublePoset,
    canonical_form,
    compose,
    decode,
    decompose,
    empty_dp,
    internal_product_basis,
    pairing_basis,
)
from .linear import IntCombination, accumulate, checked


class DElement(IntCombination):
    """Integer combination of canonical double-poset classes."""


class DTensor(IntCombination):
    """Integer combination of ordered pairs of canonical classes."""


_UNIT_KEY = canonical_form(empty_dp())


def unit_key() -> CanonicalForm:
    return _UNIT_KEY


def unit() -> DElement:
    return DElement.term(_UNIT_KEY)


def element_of(d: DoublePoset) -> DElement:
    """The basis element of d's isomorphism class."""
    return DElement.term(canonical_form(d))


def degrees(a: DElement) -> set[int]:
    return {k.n for k in a.keys()}


def add(a: DElement, b: DElement) -> DElement:
    return a + b


def scale(k: int, a: DElement) -> DElement:
    return a.scaled(k)


_compose_cache: dict[tuple[CanonicalForm, CanonicalForm], CanonicalForm] = {}


def _compose_keys(k1: CanonicalForm, k2: CanonicalForm) -> CanonicalForm:
    hit = _compose_cache.get((k1, k2))
    if hit is None:
        hit = canonical_form(compose(decode(k1), decode(k2)))
        _compose_cache[(k1, k2)] = hit
    return hit


def product(a: DElement, b: DElement) -> DElement:
    """Bilinear extension of composition; adds degrees."""
    out: dict[CanonicalForm, int] = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            accumulate(out, _compose_keys(k1, k2), checked(c1 * c2))
    return DElement(out)


_decompose_cache: dict[CanonicalForm, tuple[tuple[CanonicalForm, CanonicalForm], ...]] = {}


def coproduct_key(k: CanonicalForm) -> tuple[tuple[CanonicalForm, CanonicalForm], ...]:
    """Decomposition terms of one basis class, as canonical key pairs."""
    hit = _decompose_cache.get(k)
    if hit is None:
        hit = tuple(
            (canonical_form(lo), canonical_form(hi)) for lo, hi in decompose(decode(k))
        )
        _decompose_cache[k] = hit
    return hit


def coproduct(a: DElement) -> DTensor:
    out: dict[tuple[CanonicalForm, CanonicalForm], int] = {}
    for k, c in a.items():
        for pair in coproduct_key(k):
            accumulate(out, pair, c)
    return DTensor(out)


def tensor_product(t: DTensor, u: DTensor) -> DTensor:
    """Componentwise product of tensors: (a x b)(c x d) = ac x bd."""
    out: dict[tuple[CanonicalForm, CanonicalForm], int] = {}
    for (a1, a2), c in t.items():
        for (b1, b2), d in u.items():
            key = (_compose_keys(a1, b1), _compose_keys(a2, b2))
            accumulate(out, key, checked(c * d))
    return DTensor(out)


def counit(a: DElement) -> int:
    return a.coeff(_UNIT_KEY)


_antipode_cache: dict[CanonicalForm, DElement] = {}


def antipode_key(k: CanonicalForm) -> DElement:
    """Antipode of one basis class via the graded-connected recursion.

    S(unit) = unit; for degree > 0,
    S(x) = -x - sum of S(x') * x'' over the proper coproduct terms.
    """
    hit = _antipode_cache.get(k)
    if hit is not None:
        return hit
    if k.n == 0:
        result = unit()
    else:
        acc: dict[CanonicalForm, int] = {k: -1}
        for lo, hi in coproduct_key(k):
            if lo.n == 0 or hi.n == 0:
                continue
            for sk, sc in antipode_key(lo).items():
                accumulate(acc, _compose_keys(sk, hi), -sc)
        result = DElement(acc)
    _antipode_cache[k] = result
    return result


def antipode(a: DElement) -> DElement:
    out = DElement.zero()
    for k, c in a.items():
        out = out + antipode_key(k).scaled(c)
    return out


_pairing_cache: dict[tuple[CanonicalForm, CanonicalForm], int] = {}


def pairing_keys(k1: CanonicalForm, k2: CanonicalForm) -> int:
    if k1.n != k2.n:
        return 0
    if k2 < k1:
        k1, k2 = k2, k1
    hit = _pairing_cache.get((k1, k2))
    if hit is None:
        hit = pairing_basis(decode(k1), decode(k2))
        _pairing_cache[(k1, k2)] = hit
    return hit


def pairing(a: DElement, b: DElement) -> int:
    """Bilinear extension of picture counting."""
    total = 0
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            total = checked(total + checked(c1 * c2) * pairing_keys(k1, k2))
    return total


_internal_cache: dict[tuple[CanonicalForm, CanonicalForm], tuple[tuple[CanonicalForm, int], ...]] = {}


def _internal_keys(k1: CanonicalForm, k2: CanonicalForm) -> tuple[tuple[CanonicalForm, int], ...]:
    hit = _internal_cache.get((k1, k2))
    if hit is None:
        acc: dict[CanonicalForm, int] = {}
        for g in internal_product_basis(decode(k1), decode(k2)):
            accumulate(acc, canonical_form(g), 1)
        hit = tuple(sorted(acc.items()))
        _internal_cache[(k1, k2)] = hit
    return hit


def internal_product(a: DElement, b: DElement) -> DElement:
    """Bilinear extension of the graph construction; degree-preserving,
    zero across unequal degrees."""
    out: dict[CanonicalForm, int] = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            if k1.n != k2.n:
                continue
            c = checked(c1 * c2)
            for key, mult in _internal_keys(k1, k2):
                accumulate(out, key, checked(c * mult))
    return DElement(out)
