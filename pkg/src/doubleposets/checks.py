"""Named verification suites driving every identity the package rests on.

Each suite enumerates canonical double posets exhaustively at small sizes
(seeded random samples beyond the exhaustive caps), evaluates one family of
identities case by case, and reports per-property case and failure counts.
The same machinery backs the command-line ``check`` verb and the acceptance
tests, so a report is reproducible byte for byte from (suite, max_n, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from . import _accel, algebra, catalog, oracles
from .algebra import (
    DElement,
    antipode_key,
    coproduct,
    coproduct_key,
    counit,
    element_of,
    pairing,
    pairing_keys,
    product,
    tensor_product,
    unit,
    unit_key,
)
from .dposets import (
    CanonicalForm,
    DoublePoset,
    canonical_form,
    compose,
    decode,
    decompose,
    from_permutation,
    is_naturally_labelled,
    is_special,
    pi_from_partition,
    tilde,
)
from .lr import (
    complement,
    conjugate_by_reversal,
    fits_into,
    fits_standardization_check,
    lattice_words,
    lr_count_complement,
    lr_count_mirror,
    mirror,
    tableau_from_lattice,
    weight,
)
from .perms import (
    Permutation,
    internal_s,
    joellenbeck,
    linear_extensions_special,
    lmap,
    product_s,
    standardize,
)
from .qsym import F_of, QElement, gamma, qsym_coproduct, qsym_product

SUITE_NAMES = ("hopf", "selfdual", "internal", "lmap", "qsym", "lr")

_EXHAUSTIVE_BASIS_MAX = catalog.ALL_DOUBLE_POSETS_CAP
_EXHAUSTIVE_SPECIAL_MAX = catalog.SPECIAL_CAP


@dataclass
class PropertyResult:
    name: str
    cases: int
    failures: int
    informational: bool = False
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.informational or self.failures == 0


@dataclass
class CheckContext:
    """Shared enumeration state for one (max_n, seed) run."""

    max_n: int
    seed: int
    sample_size: int = 24
    _basis: dict[int, list[DoublePoset]] = field(default_factory=dict)
    _special: dict[int, list[DoublePoset]] = field(default_factory=dict)
    _pairing: dict[int, np.ndarray] = field(default_factory=dict)
    _special_pairing: dict[int, np.ndarray] = field(default_factory=dict)
    _gamma: dict[CanonicalForm, QElement] = field(default_factory=dict)

    def _rng(self, purpose: str) -> random.Random:
        return random.Random(f"{self.seed}:{purpose}")

    def basis(self, n: int) -> list[DoublePoset]:
        """All canonical classes of degree n, or a seeded sample beyond the cap."""
        if n not in self._basis:
            if n <= _EXHAUSTIVE_BASIS_MAX:
                self._basis[n] = list(catalog.all_double_posets(n))
            else:
                self._basis[n] = catalog.sample_double_posets(
                    n, self.sample_size, self._rng(f"basis:{n}")
                )
        return self._basis[n]

    def special(self, n: int) -> list[DoublePoset]:
        if n not in self._special:
            if n <= _EXHAUSTIVE_SPECIAL_MAX:
                self._special[n] = list(catalog.special_double_posets(n))
            else:
                self._special[n] = catalog.sample_special_double_posets(
                    n, self.sample_size, self._rng(f"special:{n}")
                )
        return self._special[n]

    def basis_keys(self, n: int) -> list[CanonicalForm]:
        return [canonical_form(d) for d in self.basis(n)]

    def key_index(self, n: int) -> dict[CanonicalForm, int]:
        return {k: i for i, k in enumerate(self.basis_keys(n))}

    def pairing_matrix(self, n: int) -> np.ndarray:
        """Picture counts across the degree-n basis (symmetric)."""
        if n not in self._pairing:
            self._pairing[n] = _pair_matrix(self.basis(n), self.basis(n))
        return self._pairing[n]

    def special_pairing_matrix(self, n: int) -> np.ndarray:
        if n not in self._special_pairing:
            self._special_pairing[n] = _pair_matrix(self.special(n), self.special(n))
        return self._special_pairing[n]

    def gamma_of(self, key: CanonicalForm) -> QElement:
        hit = self._gamma.get(key)
        if hit is None:
            hit = gamma(decode(key))
            self._gamma[key] = hit
        return hit


def _pack(dps: list[DoublePoset]):
    return (
        _accel.pack_mask_rows([d.r1.up for d in dps]),
        _accel.pack_mask_rows([d.r2.up for d in dps]),
    )


def _pair_matrix(a: list[DoublePoset], b: list[DoublePoset]) -> np.ndarray:
    a1, a2 = _pack(a)
    b1, b2 = _pack(b)
    if not a or not b:
        return np.zeros((len(a), len(b)), np.int64)
    return _accel.count_pictures_matrix(a1, a2, b1, b2)


# ---------------------------------------------------------------------------
# hopf suite


def _coassociative(key: CanonicalForm) -> bool:
    left: dict = {}
    right: dict = {}
    for a, b in coproduct_key(key):
        for a1, a2 in coproduct_key(a):
            left[(a1, a2, b)] = left.get((a1, a2, b), 0) + 1
        for b1, b2 in coproduct_key(b):
            right[(a, b1, b2)] = right.get((a, b1, b2), 0) + 1
    return left == right


def _counit_laws(key: CanonicalForm) -> bool:
    left: dict = {}
    right: dict = {}
    for a, b in coproduct_key(key):
        if a == unit_key():
            left[b] = left.get(b, 0) + 1
        if b == unit_key():
            right[a] = right.get(a, 0) + 1
    return left == {key: 1} and right == {key: 1}


def _antipode_both_sides(key: CanonicalForm) -> bool:
    expected = unit() if key.n == 0 else DElement.zero()
    left = DElement.zero()
    right = DElement.zero()
    for a, b in coproduct_key(key):
        left = left + product(antipode_key(a), DElement.term(b))
        right = right + product(DElement.term(a), antipode_key(b))
    return left == expected and right == expected


def suite_hopf(ctx: CheckContext) -> list[PropertyResult]:
    out = []
    elements = [
        (n, d) for n in range(ctx.max_n + 1) for d in ctx.basis(n)
    ]
    keys = [canonical_form(d) for _, d in elements]

    failures = sum(0 if _coassociative(k) else 1 for k in keys)
    out.append(PropertyResult("coassociativity", len(keys), failures))

    failures = sum(0 if _counit_laws(k) else 1 for k in keys)
    out.append(PropertyResult("counit-laws", len(keys), failures))

    cases = 0
    failures = 0
    single = [element_of(d) for _, d in elements]
    cops = [coproduct(e) for e in single]
    for i, (p, _) in enumerate(elements):
        for j, (q, _) in enumerate(elements):
            if p + q > ctx.max_n + 1:
                continue
            cases += 1
            got = coproduct(product(single[i], single[j]))
            if got != tensor_product(cops[i], cops[j]):
                failures += 1
    out.append(PropertyResult("bialgebra-compatibility", cases, failures))

    failures = sum(0 if _antipode_both_sides(k) else 1 for k in keys)
    out.append(PropertyResult("antipode-identities", len(keys), failures))

    failures = 0
    for k in keys:
        e = DElement.term(k)
        if counit(e) != (1 if k.n == 0 else 0):
            failures += 1
    out.append(PropertyResult("counit-values", len(keys), failures))
    return out


# ---------------------------------------------------------------------------
# selfdual suite


def suite_selfdual(ctx: CheckContext) -> list[PropertyResult]:
    cases = 0
    failures = 0
    for m in range(min(ctx.max_n, _EXHAUSTIVE_BASIS_MAX) + 1):
        keys_m = ctx.basis_keys(m)
        index_m = ctx.key_index(m)
        pm = ctx.pairing_matrix(m)
        split_tables = {}
        for p in range(m + 1):
            q = m - p
            kp = ctx.basis_keys(p)
            kq = ctx.basis_keys(q)
            idx = ctx.key_index(m)
            comp = np.zeros((len(kp), len(kq)), np.int64)
            for i, a in enumerate(kp):
                for j, b in enumerate(kq):
                    comp[i, j] = idx[algebra._compose_keys(a, b)]
            split_tables[p] = comp
        for gi, gkey in enumerate(keys_m):
            by_degree: dict[int, tuple[list[int], list[int]]] = {
                p: ([], []) for p in range(m + 1)
            }
            for a, b in coproduct_key(gkey):
                left, right = by_degree[a.n]
                left.append(ctx.key_index(a.n)[a])
                right.append(ctx.key_index(b.n)[b])
            for p in range(m + 1):
                q = m - p
                comp = split_tables[p]
                lhs = pm[comp, gi]
                aa, bb = by_degree[p]
                pp = ctx.pairing_matrix(p)
                pq = ctx.pairing_matrix(q)
                rhs = pp[:, aa] @ pq[:, bb].T
                cases += lhs.size
                failures += int(np.count_nonzero(lhs != rhs))
    out = [PropertyResult("selfduality-exhaustive", cases, failures)]

    cases = 0
    failures = 0
    rng = ctx._rng("selfdual")
    for m in range(_EXHAUSTIVE_BASIS_MAX + 1, ctx.max_n + 1):
        for _ in range(ctx.sample_size):
            p = rng.randint(0, m)
            e = element_of(rng.choice(ctx.basis(p)))
            f = element_of(rng.choice(ctx.basis(m - p)))
            g = rng.choice(ctx.basis(m))
            lhs = pairing(product(e, f), element_of(g))
            rhs = 0
            for (a, b), c in coproduct(element_of(g)).items():
                rhs += c * pairing(e, DElement.term(a)) * pairing(f, DElement.term(b))
            cases += 1
            if lhs != rhs:
                failures += 1
    if cases:
        out.append(PropertyResult("selfduality-sampled", cases, failures))
    return out


# ---------------------------------------------------------------------------
# internal suite


def suite_internal(ctx: CheckContext) -> list[PropertyResult]:
    out = []

    cases = 0
    failures = 0
    for n in range(1, min(ctx.max_n, 4) + 1):
        perms_n = [Permutation(tuple(w)) for w in permutations(range(1, n + 1))]
        for s in perms_n:
            es = element_of(from_permutation(s.word))
            for t in perms_n:
                cases += 1
                got = algebra.internal_product(es, element_of(from_permutation(t.word)))
                want = element_of(from_permutation(s.compose(t).word))
                if got != want:
                    failures += 1
    out.append(PropertyResult("permutation-composition", cases, failures))

    cases = 0
    failures = 0
    for m in range(min(ctx.max_n - 1, 3) + 1):
        keys_m = ctx.basis_keys(m)
        size = len(keys_m)
        pm = ctx.pairing_matrix(m)
        index = ctx.key_index(m)
        ip = {
            (i, j): algebra._internal_keys(keys_m[i], keys_m[j])
            for i in range(size)
            for j in range(size)
        }
        right_mult = []
        for j in range(size):
            mj = np.zeros((size, size), np.int64)
            for g in range(size):
                for key, mult in ip[(j, g)]:
                    mj[g, index[key]] += mult
            right_mult.append(mj)
        for i in range(size):
            for j in range(size):
                lhs = np.zeros(size, np.int64)
                for key, mult in ip[(i, j)]:
                    lhs += mult * pm[index[key], :]
                rhs = right_mult[j] @ pm[i, :]
                cases += size
                failures += int(np.count_nonzero(lhs != rhs))
    out.append(PropertyResult("pairing-adjunction", cases, failures))

    cases = 0
    mismatches = 0
    for m in range(min(ctx.max_n - 1, 3) + 1):
        keys_m = ctx.basis_keys(m)
        terms = {
            (a, b): algebra._internal_keys(a, b) for a in keys_m for b in keys_m
        }

        def app(pairs, c_key):
            acc: dict[CanonicalForm, int] = {}
            for k, mult in pairs:
                for k2, mult2 in terms[(k, c_key)]:
                    acc[k2] = acc.get(k2, 0) + mult * mult2
            return acc

        def app_left(a_key, pairs):
            acc: dict[CanonicalForm, int] = {}
            for k, mult in pairs:
                for k2, mult2 in terms[(a_key, k)]:
                    acc[k2] = acc.get(k2, 0) + mult * mult2
            return acc

        for a in keys_m:
            for b in keys_m:
                ab = terms[(a, b)]
                for c in keys_m:
                    cases += 1
                    if app(ab, c) != app_left(a, terms[(b, c)]):
                        mismatches += 1
    note = "associativity not asserted; observed "
    note += "no counterexample" if mismatches == 0 else f"{mismatches} counterexamples"
    out.append(
        PropertyResult("internal-associativity", cases, mismatches, informational=True, note=note)
    )
    return out


# ---------------------------------------------------------------------------
# lmap suite


def suite_lmap(ctx: CheckContext) -> list[PropertyResult]:
    out = []
    top = ctx.max_n
    specials = {n: ctx.special(n) for n in range(top + 1)}
    lsets: dict[int, list[SetPair]] = {}

    class SetPair:
        __slots__ = ("element", "straight", "inverse")

        def __init__(self, d: DoublePoset):
            self.element = lmap(element_of(d))
            self.straight = set(self.element.keys())
            self.inverse = {s.inverse() for s in self.straight}

    for n in range(top + 1):
        lsets[n] = [SetPair(d) for d in specials[n]]

    cases = 0
    failures = 0
    for p in range(top + 1):
        for q in range(min(top, top + 1 - p) + 1):
            for i, a in enumerate(specials[p]):
                la = lsets[p][i].element
                for j, b in enumerate(specials[q]):
                    cases += 1
                    lhs = lmap(product(element_of(a), element_of(b)))
                    rhs = product_s(la, lsets[q][j].element)
                    if lhs != rhs:
                        failures += 1
    out.append(PropertyResult("algebra-morphism", cases, failures))

    cases = 0
    failures = 0
    for n in range(top + 1):
        for d in specials[n]:
            cases += 1
            lhs: dict = {}
            for sigma, c in lmap(element_of(d)).items():
                w = sigma.word
                for cut in range(len(w) + 1):
                    key = (standardize(w[:cut]), standardize(w[cut:]))
                    lhs[key] = lhs.get(key, 0) + c
                    if lhs[key] == 0:
                        del lhs[key]
            rhs: dict = {}
            for lo, hi in decompose(d):
                for s1, c1 in lmap(element_of(lo)).items():
                    for s2, c2 in lmap(element_of(hi)).items():
                        key = (s1, s2)
                        rhs[key] = rhs.get(key, 0) + c1 * c2
                        if rhs[key] == 0:
                            del rhs[key]
            if lhs != rhs:
                failures += 1
    out.append(PropertyResult("coalgebra-morphism", cases, failures))

    cases = 0
    failures = 0
    for n in range(top + 1):
        pm = ctx.special_pairing_matrix(n)
        pairs_n = lsets[n]
        for i, a in enumerate(pairs_n):
            for j, b in enumerate(pairs_n):
                cases += 1
                jl = len(a.straight & b.inverse)
                if jl != int(pm[i, j]):
                    failures += 1
    out.append(PropertyResult("pairing-isometry", cases, failures))

    cases = 0
    failures = 0
    for n in range(top + 1):
        for i, a in enumerate(specials[n]):
            ea = element_of(a)
            la = lsets[n][i].element
            for j, b in enumerate(specials[n]):
                cases += 1
                lhs = lmap(algebra.internal_product(ea, element_of(b)))
                rhs = internal_s(la, lsets[n][j].element)
                if lhs != rhs:
                    failures += 1
    out.append(PropertyResult("internal-morphism", cases, failures))

    cases = 0
    failures = 0
    for n in range(min(top, 4) + 1):
        all_perms = [Permutation(tuple(w)) for w in permutations(range(1, n + 1))]
        for i, d in enumerate(specials[n]):
            ext = lsets[n][i].straight
            for sigma in all_perms:
                cases += 1
                if (sigma in ext) != fits_into(sigma.inverse().word, d):
                    failures += 1
    out.append(PropertyResult("extension-fits-duality", cases, failures))

    cases = 0
    failures = 0
    for p in range(top + 1):
        for q in range(min(top, top + 1 - p) + 1):
            for a in specials[p]:
                for b in specials[q]:
                    cases += 1
                    c = compose(a, b)
                    if not is_special(c):
                        failures += 1
                    if (
                        is_naturally_labelled(a)
                        and is_naturally_labelled(b)
                        and not is_naturally_labelled(c)
                    ):
                        failures += 1
    for n in range(top + 1):
        for d in specials[n]:
            for lo, hi in decompose(d):
                cases += 1
                if not (is_special(lo) and is_special(hi)):
                    failures += 1
                if is_naturally_labelled(d) and not (
                    is_naturally_labelled(lo) and is_naturally_labelled(hi)
                ):
                    failures += 1
    out.append(PropertyResult("special-closure", cases, failures))
    return out


# ---------------------------------------------------------------------------
# qsym suite


def suite_qsym(ctx: CheckContext) -> list[PropertyResult]:
    out = []

    cases = 0
    failures = 0
    for p in range(ctx.max_n + 1):
        for q in range(ctx.max_n + 1 - p):
            for a in ctx.basis(p):
                ga = ctx.gamma_of(canonical_form(a))
                for b in ctx.basis(q):
                    cases += 1
                    lhs = gamma(compose(a, b))
                    if lhs != qsym_product(ga, ctx.gamma_of(canonical_form(b))):
                        failures += 1
    out.append(PropertyResult("gamma-algebra-morphism", cases, failures))

    cases = 0
    failures = 0
    homogeneity_failures = 0
    for n in range(ctx.max_n + 1):
        for d in ctx.basis(n):
            key = canonical_form(d)
            cases += 1
            gd = ctx.gamma_of(key)
            if any(sum(comp) != n for comp in gd.keys()):
                homogeneity_failures += 1
            lhs: dict = {}
            for left, right, c in qsym_coproduct(gd):
                lhs[(left, right)] = c
            rhs: dict = {}
            for a, b in coproduct_key(key):
                for c1, v1 in ctx.gamma_of(a).items():
                    for c2, v2 in ctx.gamma_of(b).items():
                        k2 = (c1, c2)
                        rhs[k2] = rhs.get(k2, 0) + v1 * v2
                        if rhs[k2] == 0:
                            del rhs[k2]
            if lhs != rhs:
                failures += 1
    out.append(PropertyResult("gamma-coalgebra-morphism", cases, failures))
    out.append(PropertyResult("gamma-homogeneity", cases, homogeneity_failures))

    cases = 0
    failures = 0
    for n in range(min(ctx.max_n + 1, _EXHAUSTIVE_SPECIAL_MAX) + 1):
        for d in ctx.special(n):
            cases += 1
            if F_of(lmap(element_of(d))) != gamma(d):
                failures += 1
    out.append(PropertyResult("fundamental-of-extensions", cases, failures))

    cases = 0
    failures = 0
    for n in range(ctx.max_n + 1):
        for parts in catalog.partitions_of(n):
            cases += 1
            expansion = oracles.schur_monomial_expansion(parts)
            if gamma(pi_from_partition(parts) if parts else decode(unit_key())) != QElement(expansion):
                failures += 1
    out.append(PropertyResult("schur-expansion", cases, failures))
    return out


# ---------------------------------------------------------------------------
# lr suite


def suite_lr(ctx: CheckContext) -> list[PropertyResult]:
    out = []

    cases = 0
    failures = 0
    for n in range(1, ctx.max_n + 2):
        specials = (
            ctx.special(n)
            if n <= _EXHAUSTIVE_SPECIAL_MAX
            else catalog.sample_special_double_posets(
                n, ctx.sample_size, ctx._rng(f"lr:{n}")
            )
        )
        shapes = [p for p in catalog.partitions_of(n)]
        diagram_posets = [pi_from_partition(p) for p in shapes]
        matrix = _pair_matrix(specials, diagram_posets)
        for i, d in enumerate(specials):
            for j, parts in enumerate(shapes):
                cases += 1
                picture_count = int(matrix[i, j])
                if picture_count != lr_count_complement(d, parts):
                    failures += 1
                elif picture_count != lr_count_mirror(d, parts):
                    failures += 1
    out.append(PropertyResult("counting-rule", cases, failures))

    cases = 0
    failures = 0
    for n in range(1, min(ctx.max_n + 2, 6) + 1):
        shapes = catalog.partitions_of(n)
        posets = [pi_from_partition(p) for p in shapes]
        matrix = _pair_matrix(posets, posets)
        expected = np.eye(len(shapes), dtype=np.int64)
        cases += matrix.size
        failures += int(np.count_nonzero(matrix != expected))
    out.append(PropertyResult("diagram-orthonormality", cases, failures))

    cases = 0
    failures = 0
    for total in range(2, min(ctx.max_n + 1, 5) + 1):
        for outer in catalog.partitions_of(total):
            target = element_of(pi_from_partition(outer))
            for asize in range(1, total):
                for mu in catalog.partitions_of(asize):
                    left = element_of(pi_from_partition(mu))
                    for nu in catalog.partitions_of(total - asize):
                        cases += 1
                        got = pairing(
                            product(left, element_of(pi_from_partition(nu))), target
                        )
                        if got != oracles.skew_lattice_count(outer, mu, nu):
                            failures += 1
    out.append(PropertyResult("classical-coefficients", cases, failures))

    cases = 0
    failures = 0
    for n in range(1, min(ctx.max_n + 2, 6) + 1):
        for parts in catalog.partitions_of(n):
            cases += 1
            words = lattice_words(parts)
            if len(words) != oracles.syt_count(parts):
                failures += 1
                continue
            for w in words:
                t = tableau_from_lattice(w)
                if not t.is_standard() or t.shape() != weight(w):
                    failures += 1
                    break
                if complement(complement(w)) != w or mirror(mirror(w)) != w:
                    failures += 1
                    break
    out.append(PropertyResult("lattice-word-tableaux", cases, failures))

    cases = 0
    failures = 0
    for n in range(1, min(ctx.max_n, 4) + 1):
        all_perms = [Permutation(tuple(w)) for w in permutations(range(1, n + 1))]
        for d in ctx.special(n):
            flipped = tilde(d)
            for sigma in all_perms:
                cases += 1
                if fits_into(sigma.word, d) != fits_into(
                    conjugate_by_reversal(sigma).word, flipped
                ):
                    failures += 1
    out.append(PropertyResult("tilde-duality", cases, failures))

    cases = 0
    failures = 0
    for n in range(1, min(ctx.max_n, 3) + 1):
        words = [()]
        for _ in range(n):
            words = [w + (letter,) for w in words for letter in range(1, n + 1)]
        for d in ctx.special(n):
            for w in words:
                cases += 1
                direct, standardized = fits_standardization_check(w, d)
                if direct != standardized:
                    failures += 1
    out.append(PropertyResult("fits-standardization", cases, failures))
    return out


SUITES = {
    "hopf": suite_hopf,
    "selfdual": suite_selfdual,
    "internal": suite_internal,
    "lmap": suite_lmap,
    "qsym": suite_qsym,
    "lr": suite_lr,
}

_context_cache: dict[tuple[int, int], CheckContext] = {}


def get_context(max_n: int, seed: int) -> CheckContext:
    key = (max_n, seed)
    if key not in _context_cache:
        _context_cache[key] = CheckContext(max_n=max_n, seed=seed)
    return _context_cache[key]


def run_suite(name: str, max_n: int, seed: int) -> list[PropertyResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
    return SUITES[name](get_context(max_n, seed))


def format_report(name: str, max_n: int, seed: int, results: list[PropertyResult]) -> str:
    lines = [f"suite {name}: max_n={max_n} seed={seed}"]
    for r in results:
        tag = "info" if r.informational else ("ok" if r.failures == 0 else "FAIL")
        line = f"  {r.name:<28} cases={r.cases:<8} failures={r.failures:<6} [{tag}]"
        if r.note:
            line += f" {r.note}"
        lines.append(line)
    verdict = "PASS" if all(r.ok for r in results) else "FAIL"
    lines.append(f"suite {name}: {verdict}")
    return "\n".join(lines)
