"""Cyclotomic cosets, cyclic codes from defining sets, and shift-orbit analysis.

A cyclic code of length n over GF(q), gcd(n, q) = 1, is pinned down by its
defining set Z (a union of q-cyclotomic cosets mod n): the generator is
g(x) = prod_{j in Z} (x - alpha^j) for a primitive n-th root of unity alpha
living in an extension field.  Codewords fall into orbits under the cyclic
shift; the two orbit predicates below decide, by pure residue arithmetic,
whether every orbit outside the constant words (resp. outside zero) is full.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DoesNotContainAllOnes,
    EnumerationTooLarge,
    GcdConditionViolated,
    NotCoprime,
    NotCosetClosed,
    ZeroCode,
)
from .galois import (
    FiniteField,
    PolyExtField,
    Polynomial,
    embed_subfield,
    field_from_order,
    make_field,
)
from .intmath import multiplicative_order

ENUMERATION_CAP = 1 << 22

# Largest table-backed extension; larger root fields fall back to the
# polynomial-quotient representation.
TABLE_EXTENSION_CAP = 1 << 18


@dataclass(frozen=True)
class CyclotomicCoset:
    n: int
    q: int
    members: tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.members[0]

    def __len__(self):
        return len(self.members)


def cyclotomic_cosets(n: int, q: int) -> list[CyclotomicCoset]:
    """All distinct q-cyclotomic cosets mod n, sorted by representative."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    seen = [False] * n
    out = []
    for t in range(n):
        if seen[t]:
            continue
        members = []
        j = t
        while not seen[j]:
            seen[j] = True
            members.append(j)
            j = j * q % n
        out.append(CyclotomicCoset(n, q, tuple(sorted(members))))
    return out


class RootContext:
    """A primitive n-th root of unity alpha for GF(q), with maps both ways.

    Depending on the extension degree d = ord_n(q), alpha lives in the base
    field itself (d = 1), in a table-backed GF(p^(m*d)), or in a
    polynomial-quotient extension when the table would exceed the cap.
    """

    def __init__(self, field: FiniteField, n: int):
        if math.gcd(n, field.order) != 1:
            raise NotCoprime(f"gcd({n}, {field.order}) != 1")
        self.base = field
        self.n = n
        d = multiplicative_order(field.order % n, n) if n > 1 else 1
        self.extension_degree = d
        if d == 1:
            self.ext = field
            alpha = field.nth_root_of_unity(n)
            self._embed_table = None
            self._back = None
        elif field.p ** (field.m * d) <= TABLE_EXTENSION_CAP:
            self.ext = make_field(field.p, field.m * d, cap=TABLE_EXTENSION_CAP)
            self._embed_table = embed_subfield(field, self.ext)
            self._back = {e: c for c, e in enumerate(self._embed_table)}
            alpha = self.ext.nth_root_of_unity(n)
        else:
            self.ext = PolyExtField(field, d)
            alpha = self.ext.element_of_order(n)
            self._embed_table = None
            self._back = None
        self.alpha = alpha
        pows = [self.ext.one]
        for _ in range(n - 1):
            pows.append(self.ext.mul(pows[-1], alpha))
        self.alpha_pows = pows

    def embed(self, c: int):
        if self.ext is self.base:
            return c
        if self._embed_table is not None:
            return self._embed_table[c]
        return self.ext.embed(c)

    def to_base(self, e) -> int | None:
        if self.ext is self.base:
            return e
        if self._back is not None:
            return self._back.get(e)
        return self.ext.to_base(e)

    def alpha_pow(self, j: int):
        return self.alpha_pows[j % self.n]

    def minimal_polynomial(self, members: tuple[int, ...]) -> Polynomial:
        """prod_{s in members} (x - alpha^s), mapped back to the base field."""
        E = self.ext
        coeffs = [E.one]
        for s in members:
            r = self.alpha_pow(s)
            nxt = [E.zero] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] = E.add(nxt[i + 1], c)
                nxt[i] = E.sub(nxt[i], E.mul(c, r))
            coeffs = nxt
        base_coeffs = []
        for c in coeffs:
            b = self.to_base(c)
            if b is None:
                raise NotCosetClosed(
                    f"{sorted(members)} is not closed under multiplication by q"
                )
            base_coeffs.append(b)
        return Polynomial(self.base, base_coeffs)

    def evaluate(self, poly: Polynomial, j: int):
        """poly(alpha^j) in the extension field."""
        E = self.ext
        acc = E.zero
        a = self.alpha_pow(j)
        for c in reversed(poly.coeffs):
            acc = E.add(E.mul(acc, a), self.embed(c))
        return acc


@lru_cache(maxsize=None)
def _root_context(p: int, m: int, n: int) -> RootContext:
    return RootContext(make_field(p, m), n)


def root_context(field: FiniteField, n: int) -> RootContext:
    return _root_context(field.p, field.m, n)


@lru_cache(maxsize=None)
def _factor_table(p: int, m: int, n: int) -> dict[int, tuple[CyclotomicCoset, Polynomial]]:
    field = make_field(p, m)
    ctx = root_context(field, n)
    out = {}
    product = Polynomial.one(field)
    for coset in cyclotomic_cosets(n, field.order):
        mj = ctx.minimal_polynomial(coset.members)
        out[coset.representative] = (coset, mj)
        product = product * mj
    if product != Polynomial.x_pow_n_minus_one(field, n):
        raise AssertionError("coset factors do not multiply back to x^n - 1")
    return out


def factor_x_pow_n_minus_one(
    field: FiniteField, n: int
) -> list[tuple[CyclotomicCoset, Polynomial]]:
    """Irreducible factors of x^n - 1 over GF(q), one per cyclotomic coset."""
    table = _factor_table(field.p, field.m, n)
    return [table[rep] for rep in sorted(table)]


@dataclass
class CyclicCode:
    """[n, k] cyclic code over GF(q) with defining set Z."""

    field: FiniteField
    n: int
    defining_set: tuple[int, ...]
    generator: Polynomial
    check: Polynomial

    @property
    def dimension(self) -> int:
        return self.n - len(self.defining_set)

    @property
    def size(self) -> int:
        return self.field.order**self.dimension

    def context(self) -> RootContext:
        return root_context(self.field, self.n)

    def export_dict(self) -> dict:
        key = self.field.export_key()
        return {
            "n": self.n,
            "p": key["p"],
            "m": key["m"],
            "modulus": key["modulus"],
            "defining_set": list(self.defining_set),
            "dimension": self.dimension,
            "generator": list(self.generator.coeffs),
        }

    def __repr__(self):
        return f"CyclicCode([{self.n}, {self.dimension}] over GF({self.field.order}))"


def build_code(n: int, field: FiniteField, defining_set) -> CyclicCode:
    """Cyclic code of length n over `field` with the given defining set."""
    if math.gcd(n, field.order) != 1:
        raise NotCoprime(f"gcd({n}, {field.order}) != 1")
    zset = set()
    for j in defining_set:
        j = int(j)
        if not 0 <= j < n:
            raise NotCosetClosed(f"residue {j} outside 0..{n - 1}")
        zset.add(j)
    if {j * field.order % n for j in zset} != zset:
        raise NotCosetClosed(f"{sorted(zset)} is not a union of cosets mod {n}")
    table = _factor_table(field.p, field.m, n)
    g = Polynomial.one(field)
    remaining = set(zset)
    while remaining:
        j = min(remaining)
        coset, mj = next(
            (c, m) for c, m in table.values() if j in c.members
        )
        g = g * mj
        remaining -= set(coset.members)
    xn1 = Polynomial.x_pow_n_minus_one(field, n)
    h, rem = divmod(xn1, g)
    if not rem.is_zero():
        raise AssertionError("generator does not divide x^n - 1")
    return CyclicCode(field, n, tuple(sorted(zset)), g, h)


def unit_coset_code(q: int, m: int) -> CyclicCode:
    """The [n, n-m, 3] cyclic code of length n = (q^m - 1)/(q - 1) whose
    defining set is the q-cyclotomic coset of 1.  Requires gcd(m, q-1) = 1."""
    field = field_from_order(q)
    if math.gcd(m, q - 1) != 1:
        raise GcdConditionViolated(f"gcd({m}, {q - 1}) != 1")
    n = (q**m - 1) // (q - 1)
    coset = sorted({pow(q, i, n) for i in range(m)}) if n > 1 else [0]
    return build_code(n, field, coset)


def has_full_orbits_outside_constants(code: CyclicCode) -> bool:
    """True iff every codeword outside the constant-word subcode has a full
    shift orbit of size n.

    Requires the constants to be codewords (0 not in Z).  Equivalent residue
    test: every j outside Z with 1 <= j < n is coprime to n, i.e. every root
    of h(x)/(x-1) is a primitive n-th root of unity.
    """
    zset = set(code.defining_set)
    if 0 in zset:
        raise DoesNotContainAllOnes("defining set contains 0")
    return all(math.gcd(j, code.n) == 1 for j in range(1, code.n) if j not in zset)


def has_full_orbits_nonzero(code: CyclicCode) -> bool:
    """True iff every nonzero codeword has a full shift orbit of size n,
    i.e. every root of h(x) is a primitive n-th root of unity."""
    zset = set(code.defining_set)
    if code.dimension == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    if 0 not in zset and code.n > 1:
        return False
    return all(math.gcd(j, code.n) == 1 for j in range(code.n) if j not in zset)


def small_period_witness(code: CyclicCode) -> tuple[int, ...] | None:
    """A codeword outside the constants whose orbit is provably short.

    When some residue j outside Z has gcd(j, n) > 1, dividing x^n - 1 by
    (x - 1) and the minimal polynomial of alpha^j leaves a codeword killed
    by x^r - 1 for r = n / gcd(j, n) < n.  Returns None when no such
    residue exists.  Requires 0 not in Z.
    """
    zset = set(code.defining_set)
    if 0 in zset:
        raise DoesNotContainAllOnes("defining set contains 0")
    bad = [j for j in range(1, code.n) if j not in zset and math.gcd(j, code.n) > 1]
    if not bad:
        return None
    table = _factor_table(code.field.p, code.field.m, code.n)
    j = bad[0]
    coset, mj = next((c, m) for c, m in table.values() if j in c.members)
    xn1 = Polynomial.x_pow_n_minus_one(code.field, code.n)
    one_factor = table[0][1]
    w = xn1 // (one_factor * mj)
    coeffs = list(w.coeffs) + [0] * (code.n - len(w.coeffs))
    return tuple(coeffs)


def codeword_matrix(code: CyclicCode, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """All q^k codewords as an array of shape (q^k, n), message order."""
    field, n, k = code.field, code.n, code.dimension
    total = field.order**k
    if total > cap:
        raise EnumerationTooLarge(f"{total} codewords exceed the cap {cap}")
    mat = np.zeros((1, n), dtype=np.uint32)
    g = np.zeros(n, dtype=np.uint32)
    g[: len(code.generator.coeffs)] = code.generator.coeffs
    for i in range(k):
        row = np.roll(g, i)
        scaled = np.stack([field.scale_array(row, c) for c in range(field.order)])
        mat = field.add_arrays(mat[:, None, :], scaled[None, :, :]).reshape(-1, n)
    return mat


@dataclass(frozen=True)
class EquivalenceClass:
    """A shift orbit: its lexicographically least rotation and its size."""

    representative: tuple[int, ...]
    size: int

    @property
    def period(self) -> int:
        return self.size


def _least_rotation_partition(mat: np.ndarray, q: int):
    """Unique least rotations of the rows with multiplicities.

    Every row's full orbit is present in `mat` (the code is cyclic), so the
    multiplicity of a least rotation equals its orbit size.
    """
    n = mat.shape[1]
    if n == 1:
        reps, counts = np.unique(mat, axis=0, return_counts=True)
        return reps, counts
    if n * max(q - 1, 1).bit_length() <= 62:
        qq = np.uint64(q)
        best = None
        for t in range(n):
            rolled = np.roll(mat, -t, axis=1)
            key = np.zeros(mat.shape[0], dtype=np.uint64)
            for i in range(n):
                key = key * qq + rolled[:, i]
            best = key if best is None else np.minimum(best, key)
        keys, counts = np.unique(best, return_counts=True)
        reps = np.empty((len(keys), n), dtype=np.uint32)
        rem = keys.copy()
        for i in range(n - 1, -1, -1):
            reps[:, i] = (rem % qq).astype(np.uint32)
            rem //= qq
        return reps, counts
    best = mat.copy()
    for t in range(1, n):
        rolled = np.roll(mat, -t, axis=1)
        less = np.zeros(mat.shape[0], dtype=bool)
        decided = np.zeros(mat.shape[0], dtype=bool)
        for i in range(n):
            lt = rolled[:, i] < best[:, i]
            gt = rolled[:, i] > best[:, i]
            less |= lt & ~decided
            decided |= lt | gt
        if less.any():
            best[less] = rolled[less]
    return np.unique(best, axis=0, return_counts=True)


def class_partition(
    code: CyclicCode, exclude: str = "none", cap: int = ENUMERATION_CAP
):
    """Shift-orbit partition of the codewords as (representatives, sizes).

    exclude: "none", "zero" (drop the zero word) or "constants" (drop the
    constant-word subcode).  Representatives are sorted lexicographically.
    """
    if exclude not in ("none", "zero", "constants"):
        raise ValueError(f"unknown exclude mode {exclude!r}")
    mat = codeword_matrix(code, cap)
    reps, sizes = _least_rotation_partition(mat, code.field.order)
    if exclude == "zero":
        keep = reps.any(axis=1)
        reps, sizes = reps[keep], sizes[keep]
    elif exclude == "constants":
        keep = (reps != reps[:, :1]).any(axis=1)
        reps, sizes = reps[keep], sizes[keep]
    return reps, sizes


def enumerate_classes(
    code: CyclicCode, exclude: str = "none", cap: int = ENUMERATION_CAP
) -> list[EquivalenceClass]:
    reps, sizes = class_partition(code, exclude, cap)
    return [
        EquivalenceClass(tuple(int(s) for s in row), int(c))
        for row, c in zip(reps, sizes)
    ]


def min_distance_exhaustive(code: CyclicCode, cap: int = ENUMERATION_CAP) -> int:
    """Exact minimum Hamming weight over the nonzero codewords."""
    if code.dimension == 0:
        raise ZeroCode("the zero code has no minimum distance")
    mat = codeword_matrix(code, cap)
    weights = np.count_nonzero(mat, axis=1)
    return int(weights[weights > 0].min())
