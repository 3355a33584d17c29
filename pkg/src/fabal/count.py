"""Enumeration of faithfully balanced modules and the closed-form counts."""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .approx import gen1_category
from .errors import ResourceLimitError
from .fbcheck import is_minimal_fb
from .modcat import (
    BasicModule, Interval, NakayamaPresentation, ext_dim, indecomposables, linear,
    is_proper_quotient, is_proper_submodule,
)

DEFAULT_MAX_SUBSETS = 1 << 27
CHUNK = 1 << 20


def max_subsets() -> int:
    env = os.environ.get("FABAL_MAX_SUBSETS")
    return int(env) if env else DEFAULT_MAX_SUBSETS


# -- bitmask enumeration -----------------------------------------------------

class FbFilter:
    """Vectorised fb test over subsets of the non-projective-injective intervals.

    Every candidate contains all projective-injectives; bit ``b`` of a mask
    selects ``others[b]``.  A mask passes when every arrow condition holds
    (some summand has top ``v+1`` or socle ``v``) and every selected summand is
    a proper submodule or proper quotient of another summand.
    """

    def __init__(self, pres: NakayamaPresentation):
        self.pres = pres
        self.pis = pres.projective_injectives()
        pis = set(self.pis)
        self.others = [a for a in indecomposables(pres) if a not in pis]
        bit = {a: b for b, a in enumerate(self.others)}

        def mask_of(cands):
            if any(c in pis for c in cands):
                return None  # always satisfied
            m = 0
            for c in cands:
                m |= 1 << bit[c]
            return m

        ind = indecomposables(pres)
        self.global_masks = []
        for v in range(1, pres.n):
            self.global_masks.append(
                mask_of([a for a in ind if a.i == v + 1 or a.j == v]))
        self.bit_masks = []
        for a in self.others:
            self.bit_masks.append(mask_of(
                [b for b in ind if is_proper_submodule(a, b) or is_proper_quotient(a, b)]))

    @property
    def nbits(self) -> int:
        return len(self.others)

    def check_cap(self, cap: int | None = None) -> None:
        cap = max_subsets() if cap is None else cap
        if (1 << self.nbits) > cap:
            raise ResourceLimitError(
                f"{1 << self.nbits} subsets exceed the enumeration cap {cap} "
                "(set FABAL_MAX_SUBSETS to raise it)")

    def chunks(self, cap: int | None = None) -> Iterator[np.ndarray]:
        """Yield arrays of passing masks in increasing order."""
        self.check_cap(cap)
        total = 1 << self.nbits
        for start in range(0, total, CHUNK):
            xs = np.arange(start, min(total, start + CHUNK), dtype=np.uint64)
            ok = np.ones(len(xs), dtype=bool)
            for m in self.global_masks:
                if m is not None:
                    ok &= (xs & np.uint64(m)) != 0
            for b, m in enumerate(self.bit_masks):
                if m is None:
                    continue
                unused = ((xs >> np.uint64(b)) & np.uint64(1)) == 0
                ok &= unused | ((xs & np.uint64(m)) != 0)
            yield xs[ok]

    def module(self, mask: int) -> BasicModule:
        chosen = [a for b, a in enumerate(self.others) if mask >> b & 1]
        return BasicModule(self.pres.n, tuple(self.pis + chosen), self.pres.valleys)

    def row_masks(self) -> list[tuple[int, int]]:
        """Per row ``r``: (mask of others with top r, number of proj-injs with top r)."""
        out = []
        for r in range(1, self.pres.n + 1):
            m = sum(1 << b for b, a in enumerate(self.others) if a.i == r)
            out.append((m, sum(1 for a in self.pis if a.i == r)))
        return out


def _as_pres(pres_or_n) -> NakayamaPresentation:
    if isinstance(pres_or_n, int):
        return linear(pres_or_n)
    return pres_or_n


def fb_enumerate(pres, cap: int | None = None) -> Iterator[BasicModule]:
    """All basic fb modules over ``pres`` (or ``Lambda_n`` for an int)."""
    flt = FbFilter(_as_pres(pres))
    for arr in flt.chunks(cap):
        for mask in arr.tolist():
            yield flt.module(mask)


def fb_count(pres, cap: int | None = None) -> int:
    flt = FbFilter(_as_pres(pres))
    return sum(len(arr) for arr in flt.chunks(cap))


def size_histogram(pres, cap: int | None = None) -> dict[int, int]:
    """Enumerated ``{summand count: number of fb modules}``."""
    flt = FbFilter(_as_pres(pres))
    hist: Counter = Counter()
    for arr in flt.chunks(cap):
        sizes, counts = np.unique(np.bitwise_count(arr), return_counts=True)
        for s, c in zip(sizes.tolist(), counts.tolist()):
            hist[s + len(flt.pis)] += c
    return dict(sorted(hist.items()))


def row_histogram(pres, cap: int | None = None) -> dict[tuple[int, ...], int]:
    """Enumerated ``{(t_1, ..., t_n): count}`` by summands per row."""
    flt = FbFilter(_as_pres(pres))
    rows = flt.row_masks()
    hist: Counter = Counter()
    for arr in flt.chunks(cap):
        if not len(arr):
            continue
        cols = [np.bitwise_count(arr & np.uint64(m)).astype(np.int64) + k for m, k in rows]
        keys, counts = np.unique(np.stack(cols, axis=1), axis=0, return_counts=True)
        for key, c in zip(keys.tolist(), counts.tolist()):
            hist[tuple(key)] += c
    return dict(sorted(hist.items()))


# -- generating functions ----------------------------------------------------

@dataclass(frozen=True)
class SizePolynomial:
    n: int
    coeffs: dict[int, int]

    def total(self) -> int:
        return sum(self.coeffs.values())


@dataclass(frozen=True)
class MultiCount:
    n: int
    coeffs: dict[tuple[int, ...], int]

    def marginal(self) -> dict[int, int]:
        out: Counter = Counter()
        for key, c in self.coeffs.items():
            out[sum(key)] += c
        return dict(sorted(out.items()))


def _polymul(a: dict, b: dict, add) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = add(ka, kb)
            out[k] = out.get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def size_polynomial(n: int) -> SizePolynomial:
    """Coefficients of ``prod_{i=1}^n ((1+x)^i - 1)``."""
    poly = {0: 1}
    for i in range(1, n + 1):
        factor = {s: comb(i, s) for s in range(1, i + 1)}
        poly = _polymul(poly, factor, lambda a, b: a + b)
    return SizePolynomial(n, dict(sorted(poly.items())))


MULTI_COUNT_MAX_N = 8


def multi_count(n: int) -> MultiCount:
    """Coefficients of ``prod_r (prod_{s<=r} (1 + x_s) - 1)`` by exponent vector."""
    if n > MULTI_COUNT_MAX_N:
        raise ResourceLimitError(f"multi_count is capped at n <= {MULTI_COUNT_MAX_N}")

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    zero = (0,) * n
    poly = {zero: 1}
    prefix = {zero: 1}  # prod_{s<=r} (1 + x_s)
    for r in range(n):
        unit = tuple(1 if k == r else 0 for k in range(n))
        prefix = _polymul(prefix, {zero: 1, unit: 1}, add)
        factor = {k: c for k, c in prefix.items() if k != zero}
        poly = _polymul(poly, factor, add)
    return MultiCount(n, dict(sorted(poly.items())))


def q_count(n: int, q: int) -> int:
    """Faithfully balanced modules with every multiplicity at most ``q``."""
    if n < 0 or q < 1:
        raise ValueError("need n >= 0 and q >= 1")
    out = 1
    for i in range(1, n + 1):
        out *= (1 + q) ** i - 1
    return out


def q2_factorial(n: int) -> int:
    """``[n]_2! = prod_{i=1}^n (2^i - 1)``, with ``[-1]_2! = 0``."""
    if n < 0:
        return 0
    return q_count(n, 1)


# -- restricted and Nakayama counts ------------------------------------------

def _enumerated_restricted(n: int) -> tuple[int, int]:
    s1, sn = Interval(1, 1), Interval(n, n)
    fb1 = fb1n = 0
    for m in fb_enumerate(n):
        if s1 in m.summand_set:
            fb1 += 1
            fb1n += sn in m.summand_set
    return fb1, fb1n


def restricted_counts(n: int) -> tuple[int, int]:
    """``(#fb with S[1] a summand, #fb with S[1] and S[n] summands)`` over Lambda_n.

    The second closed form has a fractional term for ``n <= 2``; those values
    come from enumeration.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return _enumerated_restricted(n)
    fb1 = 2 ** (n - 1) * q2_factorial(n - 1)
    fb1n = 2 ** (n - 2) * q2_factorial(n - 1) + 2 ** (n - 3) * q2_factorial(n - 2)
    return fb1, fb1n


def segment_lengths(pres: NakayamaPresentation) -> list[int]:
    """Vertex counts of the pieces ``[1, b_1], [b_1, b_2], ..., [b_t, n]``."""
    cuts = [1, *pres.valleys, pres.n]
    return [b - a + 1 for a, b in zip(cuts, cuts[1:])]


def nakayama_count(pres: NakayamaPresentation) -> int:
    """Number of basic fb modules over a quadratic Nakayama presentation.

    The two end pieces contribute modules containing the simple at the valley
    end, the middle pieces modules containing both end simples, and each
    valley doubles the count.
    """
    if pres.is_linear:
        return q2_factorial(pres.n)
    segs = segment_lengths(pres)
    out = 2 ** len(pres.valleys)
    out *= restricted_counts(segs[0])[0] * restricted_counts(segs[-1])[0]
    for length in segs[1:-1]:
        out *= restricted_counts(length)[1]
    return out


# -- tilting, gen_1 categories, minimal fb -----------------------------------

def is_tilting(m: BasicModule) -> bool:
    """``|M| = n`` and ``Ext^1(M, M) = 0`` over the hereditary ``Lambda_n``."""
    if not m.pres.is_linear:
        raise ValueError("tilting test implemented for Lambda_n only")
    if len(m) != m.n:
        return False
    return not any(ext_dim(m.pres, a, b) for a in m.summands for b in m.summands)


def fb_of_size(n: int, size: int) -> Iterator[BasicModule]:
    flt = FbFilter(linear(n))
    want = size - len(flt.pis)
    for arr in flt.chunks():
        for mask in arr[np.bitwise_count(arr) == want].tolist():
            yield flt.module(mask)


def tilting_modules(n: int) -> list[BasicModule]:
    return [m for m in fb_of_size(n, n) if is_tilting(m)]


def tilting_count(n: int) -> int:
    return len(tilting_modules(n))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def gen1_category_count(n: int) -> int:
    """Distinct ``gen_1`` categories of basic fb modules over ``Lambda_n``."""
    return len({gen1_category(m) for m in fb_enumerate(n)})


def minimal_fb_count(n: int) -> int:
    return sum(1 for m in fb_enumerate(n) if is_minimal_fb(m))

