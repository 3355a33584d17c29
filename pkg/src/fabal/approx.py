"""Minimal add(M)-approximations over Nakayama algebras and the categories
``gen_1(M)`` / ``cogen^1(M)`` they determine."""
from __future__ import annotations

from dataclasses import dataclass

from .modcat import (
    BasicModule, Interval, NakayamaPresentation, cogen_closure, dual, dual_interval,
    hom_dim, indecomposables,
)


@dataclass(frozen=True)
class ApproxProfile:
    """Minimal left approximation ``X -> (+) X(s_i, t_i)`` and its cokernel.

    ``X(s, t)`` is the target of a map out of ``X`` with kernel of length ``s``
    and cokernel of length ``t``, i.e. the interval ``(X.i - t, X.j - s)``.
    """

    source: Interval
    minima: tuple[tuple[int, int], ...]
    targets: tuple[Interval, ...]
    cokernels: tuple[Interval, ...]

    def to_json(self) -> dict:
        return {
            "source": list(self.source),
            "minima": [list(p) for p in self.minima],
            "targets": [list(t) for t in self.targets],
            "cokernels": [list(c) for c in self.cokernels],
        }


def target(x: Interval, s: int, t: int) -> Interval:
    return Interval(x.i - t, x.j - s)


def kernel_cokernel_pairs(x: Interval, m: BasicModule) -> set[tuple[int, int]]:
    """The set ``M_X`` of pairs ``(s, t)`` with ``X(s, t)`` a summand of ``M``."""
    pres = m.pres
    return {(x.j - y.j, x.i - y.i) for y in m.summands if hom_dim(pres, x, y)}


def left_approx_profile(x: Interval, m: BasicModule) -> ApproxProfile:
    x = Interval(*x)
    pairs = kernel_cokernel_pairs(x, m)
    minima = sorted(
        (p for p in pairs
         if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pairs)),
        key=lambda p: -p[0],
    )
    targets = tuple(target(x, s, t) for s, t in minima)
    cokernels: list[Interval] = []
    if minima:
        s1, t1 = minima[0]
        if t1 > 0:
            cokernels.append(Interval(x.i - t1, x.i - 1))
        for (s_prev, _), (_, t) in zip(minima, minima[1:]):
            cokernels.append(target(x, s_prev, t))
    return ApproxProfile(x, tuple(minima), targets, tuple(cokernels))


def right_approx_profile(x: Interval, m: BasicModule) -> ApproxProfile:
    """Minimal right approximation, computed as the mirror of the left one over
    the opposite presentation.  Targets are the sources of the maps into ``X``
    and ``cokernels`` hold the summands of the kernel."""
    n = m.n
    prof = left_approx_profile(dual_interval(n, Interval(*x)), dual(m))
    return ApproxProfile(
        Interval(*x),
        prof.minima,
        tuple(dual_interval(n, a) for a in prof.targets),
        tuple(dual_interval(n, a) for a in prof.cokernels),
    )


def in_cogen1(x: Interval, m: BasicModule) -> bool:
    x = Interval(*x)
    closure = cogen_closure(m)
    if x not in closure:
        return False
    prof = left_approx_profile(x, m)
    if not prof.minima:
        return False
    return all(c in closure for c in prof.cokernels)


def in_gen1(x: Interval, m: BasicModule) -> bool:
    return in_cogen1(dual_interval(m.n, Interval(*x)), dual(m))


def cogen1_category(m: BasicModule) -> frozenset[Interval]:
    return frozenset(x for x in indecomposables(m.pres) if in_cogen1(x, m))


def gen1_category(m: BasicModule) -> frozenset[Interval]:
    return frozenset(x for x in indecomposables(m.pres) if in_gen1(x, m))


def hom_order(pres: NakayamaPresentation, xs) -> list[Interval]:
    """Sort so that no nonzero map goes from a later interval to an earlier one."""
    order = sorted((Interval(*x) for x in xs), key=lambda a: (-a.j, -a.i))
    for pos, a in enumerate(order):
        for b in order[pos + 1:]:
            if hom_dim(pres, b, a):
                raise AssertionError(f"hom order violated: Hom({b}, {a}) != 0")
    return order


def gen1_critical(m: BasicModule) -> BasicModule:
    """The unique gen_1-critical module with the same gen_1-category as ``M``.

    Walk the summands in hom order and keep one exactly when it is not already
    in ``gen_1`` of the summands kept so far.
    """
    kept: list[Interval] = []
    for x in hom_order(m.pres, m.summands):
        if not in_gen1(x, m.with_summands(kept)):
            kept.append(x)
    return m.with_summands(kept)


def cogen1_critical(m: BasicModule) -> BasicModule:
    return dual(gen1_critical(dual(m)))
