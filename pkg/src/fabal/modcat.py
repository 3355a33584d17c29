"""Combinatorial model of the module category of ``Lambda_n`` and of quadratic
Nakayama quotients of the linearly oriented ``A_n`` path algebra.

Orientation is ``1 -> 2 -> ... -> n``.  An indecomposable module is an interval
``(i, j)`` with top ``S[i]`` and socle ``S[j]``; its composition factors are the
simples ``S[i], ..., S[j]``.  All modules handled here are basic, so a module is
a set of intervals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class Interval(NamedTuple):
    """Indecomposable ``M_ij``: top index ``i``, socle index ``j``."""

    i: int
    j: int

    @property
    def length(self) -> int:
        return self.j - self.i + 1

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class Leaf:
    """Virtual pair ``(k, k-1)`` sitting below the diagonal of the staircase."""

    k: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.k, self.k - 1)


@dataclass(frozen=True)
class NakayamaPresentation:
    """``kA_n`` modulo the length-two relations ``(b-1) -> b -> (b+1)``, one
    for each valley ``b``.  No valleys means ``Lambda_n`` itself."""

    n: int
    valleys: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        vs = tuple(sorted(set(self.valleys)))
        for b in vs:
            if not 2 <= b <= self.n - 1:
                raise ValueError(f"valley {b} outside 2..{self.n - 1}")
        object.__setattr__(self, "valleys", vs)

    @property
    def is_linear(self) -> bool:
        return not self.valleys

    def allows(self, a: Interval | tuple[int, int]) -> bool:
        i, j = a
        if not 1 <= i <= j <= self.n:
            return False
        return not any(i + 1 <= b <= j - 1 for b in self.valleys)

    def projective(self, i: int) -> Interval:
        return Interval(i, min([b for b in self.valleys if b >= i + 1] + [self.n]))

    def injective(self, j: int) -> Interval:
        return Interval(max([b for b in self.valleys if b <= j - 1] + [1]), j)

    def projective_injectives(self) -> list[Interval]:
        out = []
        for i in range(1, self.n + 1):
            p = self.projective(i)
            if self.injective(p.j) == p:
                out.append(p)
        return out

    def opposite(self) -> "NakayamaPresentation":
        return NakayamaPresentation(self.n, tuple(self.n + 1 - b for b in self.valleys))


def linear(n: int) -> NakayamaPresentation:
    return NakayamaPresentation(n)


@dataclass(frozen=True)
class BasicModule:
    """A basic module: a duplicate-free set of intervals over a presentation.

    Summands are stored sorted lexicographically by ``(i, j)``.
    """

    n: int
    summands: tuple[Interval, ...] = ()
    valleys: tuple[int, ...] = field(default=())

    def __post_init__(self):
        pres = NakayamaPresentation(self.n, self.valleys)
        object.__setattr__(self, "valleys", pres.valleys)
        canon = tuple(sorted({Interval(*a) for a in self.summands}))
        for a in canon:
            if not pres.allows(a):
                raise ValueError(f"interval {tuple(a)} not allowed for {pres}")
        object.__setattr__(self, "summands", canon)

    @classmethod
    def of(cls, n: int, summands: Iterable, valleys: Iterable[int] = ()) -> "BasicModule":
        return cls(n, tuple(Interval(*a) for a in summands), tuple(valleys))

    @property
    def pres(self) -> NakayamaPresentation:
        return NakayamaPresentation(self.n, self.valleys)

    @property
    def summand_set(self) -> frozenset[Interval]:
        return frozenset(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __contains__(self, a) -> bool:
        return Interval(*a) in self.summand_set

    def with_summands(self, summands: Iterable) -> "BasicModule":
        return BasicModule(self.n, tuple(Interval(*a) for a in summands), self.valleys)

    def add(self, *xs) -> "BasicModule":
        return self.with_summands(list(self.summands) + [Interval(*x) for x in xs])

    def remove(self, *xs) -> "BasicModule":
        drop = {Interval(*x) for x in xs}
        return self.with_summands(a for a in self.summands if a not in drop)

    def row_counts(self) -> tuple[int, ...]:
        """Number of summands with top ``S[r]`` for ``r = 1..n``."""
        counts = [0] * self.n
        for a in self.summands:
            counts[a.i - 1] += 1
        return tuple(counts)

    def __str__(self) -> str:
        return "{" + ",".join(str(a) for a in self.summands) + "}"


def lambda_module(n: int) -> BasicModule:
    """The regular module ``Lambda_n``: all indecomposable projectives."""
    return BasicModule.of(n, [(i, n) for i in range(1, n + 1)])


def dual_lambda_module(n: int) -> BasicModule:
    """``D Lambda_n``: all indecomposable injectives."""
    return BasicModule.of(n, [(1, j) for j in range(1, n + 1)])


# -- indecomposables, Hom and Ext -------------------------------------------

def indecomposables(pres: NakayamaPresentation) -> list[Interval]:
    return [Interval(i, j) for i in range(1, pres.n + 1)
            for j in range(i, pres.n + 1) if pres.allows((i, j))]


def hom_dim(pres: NakayamaPresentation, a: Interval, b: Interval) -> int:
    """``dim Hom(A, B)``: a nonzero map is a quotient of ``A`` followed by an
    inclusion into ``B``, so its image is ``(A.i, B.j)``."""
    return int(b.i <= a.i <= b.j <= a.j)


def ext_dim(pres: NakayamaPresentation, a: Interval, b: Interval) -> int:
    """``dim Ext^1(A, B)`` from the projective presentation of ``A``.

    With ``P = P_{A.i}`` the projective cover and ``K = (A.j+1, P.j)`` its
    kernel, ``Ext^1(A, B)`` is the cokernel of restriction
    ``Hom(P, B) -> Hom(K, B)``.  Both spaces have dimension at most one.
    """
    p = pres.projective(a.i)
    if a.j >= p.j:
        return 0
    k = Interval(a.j + 1, p.j)
    if not hom_dim(pres, k, b):
        return 0
    # a map P -> B restricts nonzero to K iff K is not inside its kernel
    restricts = hom_dim(pres, p, b) and b.j >= k.i
    return 0 if restricts else 1


# -- sub/quotient predicates -------------------------------------------------

def is_submodule(a: Interval, b: Interval) -> bool:
    return a.j == b.j and a.i >= b.i


def is_quotient(a: Interval, b: Interval) -> bool:
    return a.i == b.i and a.j <= b.j


def is_subquotient(a: Interval, b: Interval) -> bool:
    return b.i <= a.i and a.j <= b.j


def is_proper_submodule(a: Interval, b: Interval) -> bool:
    return a != b and is_submodule(a, b)


def is_proper_quotient(a: Interval, b: Interval) -> bool:
    return a != b and is_quotient(a, b)


def is_proper_subquotient(a: Interval, b: Interval) -> bool:
    return a != b and is_subquotient(a, b)


# -- closures ----------------------------------------------------------------

def gen_closure(m: BasicModule) -> frozenset[Interval]:
    """Indecomposables in ``gen(M)``: quotients of summands."""
    return frozenset(Interval(a.i, k) for a in m.summands for k in range(a.i, a.j + 1))


def cogen_closure(m: BasicModule) -> frozenset[Interval]:
    """Indecomposables in ``cogen(M)``: submodules of summands."""
    return frozenset(Interval(k, a.j) for a in m.summands for k in range(a.i, a.j + 1))


# -- cohooks -----------------------------------------------------------------

def cohook(n: int, i: int, j: int) -> frozenset[Interval]:
    """``{(k, j) : k < i} | {(i, l) : l > j}`` for ``(i, j)`` in ``I_n`` or a leaf
    pair ``(k, k-1)``."""
    if not (1 <= i <= j <= n or (j == i - 1 and 1 <= i <= n + 1)):
        raise ValueError(f"({i},{j}) is neither an interval nor a leaf for n={n}")
    col = {Interval(k, j) for k in range(1, i) if 1 <= k <= j}
    row = {Interval(i, l) for l in range(j + 1, n + 1) if i <= l}
    return frozenset(col | row)


def leaves(n: int) -> list[Leaf]:
    return [Leaf(k) for k in range(1, n + 2)]


# -- duality -----------------------------------------------------------------

def dual_interval(n: int, a: Interval) -> Interval:
    return Interval(n + 1 - a.j, n + 1 - a.i)


def dual(m: BasicModule) -> BasicModule:
    """``M -> M^o``: reflect the AR quiver; valleys map to the opposite
    presentation."""
    opp = m.pres.opposite()
    return BasicModule(m.n, tuple(dual_interval(m.n, a) for a in m.summands), opp.valleys)


# -- splitting projectives / injectives --------------------------------------

def splitting_projectives(m: BasicModule) -> BasicModule:
    """``M^g``: summands that are not a proper quotient of another summand."""
    keep = [a for a in m.summands
            if not any(is_proper_quotient(a, b) for b in m.summands)]
    return m.with_summands(keep)


def splitting_injectives(m: BasicModule) -> BasicModule:
    """``M^c``: summands that are not a proper submodule of another summand."""
    keep = [a for a in m.summands
            if not any(is_proper_submodule(a, b) for b in m.summands)]
    return m.with_summands(keep)
