"""The order on fb(n): ``N <= M`` iff ``cogen(N) ⊆ cogen(M)`` and
``gen(N) ⊇ gen(M)``.  Bottom is ``Lambda_n``, top is ``D Lambda_n``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import networkx as nx

from .biject import InterleavedTree, fb_n, to_tree
from .count import tilting_modules
from .fbcheck import is_fb
from .modcat import (
    BasicModule, Interval, Leaf, cogen_closure, cohook, dual, gen_closure,
    is_proper_quotient, is_proper_submodule,
)


def in_fb_n(m: BasicModule) -> bool:
    return m.pres.is_linear and len(m) == m.n and is_fb(m)


def _require_fb_n(*ms: BasicModule) -> None:
    for m in ms:
        if not in_fb_n(m):
            raise ValueError(f"{m} is not in fb({m.n})")


def leq(n_mod: BasicModule, m: BasicModule, check: bool = True) -> bool:
    if check:
        _require_fb_n(n_mod, m)
    return (cogen_closure(n_mod) <= cogen_closure(m)
            and gen_closure(n_mod) >= gen_closure(m))


# -- internal cohooks and covers ---------------------------------------------

@dataclass(frozen=True)
class InternalCohook:
    anchor: Interval
    corner: Union[Interval, Leaf]
    chain: tuple[Interval, ...]

    @property
    def corner_pair(self) -> tuple[int, int]:
        return self.corner.pair if isinstance(self.corner, Leaf) else tuple(self.corner)


def internal_cohook(m: BasicModule, x: Interval) -> InternalCohook:
    """Chain of the summands that can replace ``X`` in ``M``, ordered from the
    projective end to the injective end."""
    x = Interval(*x)
    n = m.n
    if x == (1, n) or x not in m.summand_set:
        raise ValueError(f"{x} must be a summand of {m} other than ({1},{n})")
    u = m.remove(x)
    if not any(is_proper_quotient(x, b) for b in u.summands):
        # splitting projective: longest proper quotient of X kept in U
        cands = [b.j for b in u.summands if b.i == x.i and b.j < x.j]
        a, b = x.i, max(cands) if cands else x.i - 1
    elif not any(is_proper_submodule(x, b) for b in u.summands):
        cands = [b.i for b in u.summands if b.j == x.j and b.i > x.i]
        a, b = (min(cands) if cands else x.j + 1), x.j
    else:
        raise ValueError(f"{x} is neither splitting projective nor splitting injective in {m}")
    corner: Union[Interval, Leaf] = Leaf(a) if b == a - 1 else Interval(a, b)
    allowed = cohook(n, a, b) & (gen_closure(u) | cogen_closure(u))
    order = [Interval(a, l) for l in range(n, b, -1)] + [Interval(k, b) for k in range(a - 1, 0, -1)]
    return InternalCohook(x, corner, tuple(z for z in order if z in allowed))


def successor_swaps(m: BasicModule) -> list[BasicModule]:
    """``U + Z_{i+1}`` for each summand ``X = Z_i`` whose successor in its
    internal cohook is not already a summand.  Every upper cover is of this
    form, but not every such swap is a cover."""
    out = []
    for x in m.summands:
        if x == (1, m.n):
            continue
        chain = internal_cohook(m, x).chain
        pos = chain.index(x)
        if pos + 1 < len(chain) and chain[pos + 1] not in m.summand_set:
            out.append(m.remove(x).add(chain[pos + 1]))
    return out


def upper_covers(m: BasicModule) -> list[BasicModule]:
    """The successor swaps that are minimal under the order.

    A swap that is not a cover lies above some cover of ``M``, which is itself
    a swap, so keeping the minimal swaps is exact.
    """
    cands = successor_swaps(m)
    out = [c for c in cands
           if not any(d != c and leq(d, c, check=False) for d in cands)]
    return sorted(out, key=lambda b: b.summands)


def lower_covers(m: BasicModule) -> list[BasicModule]:
    return [dual(c) for c in upper_covers(dual(m))]


def hasse(n: int) -> nx.DiGraph:
    """Cover graph of fb(n); an edge ``N -> M`` means ``M`` covers ``N``."""
    g = nx.DiGraph()
    for m in fb_n(n):
        g.add_node(m)
        for c in upper_covers(m):
            g.add_edge(m, c)
    return g


def brute_force_hasse(n: int) -> nx.DiGraph:
    elems = fb_n(n)
    g = nx.DiGraph()
    g.add_nodes_from(elems)
    for a in elems:
        for b in elems:
            if a != b and leq(a, b, check=False):
                g.add_edge(a, b)
    return nx.transitive_reduction(g)


def heights(g: nx.DiGraph) -> dict:
    """Length of the longest chain from a minimal element."""
    h = {}
    for v in nx.topological_sort(g):
        h[v] = max((h[p] + 1 for p in g.predecessors(v)), default=0)
    return h


def to_dot(g: nx.DiGraph, label=str) -> str:
    h = heights(g)
    ids = {v: f"m{k}" for k, v in enumerate(sorted(g.nodes, key=lambda m: (h[m], m.summands)))}
    lines = ["digraph fb {", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for v, vid in ids.items():
        text = label(v).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        lines.append(f'  {vid} [label="{text}"];')
    for level in sorted(set(h.values())):
        same = " ".join(ids[v] for v in ids if h[v] == level)
        lines.append(f"  {{ rank=same; {same} }}")
    for a, b in sorted(g.edges, key=lambda e: (ids[e[0]], ids[e[1]])):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- meet and join -----------------------------------------------------------

@dataclass(frozen=True)
class MeetConstruction:
    cocover: frozenset[Interval]
    cover: frozenset[Interval]
    adjusted: frozenset[Interval]
    result: BasicModule


def meet_construction(m: BasicModule, n_mod: BasicModule) -> MeetConstruction:
    _require_fb_n(m, n_mod)
    n = m.n
    common = cogen_closure(m) & cogen_closure(n_mod)
    c = frozenset(a for a in common if not any(is_proper_submodule(a, b) for b in common))
    union = gen_closure(m) | gen_closure(n_mod)
    g = frozenset(max((a for a in union if a.i == top), key=lambda a: a.j)
                  for top in {a.i for a in union})
    cog_c = cogen_closure(BasicModule(n, tuple(c)))
    g_adj = set()
    for a in g:
        if a.i == 1:
            continue
        cands = [b for b in cog_c if b.i == a.i and b.j >= a.j]
        if not cands:
            raise AssertionError(f"no module with top {a.i} above {a} in cogen(C)")
        g_adj.add(min(cands, key=lambda b: b.j))
    result = BasicModule(n, tuple(c | g_adj))
    return MeetConstruction(c, g, frozenset(g_adj), result)


def meet(m: BasicModule, n_mod: BasicModule) -> BasicModule:
    return meet_construction(m, n_mod).result


def join(m: BasicModule, n_mod: BasicModule) -> BasicModule:
    return dual(meet(dual(m), dual(n_mod)))


def brute_force_meet(m: BasicModule, n_mod: BasicModule,
                     elems: Optional[list[BasicModule]] = None) -> BasicModule:
    elems = fb_n(m.n) if elems is None else elems
    lower = [x for x in elems if leq(x, m, check=False) and leq(x, n_mod, check=False)]
    top = [x for x in lower if all(leq(y, x, check=False) for y in lower)]
    if len(top) != 1:
        raise AssertionError(f"no unique greatest lower bound of {m} and {n_mod}")
    return top[0]


# -- Tamari sublattice -------------------------------------------------------

Tree = Optional[tuple]  # None or (left, right)


def binary_trees(n: int) -> list[Tree]:
    if n == 0:
        return [None]
    return [(l, r) for k in range(n) for l in binary_trees(k) for r in binary_trees(n - 1 - k)]


def right_rotations(t: Tree) -> list[Tree]:
    """Trees obtained by one right rotation ``((A, B), C) -> (A, (B, C))``."""
    if t is None:
        return []
    left, right = t
    out = []
    if left is not None:
        a, b = left
        out.append((a, (b, right)))
    out += [(l2, right) for l2 in right_rotations(left)]
    out += [(left, r2) for r2 in right_rotations(right)]
    return out


def tamari_lattice(n: int) -> nx.DiGraph:
    g = nx.DiGraph()
    for t in binary_trees(n):
        g.add_node(t)
        for s in right_rotations(t):
            g.add_edge(t, s)
    return g


def _shape(t: Optional[InterleavedTree], mirror: bool) -> Tree:
    if t is None:
        return None
    l, r = _shape(t.left, mirror), _shape(t.right, mirror)
    return (r, l) if mirror else (l, r)


@dataclass(frozen=True)
class TamariReport:
    n: int
    tilting: int
    closed_under_meet: bool
    closed_under_join: bool
    isomorphic: bool
    explicit_map: Optional[str]

    @property
    def ok(self) -> bool:
        return self.closed_under_meet and self.closed_under_join and self.isomorphic


def tamari_check(n: int) -> TamariReport:
    tilt = tilting_modules(n)
    tset = set(tilt)
    closed_meet = all(meet(a, b) in tset for a in tilt for b in tilt)
    closed_join = all(join(a, b) in tset for a in tilt for b in tilt)
    order = nx.DiGraph()
    order.add_nodes_from(tilt)
    for a in tilt:
        for b in tilt:
            if a != b and leq(a, b, check=False):
                order.add_edge(a, b)
    restricted = nx.transitive_reduction(order)
    tam = tamari_lattice(n)
    iso = nx.is_isomorphic(restricted, tam)
    explicit = None
    for mirror in (False, True):
        for reverse in (False, True):
            phi = {a: _shape(to_tree(a), mirror) for a in tilt}
            edges = {(phi[a], phi[b]) if not reverse else (phi[b], phi[a])
                     for a, b in restricted.edges}
            if len(set(phi.values())) == len(tilt) and edges == set(tam.edges):
                explicit = ("mirrored tree" if mirror else "tree") + (
                    ", order reversed" if reverse else "")
                break
        if explicit:
            break
    return TamariReport(n, len(tilt), closed_meet, closed_join, iso, explicit)
