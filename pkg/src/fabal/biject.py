"""Bijections between fb(n) and trees, permutations, self-bounded functions
and tree-like tableaux.

fb(n) is the set of basic faithfully balanced ``Lambda_n``-modules with exactly
``n`` summands.  Trees have ``n`` vertices and ``n + 1`` leaves, numbered
``1..n+1`` from the right.  A vertex whose subtree has rightmost leaf ``r`` and
leftmost leaf ``l`` corresponds to the interval ``(r, l - 1)``; leaf ``k`` is
the virtual pair ``(k, k - 1)``.  Labelled trees list their labels in preorder
(root, right subtree, left subtree).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional

from .count import fb_of_size, is_tilting
from .fbcheck import is_fb
from .modcat import BasicModule, Interval


# -- interleaved trees -------------------------------------------------------

@dataclass(frozen=True)
class InterleavedTree:
    """A vertex with (possibly empty) right and left subtrees.

    ``lea_r[i - 2]`` is ``lea_R(i)`` for ``i = 2..n_R + 1``: the position, among
    this subtree's leaves, of the ``i``-th leaf of the right subtree.  The right
    subtree always owns leaf 1 and the left subtree leaf ``n + 1``.
    """

    right: Optional["InterleavedTree"] = None
    left: Optional["InterleavedTree"] = None
    lea_r: tuple[int, ...] = ()

    def __post_init__(self):
        n, nr = self.size, _size(self.right)
        if len(self.lea_r) != nr:
            raise ValueError(f"lea_R has {len(self.lea_r)} values, right subtree {nr} vertices")
        if any(not 2 <= x <= n for x in self.lea_r):
            raise ValueError(f"lea_R values {self.lea_r} outside 2..{n}")
        if any(a >= b for a, b in zip(self.lea_r, self.lea_r[1:])):
            raise ValueError(f"lea_R {self.lea_r} not strictly increasing")

    @property
    def size(self) -> int:
        return 1 + _size(self.right) + _size(self.left)

    @property
    def lea_l(self) -> tuple[int, ...]:
        used = set(self.lea_r)
        return tuple(x for x in range(2, self.size + 1) if x not in used)

    def is_trivial(self) -> bool:
        return self.lea_r == tuple(range(2, _size(self.right) + 2))

    def to_json(self) -> dict:
        return {
            "right": self.right.to_json() if self.right else None,
            "left": self.left.to_json() if self.left else None,
            "leaR": list(self.lea_r),
        }

    @classmethod
    def from_json(cls, obj) -> Optional["InterleavedTree"]:
        if obj is None:
            return None
        return cls(cls.from_json(obj.get("right")), cls.from_json(obj.get("left")),
                   tuple(obj.get("leaR", ())))


def _size(t) -> int:
    return t.size if t is not None else 0


def trivial_tree(right: Optional[InterleavedTree], left: Optional[InterleavedTree]) -> InterleavedTree:
    return InterleavedTree(right, left, tuple(range(2, _size(right) + 2)))


def is_binary(t: Optional[InterleavedTree]) -> bool:
    """Hereditarily trivial interleaving, i.e. a plain binary tree."""
    if t is None:
        return True
    return t.is_trivial() and is_binary(t.right) and is_binary(t.left)


def all_binary_trees(n: int) -> list[Optional[InterleavedTree]]:
    if n == 0:
        return [None]
    out = []
    for nr in range(n):
        for r in all_binary_trees(nr):
            for l in all_binary_trees(n - 1 - nr):
                out.append(trivial_tree(r, l))
    return out


def all_interleaved_trees(n: int) -> Iterator[Optional[InterleavedTree]]:
    if n == 0:
        yield None
        return
    for nr in range(n):
        for r in all_interleaved_trees(nr):
            for l in all_interleaved_trees(n - 1 - nr):
                for lea in combinations(range(2, n + 1), nr):
                    yield InterleavedTree(r, l, lea)


# -- modules <-> trees -------------------------------------------------------

def _place(t: InterleavedTree, pos: list[int], out: list[Interval]) -> None:
    """Append the intervals of ``t`` in preorder given its global leaf positions."""
    out.append(Interval(pos[0], pos[-1] - 1))
    if t.right is not None:
        _place(t.right, [pos[0]] + [pos[k - 1] for k in t.lea_r], out)
    if t.left is not None:
        _place(t.left, [pos[k - 1] for k in t.lea_l] + [pos[-1]], out)


def tree_intervals(t: InterleavedTree) -> list[Interval]:
    """Intervals of the vertices of ``t`` in preorder."""
    out: list[Interval] = []
    _place(t, list(range(1, t.size + 2)), out)
    return out


def from_tree(t: InterleavedTree, n: Optional[int] = None) -> BasicModule:
    if n is not None and t.size != n:
        raise ValueError(f"tree has {t.size} vertices, expected {n}")
    return BasicModule.of(t.size, tree_intervals(t))


def _parent(m: BasicModule, a: Interval) -> tuple[Interval, str]:
    """Parent of a vertex or leaf pair ``a = (i, j)`` in the tree of ``M``."""
    i, j = a
    row = [b for b in m.summands if b.i == i and b.j > j]
    if row:
        return min(row, key=lambda b: b.j), "right"
    col = [b for b in m.summands if b.j == j and b.i < i]
    if col:
        return max(col, key=lambda b: b.i), "left"
    raise ValueError(f"{tuple(a)} has no parent in {m}")


def to_tree(m: BasicModule) -> InterleavedTree:
    if not m.pres.is_linear:
        raise ValueError("trees are defined over Lambda_n")
    if len(m) != m.n or not is_fb(m):
        raise ValueError(f"{m} is not in fb({m.n})")
    n = m.n
    children: dict[Interval, dict[str, tuple]] = {a: {} for a in m.summands}
    nodes = [a for a in m.summands if a != (1, n)] + [(k, k - 1) for k in range(1, n + 2)]
    for a in nodes:
        p, side = _parent(m, Interval(*a))
        if side in children[p]:
            raise ValueError(f"{p} has two {side} children in {m}")
        children[p][side] = a

    def build(a) -> tuple[Optional[InterleavedTree], list[int]]:
        if a[1] == a[0] - 1:
            return None, [a[0]]
        ch = children[a]
        right, rleaves = build(ch["right"])
        left, lleaves = build(ch["left"])
        allv = sorted(rleaves + lleaves)
        index = {x: p + 1 for p, x in enumerate(allv)}
        return InterleavedTree(right, left, tuple(index[x] for x in rleaves[1:])), allv

    tree, _ = build(Interval(1, n))
    return tree


# -- increasing trees --------------------------------------------------------

@dataclass(frozen=True)
class IncreasingTree:
    """Binary tree with distinct labels, each parent smaller than its children."""

    label: int
    right: Optional["IncreasingTree"] = None
    left: Optional["IncreasingTree"] = None

    def __post_init__(self):
        for child in (self.right, self.left):
            if child is not None and child.label <= self.label:
                raise ValueError(f"child label {child.label} not above parent {self.label}")

    def labels(self) -> list[int]:
        """Labels in preorder (root, right, left)."""
        out = [self.label]
        for child in (self.right, self.left):
            if child is not None:
                out.extend(child.labels())
        return out

    def inorder(self) -> list[int]:
        out = self.left.inorder() if self.left else []
        out.append(self.label)
        if self.right:
            out.extend(self.right.inorder())
        return out

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "right": self.right.to_json() if self.right else None,
            "left": self.left.to_json() if self.left else None,
        }

    @classmethod
    def from_json(cls, obj) -> Optional["IncreasingTree"]:
        if obj is None:
            return None
        return cls(obj["label"], cls.from_json(obj.get("right")), cls.from_json(obj.get("left")))


def untangle_step(t: InterleavedTree, labels: list[int]) -> tuple[list[int], list[int]]:
    """Label sequences handed to the right and left subtrees by one step."""
    if len(labels) != t.size or any(a >= b for a, b in zip(labels, labels[1:])):
        raise ValueError("labels must be strictly increasing, one per vertex")
    return [labels[k - 1] for k in t.lea_r], [labels[k - 1] for k in t.lea_l]


def first_untangle_labels(t: InterleavedTree) -> list[int]:
    """Preorder labels after untangling only at the root."""
    rl, ll = untangle_step(t, list(range(1, t.size + 1)))
    return [1] + rl + ll


def untangle(t: Optional[InterleavedTree], labels: Optional[list[int]] = None) -> Optional[IncreasingTree]:
    if t is None:
        return None
    if labels is None:
        labels = list(range(1, t.size + 1))
    rl, ll = untangle_step(t, labels)
    return IncreasingTree(labels[0], untangle(t.right, rl), untangle(t.left, ll))


def reorder(it: Optional[IncreasingTree]) -> Optional[InterleavedTree]:
    if it is None:
        return None
    labels = sorted(it.labels())
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")
    pos = {x: p + 1 for p, x in enumerate(labels)}
    rlabels = sorted(it.right.labels()) if it.right else []
    return InterleavedTree(reorder(it.right), reorder(it.left), tuple(pos[x] for x in rlabels))


def to_permutation(m: BasicModule) -> tuple[int, ...]:
    return tuple(untangle(to_tree(m)).inorder())


def permutation_tree(word) -> Optional[IncreasingTree]:
    """The increasing tree whose in-order reading is ``word``."""
    word = list(word)
    if not word:
        return None
    k = word.index(min(word))
    return IncreasingTree(word[k], permutation_tree(word[k + 1:]), permutation_tree(word[:k]))


def from_permutation(word) -> BasicModule:
    word = tuple(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
    return from_tree(reorder(permutation_tree(word)))


# -- self-bounded functions --------------------------------------------------

@dataclass(frozen=True)
class SelfBoundedFunction:
    """Values ``f(1..n)`` with ``1 <= f(i) <= i``."""

    values: tuple[int, ...]

    def __post_init__(self):
        for i, v in enumerate(self.values, start=1):
            if not 1 <= v <= i:
                raise ValueError(f"f({i}) = {v} violates 1 <= f(i) <= i")

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    @property
    def n(self) -> int:
        return len(self.values)

    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))


def self_bounded_functions(n: int) -> Iterator[SelfBoundedFunction]:
    for vals in product(*(range(1, i + 1) for i in range(1, n + 1))):
        yield SelfBoundedFunction(vals)


def tree_function(t: InterleavedTree) -> SelfBoundedFunction:
    """``f(label) =`` rightmost leaf of the vertex carrying that label."""
    labels = untangle(t).labels()
    tops = [a.i for a in tree_intervals(t)]
    vals = [0] * t.size
    for lab, top in zip(labels, tops):
        vals[lab - 1] = top
    return SelfBoundedFunction(tuple(vals))


def to_self_bounded(m: BasicModule) -> SelfBoundedFunction:
    return tree_function(to_tree(m))


@dataclass(frozen=True)
class Decomposition:
    f_r_support: tuple[int, ...]
    f_l_support: tuple[int, ...]
    f_r: SelfBoundedFunction
    f_l: SelfBoundedFunction


def decompose(f: SelfBoundedFunction) -> Decomposition:
    """Split ``f`` into the right and left sub-functions."""
    fr: list[int] = []
    fl: list[int] = []
    for i in range(2, f.n + 1):
        if f(i) == 1 or f(i) in fr:
            fr.append(i)
        else:
            fl.append(i)
    w = [1] + fr
    wpos = {x: p for p, x in enumerate(w)}
    upos = {x: p + 1 for p, x in enumerate(fl)}
    f_r = tuple(wpos[f(x)] + 1 for x in fr)
    f_l = tuple(upos[f(x)] for x in fl)
    return Decomposition(tuple(fr), tuple(fl), SelfBoundedFunction(f_r), SelfBoundedFunction(f_l))


def function_tree(f: SelfBoundedFunction) -> Optional[InterleavedTree]:
    if f.n == 0:
        return None
    d = decompose(f)
    return InterleavedTree(function_tree(d.f_r), function_tree(d.f_l), d.f_r_support)


def from_self_bounded(f: SelfBoundedFunction | tuple[int, ...]) -> BasicModule:
    if not isinstance(f, SelfBoundedFunction):
        f = SelfBoundedFunction(tuple(f))
    return from_tree(function_tree(f))


# -- tree-like tableaux ------------------------------------------------------

@dataclass(frozen=True)
class TreeLikeTableau:
    """Young diagram (row lengths, English notation) with pointed cells ``(r, c)``."""

    row_lengths: tuple[int, ...]
    pointed: frozenset[tuple[int, int]]

    def cells(self) -> set[tuple[int, int]]:
        return {(r, c) for r, ln in enumerate(self.row_lengths) for c in range(ln)}

    def is_tree_like(self) -> bool:
        rl = self.row_lengths
        if not rl or any(x <= 0 for x in rl) or any(a < b for a, b in zip(rl, rl[1:])):
            return False
        if not self.pointed <= self.cells() or (0, 0) not in self.pointed:
            return False
        ncols = rl[0]
        if {r for r, _ in self.pointed} != set(range(len(rl))):
            return False
        if {c for _, c in self.pointed} != set(range(ncols)):
            return False
        for r, c in self.pointed:
            if (r, c) == (0, 0):
                continue
            left = any((r, x) in self.pointed for x in range(c))
            above = any((x, c) in self.pointed for x in range(r))
            if left == above:
                return False
        return True

    def to_json(self) -> dict:
        return {"rows": list(self.row_lengths), "pointed": sorted(list(p) for p in self.pointed)}

    @classmethod
    def from_json(cls, obj) -> "TreeLikeTableau":
        return cls(tuple(obj["rows"]), frozenset(tuple(p) for p in obj["pointed"]))


def shrink(m: BasicModule) -> TreeLikeTableau:
    """Delete the empty rows and columns of the staircase of ``M``.

    Row ``i`` holds the summands with top ``i``; column ``x = n - j`` those with
    socle ``j``, so column 0 holds the projectives.
    """
    n = m.n
    rows = sorted({a.i for a in m.summands})
    cols = sorted({n - a.j for a in m.summands})
    rpos = {i: r for r, i in enumerate(rows)}
    cpos = {x: c for c, x in enumerate(cols)}
    lengths = tuple(sum(1 for x in cols if x <= n - i) for i in rows)
    pointed = frozenset((rpos[a.i], cpos[n - a.j]) for a in m.summands)
    return TreeLikeTableau(lengths, pointed)


def unshrink(tab: TreeLikeTableau, n: int) -> BasicModule:
    """Invert :func:`shrink` by labelling the border path ``1..n+1`` from the
    top right: a vertical step labelled ``k`` is row ``k``, a horizontal step
    labelled ``k`` is the column of socle ``k - 1``."""
    if not tab.is_tree_like():
        raise ValueError("tableau is not tree-like")
    rl = list(tab.row_lengths) + [0]
    row_label: list[int] = []
    col_socle: dict[int, int] = {}
    k = 0
    for t in range(len(tab.row_lengths)):
        k += 1
        row_label.append(k)
        for c in range(rl[t] - 1, rl[t + 1] - 1, -1):
            k += 1
            col_socle[c] = k - 1
    if k != n + 1:
        raise ValueError(f"border has {k} steps, expected {n + 1}")
    return BasicModule.of(n, [(row_label[r], col_socle[c]) for r, c in tab.pointed])


# -- statistics --------------------------------------------------------------

def chi(m: BasicModule) -> int:
    return sum(a.i - 1 for a in m.summands)


def q_factorial(n: int) -> list[int]:
    """Coefficients of ``prod_{i=1}^n (1 + q + ... + q^{i-1})``."""
    poly = [1]
    for i in range(1, n + 1):
        new = [0] * (len(poly) + i - 1)
        for d, c in enumerate(poly):
            for e in range(i):
                new[d + e] += c
        poly = new
    return poly


def fb_n(n: int) -> list[BasicModule]:
    return list(fb_of_size(n, n))


def mahonian_polynomial(n: int) -> list[int]:
    """Distribution of ``chi`` over fb(n), by enumeration."""
    out = [0] * (n * (n - 1) // 2 + 1)
    for m in fb_n(n):
        out[chi(m)] += 1
    return out


def tilting_correspondences(n: int) -> dict[str, int]:
    """Check tilting <=> binary tree <=> non-decreasing function over fb(n)."""
    counts = {"fb": 0, "tilting": 0}
    for m in fb_n(n):
        t = is_tilting(m)
        b = is_binary(to_tree(m))
        f = to_self_bounded(m).is_nondecreasing()
        if not t == b == f:
            raise AssertionError(f"{m}: tilting={t} binary={b} nondecreasing={f}")
        counts["fb"] += 1
        counts["tilting"] += t
    return counts
