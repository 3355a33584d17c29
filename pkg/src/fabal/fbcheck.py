"""Faithfully balanced / balanced classification and the matrix oracle.

The combinatorial predicates use the cohook conditions (for ``Lambda_n``) and
the proper sub/quotient conditions (for quadratic Nakayama quotients).  The
oracle realises a module as quiver matrices over ``Q`` and compares the
bicommutant of ``End(M)`` with the image of the algebra, which is an
independent route to the same verdicts.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ResourceLimitError
from .linalg import RowEchelon
from .modcat import (
    BasicModule, Interval, NakayamaPresentation, cogen_closure, cohook, gen_closure,
    is_proper_quotient, is_proper_submodule, is_proper_subquotient,
)

DEFAULT_DIM_BOUND = 64


# -- combinatorial predicates ------------------------------------------------

def is_faithful(m: BasicModule) -> bool:
    return all(p in m.summand_set for p in m.pres.projective_injectives())


def _arrow_condition(m: BasicModule, v: int) -> bool:
    # Ext^1(S_v, S_{v+1}) != 0: need Hom(M, S_{v+1}) != 0 or Hom(S_v, M) != 0
    return any(a.i == v + 1 or a.j == v for a in m.summands)


def is_fb(m: BasicModule) -> bool:
    if m.pres.is_linear:
        return _is_fb_cohook(m)
    return _is_fb_nakayama(m)


def _is_fb_cohook(m: BasicModule) -> bool:
    n, summands = m.n, m.summand_set
    if Interval(1, n) not in summands:
        return False
    for a in summands:
        if a != (1, n) and not cohook(n, a.i, a.j) & summands:
            return False
    return all(cohook(n, k, k - 1) & summands for k in range(1, n + 2))


def _is_fb_nakayama(m: BasicModule) -> bool:
    pis = set(m.pres.projective_injectives())
    if not pis <= m.summand_set:
        return False
    for a in m.summands:
        if a in pis:
            continue
        if not any(is_proper_submodule(a, b) or is_proper_quotient(a, b)
                   for b in m.summands):
            return False
    return all(_arrow_condition(m, v) for v in range(1, m.n))


def is_balanced(m: BasicModule) -> bool:
    for x in m.summands:
        if any(is_proper_subquotient(x, y) for y in m.summands):
            if not any(is_proper_submodule(x, y) or is_proper_quotient(x, y)
                       for y in m.summands):
                return False
    support = {v for a in m.summands for v in range(a.i, a.j + 1)}
    for v in range(1, m.n):
        if (v in support or v + 1 in support) and not _arrow_condition(m, v):
            return False
    return True


def morita_extendable(m: BasicModule, x: Interval) -> bool:
    """Whether ``M + X`` stays faithfully balanced: ``X`` in gen(M) or cogen(M)."""
    if not is_fb(m):
        raise ValueError(f"{m} is not faithfully balanced")
    x = Interval(*x)
    return x in gen_closure(m) or x in cogen_closure(m)


def is_minimal_fb(m: BasicModule, exhaustive: bool = False) -> bool:
    """No proper summand is faithfully balanced.

    Over Nakayama algebras it suffices to delete one summand at a time;
    ``exhaustive=True`` checks every proper subset instead.
    """
    if not is_fb(m):
        raise ValueError(f"{m} is not faithfully balanced")
    if not exhaustive:
        return not any(is_fb(m.remove(a)) for a in m.summands)
    for size in range(len(m)):
        for sub in combinations(m.summands, size):
            if is_fb(m.with_summands(sub)):
                return False
    return True


def gen_cogen_core(m: BasicModule) -> frozenset[Interval]:
    return gen_closure(m) & cogen_closure(m)


def mfb_recognition(m: BasicModule, n_mod: BasicModule) -> bool:
    """Whether ``gen(N) & cogen(N) == gen(M) & cogen(M)`` for minimal fb ``M``.

    When it holds, ``N`` is faithfully balanced and contains ``M``; both are
    asserted.
    """
    if not is_minimal_fb(m):
        raise ValueError(f"{m} is not minimal faithfully balanced")
    same = gen_cogen_core(m) == gen_cogen_core(n_mod)
    if same:
        assert is_fb(n_mod), f"{n_mod} should be faithfully balanced"
        assert m.summand_set <= n_mod.summand_set, f"{m} should be a summand of {n_mod}"
    return same


# -- matrix representations --------------------------------------------------

Sparse = dict[tuple[int, int], Fraction]


@dataclass
class MatrixRep:
    """A representation: per-vertex dimensions and one matrix per arrow.

    ``arrow_maps[v]`` is the ``dims[v+1] x dims[v]`` matrix of ``v -> v+1``.
    Index 0 of ``dims`` is unused.
    """

    pres: NakayamaPresentation
    dims: list[int]
    arrow_maps: dict[int, Sparse]

    @property
    def offsets(self) -> list[int]:
        out, acc = [0] * (self.pres.n + 2), 0
        for v in range(1, self.pres.n + 1):
            out[v] = acc
            acc += self.dims[v]
        out[self.pres.n + 1] = acc
        return out

    @property
    def total_dim(self) -> int:
        return sum(self.dims[1:])

    @classmethod
    def from_module(cls, m: BasicModule) -> "MatrixRep":
        n = m.n
        coords: list[list[int]] = [[] for _ in range(n + 2)]
        for idx, a in enumerate(m.summands):
            for v in range(a.i, a.j + 1):
                coords[v].append(idx)
        arrows: dict[int, Sparse] = {}
        for v in range(1, n):
            mat: Sparse = {}
            for col, idx in enumerate(coords[v]):
                if idx in coords[v + 1]:
                    mat[(coords[v + 1].index(idx), col)] = Fraction(1)
            arrows[v] = mat
        rep = cls(m.pres, [len(c) for c in coords[: n + 1]], arrows)
        rep.check_relations()
        return rep

    def check_relations(self) -> None:
        for b in self.pres.valleys:
            prod = _matmul(self.arrow_maps[b], self.arrow_maps[b - 1])
            if prod:
                raise ValueError(f"relation at valley {b} fails")

    def path_matrix(self, v: int, w: int) -> Sparse:
        """Action of the path ``v -> w`` as a global ``D x D`` matrix."""
        off = self.offsets
        local: Sparse = {(r, r): Fraction(1) for r in range(self.dims[v])}
        for u in range(v, w):
            local = _matmul(self.arrow_maps[u], local)
        return {(off[w] + r, off[v] + c): x for (r, c), x in local.items()}


def _matmul(a: Sparse, b: Sparse) -> Sparse:
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (k, c), x in b.items():
        by_row.setdefault(k, []).append((c, x))
    out: Sparse = {}
    for (r, k), x in a.items():
        for c, y in by_row.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + x * y
    return {key: x for key, x in out.items() if x}


def hom_basis(a: MatrixRep, b: MatrixRep) -> list[Sparse]:
    """Basis of ``Hom_Lambda(A, B)`` as global ``D_B x D_A`` matrices."""
    n = a.pres.n
    var_off, acc = {}, 0
    for v in range(1, n + 1):
        var_off[v] = acc
        acc += b.dims[v] * a.dims[v]

    def var(v, r, c):
        return var_off[v] + r * a.dims[v] + c

    ech = RowEchelon(acc)
    for v in range(1, n):
        av, bv = a.arrow_maps[v], b.arrow_maps[v]
        eqs: dict[tuple[int, int], dict[int, Fraction]] = {}
        # g_{v+1} A_v - B_v g_v = 0, entry (r, c) with r < dims_B[v+1], c < dims_A[v]
        for (k, c), x in av.items():
            for r in range(b.dims[v + 1]):
                row = eqs.setdefault((r, c), {})
                key = var(v + 1, r, k)
                row[key] = row.get(key, 0) + x
        for (r, k), x in bv.items():
            for c in range(a.dims[v]):
                row = eqs.setdefault((r, c), {})
                key = var(v, k, c)
                row[key] = row.get(key, 0) - x
        for row in eqs.values():
            ech.add(row)
    aoff, boff = a.offsets, b.offsets
    out = []
    for vec in ech.nullspace():
        mat: Sparse = {}
        for v in range(1, n + 1):
            for r in range(b.dims[v]):
                for c in range(a.dims[v]):
                    x = vec.get(var(v, r, c))
                    if x:
                        mat[(boff[v] + r, aoff[v] + c)] = x
        out.append(mat)
    return out


def centralizer_dim(mats: list[Sparse], d: int) -> int:
    """``dim {phi in End_K(K^d) : phi e = e phi for every e in mats}``."""
    ech = RowEchelon(d * d)
    for e in mats:
        eqs: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (k, c), x in e.items():
            # (phi e)[r, c] += phi[r, k] e[k, c]
            for r in range(d):
                row = eqs.setdefault((r, c), {})
                row[r * d + k] = row.get(r * d + k, 0) + x
        for (r, k), x in e.items():
            # (e phi)[r, c] += e[r, k] phi[k, c]
            for c in range(d):
                row = eqs.setdefault((r, c), {})
                row[k * d + c] = row.get(k * d + c, 0) - x
        for row in eqs.values():
            ech.add(row)
    return d * d - ech.rank


@dataclass(frozen=True)
class OracleReport:
    dim_algebra: int
    dim_annihilator: int
    dim_endomorphism: int
    dim_bicommutant: int
    balanced: bool
    faithful: bool
    faithfully_balanced: bool

    def to_json(self) -> dict:
        return asdict(self)


def algebra_paths(pres: NakayamaPresentation) -> list[tuple[int, int]]:
    """Nonzero paths ``v -> w`` of the algebra, trivial paths included."""
    return [(v, w) for v in range(1, pres.n + 1) for w in range(v, pres.n + 1)
            if pres.allows((v, w))]


def oracle(m: BasicModule, dim_bound: int = DEFAULT_DIM_BOUND) -> OracleReport:
    rep = MatrixRep.from_module(m)
    d = rep.total_dim
    if d > dim_bound:
        raise ResourceLimitError(f"module dimension {d} exceeds oracle bound {dim_bound}")
    paths = algebra_paths(m.pres)
    path_mats = [rep.path_matrix(v, w) for v, w in paths]
    image = RowEchelon(d * d)
    for mat in path_mats:
        image.add({r * d + c: x for (r, c), x in mat.items()})
    endo = hom_basis(rep, rep)
    bicomm = centralizer_dim(endo, d)
    inside = all(_matmul(p, e) == _matmul(e, p) for p in path_mats for e in endo)
    dim_alg = len(paths)
    ann = dim_alg - image.rank
    balanced = inside and bicomm == image.rank
    faithful = ann == 0
    return OracleReport(dim_alg, ann, len(endo), bicomm, balanced, faithful,
                        balanced and faithful)


# -- Hom / Ext / cogen^1 oracles ---------------------------------------------

def hom_dim_oracle(pres: NakayamaPresentation, a: Interval, b: Interval) -> int:
    ra = MatrixRep.from_module(BasicModule(pres.n, (Interval(*a),), pres.valleys))
    rb = MatrixRep.from_module(BasicModule(pres.n, (Interval(*b),), pres.valleys))
    return len(hom_basis(ra, rb))


def ext_dim_oracle(pres: NakayamaPresentation, a: Interval, b: Interval) -> int:
    """``dim Ext^1(A, B)`` as cocycles modulo coboundaries.

    A cochain assigns ``f_v : A_v -> B_{v+1}`` to each arrow; the extension with
    arrow matrices ``[[B_v, f_v], [0, A_v]]`` satisfies the relation at valley
    ``b`` iff ``B_b f_{b-1} + f_b A_{b-1} = 0``.
    """
    n = pres.n
    ra = MatrixRep.from_module(BasicModule(n, (Interval(*a),), pres.valleys))
    rb = MatrixRep.from_module(BasicModule(n, (Interval(*b),), pres.valleys))
    da, db = ra.dims, rb.dims
    f_off, acc = {}, 0
    for v in range(1, n):
        f_off[v] = acc
        acc += db[v + 1] * da[v]
    ncochain = acc

    def fvar(v, r, c):
        return f_off[v] + r * da[v] + c

    cocycle = RowEchelon(ncochain)
    for bv in pres.valleys:
        eqs: dict[tuple[int, int], dict[int, Fraction]] = {}
        # B_b f_{b-1}: (db[b+1] x db[b]) (db[b] x da[b-1])
        for (r, k), x in rb.arrow_maps[bv].items():
            for c in range(da[bv - 1]):
                row = eqs.setdefault((r, c), {})
                row[fvar(bv - 1, k, c)] = row.get(fvar(bv - 1, k, c), 0) + x
        # f_b A_{b-1}: (db[b+1] x da[b]) (da[b] x da[b-1])
        for (k, c), x in ra.arrow_maps[bv - 1].items():
            for r in range(db[bv + 1]):
                row = eqs.setdefault((r, c), {})
                row[fvar(bv, r, k)] = row.get(fvar(bv, r, k), 0) + x
        for row in eqs.values():
            cocycle.add(row)
    dim_z = ncochain - cocycle.rank
    # coboundary of g = (g_v : A_v -> B_v): f_v = B_v g_v - g_{v+1} A_v
    g_off, acc = {}, 0
    for v in range(1, n + 1):
        g_off[v] = acc
        acc += db[v] * da[v]
    columns = RowEchelon(ncochain)
    for v in range(1, n + 1):
        for r in range(db[v]):
            for c in range(da[v]):
                img: dict[int, Fraction] = {}
                if v < n:
                    for (rr, k), x in rb.arrow_maps[v].items():
                        if k == r:
                            img[fvar(v, rr, c)] = img.get(fvar(v, rr, c), 0) + x
                if v > 1:
                    for (k, cc), x in ra.arrow_maps[v - 1].items():
                        if k == c:
                            key = fvar(v - 1, r, cc)
                            img[key] = img.get(key, 0) - x
                columns.add(img)
    return dim_z - columns.rank


def _coords(vec: dict[int, Fraction], free: list[int]) -> list[Fraction]:
    return [vec.get(f, Fraction(0)) for f in free]


def oracle_in_cogen1(x: Interval, m: BasicModule) -> bool:
    """Whether ``X -> Hom_E(Hom(X, M), M)`` is bijective, ``E = End(M)``."""
    x = Interval(*x)
    rx = MatrixRep.from_module(BasicModule(m.n, (x,), m.valleys))
    rm = MatrixRep.from_module(m)
    dx, dm = rx.total_dim, rm.total_dim
    homs = hom_basis(rx, rm)
    h = len(homs)
    if h == 0:
        return dx == 0
    endo = hom_basis(rm, rm)

    flat = [{r * dx + c: v for (r, c), v in mat.items()} for mat in homs]
    coord_solver = _CoordinateSolver(flat, dm * dx)

    # unknowns psi(h_k) in K^{dm}: index k * dm + r
    ech = RowEchelon(h * dm)
    for e in endo:
        for k, hk in enumerate(homs):
            ehk = _matmul(e, hk)
            coeffs = coord_solver.solve({r * dx + c: v for (r, c), v in ehk.items()})
            # psi(e h_k) - e psi(h_k) = 0
            for r in range(dm):
                row: dict[int, Fraction] = {}
                for l, cl in enumerate(coeffs):
                    if cl:
                        row[l * dm + r] = row.get(l * dm + r, 0) + cl
                for (rr, kk), v in e.items():
                    if rr == r:
                        row[k * dm + kk] = row.get(k * dm + kk, 0) - v
                ech.add(row)
    dim_target = h * dm - ech.rank
    # evaluation x -> (h_k x)_k
    ev = RowEchelon(dx)
    for k, hk in enumerate(homs):
        rows: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in hk.items():
            rows.setdefault(r, {})[c] = v
        for row in rows.values():
            ev.add(row)
    return ev.rank == dx == dim_target


class _CoordinateSolver:
    """Coordinates of a vector in the span of a fixed independent list.

    Rows ``[v_k | -e_k]`` are echelonised; reducing ``[w | 0]`` then leaves
    ``[0 | coeffs]`` when ``w`` lies in the span.
    """

    def __init__(self, vectors: list[dict[int, Fraction]], dim: int):
        self.k, self.dim = len(vectors), dim
        self.ech = RowEchelon(dim + self.k)
        for idx, vec in enumerate(vectors):
            row = dict(vec)
            row[dim + idx] = Fraction(-1)
            self.ech.add(row)

    def solve(self, vec: dict[int, Fraction]) -> list[Fraction]:
        r = self.ech.reduce(vec)
        if any(c < self.dim for c in r):
            raise ValueError("vector not in span")
        return [r.get(self.dim + l, Fraction(0)) for l in range(self.k)]
