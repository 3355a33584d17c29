"""Reproduction checks, one function per acceptance criterion.

Each check returns ``(passed, detail)``.  ``run_all`` times them and is what
``fabal repro`` prints.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import factorial

from . import fixtures
from .approx import gen1_critical
from .biject import (
    InterleavedTree, decompose, fb_n, from_self_bounded, from_tree,
    mahonian_polynomial, q_factorial, reorder, shrink, tilting_correspondences,
    to_permutation, to_self_bounded, to_tree, tree_function, unshrink, untangle,
)
from .count import (
    catalan, fb_count, fb_enumerate, gen1_category_count, minimal_fb_count,
    nakayama_count, size_histogram, size_polynomial, tilting_modules,
)
from .fbcheck import is_balanced, is_fb, is_minimal_fb, morita_extendable, oracle
from .modcat import BasicModule, NakayamaPresentation, dual, indecomposables, linear
from .poset import (
    brute_force_meet, hasse, join, leq, meet, meet_construction, tamari_check,
)
from .serialize import parse_grid, to_grid

FB_COUNTS = [1, 3, 21, 315, 9765, 615195]
GEN1_CATEGORY_COUNTS = [1, 2, 7, 39, 325]
MINIMAL_FB_COUNTS = [1, 2, 6, 25, 134]


def grid(rows) -> BasicModule:
    return parse_grid("\n".join(rows))


def criterion_1(n_max: int = 5):
    got = []
    t0 = time.perf_counter()
    for n in range(1, 7):
        got.append(fb_count(n))
    elapsed = time.perf_counter() - t0
    return got == FB_COUNTS and elapsed <= 30, f"counts {got} in {elapsed:.2f}s"


def criterion_2(n_max: int = 5):
    bad = [n for n in range(1, n_max + 1) if size_histogram(n) != size_polynomial(n).coeffs]
    k3 = tuple(size_polynomial(3).coeffs[s] for s in range(3, 7))
    exact_n = [size_histogram(n).get(n) for n in range(1, 7)]
    ok = not bad and k3 == (6, 9, 5, 1) and exact_n == [factorial(n) for n in range(1, 7)]
    return ok, f"histogram mismatches {bad}; k_3 = {k3}; k_(n,n) = {exact_n}"


def criterion_3(n_max: int = 5):
    counts, bad = [], []
    for n in range(1, n_max + 1):
        tilt = tilting_modules(n)
        counts.append(len(tilt))
        bad += [t for t in tilt if not (is_minimal_fb(t) and gen1_critical(t) == t)]
    ok = counts == [catalan(n) for n in range(1, n_max + 1)] and not bad
    return ok, f"tilting counts {counts}; failures {len(bad)}"


def criterion_4(n_max: int = 5):
    cats = [gen1_category_count(n) for n in range(1, n_max + 1)]
    mins = [minimal_fb_count(n) for n in range(1, n_max + 1)]
    ok = cats == GEN1_CATEGORY_COUNTS[:n_max] and mins == MINIMAL_FB_COUNTS[:n_max]
    return ok, f"gen_1 categories {cats}; minimal fb {mins}"


def criterion_5(n_max: int = 5, samples: int = 1000, seed: int = 20240101):
    fb_bad = bal_bad = cases = 0
    for n in range(1, 4):
        ind = indecomposables(linear(n))
        for r in range(len(ind) + 1):
            for sub in combinations(ind, r):
                m = BasicModule.of(n, sub)
                rep = oracle(m)
                cases += 1
                fb_bad += rep.faithfully_balanced != is_fb(m)
                bal_bad += rep.balanced != is_balanced(m)
    rng = random.Random(seed)
    ind = [a for a in indecomposables(linear(4)) if a != (1, 4)]
    for _ in range(samples):
        m = BasicModule.of(4, [(1, 4)] + [a for a in ind if rng.random() < 0.5])
        fb_bad += oracle(m).faithfully_balanced != is_fb(m)
        cases += 1
    return fb_bad == 0 and bal_bad == 0, (
        f"{cases} modules; fb mismatches {fb_bad}; balanced mismatches {bal_bad}")


def criterion_6(n_max: int = 5):
    fig = NakayamaPresentation(6, (3, 4))
    pair = (fb_count(fig), nakayama_count(fig))
    bad = []
    for n in range(3, 7):
        for t in range(1, n - 1):
            for vs in combinations(range(2, n), t):
                pres = NakayamaPresentation(n, vs)
                if fb_count(pres) != nakayama_count(pres):
                    bad.append(vs)
    return pair == (576, 576) and not bad, f"(brute, formula) = {pair}; mismatching valley sets {bad}"


def criterion_7(n_max: int = 5):
    bad = checked = 0
    for n in range(1, min(n_max, 4) + 1):
        ind = indecomposables(linear(n))
        for m in fb_enumerate(n):
            for x in ind:
                checked += 1
                bad += morita_extendable(m, x) != is_fb(m.add(x))
    return bad == 0, f"{checked} pairs; mismatches {bad}"


def criterion_8(n_max: int = 5):
    problems = []
    for n in range(1, n_max + 1):
        mods = fb_n(n)
        for m in mods:
            t = to_tree(m)
            if from_tree(t) != m or reorder(untangle(t)) != t:
                problems.append(("tree", m))
            if from_self_bounded(to_self_bounded(m)) != m:
                problems.append(("sbf", m))
            if unshrink(shrink(m), n) != m:
                problems.append(("tableau", m))
        sizes = {len(mods), len({to_permutation(m) for m in mods}),
                 len({to_self_bounded(m) for m in mods}), len({shrink(m) for m in mods})}
        if sizes != {factorial(n)}:
            problems.append(("image size", n))
        if mahonian_polynomial(n) != q_factorial(n):
            problems.append(("mahonian", n))
        try:
            tilting_correspondences(n)
        except AssertionError as exc:
            problems.append(("tilting", str(exc)))
    ex = fixtures.load("worked_tree")
    tree = InterleavedTree.from_json(ex["tree"])
    f = tree_function(tree)
    d = decompose(f)
    worked = (list(f.values) == ex["f"] and list(d.f_r_support) == ex["F_R"]
              and list(d.f_l_support) == ex["F_L"])
    if not worked:
        problems.append(("worked example", f.values, d))
    return not problems, f"problems {problems[:3]}; worked f = {f.values}, F_R = {d.f_r_support}, F_L = {d.f_l_support}"


def criterion_9(n_max: int = 5, seed: int = 7):
    problems = []
    for n in range(1, 5):
        mods = fb_n(n)
        for a in mods:
            for b in mods:
                if meet(a, b) != brute_force_meet(a, b, mods):
                    problems.append(("meet", a, b))
                if leq(a, b) != leq(dual(b), dual(a)):
                    problems.append(("duality", a, b))
    table = fixtures.load("meet_table")
    for row in table["rows"]:
        res = meet_construction(grid(row["M"]), grid(row["N"]))
        if to_grid(res.result).split("\n") != row["L"]:
            problems.append(("table", row["L"]))
    # lattice laws: exhaustive triples for n <= 3, sampled for n = 4
    rng = random.Random(seed)
    for n in range(1, 5):
        mods = fb_n(n)
        triples = ([(a, b, c) for a in mods for b in mods for c in mods] if n <= 3
                   else [tuple(rng.choice(mods) for _ in range(3)) for _ in range(300)])
        for a, b, c in triples:
            if not (meet(a, a) == a and join(a, a) == a
                    and meet(a, b) == meet(b, a) and join(a, b) == join(b, a)
                    and meet(meet(a, b), c) == meet(a, meet(b, c))
                    and join(join(a, b), c) == join(a, join(b, c))
                    and meet(a, join(a, b)) == a and join(a, meet(a, b)) == a):
                problems.append(("laws", a, b, c))
                break
    fig = fixtures.load("fb3_hasse")
    nodes = {k: grid(v) for k, v in fig["nodes"].items()}
    expected = {(nodes[a], nodes[b]) for a, b in fig["edges"]}
    if set(hasse(3).edges) != expected or set(hasse(3).nodes) != set(nodes.values()):
        problems.append(("hasse(3)",))
    for n in range(1, n_max + 1):
        for a, b in hasse(n).edges:
            if len(a.summand_set & b.summand_set) != n - 1:
                problems.append(("cover swap", a, b))
    return not problems, f"problems {[p[0] for p in problems][:5]}"


def criterion_10(n_max: int = 5):
    reports = [tamari_check(n) for n in range(1, 5)]
    return all(r.ok for r in reports), "; ".join(
        f"n={r.n}: {r.tilting} tilting, ok={r.ok}, map={r.explicit_map}" for r in reports)


def criterion_11(n_max: int = 5):
    m = grid(fixtures.load("lambda4_minimal")["grid"])
    ok = is_fb(m) and is_minimal_fb(m) and len(m) == 5 and m.n == 4
    return ok, f"{m}: fb={is_fb(m)}, minimal={is_fb(m) and is_minimal_fb(m)}, summands={len(m)}"


CRITERIA = {
    1: ("fb counts n=1..6", criterion_1),
    2: ("size polynomial", criterion_2),
    3: ("tilting = Catalan, minimal and gen1-critical", criterion_3),
    4: ("gen1 categories and minimal fb counts", criterion_4),
    5: ("double-centralizer oracle agreement", criterion_5),
    6: ("quadratic Nakayama counts", criterion_6),
    7: ("Morita extension", criterion_7),
    8: ("bijections", criterion_8),
    9: ("lattice", criterion_9),
    10: ("Tamari sublattice", criterion_10),
    11: ("five-summand minimal module over Lambda_4", criterion_11),
}


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:>2}: {self.title} ({self.seconds:.2f}s) {self.detail}"


def run(number: int, n_max: int = 5) -> Result:
    title, fn = CRITERIA[number]
    t0 = time.perf_counter()
    try:
        passed, detail = fn(n_max)
    except AssertionError as exc:
        passed, detail = False, f"assertion failed: {exc}"
    return Result(number, title, bool(passed), detail, time.perf_counter() - t0)


def run_all(n_max: int = 5) -> list[Result]:
    return [run(k, n_max) for k in CRITERIA]
