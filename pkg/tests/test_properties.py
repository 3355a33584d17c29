from hypothesis import given, settings, strategies as st

from fabal.approx import gen1_category, gen1_critical, in_cogen1, in_gen1
from fabal.biject import (
    SelfBoundedFunction, fb_n, from_permutation, from_self_bounded, shrink, to_permutation,
    to_self_bounded, unshrink,
)
from fabal.count import size_polynomial, q_count
from fabal.fbcheck import is_fb, oracle
from fabal.modcat import (
    BasicModule, cogen_closure, dual, dual_interval, gen_closure, hom_dim, indecomposables,
    linear, splitting_injectives, splitting_projectives,
)
from fabal.poset import join, leq, meet
from fabal.serialize import from_json, parse_grid, to_grid, to_json


@st.composite
def modules(draw, n_max=6, n_min=1):
    n = draw(st.integers(n_min, n_max))
    ind = indecomposables(linear(n))
    chosen = draw(st.lists(st.sampled_from(ind), min_size=1, unique=True))
    return BasicModule.of(n, chosen)


@st.composite
def self_bounded(draw, n_max=7):
    n = draw(st.integers(1, n_max))
    return SelfBoundedFunction(tuple(draw(st.integers(1, i)) for i in range(1, n + 1)))


FB = {n: fb_n(n) for n in range(1, 6)}


@st.composite
def fb_n_elements(draw, n_max=5):
    n = draw(st.integers(1, n_max))
    return draw(st.sampled_from(FB[n]))


@given(modules())
def test_dual_is_involution(m):
    assert dual(dual(m)) == m
    assert gen_closure(dual(m)) == {dual_interval(m.n, a) for a in cogen_closure(m)}


@given(modules())
def test_fb_self_dual(m):
    assert is_fb(m) == is_fb(dual(m))


@given(modules(), st.data())
def test_gen1_and_cogen1_are_dual(m, data):
    x = data.draw(st.sampled_from(indecomposables(m.pres)))
    assert in_gen1(x, m) == in_cogen1(dual_interval(m.n, x), dual(m))


@given(modules())
def test_gen1_critical_is_idempotent_summand(m):
    c = gen1_critical(m)
    assert c.summand_set <= m.summand_set
    assert gen1_critical(c) == c and gen1_category(c) == gen1_category(m)


@given(modules())
def test_splitting_parts_are_summands(m):
    assert splitting_projectives(m).summand_set <= m.summand_set
    assert splitting_injectives(m) == dual(splitting_projectives(dual(m)))


@settings(max_examples=40, deadline=None)
@given(modules(n_max=4))
def test_oracle_matches_combinatorics(m):
    assert oracle(m).faithfully_balanced == is_fb(m)


@given(st.integers(1, 7), st.data())
def test_hom_dual_symmetry(n, data):
    ind = indecomposables(linear(n))
    a, b = data.draw(st.sampled_from(ind)), data.draw(st.sampled_from(ind))
    assert hom_dim(linear(n), a, b) == hom_dim(linear(n), dual_interval(n, b), dual_interval(n, a))


@given(st.permutations(range(1, 8)).flatmap(
    lambda p: st.integers(1, 7).map(lambda k: [x for x in p if x <= k])))
def test_permutation_round_trip(word):
    m = from_permutation(word)
    assert len(m) == len(word) and is_fb(m)
    assert to_permutation(m) == tuple(word)


@given(self_bounded())
def test_self_bounded_round_trip(f):
    m = from_self_bounded(f)
    assert to_self_bounded(m) == f
    assert unshrink(shrink(m), m.n) == m


@given(modules())
def test_serialization_round_trip(m):
    assert parse_grid(to_grid(m)) == m
    assert from_json(to_json(m)) == m


@given(fb_n_elements(), st.data())
def test_meet_join_bounds(a, data):
    b = data.draw(st.sampled_from(FB[a.n]))
    lo, hi = meet(a, b), join(a, b)
    assert leq(lo, a) and leq(lo, b) and leq(a, hi) and leq(b, hi)
    assert meet(a, b) == meet(b, a)
    assert leq(a, b) == (meet(a, b) == a)


@given(st.integers(0, 8), st.integers(1, 5))
def test_q_count_matches_size_polynomial(n, q):
    assert q_count(n, q) == sum(c * q ** s for s, c in size_polynomial(n).coeffs.items())
