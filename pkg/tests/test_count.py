import pytest

from conftest import all_modules, valley_sets
from fabal.count import (
    FbFilter, catalan, fb_count, fb_enumerate, fb_of_size, gen1_category_count, is_tilting,
    minimal_fb_count, multi_count, nakayama_count, q2_factorial, q_count, restricted_counts,
    row_histogram, segment_lengths, size_histogram, size_polynomial, tilting_count,
    _enumerated_restricted,
)
from fabal.errors import ResourceLimitError
from fabal.fbcheck import is_fb
from fabal.modcat import BasicModule, NakayamaPresentation, linear


def test_small_counts():
    assert [fb_count(n) for n in range(1, 6)] == [1, 3, 21, 315, 9765]
    assert [q2_factorial(n) for n in range(-1, 5)] == [0, 1, 1, 3, 21, 315]


@pytest.mark.parametrize("pres", [linear(n) for n in range(1, 5)] + list(valley_sets(4)), ids=str)
def test_bitmask_filter_matches_predicate(pres):
    fast = set(fb_enumerate(pres))
    slow = {m for m in all_modules(pres) if is_fb(m)}
    assert fast == slow


def test_filter_bits():
    flt = FbFilter(linear(3))
    assert flt.pis == [(1, 3)] and flt.nbits == 5


def test_enumeration_cap(monkeypatch):
    with pytest.raises(ResourceLimitError):
        fb_count(5, cap=1000)
    monkeypatch.setenv("FABAL_MAX_SUBSETS", "16")
    with pytest.raises(ResourceLimitError):
        list(fb_enumerate(4))
    assert fb_count(2) == 3


def test_size_polynomial_n3():
    assert size_polynomial(3).coeffs == {3: 6, 4: 9, 5: 5, 6: 1}
    assert size_polynomial(0).coeffs == {0: 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_histograms_match_generating_functions(n):
    assert size_histogram(n) == size_polynomial(n).coeffs
    assert size_polynomial(n).total() == fb_count(n)
    assert size_histogram(n)[n] == len(list(fb_of_size(n, n)))
    mc = multi_count(n)
    assert row_histogram(n) == mc.coeffs
    assert mc.marginal() == size_polynomial(n).coeffs


def test_multi_count_two():
    # x1 * (x1 + x2 + x1 x2)
    assert multi_count(2).coeffs == {(2, 0): 1, (1, 1): 1, (2, 1): 1}


def test_multi_count_cap():
    with pytest.raises(ResourceLimitError):
        multi_count(9)


@pytest.mark.parametrize("n", range(1, 6))
def test_q_count_is_size_polynomial_at_q(n):
    hist = size_histogram(n)
    for q in (1, 2, 3):
        assert q_count(n, q) == sum(c * q ** s for s, c in hist.items())


def test_q_count_two_two():
    assert q_count(2, 2) == 16
    with pytest.raises(ValueError):
        q_count(2, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_restricted_counts(n):
    assert restricted_counts(n) == _enumerated_restricted(n)


def test_restricted_examples():
    assert restricted_counts(4) == (168, 90)
    assert restricted_counts(1) == (1, 1)
    with pytest.raises(ValueError):
        restricted_counts(0)


def test_segments():
    assert segment_lengths(NakayamaPresentation(6, (3, 4))) == [3, 2, 3]


def test_nakayama_example():
    pres = NakayamaPresentation(6, (3, 4))
    assert nakayama_count(pres) == 576 == fb_count(pres)


@pytest.mark.parametrize("pres", list(valley_sets(5)), ids=str)
def test_nakayama_count_matches_enumeration(pres):
    assert nakayama_count(pres) == fb_count(pres)


def test_tilting():
    assert [tilting_count(n) for n in range(1, 6)] == [catalan(n) for n in range(1, 6)]
    assert is_tilting(BasicModule.of(3, [(1, 3), (1, 2), (1, 1)]))
    assert not is_tilting(BasicModule.of(3, [(1, 3), (2, 2), (1, 1)]))
    with pytest.raises(ValueError):
        is_tilting(BasicModule.of(4, [(1, 3)], (3,)))


def test_category_and_minimal_counts():
    assert [gen1_category_count(n) for n in range(1, 5)] == [1, 2, 7, 39]
    assert [minimal_fb_count(n) for n in range(1, 5)] == [1, 2, 6, 25]
