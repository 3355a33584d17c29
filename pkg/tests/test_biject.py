from math import factorial

import pytest

from fabal import fixtures
from fabal.biject import (
    IncreasingTree, InterleavedTree, SelfBoundedFunction, TreeLikeTableau, all_binary_trees,
    all_interleaved_trees, chi, decompose, fb_n, first_untangle_labels, from_permutation,
    from_self_bounded, from_tree, function_tree, is_binary, mahonian_polynomial,
    permutation_tree, q_factorial, reorder, self_bounded_functions, shrink,
    tilting_correspondences, to_permutation, to_self_bounded, to_tree, tree_function,
    unshrink, untangle,
)
from fabal.count import catalan, is_tilting
from fabal.modcat import BasicModule, dual_lambda_module, lambda_module


@pytest.fixture(scope="module")
def worked():
    return fixtures.load("worked_tree")


def test_worked_tree(worked):
    t = InterleavedTree.from_json(worked["tree"])
    assert t.size == worked["n"]
    assert first_untangle_labels(t) == worked["first_step_labels"]
    assert untangle(t) == IncreasingTree.from_json(worked["untangled"])
    assert untangle(t).labels() == [1, 2, 4, 5, 10, 7, 3, 6, 9, 8]
    f = tree_function(t)
    assert list(f.values) == worked["f"]
    d = decompose(f)
    assert list(d.f_r_support) == worked["F_R"] and list(d.f_l_support) == worked["F_L"]
    assert list(d.f_r.values) == worked["f_R"] and list(d.f_l.values) == worked["f_L"]
    assert function_tree(f) == t
    assert to_tree(from_tree(t)) == t


def test_small_images():
    assert to_permutation(lambda_module(2)) == (2, 1)
    assert to_permutation(dual_lambda_module(2)) == (1, 2)
    assert to_self_bounded(lambda_module(2)).values == (1, 2)
    assert to_self_bounded(dual_lambda_module(2)).values == (1, 1)
    assert to_permutation(lambda_module(3)) == (3, 2, 1)


def test_tree_validation():
    with pytest.raises(ValueError):
        InterleavedTree(InterleavedTree(), None, (1,))
    with pytest.raises(ValueError):
        InterleavedTree(InterleavedTree(), None, ())
    with pytest.raises(ValueError):
        IncreasingTree(2, IncreasingTree(1))
    with pytest.raises(ValueError):
        SelfBoundedFunction((1, 3))


def test_tree_json_round_trip(worked):
    t = InterleavedTree.from_json(worked["tree"])
    assert InterleavedTree.from_json(t.to_json()) == t
    it = untangle(t)
    assert IncreasingTree.from_json(it.to_json()) == it


@pytest.mark.parametrize("n", range(0, 6))
def test_tree_counts(n):
    assert len(list(all_interleaved_trees(n))) == factorial(n)
    assert len(all_binary_trees(n)) == catalan(n)
    assert all(is_binary(t) for t in all_binary_trees(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_tree_bijection(n):
    mods = fb_n(n)
    assert len(mods) == factorial(n)
    trees = set()
    for m in mods:
        t = to_tree(m)
        trees.add(t)
        assert t.size == n and from_tree(t) == m
        assert reorder(untangle(t)) == t
    assert trees == set(all_interleaved_trees(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_permutation_bijection(n):
    perms = set()
    for m in fb_n(n):
        p = to_permutation(m)
        perms.add(p)
        assert from_permutation(p) == m
        assert permutation_tree(p).inorder() == list(p)
    assert len(perms) == factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_self_bounded_bijection(n):
    fs = {to_self_bounded(m) for m in fb_n(n)}
    assert fs == set(self_bounded_functions(n))
    for f in fs:
        assert to_self_bounded(from_self_bounded(f)) == f


@pytest.mark.parametrize("n", range(1, 6))
def test_tableau_bijection(n):
    tabs = set()
    for m in fb_n(n):
        tab = shrink(m)
        assert tab.is_tree_like()
        assert unshrink(tab, n) == m
        assert TreeLikeTableau.from_json(tab.to_json()) == tab
        tabs.add(tab)
    assert len(tabs) == factorial(n)


def test_tableau_rejects():
    with pytest.raises(ValueError):
        unshrink(TreeLikeTableau((2,), frozenset({(0, 1)})), 2)
    with pytest.raises(ValueError):
        unshrink(shrink(lambda_module(3)), 4)


def test_from_permutation_rejects():
    with pytest.raises(ValueError):
        from_permutation((1, 1, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_mahonian(n):
    assert mahonian_polynomial(n) == q_factorial(n)


def test_chi():
    assert chi(lambda_module(3)) == 3
    assert chi(dual_lambda_module(3)) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_tilting_models(n):
    counts = tilting_correspondences(n)
    assert counts == {"fb": factorial(n), "tilting": catalan(n)}
    for m in fb_n(n):
        if is_tilting(m):
            assert to_tree(m) in set(all_binary_trees(n))


def test_fb_n_members_are_basic_with_n_summands():
    for m in fb_n(4):
        assert isinstance(m, BasicModule) and len(m) == 4
