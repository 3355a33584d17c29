import pytest

from conftest import all_modules, mod, valley_sets
from fabal.fbcheck import ext_dim_oracle, hom_dim_oracle
from fabal.modcat import (
    BasicModule, Interval, Leaf, NakayamaPresentation, cogen_closure, cohook, dual,
    dual_interval, dual_lambda_module, ext_dim, gen_closure, hom_dim, indecomposables,
    is_proper_subquotient, is_quotient, is_subquotient, is_submodule, lambda_module,
    leaves, linear, splitting_injectives, splitting_projectives,
)


def test_indecomposables_linear():
    assert indecomposables(linear(3)) == [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    assert indecomposables(linear(1)) == [(1, 1)]
    assert all(len(indecomposables(linear(n))) == n * (n + 1) // 2 for n in range(1, 8))


def test_indecomposables_valleyed():
    pres = NakayamaPresentation(6, (3, 4))
    ind = indecomposables(pres)
    assert (2, 4) not in ind and (1, 6) not in ind and (3, 4) in ind
    # the AR quiver of this algebra has 13 vertices
    assert len(ind) == 13
    assert pres.projective_injectives() == [(1, 3), (3, 4), (4, 6)]


def test_presentation_validation():
    with pytest.raises(ValueError):
        NakayamaPresentation(4, (1,))
    with pytest.raises(ValueError):
        NakayamaPresentation(4, (4,))
    with pytest.raises(ValueError):
        BasicModule.of(6, [(2, 4)], (3,))


def test_projectives_injectives():
    pres = NakayamaPresentation(6, (3, 4))
    assert [pres.projective(i) for i in range(1, 7)] == [
        (1, 3), (2, 3), (3, 4), (4, 6), (5, 6), (6, 6)]
    assert [pres.injective(j) for j in range(1, 7)] == [
        (1, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]
    assert linear(4).projective_injectives() == [(1, 4)]


def test_hom_examples():
    p = linear(3)
    assert hom_dim(p, Interval(2, 3), Interval(1, 2)) == 1
    assert hom_dim(p, Interval(1, 2), Interval(2, 3)) == 0
    assert all(hom_dim(p, a, a) == 1 for a in indecomposables(p))


def test_ext_examples():
    assert ext_dim(linear(2), Interval(1, 1), Interval(2, 2)) == 1
    assert ext_dim(linear(4), Interval(1, 3), Interval(2, 4)) == 1
    for n in range(1, 5):
        assert all(ext_dim(linear(n), a, a) == 0 for a in indecomposables(linear(n)))


@pytest.mark.parametrize("pres", [linear(n) for n in range(1, 5)] + list(valley_sets(5)),
                         ids=str)
def test_hom_ext_agree_with_matrix_oracle(pres):
    ind = indecomposables(pres)
    for a in ind:
        for b in ind:
            assert hom_dim(pres, a, b) == hom_dim_oracle(pres, a, b), (a, b)
            assert ext_dim(pres, a, b) == ext_dim_oracle(pres, a, b), (a, b)


def test_subquotient_predicates():
    assert is_submodule(Interval(2, 3), Interval(1, 3))
    assert is_quotient(Interval(1, 2), Interval(1, 3))
    assert not is_submodule(Interval(1, 2), Interval(1, 3))
    a, b = Interval(2, 2), Interval(1, 3)
    assert is_subquotient(a, b) and not is_submodule(a, b) and not is_quotient(a, b)
    assert not is_proper_subquotient(b, b)


def test_closures():
    assert gen_closure(mod(3, (1, 3))) == {(1, 1), (1, 2), (1, 3)}
    assert cogen_closure(mod(3, (1, 3))) == {(1, 3), (2, 3), (3, 3)}
    assert gen_closure(lambda_module(3)) == set(indecomposables(linear(3)))


def test_cohook_examples():
    assert cohook(3, 2, 2) == {(1, 2), (2, 3)}
    assert cohook(3, 3, 2) == {(1, 2), (2, 2), (3, 3)}
    assert cohook(3, 1, 3) == frozenset()
    with pytest.raises(ValueError):
        cohook(3, 3, 1)
    with pytest.raises(ValueError):
        cohook(3, 5, 4)


def test_leaf_cohooks_have_n_elements():
    for n in range(1, 7):
        for leaf in leaves(n):
            assert len(cohook(n, *leaf.pair)) == n
    assert Leaf(3).pair == (3, 2)


def test_dual():
    assert dual(lambda_module(3)) == dual_lambda_module(3)
    assert dual(mod(3, (2, 2))) == mod(3, (2, 2))
    for m in all_modules(linear(3)):
        assert dual(dual(m)) == m
        assert gen_closure(dual(m)) == {dual_interval(3, a) for a in cogen_closure(m)}
    m = mod(6, (1, 3), (5, 6), valleys=(3, 4))
    assert dual(m).valleys == (3, 4) and dual(m).summands == ((1, 2), (4, 6))


def test_dual_swaps_sub_and_quotient():
    ind = indecomposables(linear(4))
    for a in ind:
        for b in ind:
            assert is_submodule(a, b) == is_quotient(dual_interval(4, a), dual_interval(4, b))


def test_splitting_examples():
    assert splitting_projectives(mod(3, (1, 3), (1, 2), (2, 2))) == mod(3, (1, 3), (2, 2))
    assert splitting_projectives(lambda_module(3)) == lambda_module(3)
    assert splitting_injectives(lambda_module(3)) == mod(3, (1, 3))
    m = mod(3, (1, 3), (2, 3), (2, 2))
    assert splitting_projectives(m) == mod(3, (1, 3), (2, 3))
    assert splitting_injectives(m) == mod(3, (1, 3), (2, 2))


def test_splitting_projectives_minimal_generator():
    for n in range(1, 4):
        for m in all_modules(linear(n)):
            g = splitting_projectives(m)
            assert gen_closure(g) == gen_closure(m)
            assert cogen_closure(splitting_injectives(m)) == cogen_closure(m)
            for a in g.summands:
                assert gen_closure(g.remove(a)) != gen_closure(m)
