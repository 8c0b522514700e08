from fractions import Fraction

import pytest

from schrodinger.modules import (
    Weight, compose, dual_module, from_action, generator_depths, map_is_zero, module_hom,
    quotient, submodule, tensor_sl2,
)
from schrodinger.verma import radical_spaces, simple_module, verma

F = Fraction


def test_weight_predicates():
    assert Weight(3, 1).is_integral and not Weight(3, 1).is_half_integral
    assert Weight(F(5, 2), 1).is_half_integral
    assert Weight(F(1, 3), 0).is_zero_charge
    lam = Weight(F(2, 7), F(-1, 3))
    assert lam.dot().dot() == lam
    assert lam.shifted(3) == Weight(F(2, 7) - 3, F(-1, 3))
    assert lam.depth_below(lam.shifted(4)) == 4
    assert lam.depth_below(lam.shifted(-2)) == -2
    assert lam.depth_below(Weight(lam.h_val, 1)) is None
    assert lam.depth_below(Weight(lam.h_val + F(1, 2), lam.z_val)) is None
    assert Weight("1/2", "3") == Weight(F(1, 2), 3)


def test_truncation_conventions():
    M = verma(Weight(1, 1), 4)
    assert M.matrix("f", 3) is None          # lowering out of the bottom leaves the truncation
    assert M.matrix("e", 1).shape == (0, 1)  # raising above the top is zero
    assert M.matrix("q", 4) is None
    with pytest.raises(IndexError):
        M.apply("f", 4, [F(1)] * M.dim(4))
    depth, vec = M.apply_word("ef", 0, [F(1)])
    assert depth == 0 and vec == [F(1)]
    depth, vec = M.apply_word("fe", 0, [F(1)])
    assert depth == 0 and vec == [F(0)]


def test_from_action_small_module():
    # the trivial module: everything acts by zero except nothing
    lam = Weight(0, 0)
    M = from_action(lam, [["v"], [], []], lambda g, i, lab: {})
    assert M.character() == [1, 0, 0]
    assert M.relation_defects() == []


def test_relation_defects_detects_broken_module():
    lam = Weight(1, 1)
    good = verma(lam, 4)
    bad = from_action(
        lam, good.labels,
        lambda g, i, lab: {lab: F(7)} if g == "h" else {},
    )
    assert bad.relation_defects()


def test_submodule_and_quotient():
    lam = Weight(F(1, 3), 0)
    M = verma(lam, 8)
    rad = radical_spaces(M)
    K = submodule(M, rad)
    L = quotient(M, rad)
    assert [a + b for a, b in zip(K.character(), L.character())] == M.character()
    assert K.relation_defects() == [] and L.relation_defects() == []
    assert L.character() == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    # the line through q^2 v is not stable when the charge is nonzero
    N = verma(Weight(F(1, 3), 1), 2)
    with pytest.raises(ValueError):
        submodule(N, [[], [], [[F(1) if lab == (0, 2, "v") else F(0) for lab in N.labels[2]]]])


def test_tensor_sl2():
    lam = Weight(F(-1, 2), 1)
    M = verma(lam, 8)
    assert tensor_sl2(M, 1).character() == M.character()
    T = tensor_sl2(M, 2)
    assert T.top == lam.shifted(-1)
    ch = M.character()
    assert T.character() == [ch[i] + (ch[i - 2] if i >= 2 else 0) for i in range(9)]
    assert T.relation_defects() == []
    triv = simple_module(Weight(0, 0), 4)
    T3 = tensor_sl2(triv, 3)
    assert T3.character() == [1, 0, 1, 0, 1]
    assert T3.top == Weight(2, 0)
    with pytest.raises(ValueError):
        tensor_sl2(M, 0)


def test_module_hom_basics():
    lam = Weight(F(2, 5), F(3, 4))
    V = verma(lam, 8)
    assert module_hom(V, V).dim == 1
    assert module_hom(V, verma(Weight(0, 1), 8)).dim == 0
    zero = Weight(F(1, 3), 0)
    assert module_hom(verma(zero.shifted(1), 7), verma(zero, 8)).dim == 1
    assert module_hom(verma(zero, 8), verma(zero.shifted(1), 7)).dim == 0
    L = simple_module(zero, 8)
    assert module_hom(verma(zero, 8), L).dim == 1
    assert module_hom(L, verma(zero, 8)).dim == 0


def test_graded_hom_requires_grades():
    V = verma(Weight(0, 0), 4)
    D = dual_module(V)
    D.grades = None
    with pytest.raises(ValueError):
        module_hom(V, D, shift=0)


def test_compose_and_generators():
    lam = Weight(F(1, 3), 0)
    V0, V1 = verma(lam, 8), verma(lam.shifted(1), 7)
    emb = module_hom(V1, V0)
    proj = module_hom(V0, simple_module(lam, 8))
    comp = compose(emb.maps[0], emb.offset, proj.maps[0])
    assert map_is_zero(comp)
    assert not map_is_zero(emb.maps[0])
    assert generator_depths(V0) == [0]
