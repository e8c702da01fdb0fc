"""Series, centers, generator counts, Sylow splits, regularity."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dcgroup import constructors as C
from dcgroup import structure as S
from dcgroup.cli import realize_spec
from dcgroup.errors import NotAbelian, NotPGroup, ParamOutOfRange, SearchBudgetExceeded
from dcgroup.lattice import closure, is_normal, subgroup_as_group

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def from_corpus(gid: str):
    spec = json.loads((CORPUS / f"{gid}.json").read_text())
    return realize_spec(spec, name=gid)


# -- derived and lower central series ----------------------------------------------


def test_derived_subgroup_examples():
    assert S.derived_subgroup(C.dihedral(8)).order == 2
    assert S.derived_subgroup(C.symmetric(4)).order == 12
    assert S.derived_subgroup(C.sl23()).order == 8
    assert S.derived_subgroup(C.cyclic(12)).is_trivial


def test_derived_subgroup_is_normal():
    for G in (C.symmetric(4), C.sl23(), C.dihedral(16)):
        assert is_normal(G, S.derived_subgroup(G))


def test_derived_series_orders():
    orders = [s.order for s in S.derived_series(C.sl23())]
    assert orders == [24, 8, 2, 1]
    orders = [s.order for s in S.derived_series(C.symmetric(4))]
    assert orders == [24, 12, 4, 1]


def test_derived_length():
    assert S.derived_length(C.cyclic(12)) == 1
    assert S.derived_length(C.dihedral(8)) == 2
    assert S.derived_length(C.symmetric(4)) == 3
    assert S.derived_length(C.sl23()) == 3
    # the derived series of a non-solvable group never reaches 1
    assert S.derived_length(C.alternating(5)) is None


def test_lower_central_series_and_class():
    assert S.nilpotency_class(C.generalized_quaternion(8)) == 2
    assert S.nilpotency_class(C.dihedral(16)) == 3
    assert S.nilpotency_class(C.extraspecial_p3(3, "p")) == 2
    assert S.nilpotency_class(C.cyclic(5)) == 0 or S.nilpotency_class(C.cyclic(5)) == 1
    assert S.nilpotency_class(C.symmetric(4)) is None


def test_lcs_terms_descend_and_are_normal():
    G = C.dihedral(32)
    series = S.lower_central_series(G)
    assert series[0].is_full and series[-1].is_trivial
    for a, b in zip(series, series[1:]):
        assert b <= a
        assert is_normal(G, b)


def test_maximal_class_witnesses():
    for gid in ("mc35a", "mc35b"):
        G = from_corpus(gid)
        assert G.order == 3**5
        assert S.nilpotency_class(G) == 4


# -- center, centralizer, normalizer ------------------------------------------------


def test_center_examples():
    q8 = C.generalized_quaternion(8)
    assert sorted(S.center(q8).ids().tolist()) == [0, 2]
    assert S.center(C.symmetric(4)).is_trivial
    assert S.center(C.extraspecial_p3(3, "p")).order == 3


def test_centralizer_of_transposition_in_s4():
    G = C.symmetric(4)
    t = G.id_of((1, 0, 2, 3))
    assert S.centralizer(G, closure(G, [t])).order == 4


def test_normalizer_of_c4_in_s4():
    G = C.symmetric(4)
    r = G.id_of((1, 2, 3, 0))
    N = S.normalizer(G, closure(G, [r]))
    assert N.order == 8


def test_center_of_subgroup():
    G = C.symmetric(4)
    r = G.id_of((1, 2, 3, 0))
    d8 = S.normalizer(G, closure(G, [r]))
    z = S.center_of_subgroup(G, d8)
    assert z.order == 2


# -- frattini, omega, agemo ---------------------------------------------------------


def test_frattini_subgroup():
    assert S.frattini_subgroup(C.dihedral(8)).order == 2
    assert S.frattini_subgroup(C.cyclic(12)).order == 2
    assert S.frattini_subgroup(C.extraspecial_p3(3, "p")).order == 3


def test_omega_and_agemo():
    d8 = C.dihedral(8)
    assert S.omega(d8, 1).order == 8
    assert S.agemo(d8, 1).order == 2
    m27 = C.extraspecial_p3(3, "p2")
    assert S.omega(m27, 1).order == 9
    assert S.agemo(m27, 1).order == 3


def test_omega_agemo_need_pgroup():
    with pytest.raises(NotPGroup):
        S.omega(C.cyclic(12), 1)
    with pytest.raises(NotPGroup):
        S.agemo(C.symmetric(4), 1)


# -- generator counts and abelian shape ----------------------------------------------


def test_min_generators():
    assert S.min_generators(C.cyclic(12)) == 1
    assert S.min_generators(C.dihedral(8)) == 2
    assert S.min_generators(C.abelian([2, 2, 2])) == 3
    assert S.min_generators(C.symmetric(4)) == 2
    assert S.min_generators(C.cyclic(1)) == 0


def test_min_generators_budget():
    # rank 3, so every generating pair fails and the budget runs out at k=2
    G = C.abelian([2, 2, 6])
    with pytest.raises(SearchBudgetExceeded):
        S.min_generators(G, budget=10)
    assert S.min_generators(G) == 3


def test_abelian_type_invariant_factors():
    assert S.abelian_type(C.cyclic(12)) == [12]
    assert S.abelian_type(C.abelian([2, 4])) == [2, 4]
    assert S.abelian_type(C.abelian([2, 2, 2])) == [2, 2, 2]
    assert S.abelian_type(C.abelian([3, 9, 3])) == [3, 3, 9]
    # each factor divides the next
    t = S.abelian_type(C.abelian([2, 4, 8]))
    assert all(b % a == 0 for a, b in zip(t, t[1:]))


def test_abelian_type_rejects_nonabelian():
    with pytest.raises(NotAbelian):
        S.abelian_type(C.dihedral(8))


def test_exponent():
    assert S.exponent(C.symmetric(4)) == 12
    assert S.exponent(C.generalized_quaternion(8)) == 4
    assert S.exponent(C.extraspecial_p3(3, "p")) == 3
    assert S.exponent(C.extraspecial_p3(3, "p2")) == 9


def test_is_cyclic_and_is_pgroup():
    assert S.is_cyclic(C.cyclic(12))
    assert not S.is_cyclic(C.abelian([2, 2]))
    assert S.is_pgroup(C.extraspecial_p3(3, "p")) == (3, 3)
    assert S.is_pgroup(C.symmetric(4)) is None


def test_quotient_exponent_and_cyclicity():
    G = C.dihedral(8)
    top = closure(G, G.generators)
    der = S.derived_subgroup(G)
    triv = closure(G, [])
    assert S.quotient_exponent(G, top, der) == 2
    assert not S.quotient_is_cyclic(G, top, der)
    assert S.quotient_is_cyclic(G, der, triv)


# -- p-group specific ----------------------------------------------------------------


def test_pgroup_maximal_subgroups():
    d8 = C.dihedral(8)
    ms = S.pgroup_maximal_subgroups(d8)
    assert sorted(m.order for m in ms) == [4, 4, 4]
    he3 = C.extraspecial_p3(3, "p")
    assert sorted(m.order for m in S.pgroup_maximal_subgroups(he3)) == [9, 9, 9, 9]


def test_sylow_decomposition_examples():
    sp = S.sylow_decomposition(C.sl23(), 2)
    assert sp is not None
    assert sp.sylow.order == 8
    assert sp.complement is not None and sp.complement.order == 3
    assert sp.complement_abelian is True

    sp = S.sylow_decomposition(C.alternating(4), 2)
    assert sp.sylow.order == 4 and sp.complement.order == 3

    # no normal Sylow subgroup at either prime of S4
    assert S.sylow_decomposition(C.symmetric(4), 2) is None
    assert S.sylow_decomposition(C.symmetric(4), 3) is None


def test_fundamental_subgroup_of_maximal_class_witnesses():
    Ga = from_corpus("mc35a")
    G1 = S.fundamental_subgroup(Ga)
    assert G1.order == 81
    Ha, _ = subgroup_as_group(G1)
    assert Ha.is_abelian

    Gb = from_corpus("mc35b")
    G1b = S.fundamental_subgroup(Gb)
    assert G1b.order == 81
    Hb, _ = subgroup_as_group(G1b)
    assert S.derived_subgroup(Hb).order == 3


def test_fundamental_subgroup_needs_maximal_class():
    with pytest.raises(ParamOutOfRange):
        S.fundamental_subgroup(C.dihedral(8))
    with pytest.raises(ParamOutOfRange):
        S.fundamental_subgroup(C.abelian([3, 3]))


def test_is_regular_and_p_abelian():
    assert S.is_regular(C.extraspecial_p3(3, "p")) is True
    assert S.is_regular(C.extraspecial_p3(3, "p2")) is True
    assert S.is_regular(C.dihedral(8)) is False
    assert S.is_regular(C.semidihedral(16)) is False
    assert S.is_p_abelian(C.extraspecial_p3(3, "p")) is True
    assert S.is_p_abelian(C.generalized_quaternion(8)) is False


def test_p_group_profile_he3():
    prof = S.p_group_profile(C.extraspecial_p3(3, "p"))
    assert (prof.p, prof.n, prof.order) == (3, 3, 27)
    assert prof.d == 2 and prof.cl == 2 and prof.dl == 2
    assert prof.exponent == 3
    assert prof.derived_order == 3 and prof.center_order == 3
    assert prof.center_cyclic and prof.minimal_nonabelian and prof.maximal_class
    assert prof.regular is True


def test_p_group_profile_rejects_non_pgroup():
    with pytest.raises(NotPGroup):
        S.p_group_profile(C.symmetric(4))


# -- sampled structural invariants ----------------------------------------------------

POOL = [C.dihedral(16), C.generalized_quaternion(16), C.extraspecial_p3(3, "p2")]


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_center_elements_commute_with_everything(data):
    G = data.draw(st.sampled_from(POOL))
    z = data.draw(st.sampled_from(sorted(S.center(G).ids().tolist())))
    x = data.draw(st.integers(min_value=0, max_value=G.order - 1))
    assert G.mul(z, x) == G.mul(x, z)


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_derived_subgroup_contains_all_commutators(data):
    G = data.draw(st.sampled_from(POOL))
    D = S.derived_subgroup(G)
    ids = st.integers(min_value=0, max_value=G.order - 1)
    x, y = data.draw(ids), data.draw(ids)
    assert D.contains(G.commutator(x, y))
