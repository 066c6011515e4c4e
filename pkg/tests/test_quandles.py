import numpy as np
import pytest

from quandlelab.errors import (
    GroupAxiomError,
    InvalidParamsError,
    MalformedTableError,
    OrderTooSmallError,
)
from quandlelab.fields import build_field
from quandlelab.quandles import (
    Quandle,
    alexander,
    check_axioms,
    conj_quandle,
    core_quandle,
    dihedral,
    find_isomorphism,
    inner_group,
    is_cyclic_type,
    is_dihedral_group,
    orbits,
    trivial,
    validate_group,
)
from quandlelab.counterexamples import s3_table


def test_dihedral_translations():
    Q = dihedral(3)
    assert Q.translation(0) == (0, 2, 1)
    assert Q.translation(1) == (2, 1, 0)
    assert Q.translation(2) == (1, 0, 2)


def test_trivial_table():
    Q = trivial(5)
    assert all(Q.op(x, y) == x for x in range(5) for y in range(5))


def test_alexander_gf4_is_three_cycles(F4):
    Q = alexander(F4, 2)
    for t in range(4):
        s = Q.translation(t)
        assert s[t] == t
        moved = [i for i in range(4) if s[i] != i]
        assert len(moved) == 3


def test_alexander_needs_invertible_alpha(F4):
    with pytest.raises(InvalidParamsError):
        alexander(F4, 0)


def test_check_axioms_known_good():
    assert check_axioms(dihedral(6).table).quandle
    assert check_axioms(core_quandle(s3_table()).table).quandle
    assert check_axioms(conj_quandle(s3_table()).table).quandle


def test_check_axioms_idempotence_witness():
    # constant shift x > y = x + 1: a rack, never a quandle
    table = [[(x + 1) % 3 for _ in range(3)] for x in range(3)]
    report = check_axioms(table)
    assert report.rack
    assert not report.quandle
    assert ("not-idempotent", (0,)) in report.failures


def test_check_axioms_distributivity_witness():
    T = dihedral(4).table.copy()
    T.setflags(write=True)
    T[1, 0], T[3, 0] = T[3, 0], T[1, 0]
    report = check_axioms(T)
    assert not report.rack
    assert ("not-right-distributive", (1, 0, 1)) in report.failures


def test_check_axioms_malformed():
    with pytest.raises(MalformedTableError):
        check_axioms([[0, 1]])
    with pytest.raises(MalformedTableError):
        check_axioms([[0, 2], [1, 0]])
    with pytest.raises(MalformedTableError):
        Quandle([[0, 0], [0, 1]])  # column 0 not bijective


def test_validate_group_accepts_s3():
    e, inv = validate_group(s3_table())
    assert e == 0
    T = s3_table()
    assert all(T[a, inv[a]] == 0 for a in range(6))


def test_validate_group_rejects_broken_table():
    T = s3_table()
    T[1, 1] = 1  # breaks associativity/latin property
    with pytest.raises(GroupAxiomError):
        validate_group(T)


def test_conj_of_abelian_group_is_trivial():
    Z4 = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    assert conj_quandle(Z4) == trivial(4)


def test_core_of_cyclic_group_is_dihedral():
    Zn = [[(a + b) % 5 for b in range(5)] for a in range(5)]
    # y x^{-1} y = 2y - x in additive notation
    assert core_quandle(Zn) == dihedral(5)


def test_orbits():
    assert orbits(dihedral(10)) == [[0, 2, 4, 6, 8], [1, 3, 5, 7, 9]]
    assert orbits(dihedral(7)) == [list(range(7))]
    assert orbits(trivial(4)) == [[0], [1], [2], [3]]


def test_inner_group_dihedral():
    g10 = inner_group(dihedral(10))
    assert g10.order == 10
    ok, m = is_dihedral_group(g10)
    assert ok and m == 5
    g7 = inner_group(dihedral(7))
    assert g7.order == 14
    ok, m = is_dihedral_group(g7)
    assert ok and m == 7
    assert inner_group(trivial(6)).order == 1


def test_inner_group_acts_by_automorphisms():
    for Q in (dihedral(6), dihedral(7), alexander(build_field(3, 2), 2)):
        for g in inner_group(Q).elements:
            for x in range(Q.order):
                for y in range(Q.order):
                    assert g[Q.op(x, y)] == Q.op(g[x], g[y])


def test_cyclic_type():
    assert is_cyclic_type(dihedral(3))
    assert not is_cyclic_type(dihedral(5))
    assert is_cyclic_type(alexander(build_field(2, 2), 2))
    with pytest.raises(OrderTooSmallError):
        is_cyclic_type(dihedral(2))


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_cyclic_type_iff_alexander_with_primitive(q):
    from quandlelab.fields import build_field_q

    F = build_field_q(q)
    for a in range(1, q):
        Q = alexander(F, a)
        assert is_cyclic_type(Q) == F.is_primitive(a)


def test_cyclic_type_implies_connected():
    for q in (4, 5, 7, 8, 9, 11, 13):
        from quandlelab.fields import build_field_q

        F = build_field_q(q)
        for a in range(2, q):
            Q = alexander(F, a)
            if is_cyclic_type(Q):
                assert len(orbits(Q)) == 1


def test_find_isomorphism_examples(F5):
    F3 = build_field(3)
    assert find_isomorphism(dihedral(3), alexander(F3, 2)) is not None
    assert find_isomorphism(alexander(F5, 2), alexander(F5, 3)) is None
    Q = alexander(F5, 2)
    f = find_isomorphism(Q, Q)
    assert f is not None


def _corpus():
    F4 = build_field(2, 2)
    return [dihedral(n) for n in range(3, 9)] + [
        trivial(4), alexander(F4, 2), conj_quandle(s3_table()),
        core_quandle(s3_table())]


def test_find_isomorphism_is_reflexive_and_symmetric():
    corpus = _corpus()
    for Q in corpus:
        assert find_isomorphism(Q, Q) is not None
    for Q1 in corpus:
        for Q2 in corpus:
            f12 = find_isomorphism(Q1, Q2)
            f21 = find_isomorphism(Q2, Q1)
            assert (f12 is None) == (f21 is None)
            if f12 is not None:
                for x in range(Q1.order):
                    for y in range(Q1.order):
                        assert f12[Q1.op(x, y)] == Q2.op(f12[x], f12[y])


def test_find_isomorphism_budget():
    from quandlelab.errors import SearchBudgetError

    Q = dihedral(8)
    with pytest.raises(SearchBudgetError):
        find_isomorphism(Q, Q, budget=4)


def test_inner_group_closure_cap():
    from quandlelab.errors import ClosureBudgetError

    with pytest.raises(ClosureBudgetError):
        inner_group(dihedral(9), cap=5)


def test_translation_identity():
    # R_x(y > z) = R_x(y) > R_x(z)
    for Q in (dihedral(6), dihedral(7), trivial(3)):
        for x in range(Q.order):
            R = Q.translation(x)
            for y in range(Q.order):
                for z in range(Q.order):
                    assert R[Q.op(y, z)] == Q.op(R[y], R[z])


def test_rinv_inverts_translation():
    for Q in (dihedral(5), alexander(build_field(2, 3), 2)):
        for x in range(Q.order):
            for y in range(Q.order):
                assert Q.rinv(Q.op(x, y), y) == x
                assert Q.op(Q.rinv(x, y), y) == x


def test_json_round_trip():
    Q = dihedral(8)
    text = Q.to_json()
    Q2 = Quandle.from_json(text)
    assert Q2 == Q
    assert Q2.label == "dihedral 8"
    assert np.array_equal(Q2.table, Q.table)
