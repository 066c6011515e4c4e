"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines; the assertions are the authoritative gate either way.
"""

import time
from collections import Counter

import numpy as np
import pytest

from quandlelab.counterexamples import maschke_counterexample, s3_hom_demo
from quandlelab.cyclic_reps import JordanSpec, rigidity_check
from quandlelab.dihedral_reps import C, W, dihedral_closed_form
from quandlelab.fields import build_field, build_field_q, euler_phi, primitive_elements
from quandlelab.polysys import log_involution, prime_powers_upto, system_has_no_solution
from quandlelab.presentation import classify_cyclic, prime_power_equivalent, verify_presentation
from quandlelab.quandles import (
    Quandle,
    alexander,
    dihedral,
    find_isomorphism,
    inner_group,
    is_dihedral_group,
    trivial,
)
from quandlelab.reps import (
    Subspace,
    decompose,
    invariance_residual,
    invariant_complement_exists,
    regular_rep,
)

J2 = np.array([[1, 1], [0, 1]], dtype=complex)


def _report(n, text):
    print(f"PASS criterion {n}: {text}")


@pytest.fixture(scope="module")
def dihedral_decompositions():
    """Generic and closed-form decompositions for all orders 3..24, plus
    the wall time spent producing them."""
    t0 = time.time()
    out = {}
    for n in range(3, 25):
        rep = regular_rep(dihedral(n))
        out[n] = (rep, decompose(rep), dihedral_closed_form(n))
    return out, time.time() - t0


def theorem_labels(n):
    """The label multiset dictated by the decomposition formulas."""
    out = Counter()
    if n % 4 == 0:
        k = n // 4
        out.update({str(C(1, 1)): 2, str(C(1, -1)): 1, str(C(-1, 1)): 1})
        for s in range(1, k):
            out[str(W(2 * k, s))] += 2
    elif n % 2 == 0:
        k = (n - 2) // 4
        out[str(C(1, 1))] += 2
        for s in range(1, k + 1):
            out[str(W(2 * k + 1, s))] += 2
    else:
        out[str(C(1, 1))] += 1
        for s in range(1, (n - 1) // 2 + 1):
            out[str(W(n, 2 * s))] += 1
    return out


PAPER_TABLES = {
    10: {"C(1,1)": 2, "W(w5)": 2, "W(w5^2)": 2},
    11: {"C(1,1)": 1, "W(w11)": 1, "W(w11^2)": 1, "W(w11^3)": 1,
         "W(w11^4)": 1, "W(w11^5)": 1},
    12: {"C(1,1)": 2, "C(-1,1)": 1, "C(1,-1)": 1, "W(w6)": 2, "W(w6^2)": 2},
}
PAPER_DIMS = {10: [1, 1, 2, 2, 2, 2], 11: [1, 2, 2, 2, 2, 2],
              12: [1, 1, 1, 1, 2, 2, 2, 2]}


def test_criterion_1_dihedral_tables(dihedral_decompositions):
    decomps, setup_elapsed = dihedral_decompositions
    t0 = time.time()
    for n, expected in PAPER_TABLES.items():
        rep, decomp, _ = decomps[n]
        assert decomp.label_multiset() == expected, f"n={n}"
        assert sorted(decomp.dims) == PAPER_DIMS[n]
    for n in range(3, 25):
        rep, decomp, _ = decomps[n]
        assert decomp.label_multiset() == theorem_labels(n), f"n={n}"
        for part in decomp.parts:
            assert invariance_residual(rep, part.subspace) <= 1e-9
    elapsed = setup_elapsed + time.time() - t0
    assert elapsed < 10
    _report(1, f"regular-representation tables match for n=3..24 "
               f"(orders 10, 11, 12 row-exact) in {elapsed:.1f}s")


def test_criterion_2_two_algorithm_agreement(dihedral_decompositions):
    decomps, _ = dihedral_decompositions
    for n in range(3, 25):
        _, generic, closed = decomps[n]
        assert generic.label_multiset() == closed.label_multiset(), f"n={n}"
    _report(2, "generic and closed-form decompositions agree on label "
               "multisets for n=3..24")


def test_criterion_3_classification_counts():
    t0 = time.time()
    sizes = {4: 2, 8: 3, 9: 2, 16: 4, 25: 2, 27: 3, 32: 5, 125: 3}
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 125):
        n = sizes.get(q, 1)
        result = classify_cyclic(q)
        assert result.count == euler_phi(q - 1) // n, f"q={q}"
    F = build_field(5, 3)
    result = classify_cyclic(125, F)
    assert result.count == 20
    a = F.from_coeffs([2, 1, 2])
    b = F.from_coeffs([1, 2, 3])
    g = F.from_coeffs([3, 4, 3])
    assert prime_power_equivalent(F, a, b)
    assert not prime_power_equivalent(F, a, g)
    assert result.class_of(a) == result.class_of(b) != result.class_of(g)
    elapsed = time.time() - t0
    assert elapsed < 5
    _report(3, f"class counts phi(q-1)/n confirmed for 12 field sizes, "
               f"20 classes at order 125, in {elapsed:.1f}s")


def test_criterion_4_isomorphism_oracle():
    t0 = time.time()
    pairs = 0
    for q in (4, 5, 7, 8, 9, 11, 13, 16):
        F = build_field_q(q)
        prims = primitive_elements(F)
        quandles = {a: alexander(F, a) for a in prims}
        for a in prims:
            for b in prims:
                found = find_isomorphism(quandles[a], quandles[b]) is not None
                assert found == prime_power_equivalent(F, a, b), (q, a, b)
                pairs += 1
    elapsed = time.time() - t0
    assert elapsed < 30
    _report(4, f"isomorphism search and prime-power equivalence agree on "
               f"all {pairs} primitive pairs, q<=16, in {elapsed:.1f}s")


def test_criterion_5_presentation_soundness():
    t0 = time.time()
    checked = 0
    for q in (4, 5, 7, 8, 9, 11, 13, 16):
        F = build_field_q(q)
        for a in primitive_elements(F):
            report = verify_presentation(F, a, max_len=6)
            assert report.canonical_images == q
            assert report.words_checked == 2730
            checked += 1
    elapsed = time.time() - t0
    assert elapsed < 60
    _report(5, f"presentation verified for {checked} primitive elements "
               f"(2730 words each) in {elapsed:.1f}s")


def test_criterion_6_appendix_lemma():
    checked = 0
    for q in prime_powers_upto(128):
        if q % 2 == 0:
            continue
        F = build_field_q(q)
        m = q - 1
        for a in primitive_elements(F):
            inv = log_involution(F, a)
            from quandlelab.fields import discrete_log

            two = F.add(1, 1)
            assert inv.fixed_points == ((-discrete_log(F, a, two)) % m,)
            cert = system_has_no_solution(inv)
            assert cert.no_solutions, (q, a)
            checked += 1
    _report(6, f"equation system has constant gcd and the expected fixed "
               f"point for all {checked} odd-characteristic pairs, q<=128")


def test_criterion_7_maschke_failure():
    e1 = Subspace(np.array([[1.0], [0.0]], dtype=complex))
    for n in range(2, 7):
        report = maschke_counterexample(n, J2)
        assert report.criterion_holds
        assert invariant_complement_exists(report.rep, e1) is None
        assert not report.completely_reducible
    trep = maschke_counterexample(0, J2, Q=trivial(1))
    assert trep.criterion_holds
    assert invariant_complement_exists(trep.rep, e1) is None
    assert not trep.completely_reducible
    _report(7, "orbit representations for n=2..6 and the one-element "
               "quandle all lack an invariant complement")


def test_criterion_8_inner_groups():
    for n in range(3, 41):
        G = inner_group(dihedral(n))
        expected = n if n % 2 == 0 else 2 * n
        assert G.order == expected, f"n={n}"
        ok, m = is_dihedral_group(G)
        assert ok and m == expected // 2, f"n={n}"
    _report(8, "inner groups of dihedral quandles have the predicted "
               "dihedral structure for n=3..40")


def test_criterion_9_not_a_group_homomorphism():
    report = s3_hom_demo("r")
    assert report.quandle_hom
    assert report.quandle_pairs_checked == 36
    x, y, got, expected = report.group_violation
    assert (x, y) == (3, 1)      # (th, r)
    assert got == 0 and expected == 1
    _report(9, "conjugation-quandle homomorphism on all 36 pairs with the "
               "group law failing at (th, r)")


def test_criterion_10_rigidity_spot_check():
    t0 = time.time()
    configs = [
        (JordanSpec(((2, 1), (3, 1))), 5, 2),
        (JordanSpec(((1, 1), (2, 1), (3, 1))), 5, 2),
        (JordanSpec(((2, 1), (3, 1))), 7, 3),
        (JordanSpec(((1, 1), (2, 1), (3, 1))), 7, 3),
    ]
    total_restarts = 0
    for spec, q, alpha in configs:
        F = build_field_q(q)
        report = rigidity_check(spec, F, alpha, restarts=200, seed=0)
        assert not report.found_counterexample, (q, spec)
        assert report.restarts >= 200
        total_restarts += report.restarts
    elapsed = time.time() - t0
    assert elapsed < 60
    _report(10, f"no second generator found across {total_restarts} seeded "
                f"restarts (4 configurations) in {elapsed:.1f}s")
