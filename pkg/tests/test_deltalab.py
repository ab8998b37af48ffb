"""Difference products (U^n - 1)...(U^(n-m) - 1) and radical-degree counting."""

import pytest

from fqtlab import (BudgetExceeded, DeltaSpec, FiniteField, Poly, count_report,
                    d_mnu, delta, root_count_crosscheck, roots_of_unity_count,
                    union_size_identity_map)
from fqtlab.deltalab import s0, s1, s2

F2 = FiniteField(2)
F3 = FiniteField(3)
t = Poly(F2, [0, 1])
t3 = Poly(F3, [0, 1])


def P2(*cs):
    return Poly(F2, list(cs))


def test_spec_validation():
    with pytest.raises(ValueError):
        DeltaSpec(u=t, m=2, n=2)
    with pytest.raises(ValueError):
        DeltaSpec(u=t, m=-1, n=2)
    with pytest.raises(ValueError):
        DeltaSpec(u=Poly.one(F2), m=0, n=1)
    with pytest.raises(ValueError):
        DeltaSpec(u=P2(0, 0, 1), m=0, n=1)  # derivative of t^2 vanishes
    spec = DeltaSpec(u=t, m=1, n=3)
    assert spec.delta_small == 1 and spec.p == 2
    assert spec.product_degree == 5


def test_delta_frozen():
    assert delta(DeltaSpec(u=t, m=0, n=2)) == P2(1, 0, 1)          # (t+1)^2
    assert delta(DeltaSpec(u=t, m=0, n=1)) == P2(1, 1)
    d = delta(DeltaSpec(u=t, m=1, n=3))
    assert d == P2(1, 0, 1) * P2(1, 0, 0, 1)                       # (t^2+1)(t^3+1)
    assert d.deg == 5


def test_delta_budget():
    with pytest.raises(BudgetExceeded):
        delta(DeltaSpec(u=t, m=0, n=20000))


def test_d_mnu_frozen():
    assert d_mnu(DeltaSpec(u=t, m=0, n=2)) == 1    # rad((t+1)^2) = t+1
    assert d_mnu(DeltaSpec(u=t, m=1, n=3)) == 3    # (t+1)(t^2+t+1)
    assert d_mnu(DeltaSpec(u=t, m=0, n=1)) == 1


def test_roots_of_unity_count():
    assert roots_of_unity_count(12, 2) == 3
    assert roots_of_unity_count(7, 2) == 7
    assert roots_of_unity_count(9, 3) == 1
    assert roots_of_unity_count(1, 5) == 1
    with pytest.raises(ValueError):
        roots_of_unity_count(0, 2)


def test_count_report_frozen_p2():
    rep = count_report(DeltaSpec(u=t, m=1, n=3))
    assert (rep.s0, rep.s1, rep.s2) == (5, 2, 0)
    assert rep.survivors == (0, 1)
    assert rep.ai_sizes == ((0, 3), (1, 1))
    assert rep.d == 3
    assert rep.pairwise_cap == 1 and rep.pairwise_ok
    # d - 1*(1 - 1/2 + 1/4 - 1/8)*1*3 = 3 - 15/8
    assert rep.margin_b == rep.d - rep.part_b_rhs
    assert str(rep.margin_b) == "9/8"
    assert rep.margin_a is None and not rep.part_a_applicable


def test_count_report_frozen_m0():
    rep = count_report(DeltaSpec(u=t, m=0, n=2))
    assert rep.survivors == (0,)          # 4 does not divide 2
    assert rep.ai_sizes == ((0, 1),)
    assert (rep.s0, rep.s1, rep.s2) == (2, 2, 0)


def test_count_report_s2_p3():
    rep = count_report(DeltaSpec(u=t3, m=2, n=9))
    assert rep.s2 == 9                    # only 9-0 is divisible by 9
    assert rep.s1 == 9                    # multiples of 3 in [7,9]: just 9
    assert 0 not in rep.survivors


def test_count_report_part_a_at_top_m():
    rep = count_report(DeltaSpec(u=t, m=2, n=3), part_a=(1.0, 1.0, 0.0))
    assert rep.part_a_applicable
    assert rep.part_a_rhs == pytest.approx(3.0)   # 1 * 1 * 3^(2-1) - 0
    assert rep.margin_a == pytest.approx(rep.d - 3.0)


def test_counting_identity_pure_integers():
    # survivor sizes sum to S0 - S1 + (S1 - S2)/p, checked without any
    # polynomial arithmetic across the whole small-parameter grid
    for p in (2, 3, 5):
        for n in range(1, 51):
            for m in range(n):
                v0, v1, v2 = s0(m, n), s1(m, n, p), s2(m, n, p)
                assert v0 >= v1 >= v2 >= 0
                total = sum(roots_of_unity_count(n - i, p)
                            for i in range(m + 1) if (n - i) % (p * p) != 0)
                assert p * total == p * (v0 - v1) + (v1 - v2)


def test_closed_forms_match_definitional_sums():
    for p in (2, 3, 5):
        step, step2 = p, p * p
        for n in range(1, 51):
            for m in range(n):
                window = range(n - m, n + 1)
                assert s1(m, n, p) == sum(k for k in window if k % step == 0)
                assert s2(m, n, p) == sum(k for k in window if k % step2 == 0)
                assert s0(m, n) == sum(window)


def test_pairwise_intersections_capped():
    for n in range(2, 9):
        for m in range(1, n):
            rep = count_report(DeltaSpec(u=t, m=m, n=n))
            assert rep.pairwise_ok


def test_monotone_in_m():
    for u, n_max in ((t, 8), (P2(0, 1, 1), 6)):
        for n in range(2, n_max + 1):
            prev = d_mnu(DeltaSpec(u=u, m=0, n=n))
            for m in range(1, n):
                cur = d_mnu(DeltaSpec(u=u, m=m, n=n))
                assert cur >= prev
                prev = cur


def test_crosscheck_frozen():
    rep = root_count_crosscheck(DeltaSpec(u=t, m=1, n=3))
    assert rep.d_via_radical == rep.d_via_factorization == rep.union_size == 3
    assert rep.ok
    rep = root_count_crosscheck(DeltaSpec(u=t, m=0, n=6))
    assert rep.d_via_radical == 3         # t^6+1 = (t^3+1)^2 over F2
    assert rep.union_size == 3
    # a degree-2 input with nonzero derivative
    rep = root_count_crosscheck(DeltaSpec(u=P2(0, 1, 1), m=0, n=1))
    assert rep.d_via_radical == 2         # t^2+t+1 is irreducible
    assert rep.union_size is None
    assert rep.ok


def test_crosscheck_sweep():
    for u in (t, P2(0, 1, 1)):
        for n in range(1, 13):
            m = min(2, n - 1)
            rep = root_count_crosscheck(DeltaSpec(u=u, m=m, n=n))
            assert rep.ok


def test_union_size_frozen():
    assert union_size_identity_map(DeltaSpec(u=t, m=1, n=3)) == 3
    assert union_size_identity_map(DeltaSpec(u=t, m=0, n=6)) == 3
    # orders 1..6 over p=5: p'-parts {1,2,3,4,1,6}, union of divisors
    assert union_size_identity_map(DeltaSpec(u=Poly(FiniteField(5), [0, 1]),
                                             m=5, n=6)) == 8


def test_union_matches_radical_degree_odd_p():
    for n in range(1, 9):
        for m in range(n):
            spec = DeltaSpec(u=t3, m=m, n=n)
            assert union_size_identity_map(spec) == d_mnu(spec)
