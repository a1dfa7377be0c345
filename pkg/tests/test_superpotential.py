import importlib
import json
import warnings
from fractions import Fraction

import pytest

# the package re-exports the superpotential *function* under the module's
# name, so fetch the module itself for monkeypatching
sp = importlib.import_module("ellsuper.superpotential")

from ellsuper import (
    AspectRatio,
    MethodDisagreement,
    binomial,
    cross_validate,
    gamma_path,
    integrality_scan,
    ordered_count,
    path_signature,
    recursion_wtT,
    scan_breakpoints,
    scan_monotonicity,
    superpotential,
    tree_wtT,
    tree_wtT_infinity,
)

INF = AspectRatio.infinite()

# Cross-validated between the recursion, the tree sum, the infinite-ratio
# specialization, and (for d <= 6) the inversion oracle; frozen as regression.
WTT_INFINITY = {1: 2, 2: 5, 3: 32, 4: 286, 5: 3038, 6: 35870, 7: 454880, 8: 6073311}
T_INFINITY = {1: 1, 2: 1, 3: 4, 4: 26, 5: 217, 6: 2110, 7: 22744, 8: 264057}

RATIOS = [
    INF,
    AspectRatio.plus_delta(1, 1),
    AspectRatio.plus_delta(3, 2),
    AspectRatio.plus_delta(2, 1),
    AspectRatio.plus_delta(5, 2),
    AspectRatio.plus_delta(7, 2),
    AspectRatio.plus_delta(5, 1),
    AspectRatio.plus_delta(100, 1),
]


def test_recursion_headline_values():
    assert recursion_wtT(1, INF) == 2
    assert recursion_wtT(2, INF) == 5
    assert recursion_wtT(3, INF) == 32


def test_recursion_d2_by_hand():
    # (5,0)! * ( (2!)^-3 - wtT_1^2 / (2! * ((2,0)+(2,0))!) ) = 120 * (1/8 - 1/12)
    assert recursion_wtT(2, INF) == 120 * (Fraction(1, 8) - Fraction(1, 12))


def test_tree_headline_values():
    assert tree_wtT(1, INF) == 2
    assert tree_wtT(2, INF) == 5
    assert tree_wtT(3, INF) == 32


def test_tree_d2_by_hand():
    # single tree, one movable vertex with leaf number 2:
    # 2^2 * (1/2) * (5!/4!) * (2^-2 * binom(4,2) - 1) = 4 * (1/2) * 5 * (1/2)
    movable = Fraction(binomial(4, 2), 4) - 1
    assert tree_wtT(2, INF) == 4 * Fraction(1, 2) * 5 * movable == 5


def test_tree_d3_by_hand():
    # 2^3 * (14 - 10): corolla term 14, nested term -10
    corolla = Fraction(1, 6) * Fraction(40320, 720) * (Fraction(binomial(6, 3), 8) - 1)
    nested = Fraction(1, 2) * 5 * 8 * (Fraction(binomial(4, 2), 4) - 1)
    assert corolla == 14 and nested == 10
    assert tree_wtT(3, INF) == 8 * (corolla - nested)


def test_tree_single_leaf_narrow_ratio():
    # 1 < a < 2 gives path point (1, 1) at index 2, whose pair factorial is 1
    for p, q in [(3, 2), (7, 4), (9, 5)]:
        assert tree_wtT(1, AspectRatio.plus_delta(p, q)) == 1


def test_infinity_specialization_matches_general_tree():
    for d in range(1, 11):
        assert tree_wtT_infinity(d) == tree_wtT(d, INF)


def test_frozen_infinity_values():
    for d, want in WTT_INFINITY.items():
        assert tree_wtT_infinity(d) == want
        assert superpotential(d, INF).T == T_INFINITY[d]


def test_methods_agree_across_ratios():
    for a in RATIOS:
        for d in range(1, 7):
            assert recursion_wtT(d, a) == tree_wtT(d, a)


def test_inner_sum_modes_agree():
    for a in (INF, AspectRatio.plus_delta(3, 2), AspectRatio.plus_delta(5, 2)):
        for d in range(1, 9):
            assert recursion_wtT(d, a) == recursion_wtT(d, a, inner="multiset")


def test_movable_factor_positive_for_wide_ratios():
    # for a >= 2 the movable factor is 2^-l * binom(2l, l) - 1; movable
    # vertices always have l >= 2, where it is strictly positive
    for ell in range(2, 31):
        assert Fraction(binomial(2 * ell, ell), 2 ** ell) - 1 > 0
    assert Fraction(binomial(2, 1), 2) - 1 == 0


def test_tree_term_signs_for_wide_ratios():
    # with every movable factor positive, each summand's sign is determined
    # by the parity of the unmovable internal vertices; the terms also re-sum
    # to the pipeline value
    from ellsuper import enumerate_trees, gamma_point, pair_factorial, point_add, point_scale, vertex_data
    from ellsuper.numerics import factorial as fact

    for a in (INF, AspectRatio.plus_delta(5, 2)):
        for d in range(2, 7):
            path = [gamma_point(a, k) for k in range(3 * d)]
            g2f = pair_factorial(path[2])
            total = Fraction(0)
            for tree in enumerate_trees(d):
                term = Fraction(1, tree.aut_order)
                unmovable = 0
                for v in vertex_data(tree):
                    num = pair_factorial(path[3 * v.leaf_number - 1])
                    den = pair_factorial(point_add(*(path[3 * c - 1] for c in v.child_leaf_numbers)))
                    term *= Fraction(num, den)
                    if v.movable:
                        ell = v.leaf_number
                        term *= Fraction(pair_factorial(point_scale(path[2], ell)),
                                         fact(ell) ** 2 * g2f ** ell) - 1
                    else:
                        unmovable += 1
                assert term > 0, (d, str(a), tree)
                total += (-1) ** unmovable * term
            assert g2f ** d * total == tree_wtT(d, a)


def test_superpotential_record():
    res = superpotential(3, INF, "tree")
    assert (res.d, res.method) == (3, "tree")
    assert res.wtT == 32 and res.multiplier == 8 and res.T == 4
    assert res.T * res.multiplier == res.wtT

    assert superpotential(1, INF, "recursion").T == 1
    assert superpotential(4, INF, "tree").T == 26
    assert superpotential(2, INF, "linf").T == 1


def test_multiplier_at_infinity_is_3d_minus_1():
    for d in range(1, 8):
        assert superpotential(d, INF).multiplier == 3 * d - 1


def test_linf_method_refused_beyond_bound():
    with pytest.raises(ValueError, match="linf"):
        superpotential(9, INF, "linf")
    # explicit bound raise is honored
    assert superpotential(4, INF, "linf", linf_bound=4).T == 26


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        superpotential(2, INF, "magic")


def test_warning_below_one():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        superpotential(1, AspectRatio.plus_delta(2, 3))
    assert any("outside the intended range" in str(w.message) for w in caught)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        superpotential(1, AspectRatio.plus_delta(3, 2))  # above 1: no warning


def test_path_prefix_invariance():
    # ratios beyond 3d-1 share the all-first-coordinate prefix with infinity
    for d in (2, 4, 6):
        big = AspectRatio.plus_delta(3 * d, 1)
        bigger = AspectRatio.plus_delta(97, 1)
        assert path_signature(big, d) == path_signature(bigger, d) == path_signature(INF, d)
        assert tree_wtT(d, big) == tree_wtT(d, bigger) == tree_wtT(d, INF)
    # an interior coincidence: equal prefixes force equal values
    d = 3
    groups = {}
    for p in range(2, 40):
        for q in range(1, 12):
            a = AspectRatio.plus_delta(p, q)
            groups.setdefault(path_signature(a, d), []).append(a)
    shared = [g for g in groups.values() if len({(x.p, x.q) for x in g}) >= 2]
    assert shared, "expected at least one interior prefix coincidence"
    checked = 0
    for group in shared[:5]:
        vals = {tree_wtT(d, a) for a in group} | {recursion_wtT(d, a) for a in group}
        assert len(vals) == 1
        checked += 1
    assert checked


def test_cross_validate_report():
    report = cross_validate(3, INF)
    assert report["agree"] is True
    assert report["wtT"] == "32" and report["T"] == "4" and report["mult"] == 8
    assert set(report["methods"]) == {"recursion", "recursion-multiset", "tree", "tree-infinity", "linf"}
    assert set(report["ms"]) == set(report["methods"])
    json.dumps(report)  # JSON-ready

    narrow = cross_validate(2, AspectRatio.plus_delta(3, 2))
    assert narrow["wtT"] == "0" and narrow["agree"] is True
    assert "tree-infinity" not in narrow["methods"]

    skipped = cross_validate(2, INF, linf_bound=0)
    assert "linf" not in skipped["methods"]


def test_cross_validate_detects_disagreement(monkeypatch):
    monkeypatch.setattr(sp, "tree_wtT", lambda d, a: Fraction(1, 7))
    with pytest.raises(MethodDisagreement, match="path_prefix"):
        sp.cross_validate(2, INF, linf_bound=0)


def test_scan_breakpoints_small():
    assert scan_breakpoints(1) == [Fraction(2)]
    assert scan_breakpoints(2) == [Fraction(3, 2), Fraction(2), Fraction(3), Fraction(4), Fraction(5)]
    # every breakpoint actually changes the path prefix somewhere nearby
    bps = scan_breakpoints(2)
    for left, right in zip([Fraction(1)] + bps, bps):
        mid = (left + right) / 2
        assert mid.denominator > 0  # representatives exist strictly inside


def test_scan_monotonicity_d1_constant():
    report = scan_monotonicity(1)
    assert [row["T"] for row in report["profile"]] == ["1", "1"]
    assert report["infinity_T"] == "1"
    assert report["nondecreasing"] is True
    assert report["consistent"] is True


def test_scan_monotonicity_d2_profile():
    report = scan_monotonicity(2)
    assert report["nondecreasing"] is True
    assert report["consistent"] is True
    values = [Fraction(row["T"]) for row in report["profile"]]
    assert values[0] == 0  # vanishes just above 1
    assert Fraction(report["infinity_T"]) == 1
    json.dumps(report)


def test_scan_same_interval_same_value():
    # two ratios between consecutive breakpoints share the prefix, hence T
    d = 2
    a1 = AspectRatio.plus_delta(31, 10)  # 3.1
    a2 = AspectRatio.plus_delta(39, 10)  # 3.9, same interval (3, 4)
    assert path_signature(a1, d) == path_signature(a2, d)
    assert superpotential(d, a1).T == superpotential(d, a2).T


def test_integrality_scan_values():
    rows1 = integrality_scan(1)["rows"]
    assert [(r["p"], r["q"], r["T"]) for r in rows1] == [(2, 1, "1")]

    rep3 = integrality_scan(3)
    assert [(r["p"], r["q"], r["T"]) for r in rep3["rows"]] == [
        (8, 1, "4"), (7, 2, "0"), (5, 4, "0"),
    ]
    assert rep3["all_integral"] and rep3["all_nonnegative"]

    rep4 = integrality_scan(4)
    assert [(r["p"], r["q"], r["T"]) for r in rep4["rows"]] == [(11, 1, "26"), (7, 5, "0")]


def test_integrality_scan_adjunction_column():
    rows = {(r["p"], r["q"]): r for r in integrality_scan(3)["rows"]}
    assert rows[(8, 1)]["adjunction_bound"] is True and not rows[(8, 1)]["vanishes"]
    assert rows[(7, 2)]["adjunction_bound"] is False and rows[(7, 2)]["vanishes"]
    assert rows[(5, 4)]["adjunction_bound"] is False and rows[(5, 4)]["vanishes"]


def test_invalid_degree_rejected():
    for fn in (lambda: recursion_wtT(0, INF), lambda: tree_wtT(0, INF),
               lambda: tree_wtT_infinity(0), lambda: superpotential(0, INF),
               lambda: cross_validate(0, INF), lambda: integrality_scan(0)):
        with pytest.raises(ValueError):
            fn()


def test_workers_env_does_not_change_values(monkeypatch):
    monkeypatch.setenv(sp.WORKERS_ENV, "4")
    assert tree_wtT(5, INF) == WTT_INFINITY[5]
    monkeypatch.setenv(sp.WORKERS_ENV, "not-a-number")
    assert tree_wtT(4, INF) == WTT_INFINITY[4]
