import pytest

from lensbounds.catalog import (LensSpace,
                                closed_form_uppers, codim2_lower,
                                compactness_floor, conjectural_lower_bounds,
                                euler_class_condition,
                                euler_class_lower_bounds, hhmp_upper,
                                low_dim_exact, metastable_smoothable,
                                odd_torsion_transfer, power_of_two_lower,
                                projective_pl_uppers, report, spin_upper)
from lensbounds.dyadic import alpha
from lensbounds.records import Category


def test_lens_space_validation():
    with pytest.raises(ValueError):
        LensSpace(-1, 1)
    with pytest.raises(ValueError):
        LensSpace(3, 0)
    with pytest.raises(ValueError):
        LensSpace(3, 1, 2)
    sp = LensSpace(7, 3, 5)
    assert (sp.dim, sp.torsion) == (15, 40)
    assert str(LensSpace(7, 3)) == "L^15(8)"


def test_euler_class_condition():
    assert euler_class_condition(3, 1)          # min(-4, 2) <= 1
    for n in (1, 5, 37, 63):                    # alpha(n) <= 6: vacuous
        assert euler_class_condition(n, 1)
    assert euler_class_condition(127, 1)        # min(1, 7) = 1 <= 1
    # failing needs alpha(n) >= e + 7: the smallest case is n = 255, e = 1
    assert not euler_class_condition(255, 1)
    assert euler_class_condition(255, 2)


def test_euler_class_lower_bounds():
    for e in (2, 3, 7):
        bounds = euler_class_lower_bounds(LensSpace(3, e))
        assert [b.dim for b in bounds] == [10]
    assert [b.dim for b in euler_class_lower_bounds(LensSpace(7, 1))] == [22]
    assert euler_class_lower_bounds(LensSpace(7, 2)) == []
    # scan is complete: recompute the candidate set by brute force
    for e in (1, 2, 3):
        for m in range(1, 200):
            got = [b.dim for b in euler_class_lower_bounds(LensSpace(m, e))]
            want = [4 * n - 2 * alpha(n) + 2 for n in range(1, m + 1)
                    if n + max(0, alpha(n) - e) == m
                    and euler_class_condition(n, e)]
            assert got == want


def test_power_of_two_lower():
    assert power_of_two_lower(LensSpace(8, 3)).dim == 33
    assert power_of_two_lower(LensSpace(1, 1)).dim == 5
    assert power_of_two_lower(LensSpace(3, 2)) is None
    assert power_of_two_lower(LensSpace(0, 1)) is None


def test_codim2_lower():
    # no embedding in R^(2m+3), hence dimension >= 2m+4 (this recovers the
    # n = 2, 3 high-torsion Euler-class cases)
    assert codim2_lower(LensSpace(2, 1)).dim == 8
    assert codim2_lower(LensSpace(3, 1)) is None     # the one exception
    assert codim2_lower(LensSpace(3, 2)).dim == 10
    assert codim2_lower(LensSpace(3, 1, 3)).dim == 10  # torsion 6 is covered
    assert codim2_lower(LensSpace(1, 5)) is None


def test_low_dim_exact():
    lo, up = low_dim_exact(LensSpace(0, 1))
    assert lo.dim == up.dim == 2
    lo, up = low_dim_exact(LensSpace(1, 5))
    assert lo.dim == up.dim == 5
    assert up.category is Category.SMOOTH
    assert low_dim_exact(LensSpace(2, 1)) is None


def test_hhmp_upper():
    assert hhmp_upper(LensSpace(5, 2)).dim == 21
    assert hhmp_upper(LensSpace(1, 1)).dim == 5
    assert hhmp_upper(LensSpace(8, 3)).dim == 33
    with pytest.raises(ValueError):
        hhmp_upper(LensSpace(0, 1))


def test_spin_upper():
    assert spin_upper(LensSpace(7, 4)).dim == 28
    assert spin_upper(LensSpace(3, 2)).dim == 12
    assert spin_upper(LensSpace(5, 2)) is None
    assert spin_upper(LensSpace(8, 1)) is None


def test_closed_form_uppers_examples():
    dims = {b.rule_id: b.dim for b in closed_form_uppers(LensSpace(7, 5))}
    assert dims == {"round1": 27}
    dims = {b.rule_id: b.dim for b in closed_form_uppers(LensSpace(11, 2))}
    assert dims == {"round1": 43, "round2": 41}
    dims = {b.rule_id: b.dim for b in closed_form_uppers(LensSpace(13, 1))}
    assert dims == {"round1": 51, "round1-sharp": 50}
    dims = {b.rule_id: b.dim for b in closed_form_uppers(LensSpace(7, 2))}
    assert dims == {"round1": 27, "round2-special": 26}
    assert closed_form_uppers(LensSpace(4, 2)) == []


def test_closed_form_smoothability():
    # the m = 3 catalog entry is the one flagged topological
    entry, = closed_form_uppers(LensSpace(3, 4))
    assert entry.dim == 11 and entry.category is Category.TOPOLOGICAL
    assert not entry.metastable
    entry = closed_form_uppers(LensSpace(13, 1))[0]
    assert entry.category is Category.SMOOTH and entry.metastable


def test_projective_pl_uppers():
    assert [b.dim for b in projective_pl_uppers(LensSpace(11, 1))] == [39]
    dims = [b.dim for b in projective_pl_uppers(LensSpace(27, 1))]
    assert sorted(dims) == [102, 103]
    assert projective_pl_uppers(LensSpace(11, 2)) == []
    assert projective_pl_uppers(LensSpace(7, 1)) == []   # j = 1 excluded
    assert all(b.external for b in projective_pl_uppers(LensSpace(19, 1)))


def test_metastable_smoothable():
    assert not metastable_smoothable(7, 11)   # 22 < 24
    assert metastable_smoothable(15, 27)      # 54 >= 48
    assert not metastable_smoothable(3, 5)


def test_odd_torsion_transfer():
    assert odd_torsion_transfer(LensSpace(9, 2, 3)) == LensSpace(9, 2, 1)
    with pytest.raises(ValueError):
        odd_torsion_transfer(LensSpace(9, 2, 1))


def test_report_examples():
    rep = report(LensSpace(8, 3))
    assert rep.exact and rep.lower.dim == rep.upper.dim == 33
    assert rep.lower.rule_id == "power-of-two-floor"
    assert rep.upper.rule_id == "hhmp"

    # for e >= 3 the n = m Euler-class bound fires: 4*7 - 2*3 + 2 = 24
    rep = report(LensSpace(7, 3))
    assert (rep.lower.dim, rep.upper.dim) == (24, 27)

    rep = report(LensSpace(1, 7))
    assert rep.exact and rep.upper.dim == 5

    rep = report(LensSpace(0, 2))
    assert rep.exact and rep.upper.dim == 2


def test_report_never_inconsistent_small():
    for e in range(1, 7):
        for m in range(80):
            rep = report(LensSpace(m, e))
            assert rep.lower.dim <= rep.upper.dim
            assert rep.lower.dim >= 2 * m + 2
            assert rep.upper.dim >= 2 * m + 2
            assert rep.exact == (rep.gap == 0)


def test_report_default_hides_flagged_rules():
    rep = report(LensSpace(11, 1))
    assert all(not b.conjectural and not b.external for b in rep.all_bounds)
    rep_ext = report(LensSpace(11, 1), external=True)
    assert any(b.external for b in rep_ext.all_bounds)
    assert rep_ext.upper.dim <= rep.upper.dim


def test_report_conjectural_rules():
    # smallest failing hypothesis: n = 255, e = 1, delta = 7 -> m = 262
    space = LensSpace(262, 1)
    assert conjectural_lower_bounds(space)
    rep = report(space)
    assert all(not b.conjectural for b in rep.all_bounds)
    rep_c = report(space, conjectural=True)
    assert any(b.conjectural for b in rep_c.all_bounds)


def test_report_odd_torsion():
    rep = report(LensSpace(9, 2, 3))
    assert rep.upper.transferred
    assert rep.upper.dim == 35              # first-round value carries over
    assert rep.lower.dim == 22              # codim-2 on the dim-19 manifold
    # low-dimensional exact values hold for any torsion directly
    rep = report(LensSpace(1, 2, 7))
    assert rep.exact and rep.upper.dim == 5 and not rep.upper.transferred
    # transferred bounds must sit in the metastable range
    for b in report(LensSpace(6, 1, 3)).all_bounds:
        if b.transferred:
            assert metastable_smoothable(13, b.dim)


def test_compactness_floor_is_last_resort():
    # the codim-2 exception leaves the floor as the only lower bound
    rep = report(LensSpace(3, 1))
    assert rep.lower.rule_id == "compactness" and rep.lower.dim == 8
    assert rep.upper.dim == 11
    assert compactness_floor(LensSpace(3, 1)).dim == 8


def test_eff_row_of_the_catalog():
    # embedding efficiency 2*dim - upper at e = 2: 3/4/5/6 per column
    for ell, rule, eff in ((3, "round1", 3), (6, "round1-sharp", 4)):
        m = 2 * ell + 1
        up = {b.rule_id: b.dim for b in closed_form_uppers(LensSpace(m, 2))}
        assert 2 * (2 * m + 1) - up[rule] == eff
    for ell, rule, eff in ((3, "round2", 5), (6, "round2-sharp", 6)):
        m = 4 * ell + 3
        up = {b.rule_id: b.dim for b in closed_form_uppers(LensSpace(m, 2))}
        assert 2 * (2 * m + 1) - up[rule] == eff


def test_gap_law_spot():
    for ell in (1, 3, 5, 9, 21):
        m = 2 * ell + 1
        e = max(3, alpha(m))
        space = LensSpace(m, e)
        up = {b.rule_id: b.dim for b in closed_form_uppers(space)}
        low = max(b.dim for b in euler_class_lower_bounds(space))
        assert up["round1"] - low == 2 * alpha(ell) - 1
