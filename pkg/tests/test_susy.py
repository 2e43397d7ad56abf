import numpy as np
import pytest

from pdmdirac import (BetaMode, ModelParams, PoschlTellerSuperpotential,
                      RosenMorseSuperpotential, ground_state_samples,
                      gpt_params_ab, gpt_solve, gpt_solve_from_params,
                      ladder_state, partner_potentials,
                      rm2_coefficients_from_params, rm2_level_radicand,
                      rm2_solve, rm2_solve_from_params, si_check,
                      si_remainder_ladder)
from pdmdirac.errors import DomainError
from pdmdirac.numerics import Grid, quadrature_weights
from pdmdirac.wavefunctions import gpt_wavefunction, rm2_wavefunction


def test_partner_constant_w_degenerate():
    # c2 = 0 bypasses the normalizability invariant on purpose: W' = 0
    w = RosenMorseSuperpotential(c1=0.7, c2=0.0)
    assert not w.is_normalizable
    pp = partner_potentials(w, 1.3)
    assert pp.v_minus == pytest.approx(0.49, rel=1e-15)
    assert pp.v_plus == pytest.approx(0.49, rel=1e-15)


def test_partner_hand_value():
    pp = partner_potentials(RosenMorseSuperpotential(c1=0.0, c2=2.0), 0.0)
    assert pp.v_minus == pytest.approx(-2.0, rel=1e-15)  # 4 - (4+2)*1
    assert pp.v_plus == pytest.approx(2.0, rel=1e-15)


@pytest.mark.parametrize("w, xs", [
    (RosenMorseSuperpotential(c1=-0.4, c2=2.7), np.linspace(-6, 6, 1000)),
    (PoschlTellerSuperpotential(a=5.0, b=1.5, c=1.3), np.linspace(0.05, 12, 1000)),
])
def test_partner_expansion_matches_w_form(w, xs):
    pp = partner_potentials(w, xs)
    assert np.max(np.abs(pp.v_minus - (w.w(xs) ** 2 - w.dw(xs)))) < 1e-12 * 100
    assert np.max(np.abs(pp.v_plus - (w.w(xs) ** 2 + w.dw(xs)))) < 1e-12 * 100


def test_gpt_domain_error():
    w = PoschlTellerSuperpotential(a=5.0, b=1.5, c=1.0)
    with pytest.raises(DomainError):
        partner_potentials(w, -0.5)
    with pytest.raises(DomainError):
        w.w(0.0)


def test_ladder_base_cases():
    assert si_remainder_ladder(RosenMorseSuperpotential(c1=0.3, c2=2.0), 0) == 0.0
    assert si_remainder_ladder(PoschlTellerSuperpotential(a=5, b=1.5, c=1), 0) == 0.0


def test_ladder_rm2_value():
    # V2 = 0, C2 = 2, n = 1: 4 - 1 = 3
    w = RosenMorseSuperpotential(c1=0.0, c2=2.0)
    assert si_remainder_ladder(w, 1) == pytest.approx(3.0, rel=1e-15)


def test_ladder_gpt_value():
    # A - B = 5, c = 1, n = 1: 25 - 9 = 16
    w = PoschlTellerSuperpotential(a=6.5, b=1.5, c=1.0)
    assert si_remainder_ladder(w, 1) == pytest.approx(16.0, rel=1e-15)


def test_ladder_zero_division():
    w = RosenMorseSuperpotential(c1=0.1, c2=2.0)
    with pytest.raises(ZeroDivisionError):
        si_remainder_ladder(w, 2)


@pytest.mark.parametrize("w", [
    RosenMorseSuperpotential(c1=-0.375, c2=4.0),
    PoschlTellerSuperpotential(a=9.0, b=3.0, c=2.0),
])
def test_ladder_telescopes_to_direct_remainder(w):
    # Ebar_n - Ebar_{n-1} equals the x-independent constant R(a_n)
    for n in (1, 2, 3):
        direct = float(partner_potentials(w.shifted(n - 1), 0.37).v_plus
                       - partner_potentials(w.shifted(n), 0.37).v_minus)
        step = si_remainder_ladder(w, n) - si_remainder_ladder(w, n - 1)
        assert step == pytest.approx(direct, abs=1e-12)


def test_rm2_solve_example():
    sol = rm2_solve(10.0, 6.0, 0.0, n_max=3)
    assert sol.w.c2 == 2.0
    assert sol.w.c1 == 0.0
    assert sol.ground_energy == -4.0
    e_bars = [lv.e_bar for lv in sol.spectrum]
    assert e_bars[0] == 0.0
    assert e_bars[1] == pytest.approx(3.0)
    assert e_bars[2] is None  # C2 - 2 = 0 pole
    assert [lv.admissible for lv in sol.spectrum] == [True, True, False, False]


def test_rm2_reality_condition_error():
    with pytest.raises(ValueError, match="1 \\+ 4\\*V1 must be positive"):
        rm2_solve(1.0, -0.26, 0.0)


def test_rm2_no_bound_state_warning():
    with pytest.warns(UserWarning, match="no bound states"):
        rm2_solve(1.0, -0.1, 0.0)


def test_rm2_params_path_is_bit_identical():
    params = ModelParams(omega=3.0, alpha=2.0, gamma=0.1, beta=6.0, m2=4.2145)
    coeffs = rm2_coefficients_from_params(params)
    lit = rm2_solve(coeffs.v0, coeffs.v1, coeffs.v2, n_max=4)
    via = rm2_solve_from_params(params, n_max=4)
    for a, b in zip(lit.spectrum, via.spectrum):
        assert a.e_bar == b.e_bar
        assert a.e_rel == b.e_rel
        assert a.is_real == b.is_real and a.admissible == b.admissible
    assert lit.w == via.w
    assert via.coeffs.sigma == pytest.approx(25.0 / 9.0)


def test_rm2_admissibility_needs_decay_margin():
    # C2 - n > 0 alone is not enough: (C2-n)^2 must beat |V2|/2
    sol = rm2_solve(0.0, 20.0, -3.0, n_max=4)
    assert [lv.admissible for lv in sol.spectrum] == [True, True, True, False, False]


def test_rm2_reality_flag_mirrors_radicand_with_exact_tie():
    # v0 = -3: radicand at n=0 is -3 + 4 - 1 = 0 exactly; ties count as real
    sol = rm2_solve(-3.0, 6.0, 4.0, n_max=0)
    lv = sol.spectrum.levels[0]
    assert rm2_level_radicand(-3.0, 4.0, 2.0, 0) == 0.0
    assert lv.is_real
    assert lv.e_rel == 0.0


def test_rm2_energies_never_clamped():
    sol = rm2_solve(-50.0, 6.0, 0.0, n_max=1)
    lv = sol.spectrum.levels[0]
    assert not lv.is_real
    assert lv.e_rel.real == 0.0
    assert lv.e_rel.imag > 0.0


def test_figure_one_blue_curve_values():
    # caption-literal constants: n=3, alpha=2, omega=3, gamma=0.1, beta=6
    for m2, expected in ((4.2145, 0.0565786), (5.6142, 0.0310165)):
        params = ModelParams(omega=3.0, alpha=2.0, gamma=0.1, beta=6.0, m2=m2)
        sol = rm2_solve_from_params(params, n_max=3)
        lv = sol.spectrum.levels[3]
        assert not lv.is_real
        assert abs(abs(lv.e_rel.imag) - expected) < 1e-3


def test_figure_one_red_curve_real():
    for m2 in np.linspace(4.0, 6.0, 41):
        params = ModelParams(omega=3.0, alpha=2.0, gamma=0.1, beta=6.0, m2=m2)
        sol = rm2_solve_from_params(params, n_max=0)
        assert sol.spectrum.levels[0].is_real


def test_gpt_b_constant():
    for c in (0.5, 1.0, 3.0):
        params = ModelParams(omega=5.0, alpha=1.0, gamma=10.0, beta=0.0,
                             delta=0.5, c=c, m2=1.0, beta_mode=BetaMode.COUPLING)
        _, b = gpt_params_ab(params)
        assert b == 1.5 * c


def test_gpt_level_zero():
    sol = gpt_solve(5.0, 1.5, 1.0, n_max=0, delta=0.5, gamma=10.0, m2=1.3)
    lv = sol.spectrum.levels[0]
    assert lv.e_bar == 0.0
    assert lv.e_rel == pytest.approx(0.5 * abs(10.0 * 1.3), rel=1e-14)


def test_gpt_figure_two_window():
    # radicand of level 3 changes sign near m2 = 1.404; level 0 always real
    def radicand(m2):
        params = ModelParams(omega=5.0, alpha=1.0, gamma=10.0, beta=0.0,
                             delta=0.5, c=3.0, m2=m2, beta_mode=BetaMode.COUPLING)
        a, b = gpt_params_ab(params)
        w = PoschlTellerSuperpotential(a=a, b=b, c=3.0)
        return (10.0 * m2) ** 2 + si_remainder_ladder(w, 3)

    lo, hi = 0.5, 3.0
    assert radicand(lo) < 0.0 < radicand(hi)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if radicand(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    assert abs(0.5 * (lo + hi) - 1.404) <= 0.01


def test_gpt_boundary_violation_warns_and_flags():
    with pytest.warns(UserWarning, match="boundary"):
        sol = gpt_solve(-2.0, 1.5, 1.0, n_max=2)
    assert all(not lv.admissible for lv in sol.spectrum)
    assert all(lv.e_bar is not None for lv in sol.spectrum)


def test_si_check_examples():
    w = RosenMorseSuperpotential(c1=0.0, c2=3.0)
    xs = np.linspace(-8, 8, 1000)
    assert np.max(np.abs(si_check(w, xs))) < 1e-12
    wg = PoschlTellerSuperpotential(a=5.0, b=1.5, c=1.0)
    xs = np.linspace(1e-2, 20, 1000)
    assert np.max(np.abs(si_check(wg, xs))) < 1e-12
    with pytest.raises(ValueError, match="shift undefined"):
        si_check(RosenMorseSuperpotential(c1=0.0, c2=1.0), 0.5)


def test_si_residual_random_parameter_sets():
    rng = np.random.default_rng(12)
    xs_line = np.linspace(-8, 8, 1000)
    xs_half = np.linspace(0.02, 20, 1000)
    for _ in range(50):
        c2 = rng.uniform(1.5, 6.0)
        c1 = rng.uniform(-0.8, 0.8) * c2
        w = RosenMorseSuperpotential(c1=c1, c2=c2)
        assert w.is_normalizable
        res = np.abs(si_check(w, xs_line))
        bound = 1e-10 * (1.0 + np.abs(partner_potentials(w, xs_line).v_plus))
        assert np.all(res <= bound)
        a = rng.uniform(4.0, 12.0)
        b = rng.uniform(0.5, a - 2.5)
        c = rng.uniform(0.5, 2.0)
        wg = PoschlTellerSuperpotential(a=a, b=b, c=c)
        res = np.abs(si_check(wg, xs_half))
        bound = 1e-10 * (1.0 + np.abs(partner_potentials(wg, xs_half).v_plus))
        assert np.all(res <= bound)


def test_ladder_monotone_over_admissible_levels():
    sol = rm2_solve(0.0, 20.0, -3.0, n_max=4)
    adm = [lv.e_bar for lv in sol.spectrum.admissible()]
    assert all(b > a for a, b in zip(adm, adm[1:]))
    solg = gpt_solve(12.0, 3.0, 1.0, n_max=5)
    admg = [lv.e_bar for lv in solg.spectrum.admissible()]
    assert all(b > a for a, b in zip(admg, admg[1:]))


def test_ladder_state_n0_is_ground_state():
    w = RosenMorseSuperpotential(c1=-0.375, c2=4.0)
    grid = Grid(-15.0, 15.0, 2001)
    got = ladder_state(w, 0, grid)
    raw = ground_state_samples(w, grid.points)
    ratio = got / raw
    assert np.max(np.abs(ratio / ratio[1000] - 1.0)) < 1e-12


@pytest.mark.parametrize("n", [1, 2])
def test_ladder_state_overlap_rm2(n):
    v1, v2 = 20.0, -3.0
    w = rm2_solve(0.0, v1, v2, n_max=0).w
    grid = Grid(-15.0, 15.0, 4000)
    lad = ladder_state(w, n, grid)
    closed = rm2_wavefunction(n, v1, v2, grid).samples
    weights = quadrature_weights(grid.n_points + 2, grid.step)[1:-1]
    overlap = abs(float(np.sum(weights * lad * closed)))
    assert overlap > 1.0 - 1e-6


@pytest.mark.parametrize("n", [1, 2])
def test_ladder_state_overlap_gpt(n):
    a, b, c = 12.0, 3.0, 1.0
    w = PoschlTellerSuperpotential(a=a, b=b, c=c)
    grid = Grid(1e-3, 20.0, 4000)
    lad = ladder_state(w, n, grid)
    closed = gpt_wavefunction(n, a, b, c, grid).samples
    weights = quadrature_weights(grid.n_points + 2, grid.step)[1:-1]
    overlap = abs(float(np.sum(weights * lad * closed)))
    assert overlap > 1.0 - 1e-6


def test_ladder_state_coarse_grid_warning():
    w = RosenMorseSuperpotential(c1=0.0, c2=3.0)
    with pytest.warns(UserWarning, match="coarse grid"):
        ladder_state(w, 1, Grid(-10.0, 10.0, 256))
