"""Named self-verification checks behind the ``verify`` CLI command.

Each check compares an implementation route against an independent route
(finite differences, quadrature, a second closed form, an exact value) and
reports a residual with its tolerance.  The suites here use reduced grids so
the whole set stays interactive; the pytest suite runs the full-size
versions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import dirac, hermitization, numerics, susy, wavefunctions
from .model import (BetaMode, ModelParams, derived_constants,
                    evaluate_profile, profile_from_params)


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    tol: float

    def passed(self, scale: float = 1.0) -> bool:
        return self.value <= self.tol * scale


def _params(**kw) -> ModelParams:
    base = dict(omega=3.0, alpha=1.0, gamma=0.2, beta=0.3, m1=0.4, m2=1.5)
    base.update(kw)
    return ModelParams(**base)


def _sample_points(family: str, count: int, rng) -> np.ndarray:
    if family == "cosh":
        return rng.uniform(-3.0, 3.0, count)
    return rng.uniform(0.15, 5.0, count)


def suite_model() -> list[Check]:
    rng = np.random.default_rng(11)
    checks = []
    sol = derived_constants(3.0, 2.0, 0.1, 2.0, BetaMode.COUPLING)
    checks.append(Check("sigma(3,2) equals 25/9", abs(sol.sigma - 25.0 / 9.0), 1e-15))
    checks.append(Check("coupling beta equals -1/6", abs(sol.beta + 1.0 / 6.0), 1e-15))
    for family in ("cosh", "coth"):
        prof = profile_from_params(_params(), family)
        xs = _sample_points(family, 60, rng)
        p = evaluate_profile(prof, xs)
        h = 1e-4
        fd1 = (evaluate_profile(prof, xs + h).a - evaluate_profile(prof, xs - h).a) / (2 * h)
        fd2 = (evaluate_profile(prof, xs + h).a1 - evaluate_profile(prof, xs - h).a1) / (2 * h)
        e1 = float(np.max(np.abs(p.a1 - fd1) / (1.0 + np.abs(fd1))))
        e2 = float(np.max(np.abs(p.a2 - fd2) / (1.0 + np.abs(fd2))))
        checks.append(Check(f"{family}: A' matches finite differences", e1, 1e-6))
        checks.append(Check(f"{family}: A'' matches finite differences", e2, 1e-6))
    sol2 = derived_constants(3.0, 0.5, 0.1, 2.0, BetaMode.COUPLING)
    res = abs(sol2.m1_plus * (sol2.m1_plus + sol2.beta * 2.0) - (0.25 - 0.5 / 3.0))
    checks.append(Check("m1 root solves its quadratic", res, 1e-12))
    return checks


def suite_hermitization() -> list[Check]:
    checks = []
    for family in ("cosh", "coth"):
        xs = (np.linspace(-3.0, 3.0, 100) if family == "cosh"
              else np.linspace(0.3, 6.0, 100))
        for alpha in (0.0, 1.0, 2.0):
            params = _params(alpha=alpha)
            prof = profile_from_params(params, family)
            worst = similarity_residual(params, prof, xs)
            tol = 1e-12 if alpha == 0.0 else 1e-8
            checks.append(Check(
                f"similarity identity ({family}, alpha={alpha:g})", worst, tol))
        params = _params()
        prof = profile_from_params(params, family)
        rng = np.random.default_rng(7)
        xs = _sample_points(family, 500, rng)
        gen = hermitization.schrodinger_potential(params, prof, 0.37, xs, form="generic")
        ans = hermitization.schrodinger_potential(params, prof, 0.37, xs, form="ansatz")
        diff = float(np.max(np.abs(gen - ans) / (1.0 + np.abs(ans))))
        checks.append(Check(f"second-order forms agree ({family})", diff, 1e-10))
        rho = hermitization.rho_weight(params, prof, xs)
        checks.append(Check(f"rho positive ({family})",
                            0.0 if np.all(rho > 0.0) else 1.0, 0.5))
    return checks


def similarity_residual(params: ModelParams, prof, xs: np.ndarray) -> float:
    """Worst pointwise mismatch of H(rho^{-1} xi) against rho^{-1} h(xi) over
    five Gaussian test functions, relative to max |h(xi)|.

    All derivatives of rho^{-1} xi are closed-form, so the residual isolates
    coefficient errors from discretization error.
    """
    big_h = hermitization.nonhermitian_coeffs(params, prof)
    small_h = hermitization.hermitian_coeffs(params, prof)
    centers = np.linspace(xs[0] + 0.5, xs[-1] - 0.5, 5)
    w, al = params.omega, params.alpha
    g_, b_ = prof.gamma, prof.beta
    worst = 0.0
    for x0 in centers:
        sw = 0.7

        def xi(x, x0=x0, sw=sw):
            return np.exp(-((x - x0) / sw) ** 2)

        def xi1(x, x0=x0, sw=sw):
            return xi(x) * (-2.0 * (x - x0) / sw ** 2)

        def xi2(x, x0=x0, sw=sw):
            return xi(x) * (4.0 * (x - x0) ** 2 / sw ** 4 - 2.0 / sw ** 2)

        def rinv(x):
            p = evaluate_profile(prof, x)
            return p.a ** (2.0 * al * b_ / w) * np.exp(2.0 * al * g_ / w * x)

        def gfun(x):
            p = evaluate_profile(prof, x)
            return 2.0 * al / w * (p.b / p.a)

        def dgfun(x):
            p = evaluate_profile(prof, x)
            return 2.0 * al / w * b_ * (p.a2 / p.a - (p.a1 / p.a) ** 2)

        def f(x):
            return rinv(x) * xi(x)

        def f1(x):
            return rinv(x) * (xi1(x) + gfun(x) * xi(x))

        def f2(x):
            return rinv(x) * (xi2(x) + 2.0 * gfun(x) * xi1(x)
                              + (gfun(x) ** 2 + dgfun(x)) * xi(x))

        lhs = hermitization.apply_operator(big_h, f, f1, f2, xs)
        hxi = hermitization.apply_operator(small_h, xi, xi1, xi2, xs)
        rhs = hxi / hermitization.rho_weight(params, prof, xs)
        worst = max(worst, float(np.max(np.abs(lhs - rhs)) / np.max(np.abs(hxi))))
    return worst


def suite_dirac() -> list[Check]:
    checks = []
    rng = np.random.default_rng(5)
    for family in ("cosh", "coth"):
        params = _params()
        prof = profile_from_params(params, family)
        xs = _sample_points(family, 1000, rng)
        e_ref = 1.3
        mass, vr = dirac.dirac_profiles(params, prof, e_ref)
        pot = dirac.complete_potential(mass, vr.v, vr.dv, e_ref)
        bracket = dirac.cancellation_residual(mass, vr, pot.v_i, e_ref, xs)
        checks.append(Check(f"imaginary bracket vanishes ({family})",
                            float(np.max(np.abs(bracket))), 1e-12))
        v24 = dirac.effective_potential_general(mass, vr, e_ref, xs)
        v28 = dirac.effective_potential_ansatz(params, prof, e_ref, xs)
        diff = float(np.max(np.abs(v24 - v28) / (1.0 + np.abs(v28))))
        checks.append(Check(f"effective-potential forms agree ({family})", diff, 1e-10))
    return checks


def suite_susy() -> list[Check]:
    rng = np.random.default_rng(3)
    xs_line = np.linspace(-8.0, 8.0, 1000)
    xs_half = np.linspace(0.02, 20.0, 1000)
    worst_rm2 = 0.0
    worst_gpt = 0.0
    for _ in range(50):
        c2 = rng.uniform(1.5, 6.0)
        c1 = rng.uniform(-0.8, 0.8) * c2
        w = susy.RosenMorseSuperpotential(c1=c1, c2=c2)
        worst_rm2 = max(worst_rm2, float(np.max(np.abs(susy.si_check(w, xs_line)))))
        a = rng.uniform(4.0, 12.0)
        b = rng.uniform(0.5, a - 2.5)
        c = rng.uniform(0.5, 2.0)
        wg = susy.PoschlTellerSuperpotential(a=a, b=b, c=c)
        worst_gpt = max(worst_gpt, float(np.max(np.abs(susy.si_check(wg, xs_half)))))
    checks = [Check("shape-invariance residual (Rosen-Morse)", worst_rm2, 1e-10),
              Check("shape-invariance residual (Poschl-Teller)", worst_gpt, 1e-10)]
    w = susy.RosenMorseSuperpotential(c1=-0.375, c2=4.0)
    tel = max(abs(susy.si_remainder_ladder(w, n) - susy.si_remainder_ladder(w, n - 1)
                  - _direct_remainder(w, n)) for n in (1, 2, 3))
    checks.append(Check("ladder telescoping (Rosen-Morse)", tel, 1e-12))
    rng2 = np.random.default_rng(9)
    xs = rng2.uniform(-3.0, 3.0, 200)
    pp = susy.partner_potentials(w, xs)
    direct_minus = w.w(xs) ** 2 - w.dw(xs)
    direct_plus = w.w(xs) ** 2 + w.dw(xs)
    diff = max(float(np.max(np.abs(pp.v_minus - direct_minus))),
               float(np.max(np.abs(pp.v_plus - direct_plus))))
    checks.append(Check("expanded partners equal W^2 -+ W'", diff, 1e-12))
    return checks


def _direct_remainder(w, n: int) -> float:
    # R(a_n) straight from the shape-invariance constant at one point
    a_prev = w.shifted(n - 1)
    a_n = w.shifted(n)
    x0 = 0.37
    return float(susy.partner_potentials(a_prev, x0).v_plus
                 - susy.partner_potentials(a_n, x0).v_minus)


def suite_wavefunctions() -> list[Check]:
    rng = np.random.default_rng(17)
    worst = 0.0
    for _ in range(200):
        a, b = rng.uniform(-5.0, 5.0, 2)
        z = rng.uniform(-1.0, 1.0)
        n = int(rng.integers(0, 11))
        r = wavefunctions.jacobi_eval(n, a, b, z)
        s = wavefunctions.jacobi_eval_sum(n, a, b, z)
        worst = max(worst, abs(r - s) / max(1.0, abs(s)))
    checks = [Check("jacobi recurrence vs explicit sum", worst, 1e-9)]

    v1, v2 = 12.0, 1.0
    c2 = 0.5 * (-1.0 + math.sqrt(1.0 + 4.0 * v1))
    c1 = v2 / (2.0 * c2)
    xs = np.linspace(-5.0, 5.0, 101)
    phi0, _ = wavefunctions.rm2_state_evaluator(0, v1, v2)
    ratio = phi0(xs) / (np.exp(-c1 * xs) * np.cosh(xs) ** (-c2))
    checks.append(Check("Rosen-Morse n=0 matches exp/cosh form",
                        float(np.max(np.abs(ratio / ratio[0] - 1.0))), 1e-8))
    a, b, c = 5.0, 1.5, 1.0
    xg = np.linspace(0.05, 10.0, 101)
    phig, _ = wavefunctions.gpt_state_evaluator(0, a, b, c)
    ratio_g = phig(xg) / (np.cosh(c * xg) ** (-a / c) * np.sinh(c * xg) ** (b / c))
    checks.append(Check("Poschl-Teller n=0 matches cosh/sinh form",
                        float(np.max(np.abs(ratio_g / ratio_g[0] - 1.0))), 1e-8))

    grid = numerics.Grid(-15.0, 15.0, 2001)
    bad = 0
    for n in range(3):
        st = wavefunctions.rm2_wavefunction(n, v1, v2, grid)
        bad += int(st.nodes != n)
    checks.append(Check("node counts equal level index", float(bad), 0.5))
    return checks


def suite_numerics() -> list[Check]:
    checks = []
    g = numerics.Grid(0.0, math.pi, 1201)
    r = numerics.discretize_and_solve(lambda x: 0.0 * x, g, 2)
    checks.append(Check("box ground eigenvalue", abs(r.eigenvalues[0] - 1.0), 1e-4))
    g2 = numerics.Grid(-12.0, 12.0, 1601)
    r2 = numerics.discretize_and_solve(lambda x: x * x, g2, 2)
    checks.append(Check("oscillator ground eigenvalue", abs(r2.eigenvalues[0] - 1.0), 1e-3))
    w = susy.RosenMorseSuperpotential(c1=0.0, c2=2.0)
    g3 = numerics.Grid(-15.0, 15.0, 1501)
    r3 = numerics.discretize_and_solve(
        lambda x: susy.partner_potentials(w, x).v_minus, g3, 2)
    diff = max(abs(r3.eigenvalues[0]), abs(r3.eigenvalues[1] - 3.0))
    checks.append(Check("Rosen-Morse ladder vs eigensolver", diff, 5e-3))
    gq = numerics.Grid(0.0, math.pi, 999)
    xs = np.concatenate(([0.0], gq.points, [math.pi]))
    nrm = numerics.quadrature_norm(np.sin(xs), gq)
    checks.append(Check("quadrature norm of sin on [0, pi]",
                        abs(nrm - math.sqrt(math.pi / 2.0)), 1e-10))
    return checks


SUITES = {
    "model": suite_model,
    "hermitization": suite_hermitization,
    "dirac": suite_dirac,
    "susy": suite_susy,
    "wavefunctions": suite_wavefunctions,
    "numerics": suite_numerics,
}


def run_suites(names: list[str], tolerance_scale: float = 1.0) -> tuple[list[tuple[str, Check, bool]], bool]:
    results = []
    all_ok = True
    for name in names:
        for check in SUITES[name]():
            ok = check.passed(tolerance_scale)
            all_ok = all_ok and ok
            results.append((name, check, ok))
    return results, all_ok
