"""Shape-invariance engine and its two concrete potential families.

Factorization conventions (units hbar = 2m = 1):

    A = d/dx + W,   Adag = -d/dx + W,
    v_minus = W^2 - W',   v_plus = W^2 + W',

with ground state exp(-Int W) annihilated by A.  Shape invariance,
v_plus(x; a0) = v_minus(x; a1) + R(a1), telescopes into the exact ladder
Ebar_0 = 0, Ebar_n = sum_{k<=n} R(a_k).

Families:

    hyperbolic Rosen-Morse: W = C1 + C2 tanh x          (whole line)
    generalized Poschl-Teller: W = A tanh cx - B coth cx (half line x > 0)
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError
from .model import ModelParams, sigma_of
from .numerics import Grid, first_derivative, quadrature_weights


@dataclass(frozen=True)
class RosenMorseSuperpotential:
    """W(x) = c1 + c2*tanh(x); normalizable sector needs c2 > 0 and |c1| < c2."""

    c1: float
    c2: float

    @property
    def is_normalizable(self) -> bool:
        return self.c2 > 0.0 and abs(self.c1) < self.c2

    def w(self, x):
        return self.c1 + self.c2 * np.tanh(x)

    def dw(self, x):
        t = np.tanh(x)
        return self.c2 * (1.0 - t * t)

    def shifted(self, k: int = 1) -> "RosenMorseSuperpotential":
        """Parameter ladder a_k: c2 -> c2 - k with c1 rescaled to keep 2*c1*c2 fixed."""
        if k == 0:
            return self
        if self.c2 - k <= 0.0:
            raise ValueError(f"parameter shift undefined: c2 - {k} <= 0")
        return RosenMorseSuperpotential(c1=self.c1 * self.c2 / (self.c2 - k),
                                        c2=self.c2 - k)


@dataclass(frozen=True)
class PoschlTellerSuperpotential:
    """W(x) = a*tanh(c*x) - b*coth(c*x) on x > 0; boundary needs a/c > 0, b/c > 0."""

    a: float
    b: float
    c: float = 1.0

    @property
    def is_normalizable(self) -> bool:
        return self.a / self.c > 0.0 and self.b / self.c > 0.0

    def _check_domain(self, x):
        if np.any(np.asarray(x) <= 0.0):
            raise DomainError("Poschl-Teller superpotential is defined on x > 0")

    def w(self, x):
        self._check_domain(x)
        u = self.c * np.asarray(x, dtype=float)
        return self.a * np.tanh(u) - self.b / np.tanh(u)

    def dw(self, x):
        self._check_domain(x)
        u = self.c * np.asarray(x, dtype=float)
        sech2 = 1.0 / np.cosh(u) ** 2
        csch2 = 1.0 / np.sinh(u) ** 2
        return self.a * self.c * sech2 + self.b * self.c * csch2

    def shifted(self, k: int = 1) -> "PoschlTellerSuperpotential":
        """Parameter ladder a_k = {a - k c, b + k c}."""
        if k == 0:
            return self
        return PoschlTellerSuperpotential(a=self.a - k * self.c,
                                          b=self.b + k * self.c, c=self.c)


Superpotential = RosenMorseSuperpotential | PoschlTellerSuperpotential


@dataclass(frozen=True)
class PartnerPotentials:
    v_minus: np.ndarray | float
    v_plus: np.ndarray | float


def partner_potentials(w: Superpotential, x) -> PartnerPotentials:
    """v_minus = W^2 - W' and v_plus = W^2 + W' in expanded closed form."""
    if isinstance(w, RosenMorseSuperpotential):
        t = np.tanh(x)
        sech2 = 1.0 - t * t
        v2 = 2.0 * w.c1 * w.c2
        common = w.c1 * w.c1 + w.c2 * w.c2 + v2 * t
        v_minus = common - (w.c2 * w.c2 + w.c2) * sech2
        v_plus = common - (w.c2 * w.c2 - w.c2) * sech2
        return PartnerPotentials(v_minus=v_minus, v_plus=v_plus)
    if isinstance(w, PoschlTellerSuperpotential):
        w._check_domain(x)
        u = w.c * np.asarray(x, dtype=float)
        sech2 = 1.0 / np.cosh(u) ** 2
        csch2 = 1.0 / np.sinh(u) ** 2
        d2 = (w.a - w.b) ** 2
        v_minus = d2 + w.b * (w.b - w.c) * csch2 - w.a * (w.a + w.c) * sech2
        v_plus = d2 + w.b * (w.b + w.c) * csch2 - w.a * (w.a - w.c) * sech2
        return PartnerPotentials(v_minus=v_minus, v_plus=v_plus)
    raise TypeError(f"unsupported superpotential: {type(w).__name__}")


def si_remainder_ladder(w: Superpotential, n: int) -> float:
    """Exact level Ebar_n of v_minus via the telescoped shape-invariance sum.

    Rosen-Morse:     V2^2/(4 C2^2) + C2^2 - V2^2/(4 (C2-n)^2) - (C2-n)^2,
                     V2 = 2 C1 C2.
    Poschl-Teller:   (A-B)^2 - (A-B-2cn)^2.

    Both give exactly 0 at n = 0 (empty sum).
    """
    if n < 0:
        raise ValueError("level index must be nonnegative")
    if n == 0:
        return 0.0
    if isinstance(w, RosenMorseSuperpotential):
        if w.c2 - n == 0.0:
            raise ZeroDivisionError(f"ladder hits C2 - n = 0 at n = {n}")
        v2 = 2.0 * w.c1 * w.c2
        return (v2 * v2 / (4.0 * w.c2 * w.c2) + w.c2 * w.c2
                - v2 * v2 / (4.0 * (w.c2 - n) ** 2) - (w.c2 - n) ** 2)
    if isinstance(w, PoschlTellerSuperpotential):
        d0 = w.a - w.b
        return d0 * d0 - (d0 - 2.0 * w.c * n) ** 2
    raise TypeError(f"unsupported superpotential: {type(w).__name__}")


def si_check(w: Superpotential, x):
    """Shape-invariance residual v_plus(x; a0) - v_minus(x; a1) - R(a1); ~ 0."""
    shifted = w.shifted(1)
    r1 = si_remainder_ladder(w, 1)
    return (partner_potentials(w, x).v_plus
            - partner_potentials(shifted, x).v_minus - r1)


def rm2_admissible(n: int, c2: float, v2: float) -> bool:
    """Normalizability of the Rosen-Morse level: C2 - n > 0 and (C2-n)^2 > |V2|/2."""
    return c2 - n > 0.0 and (c2 - n) ** 2 > abs(v2) / 2.0


def gpt_admissible(n: int, a: float, b: float, c: float) -> bool:
    """Normalizability of the Poschl-Teller level: A - B - 2cn > 0 plus boundary."""
    return a - b - 2.0 * c * n > 0.0 and a / c > 0.0 and b / c > 0.0


@dataclass(frozen=True)
class Level:
    """One spectrum entry.  ``e_bar`` is None when the ladder is undefined there."""

    n: int
    e_bar: float | None
    e_rel: complex | None
    is_real: bool
    admissible: bool
    sign: int = +1  # the relativistic energy carries +-; the +| | branch is stored


@dataclass(frozen=True)
class LevelSpectrum:
    levels: tuple[Level, ...]

    def admissible(self) -> list[Level]:
        return [lv for lv in self.levels if lv.admissible]

    def __iter__(self):
        return iter(self.levels)


@dataclass(frozen=True)
class RM2Coeffs:
    """Rosen-Morse well V0 - V1 sech^2 x + V2 tanh x (sigma kept when known)."""

    v0: float
    v1: float
    v2: float
    sigma: float | None = None


@dataclass(frozen=True)
class RM2Solution:
    coeffs: RM2Coeffs
    w: RosenMorseSuperpotential
    spectrum: LevelSpectrum
    ground_energy: float  # lowest eigenvalue of -V1 sech^2 + V2 tanh (no constant)


@dataclass(frozen=True)
class GPTSolution:
    w: PoschlTellerSuperpotential
    spectrum: LevelSpectrum


def rm2_coefficients_from_params(params: ModelParams) -> RM2Coeffs:
    """Map model constants to (V0, V1, V2) for the cosh-profile family.

    V0 = w/2 + g^2 s + 1/4 + ((s b - 1)/m2)^2
    V1 = w/2 - g^2 (m2^2 - s) - 1/4 + (s b - 1)^2/m2^2
    V2 = 2 g (s b - 1)

    These closed forms assume the unit-scale profile; a warning is raised
    when delta != 1 since the coefficients then do not describe the profile
    actually configured.
    """
    if params.delta != 1.0:
        warnings.warn("closed-form well coefficients assume delta = 1; "
                      f"params.delta = {params.delta}", UserWarning, stacklevel=2)
    w, g, m2 = params.omega, params.gamma, params.m2
    s = sigma_of(w, params.alpha)
    b = params.beta_effective
    sb1 = s * b - 1.0
    v0 = w / 2.0 + g * g * s + 0.25 + (sb1 / m2) ** 2
    v1 = w / 2.0 - g * g * (m2 * m2 - s) - 0.25 + sb1 * sb1 / (m2 * m2)
    v2 = 2.0 * g * sb1
    return RM2Coeffs(v0=v0, v1=v1, v2=v2, sigma=s)


def rm2_level_radicand(v0: float, v2: float, c2: float, n: int) -> float:
    """Radicand of the relativistic spectrum, V0 + (C2-n)^2 - V2^2/(4 (C2-n)^2).

    Its sign is exactly the reality condition for level n.
    """
    s = c2 - n
    return v0 + s * s - v2 * v2 / (4.0 * s * s)


def rm2_solve(v0: float, v1: float, v2: float, n_max: int = 5) -> RM2Solution:
    """Exact solution of the Rosen-Morse well V0 - V1 sech^2 x + V2 tanh x.

    C2 = (-1 + sqrt(1 + 4 V1))/2 (positive branch; boundary conditions),
    C1 = V2 / (2 C2) (so that 2 C1 C2 = V2); levels carry the ladder Ebar_n,
    the relativistic energy E_n = +-sqrt(V0 + (C2-n)^2 - V2^2/(4(C2-n)^2))
    (pure imaginary when the radicand is negative, never clamped), the
    reality flag and the normalizability flag.

    Raises
    ------
    ValueError
        when 1 + 4 V1 <= 0 (no real superpotential constant exists).
    """
    disc = 1.0 + 4.0 * v1
    if disc <= 0.0:
        raise ValueError(f"1 + 4*V1 must be positive for real energies to exist "
                         f"(got 1 + 4*V1 = {disc})")
    if v1 <= 0.0:
        warnings.warn("V1 <= 0: the well supports no bound states",
                      UserWarning, stacklevel=2)
    root = math.sqrt(disc)
    c2 = 0.5 * (-1.0 + root)
    if c2 != 0.0:
        c1 = v2 / (2.0 * c2)
    else:
        c1 = 0.0 if v2 == 0.0 else math.inf
    w = RosenMorseSuperpotential(c1=c1, c2=c2)
    ground = -(c1 * c1 + c2 * c2)

    levels = []
    for n in range(n_max + 1):
        try:
            e_bar = si_remainder_ladder(w, n)
        except ZeroDivisionError:
            levels.append(Level(n=n, e_bar=None, e_rel=None,
                                is_real=False, admissible=False))
            continue
        rad = rm2_level_radicand(v0, v2, c2, n)
        is_real = rad >= 0.0
        e_rel = complex(math.sqrt(rad), 0.0) if is_real else complex(0.0, math.sqrt(-rad))
        levels.append(Level(n=n, e_bar=e_bar, e_rel=e_rel, is_real=is_real,
                            admissible=rm2_admissible(n, c2, v2)))
    coeffs = RM2Coeffs(v0=v0, v1=v1, v2=v2, sigma=None)
    return RM2Solution(coeffs=coeffs, w=w, spectrum=LevelSpectrum(tuple(levels)),
                       ground_energy=ground)


def rm2_solve_from_params(params: ModelParams, n_max: int = 5) -> RM2Solution:
    """rm2_solve on the (V0, V1, V2) computed from model constants.

    Delegates to :func:`rm2_solve` on the literal coefficients, so both entry
    points produce bit-identical spectra.
    """
    coeffs = rm2_coefficients_from_params(params)
    sol = rm2_solve(coeffs.v0, coeffs.v1, coeffs.v2, n_max=n_max)
    return replace(sol, coeffs=coeffs)


def gpt_params_ab(params: ModelParams) -> tuple[float, float]:
    """Superpotential constants for the coth-profile family from model constants.

    B = 3c/2 always (the csch^2 strength is fixed by the reduction).  A uses
    the closed-form constant A = c/2 - (E^2 + delta^2 m2^2)/(4c) with
    E^2 = omega/2 - gamma^2 (m2^2 - sigma); see the reality-window demos.
    """
    c = params.c
    s = sigma_of(params.omega, params.alpha)
    e2 = params.omega / 2.0 - params.gamma ** 2 * (params.m2 ** 2 - s)
    a = c / 2.0 - (e2 + params.delta ** 2 * params.m2 ** 2) / (4.0 * c)
    return a, 1.5 * c


def gpt_solve(a: float, b: float, c: float, n_max: int = 5, *,
              delta: float = 1.0, gamma: float = 0.0,
              m2: float = 1.0) -> GPTSolution:
    """Exact solution of the generalized Poschl-Teller family.

    Ladder: Ebar_n = (A-B)^2 - (A-B-2cn)^2.  Relativistic map:
    E_n = +-|delta| sqrt((gamma m2)^2 + Ebar_n), pure imaginary when the
    radicand is negative.  Admissible levels need A - B - 2cn > 0 together
    with the boundary conditions A/c > 0, B/c > 0; violating the boundary
    conditions only flags every level inadmissible (with a warning), the
    spectrum formulas are still evaluated.
    """
    if not c > 0.0:
        raise ValueError(f"c must be positive, got {c}")
    w = PoschlTellerSuperpotential(a=a, b=b, c=c)
    if not w.is_normalizable:
        warnings.warn("boundary conditions violated (A/c and B/c must be "
                      "positive); all levels flagged inadmissible",
                      UserWarning, stacklevel=2)
    g2 = (gamma * m2) ** 2
    levels = []
    for n in range(n_max + 1):
        e_bar = si_remainder_ladder(w, n)
        rad = g2 + e_bar
        is_real = rad >= 0.0
        scale = abs(delta)
        e_rel = (complex(scale * math.sqrt(rad), 0.0) if is_real
                 else complex(0.0, scale * math.sqrt(-rad)))
        levels.append(Level(n=n, e_bar=e_bar, e_rel=e_rel, is_real=is_real,
                            admissible=gpt_admissible(n, a, b, c)))
    return GPTSolution(w=w, spectrum=LevelSpectrum(tuple(levels)))


def gpt_solve_from_params(params: ModelParams, n_max: int = 5) -> GPTSolution:
    a, b = gpt_params_ab(params)
    return gpt_solve(a, b, params.c, n_max=n_max, delta=params.delta,
                     gamma=params.gamma, m2=params.m2)


def ground_state_samples(w: Superpotential, x: np.ndarray) -> np.ndarray:
    """exp(-Int W) in closed form for either family (unnormalized)."""
    if isinstance(w, RosenMorseSuperpotential):
        return np.exp(-w.c1 * x) * np.cosh(x) ** (-w.c2)
    if isinstance(w, PoschlTellerSuperpotential):
        w._check_domain(x)
        u = w.c * np.asarray(x, dtype=float)
        return np.cosh(u) ** (-w.a / w.c) * np.sinh(u) ** (w.b / w.c)
    raise TypeError(f"unsupported superpotential: {type(w).__name__}")


def ladder_state(w: Superpotential, n: int, grid: Grid) -> np.ndarray:
    """Level-n state by n applications of Adag = -d/dx + W on the ground state.

    Starts from the closed-form ground state of the n-times shifted
    parameters and climbs with 4th-order numeric differentiation, so the
    result is an independent construction of the closed-form wavefunction
    (up to normalization).  Keep n small (<= 5); differencing error grows
    with each application.
    """
    if n < 0:
        raise ValueError("level index must be nonnegative")
    if grid.n_points < 512:
        warnings.warn("coarse grid: ladder differentiation error may dominate",
                      UserWarning, stacklevel=2)
    x = grid.points
    g = ground_state_samples(w.shifted(n), x)
    for k in range(n - 1, -1, -1):
        wk = w.shifted(k)
        g = -first_derivative(g, grid.step) + wk.w(x) * g
    weights = quadrature_weights(grid.n_points + 2, grid.step)[1:-1]
    norm = math.sqrt(float(np.sum(weights * g * g)))
    if norm == 0.0:
        return g
    g = g / norm
    i_max = int(np.argmax(np.abs(g)))
    return g if g[i_max] >= 0.0 else -g
