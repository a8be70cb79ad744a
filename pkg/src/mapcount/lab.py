"""Floating-point validation of the lattice identities.

Everything here is plumbing around one classical route: moments of the
exponential weight -> Cholesky of the Hankel matrix -> norms and recurrence
coefficients.  That route is catastrophically ill-conditioned in double
precision, so all quadrature and linear algebra run in mpmath software
floats (>= 30 significant digits; default far above), and the ladder is cut
at the first Cholesky pivot that loses too much mass.

With actual recurrence coefficients in hand, the differential-difference
identities (string/Freud, Volterra, second-order Toda, and the hexic
first-order Toda) become checkable statements: derivatives are replaced by
central finite differences and the residuals are reported.  Asymptotic
statements are probed by order-ratio tests rather than limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
from mpmath import mp, mpf

from .coeffs import CoeffTable, golden_coeff_table
from .exact import binom_int, c_nu
from .freud import gen_freud
from .hypergeom import count_general, count_sphere, count_torus


class PrecisionLoss(Exception):
    pass


class IllConditioned(Exception):
    pass


DPS = 60  # working precision (decimal digits) for all lab computations


# ---------------------------------------------------------------------------
# quadrature: one tanh-sinh node set, all moments from the same weight values
# ---------------------------------------------------------------------------

def _ts_nodes(level: int, prec: int) -> list[tuple[mpf, mpf]]:
    """tanh-sinh nodes/weights for the open interval (-1, 1)."""
    with mp.workprec(prec + 40):
        h = mpf(2) ** (-level)
        pi2 = mp.pi / 2
        nodes = []
        k = 0
        while True:
            t = k * h
            sh = mp.sinh(t)
            x = mp.tanh(pi2 * sh)
            w = h * pi2 * mp.cosh(t) / mp.cosh(pi2 * sh) ** 2
            if w < mpf(10) ** (-(prec // 3 + 30)) and k > 0:
                break
            nodes.append((x, w))
            if k > 0:
                nodes.append((-x, w))
            k += 1
            if k > 20 * 2 ** level:
                raise PrecisionLoss("tanh-sinh node generation ran away")
    return nodes


_NODE_CACHE: dict[tuple[int, int], list[tuple[mpf, mpf]]] = {}


def _nodes(level: int, prec: int) -> list[tuple[mpf, mpf]]:
    key = (level, prec)
    if key not in _NODE_CACHE:
        _NODE_CACHE[key] = _ts_nodes(level, prec)
    return _NODE_CACHE[key]


def _cutoff(nu: int, N: int, k_max: int, digits: int) -> mpf:
    """Upper integration limit: past it the largest-moment integrand is
    negligible at the working precision (the u-term only helps)."""
    drop = mpf(digits + 15) * mp.log(10)
    z_peak = mp.sqrt(mpf(max(k_max, 1)) / N)
    z = z_peak + 1
    while k_max * mp.log(z / z_peak) - N * (z ** 2 - z_peak ** 2) / 2 > -drop:
        z += 1
    return z


def moments(nu: int, N: int, u, count: int, dps: int = DPS,
            level: int = 8) -> list[mpf]:
    """Even moments m_0, m_2, ..., m_{2(count-1)} of exp(-N(z^2/2+u z^2nu/2nu)).

    u = 0 uses the Gaussian closed form.  Otherwise a single tanh-sinh rule
    is evaluated once and reused for every power.  The previous (halved)
    level is compared as a convergence guard: its error must already sit at
    half the working digits, which puts the fine level's error near the
    working precision itself (tanh-sinh error decays quadratically in
    digits per level).
    """
    if count < 1:
        raise ValueError("need count >= 1")
    with mp.workdps(dps + 15):
        if u == 0:
            root = mp.sqrt(2 * mp.pi / N)
            out = []
            df = mpf(1)
            for k in range(count):
                if k > 0:
                    df *= 2 * k - 1
                out.append(df * root / mpf(N) ** k)
            return out
        u = mpf(u)
        z_hi = _cutoff(nu, N, 2 * (count - 1), dps)
        half = z_hi / 2

        def accumulate(nodes):
            acc = [mpf(0)] * count
            for x, w in nodes:
                z = half * (x + 1)
                weight = w * half * mp.exp(-N * (z ** 2 / 2
                                                 + u * z ** (2 * nu) / (2 * nu)))
                z2 = z * z
                p = mpf(1)
                for k in range(count):
                    if k > 0:
                        p *= z2
                    acc[k] += weight * p
            return [2 * a for a in acc]  # even integrand, doubled half-line

        got = accumulate(_nodes(level, mp.prec))
        check = accumulate(_nodes(level - 1, mp.prec))
        tol = mpf(10) ** (-(dps // 2))
        for a, b in zip(got, check):
            if abs(a - b) > tol * abs(a):
                raise PrecisionLoss(
                    f"quadrature not converged for nu={nu} N={N} u={u} "
                    f"count={count}: refine the level or lower count")
        return got


# ---------------------------------------------------------------------------
# moments -> norms and recurrence coefficients
# ---------------------------------------------------------------------------

@dataclass
class LatticeState:
    """Numerically computed lattice data at one parameter point.

    h[k] are the orthogonality norms for the u-side weight; calR[n] = h[n]/h[n-1]
    are its recurrence coefficients (calR[0] = 0), and R[n] = u^(1/nu) calR[n]
    are the sigma-side ones (R is None at u = 0, where sigma is undefined).
    """

    nu: int
    N: int
    u: mpf
    sigma: Optional[mpf]
    h: list[mpf]
    calR: list[mpf]
    R: Optional[list[mpf]]

    @property
    def n_max(self) -> int:
        return len(self.calR) - 1


def recurrence_extract(moment_list: Sequence[mpf], nu: int, N: int, u,
                       dps: int = DPS,
                       pivot_floor: float = 1e-20) -> LatticeState:
    """Norms and recurrence coefficients via Cholesky of the Hankel matrix.

    The ladder stops at the first diagonal pivot smaller than pivot_floor
    relative to the raw diagonal entry (all significant digits cancelled);
    asking past that point raises IllConditioned.
    """
    count = len(moment_list)
    n_rows = count  # Hankel needs m_0..m_{2(n_rows-1)}
    with mp.workdps(dps + 15):
        m = [mpf(0)] * (2 * n_rows - 1)
        for k, val in enumerate(moment_list):
            m[2 * k] = mpf(val)
        L = [[mpf(0)] * n_rows for _ in range(n_rows)]
        h: list[mpf] = []
        for i in range(n_rows):
            stop = False
            for jj in range(i + 1):
                s = m[i + jj]
                for k in range(jj):
                    s -= L[i][k] * L[jj][k]
                if jj == i:
                    if s <= 0 or s < mpf(pivot_floor) * m[2 * i]:
                        stop = True
                        break
                    L[i][i] = mp.sqrt(s)
                    h.append(s)
                else:
                    L[i][jj] = s / L[jj][jj]
            if stop:
                break
        n_max = len(h) - 1
        if n_max < 1:
            raise IllConditioned("no stable recurrence coefficients at all")
        calR = [mpf(0)] + [h[n] / h[n - 1] for n in range(1, n_max + 1)]
        if u == 0:
            return LatticeState(nu, N, mpf(0), None, h, calR, None)
        u = mpf(u)
        sigma = u ** (-mpf(1) / nu)
        scale = u ** (mpf(1) / nu)
        R = [scale * r for r in calR]
        return LatticeState(nu, N, u, sigma, h, calR, R)


def build_state(nu: int, N: int, u, n_max: int, dps: int = DPS) -> LatticeState:
    """Moments plus extraction in one call, demanding n_max stable levels."""
    ms = moments(nu, N, u, n_max + 1, dps=dps)
    state = recurrence_extract(ms, nu, N, u, dps=dps)
    if state.n_max < n_max:
        raise IllConditioned(
            f"only {state.n_max} stable levels at nu={nu} N={N} u={u}, "
            f"need {n_max}; raise the working precision")
    return state


# ---------------------------------------------------------------------------
# residual report
# ---------------------------------------------------------------------------

@dataclass
class ResidualReport:
    nu: int
    N: int
    u: float
    n_window: tuple[int, int]
    freud: float
    volterra: float
    toda2: float
    hexic_toda1: Optional[float]

    def rows(self) -> list[tuple[str, float]]:
        out = [("freud", self.freud), ("volterra", self.volterra),
               ("toda2", self.toda2)]
        if self.hexic_toda1 is not None:
            out.append(("hexic_toda1", self.hexic_toda1))
        return out

    def max_residual(self) -> float:
        return max(v for _, v in self.rows())


def _freud_value(fn_terms, calR, n: int) -> mpf:
    total = mpf(0)
    for shifts, mult in fn_terms:
        p = mpf(mult)
        for s in shifts:
            idx = n + s
            p *= calR[idx] if idx >= 0 else mpf(0)
        total += p
    return total


def _sum_log_h(state: LatticeState, n: int) -> mpf:
    return mp.fsum(mp.log(state.h[k]) for k in range(n))


def _f_sigma(state: LatticeState, n: int) -> mpf:
    """sigma-side free energy at lattice level n, up to sigma-independent terms."""
    return _sum_log_h(state, n) / n ** 2 - mp.log(state.sigma) / 2


def residuals(state: LatticeState, h_u: float = 1e-6, h_sigma: float = 1e-5,
              dps: int = DPS) -> ResidualReport:
    """Max absolute residuals of the lattice identities around n = N.

    Derivatives in u and sigma are central differences with the given steps;
    the states at the offset parameters are rebuilt from fresh quadrature.
    """
    nu, N, u = state.nu, state.N, state.u
    if u <= 0:
        raise ValueError("residual check needs u > 0")
    if state.n_max < 6:
        raise ValueError("need n_max >= 6")
    with mp.workdps(dps + 15):
        n_lo = max(nu + 1, N // 2)
        n_hi = min(3 * N // 2, state.n_max - max(nu - 1, 2))
        if n_hi < n_lo:
            raise ValueError("stable range too small for the residual window")
        fn = gen_freud(nu)
        fn_terms = sorted(fn.term_multiplicities().items())

        # u-offset states for the u-side lattice equation
        hu = mpf(h_u)
        st_up = build_state(nu, N, u + hu, state.n_max, dps=dps)
        st_dn = build_state(nu, N, u - hu, state.n_max, dps=dps)

        # sigma-offset states for the Toda identities
        hs = mpf(h_sigma)
        sig = state.sigma
        st_sp = build_state(nu, N, (sig + hs) ** (-nu), state.n_max, dps=dps)
        st_sm = build_state(nu, N, (sig - hs) ** (-nu), state.n_max, dps=dps)

        freud_max = mpf(0)
        volterra_max = mpf(0)
        toda2_max = mpf(0)
        toda1_max = mpf(0) if nu == 3 else None
        for n in range(n_lo, n_hi + 1):
            x = mpf(n) / N
            res = state.calR[n] + u * _freud_value(fn_terms, state.calR, n) - x
            freud_max = max(freud_max, abs(res))

            dcal = (st_up.calR[n] - st_dn.calR[n]) / (2 * hu)
            rhs = state.calR[n] / (2 * nu * u) * (
                N * (state.calR[n + 1] - state.calR[n - 1]) - 2)
            volterra_max = max(volterra_max, abs(dcal - rhs))

            d2f = (_f_sigma(st_sp, n) - 2 * _f_sigma(state, n)
                   + _f_sigma(st_sm, n)) / hs ** 2
            rhs2 = mpf(N) ** 2 / (4 * n ** 2) * state.R[n] * (
                state.R[n + 1] + state.R[n - 1])
            toda2_max = max(toda2_max, abs(d2f - rhs2))

            if nu == 3:
                d1f = (_f_sigma(st_sp, n) - _f_sigma(st_sm, n)) / (2 * hs)
                R = state.R
                rhs1 = -mpf(N) ** 2 / (2 * n ** 2) * (
                    mpf(n) / N * R[n]
                    + R[n + 1] * R[n] * R[n - 1]
                    * (R[n + 2] + R[n + 1] + R[n] + R[n - 1] + R[n - 2]))
                toda1_max = max(toda1_max, abs(d1f - rhs1))

        return ResidualReport(
            nu, N, float(u), (n_lo, n_hi), float(freud_max),
            float(volterra_max), float(toda2_max),
            None if toda1_max is None else float(toda1_max))


# ---------------------------------------------------------------------------
# expansion checks against the exact series data
# ---------------------------------------------------------------------------

def _legged_coeff_exact(nu: int, g: int, j: int,
                        tables: dict[int, CoeffTable]) -> Fraction:
    """Exact x=1 series coefficient of the recurrence expansion at (g, j)."""
    if j == 0:
        return Fraction(1 if g == 0 else 0)
    if g == 0:
        kap = -binom_int(2 * nu - 1, nu)
        return Fraction(kap) ** j * Fraction(
            math.factorial(nu * j),
            math.factorial(j) * math.factorial(j * (nu - 1) + 1))
    count = count_general("two-legged", g, nu, j, tables[g])
    return Fraction((-1) ** j * count, (2 * nu) ** j * math.factorial(j))


def _free_coeff_exact(nu: int, g: int, j: int) -> Fraction:
    """Exact x=1 series coefficient of the free-energy expansion at (g, j)."""
    if j == 0:
        return Fraction(0)
    count = count_sphere(nu, j) if g == 0 else count_torus(nu, j)
    return Fraction((-1) ** j * count, (2 * nu) ** j * math.factorial(j))


def _r0_exact_series(nu: int, u_exact: Fraction, j_max: int) -> Fraction:
    return sum((_legged_coeff_exact(nu, 0, j, {}) * u_exact ** j
                for j in range(j_max + 1)), Fraction(0))


def _r0_mp(nu: int, u: mpf) -> mpf:
    kap = binom_int(2 * nu - 1, nu)
    r = mpf(1)
    for _ in range(200):
        f = r + kap * u * r ** nu - 1
        df = 1 + kap * u * nu * r ** (nu - 1)
        step = f / df
        r -= step
        if abs(step) < mpf(10) ** (-(mp.dps - 5)):
            return r
    raise PrecisionLoss("planar root iteration did not converge")


@dataclass
class ExpansionReport:
    nu: int
    u: float
    j_max: int
    N_list: list[int]
    r_errors: list[float]       # |calR_N(x=1) - truncated series|, per N
    f_errors: list[float]       # |free energy - truncated series|, per N
    r_ratios: list[float]       # err(2N)/err(N) where both N, 2N present
    f_ratios: list[float]
    r_order: float              # expected ratio 2^-(2g_max+2) for g_max = 2
    f_order: float              # expected ratio for g_max = 1
    f0_closed_vs_series: float  # |closed planar free energy - series|
    f0_tail_term: float         # magnitude of the last series term kept


def expansion_check(nu: int, u, N_list: Sequence[int], j_max: int = 60,
                    dps: int = DPS) -> ExpansionReport:
    """Compare lattice data against truncated genus expansions at x = 1.

    The recurrence side is truncated at genus 2 and the free energy at genus
    1, so the errors should scale like N^-6 and N^-4; doubling N should
    shrink them by about 64 and 16.  The u-truncation (j <= j_max) must be
    taken deep enough that it is invisible next to those errors, which
    restricts u to the interior of the series' disc of convergence.
    """
    with mp.workdps(dps + 15):
        u_exact = Fraction(float(u))
        um = mpf(float(u))
        a_tables = {g: golden_coeff_table("a", g) for g in (1, 2)}

        r_series = {}
        for g in (0, 1, 2):
            total = sum((_legged_coeff_exact(nu, g, j, a_tables) * u_exact ** j
                         for j in range(j_max + 1)), Fraction(0))
            r_series[g] = total
        f_series = {}
        for g in (0, 1):
            total = sum((_free_coeff_exact(nu, g, j) * u_exact ** j
                         for j in range(j_max + 1)), Fraction(0))
            f_series[g] = total

        r_errors = []
        f_errors = []
        for N in N_list:
            state = build_state(nu, N, um, N + 2, dps=dps)
            r_trunc = mp.fsum(mpf(r_series[g].numerator) / r_series[g].denominator
                              / mpf(N) ** (2 * g) for g in (0, 1, 2))
            r_errors.append(float(abs(state.calR[N] - r_trunc)))

            gauss = [mp.log(math.factorial(k)) + mp.log(2 * mp.pi / N) / 2
                     - k * mp.log(N) for k in range(N)]
            f_lattice = (mp.fsum(mp.log(state.h[k]) - gauss[k]
                                 for k in range(N))) / N ** 2
            f_trunc = mp.fsum(mpf(f_series[g].numerator) / f_series[g].denominator
                              / mpf(N) ** (2 * g) for g in (0, 1))
            f_errors.append(float(abs(f_lattice - f_trunc)))

        r_ratios = [r_errors[i + 1] / r_errors[i]
                    for i in range(len(N_list) - 1)
                    if N_list[i + 1] == 2 * N_list[i] and r_errors[i] > 0]
        f_ratios = [f_errors[i + 1] / f_errors[i]
                    for i in range(len(N_list) - 1)
                    if N_list[i + 1] == 2 * N_list[i] and f_errors[i] > 0]

        # closed planar free energy against its series truncation
        eta = Fraction((nu - 1) ** 2, 4 * nu * (nu + 1))
        kappa = Fraction(3 * (nu + 1), nu - 1)
        r0 = _r0_mp(nu, um)
        f0_closed = (mpf(eta.numerator) / eta.denominator * (r0 - 1)
                     * (r0 - mpf(kappa.numerator) / kappa.denominator)
                     + mp.log(r0) / 2)
        f0_series = f_series[0]
        f0_diff = abs(f0_closed - mpf(f0_series.numerator) / f0_series.denominator)
        tail = _free_coeff_exact(nu, 0, j_max) * u_exact ** j_max
        return ExpansionReport(
            nu, float(u), j_max, list(N_list), r_errors, f_errors,
            r_ratios, f_ratios, 2.0 ** -6, 2.0 ** -4,
            float(f0_diff), float(abs(mpf(tail.numerator) / tail.denominator)))
