from .BaseController import BaseController
from .PotentialController import PotentialController
from helpers.errors import (
    ConfigError, ConditionViolation, NoBracket, StepFailure,
    NodeCountMismatch, TailNotCertified,
)
from models.enums.ShootOutcomeEnum import ShootOutcomeEnum
from models.enums.ArtifactTypeEnum import ArtifactTypeEnum
from models.schemes.potential import PotentialSpec
from models.schemes.radial import RadialTail, RadialProfile, SolitaryWave, ShootResult
from stores.artifacts import ArtifactStore
from scipy.integrate import solve_ivp
from scipy.optimize import brentq
from scipy.special import kve
from typing import Tuple
import pandas as pd
import numpy as np
import logging
import json
import os

logger = logging.getLogger(__name__)

class RadialSolverController(BaseController):
    """Shooting solver for R'' + (n-1)/r R' - k^2/r^2 R = V'(R) - omega^2 R."""

    def __init__(self, spec: PotentialSpec, settings=None):
        super().__init__(settings=settings)

        self.spec = spec
        self.potential = PotentialController(spec, settings=self.app_settings)

    @staticmethod
    def closed_form_ground_state(omega: float, mass_sq: float, coupling: float) -> Tuple[float, float]:
        """Amplitude A and width kappa of the 1D cubic ground state A sech(kappa x)."""
        kappa = float(np.sqrt(mass_sq - omega ** 2))
        amplitude = float(np.sqrt(2.0 * kappa ** 2 / coupling))
        return amplitude, kappa

    def linear_gap(self, omega: float) -> float:
        """V''(0) - omega^2, the small-amplitude coefficient of the radial equation."""
        return float(self.potential.potential_second_derivative(0.0)) - omega ** 2

    def decay_rate(self, omega: float) -> float:
        gap = self.linear_gap(omega)
        if not gap > 0.0:
            raise ConditionViolation(
                f"S1 fails: omega^2 - mass_sq = {-gap} >= 0, no exponential decay", omega=omega
            )
        return float(np.sqrt(gap))

    @staticmethod
    def validate_indices(n: int, k: int):
        if n not in (1, 2, 3):
            raise ConfigError(f"dimension n={n} is not supported, use 1, 2 or 3")
        if k < 0:
            raise ConfigError(f"angular index k={k} must be non-negative")
        if k >= 1 and n != 2:
            raise ConfigError(f"angular index k={k} requires n=2, got n={n}")

    # series launch at the regular singular point r = 0

    def series_start(self, omega: float, n: int, k: int, s: float, r):
        r = np.asarray(r, dtype=float)
        if k == 0:
            c = self.potential.potential_derivative(s) - omega ** 2 * s
            return s + c * r ** 2 / (2.0 * n), c * r / n

        beta = self.linear_gap(omega) / (4.0 * (k + 1))
        value = s * r ** k * (1.0 + beta * r ** 2)
        slope = s * (k * r ** (k - 1) + (k + 2) * beta * r ** (k + 1))
        return value, slope

    def series_curvature(self, omega: float, n: int, k: int, s: float, r):
        r = np.asarray(r, dtype=float)
        if k == 0:
            c = self.potential.potential_derivative(s) - omega ** 2 * s
            return np.full_like(r, c / n)

        beta = self.linear_gap(omega) / (4.0 * (k + 1))
        leading = s * k * (k - 1) * r ** (k - 2) if k >= 2 else np.zeros_like(r)
        return leading + s * (k + 2) * (k + 1) * beta * r ** k

    def radial_curvature(self, omega: float, n: int, k: int, r, values, slopes):
        """R'' from the radial equation at r > 0."""
        r = np.asarray(r, dtype=float)
        values = np.asarray(values, dtype=float)
        return (
            -self.potential.evaluate_force(values)
            - omega ** 2 * values
            - (n - 1) / r * slopes
            + k ** 2 / r ** 2 * values
        )

    def _radial_rhs(self, omega: float, n: int, k: int):
        mass_sq = self.spec.mass_sq
        omega_sq = omega ** 2
        terms = [(term.coupling, term.exponent - 1) for term in self.spec.terms]
        friction = float(n - 1)
        centrifugal = float(k * k)

        def rhs(r, y):
            value, slope = y[0], y[1]
            modulus = abs(value)
            gain = mass_sq - omega_sq
            for coupling, power in terms:
                gain -= coupling * modulus ** power
            return (slope, gain * value - friction / r * slope + centrifugal / (r * r) * value)

        return rhs

    @staticmethod
    def _shoot_events(guard: float):

        def crossed_zero(r, y):
            return y[0]
        crossed_zero.terminal = True
        crossed_zero.direction = -1

        def diverged(r, y):
            return abs(y[0]) - guard
        diverged.terminal = True
        diverged.direction = 1

        def turned_up(r, y):
            return y[1]
        turned_up.terminal = True
        turned_up.direction = 1

        return [crossed_zero, diverged, turned_up]

    def _has_decayed(self, r: np.ndarray, y: np.ndarray, delta: float, n: int, k: int) -> bool:
        values, slopes = y[0], y[1]
        peak_index = int(np.argmax(values))
        threshold = self.app_settings.RADIAL_DECAY_FRACTION * values[peak_index]

        below = np.flatnonzero(values[peak_index + 1:] <= threshold)
        if below.size == 0:
            return False

        j = peak_index + 1 + below[0]
        if not (values[j] > 0.0 and slopes[j] < 0.0):
            return False

        # a decaying tail has R'/R close to -delta, a crossing has |R'/R| blowing up
        return -slopes[j] / values[j] <= 2.0 * delta + (n + 2 * k) / r[j]

    def shoot(self, omega: float, n: int, k: int, s: float, r_max: float = None) -> ShootResult:

        if not s > 0.0:
            raise ConfigError(f"shooting parameter must be positive, got {s}")

        delta = self.decay_rate(omega)
        r_start = self.app_settings.RADIAL_START_FACTOR / delta
        r_max = r_max if r_max else self.app_settings.RADIAL_RMAX_FACTOR / delta

        value, slope = self.series_start(omega, n, k, s, r_start)
        y0 = np.array([float(value), float(slope)])
        guard = self.app_settings.RADIAL_DIVERGENCE_FACTOR * self.spec.amplitude_cap

        solution = solve_ivp(
            self._radial_rhs(omega, n, k),
            (r_start, r_max),
            y0,
            method=self.app_settings.RADIAL_ODE_METHOD,
            rtol=self.app_settings.RADIAL_ODE_RTOL,
            atol=self.app_settings.RADIAL_ODE_ATOL * max(abs(y0[0]), 1e-300),
            events=self._shoot_events(guard),
            dense_output=True,
        )

        if solution.status == -1:
            raise StepFailure(
                f"radial integration failed at s={s}: {solution.message}", shoot_param=s
            )

        decayed = self._has_decayed(solution.t, solution.y, delta, n, k)

        if solution.status == 1:
            departure = (
                ShootOutcomeEnum.UNDERSHOT if len(solution.t_events[2])
                else ShootOutcomeEnum.OVERSHOT
            )
        else:
            departure = None if decayed else ShootOutcomeEnum.UNDERSHOT

        outcome = ShootOutcomeEnum.DECAYED if decayed else departure

        return ShootResult(
            outcome=outcome,
            departure=departure,
            shoot_param=float(s),
            r_start=float(r_start),
            r_end=float(solution.t[-1]),
            solution=solution.sol,
        )

    def _scan_bracket(self, omega: float, n: int, k: int) -> Tuple[float, float]:
        decades = self.app_settings.RADIAL_SCAN_DECADES + 2.0 * k
        candidates = self.spec.amplitude_cap * np.logspace(
            -decades, 0.0, self.app_settings.RADIAL_SCAN_POINTS
        )

        previous = None
        for s in candidates:
            result = self.shoot(omega, n, k, float(s))
            if result.departure is None:
                return result.shoot_param, result.shoot_param

            if (previous is not None
                    and previous.departure == ShootOutcomeEnum.UNDERSHOT
                    and result.departure == ShootOutcomeEnum.OVERSHOT):
                return previous.shoot_param, result.shoot_param

            previous = result

        raise NoBracket(
            f"no undershot/overshot pair in (0, {self.spec.amplitude_cap}] "
            f"for omega={omega}, n={n}, k={k}",
            omega=omega, n=n, k=k,
        )

    def _bisect(self, omega: float, n: int, k: int, s_lo: float, s_hi: float,
                tol_s: float) -> Tuple[float, float]:

        for _ in range(self.app_settings.RADIAL_MAX_BISECTIONS):
            if s_hi - s_lo <= tol_s * s_hi:
                break

            s_mid = 0.5 * (s_lo + s_hi)
            if s_mid <= s_lo or s_mid >= s_hi:
                break

            result = self.shoot(omega, n, k, s_mid)
            if result.departure is None:
                return s_mid, s_mid
            if result.departure == ShootOutcomeEnum.UNDERSHOT:
                s_lo = s_mid
            else:
                s_hi = s_mid

        return s_lo, s_hi

    def _solve(self, omega: float, n: int, k: int, tol_s: float = None,
               radial_step: float = None) -> SolitaryWave:

        self.validate_indices(n, k)
        report = self.potential.check_conditions(omega, n)
        if not report.s1.holds:
            raise ConditionViolation(
                f"S1 fails: omega^2 - mass_sq = {report.s1.value} >= 0", omega=omega
            )
        if not report.s2.holds:
            raise NoBracket(
                f"S2 fails: V(a) >= omega^2 a^2 / 2 on (0, {self.spec.amplitude_cap}]",
                omega=omega, n=n, k=k,
            )

        tol_s = tol_s if tol_s else self.app_settings.RADIAL_TOL_S

        s_lo, s_hi = self._scan_bracket(omega, n, k)
        logger.info(f"bracket found for omega={omega}, n={n}, k={k}: [{s_lo!r}, {s_hi!r}]")

        s_lo, s_hi = self._bisect(omega, n, k, s_lo, s_hi, tol_s)
        logger.info(f"bisection converged: s={0.5 * (s_lo + s_hi)!r}, width={s_hi - s_lo:.3e}")

        profile = self.build_profile(omega, n, k, s_lo, s_hi, radial_step=radial_step)

        return SolitaryWave(n=n, k=k, omega=omega, profile=profile, spec=self.spec)

    def find_ground_state(self, omega: float, n: int, tol_s: float = None,
                          radial_step: float = None) -> SolitaryWave:
        return self._solve(omega, n, 0, tol_s=tol_s, radial_step=radial_step)

    def find_excited_state(self, omega: float, k: int, tol_s: float = None,
                           radial_step: float = None) -> SolitaryWave:
        if k < 1:
            raise ConfigError(f"excited states need k >= 1, got k={k}")
        return self._solve(omega, 2, k, tol_s=tol_s, radial_step=radial_step)

    def refine_wave(self, wave: SolitaryWave, radial_step: float) -> SolitaryWave:
        """Re-sample a converged wave on another radial grid from its stored bracket."""
        s_lo, s_hi = wave.profile.bracket
        profile = self.build_profile(wave.omega, wave.n, wave.k, s_lo, s_hi, radial_step=radial_step)
        return SolitaryWave(n=wave.n, k=wave.k, omega=wave.omega, profile=profile, spec=self.spec)

    def build_profile(self, omega: float, n: int, k: int, s_lo: float, s_hi: float,
                      radial_step: float = None) -> RadialProfile:

        h = radial_step if radial_step else self.app_settings.RADIAL_STEP
        delta = self.decay_rate(omega)
        s_mid = 0.5 * (s_lo + s_hi)

        lower = self.shoot(omega, n, k, s_lo)
        upper = self.shoot(omega, n, k, s_hi) if s_hi != s_lo else lower
        r_stop = min(lower.r_end, upper.r_end)

        r_grid = h * np.arange(int(np.floor(r_stop / h)) + 1)
        r_grid = r_grid[r_grid <= r_stop]

        inner = r_grid < lower.r_start
        outer = ~inner
        values = np.empty_like(r_grid)
        slopes = np.empty_like(r_grid)
        spread = np.zeros_like(r_grid)

        values[inner], slopes[inner] = self.series_start(omega, n, k, s_mid, r_grid[inner])
        y_lower = lower.evaluate(r_grid[outer])
        y_upper = upper.evaluate(r_grid[outer])
        values[outer] = 0.5 * (y_lower[0] + y_upper[0])
        slopes[outer] = 0.5 * (y_lower[1] + y_upper[1])
        spread[outer] = np.abs(y_upper[0] - y_lower[0])

        peak_index = int(np.argmax(values))
        peak = values[peak_index]
        after = np.arange(r_grid.size) > peak_index

        untrusted = after & (
            (spread > self.app_settings.RADIAL_TRUST_TOLERANCE * np.abs(values))
            | (values <= 0.0)
            | (slopes >= 0.0)
        )
        bad = np.flatnonzero(untrusted)
        trust_end = bad[0] - 1 if bad.size else r_grid.size - 1

        faint = np.flatnonzero(after & (values < self.app_settings.RADIAL_MATCH_FRACTION * peak))
        match_index = min(trust_end, faint[0] if faint.size else r_grid.size - 1)

        if match_index <= peak_index + 4:
            raise TailNotCertified(
                f"numerical range ends at r={r_grid[match_index]:.4g} before the profile decays",
                omega=omega, n=n, k=k,
            )
        splice_fraction = values[match_index] / peak
        ended_by = "trust window" if match_index == trust_end else "match fraction"
        logger.info(
            f"tail spliced at r={r_grid[match_index]:.4g}, amplitude {splice_fraction:.2e} "
            f"of the peak ({ended_by})"
        )
        if splice_fraction > self.app_settings.RADIAL_SPLICE_WARN_FRACTION:
            logger.warning(
                f"tail spliced at amplitude {splice_fraction:.2e} of the peak; "
                f"tighten tol_s or the integrator tolerances"
            )

        keep = slice(0, match_index + 1)
        r_grid, values, slopes = r_grid[keep], values[keep], slopes[keep]

        curvature = np.empty_like(r_grid)
        inner = inner[keep]
        curvature[inner] = self.series_curvature(omega, n, k, s_mid, r_grid[inner])
        curvature[~inner] = self.radial_curvature(
            omega, n, k, r_grid[~inner], values[~inner], slopes[~inner]
        )

        tail = self._fit_tail(r_grid, values, delta, n)
        nodes = self.count_nodes(values)

        profile = RadialProfile(
            r_grid=r_grid,
            values=values,
            derivative=slopes,
            curvature=curvature,
            tail=tail,
            node_count=nodes,
            shoot_param=float(s_mid),
            bracket=(float(s_lo), float(s_hi)),
        )

        if nodes != 0:
            raise NodeCountMismatch(f"converged profile has {nodes} nodes", n=n, k=k)
        if peak > self.spec.amplitude_cap:
            raise NoBracket(
                f"profile peak {peak} exceeds amplitude cap {self.spec.amplitude_cap}", n=n, k=k
            )
        if not self.certify_tail(profile):
            raise TailNotCertified("fitted tail does not bound the numerical range", n=n, k=k)

        return profile

    @staticmethod
    def _tail_window(r_grid: np.ndarray, values: np.ndarray) -> slice:
        """Last decade of the numerical range, searched after the peak."""
        end = r_grid.size - 1
        peak_index = int(np.argmax(values))
        decade = peak_index + 1 + np.flatnonzero(values[peak_index + 1:] <= 10.0 * values[end])
        start = min(decade[0], end - 4) if decade.size else end - 4
        return slice(max(start, peak_index + 1, 1), end + 1)

    def _fit_tail(self, r_grid: np.ndarray, values: np.ndarray, delta: float, n: int) -> RadialTail:
        power = 0.5 * (n - 1)
        window = self._tail_window(r_grid, values)
        r_window = r_grid[window]

        # least squares for log(prefactor) is the mean of the pointwise estimates
        log_prefactor = np.log(values[window]) + power * np.log(r_window) + delta * r_window
        return RadialTail(
            delta=delta,
            prefactor=float(np.exp(np.mean(log_prefactor))),
            match_radius=float(r_grid[-1]),
            power=power,
        )

    def certify_tail(self, profile: RadialProfile) -> bool:
        tail = profile.tail
        if tail is None or not (np.isfinite(tail.prefactor) and tail.prefactor > 0.0):
            return False

        window = self._tail_window(profile.r_grid, profile.values)
        r_window = profile.r_grid[window]
        scaled = np.abs(profile.values[window]) * np.exp(tail.delta * r_window)

        # compared in the scaled frame, the round trip through exp(-delta r) loses an ulp
        bound = max(float(np.max(scaled)), tail.prefactor * tail.match_radius ** (-tail.power))
        if not np.all(scaled <= bound * (1.0 + 1e-12)):
            return False

        # the window must already follow the linearised decay
        normalised = scaled * r_window ** tail.power
        return float(np.max(normalised) / np.min(normalised)) <= 1.25

    def fitted_delta(self, profile: RadialProfile, n: int, k: int = 0) -> float:
        """Decay rate matching R'/R near the match radius to r^(1-n/2) K_nu(delta r)."""
        order = abs(k + 0.5 * (n - 2))
        guess = profile.tail.delta if profile.tail else 1.0

        window = self._tail_window(profile.r_grid, profile.values)
        indices = np.unique(np.linspace(window.start, window.stop - 1, 5).astype(int))

        estimates = []
        for i in indices:
            r = profile.r_grid[i]
            ratio = profile.derivative[i] / profile.values[i]

            def mismatch(rate):
                z = rate * r
                log_slope = -(kve(order - 1.0, z) + kve(order + 1.0, z)) / (2.0 * kve(order, z))
                return rate * log_slope - 0.5 * (n - 2) / r - ratio

            lo, hi = 1e-2 * guess, 1e2 * guess
            if mismatch(lo) * mismatch(hi) > 0.0:
                continue
            estimates.append(brentq(mismatch, lo, hi, xtol=1e-14, rtol=1e-13))

        return float(np.median(estimates)) if estimates else float("nan")

    @staticmethod
    def count_nodes(values) -> int:
        if isinstance(values, RadialProfile):
            values = values.values
        signs = np.sign(np.asarray(values, dtype=float))
        signs = signs[signs != 0.0]
        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def equation_residual(self, wave: SolitaryWave) -> float:
        profile = wave.profile
        if profile.r_grid.size < 5:
            raise ConfigError("residual needs at least five grid points")

        h = profile.spacing
        r = profile.r_grid[1:-1]
        values = profile.values[1:-1]
        slopes = profile.derivative[1:-1]

        # R'' from the stored slope keeps the 1/h^2 amplification off R
        second = (profile.derivative[2:] - profile.derivative[:-2]) / (2.0 * h)
        residual = (
            second
            + (wave.n - 1) / r * slopes
            - wave.k ** 2 / r ** 2 * values
            + wave.omega ** 2 * values
            + self.potential.evaluate_force(values)
        )

        scale = np.max(np.abs(profile.values)) * max(self.spec.mass_sq, self.app_settings.RESIDUAL_FLOOR)
        return float(np.max(np.abs(residual)) / max(scale, self.app_settings.RESIDUAL_FLOOR))

    @staticmethod
    def profile_value(profile: RadialProfile, r):
        r = np.abs(np.asarray(r, dtype=float))
        inside = r <= profile.match_radius
        result = np.zeros_like(r)
        result[inside] = profile.value_spline(r[inside])
        if profile.tail is not None:
            result[~inside] = profile.tail.value(r[~inside])
        return result

    @staticmethod
    def profile_derivative(profile: RadialProfile, r):
        r = np.abs(np.asarray(r, dtype=float))
        inside = r <= profile.match_radius
        result = np.zeros_like(r)
        result[inside] = profile.slope_spline(r[inside])
        if profile.tail is not None:
            result[~inside] = profile.tail.derivative(r[~inside])
        return result

    # persistence

    def save_profile(self, wave: SolitaryWave, store: ArtifactStore):
        profile = wave.profile
        table = pd.DataFrame({
            "r": profile.r_grid,
            "R": profile.values,
            "dR": profile.derivative,
        })
        store.write_table(ArtifactTypeEnum.PROFILE_CSV.value, table)

        sidecar = {
            "n": wave.n,
            "k": wave.k,
            "omega": wave.omega,
            "delta": profile.tail.delta if profile.tail else None,
            "prefactor": profile.tail.prefactor if profile.tail else None,
            "match_radius": profile.match_radius,
            "shoot_param": profile.shoot_param,
            "node_count": profile.node_count,
            "bracket": list(profile.bracket),
            "potential": self.spec.model_dump(mode="json"),
        }
        store.write_json(ArtifactTypeEnum.PROFILE_SIDECAR.value, sidecar)

    @classmethod
    def load_profile(cls, directory: str, settings=None) -> SolitaryWave:
        with open(os.path.join(directory, ArtifactTypeEnum.PROFILE_SIDECAR.value), encoding="utf-8") as handle:
            sidecar = json.load(handle)
        table = pd.read_csv(
            os.path.join(directory, ArtifactTypeEnum.PROFILE_CSV.value), float_precision="round_trip"
        )

        spec = PotentialSpec.model_validate(sidecar["potential"])
        solver = cls(spec, settings=settings)
        n, k, omega = int(sidecar["n"]), int(sidecar["k"]), float(sidecar["omega"])

        r_grid = table["r"].to_numpy(dtype=float)
        values = table["R"].to_numpy(dtype=float)
        slopes = table["dR"].to_numpy(dtype=float)

        curvature = np.empty_like(r_grid)
        at_origin = r_grid == 0.0
        curvature[at_origin] = solver.series_curvature(
            omega, n, k, float(sidecar["shoot_param"]), r_grid[at_origin]
        )
        curvature[~at_origin] = solver.radial_curvature(
            omega, n, k, r_grid[~at_origin], values[~at_origin], slopes[~at_origin]
        )

        tail = None
        if sidecar.get("prefactor") is not None:
            tail = RadialTail(
                delta=float(sidecar["delta"]),
                prefactor=float(sidecar["prefactor"]),
                match_radius=float(sidecar["match_radius"]),
                power=0.5 * (n - 1),
            )

        profile = RadialProfile(
            r_grid=r_grid,
            values=values,
            derivative=slopes,
            curvature=curvature,
            tail=tail,
            node_count=int(sidecar["node_count"]),
            shoot_param=float(sidecar["shoot_param"]),
            bracket=tuple(float(value) for value in sidecar.get("bracket", (0.0, 0.0))),
        )
        return SolitaryWave(n=n, k=k, omega=omega, profile=profile, spec=spec)
