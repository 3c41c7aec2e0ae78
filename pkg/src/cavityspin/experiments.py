"""Named experiment templates: one-sequence squeezing, GHZ/W/Dicke/lantern
state preparation, cooperativity sweeps, and the large-N scalability workflow.

Templates are picklable callables mapping a named-parameter dict to a
Protocol, so optimizer restarts can run in worker processes.  Physical
defaults follow the rubidium D2 system: Gamma = 2 pi x 6.06 rad/us,
hyperfine splitting 2 pi x 6800 rad/us, drive Omega = 2 pi x 0.2 rad/us.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cavity import CavityParams, tone_at_index
from .measures import fidelity, wineland_xi2
from .optimize import (
    OptimizationResult,
    OptimizationSpec,
    ParamSpec,
    RefineResult,
    ScalingFit,
    extrapolate_and_refine,
    fit_scaling,
    optimize,
)
from .protocols import (
    Protocol,
    ghz_fidelity_free_phase,
    nontrivial_step,
    run,
    target_state,
    trivial_step,
)

TWO_PI = 2.0 * np.pi
OMEGA_DRIVE = TWO_PI * 0.2          # global rotation rate (rad/us)
GAMMA_RB = TWO_PI * 6.06            # 87Rb D2 linewidth (rad/us)
OMEGA_HF_RB = TWO_PI * 6800.0       # 87Rb ground hyperfine splitting (rad/us)
DELTA_IDEAL = TWO_PI * 650.0        # fixed detuning for the no-loss studies
DEFAULT_KAPPA = TWO_PI * 0.1        # sets the absolute frequency scale only
DAC_MAX = TWO_PI * 50.0             # default per-qubit shift bound
DELTA_MIN, DELTA_MAX = TWO_PI * 50.0, TWO_PI * 3000.0


def ideal_cavity(eta: float = 200.0, delta_e: float = DELTA_IDEAL) -> CavityParams:
    """Single-channel cavity used with lossless barriers (the no-decay
    idealization keeps the physical lineshape; only scattering is dropped)."""
    return CavityParams.from_cooperativity(eta, GAMMA_RB, delta_e, DEFAULT_KAPPA)


def rb_cavity(eta: float = 200.0, delta_e: float = DELTA_IDEAL) -> CavityParams:
    """Two-ground-state rubidium cavity with loss."""
    return CavityParams.from_cooperativity(eta, GAMMA_RB, delta_e, DEFAULT_KAPPA,
                                           omega_hf=OMEGA_HF_RB)


def gaussian_bumps(n_qubits: int, centers, heights, widths) -> np.ndarray:
    """Smooth free-form barrier profile: a sum of Gaussians over the Dicke
    index.  Wide bumps are locally quadratic across the wave packet, so this
    low-dimensional family reaches the twisting regimes of a fully arbitrary
    diagonal; narrow bumps make hard walls."""
    n = np.arange(n_qubits + 1, dtype=float)
    diag = np.zeros(n_qubits + 1)
    for c, h, w in zip(centers, heights, widths):
        diag += h * np.exp(-0.5 * ((n - c) / max(w, 1e-3)) ** 2)
    return diag


# ----------------------------------------------------------------------------
# one-sequence squeezing (trivial rotation, then rotation + barrier)

@dataclass(frozen=True)
class SqueezeTemplate:
    """|psi> = e^{-i (Omega S_x + H_AC) t2} e^{-i Omega S_x t1} |down...down>.

    flavor 'tones' drives n_f frequencies (single/multi-tone or the rubidium
    two-channel mode); flavor 'bumps' uses a free-form diagonal standing in
    for the unlimited-frequency drive.  A 'delta' parameter, when present,
    re-tunes the cavity detuning per evaluation.
    """

    n_qubits: int
    cavity: CavityParams | None
    flavor: str = "tones"            # 'tones' | 'bumps'
    n_components: int = 1
    lossless: bool = True
    two_channel: bool = False
    omega: float = OMEGA_DRIVE

    def __call__(self, params) -> Protocol:
        cavity = self.cavity
        if "delta" in params and cavity is not None:
            cavity = cavity.with_detuning(params["delta"])
        if self.flavor == "bumps":
            diag = gaussian_bumps(
                self.n_qubits,
                [params[f"c{i}"] for i in range(self.n_components)],
                [params[f"h{i}"] for i in range(self.n_components)],
                [params[f"w{i}"] for i in range(self.n_components)],
            )
            barrier = nontrivial_step(self.omega, 0.0, params["t2"],
                                      mode="ideal_diagonal", diagonal=diag)
        else:
            tones = tuple(
                tone_at_index(cavity, params[f"n0_{i}"], params[f"dac_{i}"])
                for i in range(self.n_components)
            )
            mode = ("rb_two_channel" if self.two_channel
                    else "single_tone" if len(tones) == 1 else "multi_tone")
            barrier = nontrivial_step(self.omega, 0.0, params["t2"],
                                      tones=tones, mode=mode)
        steps = (trivial_step(self.omega, 0.0, params["t1"]), barrier)
        return Protocol(self.n_qubits, steps, cavity, self.lossless)


def squeeze_param_specs(n_qubits: int, flavor: str = "tones", n_components: int = 1,
                        optimize_delta: bool = False) -> tuple[ParamSpec, ...]:
    # a pi rotation spans every coherent-state latitude, so t1 past ~pi/Omega
    # only revisits mirror geometries
    specs = [ParamSpec("t1", 0.0, 1.05 * np.pi / OMEGA_DRIVE),
             ParamSpec("t2", 0.0, 20.0)]
    if flavor == "bumps":
        for i in range(n_components):
            specs += [ParamSpec(f"c{i}", 0.0, float(n_qubits)),
                      ParamSpec(f"h{i}", -DAC_MAX, DAC_MAX),
                      ParamSpec(f"w{i}", 0.3, float(n_qubits))]
    else:
        for i in range(n_components):
            specs += [ParamSpec(f"n0_{i}", 0.0, float(n_qubits)),
                      ParamSpec(f"dac_{i}", -DAC_MAX, DAC_MAX)]
    if optimize_delta:
        specs.append(ParamSpec("delta", DELTA_MIN, DELTA_MAX))
    return tuple(specs)


def _squeeze_starts(n_qubits: int, flavor: str, n_components: int,
                    optimize_delta: bool) -> list[dict]:
    """Physics-informed starting points.

    The dominant one-tone basin parks the packet around 40% up the ladder
    with a strong barrier high above it and a short shearing pulse; the
    secondary family is slow twisting under a wide, weak profile.
    """
    n = n_qubits
    starts = []
    if flavor == "bumps":
        for c, h, w, t1, t2 in (
            (0.86 * n, 2.6 * n, 1.5, 1.05, 26.0 / n),       # hard wall, short shear
            (0.86 * n, -2.6 * n, 1.5, 1.05, 26.0 / n),
            (0.45 * n, 4.0, 0.5 * n, 1.25, 17.0),           # wide twisting profile
            (0.45 * n, -4.0, 0.5 * n, 1.25, 17.0),
        ):
            p = {"t1": t1, "t2": t2, "c0": c, "h0": h, "w0": w}
            for i in range(1, n_components):
                p[f"c{i}"] = min(c + 2.0 * i, float(n))
                p[f"h{i}"] = 0.0
                p[f"w{i}"] = 1.5
            starts.append(p)
    else:
        for n0, dac, t1, t2 in (
            (0.855 * n, 2.4 * n, 1.05, 26.0 / n),           # far wall, short shear
            (0.855 * n, -2.4 * n, 1.05, 26.0 / n),
            (0.60 * n, 16.0, 1.25, 12.0),                   # tail twisting
            (0.35 * n, 2.0 * np.sqrt(n), 0.9, 2.0),         # packet-edge wall
        ):
            p = {"t1": t1, "t2": t2, "n0_0": min(n0, float(n)), "dac_0": dac}
            for i in range(1, n_components):
                p[f"n0_{i}"] = min(n0 + 2.0 * i, float(n))
                p[f"dac_{i}"] = 0.0
            starts.append(p)
    if optimize_delta:
        for p in starts:
            p["delta"] = DELTA_IDEAL
    return starts


@dataclass(frozen=True)
class SqueezeOutcome:
    n_qubits: int
    params: dict
    xi2: float
    survival: float
    result: OptimizationResult = field(repr=False)


def make_squeeze_template(n_qubits: int, n_f: int | None = 1, *,
                          cavity: CavityParams | None = None, lossless: bool = True,
                          two_channel: bool = False) -> SqueezeTemplate:
    flavor = "bumps" if n_f is None else "tones"
    n_components = 2 if n_f is None else n_f
    if cavity is None:
        cavity = rb_cavity() if two_channel else ideal_cavity()
    return SqueezeTemplate(n_qubits, cavity, flavor, n_components,
                           lossless, two_channel)


def optimize_squeezing(n_qubits: int, n_f: int | None = 1, *,
                       cavity: CavityParams | None = None, lossless: bool = True,
                       two_channel: bool = False, optimize_delta: bool = False,
                       seed: int = 0, budget: int | None = None,
                       restarts: int | None = None, warm: dict | None = None,
                       workers: int = 1) -> SqueezeOutcome:
    """Globally optimize the one-sequence squeezing protocol.

    n_f = None selects the free-form barrier (unlimited-frequency drive);
    otherwise n_f tones.  warm seeds the search with a previous optimum.
    """
    template = make_squeeze_template(n_qubits, n_f, cavity=cavity,
                                     lossless=lossless, two_channel=two_channel)
    specs = squeeze_param_specs(n_qubits, template.flavor, template.n_components,
                                optimize_delta)
    dim = len(specs)
    if budget is None:
        budget = 3000 * dim
    if restarts is None:
        restarts = 5 * dim
    init = _squeeze_starts(n_qubits, template.flavor, template.n_components,
                           optimize_delta)
    if warm is not None:
        init = [dict(warm)] + init
    spec = OptimizationSpec(params=specs, objective="xi2_loss", budget=budget,
                            restarts=max(restarts, len(init)), seed=seed,
                            init_points=tuple(init))
    result = optimize(spec, template, workers=workers)
    final = run(template(result.best_params))
    sq = wineland_xi2(final)
    return SqueezeOutcome(n_qubits, result.best_params, sq.xi2_loss,
                          sq.survival, result)


def rescale_warm_params(params: dict, n_from: int, n_to: int) -> dict:
    """Carry an optimum to a nearby qubit number: tone indices and bump
    centers/widths ride the ladder proportionally, other knobs transfer."""
    scale = n_to / n_from
    out = {}
    for key, value in params.items():
        if key.startswith("n0_") or (key[0] in "cw" and key[1:].replace("_", "").isdigit()):
            out[key] = value * scale
        else:
            out[key] = value
    return out


def squeezing_curve(n_values, n_f: int | None = 1, *, seed: int = 0,
                    budget: int | None = None, restarts: int | None = None,
                    warm_budget: int | None = None, warm_restarts: int = 6,
                    workers: int = 1, **kwargs) -> list[SqueezeOutcome]:
    """Optimized xi2 over a range of qubit numbers, warm-starting each size
    from the previous optimum (the optimal knobs drift smoothly with N)."""
    outcomes: list[SqueezeOutcome] = []
    warm = None
    for i, n in enumerate(n_values):
        if warm is None:
            out = optimize_squeezing(n, n_f, seed=seed, budget=budget,
                                     restarts=restarts, workers=workers, **kwargs)
        else:
            out = optimize_squeezing(n, n_f, seed=seed + 101 * i,
                                     budget=warm_budget or 6000,
                                     restarts=warm_restarts, warm=warm,
                                     workers=workers, **kwargs)
        outcomes.append(out)
        if i + 1 < len(n_values):
            warm = rescale_warm_params(out.params, n, n_values[i + 1])
    return outcomes


def curve_scaling_fit(outcomes) -> ScalingFit:
    return fit_scaling([(o.n_qubits, o.xi2) for o in outcomes])


def squeeze_records(outcomes) -> list:
    """(N, params, xi2) triples consumed by the extrapolation workflow."""
    return [(o.n_qubits, o.params, o.xi2) for o in outcomes]


@dataclass(frozen=True)
class _SqueezeBuilderFactory:
    """Picklable make_builder for extrapolate_and_refine."""

    n_f: int | None
    lossless: bool
    two_channel: bool
    eta: float
    delta_e: float

    def __call__(self, n_qubits: int) -> SqueezeTemplate:
        cavity = (rb_cavity(self.eta, self.delta_e) if self.two_channel
                  else ideal_cavity(self.eta, self.delta_e))
        return make_squeeze_template(n_qubits, self.n_f, cavity=cavity,
                                     lossless=self.lossless,
                                     two_channel=self.two_channel)


def squeezing_scalability(fit_outcomes, target_n: int, n_f: int | None = 1, *,
                          lossless: bool = True, two_channel: bool = False,
                          eta: float = 200.0, delta_e: float = DELTA_IDEAL,
                          optimize_delta: bool = False, budget: int = 300,
                          seed: int = 0, workers: int = 1) -> RefineResult:
    """Fit the optimized parameters and xi2 found at small N, extrapolate the
    parameters to target_n, and refine locally there."""
    records = squeeze_records(fit_outcomes)
    xi2_fit = curve_scaling_fit(fit_outcomes)
    factory = _SqueezeBuilderFactory(n_f, lossless, two_channel, eta, delta_e)
    flavor = "bumps" if n_f is None else "tones"
    n_components = 2 if n_f is None else n_f
    specs = squeeze_param_specs(target_n, flavor, n_components, optimize_delta)
    return extrapolate_and_refine(records, target_n, factory, specs,
                                  xi2_fit=xi2_fit, budget=budget, seed=seed,
                                  workers=workers)


# ----------------------------------------------------------------------------
# target-state preparation

def ghz_free_phase_infidelity(state: np.ndarray) -> float:
    """1 - best fidelity to a GHZ state over the edge relative phase."""
    return 1.0 - ghz_fidelity_free_phase(state)[0]


@dataclass(frozen=True)
class StatePrepTemplate:
    """n_steps non-trivial rotations, book-ended by free trivial rotations
    (trivial rotations are free of step count).

    flavor 'bumps': each step carries a free-form diagonal of n_bumps
    Gaussians.  flavor 'tone': each step drives one frequency (two-channel
    when the cavity has a hyperfine splitting); 'delta' re-tunes the cavity.
    """

    n_qubits: int
    n_steps: int
    cavity: CavityParams | None = None
    flavor: str = "bumps"
    n_bumps: int = 1
    lossless: bool = True
    two_channel: bool = False
    lead_trivial: bool = True
    trail_trivial: bool = True
    omega: float = OMEGA_DRIVE

    def __call__(self, params) -> Protocol:
        cavity = self.cavity
        if "delta" in params and cavity is not None:
            cavity = cavity.with_detuning(params["delta"])
        steps = []
        if self.lead_trivial:
            steps.append(trivial_step(self.omega, params["phi0"], params["t0"]))
        for j in range(1, self.n_steps + 1):
            if self.flavor == "bumps":
                diag = gaussian_bumps(
                    self.n_qubits,
                    [params[f"c{j}_{i}"] for i in range(self.n_bumps)],
                    [params[f"h{j}_{i}"] for i in range(self.n_bumps)],
                    [params[f"w{j}_{i}"] for i in range(self.n_bumps)],
                )
                steps.append(nontrivial_step(self.omega, params[f"phi{j}"],
                                             params[f"t{j}"], mode="ideal_diagonal",
                                             diagonal=diag))
            else:
                tone = tone_at_index(cavity, params[f"n0_{j}"], params[f"dac_{j}"])
                mode = "rb_two_channel" if self.two_channel else "single_tone"
                steps.append(nontrivial_step(self.omega, params[f"phi{j}"],
                                             params[f"t{j}"], tones=(tone,), mode=mode))
        if self.trail_trivial:
            steps.append(trivial_step(self.omega, params["phi_f"], params["t_f"]))
        return Protocol(self.n_qubits, tuple(steps), cavity, self.lossless)


def state_prep_param_specs(template: StatePrepTemplate, *,
                           optimize_delta: bool = False, t_max: float = 8.0,
                           h_max: float = TWO_PI * 120.0) -> tuple[ParamSpec, ...]:
    n = template.n_qubits
    specs: list[ParamSpec] = []
    if template.lead_trivial:
        specs += [ParamSpec("t0", 0.0, t_max), ParamSpec("phi0", -np.pi, np.pi)]
    for j in range(1, template.n_steps + 1):
        specs += [ParamSpec(f"t{j}", 0.0, t_max), ParamSpec(f"phi{j}", -np.pi, np.pi)]
        if template.flavor == "bumps":
            for i in range(template.n_bumps):
                specs += [ParamSpec(f"c{j}_{i}", 0.0, float(n)),
                          ParamSpec(f"h{j}_{i}", -h_max, h_max),
                          ParamSpec(f"w{j}_{i}", 0.3, 6.0)]
        else:
            specs += [ParamSpec(f"n0_{j}", 0.0, float(n)),
                      ParamSpec(f"dac_{j}", -DAC_MAX, DAC_MAX)]
    if template.trail_trivial:
        specs += [ParamSpec("t_f", 0.0, t_max), ParamSpec("phi_f", -np.pi, np.pi)]
    if optimize_delta:
        specs.append(ParamSpec("delta", DELTA_MIN, DELTA_MAX))
    return tuple(specs)


def _state_prep_starts(name: str, template: StatePrepTemplate,
                       optimize_delta: bool) -> list[dict]:
    """Mechanism-informed seeds.

    W: hard wall two levels up turns the bottom of the ladder into a driven
    two-level system; a pi transfer takes pi/(Omega sqrt(N)).  GHZ: a
    half-transmitting wall at the equator splits the packet during a pi
    rotation (wall height ~ the local ladder coupling Omega N/2).  Dicke/
    lantern: walls between the target levels funnel the packet over steps.
    """
    n = template.n_qubits
    omega = template.omega
    base: dict = {}
    if template.lead_trivial:
        base |= {"t0": 0.0, "phi0": 0.0}
    if template.trail_trivial:
        base |= {"t_f": 0.0, "phi_f": 0.0}
    if optimize_delta:
        base |= {"delta": DELTA_IDEAL}
    starts = []

    def bump_step(j, specs):
        out = {}
        for i in range(template.n_bumps):
            c, h, w = specs[min(i, len(specs) - 1)]
            out |= {f"c{j}_{i}": c, f"h{j}_{i}": h, f"w{j}_{i}": w}
        return out

    if name == "w":
        t_pi = np.pi / (omega * np.sqrt(n))
        if template.flavor == "bumps":
            for h in (TWO_PI * 80.0, TWO_PI * 40.0):
                starts.append(base | {"t1": t_pi, "phi1": 0.0}
                              | bump_step(1, [(2.0, h, 0.8)]))
        else:
            for dac in (TWO_PI * 40.0, -TWO_PI * 40.0):
                starts.append(base | {"t1": t_pi, "phi1": 0.0,
                                      "n0_1": 2.0, "dac_1": dac})
    elif name == "ghz":
        t_pi = np.pi / omega
        if template.flavor == "bumps":
            for h in (omega * n / 2.0, -omega * n / 2.0, omega * n):
                starts.append(base | {"t1": t_pi, "phi1": 0.0}
                              | bump_step(1, [(n / 2.0, h, 1.0)]))
        else:
            for dac in (omega, -omega, 2.0 * omega):
                starts.append(base | {"t1": t_pi, "phi1": 0.0,
                                      "n0_1": n / 2.0, "dac_1": dac})
    elif name in ("dicke_m", "lantern"):
        walls = ([(0.3 * n, 1.0), (0.7 * n, 1.0)] if name == "dicke_m"
                 else [(0.3 * n, 1.0), (0.5 * n, 1.0), (0.7 * n, 1.0)])
        t_half = 0.5 * np.pi / omega
        for h in (omega * n / 2.0, -omega * n / 2.0):
            p = dict(base)
            for j in range(1, template.n_steps + 1):
                p |= {f"t{j}": t_half / template.n_steps, f"phi{j}": 0.0}
                if template.flavor == "bumps":
                    p |= bump_step(j, [(c, h, w) for c, w in walls])
                else:
                    p |= {f"n0_{j}": walls[0][0], f"dac_{j}": h / walls[0][0]}
            starts.append(p)
    return starts


@dataclass(frozen=True)
class StatePrepOutcome:
    n_qubits: int
    target: str
    n_steps: int
    params: dict
    fidelity: float
    survival: float
    result: OptimizationResult = field(repr=False)


def optimize_state_prep(name: str, n_qubits: int, n_steps: int = 1, *,
                        flavor: str = "bumps", n_bumps: int | None = None,
                        cavity: CavityParams | None = None, lossless: bool = True,
                        two_channel: bool = False, optimize_delta: bool = False,
                        free_phase: bool | None = None, target_params: dict | None = None,
                        seed: int = 0, budget: int | None = None,
                        restarts: int | None = None, t_max: float = 8.0,
                        warm: dict | None = None, workers: int = 1) -> StatePrepOutcome:
    """Optimize a non-trivial-step sequence toward a named target state.

    Multi-step sequences are built stage by stage (each new step starts as a
    no-op on top of the previous optimum) and then polished jointly; this
    mirrors how the fidelity-versus-steps curves are generated.
    """
    if n_bumps is None:
        n_bumps = {"ghz": 1, "w": 1, "dicke_m": 2, "lantern": 3}.get(name, 2)
    if free_phase is None:
        free_phase = name == "ghz"
    target = target_state(name, n_qubits, **(target_params or {}))
    objective_fn = ghz_free_phase_infidelity if free_phase else None

    def solve(steps_now: int, init_points: list[dict], seed_now: int,
              budget_now: int, restarts_now: int) -> tuple[StatePrepTemplate, OptimizationResult]:
        template = StatePrepTemplate(n_qubits, steps_now, cavity, flavor, n_bumps,
                                     lossless, two_channel)
        specs = state_prep_param_specs(template, optimize_delta=optimize_delta,
                                       t_max=t_max)
        starts = _state_prep_starts(name, template, optimize_delta) + init_points
        spec = OptimizationSpec(params=specs, objective="infidelity",
                                budget=budget_now, restarts=max(restarts_now, len(starts)),
                                seed=seed_now, init_points=tuple(starts))
        res = optimize(spec, template, target=None if free_phase else target,
                       objective_fn=objective_fn, workers=workers)
        return template, res

    template_probe = StatePrepTemplate(n_qubits, n_steps, cavity, flavor, n_bumps,
                                       lossless, two_channel)
    dim = len(state_prep_param_specs(template_probe, optimize_delta=optimize_delta))
    if budget is None:
        budget = 2200 * dim
    if restarts is None:
        restarts = max(3 * dim // 2, 10)

    staged: list[dict] = [dict(warm)] if warm is not None else []
    if n_steps > 1:
        # grow the sequence one step at a time; each extension starts as the
        # previous optimum with an inactive new step
        prev: list[dict] = []
        for j in range(1, n_steps):
            _, res = solve(j, prev, seed + 7 * j, budget // (2 * n_steps),
                           max(restarts // 2, 6))
            grown = dict(res.best_params)
            grown |= {f"t{j + 1}": 0.0, f"phi{j + 1}": 0.0}
            if flavor == "bumps":
                for i in range(n_bumps):
                    grown |= {f"c{j + 1}_{i}": n_qubits / 2.0,
                              f"h{j + 1}_{i}": 0.0, f"w{j + 1}_{i}": 1.0}
            else:
                grown |= {f"n0_{j + 1}": n_qubits / 2.0, f"dac_{j + 1}": 0.0}
            staged.append(grown)
            prev = [dict(res.best_params)]
    template, result = solve(n_steps, staged, seed, budget, restarts)
    final = run(template(result.best_params))
    fid = (ghz_fidelity_free_phase(final)[0] if free_phase
           else fidelity(final, target))
    return StatePrepOutcome(n_qubits, name, n_steps, result.best_params,
                            float(fid), float(np.vdot(final, final).real), result)


def eta_fidelity_sweep(name: str, eta_values, n_qubits: int = 50, *,
                       seed: int = 0, budget: int = 9000, restarts: int = 12,
                       warm_budget: int = 4000, warm_restarts: int = 5,
                       workers: int = 1) -> list[tuple[float, StatePrepOutcome]]:
    """Monochromatic lossy one-sequence fidelities across cooperativities,
    warm-starting upward in eta (more resolution never hurts the optimum).
    Returns (eta, outcome) pairs in ascending eta order."""
    outcomes = []
    warm = None
    for i, eta in enumerate(sorted(eta_values)):
        out = optimize_state_prep(
            name, n_qubits, 1, flavor="tone", cavity=rb_cavity(eta=eta),
            lossless=False, two_channel=True, optimize_delta=True,
            seed=seed + 13 * i,
            budget=budget if warm is None else warm_budget,
            restarts=restarts if warm is None else warm_restarts,
            warm=warm, workers=workers)
        outcomes.append((float(eta), out))
        warm = dict(out.params)
    return outcomes
