"""Acceptance criteria, one test per numbered criterion.

Each test prints a single PASS/FAIL line with the measured value so the run
doubles as a report.  Thresholds and configurations follow the stated
criteria; where a criterion leaves the configuration open (the dt-scaling
sub-check of criterion 6), the choice and its rationale are recorded in the
engineering notes.
"""

import math
import time

import numpy as np
import pytest

from nlsdp import (
    ComplexField,
    EvolutionConfig,
    Grid,
    ModelParams,
    action_gradient,
    classify_regime,
    equilibrium_profile,
    evolve,
    find_c0,
    gradient_flow,
    hamiltonian,
    interior_residual,
    kaminaga_ohta_profile,
    orbital_distance,
    sample,
    shoot_ivp,
    smallest_eigenvalue,
    standing_wave_phase_path,
    standing_wave_profile,
    trace_orbit,
)
from nlsdp.minimize import discrete_action, estimate_m, random_bump
from nlsdp.phaseplane import PhasePoint, unstable_manifold_seed
from nlsdp.stability import perturbation_experiment, standing_wave_check
from conftest import EQ_PARAMS, FIG_OMEGA, FIG_PARAMS, random_admissible_tuples


def report(criterion, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {criterion}: {detail}")
    assert ok, f"criterion {criterion} failed: {detail}"


def oracle_exists(p, lam1, lam2, Z, omega):
    if omega < 0.0:
        if not (Z > 0.0 and lam1 <= 0.0 and lam2 < 0.0):
            return False
        threshold = -p * lam1**2 / ((p + 1.0) ** 2 * lam2)
        return threshold < -omega < Z**2 / 4.0
    if omega == 0.0:
        return Z > 0.0 and lam1 < 0.0 and lam2 < 0.0 and 1.0 < p < 5.0
    return False


def test_criterion_1_regime_gate():
    start = time.perf_counter()
    rng = np.random.default_rng(1)
    n = 10_000
    ps = rng.uniform(1.01, 6.0, n)
    l1 = rng.uniform(-3.0, 0.5, n)
    l2 = rng.uniform(-3.0, 0.5, n)
    zs = rng.uniform(-2.0, 4.0, n)
    oms = rng.uniform(-3.0, 1.0, n)
    oms[::7] = 0.0
    wrong = sum(
        classify_regime(ModelParams(p=ps[i], lambda1=l1[i], lambda2=l2[i], Z=zs[i]), oms[i]).exists
        != oracle_exists(ps[i], l1[i], l2[i], zs[i], oms[i])
        for i in range(n)
    )
    elapsed = time.perf_counter() - start
    report(
        1,
        wrong == 0 and elapsed < 1.0,
        f"{wrong}/{n} misclassifications on randomized sweep, {elapsed:.2f}s (< 1 s)",
    )


def test_criterion_2_profile_stationarity():
    start = time.perf_counter()
    worst = {"interior": 0.0, "jump": 0.0, "first_integral": 0.0}
    for params, omega in random_admissible_tuples(20, seed=2):
        rep = interior_residual(standing_wave_profile(params, omega), half_width=10.0, spacing=1e-3)
        worst["interior"] = max(worst["interior"], rep.max_interior_residual)
        worst["jump"] = max(worst["jump"], rep.jump_residual)
        worst["first_integral"] = max(worst["first_integral"], rep.first_integral_max)
    elapsed = time.perf_counter() - start
    ok = (
        worst["interior"] <= 1e-6
        and worst["jump"] <= 1e-11
        and worst["first_integral"] <= 1e-10
        and elapsed < 10.0
    )
    report(
        2,
        ok,
        f"20 tuples: interior {worst['interior']:.2e} (<=1e-6), jump {worst['jump']:.2e} "
        f"(<=1e-11), first integral {worst['first_integral']:.2e} (<=1e-10), {elapsed:.1f}s (< 10 s)",
    )


def test_criterion_3_oracle_equivalence():
    start = time.perf_counter()
    worst_shoot = 0.0
    for params, omega in random_admissible_tuples(10, seed=3):
        prof = standing_wave_profile(params, omega)
        res = shoot_ivp(params, omega, x_max=10.0, h_ode=1e-4)
        worst_shoot = max(worst_shoot, float(np.max(np.abs(res.psi - prof.eval(res.x)))))
    ko_params = ModelParams(3.0, 0.0, -1.0, 2.0)
    prof = standing_wave_profile(ko_params, -0.25)
    xs = np.linspace(0.0, 20.0, 2001)
    worst_ko = max(abs(float(prof.eval(x)) - kaminaga_ohta_profile(5.0, -0.25, 2.0, x)) for x in xs)
    elapsed = time.perf_counter() - start
    ok = worst_shoot <= 1e-7 and worst_ko <= 1e-10 and elapsed < 30.0
    report(
        3,
        ok,
        f"shoot sup-dev {worst_shoot:.2e} (<=1e-7) over 10 tuples, explicit-profile dev "
        f"{worst_ko:.2e} (<=1e-10), {elapsed:.1f}s (< 30 s)",
    )


def test_criterion_4_peak_consistency():
    worst = 0.0
    for params, omega in random_admissible_tuples(20, seed=4):
        prof = standing_wave_profile(params, omega)
        worst = max(worst, abs(find_c0(params, omega) - float(prof.eval(0.0))))
    ko = find_c0(ModelParams(3.0, 0.0, -1.0, 2.0), -0.25)
    ko_err = abs(ko - 2.25**0.25)
    ok = worst <= 1e-9 and ko_err <= 1e-12
    report(
        4,
        ok,
        f"|find_c0 - phi(0)| worst {worst:.2e} (<=1e-9); lambda1=0 root error {ko_err:.2e} (<=1e-12)",
    )


def test_criterion_5_discrete_spectrum():
    grid = Grid.from_spacing(40.0, 1e-2)
    ev = smallest_eigenvalue(grid, 2.0)
    err = abs(ev + 1.0)
    report(5, err <= 1e-3, f"smallest eigenvalue {ev:.6f}, |ev + 1| = {err:.2e} (<=1e-3)")


def test_criterion_6_conservation():
    start = time.perf_counter()
    grid = Grid.from_spacing(40.0, 1e-2)
    prof = standing_wave_profile(FIG_PARAMS, FIG_OMEGA)
    u0 = sample(grid, prof.eval)
    config = EvolutionConfig(grid=grid, dt=1e-3, t_final=10.0, record_every=250)
    traj = evolve(u0, config, FIG_PARAMS, reference=prof)
    q = [d.charge for d in traj.diagnostics]
    e = [d.energy for d in traj.diagnostics]
    q_drift = max(abs(x - q[0]) for x in q) / q[0]
    e_drift = max(abs(x - e[0]) for x in e) / abs(e[0])

    # O(dt^2) scaling of the splitting error, measured where neither the
    # dt-independent quadrature floor nor the dt=4e-3 high-frequency
    # split-step resonance pollutes the signal (see engineering notes)
    fine = Grid.from_spacing(40.0, 5e-3)
    u0f = sample(fine, prof.eval)

    def drift(dt):
        cfg = EvolutionConfig(grid=fine, dt=dt, t_final=1.0, record_every=100)
        tr = evolve(u0f, cfg, FIG_PARAMS)
        es = [d.energy for d in tr.diagnostics]
        return max(abs(x - es[0]) for x in es)

    d4, d2, d1 = drift(4e-3), drift(2e-3), drift(1e-3)
    r42, r21 = d4 / d2, d2 / d1
    elapsed = time.perf_counter() - start
    ok = (
        q_drift <= 1e-11
        and e_drift <= 1e-6
        and abs(r42 - 4.0) <= 1.2
        and abs(r21 - 4.0) <= 1.2
        and elapsed < 120.0
    )
    report(
        6,
        ok,
        f"charge drift {q_drift:.2e} (<=1e-11), energy drift {e_drift:.2e} (<=1e-6), "
        f"dt-ratios {r42:.2f}, {r21:.2f} (4 +- 1.2), {elapsed:.0f}s (< 2 min)",
    )


def test_criterion_7_standing_wave_invariance():
    grid = Grid.from_spacing(40.0, 1e-2)
    prof = standing_wave_profile(FIG_PARAMS, FIG_OMEGA)
    config = EvolutionConfig(grid=grid, dt=1e-3, t_final=10.0, record_every=250)
    traj = evolve(sample(grid, prof.eval), config, FIG_PARAMS, reference=prof)
    sw_worst = max(d.orbital_dist for d in traj.diagnostics)

    eq_grid = Grid.from_spacing(400.0, 1e-2)
    eq_prof = equilibrium_profile(EQ_PARAMS)
    eq_config = EvolutionConfig(grid=eq_grid, dt=1e-3, t_final=10.0, record_every=1000)
    eq_traj = evolve(sample(eq_grid, eq_prof.eval), eq_config, EQ_PARAMS, reference=eq_prof)
    eq_worst = max(d.orbital_dist for d in eq_traj.diagnostics)

    ok = sw_worst <= 1e-4 and eq_worst <= 1e-3
    report(
        7,
        ok,
        f"standing-wave orbit dist {sw_worst:.2e} (<=1e-4); equilibrium (L=400) {eq_worst:.2e} (<=1e-3)",
    )


def test_criterion_8_orbital_stability():
    start = time.perf_counter()
    prof = standing_wave_profile(FIG_PARAMS, FIG_OMEGA)
    grid = Grid.from_spacing(40.0, 1e-2)
    config = EvolutionConfig(grid=grid, dt=1e-3, t_final=20.0, record_every=500)
    floor = standing_wave_check(FIG_PARAMS, prof, config).max_orbital_dist
    dists = []
    ok = True
    details = [f"floor {floor:.2e}"]
    for eps in (1e-3, 1e-2, 1e-1):
        rep = perturbation_experiment(FIG_PARAMS, prof, eps, "bump", 0, config)
        dists.append(rep.max_orbital_dist)
        ok = ok and rep.max_orbital_dist <= 5.0 * eps + floor
        details.append(f"eps={eps:g}: {rep.max_orbital_dist:.2e} (<= {5.0 * eps + floor:.2e})")
    # nondecreasing within floor noise
    ok = ok and all(b >= a - floor for a, b in zip(dists, dists[1:]))

    # equilibrium analogue (algebraic tail: L=200 keeps runtime in budget)
    eq_prof = equilibrium_profile(EQ_PARAMS)
    eq_grid = Grid.from_spacing(200.0, 1e-2)
    eq_config = EvolutionConfig(grid=eq_grid, dt=1e-3, t_final=20.0, record_every=1000)
    eq_floor = standing_wave_check(EQ_PARAMS, eq_prof, eq_config).max_orbital_dist
    eq_dists = []
    for eps in (1e-3, 1e-2, 1e-1):
        rep = perturbation_experiment(EQ_PARAMS, eq_prof, eps, "bump", 0, eq_config)
        eq_dists.append(rep.max_orbital_dist)
        ok = ok and rep.max_orbital_dist <= 5.0 * eps + eq_floor
        details.append(
            f"eq eps={eps:g}: {rep.max_orbital_dist:.2e} (<= {5.0 * eps + eq_floor:.2e})"
        )
    ok = ok and all(b >= a - eq_floor for a, b in zip(eq_dists, eq_dists[1:]))
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 600.0
    report(8, ok, "; ".join(details) + f"; {elapsed:.0f}s (< 10 min)")


def test_criterion_9_variational_characterization():
    grid = Grid.from_spacing(40.0, 0.025)
    prof = standing_wave_profile(FIG_PARAMS, FIG_OMEGA)
    phi = sample(grid, prof.eval)
    rng = np.random.default_rng(9)
    v0 = ComplexField(grid, phi.values + 0.1 * random_bump(grid, rng).values)
    res = gradient_flow(v0, FIG_PARAMS, FIG_OMEGA, tol=1e-6, max_iter=500_000)
    dist, _ = orbital_distance(res.minimizer, phi)
    ref = discrete_action(phi, FIG_PARAMS, FIG_OMEGA)
    rel = abs(res.value - ref) / abs(ref)

    best, _ = estimate_m(
        FIG_PARAMS, FIG_OMEGA, restarts=4, grid=Grid.from_spacing(40.0, 0.05), seed=0, tol=1e-5
    )

    # central-difference gradient check
    g = action_gradient(phi, FIG_PARAMS, FIG_OMEGA).values
    w = np.exp(-(grid.nodes**2) / 3.0) * (0.6 - 0.3j)
    pairing = grid.spacing * float(np.sum(np.real(g * np.conj(w))))
    epsfd = 1e-6
    plus = discrete_action(ComplexField(grid, phi.values + epsfd * w), FIG_PARAMS, FIG_OMEGA)
    minus = discrete_action(ComplexField(grid, phi.values - epsfd * w), FIG_PARAMS, FIG_OMEGA)
    fd_rel = abs((plus - minus) / (2.0 * epsfd) - pairing) / max(1.0, abs(pairing))

    ok = res.converged and dist <= 1e-3 and rel <= 1e-6 and best < 0.0 and fd_rel <= 1e-6
    report(
        9,
        ok,
        f"flow converged={res.converged}, orbit dist {dist:.2e} (<=1e-3), action rel err "
        f"{rel:.2e} (<=1e-6), infimum estimate {best:.4f} (< 0), gradient FD check {fd_rel:.2e} (<=1e-6)",
    )


def test_criterion_10_phase_plane():
    # Hamiltonian conservation along a traced orbit
    seed = unstable_manifold_seed(FIG_PARAMS, FIG_OMEGA)
    pts = trace_orbit(FIG_PARAMS, FIG_OMEGA, seed, arclength=1.5, h=1e-3)
    values = [hamiltonian(FIG_PARAMS, FIG_OMEGA, q) for q in pts]
    ham_drift = max(abs(v - values[0]) for v in values)

    # composite path vs the closed-form (phi, +-phi') curve, compared at
    # equal amplitudes
    prof = standing_wave_profile(FIG_PARAMS, FIG_OMEGA)
    portrait = standing_wave_phase_path(FIG_PARAMS, FIG_OMEGA, h=1e-3)
    xs = np.linspace(0.0, 25.0, 40_001)
    phis = prof.eval(xs)
    dphis = prof.derivative(xs)
    c0 = find_c0(FIG_PARAMS, FIG_OMEGA)
    worst = 0.0
    for branch, sign in ((portrait.unstable, +1.0), (portrait.stable, -1.0)):
        for q in branch[:: max(1, len(branch) // 500)]:
            if q.phi < 1e-4 * c0 or q.phi > phis[0]:
                continue
            dref = sign * np.interp(q.phi, phis[::-1], (-dphis)[::-1])
            worst = max(worst, abs(q.dphi - dref))
    ok = ham_drift <= 1e-8 and worst <= 1e-5
    report(
        10,
        ok,
        f"Hamiltonian drift {ham_drift:.2e} (<=1e-8); path vs closed-form curve {worst:.2e} (<=1e-5)",
    )
