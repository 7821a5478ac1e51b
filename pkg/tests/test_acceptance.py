"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Statistical thresholds marked "pilot-frozen" were fixed once from
independent pilot ensembles (scripts/pilot_thresholds.py reproduces them)
and are never recalibrated here; certificate checks are exact.
"""

import itertools
import math
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from momentcert.boundedness import (
    BoundednessCertificate,
    UnboundednessWitness,
    decide_species_boundedness,
    explore_accessible,
    unboundedness_threshold,
    classify,
)
from momentcert.certificates import (
    BlowupCertificate,
    MomentCertificate,
    NotCertified,
    check_theorem1,
    check_theorem2,
    check_theorem3,
)
from momentcert.feasibility import solve, species_boundedness_system
from momentcert.network import weighted_drift
from momentcert.polynomial import parse_polynomial
from momentcert.simulation import (
    blowup_ode_floor,
    ensemble_grid_states,
    estimate_moments,
    integrate_forward_equations,
    moment_stats_from_states,
    weighted_norm_means,
)

from conftest import (
    make_conservation,
    make_death,
    make_dimer,
    make_ex1,
    make_ex2,
    make_ex3,
    make_ex4,
    make_ex5,
)

pytestmark = pytest.mark.usefixtures("warm_kernel")

# pilot-frozen simulation thresholds (see scripts/pilot_thresholds.py):
#   catalytic-pair second moment at t=5 from (10,10), pilot ensemble
#   n=10^4 seed 424242: mean 16.3314, SE 0.23605 -> mean + 5*SE
EX4_M2_THRESHOLD = 17.5116
#   blow-up system from (10,10), event cap 10^6: pilot censored fraction
#   at t=2 was 1.000 for every pilot seed; frozen conservative threshold
EX5_CENSORED_AT_2 = 0.9


@contextmanager
def criterion(number, description, limit_s):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} FAIL: {description}")
        raise
    elapsed = time.perf_counter() - t0
    if elapsed >= limit_s:
        print(f"ACCEPTANCE {number} FAIL (runtime {elapsed:.2f}s >= {limit_s}s)")
        raise AssertionError(f"criterion {number} exceeded {limit_s}s")
    print(f"ACCEPTANCE {number} PASS ({elapsed:.2f}s < {limit_s}s): {description}")


def test_criterion_1_frozen_start_yet_unbounded():
    with criterion(1, "frozen accessible set with growth witnesses", 1.0):
        net = make_ex1()
        sample = explore_accessible(net, (1, 1))
        assert sample.states == frozenset({(1, 1)})
        assert sample.frontier_exhausted
        nu = net.nu()
        for i in (0, 1):
            out = decide_species_boundedness(nu, i)
            assert isinstance(out, UnboundednessWitness)
            assert out.w == (1, 1)
            assert out.gain(nu) == (1, 1)
            assert out.verify(nu)


def test_criterion_2_conservation_pair():
    with criterion(2, "conserved pair: certificates and exact SSA norm", 10.0):
        net = make_conservation()
        nu = net.nu()
        for i in (0, 1):
            out = decide_species_boundedness(nu, i)
            assert isinstance(out, BoundednessCertificate)
            assert out.alpha == (1, 1)
            assert out.verify(nu)
        # the canonical weighting is accepted by the verifier for both
        assert BoundednessCertificate((1, 1), frozenset({0, 1})).verify(nu)
        grid = np.linspace(0.0, 2.0, 6)
        stats = estimate_moments(net, (3, 2), grid, (1, 2), 20_000, 8112)
        assert np.all(stats.row(1) == 5.0)
        assert np.all(stats.stderr_row(1) == 0.0)
        assert np.all(stats.row(2) == 25.0)
        assert np.all(stats.stderr_row(2) == 0.0)
        assert np.all(stats.censored_frac == 0.0)


def test_criterion_3_example2_classification_and_t1():
    with criterion(3, "critical partition and feasible critical weighting", 1.0):
        net = make_ex2()
        part = classify(net)
        assert part.critical_species == (0, 1)
        assert part.critical_reactions == (0,)
        cert = check_theorem1(net, part)
        assert isinstance(cert, MomentCertificate) and cert.verified
        # the worked example's gamma=(1,3) passes the verifier: gamma.nuc = -1
        gamma = (1, 3)
        dot = sum(gamma[i] * part.nuc[i][0] for i in range(2))
        assert dot == -1 <= 0
        assert all(g >= 1 for g in gamma)


def test_criterion_4_birth_death_dichotomy():
    with criterion(4, "birth/death order dichotomy across m=1,2,3", 1.0):
        net1 = make_ex3(1)
        part1 = classify(net1)
        assert part1.critical_reactions == ()
        vac = check_theorem1(net1, part1)
        assert isinstance(vac, MomentCertificate)

        net2 = make_ex3(2)
        assert isinstance(check_theorem1(net2, classify(net2)), NotCertified)
        t2 = check_theorem2(net2)
        assert isinstance(t2, MomentCertificate)
        assert t2.gamma == (1,)
        assert weighted_drift(net2, t2.gamma) == parse_polynomial("-x1^2", 1)

        net3 = make_ex3(3)
        assert isinstance(check_theorem1(net3, classify(net3)), NotCertified)
        t2_3 = check_theorem2(net3)
        assert isinstance(t2_3, NotCertified)
        assert t2_3.status == "INAPPLICABLE"


def test_criterion_5_example4_t2_with_moment_threshold():
    with criterion(5, "linear-drift certificate and bounded second moment", 120.0):
        net = make_ex4()
        cert = check_theorem2(net)
        assert isinstance(cert, MomentCertificate) and cert.verified
        gf = weighted_drift(net, cert.gamma)
        assert gf.coefficient((1, 1)) <= 0
        if cert.gamma == (1, 1):
            assert gf == parse_polynomial("-2*x1*x2", 2)
        grid = np.linspace(0.0, 5.0, 11)
        stats = estimate_moments(net, (10, 10), grid, (1, 2), 10_000, 20250809)
        assert stats.censored_frac.max() == 0.0
        assert stats.row(2)[-1] <= EX4_M2_THRESHOLD  # pilot-frozen


def test_criterion_6_example5_blowup():
    with criterion(6, "blow-up certificate with simulation corroboration", 300.0):
        net = make_ex5()
        part = classify(net)
        assert isinstance(check_theorem1(net, part), NotCertified)
        assert isinstance(check_theorem2(net), NotCertified)
        cert = check_theorem3(net, (10, 10))
        assert isinstance(cert, BlowupCertificate) and cert.verified
        assert cert.gamma == (2, 3)
        assert cert.alpha_exp == 2
        assert cert.r_min == 2

        grid = np.linspace(0.0, 2.0, 41)
        states, censor, _ = ensemble_grid_states(
            net, (10, 10), grid, 200, 1528, event_cap=10**6
        )
        stats = moment_stats_from_states(states, censor, grid, (1,), 1528)
        # censoring must dominate by t=2 (pilot-frozen threshold)
        assert stats.censored_frac[-1] >= EX5_CENSORED_AT_2

        # the certified drift bound gamma^T F >= C |x|_1^2 forces, via the
        # comparison argument in the gamma-weighted norm, the empirical
        # gamma-norm mean to dominate phi' = (C/max gamma^2) phi^2 from
        # phi(0) = gamma^T x0 while no trajectory is censored
        gmax = float(max(cert.gamma))
        c_gamma = float(cert.C) / gmax**cert.alpha_exp
        phi0 = sum(float(g) * v for g, v in zip(cert.gamma, (10, 10)))
        floor = blowup_ode_floor(c_gamma, cert.alpha_exp, phi0, grid)
        means, counts = weighted_norm_means(
            states, censor, [float(g) for g in cert.gamma]
        )
        free = counts == 200
        assert free[0] and free.sum() >= 3
        assert np.all(means[free] >= floor[free] - 1e-9)


def test_criterion_7_exclusivity_on_random_matrices():
    with criterion(7, "exclusivity and oracle agreement on 200 matrices", 30.0):
        rng = np.random.default_rng(424241)
        for _ in range(200):
            n = int(rng.integers(1, 5))
            m = int(rng.integers(1, 5))
            nu = tuple(
                tuple(int(v) for v in rng.integers(-3, 4, size=m))
                for _ in range(n)
            )
            for i in range(n):
                out = decide_species_boundedness(nu, i)
                is_cert = isinstance(out, BoundednessCertificate)
                is_wit = isinstance(out, UnboundednessWitness)
                assert is_cert != is_wit
                assert out.verify(nu)
                if _oracle_bounded(nu, i):
                    assert is_cert, f"oracle certificate exists for nu={nu} i={i}"


def _oracle_bounded(nu, i, box=6):
    n, m = len(nu), len(nu[0])
    for alpha in itertools.product(range(box + 1), repeat=n):
        if alpha[i] >= 1 and all(
            sum(alpha[k] * nu[k][j] for k in range(n)) <= 0 for j in range(m)
        ):
            return True
    return False


def test_criterion_8_ssa_kolmogorov_agreement():
    with criterion(8, "SSA vs forward-equation oracle on bounded systems", 120.0):
        cases = [
            (make_conservation(), (3, 2), (5, 5)),
            (make_death(), (6,), (6,)),
            (make_dimer(), (4, 1), (6, 3)),
        ]
        grid = np.array([0.2, 0.5, 1.0, 1.5, 2.0])
        for net, x0, box in cases:
            dists = integrate_forward_equations(net, x0, 2.0, box, t_eval=grid)
            for d in dists:
                assert abs(d.mass_balance() - 1.0) <= 1e-9
            stats = estimate_moments(net, x0, grid, (1, 2), 20_000, 60220)
            assert stats.censored_frac.max() == 0.0
            for order in (1, 2):
                for g in range(len(grid)):
                    oracle = dists[g].moment(order)
                    se = stats.stderr_row(order)[g]
                    diff = abs(stats.row(order)[g] - oracle)
                    # the 1e-6 floor absorbs integrator tolerance when the
                    # sample is degenerate (conserved quantities, SE = 0)
                    assert diff <= 4 * se + 1e-6 * (1 + abs(oracle))


def test_criterion_9_threshold_state_realizes_growth():
    with criterion(9, "threshold state realizes stoichiometric growth", 10.0):
        net = make_ex2()
        nu = net.nu()
        out = decide_species_boundedness(nu, 0)
        assert isinstance(out, UnboundednessWitness)
        xbar, seq = unboundedness_threshold(nu, out.w)
        assert seq.verify()
        assert xbar == (0, 2)
        x0 = tuple(v + 5 for v in xbar)
        sample = explore_accessible(net, x0, max_states=100_000, max_coord=25)
        assert max(s[0] for s in sample.states) > 20
