"""Exact stochastic simulation and a truncated forward-equation oracle.

The simulator is the Gillespie direct method: in state x the total rate
a_0(x) = sum_j a_j(x) drives an exponential waiting time and reaction j
fires with probability a_j(x)/a_0(x).  Ensemble moment estimation runs a
numba kernel that records states on a fixed time grid; single-trajectory
runs keep the full jump path in pure Python, optionally with exact
rational propensity evaluation.

Randomness comes from numpy's counter-based Philox generator with
per-trajectory SeedSequence spawn keys, so ensembles are a pure function
of (inputs, master_seed) regardless of execution order, and the kernel
and the pure-Python path consume the identical uniform stream.

Censoring (an event-cap hit) is first class: grid statistics report the
censored fraction and exclude censored-by-t trajectories from means,
which are therefore biased low whenever censoring is present.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numba import njit
from scipy.integrate import solve_ivp
from scipy.sparse import coo_matrix

DEFAULT_EVENT_CAP = 1_000_000

STATUS_TIME_REACHED = 0
STATUS_ABSORBED = 1
STATUS_CENSORED = 2
_STATUS_NEED_UNIFORMS = 3
_STATUS_OVERFLOW = 4
_STATUS_NEGATIVE = 5
_STATUS_IMPROPER = 6

STATUS_NAMES = {
    STATUS_TIME_REACHED: "TIME_REACHED",
    STATUS_ABSORBED: "ABSORBED",
    STATUS_CENSORED: "CENSORED",
}

# float64 stays exact for integer-valued products up to 2^53; beyond that
# the kernel escalates the trajectory to exact rational evaluation.
_EXACT_FLOAT_LIMIT = float(2**53)
_NEG_CLAMP = 1e-9

_FIRST_BLOCK = 256
_MAX_BLOCK = 1 << 18


class SimulationModelError(RuntimeError):
    """Negative propensity at a visited state: the model is invalid there."""

    def __init__(self, state, reaction):
        super().__init__(
            f"negative propensity for reaction {reaction!r} at state {tuple(state)}"
        )
        self.state = tuple(state)
        self.reaction = reaction


def trajectory_seed(master_seed, index):
    """Deterministic, order-independent per-trajectory seed."""
    return np.random.SeedSequence(master_seed, spawn_key=(index,))


def _generator(seed):
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return np.random.Generator(np.random.Philox(seed))


def compile_propensities(net):
    """Flatten propensity terms into arrays for the jitted kernel.

    Returns (columns M x N, coefs, exponents T x N, starts M+1); terms are
    ordered by graded-lex within each reaction so the float evaluation
    order is reproducible and mirrored by the pure-Python path.
    """
    n = net.n_species
    cols = np.array([r.column for r in net.reactions], dtype=np.int64).reshape(
        net.n_reactions, n
    )
    coefs = []
    expos = []
    starts = [0]
    for r in net.reactions:
        for exps, coef in r.propensity.sorted_terms():
            coefs.append(float(coef))
            expos.append(exps)
        starts.append(len(coefs))
    coefs = np.array(coefs, dtype=np.float64)
    expos = (
        np.array(expos, dtype=np.int64)
        if expos
        else np.zeros((0, n), dtype=np.int64)
    )
    return cols, coefs, expos, np.array(starts, dtype=np.int64)


@njit(cache=True)
def _ssa_grid_step(
    state, cols, coefs, expos, starts, t_grid, uniforms, ctrl_f, ctrl_i,
    out_grid, event_cap, t_end,
):
    """Advance one trajectory until done or out of uniforms.

    ctrl_f = [t_now]; ctrl_i = [uniform_pos, events, grid_pos].  Grid rows
    below grid_pos are filled with the state holding at that grid time.
    """
    n_reactions = cols.shape[0]
    n_species = cols.shape[1]
    n_grid = t_grid.shape[0]
    props = np.empty(n_reactions, dtype=np.float64)
    while True:
        a0 = 0.0
        for j in range(n_reactions):
            aj = 0.0
            max_term = 0.0
            for k in range(starts[j], starts[j + 1]):
                v = coefs[k]
                for i in range(n_species):
                    e = expos[k, i]
                    for _ in range(e):
                        v *= state[i]
                av = abs(v)
                if av > max_term:
                    max_term = av
                aj += v
            if max_term > _EXACT_FLOAT_LIMIT or abs(aj) > _EXACT_FLOAT_LIMIT:
                return _STATUS_OVERFLOW
            if aj < 0.0:
                if -aj <= _NEG_CLAMP * max_term:
                    aj = 0.0
                else:
                    return _STATUS_NEGATIVE
            props[j] = aj
            a0 += aj
        if a0 == 0.0:
            g = ctrl_i[2]
            while g < n_grid:
                for i in range(n_species):
                    out_grid[g, i] = state[i]
                g += 1
            ctrl_i[2] = g
            return STATUS_ABSORBED
        if ctrl_i[0] + 2 > uniforms.shape[0]:
            return _STATUS_NEED_UNIFORMS
        u1 = uniforms[ctrl_i[0]]
        u2 = uniforms[ctrl_i[0] + 1]
        ctrl_i[0] += 2
        t_next = ctrl_f[0] - math.log(1.0 - u1) / a0
        g = ctrl_i[2]
        while g < n_grid and t_grid[g] < t_next:
            for i in range(n_species):
                out_grid[g, i] = state[i]
            g += 1
        ctrl_i[2] = g
        if t_next > t_end:
            return STATUS_TIME_REACHED
        target = u2 * a0
        chosen = -1
        cum = 0.0
        for j in range(n_reactions):
            cum += props[j]
            if props[j] > 0.0:
                chosen = j
                if cum > target:
                    break
        for i in range(n_species):
            state[i] += cols[chosen, i]
            if state[i] < 0:
                return _STATUS_IMPROPER
        ctrl_f[0] = t_next
        ctrl_i[1] += 1
        if ctrl_i[1] >= event_cap:
            g = ctrl_i[2]
            while g < n_grid and t_grid[g] <= t_next:
                for i in range(n_species):
                    out_grid[g, i] = state[i]
                g += 1
            ctrl_i[2] = g
            return STATUS_CENSORED


def _run_grid_trajectory(compiled, x0, t_grid, t_end, rng, event_cap, out_grid):
    """Drive the kernel with uniform blocks; returns (status, censor_idx, state)."""
    cols, coefs, expos, starts = compiled
    state = np.array(x0, dtype=np.int64)
    ctrl_f = np.zeros(1, dtype=np.float64)
    ctrl_i = np.zeros(3, dtype=np.int64)
    block = _FIRST_BLOCK
    while True:
        uniforms = rng.random(block)
        ctrl_i[0] = 0
        status = _ssa_grid_step(
            state, cols, coefs, expos, starts, t_grid, uniforms,
            ctrl_f, ctrl_i, out_grid, event_cap, t_end,
        )
        if status != _STATUS_NEED_UNIFORMS:
            return status, int(ctrl_i[2]), state
        block = min(block * 8, _MAX_BLOCK)


def _exact_grid_trajectory(net, x0, t_grid, t_end, rng, event_cap, out_grid):
    """Pure-Python fallback with exact rational propensity evaluation."""
    state = list(int(v) for v in x0)
    props = [Fraction(0)] * net.n_reactions
    t_now = 0.0
    events = 0
    g = 0
    n_grid = len(t_grid)
    while True:
        a0 = Fraction(0)
        for j, r in enumerate(net.reactions):
            aj = r.propensity.evaluate(state)
            if aj < 0:
                raise SimulationModelError(state, r.name)
            props[j] = aj
            a0 += aj
        if a0 == 0:
            out_grid[g:] = state
            return STATUS_ABSORBED, n_grid
        u1 = rng.random()
        u2 = rng.random()
        t_next = t_now - math.log(1.0 - u1) / float(a0)
        while g < n_grid and t_grid[g] < t_next:
            out_grid[g] = state
            g += 1
        if t_next > t_end:
            return STATUS_TIME_REACHED, n_grid
        target = Fraction(u2) * a0
        cum = Fraction(0)
        chosen = -1
        for j in range(net.n_reactions):
            cum += props[j]
            if props[j] > 0:
                chosen = j
                if cum > target:
                    break
        for i, c in enumerate(net.reactions[chosen].column):
            state[i] += c
        if min(state) < 0:
            raise AssertionError(
                f"improper network drove the state negative: {tuple(state)}"
            )
        t_now = t_next
        events += 1
        if events >= event_cap:
            while g < n_grid and t_grid[g] <= t_next:
                out_grid[g] = state
                g += 1
            return STATUS_CENSORED, g


def ensemble_grid_states(
    net, x0, t_grid, n_traj, master_seed, event_cap=DEFAULT_EVENT_CAP, exact=False
):
    """States of n_traj independent trajectories at the grid times.

    Returns (states[n_traj, G, N] int64, censor_idx[n_traj], statuses).
    censor_idx is the first grid index not covered by the trajectory (G
    when uncensored).  Overflowing trajectories transparently escalate to
    exact rational evaluation.
    """
    t_grid = np.asarray(t_grid, dtype=np.float64)
    if t_grid.ndim != 1 or len(t_grid) == 0:
        raise ValueError("t_grid must be a nonempty 1-d array")
    if np.any(np.diff(t_grid) <= 0) or t_grid[0] < 0:
        raise ValueError("t_grid must be strictly increasing and nonnegative")
    if event_cap < 1:
        raise ValueError("event_cap must be >= 1")
    t_end = float(t_grid[-1])
    n = net.n_species
    compiled = compile_propensities(net)
    states = np.zeros((n_traj, len(t_grid), n), dtype=np.int64)
    censor_idx = np.full(n_traj, len(t_grid), dtype=np.int64)
    statuses = np.zeros(n_traj, dtype=np.int64)
    for k in range(n_traj):
        rng = _generator(trajectory_seed(master_seed, k))
        out = states[k]
        if exact:
            status, cut = _exact_grid_trajectory(
                net, x0, t_grid, t_end, rng, event_cap, out
            )
        else:
            status, cut, last_state = _run_grid_trajectory(
                compiled, x0, t_grid, t_end, rng, event_cap, out
            )
            if status == _STATUS_OVERFLOW:
                out[:] = 0
                rng = _generator(trajectory_seed(master_seed, k))
                status, cut = _exact_grid_trajectory(
                    net, x0, t_grid, t_end, rng, event_cap, out
                )
            elif status == _STATUS_NEGATIVE:
                raise SimulationModelError(
                    tuple(int(v) for v in last_state), "<float path>"
                )
            elif status == _STATUS_IMPROPER:
                raise AssertionError(
                    "improper network drove the state negative: "
                    f"{tuple(int(v) for v in last_state)}"
                )
        statuses[k] = status
        if status == STATUS_CENSORED:
            censor_idx[k] = cut
    return states, censor_idx, statuses


@dataclass
class EnsembleStats:
    """Time-gridded empirical moments of the population 1-norm.

    Means at a grid time are taken over the trajectories not yet censored
    there; the censored fraction is reported alongside, and estimates are
    biased low whenever it is positive.
    """

    t_grid: np.ndarray
    orders: tuple
    mean: np.ndarray           # (len(orders), G)
    stderr: np.ndarray
    n_effective: np.ndarray    # (G,)
    censored_frac: np.ndarray
    n_traj: int
    master_seed: int

    def row(self, order):
        return self.mean[self.orders.index(order)]

    def stderr_row(self, order):
        return self.stderr[self.orders.index(order)]

    def to_csv(self):
        lines = ["t,r,mean,stderr,n_effective,censored_frac"]
        for ri, r in enumerate(self.orders):
            for g, t in enumerate(self.t_grid):
                lines.append(
                    f"{float(t)!r},{r},{float(self.mean[ri, g])!r},"
                    f"{float(self.stderr[ri, g])!r},{int(self.n_effective[g])},"
                    f"{float(self.censored_frac[g])!r}"
                )
        return "\n".join(lines) + "\n"


def moment_stats_from_states(states, censor_idx, t_grid, orders, master_seed):
    n_traj, n_grid, _ = states.shape
    norms = states.sum(axis=2).astype(np.float64)
    valid = np.arange(n_grid)[None, :] < censor_idx[:, None]
    counts = valid.sum(axis=0)
    orders = tuple(int(r) for r in orders)
    mean = np.full((len(orders), n_grid), np.nan)
    stderr = np.full((len(orders), n_grid), np.nan)
    for ri, r in enumerate(orders):
        vals = norms**r
        for g in range(n_grid):
            sel = vals[valid[:, g], g]
            if len(sel) >= 1:
                mean[ri, g] = sel.mean()
            if len(sel) >= 2:
                stderr[ri, g] = sel.std(ddof=1) / math.sqrt(len(sel))
    return EnsembleStats(
        t_grid=np.asarray(t_grid, dtype=np.float64),
        orders=orders,
        mean=mean,
        stderr=stderr,
        n_effective=counts,
        censored_frac=1.0 - counts / n_traj,
        n_traj=n_traj,
        master_seed=master_seed,
    )


def estimate_moments(
    net, x0, t_grid, orders, n_traj, master_seed, event_cap=DEFAULT_EVENT_CAP
):
    """Ensemble moment estimates of |X(t)|_1^r on the time grid."""
    if n_traj < 2:
        raise ValueError("n_traj must be >= 2")
    states, censor_idx, _ = ensemble_grid_states(
        net, x0, t_grid, n_traj, master_seed, event_cap
    )
    return moment_stats_from_states(states, censor_idx, t_grid, orders, master_seed)


@dataclass
class Trajectory:
    """One full jump path: times, fired reactions, post-jump states."""

    x0: tuple
    times: np.ndarray
    reactions: np.ndarray
    states: np.ndarray        # (K, N) post-jump states
    status: str
    end_time: float           # t_end, absorption time, or censor time
    n_reactions: int

    def state_at(self, t):
        """State at time t (paths are right-continuous)."""
        if t < 0 or t > self.end_time:
            raise ValueError(f"t={t} outside [0, {self.end_time}]")
        k = np.searchsorted(self.times, t, side="right")
        return tuple(self.x0) if k == 0 else tuple(self.states[k - 1])

    def counts_at(self, t):
        """Per-reaction event counts R_j(t) over (0, t]."""
        if t < 0 or t > self.end_time:
            raise ValueError(f"t={t} outside [0, {self.end_time}]")
        k = np.searchsorted(self.times, t, side="right")
        return np.bincount(self.reactions[:k], minlength=self.n_reactions)


def simulate(net, x0, t_end, seed, event_cap=DEFAULT_EVENT_CAP, exact=False):
    """Gillespie direct method, full path, deterministic in the seed.

    With exact=True propensities are evaluated in rational arithmetic
    (the default float path escalates automatically on overflow and
    mirrors the ensemble kernel's arithmetic exactly).
    """
    x0 = tuple(int(v) for v in x0)
    if any(v < 0 for v in x0):
        raise ValueError("x0 must be on the nonnegative lattice")
    if event_cap < 1:
        raise ValueError("event_cap must be >= 1")
    rng = _generator(seed)
    if not exact:
        compiled = compile_propensities(net)
        try:
            return _simulate_float(net, compiled, x0, t_end, rng, event_cap)
        except OverflowError:
            rng = _generator(seed)
    return _simulate_exact(net, x0, t_end, rng, event_cap)


def _simulate_float(net, compiled, x0, t_end, rng, event_cap):
    cols, coefs, expos, starts = compiled
    m, n = cols.shape
    state = list(x0)
    times, fired, path = [], [], []
    t_now = 0.0
    props = [0.0] * m
    while True:
        a0 = 0.0
        for j in range(m):
            aj = 0.0
            max_term = 0.0
            for k in range(starts[j], starts[j + 1]):
                v = coefs[k]
                for i in range(n):
                    e = expos[k, i]
                    for _ in range(e):
                        v *= state[i]
                av = abs(v)
                if av > max_term:
                    max_term = av
                aj += v
            if max_term > _EXACT_FLOAT_LIMIT or abs(aj) > _EXACT_FLOAT_LIMIT:
                raise OverflowError
            if aj < 0.0:
                if -aj <= _NEG_CLAMP * max_term:
                    aj = 0.0
                else:
                    raise SimulationModelError(state, net.reactions[j].name)
            props[j] = aj
            a0 += aj
        if a0 == 0.0:
            return _finish_trajectory(net, x0, times, fired, path, "ABSORBED", t_now)
        u1 = rng.random()
        u2 = rng.random()
        t_next = t_now - math.log(1.0 - u1) / a0
        if t_next > t_end:
            return _finish_trajectory(
                net, x0, times, fired, path, "TIME_REACHED", t_end
            )
        target = u2 * a0
        cum = 0.0
        chosen = -1
        for j in range(m):
            cum += props[j]
            if props[j] > 0.0:
                chosen = j
                if cum > target:
                    break
        for i in range(n):
            state[i] += int(cols[chosen, i])
        if any(v < 0 for v in state):
            raise AssertionError(
                f"improper network drove the state negative: {tuple(state)}"
            )
        t_now = t_next
        times.append(t_now)
        fired.append(chosen)
        path.append(tuple(state))
        if len(times) >= event_cap:
            return _finish_trajectory(net, x0, times, fired, path, "CENSORED", t_now)


def _simulate_exact(net, x0, t_end, rng, event_cap):
    m = net.n_reactions
    state = list(x0)
    times, fired, path = [], [], []
    t_now = 0.0
    props = [Fraction(0)] * m
    while True:
        a0 = Fraction(0)
        for j, r in enumerate(net.reactions):
            aj = r.propensity.evaluate(state)
            if aj < 0:
                raise SimulationModelError(state, r.name)
            props[j] = aj
            a0 += aj
        if a0 == 0:
            return _finish_trajectory(net, x0, times, fired, path, "ABSORBED", t_now)
        u1 = rng.random()
        u2 = rng.random()
        t_next = t_now - math.log(1.0 - u1) / float(a0)
        if t_next > t_end:
            return _finish_trajectory(
                net, x0, times, fired, path, "TIME_REACHED", t_end
            )
        target = Fraction(u2) * a0
        cum = Fraction(0)
        chosen = -1
        for j in range(m):
            cum += props[j]
            if props[j] > 0:
                chosen = j
                if cum > target:
                    break
        for i, c in enumerate(net.reactions[chosen].column):
            state[i] += c
        if any(v < 0 for v in state):
            raise AssertionError(
                f"improper network drove the state negative: {tuple(state)}"
            )
        t_now = t_next
        times.append(t_now)
        fired.append(chosen)
        path.append(tuple(state))
        if len(times) >= event_cap:
            return _finish_trajectory(net, x0, times, fired, path, "CENSORED", t_now)


def _finish_trajectory(net, x0, times, fired, path, status, end_time):
    n = net.n_species
    return Trajectory(
        x0=x0,
        times=np.array(times, dtype=np.float64),
        reactions=np.array(fired, dtype=np.int64),
        states=(
            np.array(path, dtype=np.int64)
            if path
            else np.zeros((0, n), dtype=np.int64)
        ),
        status=status,
        end_time=end_time,
        n_reactions=net.n_reactions,
    )


# -- truncated Kolmogorov forward equations ---------------------------------


@dataclass
class TruncatedDistribution:
    """Probability mass on a lattice box plus the mass leaked out of it.

    Moments computed from the box are exact when leaked == 0 and rigorous
    lower bounds otherwise.
    """

    box: tuple
    states: tuple
    probs: np.ndarray
    leaked: float
    t: float
    warning: bool              # leaked mass > 0.5: box too small to be useful
    _index: dict = None

    def prob(self, x):
        return float(self.probs[self._index[tuple(x)]])

    def mass_balance(self):
        return float(self.probs.sum() + self.leaked)

    def moment(self, order):
        """sum over the box of |x|_1^order p(x); lower bound if leaked > 0."""
        norms = np.array([sum(s) for s in self.states], dtype=np.float64)
        return float((norms**order * self.probs).sum())

    @property
    def moments_are_lower_bounds(self):
        return self.leaked > 0


def _box_states(box):
    return tuple(itertools.product(*(range(b + 1) for b in box)))


def build_truncated_generator(net, box):
    """Sparse rate matrix on the box with one extra absorbing leak state.

    Returns (states, index, Q) with dp/dt = Q p; column sums are zero so
    total mass (box + leak) is conserved exactly by the ODE.
    """
    n = net.n_species
    box = tuple(int(b) for b in box)
    if len(box) != n or any(b < 0 for b in box):
        raise ValueError("box must give a nonnegative bound per species")
    states = _box_states(box)
    index = {s: k for k, s in enumerate(states)}
    leak = len(states)
    rows, cols_ix, vals = [], [], []
    for s in states:
        k = index[s]
        for r in net.reactions:
            a = float(r.propensity.evaluate(s))
            if a == 0.0:
                continue
            if a < 0:
                raise SimulationModelError(s, r.name)
            y = tuple(a_ + c for a_, c in zip(s, r.column))
            target = index.get(y, leak)
            rows.append(target)
            cols_ix.append(k)
            vals.append(a)
            rows.append(k)
            cols_ix.append(k)
            vals.append(-a)
    Q = coo_matrix(
        (vals, (rows, cols_ix)), shape=(len(states) + 1, len(states) + 1)
    ).tocsr()
    return states, index, Q


def integrate_forward_equations(
    net, x0, t_end, box, t_eval=None, rtol=1e-10, atol=1e-13
):
    """Integrate the truncated forward equations from a point mass at x0.

    Returns the distribution at t_end, or a list of distributions at the
    t_eval times when given.  Out-of-box probability flow accumulates in
    the leak state, so box mass + leaked mass stays 1 up to integrator
    tolerance.
    """
    x0 = tuple(int(v) for v in x0)
    states, index, Q = build_truncated_generator(net, box)
    if x0 not in index:
        raise ValueError(f"x0={x0} outside the truncation box {box}")
    p0 = np.zeros(len(states) + 1)
    p0[index[x0]] = 1.0
    ts = [float(t_end)] if t_eval is None else [float(t) for t in t_eval]
    if any(t < 0 or t > t_end for t in ts):
        raise ValueError("t_eval times must lie in [0, t_end]")

    box = tuple(int(b) for b in box)
    if t_end == 0:
        snaps = [p0.copy() for _ in ts]
    else:
        sol = solve_ivp(
            lambda t, p: Q.dot(p),
            (0.0, float(t_end)),
            p0,
            method="DOP853",
            rtol=rtol,
            atol=atol,
            t_eval=sorted(set(ts)),
        )
        if not sol.success:
            raise RuntimeError(f"forward-equation integration failed: {sol.message}")
        by_time = {float(t): sol.y[:, i] for i, t in enumerate(sol.t)}
        snaps = [by_time[t] for t in ts]
    out = []
    for t, p in zip(ts, snaps):
        leaked = float(p[-1])
        out.append(
            TruncatedDistribution(
                box=box,
                states=states,
                probs=p[:-1].copy(),
                leaked=leaked,
                t=t,
                warning=leaked > 0.5,
                _index=index,
            )
        )
    return out[0] if t_eval is None else out


# -- consistency helpers -----------------------------------------------------


def blowup_ode_floor(C, alpha_exp, phi0, ts):
    """Solution of dphi/dt = C phi^alpha, phi(0) = phi0; inf past blow-up."""
    C = float(C)
    phi0 = float(phi0)
    a = int(alpha_exp)
    if a < 2 or C <= 0 or phi0 <= 0:
        raise ValueError("need alpha_exp >= 2, C > 0, phi0 > 0")
    t_star = 1.0 / ((a - 1) * C * phi0 ** (a - 1))
    out = np.empty(len(ts))
    for i, t in enumerate(ts):
        if t >= t_star:
            out[i] = np.inf
        else:
            out[i] = phi0 * (1.0 - (a - 1) * C * phi0 ** (a - 1) * t) ** (
                -1.0 / (a - 1)
            )
    return out


def weighted_norm_means(states, censor_idx, weights):
    """Mean of sum_i w_i X_i(t) over uncensored trajectories per grid time."""
    n_traj, n_grid, _ = states.shape
    w = np.asarray([float(v) for v in weights])
    vals = (states.astype(np.float64) * w[None, None, :]).sum(axis=2)
    valid = np.arange(n_grid)[None, :] < censor_idx[:, None]
    counts = valid.sum(axis=0)
    means = np.full(n_grid, np.nan)
    for g in range(n_grid):
        if counts[g]:
            means[g] = vals[valid[:, g], g].mean()
    return means, counts


def log_moment_slopes(t_grid, means):
    """Fitted slopes of log(1 + mean) over the first and second grid half."""
    t = np.asarray(t_grid, dtype=np.float64)
    y = np.log1p(np.asarray(means, dtype=np.float64))
    half = len(t) // 2
    if half < 2 or len(t) - half < 2:
        raise ValueError("grid too short to split")
    s1 = np.polyfit(t[:half], y[:half], 1)[0]
    s2 = np.polyfit(t[half:], y[half:], 1)[0]
    return float(s1), float(s2)
