"""Stoichiometric boundedness, criticality, accessible-set exploration.

Species i is stoichiometrically bounded iff some alpha >= 0 with
alpha_i > 0 satisfies alpha^T nu <= 0 columnwise: the weighted population
sum alpha^T X(t) can then never increase, so X_i stays below
alpha^T x0 / alpha_i from any start.  Otherwise there is an integer
firing bundle w >= 0 with nu w >= 0 and a strict gain in species i, which
repeated from a large enough state grows the species without bound.
Exactly one of the two objects exists; both are produced in
self-verified form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import feasibility
from .feasibility import (
    gain_witness_system,
    integerize,
    solve,
    species_boundedness_system,
    subset_boundedness_system,
    unbounded_species,
)

DEFAULT_MAX_STATES = 100_000
DEFAULT_MAX_COORD = 1_000


@dataclass(frozen=True)
class BoundednessCertificate:
    """alpha in Z_+^N with alpha_i >= 1 on `covered` and alpha^T nu <= 0."""

    alpha: tuple
    covered: frozenset

    def verify(self, nu):
        n = len(nu)
        m = len(nu[0]) if n else 0
        if len(self.alpha) != n or any(a < 0 for a in self.alpha):
            return False
        if any(self.alpha[i] < 1 for i in self.covered):
            return False
        return all(
            sum(self.alpha[k] * nu[k][j] for k in range(n)) <= 0 for j in range(m)
        )


@dataclass(frozen=True)
class UnboundednessWitness:
    """w in Z_+^M with nu w >= 0 componentwise and (nu w)_species >= 1."""

    w: tuple
    species: int

    def gain(self, nu):
        n = len(nu)
        return tuple(sum(nu[k][j] * self.w[j] for j in range(len(self.w))) for k in range(n))

    def verify(self, nu):
        if any(v < 0 for v in self.w) or any(
            not isinstance(v, int) for v in self.w
        ):
            return False
        g = self.gain(nu)
        return all(v >= 0 for v in g) and g[self.species] >= 1


def decide_species_boundedness(nu, i):
    """Certificate or witness for species i; exactly one exists."""
    primal = solve(species_boundedness_system(nu, i))
    if primal.feasible:
        alpha = integerize(primal.point, strict=(i,))
        cert = BoundednessCertificate(alpha=alpha, covered=frozenset({i}))
        if not cert.verify(nu):
            raise AssertionError("integerized certificate failed verification")
        return cert
    w = feasibility.alternative_witness(nu, i)
    if w is None:
        raise AssertionError("neither certificate nor witness; exclusivity violated")
    witness = UnboundednessWitness(w=w, species=i)
    if not witness.verify(nu):
        raise AssertionError("witness failed verification")
    return witness


@dataclass(frozen=True)
class SubsetRefusal:
    requested: tuple
    unbounded: tuple              # members of the request that are unbounded
    boundable: tuple              # maximal certifiable subset of the request
    certificate: BoundednessCertificate = None  # covers `boundable` when nonempty


def decide_subset_boundedness(nu, indices):
    """One alpha covering the whole subset, or a per-species diagnosis.

    A subset is certifiable iff every member is individually certifiable:
    certificates add, so the sum of per-species certificates covers the
    union.
    """
    indices = tuple(sorted(set(indices)))
    if not indices:
        raise ValueError("subset must be nonempty")
    out = solve(subset_boundedness_system(nu, indices))
    if out.feasible:
        alpha = integerize(out.point, strict=indices)
        cert = BoundednessCertificate(alpha=alpha, covered=frozenset(indices))
        if not cert.verify(nu):
            raise AssertionError("integerized certificate failed verification")
        return cert
    bad = tuple(i for i in indices if i in set(unbounded_species(nu)))
    good = tuple(i for i in indices if i not in bad)
    certificate = None
    if good:
        certificate = decide_subset_boundedness(nu, good)
        if isinstance(certificate, SubsetRefusal):
            raise AssertionError("boundable subset failed to certify")
    return SubsetRefusal(
        requested=indices, unbounded=bad, boundable=good, certificate=certificate
    )


@dataclass(frozen=True)
class CriticalPartition:
    """Critical species/reactions and the reordered submatrices.

    Rows and columns of nu1/nu2/nuc follow species_order/reaction_order
    (critical indices first, ascending, then the rest ascending), so
    nu1 = rows of critical species over all reactions, nu2 = rows of the
    non-critical species, and nuc = critical rows x critical columns.
    """

    critical_species: tuple
    critical_reactions: tuple
    n_species: int
    n_reactions: int
    species_order: tuple   # reordered position -> original species index
    reaction_order: tuple
    nu1: tuple
    nu2: tuple
    nuc: tuple
    conservative: bool = False  # sign-mixed raw propensities: degree test is a proxy

    @property
    def n_critical_species(self):
        return len(self.critical_species)

    @property
    def n_critical_reactions(self):
        return len(self.critical_reactions)


def classify(net):
    """Critical species (stoichiometrically unbounded) and reactions.

    A reaction is critical iff its propensity's canonical form has degree
    >= 2 in the critical variables; this is exact for lattice-nonnegative
    propensities with nonnegative leading structure (all mass-action
    ones), and a conservative syntactic proxy for sign-mixed raw
    polynomials, which is flagged.
    """
    nu = net.nu()
    critical = tuple(unbounded_species(nu))
    crit_set = set(critical)
    critical_reactions = tuple(
        j
        for j, r in enumerate(net.reactions)
        if r.propensity.degree_in(crit_set) >= 2
    )
    conservative = any(
        r.kind == "poly" and any(c < 0 for c in r.propensity.terms.values())
        for r in net.reactions
    )
    species_order = critical + tuple(
        i for i in range(net.n_species) if i not in crit_set
    )
    crit_rxn_set = set(critical_reactions)
    reaction_order = critical_reactions + tuple(
        j for j in range(net.n_reactions) if j not in crit_rxn_set
    )
    nu1 = tuple(tuple(nu[i][j] for j in reaction_order) for i in critical)
    nu2 = tuple(
        tuple(nu[i][j] for j in reaction_order)
        for i in species_order[len(critical):]
    )
    nuc = tuple(
        tuple(nu[i][j] for j in critical_reactions) for i in critical
    )
    return CriticalPartition(
        critical_species=critical,
        critical_reactions=critical_reactions,
        n_species=net.n_species,
        n_reactions=net.n_reactions,
        species_order=species_order,
        reaction_order=reaction_order,
        nu1=nu1,
        nu2=nu2,
        nuc=nuc,
        conservative=conservative,
    )


def construct_monotone_norm(nu, reactions):
    """alpha > 0 making the weighted 1-norm non-increasing under the
    given reactions' jumps, or None when no such weights exist
    (equivalently some species is unbounded in that subsystem)."""
    reactions = sorted(set(reactions))
    if not reactions:
        raise ValueError("reaction subset must be nonempty")
    n = len(nu)
    ineq = []
    rhs = []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        ineq.append(tuple(row))
        rhs.append(1)
    for j in reactions:
        ineq.append(tuple(-nu[k][j] for k in range(n)))
        rhs.append(0)
    out = solve(
        feasibility.FeasibilitySystem(n_vars=n, ineq_lhs=ineq, ineq_rhs=rhs)
    )
    if not out.feasible:
        return None
    return integerize(out.point, strict=range(n))


def weighted_norm(alpha, x):
    return sum(a * abs(v) for a, v in zip(alpha, x))


@dataclass(frozen=True)
class CountingSequence:
    """Incremental firing schedule: u_1 = 0 and each step fires one reaction."""

    firings: tuple       # reaction index fired at each step
    partial_sums: tuple  # len(firings)+1 cumulative count vectors, first is 0

    def verify(self):
        if not self.partial_sums or any(v != 0 for v in self.partial_sums[0]):
            return False
        if len(self.partial_sums) != len(self.firings) + 1:
            return False
        for step, (u, v) in enumerate(zip(self.partial_sums, self.partial_sums[1:])):
            delta = tuple(b - a for a, b in zip(u, v))
            j = self.firings[step]
            if delta[j] != 1 or any(d != 0 for k, d in enumerate(delta) if k != j):
                return False
        return True


def counting_sequence_for(w):
    """Fire reaction indices ascending, each j repeated w_j times."""
    m = len(w)
    firings = []
    for j in range(m):
        firings.extend([j] * w[j])
    sums = [(0,) * m]
    current = [0] * m
    for j in firings:
        current[j] += 1
        sums.append(tuple(current))
    return CountingSequence(firings=tuple(firings), partial_sums=tuple(sums))


def unboundedness_threshold(nu, w):
    """Threshold state x_bar and the counting sequence realizing w.

    x_bar_i = max(0, -(nu u_l)_i over the partial sums u_l), so from any
    x >= x_bar every intermediate state x + nu u_l stays on the lattice;
    under regularity the bundle then fires with positive probability.
    """
    n = len(nu)
    seq = counting_sequence_for(tuple(int(v) for v in w))
    if not seq.verify():
        raise AssertionError("constructed counting sequence failed verification")
    xbar = [0] * n
    for u in seq.partial_sums:
        for i in range(n):
            change = sum(nu[i][j] * u[j] for j in range(len(u)))
            xbar[i] = max(xbar[i], -change)
    xbar = tuple(xbar)
    for u in seq.partial_sums:  # direct re-evaluation of the defining property
        for i in range(n):
            if xbar[i] + sum(nu[i][j] * u[j] for j in range(len(u))) < 0:
                raise AssertionError("threshold state fails its defining property")
    return xbar, seq


@dataclass(frozen=True)
class AccessibleSetSample:
    """BFS closure of x0 under enabled jumps, possibly truncated by caps."""

    x0: tuple
    states: frozenset
    frontier_exhausted: bool
    cap_hit: bool
    max_states: int
    max_coord: int
    parents: dict = field(repr=False, hash=False, compare=False, default=None)

    def path_to(self, state):
        """Firing path (reaction indices) from x0 to a stored state."""
        state = tuple(state)
        if state not in self.states:
            raise KeyError(f"state {state} not in the explored sample")
        path = []
        while state != self.x0:
            prev, j = self.parents[state]
            path.append(j)
            state = prev
        path.reverse()
        return tuple(path)


def explore_accessible(
    net, x0, max_states=DEFAULT_MAX_STATES, max_coord=DEFAULT_MAX_COORD
):
    """Breadth-first exploration: reaction j is enabled at x iff a_j(x) > 0.

    Deterministic visit order (FIFO queue, reactions ascending).  States
    with a coordinate beyond max_coord are not expanded into; hitting
    either cap marks the sample as truncated (a SAMPLE, never claimed to
    be the full accessible set).
    """
    x0 = tuple(int(v) for v in x0)
    if any(v < 0 for v in x0):
        raise ValueError("x0 must be on the nonnegative lattice")
    visited = {x0}
    parents = {}
    queue = deque([x0])
    cap_hit = False
    while queue:
        x = queue.popleft()
        for j, r in enumerate(net.reactions):
            if r.propensity.evaluate(x) <= 0:
                continue
            y = tuple(a + b for a, b in zip(x, r.column))
            if any(v < 0 for v in y):
                raise AssertionError(
                    f"improper jump from {x} via reaction {r.name}; "
                    "validate properness before exploring"
                )
            if y in visited:
                continue
            if any(v > max_coord for v in y):
                cap_hit = True
                continue
            if len(visited) >= max_states:
                cap_hit = True
                continue
            visited.add(y)
            parents[y] = (x, j)
            queue.append(y)
    return AccessibleSetSample(
        x0=x0,
        states=frozenset(visited),
        frontier_exhausted=not cap_hit,
        cap_hit=cap_hit,
        max_states=max_states,
        max_coord=max_coord,
        parents=parents,
    )
