"""Reaction networks: stoichiometry, propensities, validation, drift.

A network is the pair (nu, a): an N x M integer stoichiometric matrix
whose column j is the state change of reaction j, plus one polynomial
propensity per reaction.  Mass-action reactions build their propensity
from falling factorials (combinatorial counting), which makes them proper
by construction; raw polynomial propensities must pass the exact
properness check before any analysis runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Polynomial, falling_factorial

DEFAULT_BOX = 25


@dataclass(frozen=True)
class Reaction:
    name: str
    column: tuple          # state change, one entry per species
    propensity: Polynomial
    kind: str              # "mass_action" | "poly"
    reactants: tuple = None  # reactant counts per species (mass_action only)
    rate: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, "column", tuple(int(v) for v in self.column))
        if len(self.column) != self.propensity.nvars:
            raise ValueError(
                f"reaction {self.name}: column has {len(self.column)} species, "
                f"propensity has {self.propensity.nvars}"
            )


@dataclass(frozen=True)
class ReactionNetwork:
    species: tuple
    reactions: tuple
    init: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "species", tuple(self.species))
        object.__setattr__(self, "reactions", tuple(self.reactions))
        n = len(self.species)
        for r in self.reactions:
            if len(r.column) != n:
                raise ValueError(f"reaction {r.name} has wrong species count")
        if self.init is not None:
            init = tuple(int(v) for v in self.init)
            if len(init) != n:
                raise ValueError("init has wrong species count")
            if any(v < 0 for v in init):
                raise ValueError("init must be nonnegative")
            object.__setattr__(self, "init", init)

    @property
    def n_species(self):
        return len(self.species)

    @property
    def n_reactions(self):
        return len(self.reactions)

    def nu(self):
        """Stoichiometric matrix as N rows of M integers."""
        return tuple(
            tuple(r.column[i] for r in self.reactions) for i in range(self.n_species)
        )

    def propensities(self):
        return tuple(r.propensity for r in self.reactions)

    def species_index(self, name):
        try:
            return self.species.index(name)
        except ValueError:
            raise KeyError(f"unknown species {name!r}") from None


def build_mass_action(reactants, products, rate):
    """Stoichiometry column and propensity for a mass-action reaction.

    The propensity is rate * prod_i x_i*(x_i-1)*...*(x_i-r_i+1): the
    number of distinct reactant combinations, so it vanishes exactly when
    fewer than r_i copies of species i are present.
    """
    rate = Fraction(rate)
    if rate <= 0:
        raise ValueError("rate must be positive")
    reactants = tuple(int(v) for v in reactants)
    products = tuple(int(v) for v in products)
    if len(reactants) != len(products):
        raise ValueError("reactant/product length mismatch")
    if any(v < 0 for v in reactants + products):
        raise ValueError("reactant/product counts must be nonnegative")
    n = len(reactants)
    column = tuple(p - r for r, p in zip(reactants, products))
    prop = Polynomial.constant(n, rate)
    for i, r in enumerate(reactants):
        if r:
            prop = prop * falling_factorial(n, i, r)
    return column, prop


def mass_action_reaction(name, reactants, products, rate):
    column, prop = build_mass_action(reactants, products, rate)
    return Reaction(
        name=name,
        column=column,
        propensity=prop,
        kind="mass_action",
        reactants=tuple(int(v) for v in reactants),
        rate=Fraction(rate),
    )


def poly_reaction(name, column, propensity):
    return Reaction(name=name, column=column, propensity=propensity, kind="poly")


@dataclass(frozen=True)
class PropernessVerdict:
    reaction: str
    proper: bool
    species: int = None    # violating species when improper
    witness: tuple = None  # lattice state with a_j(x) != 0 but x+nu_j off-lattice


def _nonvanishing_witness(poly, var, level):
    """Lattice point with x_var = level where poly does not vanish.

    poly restricted to the hyperplane x_var = level is a nonzero
    polynomial, so it cannot vanish on a full (deg+1)-sized grid in the
    remaining variables.
    """
    n = poly.nvars
    deg = poly.degree()
    ranges = [range(deg + 1)] * n
    ranges[var] = [level]
    for point in itertools.product(*ranges):
        if poly.evaluate(point) != 0:
            return point
    raise AssertionError("nonzero polynomial vanished on a certifying grid")


def validate_properness(net):
    """Exact properness decision per reaction.

    Reaction j is proper iff, for every species consumed by nu_j, the
    propensity is divisible by the falling factorial of that species of
    order equal to the consumption; equivalently a_j vanishes identically
    wherever the jump would leave the lattice.
    """
    verdicts = []
    for r in net.reactions:
        verdict = PropernessVerdict(reaction=r.name, proper=True)
        for i, change in enumerate(r.column):
            if change < 0 and not r.propensity.divisible_by_falling_factorial(
                i, -change
            ):
                # find the offending hyperplane and a concrete witness
                p = r.propensity
                witness = None
                for k in range(-change):
                    quotient, rem = p.divide_by_linear(i, k)
                    if not rem.is_zero():
                        witness = _nonvanishing_witness(r.propensity, i, k)
                        break
                    p = quotient
                verdict = PropernessVerdict(
                    reaction=r.name, proper=False, species=i, witness=witness
                )
                break
        verdicts.append(verdict)
    return verdicts


def is_proper(net):
    return all(v.proper for v in validate_properness(net))


@dataclass(frozen=True)
class RegularityVerdict:
    reaction: str
    status: str            # REGULAR_ANALYTIC | REGULAR_ON_BOX | VIOLATION
    box: int = None
    violations: tuple = ()  # states where the jump is feasible but a_j(x) <= 0


def check_regularity(net, box=DEFAULT_BOX, max_violations=10):
    """Per-reaction regularity: a_j(x) > 0 whenever x + nu_j stays on-lattice.

    Mass-action reactions whose reactant requirements equal the negative
    stoichiometry exactly are regular analytically.  Everything else is
    checked exhaustively on the lattice box {0..box}^N, which certifies
    regularity on the box only.
    """
    n = net.n_species
    verdicts = []
    for r in net.reactions:
        if r.kind == "mass_action" and all(
            req == max(0, -change) for req, change in zip(r.reactants, r.column)
        ):
            verdicts.append(RegularityVerdict(reaction=r.name, status="REGULAR_ANALYTIC"))
            continue
        violations = []
        for x in itertools.product(range(box + 1), repeat=n):
            if all(xi + ci >= 0 for xi, ci in zip(x, r.column)):
                if r.propensity.evaluate(x) <= 0:
                    violations.append(x)
                    if len(violations) >= max_violations:
                        break
        if violations:
            verdicts.append(
                RegularityVerdict(
                    reaction=r.name,
                    status="VIOLATION",
                    box=box,
                    violations=tuple(violations),
                )
            )
        else:
            verdicts.append(
                RegularityVerdict(reaction=r.name, status="REGULAR_ON_BOX", box=box)
            )
    return verdicts


def nonnegative_on_box(net, box=DEFAULT_BOX):
    """States (if any) where a raw-polynomial propensity goes negative.

    Mass-action propensities are nonnegative on the lattice by
    construction; raw polynomials are only checked on a finite box and the
    result is recorded as an assumption, not a proof.
    """
    n = net.n_species
    failures = {}
    for r in net.reactions:
        if r.kind == "mass_action":
            continue
        for x in itertools.product(range(box + 1), repeat=n):
            if r.propensity.evaluate(x) < 0:
                failures[r.name] = x
                break
    return failures


def drift(net):
    """Drift vector F(x) = sum_j nu_j a_j(x), one polynomial per species."""
    n = net.n_species
    components = []
    for i in range(n):
        total = Polynomial.zero(n)
        for r in net.reactions:
            if r.column[i]:
                total = total + r.propensity.scale(r.column[i])
        components.append(total)
    return tuple(components)


def weighted_drift(net, gamma):
    """gamma^T F(x) for a positive weight vector gamma."""
    if len(gamma) != net.n_species:
        raise ValueError("gamma has wrong length")
    gamma = [Fraction(g) for g in gamma]
    if any(g <= 0 for g in gamma):
        raise ValueError("gamma must be strictly positive")
    n = net.n_species
    total = Polynomial.zero(n)
    for r in net.reactions:
        weight = sum(g * c for g, c in zip(gamma, r.column))
        if weight:
            total = total + r.propensity.scale(weight)
    return total
