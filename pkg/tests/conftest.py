"""Shared example networks used across the suite.

ex1..ex5 are the worked systems from the analysis; conservation, death
and dimer are small bounded systems with closed-form behavior used as
simulation oracles.
"""

import numpy as np
import pytest

from momentcert.network import (
    ReactionNetwork,
    mass_action_reaction,
    poly_reaction,
)
from momentcert.polynomial import parse_polynomial


def make_ex1():
    # nu1 = (3,-2), nu2 = (-2,3); proper mass-action propensities, so both
    # reactions are disabled at (1,1) while the stoichiometric cone grows.
    return ReactionNetwork(
        species=("S1", "S2"),
        reactions=(
            mass_action_reaction("r1", (0, 2), (3, 0), 1),
            mass_action_reaction("r2", (2, 0), (0, 3), 1),
        ),
    )


def make_conservation(c1=1, c2=1, init=(3, 2)):
    return ReactionNetwork(
        species=("S1", "S2"),
        reactions=(
            mass_action_reaction("r1", (1, 0), (0, 1), c1),
            mass_action_reaction("r2", (0, 1), (1, 0), c2),
        ),
        init=init,
    )


def make_ex2():
    # nu1 = (2,-1) with a1 = x2^2, nu2 = (-1,1) with a2 = x1
    return ReactionNetwork(
        species=("S1", "S2"),
        reactions=(
            poly_reaction("r1", (2, -1), parse_polynomial("x2^2", 2)),
            mass_action_reaction("r2", (1, 0), (0, 1), 1),
        ),
    )


def make_ex3(m):
    # birth rate x^m, death rate 2 x^m
    return ReactionNetwork(
        species=("S1",),
        reactions=(
            poly_reaction("birth", (1,), parse_polynomial(f"x1^{m}", 1)),
            poly_reaction("death", (-1,), parse_polynomial(f"2*x1^{m}", 1)),
        ),
    )


def make_ex4():
    # S1+S2 -> 2S1+S2 | S1+S2 -> S1+2S2 | S1+S2 -> 0 at double rate
    return ReactionNetwork(
        species=("S1", "S2"),
        reactions=(
            mass_action_reaction("r1", (1, 1), (2, 1), 1),
            mass_action_reaction("r2", (1, 1), (1, 2), 1),
            mass_action_reaction("r3", (1, 1), (0, 0), 2),
        ),
    )


def make_ex5():
    # ex2 with the linear back reaction made quadratic: blow-up regime
    return ReactionNetwork(
        species=("S1", "S2"),
        reactions=(
            poly_reaction("r1", (2, -1), parse_polynomial("x2^2", 2)),
            poly_reaction("r2", (-1, 1), parse_polynomial("x1^2", 2)),
        ),
    )


def make_death(init=(6,)):
    return ReactionNetwork(
        species=("S1",),
        reactions=(mass_action_reaction("decay", (1,), (0,), 1),),
        init=init,
    )


def make_dimer(init=(4, 1)):
    # 2 S1 <-> S2 conserves x1 + 2 x2
    return ReactionNetwork(
        species=("S1", "S2"),
        reactions=(
            mass_action_reaction("bind", (2, 0), (0, 1), 1),
            mass_action_reaction("unbind", (0, 1), (2, 0), 1),
        ),
        init=init,
    )


@pytest.fixture
def ex1():
    return make_ex1()


@pytest.fixture
def ex2():
    return make_ex2()


@pytest.fixture
def ex4():
    return make_ex4()


@pytest.fixture
def ex5():
    return make_ex5()


@pytest.fixture
def conservation():
    return make_conservation()


@pytest.fixture(scope="session")
def warm_kernel():
    """Compile the SSA kernel once so timing-sensitive tests stay honest."""
    from momentcert.simulation import estimate_moments

    net = make_conservation()
    estimate_moments(net, (1, 0), np.linspace(0, 0.1, 3), (1,), 2, 0)
    return True
