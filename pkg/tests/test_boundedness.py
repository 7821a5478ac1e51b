import numpy as np
import pytest

from momentcert.boundedness import (
    BoundednessCertificate,
    SubsetRefusal,
    UnboundednessWitness,
    classify,
    construct_monotone_norm,
    counting_sequence_for,
    decide_species_boundedness,
    decide_subset_boundedness,
    explore_accessible,
    unboundedness_threshold,
    weighted_norm,
)
from momentcert.network import ReactionNetwork, poly_reaction
from momentcert.polynomial import Polynomial

from conftest import make_conservation, make_ex1, make_ex2, make_ex3, make_ex4

EX1_NU = ((3, -2), (-2, 3))
EX2_NU = ((2, -1), (-1, 1))
CONSERV_NU = ((-1, 1), (1, -1))


class TestDecideSpecies:
    def test_conservation_certificate(self):
        out = decide_species_boundedness(CONSERV_NU, 0)
        assert isinstance(out, BoundednessCertificate)
        assert out.alpha == (1, 1)
        assert out.verify(CONSERV_NU)

    def test_example1_witness(self):
        out = decide_species_boundedness(EX1_NU, 1)
        assert isinstance(out, UnboundednessWitness)
        assert out.w == (1, 1)
        assert out.gain(EX1_NU) == (1, 1)
        assert out.verify(EX1_NU)

    def test_example2_witness(self):
        out = decide_species_boundedness(EX2_NU, 0)
        assert isinstance(out, UnboundednessWitness)
        assert out.w == (2, 3)
        assert out.gain(EX2_NU) == (1, 1)

    def test_initial_state_independence(self):
        # the decision is a function of nu alone; there is no state argument
        import inspect

        params = inspect.signature(decide_species_boundedness).parameters
        assert list(params) == ["nu", "i"]


class TestDecideSubset:
    def test_conservation_pair(self):
        out = decide_subset_boundedness(CONSERV_NU, (0, 1))
        assert isinstance(out, BoundednessCertificate)
        assert out.alpha == (1, 1)
        assert out.covered == frozenset({0, 1})

    def test_example2_refusal_names_unbounded_members(self):
        out = decide_subset_boundedness(EX2_NU, (0,))
        assert isinstance(out, SubsetRefusal)
        assert out.unbounded == (0,)
        assert out.boundable == ()

    def test_pure_consumption(self):
        nu = ((-1,), (-1,))
        out = decide_subset_boundedness(nu, (0, 1))
        assert out.alpha == (1, 1)

    def test_mixed_subset_keeps_boundable_part(self):
        # species 0 unbounded (free production), species 1 conserved-ish
        nu = ((1, 0), (0, -1))
        out = decide_subset_boundedness(nu, (0, 1))
        assert isinstance(out, SubsetRefusal)
        assert out.unbounded == (0,)
        assert out.boundable == (1,)
        assert out.certificate.verify(nu)

    def test_additivity_of_certificates(self):
        rng = np.random.default_rng(11)
        found = 0
        while found < 20:
            n, m = int(rng.integers(2, 5)), int(rng.integers(1, 5))
            nu = tuple(
                tuple(int(v) for v in rng.integers(-3, 4, size=m))
                for _ in range(n)
            )
            outs = [decide_species_boundedness(nu, i) for i in range(n)]
            certs = [
                (i, o) for i, o in enumerate(outs)
                if isinstance(o, BoundednessCertificate)
            ]
            if len(certs) < 2:
                continue
            (i, a), (k, b) = certs[0], certs[1]
            summed = BoundednessCertificate(
                alpha=tuple(x + y for x, y in zip(a.alpha, b.alpha)),
                covered=frozenset({i, k}),
            )
            assert summed.verify(nu)
            found += 1


class TestClassify:
    def test_example2(self):
        part = classify(make_ex2())
        assert part.critical_species == (0, 1)
        assert part.critical_reactions == (0,)
        assert part.nuc == ((2,), (-1,))
        assert not part.conservative

    def test_example3_quadratic(self):
        part = classify(make_ex3(2))
        assert part.critical_species == (0,)
        assert part.critical_reactions == (0, 1)
        assert part.nuc == ((1, -1),)

    def test_example3_linear_has_no_critical_reactions(self):
        part = classify(make_ex3(1))
        assert part.critical_species == (0,)
        assert part.critical_reactions == ()

    def test_conservation_has_no_criticals(self):
        part = classify(make_conservation())
        assert part.critical_species == ()
        assert part.critical_reactions == ()
        assert part.nuc == ()

    def test_permutation_invariance(self):
        net = make_ex2()
        swapped = ReactionNetwork(
            species=(net.species[1], net.species[0]),
            reactions=tuple(
                poly_reaction(
                    r.name,
                    (r.column[1], r.column[0]),
                    _swap_vars(r.propensity),
                )
                for r in reversed(net.reactions)
            ),
        )
        part = classify(net)
        part_swapped = classify(swapped)
        # same criticality structure after unpermuting indices
        assert {1 - i for i in part_swapped.critical_species} == set(
            part.critical_species
        )
        assert {1 - j for j in part_swapped.critical_reactions} == set(
            part.critical_reactions
        )
        assert part_swapped.n_critical_reactions == part.n_critical_reactions

    def test_mixed_partition_submatrices(self):
        # species A unbounded via a source, species B bounded by pure decay
        net = ReactionNetwork(
            species=("A", "B"),
            reactions=(
                poly_reaction(
                    "src", (1, 0), Polynomial(2, {(2, 0): 1})
                ),
                poly_reaction("decay", (0, -1), Polynomial(2, {(0, 1): 1})),
            ),
        )
        part = classify(net)
        assert part.critical_species == (0,)
        assert part.critical_reactions == (0,)  # x1^2 grows in the critical var
        assert part.species_order == (0, 1)
        assert part.reaction_order == (0, 1)
        assert part.nu1 == ((1, 0),)
        assert part.nu2 == ((0, -1),)
        assert part.nuc == ((1,),)

    def test_sign_mixed_raw_polynomial_flagged(self):
        net = ReactionNetwork(
            species=("A", "B"),
            reactions=(
                poly_reaction(
                    "r",
                    (1, 0),
                    Polynomial(2, {(2, 0): 1, (1, 0): -1}),
                ),
            ),
        )
        assert classify(net).conservative


def _swap_vars(poly):
    return Polynomial(
        2, {(e[1], e[0]): c for e, c in poly.terms.items()}
    )


class TestMonotoneNorm:
    def test_example2_critical_subsystem(self):
        alpha = construct_monotone_norm(EX2_NU, [0])
        assert alpha is not None and all(a >= 1 for a in alpha)
        assert sum(a * EX2_NU[i][0] for i, a in enumerate(alpha)) <= 0
        # the weighting from the worked example also satisfies the contract
        assert sum(a * EX2_NU[i][0] for i, a in enumerate((1, 3))) == -1

    def test_example5_none(self):
        nu5 = ((2, -1), (-1, 1))
        assert construct_monotone_norm(nu5, [0, 1]) is None

    def test_all_consuming_columns(self):
        nu = ((-1, 0), (0, -2))
        assert construct_monotone_norm(nu, [0, 1]) == (1, 1)

    def test_norm_actually_monotone(self):
        alpha = construct_monotone_norm(EX2_NU, [0])
        rng = np.random.default_rng(3)
        col = tuple(EX2_NU[i][0] for i in range(2))
        for _ in range(100):
            x = tuple(int(v) for v in rng.integers(0, 30, 2))
            y = tuple(a + c for a, c in zip(x, col))
            if all(v >= 0 for v in y):
                assert weighted_norm(alpha, y) <= weighted_norm(alpha, x)

    def test_none_iff_subsystem_has_unbounded_species(self):
        # monotone weights exist exactly when the reaction subsystem keeps
        # every species stoichiometrically bounded
        from momentcert.feasibility import unbounded_species

        rng = np.random.default_rng(99)
        for _ in range(80):
            n, m = int(rng.integers(1, 4)), int(rng.integers(1, 4))
            nu = tuple(
                tuple(int(v) for v in rng.integers(-3, 4, size=m))
                for _ in range(n)
            )
            subset = sorted(
                set(int(v) for v in rng.integers(0, m, size=rng.integers(1, m + 1)))
            )
            sub_nu = tuple(tuple(row[j] for j in subset) for row in nu)
            alpha = construct_monotone_norm(nu, subset)
            if alpha is None:
                assert unbounded_species(sub_nu), (
                    f"no weights for nu={nu} J={subset} yet subsystem bounded"
                )
            else:
                assert not unbounded_species(sub_nu)
                assert all(
                    sum(alpha[i] * nu[i][j] for i in range(n)) <= 0
                    for j in subset
                )


class TestCountingSequence:
    def test_example2_witness_sequence(self):
        xbar, seq = unboundedness_threshold(EX2_NU, (2, 3))
        assert seq.firings == (0, 0, 1, 1, 1)
        assert xbar == (0, 2)
        assert seq.verify()
        assert seq.partial_sums[0] == (0, 0)
        assert seq.partial_sums[-1] == (2, 3)

    def test_example1_threshold(self):
        xbar, seq = unboundedness_threshold(EX1_NU, (1, 1))
        assert xbar == (0, 2)

    def test_nonnegative_column_needs_no_threshold(self):
        nu = ((1,), (0,))
        xbar, _ = unboundedness_threshold(nu, (1,))
        assert xbar == (0, 0)

    def test_partials_stay_on_lattice_from_threshold(self):
        xbar, seq = unboundedness_threshold(EX2_NU, (2, 3))
        for u in seq.partial_sums:
            state = [
                xbar[i] + sum(EX2_NU[i][j] * u[j] for j in range(2))
                for i in range(2)
            ]
            assert min(state) >= 0

    def test_invalid_counting_sequence_detected(self):
        seq = counting_sequence_for((1, 1))
        broken = type(seq)(firings=seq.firings, partial_sums=seq.partial_sums[:-1])
        assert not broken.verify()


class TestExploreAccessible:
    def test_example1_frozen_at_start(self):
        sample = explore_accessible(make_ex1(), (1, 1))
        assert sample.states == frozenset({(1, 1)})
        assert sample.frontier_exhausted and not sample.cap_hit

    def test_conservation_line(self):
        sample = explore_accessible(make_conservation(), (2, 0))
        assert sample.states == frozenset({(2, 0), (1, 1), (0, 2)})
        assert sample.frontier_exhausted

    def test_all_disabled(self):
        net = make_ex4()
        sample = explore_accessible(net, (3, 0))  # needs both species present
        assert sample.states == frozenset({(3, 0)})

    def test_witness_paths_replay(self):
        net = make_conservation()
        sample = explore_accessible(net, (2, 0))
        for state in sample.states:
            x = list(sample.x0)
            for j in sample.path_to(state):
                col = net.reactions[j].column
                assert net.reactions[j].propensity.evaluate(x) > 0
                x = [a + c for a, c in zip(x, col)]
                assert min(x) >= 0
            assert tuple(x) == state

    def test_caps_mark_sample(self):
        sample = explore_accessible(make_ex2(), (10, 10), max_states=100)
        assert sample.cap_hit and not sample.frontier_exhausted
        assert len(sample.states) <= 100

    def test_certified_species_respect_alpha_bound(self):
        # weighted population alpha^T x never exceeds its initial value
        net = make_conservation()
        nu = net.nu()
        cert = decide_species_boundedness(nu, 0)
        sample = explore_accessible(net, (3, 2))
        bound = weighted_norm(cert.alpha, (3, 2))
        for state in sample.states:
            assert weighted_norm(cert.alpha, state) <= bound


class TestUnboundednessRealization:
    def test_example2_bfs_realizes_growth(self):
        net = make_ex2()
        nu = net.nu()
        out = decide_species_boundedness(nu, 0)
        xbar, _ = unboundedness_threshold(nu, out.w)
        x0 = tuple(v + 5 for v in xbar)
        sample = explore_accessible(net, x0, max_states=100_000, max_coord=25)
        assert max(s[0] for s in sample.states) > 20
