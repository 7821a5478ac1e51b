"""Certificate checkers for moment growth bounds and moment blow-up.

Three sufficient-condition checkers over a network's exact drift:

* T1: a positive integer weighting of the critical species that is
  non-increasing under every critical reaction jump certifies that all
  moments exist for all time with an exponential growth bound.
* T2: a positive weighting gamma whose scalar drift gamma^T F has no
  positive coefficient on any monomial of degree >= 2 (and zero net drift
  for any reaction of degree > 2) certifies the same conclusion via the
  linear-growth drift bound gamma^T F(x) <= C(|x| + 1).
* T3: a positive weighting whose scalar drift has all coefficients >= 0
  and at least unit mass on pure powers x_i^beta (beta >= alpha_exp) for
  every species certifies gamma^T F(x) >= C|x|^alpha_exp, which forces
  E|X(t)|^r to be infinite at some finite time for r >= r_min.

The T2/T3 checkers are sound but incomplete: they decide coefficientwise
sufficient conditions, not polynomial inequalities, so INAPPLICABLE means
"cannot certify", never "the hypothesis is false".  Every emitted
certificate is re-verified algebraically and spot-checked at random
lattice points in exact arithmetic before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .boundedness import decide_subset_boundedness, weighted_norm
from .feasibility import FeasibilitySystem, integerize, solve
from .network import weighted_drift
from .polynomial import total_degree

SPOT_CHECK_POINTS = 200
SPOT_CHECK_RANGE = 50
_SPOT_SEED = 20240801

MOMENT_BOUND_CONCLUSION = (
    "for each r in N there exists mu_r with "
    "E|X(t)|^r <= E|X(0)|^r * exp(mu_r t) + exp(mu_r t) - 1"
)


@dataclass(frozen=True)
class MomentCertificate:
    theorem: str                  # "T1" | "T2"
    gamma: tuple                  # T1: integer weights on critical species
    full_gamma: tuple = None      # T1: weights on all species (proof's (g1, g2))
    C: Fraction = None            # T2: linear drift bound constant
    zero_drift_reactions: tuple = None  # T2: reactions with gamma^T nu_j = 0
    verified: bool = False
    spot_checks: int = 0

    @property
    def conclusion(self):
        return MOMENT_BOUND_CONCLUSION


@dataclass(frozen=True)
class BlowupCertificate:
    gamma: tuple
    alpha_exp: int
    C: Fraction
    r_min: int
    notes: str
    verified: bool = False
    spot_checks: int = 0

    @property
    def conclusion(self):
        return (
            f"E|X(t)|^r is infinite at some finite t for every r >= {self.r_min}; "
            "no claim is made for smaller orders"
        )


@dataclass(frozen=True)
class NotCertified:
    theorem: str
    status: str                   # "INFEASIBLE" (T1) | "INAPPLICABLE" (T2/T3)
    reason: str
    dual_ray: tuple = None        # (ineq_multipliers, eq_multipliers) when present

    def __bool__(self):
        return False


def _spot_points(nvars, count=SPOT_CHECK_POINTS):
    rng = random.Random(_SPOT_SEED)
    return [
        tuple(rng.randint(0, SPOT_CHECK_RANGE) for _ in range(nvars))
        for _ in range(count)
    ]


def _drift_linear_forms(net):
    """Per-monomial linear forms: coefficient of m in gamma^T F as a
    function of gamma is lin_m . gamma with lin_m[i] = sum_j nu_ij coef_m(a_j)."""
    n = net.n_species
    forms = {}
    for j, r in enumerate(net.reactions):
        for exps, coef in r.propensity.terms.items():
            lin = forms.setdefault(exps, [Fraction(0)] * n)
            for i in range(n):
                if r.column[i]:
                    lin[i] += r.column[i] * coef
    return {e: tuple(v) for e, v in forms.items()}


def check_theorem1(net, partition):
    """Critical-cone certificate: gamma > 0 integer, gamma^T nu_c <= 0."""
    nc = partition.n_critical_species
    mc = partition.n_critical_reactions
    if mc == 0:
        gamma = (1,) * nc
    else:
        ineq = []
        rhs = []
        for i in range(nc):
            row = [0] * nc
            row[i] = 1
            ineq.append(tuple(row))
            rhs.append(1)
        for col in range(mc):
            ineq.append(tuple(-partition.nuc[i][col] for i in range(nc)))
            rhs.append(0)
        out = solve(FeasibilitySystem(n_vars=nc, ineq_lhs=ineq, ineq_rhs=rhs))
        if not out.feasible:
            return NotCertified(
                theorem="T1",
                status="INFEASIBLE",
                reason=(
                    "no positive integer weighting of the critical species is "
                    "non-increasing under every critical reaction"
                ),
                dual_ray=(out.ineq_multipliers, out.eq_multipliers),
            )
        gamma = integerize(out.point, strict=range(nc))

    # extend to the full species set: weights for the non-critical species
    # come from their joint boundedness certificate, weights for critical
    # species from gamma; the sum is positive everywhere and non-increasing
    # under every critical jump.
    nu = net.nu()
    noncritical = tuple(
        i for i in range(net.n_species) if i not in set(partition.critical_species)
    )
    beta = (0,) * net.n_species
    if noncritical:
        sub = decide_subset_boundedness(nu, noncritical)
        if not hasattr(sub, "alpha"):
            raise AssertionError("non-critical species failed joint certification")
        beta = sub.alpha
    full = list(beta)
    for pos, i in enumerate(partition.critical_species):
        full[i] += gamma[pos]
    full = tuple(full)

    if any(g < 1 for g in gamma) or any(
        sum(gamma[i] * partition.nuc[i][c] for i in range(nc)) > 0 for c in range(mc)
    ):
        raise AssertionError("theorem 1 certificate failed re-verification")
    if any(v < 1 for v in full):
        raise AssertionError("full weighting is not strictly positive")

    # spot-check: the full weighted norm never increases under a critical jump
    checks = 0
    for pos in range(mc):
        j = partition.reaction_order[pos]
        column = tuple(nu[i][j] for i in range(net.n_species))
        for x in _spot_points(net.n_species, 100 // max(mc, 1) + 1):
            y = tuple(a + b for a, b in zip(x, column))
            if any(v < 0 for v in y):
                continue
            if weighted_norm(full, y) > weighted_norm(full, x):
                raise AssertionError("weighted norm increased under a critical jump")
            checks += 1
    return MomentCertificate(
        theorem="T1", gamma=gamma, full_gamma=full, verified=True, spot_checks=checks
    )


def check_theorem2(net):
    """Linear-drift certificate: gamma > 0 with gamma^T F(x) <= C(|x| + 1)."""
    n = net.n_species
    forms = _drift_linear_forms(net)
    ineq = []
    rhs = []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        ineq.append(tuple(row))
        rhs.append(1)
    for exps, lin in sorted(forms.items()):
        if total_degree(exps) >= 2:
            ineq.append(tuple(-v for v in lin))
            rhs.append(0)
    eq = []
    eq_rhs = []
    high_degree = []
    for j, r in enumerate(net.reactions):
        if r.propensity.degree() > 2:
            high_degree.append(j)
            eq.append(tuple(Fraction(c) for c in r.column))
            eq_rhs.append(Fraction(0))
    out = solve(
        FeasibilitySystem(
            n_vars=n, ineq_lhs=ineq, ineq_rhs=rhs, eq_lhs=eq, eq_rhs=eq_rhs
        )
    )
    if not out.feasible:
        reason = "drift coefficient system over gamma is infeasible"
        if high_degree:
            names = ", ".join(net.reactions[j].name for j in high_degree)
            reason += (
                f" (degree > 2 propensities force zero net drift for: {names})"
            )
        return NotCertified(
            theorem="T2",
            status="INAPPLICABLE",
            reason=reason,
            dual_ray=(out.ineq_multipliers, out.eq_multipliers),
        )
    gamma = out.point
    gf = weighted_drift(net, gamma)
    for exps, coef in gf.terms.items():
        if total_degree(exps) >= 2 and coef > 0:
            raise AssertionError("positive high-degree coefficient in gamma^T F")
    C = sum(
        (abs(c) for e, c in gf.terms.items() if total_degree(e) <= 1),
        start=Fraction(0),
    )
    zero_drift = tuple(
        j
        for j, r in enumerate(net.reactions)
        if sum(g * c for g, c in zip(gamma, r.column)) == 0
    )
    for j in high_degree:
        if j not in zero_drift:
            raise AssertionError("high-degree reaction kept nonzero drift")
    checks = 0
    for x in _spot_points(n):
        norm1 = sum(x)
        if gf.evaluate(x) > C * (norm1 + 1):
            raise AssertionError("gamma^T F exceeded C(|x|+1) at a spot check")
        checks += 1
    return MomentCertificate(
        theorem="T2",
        gamma=gamma,
        C=C,
        zero_drift_reactions=zero_drift,
        verified=True,
        spot_checks=checks,
    )


def check_theorem3(net, x0):
    """Blow-up certificate: gamma > 0 with gamma^T F(x) >= C|x|^alpha_exp.

    alpha_exp is scanned over integers 2..max_j deg(a_j); coefficients of
    gamma^T F must all be nonnegative with at least unit mass on pure
    powers x_i^beta (beta >= alpha_exp) for every species, which gives the
    lattice bound with C = N^(1-alpha_exp) via the power-mean inequality.
    """
    n = net.n_species
    x0 = tuple(int(v) for v in x0)
    if len(x0) != n:
        raise ValueError("x0 has wrong length")
    if all(v == 0 for v in x0):
        zero = (0,) * n
        live = [r.name for r in net.reactions if r.propensity.evaluate(zero) > 0]
        if not live:
            return NotCertified(
                theorem="T3",
                status="INAPPLICABLE",
                reason=(
                    "origin is both the initial and an absorbing state "
                    "(every propensity vanishes at 0)"
                ),
            )
        origin_note = f"origin not absorbing: positive propensity at 0 for {live[0]}"
    else:
        origin_note = "initial state is nonzero"

    max_deg = max((r.propensity.degree() for r in net.reactions), default=0)
    if max_deg < 2:
        return NotCertified(
            theorem="T3",
            status="INAPPLICABLE",
            reason="all propensities have degree <= 1; no superlinear drift bound",
        )
    forms = _drift_linear_forms(net)
    last_reason = None
    for alpha_exp in range(2, max_deg + 1):
        ineq = []
        rhs = []
        for i in range(n):
            row = [0] * n
            row[i] = 1
            ineq.append(tuple(row))
            rhs.append(1)
        for exps, lin in sorted(forms.items()):
            ineq.append(lin)
            rhs.append(0)
        feasible_mass = True
        for i in range(n):
            mass = [Fraction(0)] * n
            found = False
            for exps, lin in forms.items():
                if exps[i] >= alpha_exp and total_degree(exps) == exps[i]:
                    found = True
                    for k in range(n):
                        mass[k] += lin[k]
            if not found:
                feasible_mass = False
                last_reason = (
                    f"no pure power of species {net.species[i]} with exponent "
                    f">= {alpha_exp} occurs in the drift"
                )
                break
            ineq.append(tuple(mass))
            rhs.append(1)
        if not feasible_mass:
            continue
        out = solve(FeasibilitySystem(n_vars=n, ineq_lhs=ineq, ineq_rhs=rhs))
        if not out.feasible:
            last_reason = (
                f"coefficient system infeasible at alpha_exp={alpha_exp}"
            )
            continue
        gamma = out.point
        C = Fraction(1, n ** (alpha_exp - 1))
        gf = weighted_drift(net, gamma)
        if any(c < 0 for c in gf.terms.values()):
            raise AssertionError("negative coefficient in certified gamma^T F")
        for i in range(n):
            mass = sum(
                (
                    c
                    for e, c in gf.terms.items()
                    if e[i] >= alpha_exp and total_degree(e) == e[i]
                ),
                start=Fraction(0),
            )
            if mass < C * n ** (alpha_exp - 1):
                raise AssertionError("pure-power mass below the certified bound")
        checks = 0
        for x in _spot_points(n):
            norm1 = sum(x)
            if gf.evaluate(x) < C * Fraction(norm1) ** alpha_exp:
                raise AssertionError("gamma^T F fell below C|x|^alpha at a spot check")
            checks += 1
        return BlowupCertificate(
            gamma=gamma,
            alpha_exp=alpha_exp,
            C=C,
            r_min=max_deg,
            notes=origin_note,
            verified=True,
            spot_checks=checks,
        )
    return NotCertified(
        theorem="T3",
        status="INAPPLICABLE",
        reason=last_reason or "no certifiable alpha_exp",
    )
