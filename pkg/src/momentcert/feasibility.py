"""Exact feasibility solver for rational linear systems.

Decides systems of the form

    u >= 0 (optional),  A u >= b,  C u = d

over exact rationals with a phase-1 simplex under Bland's pivoting rule
(guaranteed termination, no tolerances).  Both outcomes carry
self-verifying evidence: a FEASIBLE point is re-checked against every
constraint by substitution, and an INFEASIBLE outcome carries a dual ray
(Farkas multipliers) whose contradiction is re-checked exactly.

Problem sizes here are tiny (a few dozen rows/columns), so a dense
Fraction tableau is the right tool.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm


def _frac_matrix(rows, width):
    out = []
    for row in rows:
        row = tuple(Fraction(v) for v in row)
        if len(row) != width:
            raise ValueError(f"row has {len(row)} entries, expected {width}")
        out.append(row)
    return tuple(out)


@dataclass(frozen=True)
class FeasibilitySystem:
    """{u in R^n : u >= 0 (if nonneg), ineq_lhs u >= ineq_rhs, eq_lhs u = eq_rhs}."""

    n_vars: int
    ineq_lhs: tuple = ()
    ineq_rhs: tuple = ()
    eq_lhs: tuple = ()
    eq_rhs: tuple = ()
    nonneg: bool = True

    def __post_init__(self):
        if self.n_vars < 1:
            raise ValueError("n_vars must be >= 1")
        object.__setattr__(self, "ineq_lhs", _frac_matrix(self.ineq_lhs, self.n_vars))
        object.__setattr__(self, "eq_lhs", _frac_matrix(self.eq_lhs, self.n_vars))
        object.__setattr__(self, "ineq_rhs", tuple(Fraction(v) for v in self.ineq_rhs))
        object.__setattr__(self, "eq_rhs", tuple(Fraction(v) for v in self.eq_rhs))
        if len(self.ineq_lhs) != len(self.ineq_rhs):
            raise ValueError("inequality lhs/rhs size mismatch")
        if len(self.eq_lhs) != len(self.eq_rhs):
            raise ValueError("equality lhs/rhs size mismatch")

    def satisfied_by(self, point):
        """Exact substitution check of every constraint."""
        if len(point) != self.n_vars:
            return False
        point = [Fraction(v) for v in point]
        if self.nonneg and any(v < 0 for v in point):
            return False
        for row, rhs in zip(self.ineq_lhs, self.ineq_rhs):
            if sum(a * v for a, v in zip(row, point)) < rhs:
                return False
        for row, rhs in zip(self.eq_lhs, self.eq_rhs):
            if sum(a * v for a, v in zip(row, point)) != rhs:
                return False
        return True


@dataclass(frozen=True)
class FeasibilityOutcome:
    """Either a feasible point or a dual ray certifying infeasibility.

    For an infeasible system the multipliers (y for inequalities, y >= 0,
    z for equalities, z free) satisfy  A^T y + C^T z <= 0  componentwise
    together with  b^T y + d^T z > 0; combined with u >= 0 this yields
    the contradiction 0 < b^T y + d^T z <= (A^T y + C^T z)^T u <= 0.
    """

    feasible: bool
    point: tuple = None
    ineq_multipliers: tuple = None
    eq_multipliers: tuple = None
    verified: bool = field(default=False, compare=False)

    def __bool__(self):
        return self.feasible


def _verify_ray(sys, y, z):
    if any(v < 0 for v in y):
        return False
    n = sys.n_vars
    combo = [Fraction(0)] * n
    for mult, row in zip(y, sys.ineq_lhs):
        for k in range(n):
            combo[k] += mult * row[k]
    for mult, row in zip(z, sys.eq_lhs):
        for k in range(n):
            combo[k] += mult * row[k]
    if sys.nonneg:
        # 0 < b.y + d.z <= combo.u <= 0 for any u >= 0 needs combo <= 0
        if any(c > 0 for c in combo):
            return False
    else:
        # free variables: the contradiction needs combo identically zero
        if any(c != 0 for c in combo):
            return False
    rhs_combo = sum(m * r for m, r in zip(y, sys.ineq_rhs)) + sum(
        m * r for m, r in zip(z, sys.eq_rhs)
    )
    return rhs_combo > 0


def solve(sys: FeasibilitySystem) -> FeasibilityOutcome:
    """Exact feasibility decision with self-verifying evidence."""
    if not sys.nonneg:
        # split u = u+ - u-; a dual ray of the split system folds back to
        # multipliers with A^T y + C^T z = 0, which verifies unchanged.
        split = FeasibilitySystem(
            n_vars=2 * sys.n_vars,
            ineq_lhs=[tuple(row) + tuple(-a for a in row) for row in sys.ineq_lhs],
            ineq_rhs=sys.ineq_rhs,
            eq_lhs=[tuple(row) + tuple(-a for a in row) for row in sys.eq_lhs],
            eq_rhs=sys.eq_rhs,
            nonneg=True,
        )
        out = solve(split)
        if out.feasible:
            n = sys.n_vars
            point = tuple(out.point[i] - out.point[n + i] for i in range(n))
            if not sys.satisfied_by(point):
                raise AssertionError("solver returned an unverifiable point")
            return FeasibilityOutcome(True, point=point, verified=True)
        if not _verify_ray(sys, out.ineq_multipliers, out.eq_multipliers):
            raise AssertionError("solver returned an unverifiable dual ray")
        return FeasibilityOutcome(
            False,
            ineq_multipliers=out.ineq_multipliers,
            eq_multipliers=out.eq_multipliers,
            verified=True,
        )

    n_ineq = len(sys.ineq_lhs)
    n_eq = len(sys.eq_lhs)
    m = n_ineq + n_eq
    n_struct = sys.n_vars + n_ineq  # original vars + surplus slacks

    if m == 0:
        point = (Fraction(0),) * sys.n_vars
        return FeasibilityOutcome(True, point=point, verified=True)

    # standard form rows: [A | -I] x = b for inequalities, [C | 0] x = d
    rows = []
    rhs = []
    for i, (row, b) in enumerate(zip(sys.ineq_lhs, sys.ineq_rhs)):
        r = list(row) + [Fraction(0)] * n_ineq
        r[sys.n_vars + i] = Fraction(-1)
        rows.append(r)
        rhs.append(Fraction(b))
    for row, d in zip(sys.eq_lhs, sys.eq_rhs):
        rows.append(list(row) + [Fraction(0)] * n_ineq)
        rhs.append(Fraction(d))

    # normalize rhs >= 0, remembering the flip signs for the dual ray
    sigma = []
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
            sigma.append(Fraction(-1))
        else:
            sigma.append(Fraction(1))

    # tableau columns: structural vars, artificials, rhs
    width = n_struct + m + 1
    T = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * m + [rhs[i]]
        row[n_struct + i] = Fraction(1)
        T.append(row)
    basis = [n_struct + i for i in range(m)]

    # phase-1 objective: minimize sum of artificials.
    # reduced cost row r_j = c_j - sum over basic rows of c_B * T[i][j]
    red = [Fraction(0)] * width
    for j in range(width):
        s = sum(T[i][j] for i in range(m))
        c_j = Fraction(1) if n_struct <= j < n_struct + m else Fraction(0)
        red[j] = c_j - s
    # red[-1] currently holds -objective

    def pivot(r, c):
        piv = T[r][c]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][c]:
                f = T[i][c]
                T[i] = [v - f * w for v, w in zip(T[i], T[r])]
        f = red[c]
        if f:
            for j in range(width):
                red[j] -= f * T[r][j]
        basis[r] = c

    while True:
        # Bland: entering = lowest-index column with negative reduced cost
        enter = -1
        for j in range(width - 1):
            if red[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise AssertionError("phase-1 objective unbounded; cannot happen")
        pivot(leave, enter)

    objective = -red[-1]
    if objective > 0:
        # infeasible: simplex multipliers from the artificial reduced costs
        pi = [Fraction(1) - red[n_struct + k] for k in range(m)]
        y = tuple(sigma[i] * pi[i] for i in range(n_ineq))
        z = tuple(sigma[n_ineq + i] * pi[n_ineq + i] for i in range(n_eq))
        if not _verify_ray(sys, y, z):
            raise AssertionError("solver returned an unverifiable dual ray")
        return FeasibilityOutcome(
            False, ineq_multipliers=y, eq_multipliers=z, verified=True
        )

    x = [Fraction(0)] * n_struct
    for i, b in enumerate(basis):
        if b < n_struct:
            x[b] = T[i][-1]
    point = tuple(x[: sys.n_vars])
    if not sys.satisfied_by(point):
        raise AssertionError("solver returned an unverifiable point")
    return FeasibilityOutcome(True, point=point, verified=True)


def integerize(point, strict=()):
    """Scale a rational vector by the lcm of denominators to integers.

    Valid for points of systems that are invariant under positive scaling
    (all certificate systems here are cones once the >=1 normalizations
    are read as >0).  Raises if a coordinate listed in `strict` is zero,
    since no scaling can make it positive.
    """
    point = [Fraction(v) for v in point]
    for i in strict:
        if point[i] == 0:
            raise ValueError(f"coordinate {i} is zero but must be strictly positive")
    scale = lcm(*(v.denominator for v in point)) if point else 1
    out = []
    for v in point:
        w = v * scale
        assert w.denominator == 1
        out.append(int(w))
    return tuple(out)


def species_boundedness_system(nu, i):
    """{alpha >= 0, alpha_i >= 1, alpha^T nu <= 0 columnwise} for species i.

    nu is given as N rows of M integers (species x reactions).
    """
    n = len(nu)
    m = len(nu[0]) if n else 0
    if not 0 <= i < n:
        raise ValueError(f"species index {i} out of range")
    ineq = []
    rhs = []
    row = [Fraction(0)] * n
    row[i] = Fraction(1)
    ineq.append(tuple(row))
    rhs.append(Fraction(1))
    for j in range(m):
        ineq.append(tuple(Fraction(-nu[k][j]) for k in range(n)))
        rhs.append(Fraction(0))
    return FeasibilitySystem(n_vars=n, ineq_lhs=ineq, ineq_rhs=rhs)


def subset_boundedness_system(nu, indices):
    """{alpha >= 0, alpha_i >= 1 for i in indices, alpha^T nu <= 0}."""
    n = len(nu)
    m = len(nu[0]) if n else 0
    ineq = []
    rhs = []
    for i in sorted(set(indices)):
        if not 0 <= i < n:
            raise ValueError(f"species index {i} out of range")
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        ineq.append(tuple(row))
        rhs.append(Fraction(1))
    for j in range(m):
        ineq.append(tuple(Fraction(-nu[k][j]) for k in range(n)))
        rhs.append(Fraction(0))
    return FeasibilitySystem(n_vars=n, ineq_lhs=ineq, ineq_rhs=rhs)


def gain_witness_system(nu, indices):
    """{w >= 0, nu w >= 0, (nu w)_i >= 1 for i in indices}."""
    n = len(nu)
    m = len(nu[0]) if n else 0
    want = set(indices)
    ineq = []
    rhs = []
    for k in range(n):
        row = tuple(Fraction(nu[k][j]) for j in range(m))
        ineq.append(row)
        rhs.append(Fraction(1) if k in want else Fraction(0))
    return FeasibilitySystem(n_vars=m, ineq_lhs=ineq, ineq_rhs=rhs)


def _species_is_bounded(nu, i):
    return solve(species_boundedness_system(nu, i)).feasible


def unbounded_species(nu):
    """Set of stoichiometrically unbounded species indices."""
    return tuple(i for i in range(len(nu)) if not _species_is_bounded(nu, i))


def alternative_witness(nu, i):
    """Integer witness w with nu w >= 0 and (nu w)_i >= 1, or None.

    Whenever species i is unbounded the witness is drawn from the stacked
    system demanding a simultaneous gain in every unbounded species: the
    sum of per-species witnesses shows that system is always feasible, and
    its vertex is the canonical "growth bundle" (e.g. repeating it from a
    large enough state grows every unbounded species at once).
    """
    if _species_is_bounded(nu, i):
        return None
    unbounded = unbounded_species(nu)
    out = solve(gain_witness_system(nu, unbounded))
    if not out.feasible:
        raise AssertionError(
            "witness system infeasible for unbounded species; "
            "theorem of alternatives violated"
        )
    return integerize(out.point)
