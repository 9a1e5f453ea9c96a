"""Extremal sums of positive definite functions on finite abelian groups.

For a group G and a symmetric domain Omega (contains 0, closed under
negation), the constant computed here is the largest possible value of
sum_x f(x) / f(0) over positive definite f supported inside Omega.

Restricting to real even f loses nothing, so the unknowns are one value
per negation pair {x, -x} of Omega minus 0, with f(0) = 1 substituted
out. Positive definiteness is equivalent to nonnegativity of the
transform, one linear constraint per negation pair of characters, and
the whole problem is a linear program.

The LP is attacked through its dual, a minimum-cost column program:
box columns encode |f(x)| <= f(0) (valid for every positive definite f)
and character columns are generated lazily, priced by one transform of
the current iterate per round. Every feasible point of the column
program is an upper bound for the constant, so even a budget-truncated
run returns something rigorous.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bounds import BoundReport
from .config import (DEFAULT_TOLERANCES, LP_GROUP_ORDER_CAP, LP_PIVOT_CAP,
                     Tolerances)
from .errors import (CertificateInvalidError, InvalidHomomorphismError,
                     WitnessRejectedError)
from .groups import (Element, FiniteAbelianGroup, Subgroup, SymmetricDomain,
                     direct_product, image_domain, quotient_group,
                     subgroup_as_group, symmetric_domain)
from .harmonic import (GroupFunction, _axis_transform, dft_exact_signs,
                       is_positive_definite)
from .simplex import SingularBasisError, solve_column_lp


@dataclass
class LPProblem:
    """Data of the pair-reduced program for one (group, domain) instance.

    Variables: one per negation pair of ``domain`` minus 0, weight = pair
    size. Rows: one per negation pair of characters (the trivial character
    first), entries sum Re gamma(x) over the variable's pair. Row r states
    constants[r] + sum_q a[r,q] y_q >= 0; the default constants are all 1,
    which is f(0) substituted out. Other constants are allowed (that is
    how malformed, unsatisfiable rows are expressed) and make the program
    potentially infeasible.
    """

    group: FiniteAbelianGroup
    domain: SymmetricDomain
    pairs: list[tuple[Element, int]]
    dual_pairs: list[tuple[Element, int]]
    constants: np.ndarray
    exact: bool = False

    @property
    def n_vars(self) -> int:
        return len(self.pairs)

    @property
    def n_rows(self) -> int:
        return len(self.dual_pairs)

    def weight_vector(self):
        if self.exact:
            return np.array([Fraction(s) for _x, s in self.pairs], dtype=object)
        return np.array([float(s) for _x, s in self.pairs])

    def char_reals(self, t: Element):
        """Re gamma_t over the whole group, indexed like group.elements."""
        G = self.group
        if self.exact:
            v = [0] * G.order
            v[G.index(t)] = 1
            return dft_exact_signs(G, v)
        v = np.zeros(G.order)
        v[G.index(t)] = 1.0
        return _axis_transform(v, G.moduli, False).real

    def row(self, r: int):
        """Constraint row a_r with entries sum over pair q of Re gamma_r."""
        G = self.group
        re = self.char_reals(self.dual_pairs[r][0])
        if self.exact:
            return np.array(
                [Fraction(s) * re[G.index(x)] for x, s in self.pairs],
                dtype=object)
        return np.array([s * re[G.index(x)] for x, s in self.pairs])


def build_lp_problem(
    group: FiniteAbelianGroup,
    domain: SymmetricDomain,
    constants=None,
    exact: bool = False,
) -> LPProblem:
    if domain.group != group:
        raise ValueError("domain belongs to a different group")
    if exact and any(m not in (1, 2) for m in group.moduli):
        raise ValueError("exact mode needs every modulus in {1, 2}")
    pairs = domain.pair_representatives()
    dual_pairs = [(group.identity(), 1)] + group.pair_representatives(group.elements())
    n = len(dual_pairs)
    if constants is None:
        consts = np.ones(n)
    else:
        consts = np.asarray(constants, dtype=float)
        if consts.shape != (n,):
            raise ValueError(f"constants must have length {n}")
    return LPProblem(group, domain, pairs, dual_pairs, consts, exact)


@dataclass
class LPSolution:
    """Outcome of one solve.

    status ``optimal``: value is the certified optimum, gap tiny.
    status ``budget-exceeded``: value is still a valid upper bound and f a
    valid witness, only the two need not meet.
    status ``infeasible``: no function satisfies the rows; value/f/dual
    are absent. Only reachable through hand-built constants.
    """

    status: str
    value: float
    f: GroupFunction | None
    dual: np.ndarray | None
    gap: float
    problem: LPProblem | None = None
    exact_value: Fraction | None = None
    diagnostics: dict = field(default_factory=dict)


def _fold_box_weight(problem: LPProblem, lam, q: int, mu, sign: int) -> None:
    """Eliminate a box column's weight into character-row weights.

    The box constraint f(0) -+ f(x_q) >= 0 is the average of character
    rows with coefficients (1 -+ Re gamma(x_q)) / |G|, all nonnegative,
    so its dual weight mu spreads over the rows without changing either
    feasibility or (for unit constants) the objective.
    """
    G = problem.group
    re = problem.char_reals(problem.pairs[q][0])
    if problem.exact:
        inv = Fraction(1, G.order)
        for r, (t, s) in enumerate(problem.dual_pairs):
            lam[r] += mu * s * (1 - sign * re[G.index(t)]) * inv
    else:
        idx = [G.index(t) for t, _s in problem.dual_pairs]
        sizes = np.array([s for _t, s in problem.dual_pairs], dtype=float)
        lam += (mu / G.order) * sizes * (1.0 - sign * np.asarray(re)[idx])


def _certificate_from_weights(problem: LPProblem, weights: dict):
    """Nonnegative weight per constraint row, from the basic column weights."""
    p = problem.n_vars
    if problem.exact:
        lam = np.array([Fraction(0)] * problem.n_rows, dtype=object)
    else:
        lam = np.zeros(problem.n_rows)
    for cid, mu in weights.items():
        if mu == 0:
            continue
        if cid >= 2 * p:
            lam[cid - 2 * p] += mu
        elif cid < p:
            _fold_box_weight(problem, lam, cid, mu, +1)
        else:
            _fold_box_weight(problem, lam, cid - p, mu, -1)
    return lam


def verify_dual_certificate(problem: LPProblem, row_weights,
                            tolerances: Tolerances = DEFAULT_TOLERANCES):
    """Check a per-row weight vector and return the upper bound it proves.

    Requirements: weights nonnegative, and the weighted rows add up to
    minus the objective vector (within feasibility tolerance scaled by
    |G|; exactly, in exact mode). The certified bound is then
    1 + sum_r weight_r * constants_r, by weak duality.
    """
    G = problem.group
    lam = row_weights
    if len(lam) != problem.n_rows:
        raise CertificateInvalidError("one weight per constraint row required")
    exact = problem.exact and all(isinstance(v, (int, Fraction)) for v in lam)
    tol = 0 if exact else tolerances.feasibility
    for r in range(problem.n_rows):
        if lam[r] < -tol:
            raise CertificateInvalidError(f"negative weight on row {r}")
    # sum_r lam_r Re gamma_{t_r}(x) for all x at once: transform of the
    # weight vector laid out on the character side
    if exact:
        u = [0] * G.order
        for r, (t, _s) in enumerate(problem.dual_pairs):
            u[G.index(t)] = lam[r]
        spread = dft_exact_signs(G, u)
        bad = 0
        for q, (x, s) in enumerate(problem.pairs):
            if s * spread[G.index(x)] + s != 0:
                bad = max(bad, abs(s * spread[G.index(x)] + s))
        if bad != 0:
            raise CertificateInvalidError(f"row combination misses objective by {bad}")
        return Fraction(1) + sum(
            lam[r] * Fraction(float(problem.constants[r]))
            for r in range(problem.n_rows))
    u = np.zeros(G.order)
    for r, (t, _s) in enumerate(problem.dual_pairs):
        u[G.index(t)] = float(lam[r])
    spread = _axis_transform(u, G.moduli, False).real
    resid = 0.0
    for q, (x, s) in enumerate(problem.pairs):
        resid = max(resid, abs(s * spread[G.index(x)] + s))
    if resid > tolerances.feasibility * max(1.0, float(G.order)):
        raise CertificateInvalidError(
            f"row combination misses objective by {resid:.3e}")
    return 1.0 + float(np.dot(np.asarray(lam, dtype=float), problem.constants))


def _embed(problem: LPProblem, y) -> np.ndarray:
    """Full value table of the even function with f(0)=1, f(+-x_q)=y_q."""
    G = problem.group
    vals = np.zeros(G.order)
    vals[0] = 1.0
    for q, (x, _s) in enumerate(problem.pairs):
        vals[G.index(x)] = float(y[q])
        vals[G.index(G.neg(x))] = float(y[q])
    return vals


def _mixed_witness(problem: LPProblem, y) -> tuple[GroupFunction, float]:
    """Project the iterate to a genuinely feasible witness.

    Mixing with a small multiple of the unit impulse lifts any slightly
    negative transform values to zero and keeps the support inside the
    domain; the cost is a proportional shrink of the ratio.
    """
    G = problem.group
    vals = _embed(problem, y)
    fhat = _axis_transform(vals, G.moduli, False).real
    s = max(0.0, -float(fhat.min()))
    if s > 0.0:
        vals = vals / (1.0 + s)
        vals[0] += s / (1.0 + s)
    f = GroupFunction(G, vals)
    return f, float(vals.sum())


def _solve_core(problem: LPProblem, tolerances: Tolerances,
                pivot_cap: int) -> LPSolution:
    G = problem.group
    p = problem.n_vars
    exact = problem.exact

    if p == 0:
        one = Fraction(1) if exact else None
        f = GroupFunction(G, _embed(problem, []))
        lam = (np.array([Fraction(0)] * problem.n_rows, dtype=object)
               if exact else np.zeros(problem.n_rows))
        return LPSolution("optimal", 1.0, f, lam, 0.0, problem, one)

    w = problem.weight_vector()
    if exact:
        pos = Fraction(1)
        consts = [Fraction(float(c)) for c in problem.constants]
    else:
        pos = 1.0
        consts = [float(c) for c in problem.constants]

    initial = []
    for q in range(p):
        e = np.zeros(p, dtype=object if exact else float)
        e[q] = pos
        initial.append((q, e.copy(), pos))
        e2 = np.zeros(p, dtype=object if exact else float)
        e2[q] = -pos
        initial.append((p + q, e2, pos))

    offered: set[int] = set()
    dual_idx = [G.index(t) for t, _s in problem.dual_pairs]
    row_cache: dict[int, np.ndarray] = {}

    def char_column(r: int) -> np.ndarray:
        if r not in row_cache:
            row_cache[r] = -problem.row(r)
        return row_cache[r]

    def price(pi):
        if exact:
            fvals = [Fraction(0)] * G.order
            fvals[0] = Fraction(1)
            for q, (x, _s) in enumerate(problem.pairs):
                fvals[G.index(x)] = pi[q]
                fvals[G.index(G.neg(x))] = pi[q]
            fhat = dft_exact_signs(G, fvals)
            viol = [(consts[r] - 1 + fhat[dual_idx[r]], r)
                    for r in range(problem.n_rows)
                    if r not in offered and consts[r] - 1 + fhat[dual_idx[r]] < 0]
        else:
            fvals = _embed(problem, pi)
            fhat = _axis_transform(fvals, G.moduli, False).real
            rc = np.asarray(consts) - 1.0 + fhat[dual_idx]
            viol = [(rc[r], int(r))
                    for r in np.flatnonzero(rc < -tolerances.feasibility)
                    if int(r) not in offered]
        viol.sort(key=lambda t: (t[0], t[1]))
        out = []
        for _rc, r in viol[:32]:
            offered.add(r)
            out.append((2 * p + r, char_column(r), consts[r]))
        return out

    start = list(range(p))  # every weight is positive, so box+ columns
    try:
        res = solve_column_lp(
            w, initial, price, exact=exact,
            entering_tol=tolerances.feasibility,
            pivot_cap=pivot_cap, start_basis=start)
        restarts = 0
    except SingularBasisError:
        # deterministic tiny perturbation of the objective, then re-solve;
        # the certificate check against the unperturbed data still applies
        wp = np.array([w[q] * (1.0 + 1e-9 * (q + 1) / p) for q in range(p)])
        offered.clear()
        res = solve_column_lp(
            wp, initial, price, exact=False,
            entering_tol=tolerances.feasibility,
            pivot_cap=pivot_cap, start_basis=start)
        restarts = 1

    diag = {"pivots": res.pivots, "perturbed_restarts": restarts}
    diag.update(res.diagnostics)

    if res.status == "infeasible":
        return LPSolution("infeasible", float("nan"), None, None,
                          float("nan"), problem, None, diag)

    lam = _certificate_from_weights(problem, res.weights)
    upper = verify_dual_certificate(problem, lam, tolerances)
    f, primal = _mixed_witness(problem, res.pi)
    gap = abs(float(upper) - primal)
    exact_value = None
    if exact and res.status == "optimal":
        exact_value = Fraction(1) + res.objective
    return LPSolution(res.status, float(upper), f, lam, gap, problem,
                      exact_value, diag)


def solve_lp(problem: LPProblem, mode: str = "float",
             tolerances: Tolerances = DEFAULT_TOLERANCES,
             pivot_cap: int = LP_PIVOT_CAP) -> LPSolution:
    """Solve a built problem in ``float`` or ``exact-rational`` mode."""
    if mode not in ("float", "exact-rational"):
        raise ValueError("mode must be 'float' or 'exact-rational'")
    want_exact = mode == "exact-rational"
    if want_exact and any(m not in (1, 2) for m in problem.group.moduli):
        raise ValueError("exact-rational mode needs every modulus in {1, 2}")
    if want_exact != problem.exact:
        problem = LPProblem(problem.group, problem.domain, problem.pairs,
                            problem.dual_pairs, problem.constants, want_exact)
    return _solve_core(problem, tolerances, pivot_cap)


def turan_constant(group: FiniteAbelianGroup, domain: SymmetricDomain,
                   mode: str = "float",
                   tolerances: Tolerances = DEFAULT_TOLERANCES,
                   pivot_cap: int = LP_PIVOT_CAP,
                   order_cap: int = LP_GROUP_ORDER_CAP) -> LPSolution:
    """Largest sum/f(0) ratio over positive definite f supported in domain.

    Groups beyond ``order_cap`` are not solved; the trivial estimate |domain|
    comes back with status budget-exceeded together with the unit impulse,
    which is always a feasible witness.
    """
    if domain.group != group:
        raise ValueError("domain belongs to a different group")
    if group.order > order_cap:
        vals = np.zeros(group.order)
        vals[0] = 1.0
        f = GroupFunction(group, vals)
        return LPSolution("budget-exceeded", float(domain.size), f, None,
                          float(domain.size) - 1.0, None, None,
                          {"reason": f"group order {group.order} over cap {order_cap}"})
    problem = build_lp_problem(group, domain, exact=(mode == "exact-rational"))
    return solve_lp(problem, mode, tolerances, pivot_cap)


def witness_ratio(f: GroupFunction, domain: SymmetricDomain,
                  tolerances: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Certified lower bound sum f / f(0) from an explicit witness."""
    G = f.group
    if domain.group != G:
        raise ValueError("witness and domain live on different groups")
    if abs(f(G.identity())) == 0:
        raise WitnessRejectedError("witness has f(0) = 0", offender=G.identity())
    for x in f.support():
        if x not in domain:
            raise WitnessRejectedError(
                f"witness support leaks outside the domain at {x}", offender=x)
    report = is_positive_definite(f)
    if not report.flag:
        fhat = _axis_transform(f.values, G.moduli, False).real
        worst = G.element(int(np.argmin(fhat)))
        raise WitnessRejectedError(
            f"witness transform dips to {report.min_real:.3e} at character {worst}",
            offender=worst)
    ratio = f.total() / f(G.identity())
    return BoundReport(ratio, "witness", "lower", {"f": f})


def subgroup_bound(group: FiniteAbelianGroup, domain: SymmetricDomain,
                   K: Subgroup, **solve_kwargs) -> BoundReport:
    """Upper bound (|G|/|K|) * constant of (K, domain intersect K)."""
    if K.group != group or domain.group != group:
        raise ValueError("subgroup and domain must belong to the group")
    Ks, to_sub, _from_sub = subgroup_as_group(K)
    inner_elems = [to_sub[x] for x in domain.elements if x in K]
    inner = symmetric_domain(Ks, inner_elems)
    sol = turan_constant(Ks, inner, **solve_kwargs)
    factor = Fraction(group.order, K.order)
    value = float(factor) * sol.value
    if sol.exact_value is not None:
        value = factor * sol.exact_value
    return BoundReport(value, "subgroup", "upper",
                       {"K": sorted(K.elements), "inner": sol})


def quotient_bound(group: FiniteAbelianGroup, domain: SymmetricDomain,
                   K: Subgroup, **solve_kwargs) -> BoundReport:
    """Upper bound constant(G/K, projected domain) * constant(K, domain in K)."""
    if K.group != group or domain.group != group:
        raise ValueError("subgroup and domain must belong to the group")
    Q, project = quotient_group(group, K)
    theta = symmetric_domain(Q, {project(x) for x in domain.elements})
    outer = turan_constant(Q, theta, **solve_kwargs)
    inner_elems = [x for x in domain.elements if x in K]
    cert = {"K": sorted(K.elements), "outer": outer}
    if len(inner_elems) == 1:
        value = outer.value
        cert["inner"] = None
    else:
        Ks, to_sub, _ = subgroup_as_group(K)
        inner = turan_constant(
            Ks, symmetric_domain(Ks, [to_sub[x] for x in inner_elems]),
            **solve_kwargs)
        value = outer.value * inner.value
        cert["inner"] = inner
    return BoundReport(value, "quotient", "upper", cert)


def automorphism_image_constant(group: FiniteAbelianGroup,
                                domain: SymmetricDomain, images,
                                **solve_kwargs) -> LPSolution:
    """Solve on the automorphic image of the domain (the value is preserved)."""
    mapped = image_domain(domain, images)  # raises if not bijective
    return turan_constant(group, mapped, **solve_kwargs)


def product_constant(g1: FiniteAbelianGroup, d1: SymmetricDomain,
                     g2: FiniteAbelianGroup, d2: SymmetricDomain,
                     **solve_kwargs) -> LPSolution:
    """Solve on the direct product domain d1 x d2 inside g1 x g2."""
    if d1.group != g1 or d2.group != g2:
        raise ValueError("domains must match their groups")
    G = direct_product(g1, g2)
    elems = [x + y for x in d1.elements for y in d2.elements]
    return turan_constant(G, symmetric_domain(G, elems), **solve_kwargs)
