"""Identity suites: every displayed identity of the construction is re-proved
by exact exhaustive computation on a concrete calculus.

All suites enumerate basis elements and basis monomials at the stated
degrees; by multilinearity this is a complete proof for the instance, with
no sampling and no tolerances.  A failing case records both sides in the
expression-language normal form so it can be replayed with the CLI.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .calculus import FodcData, check_consistency
from .crossprod import (
    CrossAlgebra,
    DualElement,
    cross_act,
    cross_multiply,
    dual_act,
    gamma_coproduct,
    pair,
)
from .duality import check_covariance
from .hopf import check_hopf_axioms
from .report import SuiteReport
from .wedge import (
    GradedForm,
    check_graded_bialgebra,
    exterior_derivative,
    wedge_multiply,
)

ZERO = Fraction(0)
ONE = Fraction(1)

SUITE_NAMES = (
    "hopf_axioms",
    "hopf_axioms_dual",
    "covariance",
    "consistency",
    "graded_bialgebra",
    "differential",
    "contraction",
    "lie_commutes_d",
    "dual_pairing",
    "cartan",
)


def _timed(fn):
    def run(*args, **kwargs) -> SuiteReport:
        start = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed = time.perf_counter() - start
        return rep

    return run


def _monomials(ctx: CrossAlgebra, max_degree: int):
    dim = ctx.fodc.paired.alg.dim
    for deg in range(max_degree + 1):
        for w in ctx.wedge.basis.words[deg]:
            for a in range(dim):
                yield a, w


def _mono_form(ctx: CrossAlgebra, a: int, w) -> GradedForm:
    return GradedForm.monomial(ctx.wedge, a, w)


@_timed
def suite_differential(d: FodcData, maxdeg: int) -> SuiteReport:
    """d o d = 0 and the graded Leibniz rule on basis monomials."""
    ctx = CrossAlgebra.for_calculus(d, maxdeg)
    rep = SuiteReport("differential")
    zero = GradedForm.zero(ctx.wedge)
    monos = list(_monomials(ctx, maxdeg - 1))
    for a, w in monos:
        m = _mono_form(ctx, a, w)
        dd = exterior_derivative(exterior_derivative(m))
        rep.record(f"d(d({m}))", dd, zero, dd == zero)
    for a, wi in monos:
        x = _mono_form(ctx, a, wi)
        dx = exterior_derivative(x)
        sign = -ONE if len(wi) % 2 else ONE
        for b, wj in monos:
            if len(wi) + len(wj) > maxdeg - 1:
                continue
            y = _mono_form(ctx, b, wj)
            lhs = exterior_derivative(wedge_multiply(x, y))
            rhs = wedge_multiply(dx, y) + wedge_multiply(x, exterior_derivative(y)).scale(sign)
            rep.record(f"Leibniz d({x} ^ {y})", lhs, rhs, lhs == rhs)
    return rep


@_timed
def suite_contraction(d: FodcData, maxdeg: int = 2) -> SuiteReport:
    """gamma_i |> a = 0 and gamma_i |> da = chi_i |> a for every basis a."""
    ctx = CrossAlgebra.for_calculus(d, maxdeg)
    rep = SuiteReport("contraction")
    A = d.paired.alg
    zero = GradedForm.zero(ctx.wedge)
    for i in range(d.n):
        g = ctx.gamma(i)
        for a_idx in range(A.dim):
            a = A.basis(a_idx)
            lhs = dual_act(g, GradedForm.from_element(ctx.wedge, a))
            rep.record(f"gamma[{i + 1}] |> {a}", lhs, zero, lhs == zero)
            da = GradedForm.from_one_form(ctx.wedge, d.differential(a))
            lhs = dual_act(g, da)
            rhs = GradedForm.from_element(ctx.wedge, d.paired.left_act(d.chi[i], a))
            rep.record(f"gamma[{i + 1}] |> d({a})", lhs, rhs, lhs == rhs)
    return rep


@_timed
def suite_lie_commutes_d(d: FodcData, maxdeg: int) -> SuiteReport:
    """Lie derivatives commute with the exterior derivative."""
    ctx = CrossAlgebra.for_calculus(d, maxdeg)
    rep = SuiteReport("lie_commutes_d")
    D = d.paired.dual
    for h_idx in range(D.dim):
        h = ctx.dual_from_element(D.basis(h_idx))
        for a, w in _monomials(ctx, maxdeg - 1):
            m = _mono_form(ctx, a, w)
            lhs = dual_act(h, exterior_derivative(m))
            rhs = exterior_derivative(dual_act(h, m))
            rep.record(f"L_u[{D.basis_names[h_idx]}] d({m})", lhs, rhs, lhs == rhs)
    return rep


@_timed
def suite_dual_pairing(d: FodcData, maxdeg: int) -> SuiteReport:
    """The dual-side multiplication data, checked as functionals.

    Covers: the two-term coproduct of gamma_i against products of forms, the
    normal-ordering move gamma_i h = (r^j_i |> h) gamma_j on degree-one
    forms, the closed form of <gamma_i gamma_j, a w^m w^n>, and the
    vanishing of that functional on the degree-two relation space.
    """
    ctx = CrossAlgebra.for_calculus(d, max(maxdeg, 2))
    rep = SuiteReport("dual_pairing")
    A, D = d.paired.alg, d.paired.dual
    n = d.n

    # coproduct of gamma: <gamma_i, rho rho'> = sum <leg1, rho><leg2, rho'>
    monos = list(_monomials(ctx, 1))
    for i in range(n):
        g = ctx.gamma(i)
        legs = gamma_coproduct(ctx, i)
        for a, wi in monos:
            for b, wj in monos:
                if len(wi) + len(wj) != 1:
                    continue
                x = _mono_form(ctx, a, wi)
                y = _mono_form(ctx, b, wj)
                lhs = pair(g, wedge_multiply(x, y))
                rhs = sum((pair(t1, x) * pair(t2, y) for t1, t2 in legs), ZERO)
                rep.record(
                    f"<gamma[{i + 1}], ({x})({y})>", lhs, rhs, lhs == rhs
                )

    # normal-ordering move as functionals on degree-one monomials
    for i in range(n):
        for h_idx in range(D.dim):
            h = D.basis(h_idx)
            lhs_factors = (("g", i), ("h", h.coeffs))
            moved = [
                (j, d.paired.act_on_dual(d.r[j][i], h)) for j in range(n)
            ]
            for a in range(A.dim):
                for m in range(n):
                    lhs = ctx.pair_factors(lhs_factors, a, (m,))
                    rhs = ZERO
                    for j, hj in moved:
                        if hj.is_zero:
                            continue
                        rhs += ctx.pair_factors((("h", hj.coeffs), ("g", j)), a, (m,))
                    rep.record(
                        f"gamma[{i + 1}] u[{D.basis_names[h_idx]}] on e{a} w[{m + 1}]",
                        lhs,
                        rhs,
                        lhs == rhs,
                    )

    # closed form of the degree-two pairing
    sigma = ctx.wedge.braiding
    for i in range(n):
        for j in range(n):
            factors = (("g", i), ("g", j))
            for m in range(n):
                for nn in range(n):
                    for a in range(A.dim):
                        lhs = ZERO
                        for bw, q in ctx.wedge.basis.reduce_word((m, nn)):
                            lhs += q * ctx.pair_factors(factors, a, bw)
                        delta = ONE if (i == m and j == nn) else ZERO
                        rhs = A.counit_vec[a] * (delta - sigma.entry(m, nn, i, j))
                        rep.record(
                            f"<gamma[{i + 1}]gamma[{j + 1}], e{a} w[{m + 1}]w[{nn + 1}]>",
                            lhs,
                            rhs,
                            lhs == rhs,
                        )

    # the functional annihilates the degree-two relation space
    for ridx, rel in enumerate(ctx.wedge.basis.relation_bases[2]):
        for i in range(n):
            for j in range(n):
                total = ZERO
                for flat, coeff in enumerate(rel):
                    if coeff == 0:
                        continue
                    m, nn = divmod(flat, n)
                    delta = ONE if (i == m and j == nn) else ZERO
                    total += coeff * (delta - sigma.entry(m, nn, i, j))
                rep.record(
                    f"relation {ridx} killed by gamma[{i + 1}]gamma[{j + 1}]",
                    total,
                    ZERO,
                    total == 0,
                )
    return rep


@_timed
def suite_cartan(d: FodcData, maxdeg: int) -> SuiteReport:
    """The Cartan identity for the distinguished vector fields chi_i:
    chi_i |> rho = d(gamma_i |> rho) + gamma_i |> d(rho) on all basis
    monomials of degree < maxdeg, with the degree-one middle step reported
    term by term."""
    ctx = CrossAlgebra.for_calculus(d, maxdeg)
    rep = SuiteReport("cartan")
    A = d.paired.alg
    p = d.paired

    for i in range(d.n):
        g = ctx.gamma(i)
        chi = ctx.dual_from_element(d.chi[i])
        for a, w in _monomials(ctx, maxdeg - 1):
            rho = _mono_form(ctx, a, w)
            lhs = dual_act(chi, rho)
            rhs = exterior_derivative(dual_act(g, rho)) + dual_act(
                g, exterior_derivative(rho)
            )
            rep.record(f"Cartan chi[{i + 1}] on {rho}", lhs, rhs, lhs == rhs)

    # degree-one middle step: rho = a d(b), each term computed separately
    for i in range(d.n):
        g = ctx.gamma(i)
        chi = ctx.dual_from_element(d.chi[i])
        for a_idx in range(A.dim):
            a = A.basis(a_idx)
            ga = GradedForm.from_element(ctx.wedge, a)
            da = GradedForm.from_one_form(ctx.wedge, d.differential(a))
            for b_idx in range(A.dim):
                b = A.basis(b_idx)
                db = GradedForm.from_one_form(ctx.wedge, d.differential(b))
                adb = wedge_multiply(ga, db)
                chib = p.left_act(d.chi[i], b)

                t1 = dual_act(chi, adb)
                t1_expect = wedge_multiply(ga, dual_act(chi, db))
                for j in range(d.n):
                    cja = GradedForm.from_element(ctx.wedge, p.left_act(d.chi[j], a))
                    fj = ctx.dual_from_element(d.f[j][i])
                    t1_expect += wedge_multiply(cja, dual_act(fj, db))
                rep.record(
                    f"term chi[{i + 1}]|>(e{a_idx} d e{b_idx})",
                    t1,
                    t1_expect,
                    t1 == t1_expect,
                )

                t2 = exterior_derivative(dual_act(g, adb))
                t2_expect = wedge_multiply(
                    da, GradedForm.from_element(ctx.wedge, chib)
                ) + wedge_multiply(
                    ga,
                    GradedForm.from_one_form(ctx.wedge, d.differential(chib)),
                )
                rep.record(
                    f"term d(gamma[{i + 1}]|>(e{a_idx} d e{b_idx}))",
                    t2,
                    t2_expect,
                    t2 == t2_expect,
                )

                t3 = dual_act(g, wedge_multiply(da, db))
                t3_expect = -wedge_multiply(
                    da, GradedForm.from_element(ctx.wedge, chib)
                )
                for j in range(d.n):
                    cja = GradedForm.from_element(ctx.wedge, p.left_act(d.chi[j], a))
                    fj = ctx.dual_from_element(d.f[j][i])
                    t3_expect += wedge_multiply(cja, dual_act(fj, db))
                rep.record(
                    f"term gamma[{i + 1}]|>(d e{a_idx} ^ d e{b_idx})",
                    t3,
                    t3_expect,
                    t3 == t3_expect,
                )

                rep.record(
                    f"middle step chi[{i + 1}], a=e{a_idx}, b=e{b_idx}",
                    t1,
                    t2 + t3,
                    t1 == t2 + t3,
                )
    return rep


def run_suites(d: FodcData, maxdeg: int, names=None) -> list[SuiteReport]:
    """Run the named suites (all of them by default) in canonical order:
    axioms before consequences.  Suite order in the output is fixed
    regardless of selection."""
    chosen = list(names) if names else list(SUITE_NAMES)
    unknown = [n for n in chosen if n not in SUITE_NAMES]
    if unknown:
        raise ValueError(f"unknown suite: {unknown[0]}")
    makers = {
        "hopf_axioms": lambda: check_hopf_axioms(d.paired.alg),
        "hopf_axioms_dual": lambda: check_hopf_axioms(d.paired.dual),
        "covariance": lambda: check_covariance(d.paired),
        "consistency": lambda: check_consistency(d),
        "graded_bialgebra": lambda: check_graded_bialgebra(d, maxdeg),
        "differential": lambda: suite_differential(d, maxdeg),
        "contraction": lambda: suite_contraction(d, min(maxdeg, 2)),
        "lie_commutes_d": lambda: suite_lie_commutes_d(d, maxdeg),
        "dual_pairing": lambda: suite_dual_pairing(d, maxdeg),
        "cartan": lambda: suite_cartan(d, maxdeg),
    }
    out = []
    for name in SUITE_NAMES:
        if name not in chosen:
            continue
        start = time.perf_counter()
        rep = makers[name]()
        if not rep.elapsed:
            rep.elapsed = time.perf_counter() - start
        rep.suite = name
        out.append(rep)
    return out


def run_all(d: FodcData, maxdeg: int) -> list[SuiteReport]:
    """All suites in pedagogical order (axioms before consequences)."""
    return run_suites(d, maxdeg, None)
