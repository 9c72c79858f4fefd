import random
from fractions import Fraction

import pytest

from hopfcalc.calculus import CalculusError
from hopfcalc.crossprod import (
    CrossAlgebra,
    CrossElement,
    DualElement,
    cross_act,
    cross_multiply,
    dual_act,
    dual_multiply,
    gamma_coproduct,
    inner_derivation,
    lie_derivative,
    pair,
)
from hopfcalc.wedge import GradedForm, exterior_derivative, wedge_multiply

F = Fraction


def ctx_for(fodc, maxdeg=3):
    return CrossAlgebra.for_calculus(fodc, maxdeg)


# ---------------------------------------------------------------------------
# pairing


def test_gamma_pairs_with_one_forms(all_calculi):
    for fodc in all_calculi.values():
        ctx = ctx_for(fodc)
        A = fodc.paired.alg
        for i in range(fodc.n):
            g = ctx.gamma(i)
            for a in range(A.dim):
                for j in range(fodc.n):
                    rho = GradedForm.monomial(ctx.wedge, a, (j,))
                    expected = A.counit_vec[a] * (F(1) if i == j else F(0))
                    assert pair(g, rho) == expected


def test_gamma_vanishes_off_degree_one(z3):
    ctx = ctx_for(z3)
    g = ctx.gamma(0)
    A = z3.paired.alg
    assert pair(g, GradedForm.from_element(ctx.wedge, A.basis(0))) == 0
    assert pair(g, GradedForm.word(ctx.wedge, (0, 1))) == 0


def test_h_pairing_matches_base_duality(s3):
    ctx = ctx_for(s3)
    A, D = s3.paired.alg, s3.paired.dual
    for h in range(D.dim):
        de = ctx.dual_from_element(D.basis(h))
        for a in range(A.dim):
            rho = GradedForm.from_element(ctx.wedge, A.basis(a))
            assert pair(de, rho) == s3.paired.pair(D.basis(h), A.basis(a))


def test_degree_two_pairing_closed_form(all_calculi):
    for fodc in all_calculi.values():
        ctx = ctx_for(fodc)
        A = fodc.paired.alg
        sigma = ctx.wedge.braiding
        n = fodc.n
        for i in range(n):
            for j in range(n):
                gg = dual_multiply(ctx.gamma(i), ctx.gamma(j))
                for m in range(n):
                    for nn in range(n):
                        for a in range(A.dim):
                            rho_terms = {}
                            for bw, q in ctx.wedge.basis.reduce_word((m, nn)):
                                rho_terms[(a, bw)] = q
                            rho = GradedForm(ctx.wedge, rho_terms)
                            delta = F(1) if (i == m and j == nn) else F(0)
                            expected = A.counit_vec[a] * (
                                delta - sigma.entry(m, nn, i, j)
                            )
                            assert pair(gg, rho) == expected


def test_transposed_braiding_breaks_closed_form_on_s3(s3):
    # negative control: with the row/column convention transposed, at least
    # one index tuple disagrees (the S3 braiding matrix is not symmetric)
    ctx = ctx_for(s3)
    A = s3.paired.alg
    sigma = ctx.wedge.braiding
    n = 3
    mismatches = 0
    for i in range(n):
        for j in range(n):
            gg = dual_multiply(ctx.gamma(i), ctx.gamma(j))
            for m in range(n):
                for nn in range(n):
                    rho_terms = {}
                    for bw, q in ctx.wedge.basis.reduce_word((m, nn)):
                        rho_terms[(0, bw)] = q
                    rho = GradedForm(ctx.wedge, rho_terms)
                    delta = F(1) if (i == m and j == nn) else F(0)
                    transposed = A.counit_vec[0] * (delta - sigma.entry(i, j, m, nn))
                    if pair(gg, rho) != transposed:
                        mismatches += 1
    assert mismatches > 0


def test_pairing_kills_degree_two_relations(all_calculi):
    for fodc in all_calculi.values():
        ctx = ctx_for(fodc)
        sigma = ctx.wedge.braiding
        n = fodc.n
        for rel in ctx.wedge.basis.relation_bases[2]:
            for i in range(n):
                for j in range(n):
                    total = F(0)
                    for flat, coeff in enumerate(rel):
                        if coeff == 0:
                            continue
                        m, nn = divmod(flat, n)
                        delta = F(1) if (i == m and j == nn) else F(0)
                        total += coeff * (delta - sigma.entry(m, nn, i, j))
                    assert total == 0


# ---------------------------------------------------------------------------
# coproduct of gamma and dual multiplication


def test_gamma_coproduct_shape(z2):
    ctx = ctx_for(z2)
    legs = gamma_coproduct(ctx, 0)
    assert legs[0][0] == ctx.dual_one()
    assert legs[0][1] == ctx.gamma(0)
    assert legs[1][0] == ctx.gamma(0)
    assert legs[1][1] == ctx.dual_from_element(z2.paired.dual.basis(1))


def test_gamma_coproduct_counit_side(z3):
    # (eps (x) id) applied to the coproduct gives gamma back:
    # eps of the dual side is evaluation on the unit form
    ctx = ctx_for(z3)
    one = GradedForm.one(ctx.wedge)
    for i in range(2):
        total = DualElement(ctx, {})
        for t1, t2 in gamma_coproduct(ctx, i):
            total += t2.scale(pair(t1, one))
        assert total == ctx.gamma(i)


def test_gamma_coproduct_pairing_consistency(z3):
    # <gamma_i, rho rho'> = sum <leg1, rho> <leg2, rho'>
    ctx = ctx_for(z3)
    A = z3.paired.alg
    monos = [GradedForm.from_element(ctx.wedge, A.basis(a)) for a in range(A.dim)]
    monos += [
        GradedForm.monomial(ctx.wedge, a, (j,)) for a in range(A.dim) for j in range(2)
    ]
    for i in range(2):
        g = ctx.gamma(i)
        legs = gamma_coproduct(ctx, i)
        for x in monos:
            for y in monos:
                lhs = pair(g, wedge_multiply(x, y))
                rhs = sum((pair(t1, x) * pair(t2, y) for t1, t2 in legs), F(0))
                assert lhs == rhs


def test_dual_multiply_by_unit(z3):
    ctx = ctx_for(z3)
    for i in range(2):
        g = ctx.gamma(i)
        assert dual_multiply(g, ctx.dual_one()) == g
        assert dual_multiply(ctx.dual_one(), g) == g


def test_gamma_commutes_with_group_like_on_z2(z2):
    ctx = ctx_for(z2)
    g = ctx.dual_from_element(z2.paired.dual.basis(1))
    gam = ctx.gamma(0)
    assert dual_multiply(gam, g) == dual_multiply(g, gam)


def test_gamma_squared_vanishes_on_z2(z2):
    ctx = ctx_for(z2)
    gam = ctx.gamma(0)
    assert dual_multiply(gam, gam).is_zero


def test_gamma_words_anticommute_on_z3(z3):
    ctx = ctx_for(z3)
    g1, g2 = ctx.gamma(0), ctx.gamma(1)
    assert dual_multiply(g1, g1).is_zero
    assert dual_multiply(g1, g2) == -dual_multiply(g2, g1)


def test_normal_ordering_move_as_functionals(all_calculi):
    # gamma_i h = (r^j_i |> h) gamma_j, paired against every basis one-form
    for fodc in all_calculi.values():
        ctx = ctx_for(fodc)
        A, D = fodc.paired.alg, fodc.paired.dual
        n = fodc.n
        for i in range(n):
            for h_idx in range(D.dim):
                h = D.basis(h_idx)
                for a in range(A.dim):
                    for m in range(n):
                        lhs = ctx.pair_factors(
                            (("g", i), ("h", h.coeffs)), a, (m,)
                        )
                        rhs = F(0)
                        for j in range(n):
                            hj = fodc.paired.act_on_dual(fodc.r[j][i], h)
                            if hj.is_zero:
                                continue
                            rhs += ctx.pair_factors(
                                (("h", hj.coeffs), ("g", j)), a, (m,)
                            )
                        assert lhs == rhs


def test_dual_normal_form_preserves_functional(z3, s3):
    # reducing a raw gamma-word then re-pairing agrees with pairing the
    # unreduced word, on every basis form of the same degree
    for fodc in (z3, s3):
        ctx = ctx_for(fodc)
        A = fodc.paired.alg
        n = fodc.n
        words = [(i, j) for i in range(n) for j in range(n)]
        for w in words:
            reduced = ctx.reduce_dual_word(w)
            for bw in ctx.wedge.basis.words[2]:
                for a in range(A.dim):
                    raw = ctx.pair_factors(tuple(("g", c) for c in w), a, bw)
                    via_basis = sum(
                        (
                            q * ctx.pair_factors(tuple(("g", c) for c in b), a, bw)
                            for b, q in reduced
                        ),
                        F(0),
                    )
                    assert raw == via_basis


# ---------------------------------------------------------------------------
# cross multiplication


def test_cross_rule_verbatim_for_functions(z3):
    # (1 h)(a 1) = (h_(1) |> a) h_(2)
    ctx = ctx_for(z3)
    A, D = z3.paired.alg, z3.paired.dual
    for h_idx in range(D.dim):
        H = ctx.cross_from_dual(ctx.dual_from_element(D.basis(h_idx)))
        for a_idx in range(A.dim):
            a = ctx.cross_from_element(A.basis(a_idx))
            lhs = cross_multiply(H, a)
            rhs = CrossElement(ctx, {})
            for c, l, r in D.coproduct(D.basis(h_idx)).terms:
                acted = z3.paired.left_act(D.basis(l), A.basis(a_idx))
                piece = cross_multiply(
                    ctx.cross_from_element(acted),
                    ctx.cross_from_dual(ctx.dual_from_element(D.basis(r))),
                )
                rhs += piece.scale(c)
            assert lhs == rhs


def test_gamma_passes_through_functions(all_calculi):
    for fodc in all_calculi.values():
        ctx = ctx_for(fodc)
        A = fodc.paired.alg
        for i in range(fodc.n):
            G = ctx.cross_from_dual(ctx.gamma(i))
            for a_idx in range(A.dim):
                a = ctx.cross_from_element(A.basis(a_idx))
                assert cross_multiply(G, a) == cross_multiply(a, G)


def test_gamma_against_invariant_form_blocks(z3):
    # the scalar-degree block of gamma_i w^j is f^j_i, whose counit is
    # delta^j_i; the remaining block is the braided pass-through
    ctx = ctx_for(z3)
    D = z3.paired.dual
    for i in range(2):
        G = ctx.cross_from_dual(ctx.gamma(i))
        for j in range(2):
            W = ctx.cross_from_form(GradedForm.word(ctx.wedge, (j,)))
            prod = cross_multiply(G, W)
            scalar_block = {
                k: v for k, v in prod.terms.items() if k[1] == () and k[3] == ()
            }
            expected = {}
            fji = z3.f[j][i]
            for x in range(3):
                for t, c in enumerate(fji.coeffs):
                    if c != 0:
                        expected[(x, (), t, ())] = c
            assert scalar_block == expected
            assert D.counit(fji) == (F(1) if i == j else F(0))


def _cross_monomials(ctx, max_form, max_dual):
    A = ctx.fodc.paired.alg
    D = ctx.fodc.paired.dual
    out = []
    for fd in range(max_form + 1):
        for w in ctx.wedge.basis.words[fd]:
            for dd in range(max_dual + 1):
                for dw in ctx.wedge.basis.words[dd]:
                    for a in range(A.dim):
                        for h in range(D.dim):
                            out.append((a, w, h, dw))
    return out


def test_cross_associativity_exhaustive_z2(z2):
    ctx = ctx_for(z2)
    monos = [CrossElement(ctx, {m: F(1)}) for m in _cross_monomials(ctx, 1, 1)]
    for x in monos:
        for y in monos:
            xy = cross_multiply(x, y)
            for z in monos:
                assert cross_multiply(xy, z) == cross_multiply(
                    x, cross_multiply(y, z)
                )


def test_cross_associativity_sampled_z3_s3(z3, s3):
    for fodc, trials in ((z3, 120), (s3, 50)):
        ctx = ctx_for(fodc)
        monos = _cross_monomials(ctx, 1, 1)
        rng = random.Random(7)
        for _ in range(trials):
            x, y, z = (rng.choice(monos) for _ in range(3))
            if len(x[1]) + len(y[1]) + len(z[1]) > 3:
                continue
            if len(x[3]) + len(y[3]) + len(z[3]) > 3:
                continue
            X, Y, Z = (CrossElement(ctx, {m: F(1)}) for m in (x, y, z))
            assert cross_multiply(cross_multiply(X, Y), Z) == cross_multiply(
                X, cross_multiply(Y, Z)
            )


def test_cross_action_respects_products(z3, s3):
    # (X Y) |> phi = X |> (Y |> phi) for the representation on forms
    for fodc, maxdeg in ((z3, 3), (s3, 4)):
        ctx = ctx_for(fodc, maxdeg)
        monos = _cross_monomials(ctx, 1, 1)
        rng = random.Random(11)
        A = fodc.paired.alg
        for _ in range(25):
            X = CrossElement(ctx, {rng.choice(monos): F(rng.randint(-2, 2))})
            Y = CrossElement(ctx, {rng.choice(monos): F(rng.randint(-2, 2))})
            XY = cross_multiply(X, Y)
            fd = 0
            for (a, w, h, dw) in list(X.terms) + list(Y.terms):
                fd += len(w)
            for deg in range(maxdeg - fd + 1):
                for w in ctx.wedge.basis.words[deg]:
                    for a in range(A.dim):
                        phi = GradedForm.monomial(ctx.wedge, a, w)
                        assert cross_act(XY, phi) == cross_act(X, cross_act(Y, phi))


# ---------------------------------------------------------------------------
# Lie derivatives and inner derivations


def test_lie_of_unit_is_identity(z3):
    ctx = ctx_for(z3)
    one = ctx.dual_one()
    for deg in range(3):
        for w in ctx.wedge.basis.words[deg]:
            m = GradedForm.monomial(ctx.wedge, 1, w)
            assert lie_derivative(one, m) == m


def test_lie_on_functions_matches_left_action(s3):
    ctx = ctx_for(s3)
    A, D = s3.paired.alg, s3.paired.dual
    for h in range(D.dim):
        hd = ctx.dual_from_element(D.basis(h))
        for a in range(A.dim):
            got = lie_derivative(hd, GradedForm.from_element(ctx.wedge, A.basis(a)))
            want = GradedForm.from_element(
                ctx.wedge, s3.paired.left_act(D.basis(h), A.basis(a))
            )
            assert got == want


def test_lie_of_chi_kills_invariant_form_on_z2(z2):
    ctx = ctx_for(z2)
    chi = ctx.dual_from_element(z2.chi[0])
    assert lie_derivative(chi, GradedForm.word(ctx.wedge, (0,))).is_zero


def test_lie_preserves_degree(s3):
    ctx = ctx_for(s3)
    chi = ctx.dual_from_element(s3.chi[1])
    for deg in range(3):
        for w in ctx.wedge.basis.words[deg]:
            out = lie_derivative(chi, GradedForm.monomial(ctx.wedge, 0, w))
            assert all(len(k[1]) == deg for k in out.terms)


def test_lie_on_duals_is_group_conjugation(s3):
    ctx = ctx_for(s3)
    D = s3.paired.dual
    g = s3.group
    for u in range(g.order):
        hd = ctx.dual_from_element(D.basis(u))
        for t in range(g.order):
            theta = ctx.dual_from_element(D.basis(t))
            got = lie_derivative(hd, theta)
            conj = g.mul[g.mul[u][t]][g.inverse[u]]
            assert got == ctx.dual_from_element(D.basis(conj))


def test_lie_rejects_positive_dual_degree(z3):
    ctx = ctx_for(z3)
    with pytest.raises(CalculusError, match="vector field"):
        lie_derivative(ctx.gamma(0), GradedForm.one(ctx.wedge))


def test_lie_extends_multiplicatively_to_cross_elements(z3):
    # L_h(xy) = (h_(1) |> x)(h_(2) |> y) on the cross algebra
    ctx = ctx_for(z3)
    D = z3.paired.dual
    monos = _cross_monomials(ctx, 1, 1)
    rng = random.Random(3)
    for _ in range(30):
        X = CrossElement(ctx, {rng.choice(monos): F(1)})
        Y = CrossElement(ctx, {rng.choice(monos): F(1)})
        for h_idx in range(D.dim):
            h = D.basis(h_idx)
            hd = ctx.dual_from_element(h)
            lhs = lie_derivative(hd, cross_multiply(X, Y))
            rhs = CrossElement(ctx, {})
            for c, l, r in D.coproduct(h).terms:
                piece = cross_multiply(
                    lie_derivative(ctx.dual_from_element(D.basis(l)), X),
                    lie_derivative(ctx.dual_from_element(D.basis(r)), Y),
                )
                rhs += piece.scale(c)
            assert lhs == rhs


def test_iota_kills_functions(all_calculi):
    for fodc in all_calculi.values():
        ctx = ctx_for(fodc)
        A = fodc.paired.alg
        for i in range(fodc.n):
            for a in range(A.dim):
                out = inner_derivation(
                    ctx, i, GradedForm.from_element(ctx.wedge, A.basis(a))
                )
                assert out.is_zero


def test_iota_on_differentials_gives_chi_action(all_calculi):
    for fodc in all_calculi.values():
        ctx = ctx_for(fodc)
        A = fodc.paired.alg
        for i in range(fodc.n):
            for a in range(A.dim):
                da = GradedForm.from_one_form(
                    ctx.wedge, fodc.differential(A.basis(a))
                )
                got = inner_derivation(ctx, i, da)
                want = GradedForm.from_element(
                    ctx.wedge, fodc.paired.left_act(fodc.chi[i], A.basis(a))
                )
                assert got == want


def test_iota_extracts_coefficient_on_z2(z2):
    ctx = ctx_for(z2)
    rho = GradedForm.monomial(ctx.wedge, 1, (0,))  # e_g w
    assert inner_derivation(ctx, 0, rho) == GradedForm.from_element(
        ctx.wedge, z2.paired.alg.basis(1)
    )


def test_iota_lowers_degree_by_one(s3):
    ctx = ctx_for(s3)
    for deg in range(1, 4):
        for w in ctx.wedge.basis.words[deg]:
            out = inner_derivation(ctx, 0, GradedForm.monomial(ctx.wedge, 0, w))
            assert all(len(k[1]) == deg - 1 for k in out.terms)


def test_iota_braided_derivation_property(z3, s3):
    # gamma_i |> (x y) = (-1)^{deg x} x (gamma_i |> y)
    #                  + sum_j (gamma_j |> x) (f^j_i |> y)
    for fodc in (z3, s3):
        ctx = ctx_for(fodc)
        A = fodc.paired.alg
        monos = []
        for deg in range(3):
            for w in ctx.wedge.basis.words[deg]:
                monos.append((deg, GradedForm.monomial(ctx.wedge, 0, w)))
                monos.append((deg, GradedForm.monomial(ctx.wedge, 1, w)))
        for i in range(fodc.n):
            for degx, x in monos:
                iotax = [inner_derivation(ctx, j, x) for j in range(fodc.n)]
                for degy, y in monos:
                    if degx + degy > 3:
                        continue
                    lhs = inner_derivation(ctx, i, wedge_multiply(x, y))
                    sign = F(-1) if degx % 2 else F(1)
                    rhs = wedge_multiply(x, inner_derivation(ctx, i, y)).scale(sign)
                    for j in range(fodc.n):
                        fj = ctx.dual_from_element(fodc.f[j][i])
                        rhs += wedge_multiply(iotax[j], dual_act(fj, y))
                    assert lhs == rhs


def test_degree_bookkeeping_of_cross_multiply(z3):
    ctx = ctx_for(z3)
    x = CrossElement(ctx, {(0, (0,), 0, ()): F(1)})
    y = CrossElement(ctx, {(1, (1,), 1, (0,)): F(1)})
    prod = cross_multiply(x, y)
    assert all(len(k[1]) == 2 for k in prod.terms)
    assert all(len(k[3]) == 1 for k in prod.terms)
