from fractions import Fraction

import pytest

from hopfcalc.calculus import (
    CalculusError,
    FodcData,
    check_consistency,
    differential,
    finite_group_calculus,
    omega_times_function,
)
from hopfcalc.hopf import GroupTable
from hopfcalc.linalg import Matrix, kernel_basis

F = Fraction


def test_z2_constructor_tables(z2):
    A, D = z2.paired.alg, z2.paired.dual
    assert z2.n == 1
    assert z2.chi[0] == D.basis(1) - D.basis(0)
    assert z2.f[0][0] == D.basis(1)
    assert z2.r[0][0] == A.one()  # conjugation is trivial on an abelian group


def test_z3_r_is_diagonal_of_units(z3):
    A = z3.paired.alg
    for i in range(2):
        for j in range(2):
            if i == j:
                assert z3.r[i][j] == A.one()
            else:
                assert z3.r[i][j].is_zero


def test_s3_r_supported_on_conjugators(s3):
    g = s3.group
    for i in range(3):
        for j in range(3):
            coeffs = s3.r[i][j].coeffs
            for t in range(g.order):
                expected = F(1) if g.conjugate(t, s3.subset[j]) == s3.subset[i] else F(0)
                assert coeffs[t] == expected


@pytest.mark.parametrize("name", ["z2", "z3", "s3"])
def test_consistency_relations_pass(name, all_calculi):
    rep = check_consistency(all_calculi[name])
    assert rep.passed
    assert rep.n_cases > 0


def test_constructor_rejects_identity_in_subset():
    g = GroupTable.cyclic(3)
    with pytest.raises(CalculusError, match="identity in S"):
        finite_group_calculus(g, [0, 1])


def test_constructor_rejects_non_ad_invariant_subset():
    g = GroupTable.symmetric(3)
    transpositions = [x for x in range(6) if g.mul[x][x] == g.identity and x != g.identity]
    with pytest.raises(CalculusError, match="not ad-invariant"):
        finite_group_calculus(g, transpositions[:1])


def test_constructor_rejects_empty_subset():
    with pytest.raises(CalculusError):
        finite_group_calculus(GroupTable.cyclic(2), [])


def test_omega_times_unit_is_omega(z3):
    A = z3.paired.alg
    for i in range(z3.n):
        assert omega_times_function(z3, i, A.one()) == z3.omega(i)


def test_omega_times_function_translates_deltas(z2, s3):
    # abelian case: w * e_e = e_g w
    A = z2.paired.alg
    of = omega_times_function(z2, 0, A.basis(0))
    assert of.components[0] == A.basis(1)
    # s3: w^x e_t = e_{t x^-1} w^x for the transposition x
    A3 = s3.paired.alg
    g = s3.group
    for i in range(3):
        x = s3.subset[i]
        for t in range(g.order):
            of = omega_times_function(s3, i, A3.basis(t))
            for j in range(3):
                if j == i:
                    assert of.components[j] == A3.basis(g.mul[t][g.inverse[x]])
                else:
                    assert of.components[j].is_zero


def test_differential_of_unit_vanishes(all_calculi):
    for fodc in all_calculi.values():
        assert differential(fodc, fodc.paired.alg.one()).is_zero


def test_differential_on_z2_deltas(z2):
    A = z2.paired.alg
    de = differential(z2, A.basis(0))
    dg = differential(z2, A.basis(1))
    assert de.components[0] == A.basis(1) - A.basis(0)
    assert dg.components[0] == A.basis(0) - A.basis(1)
    assert (de + dg).is_zero


@pytest.mark.parametrize("name", ["z2", "z3", "s3"])
def test_leibniz_rule_on_functions(name, all_calculi):
    fodc = all_calculi[name]
    A = fodc.paired.alg
    for i in range(A.dim):
        a = A.basis(i)
        da = differential(fodc, a)
        for j in range(A.dim):
            b = A.basis(j)
            lhs = differential(fodc, a * b)
            rhs = da.right_mul(b) + differential(fodc, b).left_mul(a)
            assert lhs == rhs


@pytest.mark.parametrize("name", ["z2", "z3", "s3"])
def test_kernel_of_d_is_span_of_unit(name, all_calculi):
    # for these generating subsets the calculus is connected: only constants
    # are closed in degree zero
    fodc = all_calculi[name]
    A = fodc.paired.alg
    rows = []
    for i in range(A.dim):
        of = differential(fodc, A.basis(i))
        rows.append([c for comp in of.components for c in comp.coeffs])
    kernel = kernel_basis(Matrix.from_rows(rows).transpose())
    assert len(kernel) == 1
    v = kernel[0]
    assert all(x == v[0] for x in v)


def test_corrupted_r_table_fails_consistency(s3):
    A = s3.paired.alg
    bad_r = [
        [A.one() if i == j else A.zero() for j in range(3)] for i in range(3)
    ]
    bad = FodcData(
        3, s3.paired, bad_r, s3.f, s3.chi, s3.omega_presentation,
        group=s3.group, subset=s3.subset,
    )
    rep = check_consistency(bad)
    assert not rep.passed
    failed = {c.name for c in rep.failures()}
    assert any(name.startswith("right chi") for name in failed)


def test_presentation_reproduces_omega(all_calculi):
    for fodc in all_calculi.values():
        for i in range(fodc.n):
            built = None
            for a, b in fodc.omega_presentation[i]:
                piece = differential(fodc, b).left_mul(a)
                built = piece if built is None else built + piece
            assert built == fodc.omega(i)
