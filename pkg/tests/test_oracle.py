"""Brute-force multiplication-matrix oracle and the cross-check harness."""

from fractions import Fraction

import pytest

from agjordan.apolarity import graded_basis
from agjordan.errors import MismatchReport
from agjordan.hessian import GenericRankConfig, rank_table
from agjordan.jordan import Partition, jordan_type
from agjordan.linalg import matrix_power_ranks, rank
from agjordan.oracle import cross_check, multiplication_matrix, oracle_jordan_type
from agjordan.poly import LinearForm, parse_poly


def basis_of(text, order=None):
    return graded_basis(parse_poly(text, var_order=order))


# -- multiplication matrix structure -----------------------------------


def test_single_variable_power_gives_shift_matrix():
    b = basis_of("x^3")
    mm = multiplication_matrix(b, LinearForm(("x",), (1,)))
    assert mm.matrix.rows == mm.matrix.cols == 4
    for r in range(4):
        for c in range(4):
            entry = mm.matrix.entries[r][c]
            if r == c + 1:
                assert entry != 0
            else:
                assert entry == 0
    assert matrix_power_ranks(mm.matrix, 4) == [4, 3, 2, 1, 0]


def test_block_shapes_follow_hilbert_vector():
    b = basis_of("x*u^2 + y*u*v + z*v^2", order=("x", "y", "z", "u", "v"))
    mm = multiplication_matrix(b, LinearForm(b.f.var_names, (1, 2, 3, 4, 5)))
    assert len(mm.blocks) == b.socle_degree
    for i, block in enumerate(mm.blocks):
        assert (block.rows, block.cols) == (b.hilbert[i + 1], b.hilbert[i])
    # full matrix is block-superdiagonal in the grading: l*A_i lands in A_{i+1}
    dim = b.dim
    assert mm.matrix.rows == mm.matrix.cols == dim


def test_matrix_is_nilpotent_of_socle_order():
    b = basis_of("x^2*y^2")
    mm = multiplication_matrix(b, LinearForm(("x", "y"), (1, 1)))
    d = b.socle_degree
    power = mm.matrix
    for _ in range(d):
        power = power @ mm.matrix
    assert all(x == 0 for row in power.entries for x in row)
    # but the d-th power is not yet zero at a generic form
    assert matrix_power_ranks(mm.matrix, d)[d] > 0


def test_blockwise_ranks_match_full_matrix_powers():
    b = basis_of("x*u^3*v + y*u*v^3", order=("x", "y", "u", "v"))
    l = LinearForm(b.f.var_names, (1, -2, 3, 1))
    mm = multiplication_matrix(b, l)
    d = b.socle_degree
    full = matrix_power_ranks(mm.matrix, d)
    composites = list(mm.blocks)
    for j in range(1, d + 1):
        assert full[j] == sum(rank(c) for c in composites)
        composites = [mm.blocks[i + j] @ composites[i] for i in range(d - j)]


def test_wrong_arity_rejected():
    b = basis_of("x^3")
    with pytest.raises(ValueError):
        multiplication_matrix(b, LinearForm(("x", "y"), (1, 1)))


# -- oracle partitions --------------------------------------------------


def test_oracle_on_binary_quadric():
    b = basis_of("x^2 + y^2")
    part = oracle_jordan_type(b, LinearForm(("x", "y"), (1, 1)))
    assert part == Partition((3, 1))


def test_oracle_on_monomial_power():
    b = basis_of("x^4")
    assert oracle_jordan_type(b, LinearForm(("x",), (2,))) == Partition((5,))


def test_oracle_matches_formula_pipeline_on_perazzo_cubic():
    b = basis_of("x*u^2 + y*u*v + z*v^2", order=("x", "y", "z", "u", "v"))
    formula = jordan_type(rank_table(b, GenericRankConfig())).jordan
    got = oracle_jordan_type(b, LinearForm(b.f.var_names, (3, -1, 2, 1, 5)))
    assert got == formula == Partition((4, 2, 2, 2, 1, 1))


def test_oracle_sees_special_forms_too():
    # a coordinate form on the Fermat cubic is not generic; the oracle
    # reports the honest smaller type rather than the generic one
    b = basis_of("x^3 + y^3 + z^3")
    part = oracle_jordan_type(b, LinearForm(b.f.var_names, (1, 0, 0)))
    assert part == Partition((4, 1, 1, 1, 1))


# -- cross-check harness -------------------------------------------------


def test_cross_check_agreement_on_quintic():
    b = basis_of("x*u^3*v + y*u*v^3", order=("x", "y", "u", "v"))
    cfg = GenericRankConfig(trials=3, seed=11)
    rep = cross_check(b, cfg)
    assert rep.agreement
    assert rep.partition.render() == "6^1 + 4^3 + 2^2 + 1^2"
    assert len(rep.points) == 3
    assert all(p == rep.partition for p in rep.oracle_partitions)


def test_cross_check_agreement_on_quartic():
    text = "x1*u^2*v + x2*u*v^2 + x3*u^3 + x4*u*w^2 + x5*u^2*w"
    b = basis_of(text, order=("x1", "x2", "x3", "x4", "x5", "u", "v", "w"))
    rep = cross_check(b, GenericRankConfig(trials=2, seed=7))
    assert rep.agreement
    assert rep.partition.render() == "5^1 + 3^5 + 2^4"


def test_mismatch_report_carries_both_partitions():
    err = MismatchReport((1, 2), Partition((3, 1)), Partition((2, 2)))
    assert err.point == (1, 2)
    assert err.formula_partition == Partition((3, 1))
    assert err.oracle_partition == Partition((2, 2))
    assert "oracle" in str(err)
