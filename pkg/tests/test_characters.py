"""Classical-group characters and the character-grid determinant checks."""

from fractions import Fraction

import pytest

from compdet.characters import (
    EVEN_ORTH,
    FAMILIES,
    GL,
    ODD_ORTH,
    SP,
    VariableGrid,
    char_matrix,
    character,
    character_value,
    delta_prefactor,
    family_shift,
    rhs_pair_product,
    specialize_X,
    staircase_delta,
    verify_denominators,
    verify_prop_detS,
    verify_theorem_schur,
)
from compdet.combin import compositions, partitions_in_box, partitions_of
from compdet.errors import DomainError, ParameterError, UsageError
from compdet.laurent import LaurentPoly
from compdet.pmatrix import det_auto
from compdet.sampling import SplitMix64, sample_point

from oracles import schur_tableau_poly


def poly_from(num_vars, text_terms):
    """Small builder: list of (coeff, exps2) pairs."""
    out = LaurentPoly.zero(num_vars)
    for coeff, exps in text_terms:
        out = out + LaurentPoly.monomial(num_vars, coeff, exps)
    return out


def test_staircase_and_shifts():
    assert staircase_delta(2, 3) == (Fraction(2), Fraction(1), Fraction(0))
    assert family_shift(GL, 3) == (Fraction(2), Fraction(1), Fraction(0))
    assert family_shift(SP, 2) == (Fraction(2), Fraction(1))
    assert family_shift(ODD_ORTH, 2) == (Fraction(3, 2), Fraction(1, 2))
    assert family_shift(EVEN_ORTH, 2) == (Fraction(1), Fraction(0))
    with pytest.raises(UsageError):
        family_shift("so", 2)


def test_partition_validation():
    with pytest.raises(DomainError):
        character(GL, (1, 2), num_vars=2)
    with pytest.raises(DomainError):
        character(GL, (1, 1, 1), num_vars=2)
    with pytest.raises(DomainError):
        character(GL, (-1,), num_vars=1)


def test_frozen_one_variable_characters():
    x = lambda e2: LaurentPoly.variable(1, 1, e2)
    assert character(GL, (2,), num_vars=1) == x(4)
    assert character(SP, (1,), num_vars=1) == x(2) + x(-2)
    assert character(ODD_ORTH, (1,), num_vars=1) == x(2) + LaurentPoly.const(1, 1) + x(-2)
    assert character(EVEN_ORTH, (1,), num_vars=1) == x(2) + x(-2)
    assert character(EVEN_ORTH, (3,), num_vars=1) == x(6) + x(-6)
    assert character(EVEN_ORTH, (), num_vars=1) == LaurentPoly.const(1, 1)


def test_frozen_two_variable_characters():
    v = lambda i, e2: LaurentPoly.variable(2, i, e2)
    one = LaurentPoly.const(2, 1)
    assert character(GL, (1,), num_vars=2) == v(1, 2) + v(2, 2)
    assert character(GL, (1, 1), num_vars=2) == v(1, 2) * v(2, 2)
    assert character(GL, (2,), num_vars=2) == (
        v(1, 4) + v(1, 2) * v(2, 2) + v(2, 4)
    )
    five_dim = (
        v(1, 2) * v(2, 2)
        + v(1, 2) * v(2, -2)
        + v(1, -2) * v(2, 2)
        + v(1, -2) * v(2, -2)
        + one
    )
    assert character(SP, (1, 1), num_vars=2) == five_dim


def test_gl_characters_match_tableau_oracle():
    for n in (1, 2, 3):
        for weight in range(0, 5):
            for lam in partitions_of(weight, max_parts=n):
                got = character(GL, lam, num_vars=n)
                assert got == schur_tableau_poly(lam, n), (n, lam)


def test_symbolic_and_numeric_paths_agree():
    rng = SplitMix64(7)
    point = sample_point(2, rng)
    for family in FAMILIES:
        for lam in [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]:
            sym = character(family, lam, num_vars=2).eval(point)
            num = character_value(family, lam, point)
            assert sym == num, (family, lam)


def test_folded_characters_invariant_under_inversion():
    values = (Fraction(4, 9), Fraction(25, 49))
    flipped = tuple(1 / v for v in values)
    for family in (SP, ODD_ORTH, EVEN_ORTH):
        for lam in [(1,), (2,), (1, 1), (3, 2)]:
            a = character_value(family, lam, values)
            b = character_value(family, lam, flipped)
            assert a == b, (family, lam)
    # the plain family is genuinely not inversion invariant
    assert character_value(GL, (1,), values) != character_value(GL, (1,), flipped)


def test_character_value_rejects_degenerate_point():
    with pytest.raises(ParameterError):
        character_value(SP, (1,), (Fraction(1),))


def test_denominator_product_formulas():
    for n in range(1, 5):
        report = verify_denominators(n)
        assert report.equal, n
        assert set(report.detail) == set(FAMILIES)
        assert all(report.detail.values())
        assert report.mode == "symbolic"
        assert report.identity == "denominators"


def test_selected_denominator_equals_closed_prefactor():
    for s, n in [(2, 2), (3, 2), (2, 3)]:
        grid = VariableGrid(s, n)
        nv = grid.num_vars
        for family in FAMILIES:
            shift = family_shift(family, n)
            for mu in compositions(s, n):
                sel = specialize_X(mu, grid)
                det = det_auto(char_matrix(family, shift, sel, nv))
                closed = delta_prefactor(family, mu, grid)
                if family == EVEN_ORTH:
                    closed = closed * 2
                assert det == closed, (family, s, n, mu)


def test_grid_indexing():
    grid = VariableGrid(3, 2)
    assert grid.num_vars == 6
    assert grid.var_index(2, 1) == 3
    assert grid.group_indices(3) == (5, 6)
    assert specialize_X((1, 0, 1), grid) == (1, 5)
    with pytest.raises(UsageError):
        grid.var_index(4, 1)
    with pytest.raises(UsageError):
        specialize_X((1, 1), grid)


def test_pair_exponent_difference_collapse():
    # the bookkeeping behind the closed pair product: a difference of
    # adjacent binomials collapses to a single one with fixed lower index;
    # at s = 1 (no variable-group pairs) the collapse degenerates on the
    # anti-diagonal i + j = n + 1, where the difference is 1 but the
    # fixed-lower-index form is 0
    from compdet.combin import binom_nonneg

    for s in range(1, 9):
        for n in range(1, 9):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    lhs = binom_nonneg(s + n - i - j, n - i - j + 1) - binom_nonneg(
                        s + n - i - j - 1, n - i - j
                    )
                    rhs = binom_nonneg(s + n - i - j - 1, s - 2)
                    if s == 1 and i + j == n + 1:
                        assert lhs == 1 and rhs == 0
                    else:
                        assert lhs == rhs, (s, n, i, j)


def test_pair_product_matches_brute_force_gl():
    # at n = 1 the closed product is the full Vandermonde-power expression
    s, n = 3, 1
    rng = SplitMix64(11)
    point = sample_point(s * n, rng)
    value = rhs_pair_product(GL, s, n, point)
    expected = Fraction(1)
    for k in range(3):
        for l in range(k + 1, 3):
            expected *= (point[k] - point[l]) ** 1
    assert value == expected


def test_character_grid_identity_all_families():
    for family in FAMILIES:
        for s, n in [(2, 2), (3, 2), (2, 3)]:
            report = verify_theorem_schur(family, s, n, seed=3)
            assert report.equal, (family, s, n)
            assert report.detail["bookkeeping_ok"]
            assert report.detail["rows"] == len(partitions_in_box(n, s - 1))
            if family == EVEN_ORTH:
                assert report.detail["two_power"] > 0
            assert report.identity == "schur-det"
            assert report.seed == 3


def test_character_grid_identity_substituted_point():
    report = verify_theorem_schur(GL, 2, 2, seed=5, substitution=True)
    assert report.equal
    assert report.detail["substitution"] is True


def test_single_alphabet_identity():
    for kind in (GL, SP):
        for s, n in [(3, 2), (4, 2), (3, 1), (4, 4)]:
            report = verify_prop_detS(kind, s, n, seed=13)
            assert report.equal, (kind, s, n)
            assert report.sign in (1, -1)
            assert report.detail["kind"] == kind
    with pytest.raises(UsageError):
        verify_prop_detS(ODD_ORTH, 3, 2, seed=0)
    with pytest.raises(UsageError):
        verify_prop_detS(GL, 2, 3, seed=0)
