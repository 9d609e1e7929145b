"""Exact checks of the two multiplication tables and the identity suite."""

import random
from fractions import Fraction

import pytest

from splitoct.algebra import (
    EXPECTED_DIAGONAL,
    AlgebraKind,
    Octonion,
    StructureTable,
    associativity_witness,
    associator,
    check_identities,
    conjugate,
    multiply,
    norm_form,
    random_octonion,
    search_null_pair,
    signature,
)

BOTH = [AlgebraKind.OCTONION, AlgebraKind.SPLIT_OCTONION]


def e(i):
    return Octonion.basis(i)


@pytest.mark.parametrize("kind", BOTH)
def test_table_has_no_structural_failures(kind):
    assert StructureTable.for_kind(kind).structural_failures() == []


@pytest.mark.parametrize("kind", BOTH)
def test_diagonal_signs(kind):
    assert StructureTable.for_kind(kind).diagonal_signs() == EXPECTED_DIAGONAL[kind]


def test_signature_octonion_definite_split_neutral():
    assert signature(AlgebraKind.OCTONION) == (8, 0)
    assert signature(AlgebraKind.SPLIT_OCTONION) == (4, 4)


# Entries where the two algebras agree, frozen from the table.
COMMON_ENTRIES = [
    (1, 2, 1, 4),
    (2, 4, 1, 1),
    (1, 3, 1, 7),
    (4, 5, 1, 7),
    (2, 6, 1, 7),
    (6, 1, 1, 5),
    (1, 4, -1, 2),
    (2, 5, -1, 3),
    (4, 3, -1, 6),
]

# Entries whose sign distinguishes the algebras (split listed second).
SPLIT_SENSITIVE_ENTRIES = [
    (3, 5, 1, -1, 2),
    (3, 7, 1, -1, 1),
    (5, 6, 1, -1, 1),
    (5, 7, 1, -1, 4),
    (6, 7, 1, -1, 2),
    (6, 3, 1, -1, 4),
    (7, 3, -1, 1, 1),
    (7, 5, -1, 1, 4),
    (7, 6, -1, 1, 2),
]


@pytest.mark.parametrize("i,j,sign,target", COMMON_ENTRIES)
@pytest.mark.parametrize("kind", BOTH)
def test_entries_common_to_both_algebras(kind, i, j, sign, target):
    assert multiply(kind, e(i), e(j)) == sign * e(target)


@pytest.mark.parametrize("i,j,oct_sign,split_sign,target", SPLIT_SENSITIVE_ENTRIES)
def test_entries_distinguishing_the_algebras(i, j, oct_sign, split_sign, target):
    assert multiply(AlgebraKind.OCTONION, e(i), e(j)) == oct_sign * e(target)
    assert multiply(AlgebraKind.SPLIT_OCTONION, e(i), e(j)) == split_sign * e(target)


@pytest.mark.parametrize("kind", BOTH)
def test_unit_is_neutral(kind):
    rng = random.Random(11)
    one = Octonion.unit()
    for _ in range(20):
        x = random_octonion(rng)
        assert multiply(kind, one, x) == x
        assert multiply(kind, x, one) == x


@pytest.mark.parametrize("kind", BOTH)
def test_squares_match_diagonal(kind):
    diag = EXPECTED_DIAGONAL[kind]
    for i in range(1, 8):
        assert multiply(kind, e(i), e(i)) == diag[i - 1] * Octonion.unit()


@pytest.mark.parametrize("kind", BOTH)
def test_anticommutativity_of_distinct_units(kind):
    for i in range(1, 8):
        for j in range(1, 8):
            if i != j:
                assert multiply(kind, e(i), e(j)) == -multiply(kind, e(j), e(i))


@pytest.mark.parametrize("kind", BOTH)
def test_multiplication_is_bilinear(kind):
    rng = random.Random(5)
    for _ in range(10):
        x, y, z = (random_octonion(rng) for _ in range(3))
        assert multiply(kind, x + y, z) == multiply(kind, x, z) + multiply(kind, y, z)
        assert multiply(kind, x, y + z) == multiply(kind, x, y) + multiply(kind, x, z)
        assert multiply(kind, 3 * x, y) == 3 * multiply(kind, x, y)


def test_conjugation_is_an_involution_and_antihomomorphism():
    rng = random.Random(3)
    for kind in BOTH:
        for _ in range(20):
            x, y = random_octonion(rng), random_octonion(rng)
            assert conjugate(conjugate(x)) == x
            assert conjugate(multiply(kind, x, y)) == \
                multiply(kind, conjugate(y), conjugate(x))
    assert conjugate(Octonion.unit()) == Octonion.unit()
    assert conjugate(e(7)) == -e(7)


@pytest.mark.parametrize("kind", BOTH)
def test_norm_form_matches_diagonal_quadratic_form(kind):
    rng = random.Random(7)
    diag = EXPECTED_DIAGONAL[kind]
    for _ in range(50):
        x = random_octonion(rng)
        expected = x.c[0] ** 2 + sum(-diag[i - 1] * x.c[i] ** 2 for i in range(1, 8))
        assert norm_form(kind, x) == expected


def test_norm_form_examples():
    a, b = 3, 5
    x = Octonion((a, b, 0, 0, 0, 0, 0, 0))
    assert norm_form(AlgebraKind.OCTONION, x) == a * a + b * b
    assert norm_form(AlgebraKind.SPLIT_OCTONION, e(7)) == -1
    assert norm_form(AlgebraKind.OCTONION, e(7)) == 1


def test_norm_form_accepts_fractions_and_floats():
    x = Octonion((Fraction(1, 2), Fraction(1, 3), 0, 0, 0, 0, 0, 0))
    assert norm_form(AlgebraKind.OCTONION, x) == Fraction(13, 36)
    xf = Octonion((0.5, 1.25, 0.0, -2.0, 0.0, 0.0, 0.0, 0.0))
    n = norm_form(AlgebraKind.OCTONION, xf)
    assert abs(n - (0.25 + 1.5625 + 4.0)) < 1e-12


@pytest.mark.parametrize("kind", BOTH)
def test_identity_suite_passes(kind):
    report = check_identities(kind, trials=300, seed=42)
    assert report.ok, [c.name for c in report.checks if not c.holds]
    assert {c.name for c in report.checks} == {
        "anticommutativity", "left_alternative", "right_alternative",
        "moufang", "norm_multiplicative",
    }


def test_identity_report_json_shape():
    report = check_identities(AlgebraKind.SPLIT_OCTONION, trials=5, seed=0)
    data = report.to_json()
    assert data["algebra"] == "split"
    assert data["ok"] is True
    assert all(c["status"] == "pass" for c in data["checks"])


def test_identities_require_at_least_one_trial():
    with pytest.raises(ValueError):
        check_identities(AlgebraKind.OCTONION, trials=0, seed=1)


@pytest.mark.parametrize("kind", BOTH)
def test_associator_vanishes_on_unit_and_repeated_argument(kind):
    rng = random.Random(9)
    for _ in range(15):
        x, y = random_octonion(rng), random_octonion(rng)
        assert associator(kind, Octonion.unit(), x, y).is_zero
        assert associator(kind, x, x, y).is_zero
        assert associator(kind, y, x, x).is_zero


@pytest.mark.parametrize("kind", BOTH)
def test_associativity_fails_with_frozen_witness(kind):
    x, y, z, w = associativity_witness(kind)
    assert (x, y, z) == (e(1), e(2), e(3))
    assert w == -2 * e(6)


def test_split_zero_divisors_exist_octonion_has_none():
    found = search_null_pair(AlgebraKind.SPLIT_OCTONION, trials=500, seed=42)
    assert found is not None
    x, y = found
    assert not x.is_zero and not y.is_zero
    assert norm_form(AlgebraKind.SPLIT_OCTONION, x) == 0
    assert multiply(AlgebraKind.SPLIT_OCTONION, x, y).is_zero
    assert search_null_pair(AlgebraKind.OCTONION, trials=500, seed=42) is None


def test_one_plus_e7_is_a_split_null_vector():
    x = Octonion.unit() + e(7)
    assert norm_form(AlgebraKind.SPLIT_OCTONION, x) == 0
    assert multiply(AlgebraKind.SPLIT_OCTONION, x, x.conjugate()).is_zero
    assert norm_form(AlgebraKind.OCTONION, x) == 2


@pytest.mark.parametrize("kind", BOTH)
def test_flipped_sign_breaks_structure_and_norm(kind):
    bad = StructureTable.for_kind(kind).with_flipped_sign(1, 2)
    assert bad.structural_failures() != []
    report = check_identities(kind, trials=50, seed=1, table=bad)
    failing = {c.name for c in report.checks if not c.holds}
    assert "norm_multiplicative" in failing


def test_flipped_diagonal_sign_is_detected():
    bad = StructureTable.for_kind(AlgebraKind.SPLIT_OCTONION).with_flipped_sign(3, 3)
    assert any("diagonal" in p for p in bad.structural_failures())


def test_octonion_value_semantics():
    x = Octonion((1, 2, 3, 4, 5, 6, 7, 8))
    assert x == Octonion((1, 2, 3, 4, 5, 6, 7, 8))
    assert hash(x) == hash(Octonion((1, 2, 3, 4, 5, 6, 7, 8)))
    assert x != Octonion((0,) * 8)
    assert (-x).c == tuple(-v for v in x.c)
    assert (x - x).is_zero
    assert not x.is_imaginary
    assert e(3).is_imaginary


def test_octonion_rejects_bad_input():
    with pytest.raises(ValueError):
        Octonion((1, 2, 3))
    with pytest.raises(ValueError):
        Octonion.basis(8)
    with pytest.raises(TypeError):
        e(1) * e(2)  # the product needs an algebra kind


def test_octonion_rendering():
    assert str(Octonion.zero()) == "0"
    assert str(Octonion.unit()) == "1"
    assert str(e(5)) == "e5"
    assert str(-2 * e(6)) == "-2*e6"
    assert str(Octonion.unit() + e(7)) == "1+e7"
    assert str(e(1) - e(2)) == "e1-e2"


def test_structure_table_render_matches_entries():
    table = StructureTable.for_kind(AlgebraKind.SPLIT_OCTONION)
    rendered = table.rows_rendered()
    assert rendered[0][1] == "e4"      # e1*e2
    assert rendered[2][2] == "1"       # e3*e3 = +1 in split
    assert rendered[6][6] == "1"       # e7*e7 = +1 in split
    oct_rendered = StructureTable.for_kind(AlgebraKind.OCTONION).rows_rendered()
    assert oct_rendered[2][2] == "-1"  # e3*e3 = -1 in octonions
