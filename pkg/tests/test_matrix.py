import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quhmorph import matrix
from quhmorph.constructions import paley_skew
from quhmorph.errors import DimensionError, FormatError

from conftest import bareiss_det, gram_by_rows

H2 = [[1, 1], [1, -1]]
SKEW2 = [[1, 1], [-1, 1]]
# order-4 Paley skew matrix written out by hand
PALEY4 = [
    [1, 1, 1, 1],
    [-1, 1, -1, 1],
    [-1, 1, 1, -1],
    [-1, -1, 1, 1],
]


def test_multiply_identity_and_ones():
    assert matrix.equal(matrix.multiply(matrix.identity(4), matrix.identity(4)), matrix.identity(4))
    assert matrix.equal(matrix.multiply(matrix.ones(3), matrix.ones(3)), 3 * np.ones((3, 3)))


def test_multiply_paley4_gram():
    h = np.array(PALEY4)
    assert matrix.equal(matrix.multiply(h, h.T), 4 * np.eye(4, dtype=int))
    assert matrix.equal(gram_by_rows(h), 4 * np.eye(4, dtype=int))


def test_multiply_order_mismatch():
    with pytest.raises(DimensionError):
        matrix.multiply(matrix.identity(2), matrix.identity(3))
    with pytest.raises(DimensionError):
        matrix.multiply([[1, 2, 3]], [[1, 2, 3]])


def test_multiply_large_entries_stay_exact():
    big = matrix.int_matrix(np.array([[2**40, 1], [3, 2**40]], dtype=object))
    prod = matrix.multiply(big, big)
    assert prod.dtype == object
    assert prod[0, 0] == 2**80 + 3
    assert prod[0, 1] == 2 * 2**40


def test_results_are_read_only():
    out = matrix.multiply(matrix.identity(2), matrix.identity(2))
    with pytest.raises(ValueError):
        out[0, 0] = 5


def test_kronecker_examples():
    m = np.array([[1, -1], [0, 1]])
    got = matrix.kronecker(matrix.identity(2), m)
    expected = np.zeros((4, 4), dtype=int)
    expected[:2, :2] = m
    expected[2:, 2:] = m
    assert matrix.equal(got, expected)
    assert matrix.equal(matrix.kronecker(matrix.ones(2), [[1]]), matrix.ones(2))


def test_kronecker_fks_b2_for_q3():
    q3 = np.array([[0, -1, 1], [1, 0, -1], [-1, 1, 0]])
    b1 = np.eye(3, dtype=int) + q3
    b2 = matrix.add(matrix.kronecker(matrix.identity(3), matrix.ones(3)), matrix.kronecker(q3, b1))
    assert b2.shape == (9, 9)
    assert set(np.unique(b2)) == {-1, 1}
    # block (i, j) is I[i,j]*J + Q[i,j]*B1
    for i in range(3):
        for j in range(3):
            block = b2[3 * i : 3 * i + 3, 3 * j : 3 * j + 3]
            assert (block == (i == j) * np.ones((3, 3)) + q3[i, j] * b1).all()


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_kronecker_mixed_product(data):
    n = data.draw(st.integers(1, 3))
    k = data.draw(st.integers(1, 3))
    mats = lambda size: st.lists(  # noqa: E731
        st.lists(st.integers(-5, 5), min_size=size, max_size=size), min_size=size, max_size=size
    )
    a, c = data.draw(mats(n)), data.draw(mats(n))
    b, d = data.draw(mats(k)), data.draw(mats(k))
    left = matrix.multiply(matrix.kronecker(a, b), matrix.kronecker(c, d))
    right = matrix.kronecker(matrix.multiply(a, c), matrix.multiply(b, d))
    assert left.shape[0] == n * k
    assert matrix.equal(left, right)


@pytest.mark.parametrize(
    "h, expected",
    [(H2, True), (np.ones((2, 2), dtype=int), False), (PALEY4, True), (SKEW2, True), ([[1, 0], [0, 1]], False)],
)
def test_is_hadamard(h, expected):
    assert matrix.is_hadamard(h) is expected


def test_is_skew_hadamard():
    assert matrix.is_skew_hadamard(SKEW2)
    assert not matrix.is_skew_hadamard(H2)
    assert matrix.is_skew_hadamard(paley_skew(7))
    assert matrix.skew_failure(H2) == "H+Ht != 2I"


def test_skew_quadratic_check():
    assert matrix.skew_quadratic_check(SKEW2)
    assert matrix.skew_quadratic_check(PALEY4)
    # symmetric Hadamard squares to 2I
    assert matrix.equal(matrix.multiply(H2, H2), 2 * np.eye(2, dtype=int))
    assert not matrix.skew_quadratic_check(H2)


def test_quartic_identity_check():
    h = np.array(PALEY4)
    # H^2 = 2H - 4I gives H^4 = -8H, so H^4 + 4H^2 + 16I = 0
    h2 = matrix.multiply(h, h)
    assert matrix.equal(matrix.multiply(h2, h2), -8 * h)
    assert matrix.quartic_identity_check(h)
    assert matrix.quartic_identity_check(paley_skew(7))
    # H^2 = 2I, so H^4 + 4I = 8I
    assert not matrix.quartic_identity_check(H2)


@pytest.mark.parametrize("h", [SKEW2, PALEY4, paley_skew(7), paley_skew(11), paley_skew(19)])
def test_skew_matrices_satisfy_both_identities(h):
    assert matrix.is_skew_hadamard(h)
    assert matrix.skew_quadratic_check(h)
    assert matrix.quartic_identity_check(h)


@pytest.mark.parametrize("h", [H2, PALEY4, SKEW2, paley_skew(7), matrix.kronecker(H2, PALEY4)])
def test_hadamard_determinant_bound(h):
    n = len(h)
    assert matrix.is_hadamard(h)
    det = bareiss_det(h)
    assert det * det == n**n


def test_pm_round_trip():
    h = paley_skew(7)
    text = matrix.format_pm(h)
    assert text.splitlines()[0] == "8"
    assert matrix.equal(matrix.parse_pm(text), h)
    assert matrix.format_pm(matrix.parse_pm(text)) == text
    jac_like = [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]
    assert matrix.format_pm(jac_like) == "3\n0-+\n+0-\n-+0\n"


@pytest.mark.parametrize(
    "text",
    ["", "2\n++\n+", "2\n++\n+-+\n", "2\n++\n+x\n", "2\n+ +\n+-\n", "x\n++\n+-\n", "3\n+++\n+++\n", "0\n"],
)
def test_pm_rejects_malformed(text):
    with pytest.raises(FormatError):
        matrix.parse_pm(text)
