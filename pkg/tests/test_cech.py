import pytest

from zkinv import make_spec
from zkinv.bundle import transition_matrix
from zkinv.cech import NoStabilization, cech_h1_truncated, mat_mul, upper_triangular_inverse, window_dimension
from zkinv.endo import end_transition, end_transition_inverse
from zkinv.poly import LaurentPoly


def identity(n):
    return [[LaurentPoly.const(1 if i == j else 0) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("k,j,p,h", [(1, 2, "0", 1), (2, 3, "u", 2), (3, 1, "0", 0), (1, 0, "0", 0), (2, 1, "0", 0)])
def test_cech_examples(k, j, p, h):
    spec = make_spec(k, j, p)
    assert cech_h1_truncated(transition_matrix(spec), k) == h


def test_line_bundle_cohomology():
    # O(-j) twisted by u^r has h^1 = sum over r of max(0, j - k r - 1)
    for k, j in [(1, 4), (2, 5), (3, 7)]:
        T = [[LaurentPoly.monomial(j, 0)]]
        expect = sum(max(0, j - k * r - 1) for r in range(j + 1))
        assert cech_h1_truncated(T, k) == expect


def test_generic_inverse_matches_printed_inverse():
    spec = make_spec(2, 7, "z^-1*u + z*u^2")
    S = end_transition(spec)
    assert upper_triangular_inverse(S) == end_transition_inverse(spec)
    assert mat_mul(S, upper_triangular_inverse(S)) == identity(4)
    T = transition_matrix(spec)
    assert mat_mul(upper_triangular_inverse(T), T) == identity(2)


def test_inverse_rejects_bad_diagonal():
    with pytest.raises(ValueError):
        upper_triangular_inverse([[LaurentPoly.monomial(0, 1)]])
    with pytest.raises(ValueError):
        upper_triangular_inverse([[LaurentPoly.const(1), LaurentPoly.zero()], [LaurentPoly.const(1), LaurentPoly.const(1)]])


def test_window_dimension_is_monotone_in_R():
    spec = make_spec(1, 4, "z^-1*u + z*u^2")
    inv = upper_triangular_inverse(transition_matrix(spec))
    vals = [window_dimension(inv, 1, R, 12) for R in range(0, 6)]
    assert vals == sorted(vals)


def test_no_stabilization_at_cap():
    spec = make_spec(1, 6, "0")
    with pytest.raises(NoStabilization):
        cech_h1_truncated(transition_matrix(spec), 1, window=(0, 1), max_growths=1)
