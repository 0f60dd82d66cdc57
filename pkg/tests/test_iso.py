import pytest

from pathcrystal import (
    BElement,
    CTuple,
    TropPoint,
    ValidationError,
    all_ctuples,
    b_infinity,
    bk_e,
    delta,
    eps_phi,
    eps_phi_0,
    make_shape,
    omega,
    omega_inv,
    pi_correspondence,
    sample_point,
    trop_e,
    trop_eps,
    trop_weyl,
    trop_wt,
    verify_iso,
    weyl_s_tilde,
)
from pathcrystal.bkinf import sample_belement, wt
from pathcrystal.paths import enumerate_paths, full_path_endpoints, path_weight
from pathcrystal.reporting import all_ok

S21 = make_shape(2, 1)
S32 = make_shape(3, 2)
T21 = TropPoint(S21, {(1, 1): 0, (1, 2): 5})


def test_omega_smallest_shape():
    b = omega(T21)
    assert b.entries == {(1, 1): 0, (1, 2): 5, (1, 3): -5}


def test_omega_row_differences():
    t = TropPoint(S32, {(2, 1): 3, (2, 2): 7, (1, 2): -1, (1, 3): 4})
    b = omega(t)
    # row j=1 reads lattice row 2, row j=2 reads lattice row 1
    assert [b.get(1, i) for i in range(1, 4)] == [3, 4, -7]
    assert [b.get(2, i) for i in range(2, 5)] == [-1, 5, -4]


def test_omega_sends_zeros_to_zero_element(shape):
    zeros = TropPoint(shape, {key: 0 for key in shape.l1_indices})
    assert omega(zeros) == b_infinity(shape)
    assert omega_inv(b_infinity(shape)) == zeros


def test_omega_inverse_prefix_sums():
    b = BElement(S21, {(1, 1): 4, (1, 2): -1, (1, 3): -3})
    assert omega_inv(b).entries == {(1, 1): 4, (1, 2): 3}


def test_round_trip_random(shape):
    for t in range(10):
        x = sample_point(shape, 900 + t, 10, kind="trop")
        assert omega_inv(omega(x)) == x
        b = sample_belement(shape, 950 + t, 10)
        assert omega(omega_inv(b)) == b


def test_omega_requires_tropical_point():
    with pytest.raises(ValidationError):
        omega(sample_point(S21, 1, 5, kind="x"))


def test_path_correspondence_singleton():
    (p,) = enumerate_paths(S21, 1, (1, 1), (1, 2))
    assert pi_correspondence(S21, CTuple(S21, (1, 3))) == p


def test_path_correspondence_worked_example():
    path = pi_correspondence(S32, CTuple(S32, (1, 2, 4)))
    assert path.points == ((2, 1), (1, 2), (1, 3))


def test_path_correspondence_is_bijective(shape):
    src, dst = full_path_endpoints(shape, 1)
    all_paths = {p.points for p in enumerate_paths(shape, 1, src, dst)}
    images = {pi_correspondence(shape, c).points for c in all_ctuples(shape)}
    assert images == all_paths


def test_delta_equals_negated_path_weight(shape):
    for t in range(5):
        x = sample_point(shape, 1000 + t, 10, kind="trop")
        b = omega(x)
        for c in all_ctuples(shape):
            assert delta(b, c) == -path_weight(x, pi_correspondence(shape, c))


def test_intertwining_worked_examples():
    assert omega(trop_e(T21, 0, 1)).entries == {(1, 1): -1, (1, 2): 5, (1, 3): -4}
    other = TropPoint(S21, {(1, 1): 5, (1, 2): 0})
    assert trop_eps(other, 0) == 5 == eps_phi_0(omega(other))[0]


def test_data_intertwining_random(shape):
    for t in range(5):
        x = sample_point(shape, 1100 + t, 10, kind="trop")
        b = omega(x)
        for i in range(shape.n + 1):
            assert trop_wt(x, i) == wt(b, i)
            eps_b = eps_phi_0(b)[0] if i == 0 else eps_phi(b, i)[0]
            assert trop_eps(x, i) == eps_b
            for d in (-2, 1, 3):
                assert omega(trop_e(x, i, d)) == bk_e(b, i, d)
            assert omega(trop_weyl(x, i)) == weyl_s_tilde(b, i)


def test_verify_iso_all_green(shape):
    checks = verify_iso(shape, 10, 77)
    assert all_ok(checks)
    by_name = {c.name: c for c in checks}
    assert by_name["round-trip"].passes == 10
    assert by_name["step-intertwine"].fails == 0
