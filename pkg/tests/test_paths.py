from fractions import Fraction
from math import comb

import pytest

from pathcrystal import (
    Path,
    TropPoint,
    ValidationError,
    XPoint,
    brute_epsilon,
    brute_partial_sum,
    brute_region_sums,
    enumerate_paths,
    epsilon_total,
    make_shape,
    partial_sum,
    path_weight,
    region_sums,
    sample_point,
)
from pathcrystal.paths import full_path_endpoints

S21 = make_shape(2, 1)
S32 = make_shape(3, 2)
X21 = XPoint(S21, {(1, 1): 2, (1, 2): 3})
X32 = XPoint(S32, {(2, 1): 1, (2, 2): 2, (1, 2): 3, (1, 3): 4})


def test_path_step_validation():
    Path(((2, 1), (2, 2), (1, 3)))
    with pytest.raises(ValidationError):
        Path(((1, 1), (1, 3)))
    with pytest.raises(ValidationError):
        Path(((1, 1), (2, 2)))


def test_enumerate_single_edge():
    assert len(enumerate_paths(S21, 1, (1, 1), (1, 2))) == 1


def test_enumerate_two_paths_on_inner_square():
    assert len(enumerate_paths(S32, 1, (2, 1), (1, 3))) == 2


def test_enumerate_full_count_is_binomial():
    shape = make_shape(5, 3)
    src, dst = full_path_endpoints(shape, 1)
    assert len(enumerate_paths(shape, 1, src, dst)) == comb(4, 2) == 6
    for n, k in [(2, 1), (3, 2), (4, 2), (5, 2)]:
        sh = make_shape(n, k)
        src, dst = full_path_endpoints(sh, 1)
        assert len(enumerate_paths(sh, 1, src, dst)) == comb(n - 1, k - 1)


def test_enumerate_unreachable_is_empty():
    assert enumerate_paths(S32, 1, (1, 2), (2, 2)) == []
    assert enumerate_paths(S32, 1, (1, 3), (1, 2)) == []


def test_enumerate_rejects_off_lattice_endpoints():
    with pytest.raises(ValidationError):
        enumerate_paths(S32, 1, (3, 1), (1, 3))


def test_path_weight_single_horizontal_strip():
    (p,) = enumerate_paths(S21, 1, (1, 1), (1, 2))
    assert path_weight(X21, p) == Fraction(2, 3)


def test_path_weight_tropical_is_difference():
    t = TropPoint(S21, {(1, 1): 0, (1, 2): 5})
    (p,) = enumerate_paths(S21, 1, (1, 1), (1, 2))
    assert path_weight(t, p) == -5


def test_vertical_only_path_weighs_one():
    (p,) = enumerate_paths(S32, 1, (2, 2), (1, 3))
    assert path_weight(X32, p) == 1


def test_path_weight_side_mismatch():
    y = sample_point(S32, 0, 5, kind="y")
    (p,) = enumerate_paths(S32, 1, (2, 2), (1, 3))
    with pytest.raises(ValidationError):
        path_weight(y, p)


def test_partial_sums_worked_example():
    # brute-forced over the two paths from (2,1): 1/2 + 3/4
    assert partial_sum(X32, "X", 2, 1) == Fraction(5, 4)
    assert partial_sum(X32, "X", 1, 2) == Fraction(3, 4)
    assert partial_sum(X32, "X", 2, 2) == 1


def test_partial_sum_left_column_convention():
    assert partial_sum(X21, "X", 1, 0) == Fraction(1, 3)


def test_partial_sum_row_conventions():
    assert partial_sum(X21, "X", 2, 1) == 1
    assert partial_sum(X21, "X", 0, 2) == 0
    y = sample_point(S32, 4, 7, kind="y")
    assert partial_sum(y, "Ystar", 0, 2) == 1 / y.get(2, 0)
    assert partial_sum(y, "Ystar", 1, 3) == 1  # one column past the right edge
    assert partial_sum(y, "Ystar", 3, 0) == 0


def test_partial_sum_outside_closure_raises():
    with pytest.raises(ValidationError):
        partial_sum(X21, "X", 1, 9)
    with pytest.raises(ValidationError):
        partial_sum(X21, "Q", 1, 1)
    y = sample_point(S21, 0, 5, kind="y")
    with pytest.raises(ValidationError):
        partial_sum(y, "X", 1, 1)


def test_epsilon_total_examples():
    assert epsilon_total(X21) == Fraction(2, 3)
    assert epsilon_total(X32) == Fraction(5, 4)
    t = TropPoint(S21, {(1, 1): 0, (1, 2): 5})
    assert epsilon_total(t) == -5


def test_region_sums_worked_example():
    upper, lower, through = region_sums(X21, 1, 1)
    assert (region_sums(X21, 0, 1)[0], lower, through) == (Fraction(2, 3), 0, Fraction(2, 3))
    assert region_sums(X21, 1, 1)[0] == 0
    assert region_sums(X21, 2, 1)[1] == Fraction(2, 3)


def test_region_bottom_is_semiring_specific():
    t = TropPoint(S21, {(1, 1): 0, (1, 2): 5})
    upper, lower, through = region_sums(t, 1, 1)
    assert upper is None and lower is None
    assert through == -5


@pytest.mark.parametrize("kind", ["x", "trop"])
def test_dp_matches_enumeration_side1(shape, kind):
    for t in range(3):
        p = sample_point(shape, 50 + t, 9, kind=kind)
        for (l, m) in shape.l1_indices:
            for sums in ("X", "Xstar"):
                assert partial_sum(p, sums, l, m) == brute_partial_sum(p, sums, l, m)
        for l in range(0, shape.k + 2):
            for m in range(1, shape.n + 1):
                assert region_sums(p, l, m) == brute_region_sums(p, l, m)
        assert epsilon_total(p) == brute_epsilon(p)


def test_dp_matches_enumeration_side2(shape):
    for t in range(3):
        y = sample_point(shape, 70 + t, 9, kind="y")
        for (l, m) in shape.l2_indices:
            for sums in ("Y", "Ystar"):
                assert partial_sum(y, sums, l, m) == brute_partial_sum(y, sums, l, m)


def test_dp_matches_enumeration_every_small_shape():
    # the full invariant: every shape with n <= 6, both semirings
    for n in range(2, 7):
        for k in range(1, n + 1):
            sh = make_shape(n, k)
            for kind in ("x", "trop"):
                p = sample_point(sh, 5, 7, kind=kind)
                for (l, m) in sh.l1_indices:
                    for sums in ("X", "Xstar"):
                        assert partial_sum(p, sums, l, m) == brute_partial_sum(p, sums, l, m)
                for (l, m) in sh.l1_indices:
                    assert region_sums(p, l, m) == brute_region_sums(p, l, m)
                assert epsilon_total(p) == brute_epsilon(p)
            y = sample_point(sh, 6, 7, kind="y")
            for (l, m) in sh.l2_indices:
                for sums in ("Y", "Ystar"):
                    assert partial_sum(y, sums, l, m) == brute_partial_sum(y, sums, l, m)


@pytest.mark.parametrize("kind", ["x", "trop"])
def test_forward_recursions_hold(shape, kind):
    # X_l^m = X_(l-1)^(m+1) + (x_l^(m) / x_l^(m+1)) X_l^(m+1), both semirings
    p = sample_point(shape, 11, 9, kind=kind)
    sr = p.semiring
    for (l, m) in shape.l1_indices:
        if l + m == shape.n + 1:
            continue
        step = sr.ratio(p.get(l, m), p.get(l, m + 1))
        expect = sr.add(
            partial_sum(p, "X", l - 1, m + 1), sr.mul(step, partial_sum(p, "X", l, m + 1))
        )
        assert partial_sum(p, "X", l, m) == expect


@pytest.mark.parametrize("kind", ["x", "trop"])
def test_backward_recursions_hold(shape, kind):
    # X*_l^(m+1) = X*_(l+1)^m + (x_l^(m) / x_l^(m+1)) X*_l^m
    p = sample_point(shape, 12, 9, kind=kind)
    sr = p.semiring
    for (l, m) in shape.l1_indices:
        if not shape.in_l1(l, m + 1):
            continue
        step = sr.ratio(p.get(l, m), p.get(l, m + 1))
        expect = sr.add(
            partial_sum(p, "Xstar", l + 1, m), sr.mul(step, partial_sum(p, "Xstar", l, m))
        )
        assert partial_sum(p, "Xstar", l, m + 1) == expect


def test_side2_recursions_hold(shape):
    y = sample_point(shape, 13, 9, kind="y")
    for (l, m) in shape.l2_indices:
        if shape.in_l2(l, m + 1):
            expect = partial_sum(y, "Y", l, m + 1)
            if shape.in_l2(l - 1, m + 1) or l - 1 < 1:
                expect += (y.get(l - 1, m + 1) / y.get(l, m)) * partial_sum(y, "Y", l - 1, m + 1)
            assert partial_sum(y, "Y", l, m) == expect
        if shape.in_l2(l, m - 1):
            expect = partial_sum(y, "Ystar", l, m - 1)
            expect += (y.get(l, m) / y.get(l + 1, m - 1)) * partial_sum(y, "Ystar", l + 1, m - 1)
            assert partial_sum(y, "Ystar", l, m) == expect


@pytest.mark.parametrize("kind", ["x", "trop"])
def test_region_partition_and_product(shape, kind):
    p = sample_point(shape, 14, 9, kind=kind)
    sr = p.semiring
    eps = epsilon_total(p)
    for (l, m) in shape.l1_indices:
        upper, lower, through = region_sums(p, l, m)
        assert sr.add(sr.add(upper, lower), through) == eps
        assert through == sr.mul(
            partial_sum(p, "Xstar", l, m), partial_sum(p, "X", l, m)
        )
        up_next, _, _ = region_sums(p, l - 1, m)
        assert up_next == sr.add(upper, through)
        _, low_next, _ = region_sums(p, l + 1, m)
        assert low_next == sr.add(lower, through)


@pytest.mark.parametrize("kind", ["x", "trop"])
def test_region_difference_identities(shape, kind):
    # the three triangular-decomposition identities relating U, V to X*, X
    p = sample_point(shape, 15, 9, kind=kind)
    sr = p.semiring
    for (l, m) in shape.l1_indices:
        u_here = region_sums(p, l - 1, m)[0]
        u_right = region_sums(p, l - 1, m + 1)[0]
        cross = sr.mul(partial_sum(p, "Xstar", l, m), partial_sum(p, "X", l - 1, m + 1))
        assert u_here == sr.add(u_right, cross)
        if shape.in_l1(l + 1, m) and shape.in_l1(l + 1, m + 1):
            u1 = region_sums(p, l, m + 1)[0]
            u2 = region_sums(p, l + 1, m)[0]
            step = sr.ratio(p.get(l + 1, m), p.get(l + 1, m + 1))
            cross = sr.mul(
                sr.mul(partial_sum(p, "Xstar", l + 1, m), partial_sum(p, "X", l + 1, m + 1)),
                step,
            )
            assert u1 == sr.add(u2, cross)
        if shape.in_l1(l, m + 1):
            v_right = region_sums(p, l + 1, m + 1)[1]
            v_here = region_sums(p, l + 1, m)[1]
            cross = sr.mul(partial_sum(p, "Xstar", l + 1, m), partial_sum(p, "X", l, m + 1))
            assert v_right == sr.add(v_here, cross)
