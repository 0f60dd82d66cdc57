"""Piecewise-linear crystal operations on integer points.

These are the closed forms of the ultra-discretized structure, written
directly in integer arithmetic.  For everything indexed 1..n they are an
independent second route beside the semiring-generic code in
:mod:`pathcrystal.geom` (same formulas, different code path); the 0-indexed
operations lean on the max-plus path engine for their region maxima.

``ud_degree_probe`` ties the tropical side back to the rational one: it
evaluates a named rational quantity at coordinates ``t**exponent`` with
``t = 2**128`` and extracts the leading exponent.  With at most 70
monomials per path sum and exponents bounded by 8, coefficient mass can
never shift the leading power, so the rounded base-t logarithm is exact
and must equal the tropical closed form.
"""

from fractions import Fraction
from math import comb

from .errors import CrystalFault, ValidationError
from .lattice import TropPoint, XPoint, trop_get
from .paths import epsilon_total, region_sums
from . import geom

PROBE_BASE_BITS = 128
PROBE_BASE = 1 << PROBE_BASE_BITS
PROBE_MAX_EXPONENT = 8
PROBE_MAX_PATHS = 70


def trop_dbar(x, l, i):
    """Negated ultra-discretization of the diagonal product at (l, i)."""
    shape = x.shape
    a, b = geom.bounds_row1(shape, i)
    if not a <= l <= b:
        raise ValidationError("row %d outside [%d, %d] for i=%d" % (l, a, b, i))
    return (
        -trop_get(x, l, i)
        - 2 * sum(trop_get(x, j, i) for j in range(l + 1, b + 1))
        + sum(trop_get(x, j, i - 1) for j in range(l + 1, b + 2))
        + sum(trop_get(x, j, i + 1) for j in range(l, b + 1))
    )


def trop_wt(x, i):
    shape = x.shape
    if i == 0:
        return -trop_get(x, 1, shape.n) - trop_get(x, shape.k, 1)
    a, b = geom.bounds_row1(shape, i)
    return (
        2 * sum(trop_get(x, j, i) for j in range(a, b + 1))
        - sum(trop_get(x, j, i - 1) for j in range(a, b + 2))
        - sum(trop_get(x, j, i + 1) for j in range(a - 1, b + 1))
    )


def trop_eps(x, i):
    shape = x.shape
    if i == 0:
        return trop_get(x, 1, shape.n) + epsilon_total(x)
    a, b = geom.bounds_row1(shape, i)
    return max(trop_dbar(x, l, i) for l in range(a, b + 1))


def _max_opt(values):
    best = None
    for v in values:
        if v is None:
            continue
        if best is None or v > best:
            best = v
    return best


def trop_e(x, i, d):
    """The d-th power of the i-th piecewise-linear action (d may be negative)."""
    shape = x.shape
    if not 0 <= i <= shape.n:
        raise ValidationError("index i must be in 0..n, got %r" % (i,))
    entries = dict(x.entries)
    if i == 0:
        for (l, m) in shape.l1_indices:
            if (l, m) == (1, shape.n):
                entries[(l, m)] = x.get(l, m) - d
                continue
            up_hi, _, _ = region_sums(x, l - 1, m)
            _, lo_hi, _ = region_sums(x, l, m)
            up_lo, _, _ = region_sums(x, l, m)
            _, lo_lo, _ = region_sums(x, l + 1, m)
            num = _max_opt([up_hi, None if lo_hi is None else d + lo_hi])
            den = _max_opt([up_lo, None if lo_lo is None else d + lo_lo])
            entries[(l, m)] = x.get(l, m) + num - den
    else:
        a, b = geom.bounds_row1(shape, i)
        dbar = {p: trop_dbar(x, p, i) for p in range(a, b + 1)}
        for l in range(a, b + 1):
            num = _max_opt(
                [dbar[p] for p in range(a, l)] + [d + dbar[p] for p in range(l, b + 1)]
            )
            den = _max_opt(
                [dbar[p] for p in range(a, l + 1)] + [d + dbar[p] for p in range(l + 1, b + 1)]
            )
            entries[(l, i)] = x.get(l, i) + num - den
    return TropPoint(shape, entries)


def trop_weyl(x, i):
    """Piecewise-linear simple reflection."""
    return trop_e(x, i, -trop_wt(x, i))


# ---------------------------------------------------------------------------
# degree probe


def _validate_probe(exponents):
    shape = exponents.shape
    if comb(shape.n - 1, shape.k - 1) > PROBE_MAX_PATHS:
        raise ValidationError(
            "degree probe limited to shapes with at most %d full paths" % PROBE_MAX_PATHS
        )
    for key, e in exponents.entries.items():
        if abs(e) > PROBE_MAX_EXPONENT:
            raise ValidationError(
                "probe exponent at %r is %d, outside [-%d, %d]"
                % (key, e, PROBE_MAX_EXPONENT, PROBE_MAX_EXPONENT)
            )


def _power(exp):
    if exp >= 0:
        return Fraction(PROBE_BASE ** exp)
    return Fraction(1, PROBE_BASE ** (-exp))


def probe_point(exponents):
    """The rational point with coordinates t**exponent."""
    _validate_probe(exponents)
    return XPoint(
        exponents.shape, {key: _power(e) for key, e in exponents.entries.items()}
    )


def degree_of(value):
    """Rounded base-t logarithm of a positive rational, via bit lengths."""
    value = Fraction(value)
    if value <= 0:
        raise ValidationError("degree probe needs a positive value")
    bits = value.numerator.bit_length() - value.denominator.bit_length()
    deg = (bits + PROBE_BASE_BITS // 2) // PROBE_BASE_BITS
    if abs(bits - PROBE_BASE_BITS * deg) > PROBE_BASE_BITS // 4:
        raise CrystalFault(
            "degree probe residual too large (bits=%d, deg=%d)" % (bits, deg),
            witness={"bits": bits, "deg": deg},
        )
    return deg


def ud_degree_probe(name, exponents, i, d=0, coord=None):
    """Leading exponent of a named rational quantity at a power point.

    ``name`` is one of ``"gamma"``, ``"epsilon"`` or ``"e"``; for ``"e"``
    the probed quantity is the (l, m) coordinate of the action at
    parameter ``t**d`` and ``coord`` must be supplied.
    """
    big = probe_point(exponents)
    if name == "gamma":
        return degree_of(geom.gamma(big, i))
    if name == "epsilon":
        return degree_of(geom.epsilon(big, i))
    if name == "e":
        if coord is None:
            raise ValidationError("probing an action coordinate needs coord=(l, m)")
        moved = geom.act_e(big, i, _power(d))
        return degree_of(moved.get(*coord))
    raise ValidationError("unknown probe quantity %r" % (name,))
