"""Crystal structure on both charts: actions, invariants, Weyl reflections.

The chart carrying x-coordinates has actions indexed by 1..n plus an
induced 0-action; the chart carrying y-coordinates has actions indexed by
0..n-1.  Together they assemble the full affine family, and
:func:`verify_axioms` machine-checks every defining relation at random
points.

Everything indexed by 1..n is written against the generic semiring of the
point, so the same code yields the exact rational action on an
:class:`~pathcrystal.lattice.XPoint` and the piecewise-linear action on a
:class:`~pathcrystal.lattice.TropPoint`; the closed-form integer versions in
:mod:`pathcrystal.tropical` are the independent second route.
"""

from fractions import Fraction

from .birational import sigma_map, xi_map
from .errors import ValidationError
from .lattice import SplitMix64, point_to_json, sample_point, sample_rational
from .paths import epsilon_total, region_sums
from .reporting import RelationCheck


class CartanA1n:
    """Cartan data of the affine family on index set {0, ..., n}."""

    def __init__(self, n):
        if n < 2:
            raise ValidationError("the Cartan matrix needs n >= 2")
        self.n = n

    def a(self, i, j):
        if i == j:
            return 2
        if (i - j) % (self.n + 1) in (1, self.n):
            return -1
        return 0

    @property
    def entries(self):
        size = self.n + 1
        return [[self.a(i, j) for j in range(size)] for i in range(size)]


def bounds_row1(shape, i):
    """Row range of the entries moved by the i-th action on the x-chart."""
    if not 1 <= i <= shape.n:
        raise ValidationError("index i must be in 1..n, got %r" % (i,))
    return max(shape.k - i + 1, 1), min(shape.k, shape.n - i + 1)


def bounds_row2(shape, i):
    """Row range of the entries moved by the i-th action on the y-chart."""
    if not 0 <= i <= shape.n - 1:
        raise ValidationError("index i must be in 0..n-1, got %r" % (i,))
    return max(shape.k - i, 1), min(shape.k, shape.n - i)


def _check_index(shape, i):
    if not 0 <= i <= shape.n:
        raise ValidationError("index i must be in 0..n, got %r" % (i,))


def _prod(sr, factors):
    out = sr.one
    for f in factors:
        out = sr.mul(out, f)
    return out


def dval(x, l, i):
    """Diagonal product at row l in column i (off-lattice factors read as 1)."""
    shape, sr = x.shape, x.semiring
    a, b = bounds_row1(shape, i)
    if not a <= l <= b:
        raise ValidationError("row %d outside [%d, %d] for i=%d" % (l, a, b, i))
    num = _prod(sr, [x.get(j, i) for j in range(l + 1, b + 1)])
    num = sr.mul(x.get(l, i), sr.mul(num, num))
    den = sr.mul(
        _prod(sr, [x.get(j, i - 1) for j in range(l + 1, b + 2)]),
        _prod(sr, [x.get(j, i + 1) for j in range(l, b + 1)]),
    )
    return sr.ratio(num, den)


def gamma(x, i):
    """Multiplier character of the i-th action."""
    shape, sr = x.shape, x.semiring
    _check_index(shape, i)
    if i == 0:
        return sr.inv(sr.mul(x.get(1, shape.n), x.get(shape.k, 1)))
    a, b = bounds_row1(shape, i)
    num = _prod(sr, [x.get(j, i) for j in range(a, b + 1)])
    num = sr.mul(num, num)
    den = sr.mul(
        _prod(sr, [x.get(j, i - 1) for j in range(a, b + 2)]),
        _prod(sr, [x.get(j, i + 1) for j in range(a - 1, b + 1)]),
    )
    return sr.ratio(num, den)


def epsilon(x, i):
    shape, sr = x.shape, x.semiring
    _check_index(shape, i)
    if i == 0:
        return sr.mul(x.get(1, shape.n), epsilon_total(x))
    a, b = bounds_row1(shape, i)
    return sr.add_all(sr.inv(dval(x, l, i)) for l in range(a, b + 1))


def _alpha(x, l, m, c):
    """U_(l-1) + c * V_l, the region combination driving the 0-action."""
    sr = x.semiring
    upper, _, _ = region_sums(x, l - 1, m)
    _, lower, _ = region_sums(x, l, m)
    return sr.add(upper, sr.mul(c, lower))


def act_e(x, i, c):
    """The i-th one-parameter action on the x-chart (rational or tropical)."""
    shape, sr = x.shape, x.semiring
    _check_index(shape, i)
    if sr.name == "rational":
        c = Fraction(c)
        if c <= 0:
            raise ValidationError("the action parameter must be positive")
    entries = dict(x.entries)
    if i == 0:
        for (l, m) in shape.l1_indices:
            if (l, m) == (1, shape.n):
                entries[(l, m)] = sr.ratio(x.get(l, m), c)
            else:
                ratio = sr.ratio(_alpha(x, l, m, c), _alpha(x, l + 1, m, c))
                entries[(l, m)] = sr.mul(x.get(l, m), ratio)
    else:
        a, b = bounds_row1(shape, i)
        terms = {p: sr.inv(dval(x, p, i)) for p in range(a, b + 1)}
        for l in range(a, b + 1):
            num = sr.add_all(
                [terms[p] for p in range(a, l)]
                + [sr.mul(c, terms[p]) for p in range(l, b + 1)]
            )
            den = sr.add_all(
                [terms[p] for p in range(a, l + 1)]
                + [sr.mul(c, terms[p]) for p in range(l + 1, b + 1)]
            )
            entries[(l, i)] = sr.mul(x.get(l, i), sr.ratio(num, den))
    return type(x)(shape, entries)


# ---------------------------------------------------------------------------
# the y-chart mirror


def dval2(y, l, i):
    shape, sr = y.shape, y.semiring
    c, d = bounds_row2(shape, i)
    if not c <= l <= d:
        raise ValidationError("row %d outside [%d, %d] for i=%d" % (l, c, d, i))
    num = _prod(sr, [y.get(j, i) for j in range(l + 1, d + 1)])
    num = sr.mul(y.get(l, i), sr.mul(num, num))
    den = sr.mul(
        _prod(sr, [y.get(j, i - 1) for j in range(l + 1, d + 2)]),
        _prod(sr, [y.get(j, i + 1) for j in range(l, d + 1)]),
    )
    return sr.ratio(num, den)


def gammabar(y, i):
    shape, sr = y.shape, y.semiring
    c, d = bounds_row2(shape, i)
    num = _prod(sr, [y.get(j, i) for j in range(c, d + 1)])
    num = sr.mul(num, num)
    den = sr.mul(
        _prod(sr, [y.get(j, i - 1) for j in range(c, d + 2)]),
        _prod(sr, [y.get(j, i + 1) for j in range(c - 1, d + 1)]),
    )
    return sr.ratio(num, den)


def epsilonbar(y, i):
    shape, sr = y.shape, y.semiring
    c, d = bounds_row2(shape, i)
    return sr.add_all(sr.inv(dval2(y, l, i)) for l in range(c, d + 1))


def act_ebar(y, i, cval):
    """The i-th action on the y-chart, i in 0..n-1."""
    shape, sr = y.shape, y.semiring
    c, d = bounds_row2(shape, i)
    if sr.name == "rational":
        cval = Fraction(cval)
        if cval <= 0:
            raise ValidationError("the action parameter must be positive")
    terms = {p: sr.inv(dval2(y, p, i)) for p in range(c, d + 1)}
    entries = dict(y.entries)
    for l in range(c, d + 1):
        num = sr.add_all(
            [terms[p] for p in range(c, l)]
            + [sr.mul(cval, terms[p]) for p in range(l, d + 1)]
        )
        den = sr.add_all(
            [terms[p] for p in range(c, l + 1)]
            + [sr.mul(cval, terms[p]) for p in range(l + 1, d + 1)]
        )
        entries[(l, i)] = sr.mul(y.get(l, i), sr.ratio(num, den))
    return type(y)(shape, entries)


def sigma_bar(x):
    """Chart change x -> y; intertwines the two families of actions."""
    return sigma_map(x)


def sigma_bar_inv(y):
    return xi_map(y)


def act_e0_via_sigma(x, c):
    """0-action routed through the chart change; must match act_e(x, 0, c)."""
    return xi_map(act_ebar(sigma_map(x), 0, c))


# ---------------------------------------------------------------------------
# Weyl group


def _fval(x, p, i, a):
    """Companion product to dval entering the closed reflection formula.

    Equals gamma_i divided by the diagonal product at row p; the
    denominator ranges start one step earlier than dval's so that the
    boundary factors cancel correctly for every i, not just i = k.
    """
    sr = x.semiring
    num = _prod(sr, [x.get(j, i) for j in range(a, p)])
    num = sr.mul(x.get(p, i), sr.mul(num, num))
    den = sr.mul(
        _prod(sr, [x.get(j, i - 1) for j in range(a, p + 1)]),
        _prod(sr, [x.get(j, i + 1) for j in range(a - 1, p)]),
    )
    return sr.ratio(num, den)


def weyl_s(x, i):
    """Simple reflection, in closed form; equals act_e(x, i, 1/gamma_i(x))."""
    shape, sr = x.shape, x.semiring
    _check_index(shape, i)
    entries = dict(x.entries)
    if i == 0:
        scale = sr.mul(x.get(1, shape.n), x.get(shape.k, 1))
        for (l, m) in shape.l1_indices:
            if (l, m) == (1, shape.n):
                entries[(l, m)] = sr.inv(x.get(shape.k, 1))
            else:
                ratio = sr.ratio(_alpha(x, l, m, scale), _alpha(x, l + 1, m, scale))
                entries[(l, m)] = sr.mul(x.get(l, m), ratio)
    else:
        a, b = bounds_row1(shape, i)
        fvals = {p: _fval(x, p, i, a) for p in range(a, b + 1)}
        dinvs = {p: sr.inv(dval(x, p, i)) for p in range(a, b + 1)}
        for l in range(a, b + 1):
            num = sr.add_all(
                [fvals[p] for p in range(a, l)] + [dinvs[p] for p in range(l, b + 1)]
            )
            den = sr.add_all(
                [fvals[p] for p in range(a, l + 1)] + [dinvs[p] for p in range(l + 1, b + 1)]
            )
            entries[(l, i)] = sr.mul(x.get(l, i), sr.ratio(num, den))
    return type(x)(shape, entries)


def weyl_s_def(x, i):
    """Definitional route for the reflection: the action at parameter 1/gamma."""
    return act_e(x, i, x.semiring.inv(gamma(x, i)))


# ---------------------------------------------------------------------------
# randomized axiom verification


def _witness(shape, x, extra):
    data = {"point": point_to_json(x)}
    data.update(extra)
    return data


def verify_axioms(shape, trials, seed, bound=16, params=1):
    """Randomized check of every defining relation of the affine structure.

    Each of ``trials`` points is tested with ``params`` draws of the
    parameter pair.  Returns a list of :class:`RelationCheck`; failures
    carry reproducing witnesses instead of raising.
    """
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    cartan = CartanA1n(shape.n)
    index_set = range(shape.n + 1)
    checks = {
        name: RelationCheck(name)
        for name in (
            "identity-at-1",
            "parameter-group-law",
            "gamma-scaling",
            "epsilon-scaling",
            "epsilon-invariance",
            "commutation",
            "verma",
        )
    }
    rng = SplitMix64(seed ^ 0xA1F1)
    for t, p in ((t, p) for t in range(trials) for p in range(params)):
        x = sample_point(shape, seed + t, bound, kind="x")
        c = sample_rational(rng, bound, avoid_one=(p % 2 == 0))
        d = sample_rational(rng, bound, avoid_one=(p % 2 == 1))
        for i in index_set:
            xi = act_e(x, i, c)
            checks["identity-at-1"].record(
                act_e(x, i, Fraction(1)) == x,
                _witness(shape, x, {"i": i}),
            )
            checks["parameter-group-law"].record(
                act_e(xi, i, d) == act_e(x, i, c * d),
                _witness(shape, x, {"i": i, "c": str(c), "d": str(d)}),
            )
            checks["epsilon-scaling"].record(
                epsilon(xi, i) == epsilon(x, i) / c,
                _witness(shape, x, {"i": i, "c": str(c)}),
            )
            for j in index_set:
                checks["gamma-scaling"].record(
                    gamma(xi, j) == c ** cartan.a(i, j) * gamma(x, j),
                    _witness(shape, x, {"i": i, "j": j, "c": str(c)}),
                )
            for j in index_set:
                if j <= i:
                    continue
                aij = cartan.a(i, j)
                if aij == 0:
                    checks["commutation"].record(
                        act_e(act_e(x, j, d), i, c) == act_e(act_e(x, i, c), j, d),
                        _witness(shape, x, {"i": i, "j": j, "c": str(c), "d": str(d)}),
                    )
                    checks["epsilon-invariance"].record(
                        epsilon(act_e(x, j, c), i) == epsilon(x, i),
                        _witness(shape, x, {"i": i, "j": j, "c": str(c)}),
                    )
                else:
                    lhs = act_e(act_e(act_e(x, i, d), j, c * d), i, c)
                    rhs = act_e(act_e(act_e(x, j, c), i, c * d), j, d)
                    checks["verma"].record(
                        lhs == rhs,
                        _witness(shape, x, {"i": i, "j": j, "c": str(c), "d": str(d)}),
                    )
    return list(checks.values())
