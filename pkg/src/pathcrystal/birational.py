"""The mutually inverse positive birational maps between the two charts.

Both maps are quotients of partial path sums, so positivity of the output
is automatic for positive input.  All boundary special cases live inside
:func:`pathcrystal.paths.partial_sum`; nothing here branches.
"""

from .lattice import XPoint, YPoint
from .paths import partial_sum


def sigma_map(x):
    """Forward map x -> y; the image satisfies y_k^(m) = X_k^m."""
    shape = x.shape
    entries = {}
    for (l, m) in shape.l2_indices:
        ratio = partial_sum(x, "X", l, m) / partial_sum(x, "X", l + 1, m)
        entries[(l, m)] = x.get(l + 1, m) * ratio
    return YPoint(shape, entries)


def xi_map(y):
    """Inverse map y -> x."""
    shape = y.shape
    entries = {}
    for (l, m) in shape.l1_indices:
        ratio = partial_sum(y, "Ystar", l - 1, m) / partial_sum(y, "Ystar", l, m)
        entries[(l, m)] = y.get(l, m) * ratio
    return XPoint(shape, entries)
