import pytest

from pathcrystal import make_shape

# the shape battery used by the randomized identity checks
SHAPES = [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2), (5, 3)]


@pytest.fixture(params=SHAPES, ids=lambda nk: "n%dk%d" % nk)
def shape(request):
    return make_shape(*request.param)
