import random

import pytest

from arrspec.arrangement import Arrangement
from arrspec.examples import builtin, random_arrangement
from arrspec.harness import CHECKS, check_arrangement, verify


def test_zero_trials():
    rep = verify(0, 0, 7, 3)
    assert rep.ok and sum(rep.passed.values()) == 0
    assert rep.lines()[-1] == "OK"


def test_deterministic():
    a, b = verify(11, 4, 7, 3), verify(11, 4, 7, 3)
    assert a.to_record() == b.to_record()
    assert a.ok and all(a.passed[c] == 4 for c in CHECKS)


def test_n4_small_run():
    rep = verify(2, 3, 6, 4)
    assert rep.ok, rep.lines()


def test_random_arrangement_is_reproducible():
    draw = lambda: random_arrangement(random.Random(9), 3, 8)
    assert draw() == draw()
    arr = draw()
    assert arr.is_reduced and arr.is_essential and 4 <= arr.d <= 8
    with pytest.raises(ValueError):
        random_arrangement(random.Random(0), 3, 3)


@pytest.mark.parametrize("name", ["mustata-7", "n4-demo", "boolean-3", "generic-3-6", "generic-4-6"])
def test_builtins_pass_every_check(name):
    assert all(v is None for v in check_arrangement(builtin(name)).values())


def test_weighted_arrangement_passes():
    arr = Arrangement.from_normals(3, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 2, 3]], [2, 1, 3, 1, 2])
    out = check_arrangement(arr)
    assert all(v is None for v in out.values()), out
