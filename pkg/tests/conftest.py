import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from blockstab.grid2d import GridModule2D, Window
from blockstab.levelset import PLGraph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def immersed_curve() -> PLGraph:
    """Height function on an immersed curve: one crossing at height 0 and critical values −2, −1, 0, 1, 2."""
    return PLGraph.of(
        {0: -2, 1: 0, 2: 1, 3: -1, 4: 2, 5: 0},
        [(0, 1), (1, 2), (3, 1), (1, 4), (2, 5), (5, 3)],
    )


@pytest.fixture
def diamond() -> PLGraph:
    return PLGraph.of({0: 0, 1: 1, 2: 2, 3: 1}, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def single_edge() -> PLGraph:
    return PLGraph.of({0: 0, 1: 1}, [(0, 1)])


@pytest.fixture
def square_indicator() -> GridModule2D:
    """Indicator module of the square `[0, 2]²` inside the window `[−1, 3]²`."""
    one: np.ndarray = np.ones((1, 1), dtype=np.int64)
    return GridModule2D.from_maps(
        Window(lower=(-1, -1), upper=(3, 3)),
        {(x, y): 1 for x in range(3) for y in range(3)},
        {(x, y): one for x in range(2) for y in range(3)},
        {(x, y): one for x in range(3) for y in range(2)},
    )
