import math

import pytest

from quantum_concepts_py.hilbert_states import GaussianState, default_grid, discretize

# Raw Born-rule score of car and boat against the amphibious object: 0.8 * exp(-0.4)
AMPHIBIOUS_RAW_SCORE = 0.8 * math.exp(-0.4)

AMPHIBIOUS_YAML = """\
concepts:
  - name: car
    mu: 5
    sigma: 1
  - name: boat
    mu: 1
    sigma: 1
object:
  mu: 3
  sigma: 2
memberships:
  - name: car
    center: 5
    half_width: {half_width}
  - name: boat
    center: 1
    half_width: {half_width}
"""


@pytest.fixture
def car():
    return GaussianState(mu=5.0, sigma=1.0)


@pytest.fixture
def boat():
    return GaussianState(mu=1.0, sigma=1.0)


@pytest.fixture
def amphibious():
    return GaussianState(mu=3.0, sigma=2.0)


@pytest.fixture
def shared_grid(car, boat, amphibious):
    return default_grid(car, boat, amphibious)


@pytest.fixture
def grid_states(car, boat, amphibious, shared_grid):
    """Car, boat and object discretized on one shared grid."""
    return tuple(discretize(s, shared_grid) for s in (car, boat, amphibious))


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "amphibious.yaml"
    path.write_text(AMPHIBIOUS_YAML.format(half_width=4))
    return str(path)


@pytest.fixture
def narrow_config_path(tmp_path):
    path = tmp_path / "amphibious_narrow.yaml"
    path.write_text(AMPHIBIOUS_YAML.format(half_width=2))
    return str(path)
