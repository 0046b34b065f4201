"""
Concept configuration documents.

A document is YAML (JSON is accepted as a subset) with the keys:

    concepts:          # required, non-empty
      - {name: car, mu: 5, sigma: 1}
    object: {mu: 3, sigma: 2}                       # optional
    grid: {x_min: -13, x_max: 19, n_points: 4097}   # optional
    memberships:                                    # optional
      - {name: car, center: 5, half_width: 4}

Unknown keys are rejected. Every validation message names the
offending entry and the line it starts on.
"""

import logging
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

import yaml

from quantum_concepts_py.born_classifier import Concept
from quantum_concepts_py.exceptions import ConfigError, InvalidState
from quantum_concepts_py.fuzzy_baseline import TriangularMembership
from quantum_concepts_py.hilbert_states import GaussianState, Grid, default_grid
from quantum_concepts_py.io import check_file_exists, is_config_document, read_text
from quantum_concepts_py.logs import get_logger

log = get_logger(Path(__file__).stem, level=logging.INFO)

DEFAULT_OBJECT = GaussianState(mu=3.0, sigma=2.0)
DEFAULT_CONFIG_RESOURCE = "amphibious_vehicle.yaml"

TOP_LEVEL_KEYS = {"concepts", "object", "grid", "memberships"}
CONCEPT_KEYS = {"name", "mu", "sigma"}
OBJECT_KEYS = {"mu", "sigma"}
GRID_KEYS = {"x_min", "x_max", "n_points"}
MEMBERSHIP_KEYS = {"name", "center", "half_width"}


@dataclass(frozen=True)
class ConceptConfig:
    concepts: tuple[tuple[str, GaussianState], ...]
    obj: GaussianState = DEFAULT_OBJECT
    grid: Grid | None = None
    memberships: tuple[tuple[str, TriangularMembership], ...] = ()

    @property
    def registry(self) -> list[Concept]:
        return [Concept(name=name, state=state) for name, state in self.concepts]

    def resolved_grid(self, obj: GaussianState | None = None) -> Grid:
        """The configured grid, or the default grid over every concept and the object."""
        if self.grid is not None:
            return self.grid
        return default_grid(*(state for _, state in self.concepts), obj or self.obj)

    def to_dict(self) -> dict:
        """Document form; ``parse_config_dict(config.to_dict())`` round-trips."""
        doc: dict[str, Any] = {
            "concepts": [
                {"name": name, "mu": state.mu, "sigma": state.sigma}
                for name, state in self.concepts
            ],
            "object": {"mu": self.obj.mu, "sigma": self.obj.sigma},
        }
        if self.grid is not None:
            doc["grid"] = {
                "x_min": self.grid.x_min,
                "x_max": self.grid.x_max,
                "n_points": self.grid.n_points,
            }
        if self.memberships:
            doc["memberships"] = [
                {"name": name, "center": m.center, "half_width": m.half_width}
                for name, m in self.memberships
            ]
        return doc


class _Lines:
    """Maps document paths like ("concepts", 1) to 1-based source lines."""

    def __init__(self, node: yaml.Node | None):
        self.root = node

    def of(self, *path) -> int | None:
        node = self.root
        if node is None:
            return None
        for key in path:
            if isinstance(node, yaml.MappingNode):
                matches = [v for k, v in node.value if k.value == key]
                if not matches:
                    return node.start_mark.line + 1
                node = matches[0]
            elif isinstance(node, yaml.SequenceNode) and isinstance(key, int):
                if key >= len(node.value):
                    return node.start_mark.line + 1
                node = node.value[key]
            else:
                break
        return node.start_mark.line + 1


def _check_keys(entry: Any, allowed: set[str], required: set[str], label: str, line) -> dict:
    if not isinstance(entry, dict):
        raise ConfigError(f"expected a mapping, got {type(entry).__name__}", label, line)
    unknown = sorted(set(map(str, entry)) - allowed)
    if unknown:
        raise ConfigError(f"unknown key(s) {unknown}", label, line)
    missing = sorted(required - set(entry))
    if missing:
        raise ConfigError(f"missing key(s) {missing}", label, line)
    return entry


def _number(entry: dict, key: str, label: str, line) -> float:
    value = entry[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key} must be a number, got {value!r}", label, line)
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"{key} must be finite, got {value!r}", label, line)
    return value


def _named_entries(doc: dict, key: str, lines: _Lines) -> list[tuple[int, dict, str, int]]:
    entries = doc.get(key)
    if not isinstance(entries, list):
        raise ConfigError(f"'{key}' must be a list", key, lines.of(key))
    seen: dict[str, str] = {}
    labelled = []
    for i, entry in enumerate(entries):
        line = lines.of(key, i)
        label = f"{key}[{i}]"
        name = entry.get("name") if isinstance(entry, dict) else None
        if not isinstance(name, str) or not name:
            raise ConfigError("name must be a non-empty string", label, line)
        label = f"{key}[{i}] ({name})"
        if name in seen:
            raise ConfigError(f"duplicate name, already used by {seen[name]}", label, line)
        seen[name] = label
        labelled.append((i, entry, label, line))
    return labelled


def _gaussian(entry: dict, label: str, line) -> GaussianState:
    mu = _number(entry, "mu", label, line)
    sigma = _number(entry, "sigma", label, line)
    if sigma <= 0:
        raise ConfigError(f"sigma must be positive, got {sigma!r}", label, line)
    try:
        return GaussianState(mu=mu, sigma=sigma)
    except InvalidState as e:
        raise ConfigError(str(e), label, line) from e


def parse_config_dict(doc: Any, lines: _Lines | None = None) -> ConceptConfig:
    """
    Validate a loaded document and build a ConceptConfig.

    Raises
    ------
    ConfigError
        On any schema violation, naming the entry and line when known
    """
    lines = lines or _Lines(None)
    if not isinstance(doc, dict):
        raise ConfigError("the document must be a mapping", None, lines.of())
    _check_keys(doc, TOP_LEVEL_KEYS, {"concepts"}, "document", lines.of())

    concepts = []
    for _, entry, label, line in _named_entries(doc, "concepts", lines):
        _check_keys(entry, CONCEPT_KEYS, CONCEPT_KEYS, label, line)
        concepts.append((entry["name"], _gaussian(entry, label, line)))
    if not concepts:
        raise ConfigError("at least one concept is required", "concepts", lines.of("concepts"))

    obj = DEFAULT_OBJECT
    if doc.get("object") is not None:
        line = lines.of("object")
        entry = _check_keys(doc["object"], OBJECT_KEYS, OBJECT_KEYS, "object", line)
        obj = _gaussian(entry, "object", line)

    grid = None
    if doc.get("grid") is not None:
        line = lines.of("grid")
        entry = _check_keys(doc["grid"], GRID_KEYS, GRID_KEYS, "grid", line)
        n_points = entry["n_points"]
        if isinstance(n_points, bool) or not isinstance(n_points, int):
            raise ConfigError(f"n_points must be an integer, got {n_points!r}", "grid", line)
        try:
            grid = Grid(
                x_min=_number(entry, "x_min", "grid", line),
                x_max=_number(entry, "x_max", "grid", line),
                n_points=n_points,
            )
        except InvalidState as e:
            raise ConfigError(str(e), "grid", line) from e

    memberships = []
    if doc.get("memberships") is not None:
        for _, entry, label, line in _named_entries(doc, "memberships", lines):
            _check_keys(entry, MEMBERSHIP_KEYS, MEMBERSHIP_KEYS, label, line)
            half_width = _number(entry, "half_width", label, line)
            if half_width <= 0:
                raise ConfigError(f"half_width must be positive, got {half_width!r}", label, line)
            center = _number(entry, "center", label, line)
            memberships.append((entry["name"], TriangularMembership(center, half_width)))

    return ConceptConfig(
        concepts=tuple(concepts), obj=obj, grid=grid, memberships=tuple(memberships)
    )


def parse_config_text(text: str, source: str = "<string>") -> ConceptConfig:
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        doc = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        raise ConfigError(f"cannot parse {source}: {getattr(e, 'problem', e)}", None, line) from e
    return parse_config_dict(doc, _Lines(node))


def load_config(path: str | None = None) -> ConceptConfig:
    """
    Load a configuration document from a local path or fsspec URL. With no
    path, the bundled car/boat/object configuration is used.
    """
    if path is None:
        resource = resources.files("quantum_concepts_py") / "data" / DEFAULT_CONFIG_RESOURCE
        text = resource.read_text(encoding="utf-8")
        source = f"bundled {DEFAULT_CONFIG_RESOURCE}"
    else:
        if not is_config_document(path):
            raise ConfigError(f"{path} is not a .yaml, .yml or .json document")
        if not check_file_exists(path):
            raise ConfigError(f"{path} does not exist")
        try:
            text = read_text(path)
        except (FileNotFoundError, IsADirectoryError, PermissionError) as e:
            raise ConfigError(f"cannot read {path}: {e}") from e
        source = path
    config = parse_config_text(text, source)
    log.debug(f"Loaded {len(config.concepts)} concept(s) from {source}")
    return config
