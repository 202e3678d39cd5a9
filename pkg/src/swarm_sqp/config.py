# swarm_sqp/config.py
"""
Experiment configuration.

An experiment file (YAML, or JSON since JSON is valid YAML) has two sections:

    params:                     # free variables, may reference each other
      iters: 1000
      half: "{{ params.iters // 2 }}"
    experiment:                 # ExperimentConfig fields
      problems: [g06, g11]
      iterations: "{{ params.iters }}"
      pso: {relaxation: {cutoff_fraction: 0.5}}

Strings containing "{{" are Jinja2 templates rendered against `params`;
results that look like Python literals are converted (so "{{ 2 * 3 }}" is 6).

A file without an `experiment` section is read as a flat ExperimentConfig
mapping, e.g. {"problems": ["g12"], "runs": 1, "iterations": 5}; a `params`
section may sit beside the flat fields.
"""

from __future__ import annotations

import ast
import logging
from dataclasses import dataclass, field, fields, replace
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from jinja2 import Environment, StrictUndefined
from jinja2.exceptions import TemplateError

from swarm_sqp.registry import BENCHMARKS, lookup, make_strategy
from swarm_sqp.sqp import SqpConfig
from swarm_sqp.swarm import SwarmConfig

logger = logging.getLogger(__name__)

ENV = Environment(undefined=StrictUndefined)   # module-level, create once
FORMATS = ("json", "csv", "text-table")
PARAMS_NAMESPACE = "params"
_MAX_PASSES = 100


@lru_cache(maxsize=None)        # key = literal template string
def _compile(template: str):
    return ENV.from_string(template)


def _render(template_like: Any, ctx: Dict[str, Any]) -> Any:
    """
    Render one value:
    • non-strings and plain strings → returned as-is
    • Jinja templates               → rendered, then literal-eval'd when possible
    """
    if not (isinstance(template_like, str) and "{{" in template_like):
        return template_like
    try:
        rendered = _compile(template_like).render(**ctx)
    except TemplateError as e:
        raise ValueError(f"Cannot render '{template_like}': {e}") from e
    try:
        return ast.literal_eval(rendered)
    except (ValueError, SyntaxError):
        return rendered


def _render_tree(node: Any, ctx: Dict[str, Any]) -> Any:
    if isinstance(node, dict):
        return {k: _render_tree(v, ctx) for k, v in node.items()}
    if isinstance(node, list):
        return [_render_tree(v, ctx) for v in node]
    return _render(node, ctx)


def resolve_params(params: Dict[str, Any]) -> Dict[str, Any]:
    """
    Render templates inside `params` until a pass changes nothing, so
    parameters may depend on each other.
    """
    resolved = dict(params)
    for _ in range(_MAX_PASSES):
        changed = False
        for key, val in list(resolved.items()):
            try:
                rendered = _render(val, {PARAMS_NAMESPACE: resolved})
            except ValueError:
                continue   # depends on a param not yet resolved
            if rendered != val:
                resolved[key] = rendered
                changed = True
        if not changed:
            break
    leftover = [k for k, v in resolved.items() if isinstance(v, str) and "{{" in v]
    if leftover:
        raise ValueError(f"Could not resolve params {leftover}")
    return resolved


@dataclass(frozen=True)
class ExperimentConfig:
    problems: Tuple[str, ...] = ("all",)
    runs: int = 25
    seed: int = 0
    strategy: Union[str, Dict[str, Any]] = "final"
    iterations: Optional[int] = None
    out: Optional[str] = None
    format: str = "json"
    trace: Optional[str] = None
    workers: int = 1
    compare_reference: bool = False
    pso: Dict[str, Any] = field(default_factory=dict)
    sqp: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        problems = self.problems
        if isinstance(problems, str):
            problems = (problems,)
        object.__setattr__(self, "problems", tuple(problems))
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.iterations is not None and self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")
        if self.format not in FORMATS:
            raise ValueError(f"Unknown format '{self.format}', expected one of {FORMATS}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"Unknown keys in 'experiment': {sorted(unknown)}. Valid keys: {sorted(known)}")
        return cls(**d)

    def override(self, **changes: Any) -> "ExperimentConfig":
        """Copy with every non-None change applied (CLI flags win over the file)."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def problem_names(self) -> List[str]:
        """
        Expand "all" and comma-separated entries.

        Raises:
            KeyError: On an unknown benchmark name.
        """
        names: List[str] = []
        for item in self.problems:
            for name in str(item).split(","):
                name = name.strip()
                if not name:
                    continue
                if name == "all":
                    names.extend(n for n in BENCHMARKS if n not in names)
                elif name not in names:
                    lookup(name)
                    names.append(name)
        if not names:
            raise ValueError("No problems selected")
        return names

    def swarm_config(self, record_positions: bool = False) -> SwarmConfig:
        config = SwarmConfig.from_dict(self.pso)
        changes: Dict[str, Any] = {"record_positions": record_positions}
        if self.iterations is not None:
            changes["max_iterations"] = self.iterations
        return replace(config, **changes)

    def sqp_config(self) -> SqpConfig:
        return SqpConfig.from_dict(self.sqp)

    def make_strategy(self):
        return make_strategy(self.strategy)


def parse_config(data: Optional[Dict[str, Any]]) -> ExperimentConfig:
    """Build an ExperimentConfig from already-loaded file contents."""
    data = data or {}
    if not isinstance(data, dict):
        raise ValueError("Experiment file must contain a mapping")
    if "experiment" in data:
        unknown = set(data) - {PARAMS_NAMESPACE, "experiment"}
        if unknown:
            raise ValueError(f"Unknown top-level keys {sorted(unknown)}; expected 'params' and 'experiment'")
        section = data["experiment"] or {}
    else:
        section = {k: v for k, v in data.items() if k != PARAMS_NAMESPACE}
    params = resolve_params(data.get(PARAMS_NAMESPACE) or {})
    experiment = _render_tree(section, {PARAMS_NAMESPACE: params})
    return ExperimentConfig.from_dict(experiment)


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read an experiment file.

    Raises:
        ValueError: On malformed content or unknown keys.
        RuntimeError: If the file cannot be read.
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise RuntimeError(f"Failed to read experiment file {path}") from e
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ValueError(f"Malformed experiment file {path}: {e}") from e
    config = parse_config(data)
    logger.info("Loaded experiment %s: %d runs, strategy %s", path, config.runs, config.strategy)
    return config
