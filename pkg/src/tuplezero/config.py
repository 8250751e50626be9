"""Run configuration files (YAML) and the shipped per-game presets.

Configs are strict: unknown keys anywhere are rejected so typos cannot
silently fall back to defaults.  Seeds are mandatory - nothing in a run is
allowed to depend on the wall clock.
"""

import importlib.resources as resources
from dataclasses import dataclass, field

import yaml

from .errors import ConfigError
from .learning import TrainConfig
from .mcts import SearchConfig

_TRAIN_KEYS = {
    "alpha": "alpha", "lambda": "lam", "gamma": "gamma",
    "epsilon_start": "epsilon_start", "epsilon_end": "epsilon_end",
    "episodes": "episodes", "tcl": "tcl", "tcl_transfer": "tcl_transfer",
    "tcl_beta": "tcl_beta", "inside_mcts_iterations": "inside_mcts_iterations",
    "inside_c_puct": "inside_c_puct", "cube_scramble_max": "cube_scramble_max",
    "episode_cap": "episode_cap",
}
_SEARCH_KEYS = {"iterations", "c_puct", "epsilon_uct", "max_depth", "reuse_tree"}
_NTUPLE_KEYS = {"n", "k", "transfer", "reward_mode"}
_EVAL_KEYS = {"protocol", "episodes", "opponent", "agents", "twists", "cubes",
              "step_budget", "episodes_per_role", "wrap_iterations"}
_TOP_KEYS = {"game", "seed", "ntuple", "train", "search", "eval", "output"}
_OUTPUT_KEYS = {"dir"}


@dataclass
class RunConfig:
    game: str
    seed: int
    ntuple: dict
    train: TrainConfig
    search: SearchConfig
    eval: dict = field(default_factory=dict)
    output_dir: str = "runs"


def _check_keys(section, data, allowed):
    unknown = set(data) - set(allowed)
    if unknown:
        raise ConfigError(
            f"unknown key(s) {sorted(unknown)} in section {section!r}; "
            f"allowed: {sorted(allowed)}")


def parse_run_config(data, source="<config>"):
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: config must be a mapping")
    _check_keys("top level", data, _TOP_KEYS)
    for key in ("game", "seed"):
        if key not in data:
            raise ConfigError(f"{source}: missing required key {key!r}")
    ntuple = dict(data.get("ntuple", {}))
    _check_keys("ntuple", ntuple, _NTUPLE_KEYS)
    if "n" not in ntuple or "k" not in ntuple:
        raise ConfigError(f"{source}: ntuple section needs n and k")

    train_in = dict(data.get("train", {}))
    _check_keys("train", train_in, _TRAIN_KEYS)
    if "episodes" not in train_in:
        raise ConfigError(f"{source}: train section needs episodes")
    train_kw = {_TRAIN_KEYS[k]: v for k, v in train_in.items()}
    train = TrainConfig(seed=int(data["seed"]), **train_kw)

    search_in = dict(data.get("search", {}))
    _check_keys("search", search_in, _SEARCH_KEYS)
    search = SearchConfig(**search_in)

    eval_in = dict(data.get("eval", {}))
    _check_keys("eval", eval_in, _EVAL_KEYS)

    output = dict(data.get("output", {}))
    _check_keys("output", output, _OUTPUT_KEYS)

    return RunConfig(
        game=str(data["game"]),
        seed=int(data["seed"]),
        ntuple=ntuple,
        train=train,
        search=search,
        eval=eval_in,
        output_dir=output.get("dir", "runs"),
    )


def load_run_config(path):
    with open(path) as fh:
        try:
            data = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ConfigError(f"{path}: {exc}")
    return parse_run_config(data, source=str(path))


def preset_text(game):
    try:
        return (resources.files("tuplezero") / "presets" / f"{game}.yaml").read_text()
    except FileNotFoundError:
        raise ConfigError(f"no preset for game {game!r}")


def load_preset(game):
    """The shipped default configuration for a game."""
    return parse_run_config(yaml.safe_load(preset_text(game)), source=f"preset:{game}")
