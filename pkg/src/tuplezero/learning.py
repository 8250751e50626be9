"""Self-play training: configuration, the training loop driver and the
probe used for learning-curve logging.

The episode loop itself runs inside the kernel backend (see
``_pykern.train`` for the reference implementation); this module slices
the budget into chunks so progress can be logged without slowing the
hot path down.
"""

import csv
import time
from dataclasses import dataclass, field, replace
from types import SimpleNamespace

from .errors import ConfigError
from .ntuple import NTupleSystem
from .rng import SplitMix64, derive_seed


def td_delta(reward, gamma, v_next, v_prev):
    """The one-step temporal difference error."""
    return reward + gamma * v_next - v_prev


@dataclass
class TrainConfig:
    """Hyperparameters of one training run.

    ``epsilon_start -> epsilon_end`` decays linearly over the episode
    budget.  ``inside_mcts_iterations > 0`` switches self-play move
    selection to the wrapped search around the current net (weight updates
    stay the same).
    """

    episodes: int
    seed: int
    alpha: float = 0.2
    lam: float = 0.0
    gamma: float = 1.0
    epsilon_start: float = 0.1
    epsilon_end: float = 0.0
    tcl: bool = True
    tcl_transfer: str = "identity"  # or "exponential"
    tcl_beta: float = 2.7
    inside_mcts_iterations: int = 0
    inside_c_puct: float = 1.0
    inside_epsilon_uct: float = 1e-8
    inside_max_depth: int = 0
    cube_scramble_max: int = 13
    episode_cap: int = 0

    def __post_init__(self):
        if self.epsilon_start < self.epsilon_end:
            raise ConfigError("epsilon must not grow over training")
        if not 0.0 <= self.lam <= 1.0:
            raise ConfigError("lambda must lie in [0, 1]")
        if not 0.0 < self.gamma <= 1.0:
            raise ConfigError("gamma must lie in (0, 1]")
        if self.alpha <= 0:
            raise ConfigError("alpha must be positive")
        if self.tcl_transfer not in ("identity", "exponential"):
            raise ConfigError(f"unknown tcl transfer {self.tcl_transfer!r}")

    def kernel_params(self):
        return SimpleNamespace(
            alpha=self.alpha,
            lam=self.lam,
            eps_start=self.epsilon_start,
            eps_end=self.epsilon_end,
            episodes_total=self.episodes,
            tcl=self.tcl,
            tcl_exp=self.tcl_transfer == "exponential",
            tcl_beta=self.tcl_beta,
            inside_iters=self.inside_mcts_iterations,
            inside_cpuct=self.inside_c_puct,
            inside_eps_uct=self.inside_epsilon_uct,
            inside_max_depth=self.inside_max_depth,
            cube_pmax=self.cube_scramble_max,
            episode_cap=self.episode_cap,
        )


@dataclass
class TrainingLog:
    rows: list = field(default_factory=list)  # (episode, epsilon, probe_mse, seconds)
    episodes: int = 0
    updates: int = 0
    farl_updates: int = 0
    seconds: float = 0.0

    def write_csv(self, path):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["episode", "epsilon", "probe_mse", "seconds"])
            for row in self.rows:
                w.writerow([row[0], f"{row[1]:.6f}", f"{row[2]:.6f}", f"{row[3]:.3f}"])


def make_trainer(system, cfg):
    """Kernel trainer bound to the system's net (exposed for tests that
    drive episodes one at a time)."""
    backend = system._backend
    return backend.Trainer(system.game.kernel, system.net, cfg.kernel_params(),
                           cfg.seed)


def bellman_probe(system, n_states=64, seed=0x5EED, max_plies=200):
    """Mean squared self-consistency residual over a fixed probe set.

    For a two-player afterstate its learned value should mirror the best
    afterstate target of the side to move; for one-player games the two
    coincide.  The probe states are drawn once by seeded random play.
    """
    game = system.game
    rng = SplitMix64(seed)
    states = []
    while len(states) < n_states:
        if game.name == "cube2x2":
            state = game.scramble(1 + rng.randint(13), rng)
        else:
            state = game.initial_state()
        plies = 0
        while (not game.is_over(state) and plies < max_plies
               and len(states) < n_states):
            states.append(state)
            acts = game.legal_actions(state)
            state = game.advance(state, acts[rng.randint(len(acts))])
            plies += 1
    sign = -1.0 if game.n_players == 2 else 1.0

    def probe():
        total = 0.0
        for s in states:
            _, targets = system.afterstate_targets(s)
            best = max(targets)
            resid = system.value(s) - sign * best
            total += resid * resid
        return total / len(states)

    return probe


def train(system, cfg, log_path=None, probe=None, log_every=None,
          progress=None):
    """Run ``cfg.episodes`` self-play episodes on the system's weights.

    Returns a TrainingLog; the system is updated in place.  `probe` is a
    zero-argument callable evaluated at every log point (defaults to the
    Bellman residual probe).
    """
    if probe is None:
        probe = bellman_probe(system, seed=derive_seed(cfg.seed, 0xBE11))
    if log_every is None:
        log_every = max(1, cfg.episodes // 20)
    trainer = make_trainer(system, cfg)
    log = TrainingLog()
    t0 = time.perf_counter()
    done = 0
    log.rows.append((0, trainer_epsilon(trainer), probe(), 0.0))
    while done < cfg.episodes:
        chunk = min(log_every, cfg.episodes - done)
        stats = trainer.run(chunk)
        done += chunk
        now = time.perf_counter() - t0
        log.rows.append((done, trainer_epsilon(trainer), probe(), now))
        if progress:
            progress(done, cfg.episodes, log.rows[-1])
        log.episodes = stats["episodes"]
        log.updates = stats["updates"]
        log.farl_updates = stats["farl_updates"]
    log.seconds = time.perf_counter() - t0
    if log_path:
        log.write_csv(log_path)
    return log


def trainer_epsilon(trainer):
    return trainer.epsilon()


def train_system(game, net_cfg, cfg, **train_kw):
    """Convenience: draw tuples, train, return (system, log).

    The tuple draw uses its own stream of the master seed so that training
    noise does not change the network shape.
    """
    system = NTupleSystem.from_random_walk(
        game, net_cfg["n"], net_cfg["k"], derive_seed(cfg.seed, 0x7001),
        transfer=net_cfg.get("transfer", "tanh"),
        gamma=cfg.gamma,
        reward_mode=net_cfg.get("reward_mode", "terminal"),
    )
    log = train(system, cfg, **train_kw)
    return system, log


def config_overrides(cfg, **kw):
    return replace(cfg, **kw)
