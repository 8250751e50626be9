"""Match running and the experimental protocols: role-swapped matches,
round-robin tournaments, multi-agent ladders, cube solved-rate sweeps and
per-move timing probes.

Matches between two deterministic agents replay identically; such pairs
are flagged so nobody mistakes 100 repeats for 100 samples.  Statistics
over agent populations (ladders) are computed across agents, not across
episodes.
"""

import logging
import statistics
import time
from dataclasses import dataclass, field, replace

from .errors import EngineError, GameContractError, IllegalMoveError
from .learning import train_system
from .rng import derive_seed

log = logging.getLogger(__name__)

MAX_PLIES = 2000  # no finite game here gets anywhere near this


@dataclass
class MatchRecord:
    """Outcome of `episodes` games of first vs second (fixed roles).

    Win/tie/loss counts are from the first player's point of view;
    per-move wall-clock samples are kept per role in milliseconds.
    """

    game: str
    first: str
    second: str
    episodes: int
    wins: int = 0
    ties: int = 0
    losses: int = 0
    forfeits: int = 0
    deterministic_pair: bool = False
    seed: int = 0
    move_ms: dict = field(default_factory=lambda: {"first": [], "second": []})

    @property
    def rate(self):
        return self.wins / self.episodes if self.episodes else 0.0

    def mean_move_ms(self, role="first"):
        samples = self.move_ms[role]
        return statistics.fmean(samples) if samples else 0.0


def run_match(game, first, second, episodes, seed=0, collect_times=True):
    """Play `episodes` games, first always moving first.

    An agent proposing an illegal move forfeits that episode (scored as a
    loss for it and surfaced in the log and the forfeit counter); an
    external-engine failure aborts the whole match instead of being scored.
    """
    if game.n_players != 2:
        raise GameContractError("run_match needs a 2-player game")
    rec = MatchRecord(
        game=game.name, first=first.name, second=second.name,
        episodes=episodes, seed=seed,
        deterministic_pair=first.deterministic and second.deterministic,
    )
    agents = (first, second)
    roles = ("first", "second")
    for _ in range(episodes):
        first.reset()
        second.reset()
        state = game.initial_state()
        plies = 0
        outcome = None
        while not game.is_over(state):
            if plies >= MAX_PLIES:
                raise GameContractError(f"{game.name} episode exceeded {MAX_PLIES} plies")
            mover = game.current_player(state)
            agent = agents[mover]
            t0 = time.perf_counter()
            try:
                action = agent.propose(state)
            except EngineError:
                raise
            except IllegalMoveError as exc:
                log.warning("%s forfeits: %s", agent.name, exc)
                outcome = -1.0 if mover == 0 else 1.0
                rec.forfeits += 1
                break
            dt_ms = (time.perf_counter() - t0) * 1000.0
            if collect_times:
                rec.move_ms[roles[mover]].append(dt_ms)
            try:
                state = game.advance(state, action)
            except IllegalMoveError as exc:
                log.warning("%s forfeits: %s", agent.name, exc)
                outcome = -1.0 if mover == 0 else 1.0
                rec.forfeits += 1
                break
            plies += 1
        if outcome is None:
            outcome = game.final_score(state, 0)
        if outcome > 0:
            rec.wins += 1
        elif outcome < 0:
            rec.losses += 1
        else:
            rec.ties += 1
    return rec


@dataclass
class EvalReport:
    kind: str
    game: str
    records: list
    summary: dict = field(default_factory=dict)


def tournament(game, agents, episodes, seed=0):
    """Round robin over all ordered pairs; every agent plays both roles.

    The summary ranks agents by overall won-games rate: wins in either role
    divided by total games played.
    """
    if len(agents) < 2:
        return EvalReport(kind="tournament", game=game.name, records=[],
                          summary={"ranking": [], "rates": {}})
    records = []
    wins = {a.name: 0 for a in agents}
    played = {a.name: 0 for a in agents}
    for i, a in enumerate(agents):
        for j, b in enumerate(agents):
            if i == j:
                continue
            rec = run_match(game, a, b, episodes, seed=derive_seed(seed, i, j))
            records.append(rec)
            wins[a.name] += rec.wins
            wins[b.name] += rec.losses
            played[a.name] += episodes
            played[b.name] += episodes
    rates = {name: wins[name] / played[name] for name in wins}
    ranking = sorted(rates, key=rates.get, reverse=True)
    return EvalReport(kind="tournament", game=game.name, records=records,
                      summary={"rates": rates, "ranking": ranking})


def multi_agent_ladder(game, net_cfg, train_cfg, agent_factory,
                       opponent_factory, n_agents, seed=0,
                       episodes_per_role=1, keep_systems=False,
                       progress=None):
    """Train `n_agents` independent systems (fresh tuple draws and seeds),
    play each in both roles against the opponent and pool the results.

    Win rate = won runs / (2 * n_agents * episodes_per_role); the reported
    deviation is across agents.
    """
    per_agent = []
    records = []
    systems = []
    for i in range(n_agents):
        cfg_i = replace(train_cfg, seed=derive_seed(seed, 0xA9E27, i))
        system, _ = train_system(game, net_cfg, cfg_i)
        agent = agent_factory(system)
        as_first = run_match(game, agent, opponent_factory(), episodes_per_role,
                             seed=derive_seed(seed, i, 0))
        as_second = run_match(game, opponent_factory(), agent, episodes_per_role,
                              seed=derive_seed(seed, i, 1))
        records.extend((as_first, as_second))
        agent_wins = as_first.wins + as_second.losses
        agent_losses = as_first.losses + as_second.wins
        runs = 2 * episodes_per_role
        per_agent.append(agent_wins / runs)
        if keep_systems:
            systems.append(system)
        if progress:
            progress(i + 1, n_agents, per_agent[-1])
        del agent
    win_rate = statistics.fmean(per_agent) if per_agent else 0.0
    spread = statistics.stdev(per_agent) if len(per_agent) > 1 else 0.0
    report = EvalReport(
        kind="ladder", game=game.name, records=records,
        summary={
            "win_rate": win_rate,
            "stddev": spread,
            "per_agent": per_agent,
            "runs": 2 * n_agents * episodes_per_role,
        },
    )
    if keep_systems:
        report.summary["systems"] = systems
    return report


def cube_solved_rate(game, agent, twists, n_cubes, step_budget=20, seed=0):
    """Fraction of `n_cubes` scrambles (each `twists` deep) the agent moves
    into the solved state within `step_budget` twists."""
    from .rng import SplitMix64

    rng = SplitMix64(derive_seed(seed, 0xC0BE, twists))
    solved = 0
    steps_when_solved = []
    for _ in range(n_cubes):
        state = game.scramble(twists, rng)
        agent.reset()
        steps = 0
        while steps < step_budget and not game.is_over(state):
            state = game.advance(state, agent.propose(state))
            steps += 1
        if game.is_over(state):
            solved += 1
            steps_when_solved.append(steps)
    return {
        "twists": twists,
        "cubes": n_cubes,
        "solved": solved,
        "rate": solved / n_cubes if n_cubes else 0.0,
        "mean_steps": statistics.fmean(steps_when_solved) if steps_when_solved else 0.0,
        "budget": step_budget,
        "seed": seed,
    }


def timing_probe(game, agent_factory, episodes, seed=0, scramble_twists=8,
                 step_budget=20):
    """Mean and deviation of per-move wall-clock milliseconds.

    Two-player games: self-play between two fresh instances, timing every
    move.  Cube: solve attempts on scrambles of the given depth.
    """
    samples = []
    if episodes <= 0:
        return {"mean_ms": 0.0, "std_ms": 0.0, "moves": 0, "samples": samples}
    if game.n_players == 1:
        from .rng import SplitMix64

        rng = SplitMix64(derive_seed(seed, 0x71E))
        agent = agent_factory()
        for _ in range(episodes):
            state = game.scramble(scramble_twists, rng)
            agent.reset()
            steps = 0
            while steps < step_budget and not game.is_over(state):
                t0 = time.perf_counter()
                a = agent.propose(state)
                samples.append((time.perf_counter() - t0) * 1000.0)
                state = game.advance(state, a)
                steps += 1
    else:
        rec = run_match(game, agent_factory(), agent_factory(), episodes,
                        seed=seed, collect_times=True)
        samples = rec.move_ms["first"] + rec.move_ms["second"]
    mean = statistics.fmean(samples) if samples else 0.0
    std = statistics.stdev(samples) if len(samples) > 1 else 0.0
    return {"mean_ms": mean, "std_ms": std, "moves": len(samples),
            "samples": samples}
