"""Line protocol for external engines, plus a client agent and a server.

One message per line over the child's standard streams:

    -> newgame <game-name>            <- ok
    -> position <board-text> <mover>  <- ok
    -> genmove                        <- move <action-id> | pass
    -> quit                           (engine exits)

Board text is the whitespace-free token produced by ``Game.to_text``;
``mover`` is the integer player index.  Anything unexpected - a crash, a
timeout, an illegal or unparseable move - raises EngineError so a broken
engine can never be silently scored.  All traffic can be logged verbatim.

Engines with native protocols (e.g. Edax's console syntax) are wired in by
a thin bridge process that translates to this protocol; the server half
below doubles as the reference implementation for writing one.
"""

import queue
import shlex
import subprocess
import threading

from .agents import Agent
from .errors import EngineError, IllegalMoveError

DEFAULT_TIMEOUT = 30.0


class ExternalEngineAgent(Agent):
    """Plays moves produced by an external engine process."""

    deterministic = False

    def __init__(self, game, command, timeout=DEFAULT_TIMEOUT, name=None,
                 log_path=None):
        self.game = game
        self.command = shlex.split(command) if isinstance(command, str) else list(command)
        self.timeout = timeout
        self.name = name or f"engine[{self.command[0]}]"
        self._log_fh = open(log_path, "a") if log_path else None
        self._proc = None
        self._lines = None

    # -- process plumbing ------------------------------------------------
    def _log(self, direction, line):
        if self._log_fh is not None:
            self._log_fh.write(f"{direction} {line}\n")
            self._log_fh.flush()

    def _ensure_started(self):
        if self._proc is not None and self._proc.poll() is None:
            return
        try:
            self._proc = subprocess.Popen(
                self.command, stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL, text=True, bufsize=1,
            )
        except OSError as exc:
            raise EngineError(f"cannot start engine {self.command}: {exc}")
        self._lines = queue.Queue()

        def pump(proc, q):
            for line in proc.stdout:
                q.put(line.rstrip("\n"))
            q.put(None)  # EOF marker

        threading.Thread(target=pump, args=(self._proc, self._lines),
                         daemon=True).start()
        self._send(f"newgame {self.game.name}")
        self._expect_ok("newgame")

    def _send(self, line):
        self._log("->", line)
        try:
            self._proc.stdin.write(line + "\n")
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise EngineError(f"engine pipe broke: {exc}")

    def _recv(self):
        try:
            line = self._lines.get(timeout=self.timeout)
        except queue.Empty:
            raise EngineError(f"engine reply timed out after {self.timeout}s")
        if line is None:
            raise EngineError("engine closed its output stream")
        self._log("<-", line)
        return line.strip()

    def _expect_ok(self, what):
        reply = self._recv()
        if reply != "ok":
            raise EngineError(f"engine answered {reply!r} to {what}")

    # -- agent surface -----------------------------------------------------
    def reset(self):
        if self._proc is not None and self._proc.poll() is None:
            self._send(f"newgame {self.game.name}")
            self._expect_ok("newgame")

    def propose(self, state):
        self._ensure_started()
        board = self.game.to_text(state)
        mover = self.game.current_player(state)
        self._send(f"position {board} {mover}")
        self._expect_ok("position")
        self._send("genmove")
        reply = self._recv()
        if reply == "pass":
            if self.game.pass_action is None:
                raise EngineError(f"engine passed but {self.game.name} has no pass move")
            action = self.game.pass_action
        elif reply.startswith("move "):
            try:
                action = int(reply.split(None, 1)[1])
            except ValueError:
                raise EngineError(f"unparseable move reply {reply!r}")
        else:
            raise EngineError(f"unexpected genmove reply {reply!r}")
        if action not in self.game.legal_actions(state):
            raise EngineError(f"engine proposed illegal action {action}")
        return action

    def close(self):
        if self._proc is not None and self._proc.poll() is None:
            try:
                self._send("quit")
                self._proc.wait(timeout=2.0)
            except (EngineError, subprocess.TimeoutExpired):
                self._proc.kill()
        if self._log_fh is not None:
            self._log_fh.close()
            self._log_fh = None

    def __del__(self):
        try:
            self.close()
        except Exception:
            pass


def serve_engine(game, agent, infile, outfile):
    """Serve an agent over the line protocol (reference server).

    Drives any of our agents from another process; also used as the stub
    opponent in the protocol tests.
    """
    state = None

    def reply(text):
        outfile.write(text + "\n")
        outfile.flush()

    for raw in infile:
        line = raw.strip()
        if not line:
            continue
        cmd, _, rest = line.partition(" ")
        if cmd == "quit":
            break
        if cmd == "newgame":
            if rest.strip() != game.name:
                reply(f"error serving {game.name}, not {rest.strip()}")
                continue
            agent.reset()
            state = None
            reply("ok")
        elif cmd == "position":
            try:
                board, mover = rest.rsplit(None, 1)
                state = game.from_text(board, mover=int(mover))
                reply("ok")
            except Exception as exc:
                state = None
                reply(f"error bad position: {exc}")
        elif cmd == "genmove":
            if state is None:
                reply("error no position set")
                continue
            try:
                action = agent.propose(state)
            except IllegalMoveError as exc:
                reply(f"error {exc}")
                continue
            if game.pass_action is not None and action == game.pass_action:
                reply("pass")
            else:
                reply(f"move {action}")
        else:
            reply(f"error unknown command {cmd!r}")
