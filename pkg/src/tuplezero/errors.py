"""Exception types shared across the package."""


class TupleZeroError(Exception):
    """Base class for all package-specific errors."""


class IllegalMoveError(TupleZeroError, ValueError):
    """An action was applied to a state where it is not legal."""

    def __init__(self, action, reason=""):
        self.action = action
        msg = f"illegal action {action}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class GameContractError(TupleZeroError):
    """A game operation was called outside its contract
    (e.g. legal moves of a terminal state, score of a live state)."""


class EngineError(TupleZeroError):
    """An external engine process crashed, timed out or answered garbage."""


class AgentFileError(TupleZeroError):
    """Agent file is corrupt, truncated or has an unsupported version."""

    def __init__(self, msg, offset=None):
        if offset is not None:
            msg = f"{msg} (byte offset {offset})"
        self.offset = offset
        super().__init__(msg)


class ConfigError(TupleZeroError):
    """Run configuration is malformed or contains unknown keys."""
