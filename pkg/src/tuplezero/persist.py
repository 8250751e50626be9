"""Agent files: binary weight tables with a JSON header.

Layout (all integers little-endian; see docs/agent-file-format.md for a
hex walkthrough):

    0   4  magic "TZAG"
    4   4  u32 format version (currently 1)
    8   4  u32 header length H
    12  H  header JSON (utf-8)
    ..     theta        float64[n_weights]
    ..     tcl_n        float64[n_weights]   } only when the header's
    ..     tcl_a        float64[n_weights]   } tcl_arrays flag is set
    ..     touched      uint8[n_weights]     }
    ..  4  u32 crc32 of every preceding byte

Weights round-trip bit-exactly; a loaded agent behaves identically to the
saved one.
"""

import json
import zlib

import numpy as np

from .errors import AgentFileError
from .game import get_game
from .ntuple import NTupleSystem

MAGIC = b"TZAG"
VERSION = 1


def save_agent(system, path, train_config=None, episodes_trained=None,
               seed=None, include_tcl=True):
    header = {
        "format": "tuplezero-agent",
        "game": system.game.name,
        "transfer": system.transfer,
        "gamma": system.gamma,
        "reward_mode": system.reward_mode,
        "tuples": [list(d.cells) for d in system.defs],
        "n_weights": system.n_weights,
        "tcl_arrays": bool(include_tcl),
        "train_config": dict(train_config) if train_config else None,
        "episodes_trained": episodes_trained,
        "seed": seed,
    }
    blob = bytearray()
    blob += MAGIC
    blob += VERSION.to_bytes(4, "little")
    hdr = json.dumps(header, sort_keys=True).encode()
    blob += len(hdr).to_bytes(4, "little")
    blob += hdr
    blob += np.asarray(system.net.theta, dtype="<f8").tobytes()
    if include_tcl:
        blob += np.asarray(system.net.tcl_n, dtype="<f8").tobytes()
        blob += np.asarray(system.net.tcl_a, dtype="<f8").tobytes()
        blob += np.asarray(system.net.touched, dtype=np.uint8).tobytes()
    blob += (zlib.crc32(bytes(blob)) & 0xFFFFFFFF).to_bytes(4, "little")
    with open(path, "wb") as fh:
        fh.write(bytes(blob))
    return len(blob)


def _take(blob, offset, size, what):
    if offset + size > len(blob):
        raise AgentFileError(f"truncated agent file while reading {what}", offset=offset)
    return blob[offset:offset + size], offset + size


def load_agent(path, backend=None):
    """Load an agent file; returns (NTupleSystem, header dict)."""
    with open(path, "rb") as fh:
        blob = fh.read()
    magic, off = _take(blob, 0, 4, "magic")
    if magic != MAGIC:
        raise AgentFileError(f"bad magic {magic!r}, not an agent file", offset=0)
    raw, off = _take(blob, off, 4, "version")
    version = int.from_bytes(raw, "little")
    if version != VERSION:
        raise AgentFileError(
            f"agent file version {version} needs an upgrade: this build reads version {VERSION}")
    raw, off = _take(blob, off, 4, "header length")
    hdr_len = int.from_bytes(raw, "little")
    raw, off = _take(blob, off, hdr_len, "header")
    try:
        header = json.loads(raw.decode())
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise AgentFileError(f"unreadable header: {exc}", offset=12)
    crc_stored = int.from_bytes(blob[-4:], "little") if len(blob) >= 4 else None
    if zlib.crc32(blob[:-4]) & 0xFFFFFFFF != crc_stored:
        raise AgentFileError("checksum mismatch, file is corrupt",
                             offset=len(blob) - 4)
    n = int(header["n_weights"])
    game = get_game(header["game"], backend=backend)
    system = NTupleSystem(
        game, header["tuples"], transfer=header["transfer"],
        gamma=header["gamma"], reward_mode=header.get("reward_mode", "terminal"),
    )
    if system.n_weights != n:
        raise AgentFileError(
            f"header says {n} weights but the tuple set implies {system.n_weights}")
    raw, off = _take(blob, off, 8 * n, "weights")
    system.net.theta[:] = np.frombuffer(raw, dtype="<f8")
    if header.get("tcl_arrays"):
        raw, off = _take(blob, off, 8 * n, "tcl N")
        system.net.tcl_n[:] = np.frombuffer(raw, dtype="<f8")
        raw, off = _take(blob, off, 8 * n, "tcl A")
        system.net.tcl_a[:] = np.frombuffer(raw, dtype="<f8")
        raw, off = _take(blob, off, n, "touched flags")
        system.net.touched[:] = np.frombuffer(raw, dtype=np.uint8)
    if off + 4 != len(blob):
        raise AgentFileError("trailing bytes after payload", offset=off + 4)
    return system, header
