"""Vertex-query matching game lab: oracles, players, solver."""

from matchgame._core import (
    MatchgameError,
    greedy_matching,
    max_matching_size,
    normalize_query,
    run_game,
    solve,
    verify,
)

__all__ = [
    "MatchgameError",
    "greedy_matching",
    "max_matching_size",
    "normalize_query",
    "run_game",
    "solve",
    "verify",
]
