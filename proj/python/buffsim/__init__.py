"""Buffered simulation games between Büchi automata."""

from ._buffsim import (
    AlphabetMismatch,
    BudgetExceeded,
    DelayedPruningRefused,
    Nba,
    ParseError,
    TilingSystem,
    bounded_simulates,
    decide,
    fixture,
    fixture_names,
    gen_exptime,
    gen_pspace,
    has_tiling,
    language_inclusion,
    load_nba,
    minimize,
    parse_nba,
    parse_tiling_system,
    plain_simulates,
    run_cli,
    tiling_game_winner,
    trim,
)

__all__ = [
    "AlphabetMismatch",
    "BudgetExceeded",
    "DelayedPruningRefused",
    "Nba",
    "ParseError",
    "TilingSystem",
    "bounded_simulates",
    "decide",
    "fixture",
    "fixture_names",
    "gen_exptime",
    "gen_pspace",
    "has_tiling",
    "language_inclusion",
    "load_nba",
    "minimize",
    "parse_nba",
    "parse_tiling_system",
    "plain_simulates",
    "run_cli",
    "tiling_game_winner",
    "trim",
]
