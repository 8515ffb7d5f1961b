"""Readers and writers for automata, games and UP-word literals."""

from ..words import format_up_word, parse_up_word
from .automaton_text import dump_automaton, parse_acceptance, parse_automaton, read_automaton
from .game_text import dump_game, parse_game, read_game
from .hoa import parse_hoa, read_hoa
from .pgsolver import dump_pgsolver, parse_pgsolver, read_pgsolver

__all__ = [
    "dump_automaton",
    "dump_game",
    "dump_pgsolver",
    "format_up_word",
    "parse_acceptance",
    "parse_automaton",
    "parse_game",
    "parse_hoa",
    "parse_pgsolver",
    "parse_up_word",
    "read_hoa",
    "read_automaton",
    "read_game",
    "read_pgsolver",
]
