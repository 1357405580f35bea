"""Tournaments, exact path-length spectra, and checkers for path-extension
and panconnectedness statements about regular and near-regular tournaments."""

from .core import (
    MAX_ORDER,
    DegreeSummary,
    LabeledTournament,
    Tournament,
    build_tournament,
    check_degree_facts,
    converse,
    degree_summary,
    has_arc,
    induced_minus,
)
from .spectrum import PathSpectrum, brute_force_spectrum, path_spectrum, witness_path
from .trn import parse, serialize

__all__ = [
    "MAX_ORDER",
    "DegreeSummary",
    "LabeledTournament",
    "PathSpectrum",
    "Tournament",
    "brute_force_spectrum",
    "build_tournament",
    "check_degree_facts",
    "converse",
    "degree_summary",
    "has_arc",
    "induced_minus",
    "parse",
    "path_spectrum",
    "serialize",
    "witness_path",
]
