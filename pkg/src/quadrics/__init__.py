"""Combinatorics of the variety of complete quadrics: Borel orbits indexed by
degenerate involutions, their Bruhat order, torus fixed points and
Bialynicki-Birula cells."""

from .degeninv import (
    MuInvolution, compositions, enumerate_barred, enumerate_degenerate_involutions,
    enumerate_mu_involutions, mu_length,
)
from .io import parse_degenerate_involution, render
from .posets import Poset

__version__ = "0.1.0"

__all__ = [
    "MuInvolution", "Poset", "compositions", "enumerate_barred",
    "enumerate_degenerate_involutions", "enumerate_mu_involutions", "mu_length",
    "parse_degenerate_involution", "render",
]
