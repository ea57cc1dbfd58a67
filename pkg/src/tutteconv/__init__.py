"""Exact matroid polynomials and convolution identities."""

from .matroid import (
    FlatLattice,
    Matroid,
    MatroidError,
    make_explicit,
    make_graphic,
    make_linear,
    make_projective,
    make_uniform,
    make_vector_space,
    mask,
    members,
)
from .poly import L, X, XI, Y, Z, MultiPoly, Variable, parse, render

__all__ = [
    "FlatLattice",
    "Matroid",
    "MatroidError",
    "MultiPoly",
    "Variable",
    "make_explicit",
    "make_graphic",
    "make_linear",
    "make_projective",
    "make_uniform",
    "make_vector_space",
    "mask",
    "members",
    "parse",
    "render",
    "L",
    "X",
    "XI",
    "Y",
    "Z",
]
