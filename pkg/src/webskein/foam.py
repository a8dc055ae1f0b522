"""Closed foams in the 4-sphere, stored as invariant aggregates.

Only the Euler characteristic, the framed self-intersection number and the
number of tetrahedral points are kept; every dimension computation here uses
nothing else.  All arithmetic is exact (:class:`fractions.Fraction`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constants import MIN_ACTION_TABLE, MIN_BUBBLE_ACTION

__all__ = [
    "Foam",
    "Action",
    "MIN_BUBBLE_ACTION",
    "make_psi",
    "make_psi2_minus",
    "moduli_dim",
    "psi_closed_form",
    "min_action_table",
    "MinActionEntry",
]


@dataclass(frozen=True)
class Foam:
    tag: str
    euler_char: int
    self_int: Fraction
    tetra_points: int

    def __post_init__(self):
        object.__setattr__(self, "self_int", Fraction(self.self_int))
        if self.tetra_points < 0:
            raise ValueError("tetra_points must be nonnegative")


@dataclass(frozen=True)
class Action:
    kappa: Fraction

    def __post_init__(self):
        k = Fraction(self.kappa)
        if k < 0:
            raise ValueError("instanton action must be nonnegative")
        object.__setattr__(self, "kappa", k)


def make_psi(n: int) -> Foam:
    """Projective plane plus ``n`` disks: chi = 1 + n, self-intersection 2 - n/2,
    n(n-1)/2 tetrahedral points."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Foam(f"Psi{n}", 1 + n, Fraction(2) - Fraction(n, 2), n * (n - 1) // 2)


def make_psi2_minus() -> Foam:
    """The mirror of Psi2, with its own recorded invariants (not those of Psi2)."""
    return Foam("Psi2minus", 2, Fraction(-1), 1)


def moduli_dim(foam: Foam, action: Action | Fraction | int | str) -> Fraction:
    """Formal dimension 8*kappa + chi + (self-intersection)/2 - tetra/2 - 3.

    Valid for closed foams in the 4-sphere only.  The tetrahedral count enters
    with weight 1/2; that is the only weight for which the Psi_n aggregates
    reproduce 8*kappa - (1 - n/2)**2 for every n.  The value is returned
    as-is, even when negative or non-integral.
    """
    kappa = action.kappa if isinstance(action, Action) else Fraction(action)
    return 8 * kappa + foam.euler_char + foam.self_int / 2 - Fraction(foam.tetra_points, 2) - 3


def psi_closed_form(n: int, kappa: Fraction | int | str) -> Fraction:
    return 8 * Fraction(kappa) - (1 - Fraction(n, 2)) ** 2


@dataclass(frozen=True)
class MinActionEntry:
    action: Action
    holonomy: str
    automorphisms: str
    formal_dim: Fraction


def min_action_table(n: int) -> MinActionEntry:
    """Smallest-action non-empty moduli space on (S^4, Psi_n), n in 0..3."""
    if n not in MIN_ACTION_TABLE:
        raise ValueError(f"no smallest-action entry for n={n}; expected 0..3")
    kappa, hol, aut, dim = MIN_ACTION_TABLE[n]
    return MinActionEntry(Action(kappa), hol, aut, dim)
