"""Numeric constants shipped in ``data/constants.json``.

All rationals are stored as ``"p/q"`` strings and loaded as :class:`Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

_RAW = json.loads(resources.files("webskein").joinpath("data", "constants.json").read_text(encoding="utf-8"))

MIN_BUBBLE_ACTION = Fraction(_RAW["bubble_action_min"])

DODECAHEDRON_RANK_A_KAPPA: int = _RAW["dodecahedron"]["rank_a_kappa"]
DODECAHEDRON_LOWER_BOUND: int = _RAW["dodecahedron"]["lower_bound"]
DODECAHEDRON_UPPER_BOUND: int = _RAW["dodecahedron"]["upper_bound"]
DODECAHEDRON_MORSE_BOTT_BOUND: int = _RAW["dodecahedron"]["morse_bott_bound"]
DODECAHEDRON_TAIT_COUNT: int = _RAW["dodecahedron"]["tait_count"]
DODECAHEDRON_REP_VARIETY: dict[str, int] = dict(_RAW["dodecahedron"]["representation_variety"])

MOD2_BETTI_TOTAL: dict[str, int] = dict(_RAW["mod2_betti_total"])

MIN_ACTION_TABLE: dict[int, tuple[Fraction, str, str, Fraction]] = {
    int(n): (Fraction(row["kappa"]), row["holonomy"], row["automorphisms"], Fraction(row["formal_dim"]))
    for n, row in _RAW["min_action"].items()
}
