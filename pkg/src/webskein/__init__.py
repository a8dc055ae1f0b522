"""Webs, Tait colorings, skein sites, foam dimensions and exact-triangle bookkeeping."""

from .web import Edge, Picture, SkeinSite, StubLabel, Web, apply_picture, excise_edge_site, parse_web
from .tait import ResourceLimitError, tait_brute, tait_count, tutte_terms, verify_tutte
from .foam import Action, Foam, make_psi, make_psi2_minus, moduli_dim
from .cobmap import MapTerm, equal, normalize, parse_term
from .exactness import ConstraintSystem, InfeasibleError, solve_triangle

__version__ = "0.1.0"
