"""Dimension and rank bookkeeping for exact triangles.

Variables are nonnegative integers named ``|X|`` (dimension of the space at
web ``X``) and ``rank(f)``.  An exact triangle A -f-> B -g-> C -h-> A gives
|A| = rank f + rank h, |B| = rank f + rank g, |C| = rank g + rank h, so the
ranks are determined by the three dimensions.  Solving is exact: rational
row reduction over the equalities followed by integer interval propagation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .constants import (
    DODECAHEDRON_LOWER_BOUND,
    DODECAHEDRON_REP_VARIETY,
    MOD2_BETTI_TOTAL,
)

__all__ = [
    "InfeasibleError",
    "ConstraintSystem",
    "Triangle",
    "Solution",
    "LinearIdentity",
    "dim",
    "rank",
    "add_exact_triangle",
    "solve_triangle",
    "derive_two_rank",
    "euler_4periodic",
    "euler_from_ranks",
    "euler_from_single_ranks",
    "dodecahedron_bound",
    "morse_bott_count",
    "octahedron_system",
    "euler_linear_form",
    "euler_consistency",
    "dodecahedron_workflow",
]


class InfeasibleError(ValueError):
    pass


def dim(space: str) -> str:
    return f"|{space}|"


def rank(map_name: str) -> str:
    return f"rank({map_name})"


@dataclass(frozen=True)
class Triangle:
    name: str
    spaces: tuple[str, str, str]
    maps: tuple[str, str, str]


@dataclass
class Solution:
    feasible: bool
    values: dict[str, int]
    intervals: dict[str, tuple[int, int | None]]
    reasons: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class LinearIdentity:
    """sum(lhs) = sum(rhs), with integer coefficients on named variables."""

    lhs: tuple[tuple[str, int], ...]
    rhs: tuple[tuple[str, int], ...]

    def evaluate(self, values: Mapping[str, int]) -> tuple[int, int]:
        side = lambda terms: sum(c * values[v] for v, c in terms)  # noqa: E731
        return side(self.lhs), side(self.rhs)

    def holds(self, values: Mapping[str, int]) -> bool:
        l, r = self.evaluate(values)
        return l == r

    @staticmethod
    def _fmt(terms) -> str:
        out = ""
        for i, (v, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            if i == 0:
                out += ("-" if c < 0 else "") + mag + v
            else:
                out += f" {sign} {mag}{v}"
        return out or "0"

    def __str__(self) -> str:
        return f"{self._fmt(self.lhs)} = {self._fmt(self.rhs)}"


class ConstraintSystem:
    """Nonnegative integer variables with linear equalities and inequalities."""

    def __init__(self):
        self.variables: dict[str, tuple[int, int | None]] = {}
        self.equalities: list[tuple[dict[str, int], int]] = []
        self.inequalities: list[tuple[dict[str, int], int]] = []  # sum <= rhs
        self.maps: dict[str, tuple[str, str]] = {}
        self.triangles: dict[str, Triangle] = {}

    def add_variable(self, name: str) -> str:
        self.variables.setdefault(name, (0, None))
        return name

    def add_equality(self, coeffs: Mapping[str, int], rhs: int = 0) -> None:
        for v in coeffs:
            self.add_variable(v)
        self.equalities.append((dict(coeffs), rhs))

    def add_inequality(self, coeffs: Mapping[str, int], rhs: int = 0) -> None:
        """sum(coeffs[v] * v) <= rhs"""
        for v in coeffs:
            self.add_variable(v)
        self.inequalities.append((dict(coeffs), rhs))

    def fix(self, name: str, value: int) -> None:
        self.add_equality({name: 1}, value)

    def add_map(self, name: str, src: str, dst: str) -> None:
        old = self.maps.get(name)
        if old is not None:
            if old != (src, dst):
                raise ValueError(f"map {name} already registered as {old[0]} -> {old[1]}")
            return
        self.maps[name] = (src, dst)
        r = self.add_variable(rank(name))
        self.add_variable(dim(src))
        self.add_variable(dim(dst))
        self.add_inequality({r: 1, dim(src): -1})
        self.add_inequality({r: 1, dim(dst): -1})

    # -- solving -----------------------------------------------------------

    def _reduce(self, names: list[str]) -> tuple[list[list[Fraction]], bool]:
        col = {v: i for i, v in enumerate(names)}
        rows = []
        for coeffs, rhs in self.equalities:
            row = [Fraction(0)] * (len(names) + 1)
            for v, c in coeffs.items():
                row[col[v]] += c
            row[-1] = Fraction(rhs)
            rows.append(row)
        pivot_row = 0
        for j in range(len(names)):
            p = next((i for i in range(pivot_row, len(rows)) if rows[i][j] != 0), None)
            if p is None:
                continue
            rows[pivot_row], rows[p] = rows[p], rows[pivot_row]
            pv = rows[pivot_row][j]
            rows[pivot_row] = [x / pv for x in rows[pivot_row]]
            for i in range(len(rows)):
                if i != pivot_row and rows[i][j] != 0:
                    f = rows[i][j]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[pivot_row])]
            pivot_row += 1
        consistent = all(any(x != 0 for x in r[:-1]) or r[-1] == 0 for r in rows)
        return rows, consistent

    def solve(self, max_rounds: int = 500) -> Solution:
        names = sorted(self.variables)
        reasons: list[str] = []
        rows, consistent = self._reduce(names)
        if not consistent:
            return Solution(False, {}, {}, ["equalities are inconsistent"])
        lo = {v: self.variables[v][0] for v in names}
        hi = {v: self.variables[v][1] for v in names}
        for r in rows:
            nz = [j for j, x in enumerate(r[:-1]) if x != 0]
            if len(nz) == 1:
                v = names[nz[0]]
                val = r[-1] / r[nz[0]]
                if val.denominator != 1:
                    return Solution(False, {}, {}, [f"{v} is forced to the non-integer value {val}"])
                if val < 0:
                    return Solution(False, {}, {}, [f"{v} is forced to the negative value {val}"])
                lo[v] = max(lo[v], int(val))
                hi[v] = int(val) if hi[v] is None else min(hi[v], int(val))

        # equalities enter propagation as two opposite inequalities
        cons = list(self.inequalities)
        for coeffs, rhs in self.equalities:
            cons.append((coeffs, rhs))
            cons.append(({v: -c for v, c in coeffs.items()}, -rhs))

        def term_min(v: str, c: int):
            if c > 0:
                return c * lo[v]
            return None if hi[v] is None else c * hi[v]

        for _ in range(max_rounds):
            changed = False
            for coeffs, rhs in cons:
                mins = {v: term_min(v, c) for v, c in coeffs.items()}
                unbounded = [v for v, m in mins.items() if m is None]
                if len(unbounded) > 1:
                    continue
                total = sum(m for m in mins.values() if m is not None)
                for v, c in coeffs.items():
                    if c == 0:
                        continue
                    if unbounded and unbounded[0] != v:
                        continue
                    slack = rhs - (total - (mins[v] or 0))
                    if c > 0:
                        new_hi = math.floor(Fraction(slack, c))
                        if hi[v] is None or new_hi < hi[v]:
                            hi[v] = new_hi
                            changed = True
                    else:
                        new_lo = math.ceil(Fraction(slack, c))
                        if new_lo > lo[v]:
                            lo[v] = new_lo
                            changed = True
                    if hi[v] is not None and lo[v] > hi[v]:
                        reasons.append(f"{v} has empty range [{lo[v]}, {hi[v]}]")
                        return Solution(False, {}, {}, reasons)
            if not changed:
                break
        intervals = {v: (lo[v], hi[v]) for v in names}
        values = {v: lo[v] for v in names if hi[v] is not None and lo[v] == hi[v]}
        return Solution(True, values, intervals, reasons)


def add_exact_triangle(system: ConstraintSystem, spaces: Sequence[str], maps: Sequence[str],
                       name: str | None = None) -> ConstraintSystem:
    """Register A -f-> B -g-> C -h-> A and its rank-nullity equations."""
    A, B, C = spaces
    f, g, h = maps
    system.add_map(f, A, B)
    system.add_map(g, B, C)
    system.add_map(h, C, A)
    system.add_equality({dim(A): 1, rank(f): -1, rank(h): -1})
    system.add_equality({dim(B): 1, rank(g): -1, rank(f): -1})
    system.add_equality({dim(C): 1, rank(h): -1, rank(g): -1})
    name = name or f"({f},{g},{h})"
    system.triangles[name] = Triangle(name, (A, B, C), (f, g, h))
    return system


def solve_triangle(dims: Sequence[int]) -> tuple[int, int, int]:
    """Ranks (f, g, h) of an exact triangle with dimensions (|A|, |B|, |C|)."""
    a, b, c = dims
    if min(dims) < 0:
        raise InfeasibleError(f"dimensions must be nonnegative, got {tuple(dims)}")
    if (a + b + c) % 2:
        raise InfeasibleError(f"|A| - |B| + |C| = {a - b + c} is odd")
    rf, rg, rh = (a + b - c) // 2, (b + c - a) // 2, (c + a - b) // 2
    if min(rf, rg, rh) < 0:
        raise InfeasibleError(f"ranks ({rf}, {rg}, {rh}) would be negative")
    return rf, rg, rh


def _find_triangle(system: ConstraintSystem, triangle: str | Triangle) -> Triangle:
    if isinstance(triangle, Triangle):
        return triangle
    if triangle in system.triangles:
        return system.triangles[triangle]
    for tri in system.triangles.values():
        if ",".join(tri.maps) == triangle.strip("()").replace(" ", ""):
            return tri
    raise KeyError(f"unknown triangle {triangle!r}")


def derive_two_rank(system: ConstraintSystem, triangle: str | Triangle, target: str) -> LinearIdentity:
    """2 rank(f) = |source| - |third| + |target| for a map f of the triangle."""
    tri = _find_triangle(system, triangle)
    if target not in tri.maps:
        raise KeyError(f"map {target!r} is not in triangle {tri.name}")
    k = tri.maps.index(target)
    src, dst, third = tri.spaces[k], tri.spaces[(k + 1) % 3], tri.spaces[(k + 2) % 3]
    return LinearIdentity(((rank(target), 2),), ((dim(src), 1), (dim(third), -1), (dim(dst), 1)))


def euler_4periodic(k0: int, k1: int, l0: int, l1: int) -> int:
    return k0 - k1 + l0 - l1


def euler_from_ranks(rank_a_kappa: int, rank_lambda_b: int) -> int:
    if rank_a_kappa < 0 or rank_lambda_b < 0:
        raise ValueError("ranks must be nonnegative")
    return 2 * (rank_a_kappa - rank_lambda_b)


def euler_from_single_ranks(rank_a: int, rank_b: int) -> int:
    if rank_a < 0 or rank_b < 0:
        raise ValueError("ranks must be nonnegative")
    return 2 * (rank_a - rank_b)


def dodecahedron_bound(tau_k0: int, tau_k1: int, tau_l1: int, rank_a_kappa: int) -> int:
    """Upper bound on |L0| from |K0| - |K1| + |L0| - |L1| <= 2 rank(a.kappa)."""
    bound = 2 * rank_a_kappa + tau_k1 + tau_l1 - tau_k0
    if bound < 0:
        raise InfeasibleError(f"upper bound {bound} on a dimension is negative")
    return bound


def morse_bott_count(parts: Iterable[str]) -> int:
    """Total mod-2 Betti number of a union of critical manifolds."""
    total = 0
    for p in parts:
        key = p.upper()
        if key not in MOD2_BETTI_TOTAL:
            raise ValueError(f"unknown critical manifold {p!r}; expected one of {sorted(MOD2_BETTI_TOTAL)}")
        total += MOD2_BETTI_TOTAL[key]
    return total


# ---------------------------------------------------------------------------
# the octahedral diagram at the level of dimensions
# ---------------------------------------------------------------------------

def octahedron_system(rels) -> ConstraintSystem:
    """Constraint system with one exact triangle per triangle declared in ``rels``."""
    system = ConstraintSystem()
    for f, g, h in rels.triangles:
        (A, B), (_, C) = rels.generators[f], rels.generators[g]
        add_exact_triangle(system, (A, B, C), (f, g, h))
    return system


def _collect(identity_terms, sign: int, out: dict[str, int]) -> None:
    for v, c in identity_terms:
        out[v] = out.get(v, 0) + sign * c


def euler_linear_form() -> dict[str, int]:
    return {dim("K0"): 1, dim("K1"): -1, dim("L0"): 1, dim("L1"): -1}


def euler_consistency(rels) -> bool:
    """Check 2 rank(a) - 2 rank(b) equals |K0| - |K1| + |L0| - |L1| as linear forms.

    Uses the triangles containing ``a`` and ``b`` declared in ``rels``; False if
    either is missing.
    """
    system = octahedron_system(rels)
    tri_a = next((t for t in system.triangles.values() if "a" in t.maps), None)
    tri_b = next((t for t in system.triangles.values() if "b" in t.maps), None)
    if tri_a is None or tri_b is None:
        return False
    ia, ib = derive_two_rank(system, tri_a, "a"), derive_two_rank(system, tri_b, "b")
    diff: dict[str, int] = {}
    _collect(ia.rhs, 1, diff)
    _collect(ib.rhs, -1, diff)
    diff = {v: c for v, c in diff.items() if c}
    return diff == euler_linear_form()


# ---------------------------------------------------------------------------
# dodecahedron workflow
# ---------------------------------------------------------------------------

def dodecahedron_workflow(rank_a_kappa: int, *, web=None, edge_id: str | None = None,
                          state_cap: int | None = None) -> dict:
    """Count the site webs of the dodecahedron and derive the dimension bounds.

    The three smaller webs K0, K1, L1 are assumed simple, so their dimensions
    are taken to be their Tait counts.  That assumption is flagged in the
    result, never checked.
    """
    from .corpus import load_corpus
    from .tait import DEFAULT_STATE_CAP, tutte_terms
    from .web import id_key

    web = web if web is not None else load_corpus("dodecahedron")
    edge_id = edge_id or min((e.id for e in web.edges), key=id_key)
    taus = tutte_terms(web, edge_id, state_cap=state_cap or DEFAULT_STATE_CAP)
    combo = taus["K1"] + taus["L1"] - taus["K0"]
    upper = dodecahedron_bound(taus["K0"], taus["K1"], taus["L1"], rank_a_kappa)
    morse = morse_bott_count(
        [name for name, count in sorted(DODECAHEDRON_REP_VARIETY.items()) for _ in range(count)]
    )
    return {
        "edge": edge_id,
        "tau": taus,
        "tau_K1_plus_L1_minus_K0": combo,
        "tutte_residual": euler_4periodic(taus["K0"], taus["K1"], taus["L0"], taus["L1"]),
        "rank_a_kappa": rank_a_kappa,
        "euler_bound": euler_from_ranks(rank_a_kappa, 0),
        "upper_bound": upper,
        "lower_bound": DODECAHEDRON_LOWER_BOUND,
        "morse_bott_bound": morse,
        "tait_count": taus["L0"],
        "assumed_simple": True,
    }
