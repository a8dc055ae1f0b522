"""Symbolic foam-cobordism maps over the two-element field.

A :class:`MapTerm` is either ZERO or a composite of atoms written in the usual
right-to-left order: ``a . b`` means "apply ``b``, then ``a``".  Atoms are named
generators between web labels, optionally decorated with connected sums of
standard closed foams.  :func:`normalize` removes or evaluates decorations and
kills two-step composites of the three-bar cobordisms; :func:`equal` closes
under user-declared axioms by bounded rewriting.
"""

from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Summand",
    "Locus",
    "FaceClass",
    "Decoration",
    "Atom",
    "MapTerm",
    "ZERO",
    "Step",
    "RelationSet",
    "TermError",
    "TermSyntaxError",
    "TypeMismatch",
    "RewriteBoundExceeded",
    "gen",
    "identity",
    "compose",
    "decorate",
    "normalize",
    "normalize_trace",
    "measure",
    "equal",
    "parse_term",
    "format_term",
    "parse_relations",
    "OCTAHEDRON_SIGNATURE",
    "octahedron_suite",
    "OctahedronReport",
]


class TermError(ValueError):
    pass


class TermSyntaxError(TermError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"position {pos}: {message}")
        self.pos = pos


class TypeMismatch(TermError):
    pass


class RewriteBoundExceeded(RuntimeError):
    """Equality search was truncated by the length or node bound without a join."""


class Summand(str, enum.Enum):
    PSI0 = "psi0"
    PSI1 = "psi1"
    PSI2 = "psi2"
    PSI3 = "psi3"
    PSI2_MINUS = "psi2m"
    DOUBLE_MOBIUS = "dmobius"


class Locus(str, enum.Enum):
    TETRA = "tetra"
    SEAM = "seam"
    FACE = "face"


class FaceClass(str, enum.Enum):
    R_FACE = "rface"
    DISK_FACE = "diskface"
    DPLUS = "dplus"
    DMINUS = "dminus"
    MOBIUS = "mobius"


_SUMMAND_ALIASES = {
    "psi2-": Summand.PSI2_MINUS, "psi2minus": Summand.PSI2_MINUS,
    "doublemobius": Summand.DOUBLE_MOBIUS, "double_mobius": Summand.DOUBLE_MOBIUS,
}

_FACE_ALIASES = {
    "r-face": FaceClass.R_FACE, "r_face": FaceClass.R_FACE,
    "disk-face": FaceClass.DISK_FACE, "disk_face": FaceClass.DISK_FACE,
    "d+": FaceClass.DPLUS, "d-": FaceClass.DMINUS,
}

# loci present on each summand, and which face classes a face point may carry
_LOCI = {
    Summand.PSI0: {Locus.FACE},
    Summand.PSI1: {Locus.SEAM, Locus.FACE},
    Summand.PSI2: {Locus.TETRA, Locus.SEAM, Locus.FACE},
    Summand.PSI3: {Locus.TETRA, Locus.SEAM, Locus.FACE},
    Summand.PSI2_MINUS: {Locus.TETRA, Locus.SEAM, Locus.FACE},
    Summand.DOUBLE_MOBIUS: {Locus.SEAM, Locus.FACE},
}
_FACES = {
    Summand.PSI0: {None, FaceClass.R_FACE},
    Summand.PSI1: {None, FaceClass.R_FACE, FaceClass.DISK_FACE},
    Summand.PSI2: {None, FaceClass.R_FACE, FaceClass.DISK_FACE},
    Summand.PSI3: {None, FaceClass.R_FACE, FaceClass.DISK_FACE},
    Summand.PSI2_MINUS: {FaceClass.R_FACE, FaceClass.DISK_FACE},
    Summand.DOUBLE_MOBIUS: {FaceClass.DPLUS, FaceClass.DMINUS, FaceClass.MOBIUS},
}


@dataclass(frozen=True, order=True)
class Decoration:
    summand: Summand
    locus: Locus
    face_class: FaceClass | None = None

    def __post_init__(self):
        s, l = Summand(self.summand), Locus(self.locus)
        fc = None if self.face_class is None else FaceClass(self.face_class)
        object.__setattr__(self, "summand", s)
        object.__setattr__(self, "locus", l)
        object.__setattr__(self, "face_class", fc)
        if l not in _LOCI[s]:
            raise TermError(f"{s.value} has no {l.value} points")
        if l is Locus.FACE:
            if fc not in _FACES[s]:
                allowed = sorted(x.value for x in _FACES[s] if x is not None)
                raise TermError(f"face sum with {s.value} needs face class in {allowed}, got {fc and fc.value}")
        elif fc is not None:
            raise TermError("face class only applies to face sums")

    def sort_key(self) -> tuple[str, str, str]:
        return (self.summand.value, self.locus.value, self.face_class.value if self.face_class else "")

    def __str__(self) -> str:
        args = [self.summand.value, self.locus.value]
        if self.face_class is not None:
            args.append(self.face_class.value)
        return f"sum({', '.join(args)})"


@dataclass(frozen=True)
class Atom:
    name: str
    src: str
    dst: str
    decorations: tuple[Decoration, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "decorations", tuple(sorted(self.decorations, key=Decoration.sort_key)))
        if self.name == "id" and self.src != self.dst:
            raise TypeMismatch(f"identity atom must have src == dst, got {self.src} -> {self.dst}")

    @property
    def is_identity(self) -> bool:
        return self.name == "id"


@dataclass(frozen=True)
class MapTerm:
    """ZERO when ``atoms`` is empty; otherwise a type-correct composite."""

    atoms: tuple[Atom, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        for left, right in zip(self.atoms, self.atoms[1:]):
            if right.dst != left.src:
                raise TypeMismatch(
                    f"cannot compose {left.name}: {left.src}->{left.dst} after "
                    f"{right.name}: {right.src}->{right.dst}"
                )

    @property
    def is_zero(self) -> bool:
        return not self.atoms

    @property
    def src(self) -> str | None:
        return self.atoms[-1].src if self.atoms else None

    @property
    def dst(self) -> str | None:
        return self.atoms[0].dst if self.atoms else None

    def __str__(self) -> str:
        return format_term(self)


ZERO = MapTerm(())


def gen(name: str, src: str, dst: str) -> MapTerm:
    return MapTerm((Atom(name, src, dst),))


def identity(web: str) -> MapTerm:
    return MapTerm((Atom("id", web, web),))


def compose(*terms: MapTerm) -> MapTerm:
    """``compose(f, g, h)`` is f . g . h (h applied first)."""
    if any(t.is_zero for t in terms):
        return ZERO
    return MapTerm(tuple(a for t in terms for a in t.atoms))


def decorate(term: MapTerm, *decorations: Decoration) -> MapTerm:
    """Attach connected-sum decorations to the last-applied atom of ``term``.

    A connected sum changes the cobordism as a whole, so which atom carries it
    does not affect any rewrite.
    """
    if term.is_zero:
        return ZERO
    first = term.atoms[0]
    new = Atom(first.name, first.src, first.dst, first.decorations + tuple(decorations))
    return MapTerm((new,) + term.atoms[1:])


# ---------------------------------------------------------------------------
# normalization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    rule: str
    before: MapTerm
    after: MapTerm
    note: str = ""


def _decoration_rule(d: Decoration) -> tuple[str, str] | None:
    """(rule id, 'drop' | 'zero') for decorations with a known effect."""
    s, l, fc = d.summand, d.locus, d.face_class
    if l is Locus.TETRA:
        if s is Summand.PSI2:
            return "R1", "drop"
        if s is Summand.PSI3:
            return "R2", "zero"
    elif l is Locus.SEAM:
        if s is Summand.PSI2:
            return "R3", "drop"
        if s in (Summand.PSI1, Summand.PSI3):
            return "R3", "zero"
    else:
        if s is Summand.PSI0:
            return "R4", "drop"
        if s in (Summand.PSI1, Summand.PSI2, Summand.PSI3):
            return "R4", "zero"
        if s is Summand.PSI2_MINUS:
            return "R5", "drop" if fc is FaceClass.R_FACE else "zero"
        if s is Summand.DOUBLE_MOBIUS:
            return "R6", "zero" if fc is FaceClass.DMINUS else "drop"
    return None


_L_LABEL = re.compile(r"^L_?\{?(\d+)\}?$")
_SIGMA_NAMES = {"Sigma", "Σ", "sigma"}


def _l_index(label: str) -> int | None:
    m = _L_LABEL.match(label)
    return int(m.group(1)) % 3 if m else None


def _is_three_bar_step(a: Atom) -> bool:
    """Sigma(L_{i+1}, L_i) with indices read mod 3."""
    if a.name not in _SIGMA_NAMES:
        return False
    i, j = _l_index(a.src), _l_index(a.dst)
    return i is not None and j is not None and i == (j + 1) % 3


def measure(term: MapTerm) -> tuple[int, int]:
    """(decoration count, atom count); every rewrite step strictly lowers it."""
    return (sum(len(a.decorations) for a in term.atoms), len(term.atoms))


def _step_once(term: MapTerm) -> Step | None:
    if term.is_zero:
        return None
    atoms = term.atoms
    for i, a in enumerate(atoms):
        for k, d in enumerate(a.decorations):
            hit = _decoration_rule(d)
            if hit is None:
                continue
            rule, effect = hit
            if effect == "zero":
                return Step(rule, term, ZERO, f"{d} on {a.name} gives the zero map")
            rest = a.decorations[:k] + a.decorations[k + 1:]
            new = atoms[:i] + (Atom(a.name, a.src, a.dst, rest),) + atoms[i + 1:]
            return Step(rule, term, MapTerm(new), f"{d} on {a.name} leaves the map unchanged")
    for i in range(len(atoms) - 1):
        left, right = atoms[i], atoms[i + 1]
        if _is_three_bar_step(left) and _is_three_bar_step(right):
            note = (f"{left.name}({left.src},{left.dst}) . {right.name}({right.src},{right.dst}) "
                    f"= V({right.src},{left.dst}) #_(t,t3) Psi3, then R2")
            return Step("R7", term, ZERO, note)
    if len(atoms) > 1:
        kept = tuple(a for a in atoms if not (a.is_identity and not a.decorations))
        if not kept:
            kept = atoms[:1]
        if len(kept) < len(atoms):
            return Step("R8", term, MapTerm(kept), "identity atoms elided")
    return None


def normalize_trace(term: MapTerm) -> tuple[MapTerm, list[Step]]:
    steps = []
    while True:
        step = _step_once(term)
        if step is None:
            return term, steps
        steps.append(step)
        term = step.after


def normalize(term: MapTerm) -> MapTerm:
    """Rewrite with R1-R8 until no rule applies.

    R1-R6 evaluate connected-sum decorations (drop, or collapse to ZERO), R7
    sends two consecutive three-bar cobordisms Sigma(L_{i+1}, L_i) to ZERO, and
    R8 elides undecorated identities.
    """
    return normalize_trace(term)[0]


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<punct>[().,@=:])|(?P<name>[^\W\d][\w'{}+\-]*|\d[\w'{}+\-]*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = "punct" if m.group("punct") else "name"
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, generators: dict[str, tuple[str, str]]):
        self.toks = _tokenize(text)
        self.i = 0
        self.generators = generators
        self.length = len(text)

    def peek(self) -> str | None:
        return self.toks[self.i][1] if self.i < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][2] if self.i < len(self.toks) else self.length

    def take(self, expected: str | None = None) -> str:
        if self.i >= len(self.toks):
            raise TermSyntaxError(f"unexpected end of input{f', expected {expected!r}' if expected else ''}", self.length)
        kind, val, pos = self.toks[self.i]
        if expected is not None and val != expected:
            raise TermSyntaxError(f"expected {expected!r}, got {val!r}", pos)
        self.i += 1
        return val

    def name(self) -> str:
        if self.i >= len(self.toks) or self.toks[self.i][0] != "name":
            raise TermSyntaxError("expected a name", self.pos())
        return self.take()

    def composite(self) -> MapTerm:
        parts = [self.decorated()]
        while self.peek() == ".":
            self.take(".")
            parts.append(self.decorated())
        try:
            return compose(*parts)
        except TypeMismatch as exc:
            raise TypeMismatch(f"{exc} (near position {self.pos()})") from None

    def decorated(self) -> MapTerm:
        term = self.primary()
        while self.peek() == "@":
            self.take("@")
            term = decorate(term, self.decoration())
        return term

    def decoration(self) -> Decoration:
        pos = self.pos()
        if self.name() != "sum":
            raise TermSyntaxError("expected 'sum(...)' after '@'", pos)
        self.take("(")
        args = [self.name()]
        while self.peek() == ",":
            self.take(",")
            args.append(self.name())
        self.take(")")
        if len(args) not in (2, 3):
            raise TermSyntaxError("sum takes (summand, locus[, face class])", pos)
        try:
            s = _SUMMAND_ALIASES.get(args[0].lower()) or Summand(args[0].lower())
            l = Locus(args[1].lower())
            fc = None
            if len(args) == 3:
                fc = _FACE_ALIASES.get(args[2].lower()) or FaceClass(args[2].lower())
            return Decoration(s, l, fc)
        except ValueError as exc:
            raise TermSyntaxError(str(exc), pos) from None

    def primary(self) -> MapTerm:
        pos = self.pos()
        tok = self.peek()
        if tok == "(":
            self.take("(")
            t = self.composite()
            self.take(")")
            return t
        word = self.name()
        if word == "zero":
            return ZERO
        if word == "id" and self.peek() == "(":
            self.take("(")
            w = self.name()
            self.take(")")
            return identity(w)
        if word == "gen" and self.peek() == "(":
            self.take("(")
            n = self.name()
            self.take(",")
            s = self.name()
            self.take(",")
            d = self.name()
            self.take(")")
            declared = self.generators.get(n)
            if declared is not None and declared != (s, d):
                raise TypeMismatch(f"generator {n} declared as {declared[0]}->{declared[1]}, used as {s}->{d}")
            return gen(n, s, d)
        if word in self.generators:
            s, d = self.generators[word]
            return gen(word, s, d)
        raise TermSyntaxError(f"unknown generator {word!r}", pos)


def parse_term(text: str, generators: dict[str, tuple[str, str]] | None = None) -> MapTerm:
    """Parse ``zero``, ``id(W)``, ``gen(name, src, dst)``, declared bare names,
    ``t1 . t2`` (right-to-left) and ``t @ sum(summand, locus[, face])``."""
    p = _Parser(text, dict(generators or {}))
    term = p.composite()
    if p.peek() is not None:
        raise TermSyntaxError(f"unexpected {p.peek()!r}", p.pos())
    return term


def _format_atom(a: Atom, generators: dict[str, tuple[str, str]] | None) -> str:
    if a.is_identity:
        base = f"id({a.src})"
    elif generators is not None and generators.get(a.name) == (a.src, a.dst):
        base = a.name
    else:
        base = f"gen({a.name}, {a.src}, {a.dst})"
    for d in a.decorations:
        base += f" @ {d}"
    return base


def format_term(term: MapTerm, generators: dict[str, tuple[str, str]] | None = None) -> str:
    if term.is_zero:
        return "zero"
    parts = []
    for a in term.atoms:
        s = _format_atom(a, generators)
        parts.append(f"({s})" if a.decorations and len(term.atoms) > 1 else s)
    return " . ".join(parts)


# ---------------------------------------------------------------------------
# relations and bounded equality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Equation:
    label: str
    lhs: MapTerm
    rhs: MapTerm


@dataclass
class RelationSet:
    generators: dict[str, tuple[str, str]] = field(default_factory=dict)
    equations: list[Equation] = field(default_factory=list)
    triangles: list[tuple[str, str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def declare(self, name: str, src: str, dst: str) -> None:
        old = self.generators.get(name)
        if old is not None and old != (src, dst):
            raise TypeMismatch(f"generator {name} redeclared as {src}->{dst} (was {old[0]}->{old[1]})")
        self.generators[name] = (src, dst)

    def term(self, text: str) -> MapTerm:
        return parse_term(text, self.generators)

    def add_equation(self, lhs: MapTerm, rhs: MapTerm, label: str | None = None) -> None:
        if not lhs.is_zero and not rhs.is_zero and (lhs.src, lhs.dst) != (rhs.src, rhs.dst):
            raise TypeMismatch(f"equation sides have different types: {lhs} vs {rhs}")
        self.equations.append(Equation(label or f"eq{len(self.equations) + 1}", lhs, rhs))

    def add_triangle(self, f: str, g: str, h: str) -> None:
        """Declare an exact triangle A -f-> B -g-> C -h-> A."""
        for n in (f, g, h):
            if n not in self.generators:
                raise TermError(f"triangle uses undeclared generator {n!r}")
        (fa, fb), (ga, gb), (ha, hb) = (self.generators[n] for n in (f, g, h))
        if not (fb == ga and gb == ha and hb == fa):
            raise TypeMismatch(f"triangle ({f}, {g}, {h}) does not close up")
        self.triangles.append((f, g, h))

    def axioms(self) -> list[Equation]:
        """Declared equations plus 'consecutive composite = ZERO' for each triangle."""
        out = list(self.equations)
        for f, g, h in self.triangles:
            for second, first in ((g, f), (h, g), (f, h)):
                t = compose(gen(second, *self.generators[second]), gen(first, *self.generators[first]))
                out.append(Equation(f"exact({f},{g},{h}): {second}.{first}=0", t, ZERO))
        return out


def parse_relations(text: str) -> RelationSet:
    """Parse a relation file.

    Lines: ``gen <name> <src> <dst>``, ``triangle <f> <g> <h>``,
    ``eq [<label>:] <term> = <term>``, ``note <text>``; ``#`` comments.
    """
    rels = RelationSet()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == "gen":
                parts = rest.split()
                if len(parts) != 3:
                    raise TermError("expected 'gen <name> <src> <dst>'")
                rels.declare(*parts)
            elif head == "triangle":
                parts = rest.split()
                if len(parts) != 3:
                    raise TermError("expected 'triangle <f> <g> <h>'")
                rels.add_triangle(*parts)
            elif head == "eq":
                label = None
                m = re.match(r"^([\w'-]+)\s*:\s*(.*)$", rest)
                if m:
                    label, rest = m.group(1), m.group(2)
                if rest.count("=") != 1:
                    raise TermError("expected 'eq <term> = <term>'")
                lhs, rhs = rest.split("=")
                rels.add_equation(rels.term(lhs), rels.term(rhs), label)
            elif head == "note":
                rels.notes.append(rest)
            else:
                raise TermError(f"unknown directive {head!r}")
        except TermError as exc:
            raise TermError(f"line {lineno}: {exc}") from None
    return rels


def _rules(rels: RelationSet | None) -> list[tuple[tuple[Atom, ...], MapTerm]]:
    """Both orientations of every axiom, as (pattern word, replacement)."""
    out = []
    if rels is None:
        return out
    for eq in rels.axioms():
        lhs, rhs = normalize(eq.lhs), normalize(eq.rhs)
        if lhs == rhs:
            continue
        if not lhs.is_zero:
            out.append((lhs.atoms, rhs))
        if not rhs.is_zero:
            out.append((rhs.atoms, lhs))
    return out


def _neighbors(term: MapTerm, rules) -> Iterable[MapTerm]:
    atoms = term.atoms
    for pattern, repl in rules:
        k = len(pattern)
        for i in range(len(atoms) - k + 1):
            if atoms[i:i + k] == pattern:
                if repl.is_zero:
                    yield ZERO
                else:
                    yield normalize(MapTerm(atoms[:i] + repl.atoms + atoms[i + k:]))


def equal(t1: MapTerm, t2: MapTerm, rels: RelationSet | None = None, *,
          max_length: int = 6, max_nodes: int = 100_000) -> bool:
    """Decide t1 = t2 modulo R1-R8 and the axioms of ``rels``, by bounded search.

    Returns True when the two normal forms are joined by axiom rewrites through
    terms of at most ``max_length`` atoms, and False when the search space was
    exhausted without a join.  If the bound cut the search short, raises
    :class:`RewriteBoundExceeded` instead of answering False.
    """
    n1, n2 = normalize(t1), normalize(t2)
    if not n1.is_zero and not n2.is_zero and (n1.src, n1.dst) != (n2.src, n2.dst):
        raise TypeMismatch(f"terms have different types: {n1.src}->{n1.dst} vs {n2.src}->{n2.dst}")
    if n1 == n2:
        return True
    rules = _rules(rels)
    truncated = False
    seen = {n1}
    queue = deque([n1])
    while queue:
        cur = queue.popleft()
        for nxt in _neighbors(cur, rules):
            if nxt == n2:
                return True
            if nxt in seen:
                continue
            if len(nxt.atoms) > max_length:
                truncated = True
                continue
            if len(seen) >= max_nodes:
                truncated = True
                break
            seen.add(nxt)
            queue.append(nxt)
    if truncated:
        raise RewriteBoundExceeded(
            f"no join found within length {max_length} / {max_nodes} terms; search was truncated"
        )
    return False


# ---------------------------------------------------------------------------
# the octahedral diagram
# ---------------------------------------------------------------------------

OCTAHEDRON_SIGNATURE: dict[str, tuple[str, str]] = {
    "a": ("K0", "K2"),
    "b": ("K2", "K1"),
    "gamma": ("K0", "K1"),
    "t": ("K1", "L0"),
    "q": ("L0", "K2"),
    "r": ("K2", "L1"),
    "s": ("L1", "K0"),
    "xi": ("L0", "L1"),
    "lambda": ("K1", "L2'"),
    "kappa": ("L2'", "K0"),
    "eta": ("L1", "L2'"),
    "zeta": ("L2'", "L0"),
}

REQUIRED_TRIANGLES = (("a", "r", "s"), ("b", "t", "q"), ("lambda", "kappa", "gamma"), ("xi", "eta", "zeta"))
REQUIRED_EQUATIONS = (
    ("face K0,K2,K1", "gamma", "b . a"),
    ("face L0,K2,L1", "xi", "r . q"),
    ("face K1,L2',L0", "t", "zeta . lambda"),
    ("face L1,L2',K0", "s", "kappa . eta"),
    ("composites K2->L2'", "lambda . b", "eta . r"),
    ("composites L2'->K2", "a . kappa", "q . zeta"),
)
# the 4-periodic complex K0 -gamma-> K1 -t-> L0 -xi-> L1 -s-> K0
SQUARE = (("K0", "gamma"), ("K1", "t"), ("L0", "xi"), ("L1", "s"))
SQUARE_CHECKS = ("t . gamma", "xi . t", "s . xi", "gamma . s")
IDENTITY_CHECKS = (("lambda . b", "eta . r"), ("a . kappa", "q . zeta"))


@dataclass
class Check:
    label: str
    lhs: str
    rhs: str
    status: str  # "derived" | "not derivable" | "bound exceeded"

    @property
    def ok(self) -> bool:
        return self.status == "derived"


@dataclass
class OctahedronReport:
    checks: list[Check]
    missing: list[str]
    conflicts: list[str]
    notes: list[str]

    @property
    def periodic_complex(self) -> bool:
        return all(c.ok for c in self.checks[: len(SQUARE_CHECKS)])

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks) and not self.conflicts


def _same_cycle(t1: Sequence[str], t2: Sequence[str]) -> bool:
    return any(tuple(t1[i:]) + tuple(t1[:i]) == tuple(t2) for i in range(len(t1)))


def octahedron_suite(rels: RelationSet, *, max_length: int = 6) -> OctahedronReport:
    """Check the chain-complex and composite identities of the octahedral diagram.

    Generator types come from ``rels`` where declared, else from
    :data:`OCTAHEDRON_SIGNATURE`.  Declarations the full diagram needs but
    ``rels`` lacks are listed in ``missing``.
    """
    conflicts = []
    sig = dict(OCTAHEDRON_SIGNATURE)
    for name, typ in rels.generators.items():
        if name in sig and sig[name] != typ:
            conflicts.append(f"generator {name} declared {typ[0]}->{typ[1]}, "
                             f"diagram needs {sig[name][0]}->{sig[name][1]}")
        sig[name] = typ

    missing = []
    for tri in REQUIRED_TRIANGLES:
        if not any(_same_cycle(tri, declared) for declared in rels.triangles):
            missing.append(f"triangle ({', '.join(tri)})")
    declared = set()
    for eq in rels.equations:
        l, r = normalize(eq.lhs), normalize(eq.rhs)
        declared.add((l, r))
        declared.add((r, l))
    for label, lhs, rhs in REQUIRED_EQUATIONS:
        try:
            pair = (normalize(parse_term(lhs, sig)), normalize(parse_term(rhs, sig)))
        except TermError:
            missing.append(f"{label}: {lhs} = {rhs}")
            continue
        if pair not in declared:
            missing.append(f"{label}: {lhs} = {rhs}")

    def run(label: str, lhs: str, rhs: str) -> Check:
        try:
            ok = equal(parse_term(lhs, sig), parse_term(rhs, sig), rels, max_length=max_length)
            status = "derived" if ok else "not derivable"
        except RewriteBoundExceeded:
            status = "bound exceeded"
        except TermError as exc:
            conflicts.append(f"{label}: {exc}")
            status = "not derivable"
        return Check(label, lhs, rhs, status)

    checks = [run(f"square composite {expr}", expr, "zero") for expr in SQUARE_CHECKS]
    checks += [run(f"composite identity {l} = {r}", l, r) for l, r in IDENTITY_CHECKS]
    return OctahedronReport(checks, missing, conflicts, list(rels.notes))
