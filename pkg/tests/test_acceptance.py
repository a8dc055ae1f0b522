"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

import itertools
import json
import random
import shutil
import subprocess
import sys
import time
from fractions import Fraction

import pytest
import sympy

from webskein.cobmap import (
    ZERO, Decoration, FaceClass, Locus, Summand, compose, decorate, gen, normalize, normalize_trace,
    octahedron_suite, parse_relations, measure,
)
from webskein.corpus import circle, data_path, load_corpus, random_cubic_multigraph
from webskein.exactness import ConstraintSystem, add_exact_triangle, derive_two_rank, dim, rank
from webskein.foam import Action, make_psi, moduli_dim
from webskein.tait import local_tutte_residual, tait_brute, tait_count, verify_tutte

SEED = 20240917


def report(capsys, number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}" + (f"  [{detail}]" if detail else "")
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def test_criterion_1_tait_counts(capsys):
    expected = {"circle": 3, "dumbbell": 0, "theta": 6, "k4": 6}
    got = {name: tait_count(load_corpus(name)) for name in expected}
    two = tait_count(circle(2))
    t0 = time.perf_counter()
    dodeca = tait_count(load_corpus("dodecahedron"))
    elapsed = time.perf_counter() - t0
    ok = got == expected and two == 9 and dodeca == 60 and elapsed < 5
    report(capsys, 1, "Tait counts", ok, f"{got}, circle+circle={two}, dodecahedron={dodeca} in {elapsed:.3f}s")


def test_criterion_2_dp_equals_brute(capsys):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    mismatches = []
    for i in range(200):
        n = rng.choice([0, 2, 4, 6, 8, 10])  # at most 15 edges
        web = random_cubic_multigraph(n, rng, free_loops=rng.randint(0, 1))
        assert len(web.edges) <= 15
        if tait_count(web) != tait_brute(web):
            mismatches.append(i)
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 60
    report(capsys, 2, "DP equals brute force on 200 random cubic multigraphs", ok,
           f"mismatches={mismatches}, {elapsed:.2f}s")


def test_criterion_3_tutte_relation(capsys):
    bad = []
    for name in ("theta", "k4", "prism", "dodecahedron"):
        w = load_corpus(name)
        for e in w.edges:
            if not e.is_self_loop and verify_tutte(w, e.id) != 0:
                bad.append((name, e.id))
    rng = random.Random(SEED + 3)
    sites = 0
    while sites < 50:
        web = random_cubic_multigraph(rng.choice([2, 4, 8, 12, 16]), rng)  # at most 24 edges
        ids = [e.id for e in web.edges if not e.is_self_loop]
        if not ids:
            continue
        eid = rng.choice(ids)
        sites += 1
        if verify_tutte(web, eid) != 0:
            bad.append(("random", eid))
    local = [c for c in itertools.product(range(3), repeat=4) if local_tutte_residual(*c) != 0]
    ok = not bad and not local
    report(capsys, 3, "Tutte residual vanishes", ok,
           f"corpus+{sites} random sites, 81 local cases; failures={bad + local}")


def test_criterion_4_foam_table(capsys):
    cases = [(0, Fraction(0), -1), (1, Fraction(1, 32), 0), (2, Fraction(0), 0), (3, Fraction(1, 32), 0)]
    table_ok = all(moduli_dim(make_psi(n), Action(k)) == d for n, k, d in cases)
    kappa = sympy.Symbol("kappa")
    closed_ok = True
    for n in range(9):
        f = make_psi(n)
        expr = (8 * kappa + f.euler_char + sympy.Rational(f.self_int.numerator, f.self_int.denominator) / 2
                - sympy.Rational(f.tetra_points, 2) - 3)
        closed_ok &= sympy.simplify(expr - (8 * kappa - (1 - sympy.Rational(n, 2)) ** 2)) == 0
        for k in (Fraction(0), Fraction(1, 32), Fraction(5, 8)):
            closed_ok &= moduli_dim(f, k) == 8 * k - (1 - Fraction(n, 2)) ** 2
    report(capsys, 4, "foam dimension table and closed form", table_ok and closed_ok,
           f"table={table_ok}, closed form n<=8={closed_ok}")


RULES = [
    (Summand.PSI2, Locus.TETRA, None, False), (Summand.PSI3, Locus.TETRA, None, True),
    (Summand.PSI2, Locus.SEAM, None, False), (Summand.PSI1, Locus.SEAM, None, True),
    (Summand.PSI3, Locus.SEAM, None, True), (Summand.PSI0, Locus.FACE, None, False),
    (Summand.PSI1, Locus.FACE, None, True), (Summand.PSI3, Locus.FACE, FaceClass.DISK_FACE, True),
    (Summand.PSI2_MINUS, Locus.FACE, FaceClass.R_FACE, False),
    (Summand.PSI2_MINUS, Locus.FACE, FaceClass.DISK_FACE, True),
    (Summand.DOUBLE_MOBIUS, Locus.FACE, FaceClass.DPLUS, False),
    (Summand.DOUBLE_MOBIUS, Locus.FACE, FaceClass.DMINUS, True),
]


def test_criterion_5_rewrite_engine(capsys):
    r7 = all(
        normalize(compose(gen("Sigma", f"L{(i + 1) % 3}", f"L{i}"),
                          gen("Sigma", f"L{(i + 2) % 3}", f"L{(i + 1) % 3}"))) == ZERO
        for i in range(3)
    )
    T = gen("T", "K2", "K1")
    table = all(normalize(decorate(T, Decoration(s, l, fc))) == (ZERO if kills else T) for s, l, fc, kills in RULES)
    rng = random.Random(SEED + 5)
    decs = [Decoration(s, l, fc) for s, l, fc, _ in RULES] + [Decoration(Summand.PSI2_MINUS, Locus.TETRA)]
    nodes = ["L0", "L1", "L2", "K1"]
    props = True
    for _ in range(500):
        path = [rng.choice(nodes) for _ in range(rng.randint(2, 7))]
        atoms = []
        for src, dst in zip(path, path[1:]):
            name = "id" if src == dst and rng.random() < 0.5 else rng.choice(["Sigma", "f"])
            t = gen(name, src, dst) if name != "id" else compose(gen("id", src, src))
            if rng.random() < 0.4:
                t = decorate(t, rng.choice(decs))
            atoms.append(t)
        term = compose(*reversed(atoms))
        nf, steps = normalize_trace(term)
        props &= normalize(nf) == nf
        props &= all(measure(b.after) < measure(b.before) for b in steps)
        props &= len(steps) <= sum(measure(term))
    report(capsys, 5, "rewrite engine", r7 and table and props,
           f"R7 i=0,1,2: {r7}; 12-case table: {table}; 500 random terms: {props}")


def test_criterion_6_octahedron(capsys):
    rels = parse_relations(data_path("octahedron.rels").read_text())
    rep = octahedron_suite(rels)
    statuses = {f"{c.lhs} = {c.rhs}": c.status for c in rep.checks}
    ok = rep.ok and rep.periodic_complex and len(rep.checks) == 6
    report(capsys, 6, "octahedron suite on the shipped relation file", ok, "; ".join(
        f"{k}: {v}" for k, v in statuses.items()))


def test_criterion_7_triangle_solver(capsys):
    def system(a, b, c):
        s = add_exact_triangle(ConstraintSystem(), ("A", "B", "C"), ("f", "g", "h"))
        for n, v in zip("ABC", (a, b, c)):
            s.fix(dim(n), v)
        return s

    sol = system(2, 3, 3).solve()
    first = sol.feasible and tuple(sol.values[rank(m)] for m in "fgh") == (1, 2, 1)
    second = not system(1, 0, 0).solve().feasible
    rng = random.Random(SEED + 7)
    ident = True
    for _ in range(200):
        rf, rg, rh = (rng.randint(0, 20) for _ in range(3))
        dims = (rf + rh, rf + rg, rg + rh)
        s = system(*dims)
        sol = s.solve()
        values = dict(sol.values)
        ident &= sol.feasible and tuple(values[rank(m)] for m in "fgh") == (rf, rg, rh)
        for m in "fgh":
            ident &= derive_two_rank(s, "(f,g,h)", m).holds(values)
        # explicit formula: 2 rank(f) = |A| - |C| + |B|
        ident &= 2 * values[rank("f")] == dims[0] - dims[2] + dims[1]
    report(capsys, 7, "triangle solver", first and second and ident,
           f"(2,3,3)->(1,2,1): {first}; (1,0,0) infeasible: {second}; 200 random 2-rank: {ident}")


def test_criterion_8_dodecahedron_workflow(capsys):
    exe = shutil.which("websk")
    cmd = [exe] if exe else [sys.executable, "-m", "webskein"]
    t0 = time.perf_counter()
    proc = subprocess.run(cmd + ["bound", "dodecahedron", "--rank-ak", "5", "--json"],
                          capture_output=True, text=True, check=False)
    elapsed = time.perf_counter() - t0
    out = json.loads(proc.stdout)["outputs"] if proc.returncode == 0 else {}
    ok = (proc.returncode == 0 and out["upper_bound"] == "70" and out["euler_bound"] == "10"
          and out["lower_bound"] == "58" and out["morse_bott_bound"] == "68"
          and out["tau_K1_plus_L1_minus_K0"] == "60" and out["tutte_forced_60"] is True
          and elapsed < 10)
    detail = (f"upper={out.get('upper_bound')} euler={out.get('euler_bound')} lower={out.get('lower_bound')} "
              f"morse={out.get('morse_bott_bound')} combo={out.get('tau_K1_plus_L1_minus_K0')} "
              f"in {elapsed:.2f}s")
    report(capsys, 8, "websk bound dodecahedron --rank-ak 5", ok, detail)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
