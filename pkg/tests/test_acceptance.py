"""End-to-end acceptance checks.

Each test prints one PASS/FAIL line for its criterion and then asserts, so
the summary is visible in `pytest -v` output even when a check fails.
"""

import time
from collections import Counter
from fractions import Fraction as F

import numpy as np
import pytest

from bigelow_jones.braid import BraidWord, parse_braid, to_plat
from bigelow_jones.branched_cover import hat_generators, lift_points, r_tilde
from bigelow_jones.errors import InputError, ReducedConditionError
from bigelow_jones.gradings import p_star, q_star
from bigelow_jones.jones import normalize
from bigelow_jones.kauffman_oracle import kauffman_jones
from bigelow_jones.laurent import Q_PLUS_QINV, parse_polynomial
from bigelow_jones.pipeline import Analysis, analyze
from bigelow_jones.plane_diagram import (
    BetaPath, FlattenedDiagram, apply_braid, enumerate_intersections, insert_bigon, standard_matching,
)
from bigelow_jones.slice_hilbert import (
    FiberPoint, anti_diagonal_check, hilbert_image, involution, p_tau_at, random_slice_point, random_tau,
    reconstruct,
)

from conftest import analysis, corpus_words


@pytest.fixture
def emit(capsys):
    def _emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    return _emit


def _table(text):
    out = {}
    for line in text.strip().splitlines():
        value, labels = line.split(":")
        for label in labels.split():
            out[label] = int(value)
    return out


# left-handed trefoil, m = 2, w = -3
TREFOIL_Q = _table("""
    6: u1'v1' x1y1
    5: u1v1' u1'v1 x2'y1 x1y2'
    4: u1v1 x2y1 x2'y2' x1y2
    3: u2v1' u1'v2 x2y2' x2'y2
    2: u2v1 u1v2 x2y2
    0: u2v2
""")
# T = 2 holds u1v1 and its three primed variants
TREFOIL_T = _table("""
    3: x1y1
    2: u1v1 u1v1' u1'v1 u1'v1'
    1: x2y1 x2'y1 x1y2 x1y2' x2y2 x2'y2 x2y2' x2'y2'
    0: u2v1 u2v1' u1v2 u1'v2 u2v2
""")
TREFOIL_J = _table("""
    -1: u2v2
    -3: x2y2
    -5: u1v1 u1v2 u2v1 x2'y2 x2y2'
    -7: u2v1' u1'v2 u1v1' u1'v1 x1y1 x1y2 x2'y2' x2y1
    -9: u1'v1' x1y2' x2'y1
""")
TREFOIL_P = _table("""
    7: u1'v1' x1y1
    6: u1v1' u1'v1 x2'y1 x1y2'
    5: u1v1 x2y1 x2'y2' x1y2
    4: u2v1' u1'v2 x2y2' x2'y2
    3: u2v1 u1v2 x2y2
    1: u2v2
""")
TREFOIL_QSTAR = {"y2": -1, "v2": 0, "y2'": 0, "u2": 0, "y1": 1, "u1": 2, "v1": 2,
                 "v1'": 3, "x2": 3, "u1'": 3, "x2'": 4, "x1": 5}
TREFOIL_PSTAR = {"u2": 0, "v2": 0, "y2": 0, "y2'": 1, "x2": 2, "v1": 2, "u1": 2, "y1": 2,
                 "x2'": 3, "v1'": 3, "u1'": 3, "x1": 4}


def test_criterion_1_trefoil_tables(emit):
    start = time.perf_counter()
    a = analyze(parse_braid("-1 -1 -1", 2))
    recs = {r.label: r for r in a.records}
    qs = {p.label: q_star(a.system, p) for p in a.system.points}
    ps = {p.label: p_star(a.system, p) for p in a.system.points}
    elapsed = time.perf_counter() - start
    problems = []
    if len(a.generators) != 18 or set(recs) != set(TREFOIL_Q):
        problems.append(f"generators {sorted(recs)}")
    for name, table in (("Q", TREFOIL_Q), ("T", TREFOIL_T), ("J", TREFOIL_J), ("P", TREFOIL_P)):
        got = {label: getattr(r, name) for label, r in recs.items()}
        if got != table:
            problems.append(f"{name} table")
    if qs != TREFOIL_QSTAR:
        problems.append("Q* values")
    if ps != TREFOIL_PSTAR:
        problems.append("P* values")
    if elapsed >= 1.0:
        problems.append(f"runtime {elapsed:.2f}s")
    ok = not problems
    emit(1, ok, f"18 generators, Q/T/J/P tables, Q*, P*, {elapsed:.2f}s" if ok else "; ".join(problems))
    assert ok, problems


def test_criterion_2_trefoil_polynomials(emit):
    b = parse_braid("-1 -1 -1", 2)
    a = analysis("-1 -1 -1", 2)
    jl = parse_polynomial("q^-1 + q^-3 + q^-5 - q^-9", "q")
    vl = parse_polynomial("t^-1 + t^-3 - t^-4", "t")
    routes = {
        "bigelow": normalize(a.jones_q),
        "corollary": a.corollary_t,
        "reduced": a.reduced_t(),
        "kauffman": kauffman_jones(b),
    }
    bad = [k for k, v in routes.items() if v != vl]
    ok = a.jones_q == jl and not bad
    emit(2, ok, "J_L and V_L agree on all four routes" if ok else f"J_L {a.jones_q.q_text()}, bad routes {bad}")
    assert ok


def _point_relations(system):
    """Q*(e')-Q*(e) = P*(e')-P*(e) = 1 for every doubled pair; returns the failures."""
    pairs = {}
    for p in system.points:
        pairs.setdefault(p.base.id, {})[p.branch] = p
    bad = []
    for pair in pairs.values():
        if len(pair) == 1:
            continue
        e, e2 = pair[0], pair[1]
        dq = q_star(system, e2) - q_star(system, e)
        dp = p_star(system, e2) - p_star(system, e)
        if dq != 1 or dp != 1:
            bad.append(e.label)
    return bad


def _identity_failures(a):
    m, w = a.m, a.w
    bad = []
    for r in a.records:
        ok = (
            r.J == 2 * (r.T - r.Q) + m + w
            and r.P == r.P_tilde - (m + w)
            and r.two_R == 2 * r.P + r.J
            and r.two_R == 2 * (r.P_tilde + r.T - r.Q) - (m + w)
            and r.sign == (-1) ** r.P_tilde
        )
        if not ok:
            bad.append(r.label)
    return bad


def _outputs(a):
    try:
        reduced = a.reduced_t()
    except ReducedConditionError:
        reduced = None
    return a.jones_t, a.corollary_t, reduced


def _bigon_check(a, index):
    """Finger move on one beta of a corpus diagram; None if the outputs agree."""
    d = a.diagram
    j = index % d.m + 1
    k = index % (len(d.betas[j - 1].stations) - 1)
    fingered = Analysis(a.braid, insert_bigon(d, j, k))
    before, after = _outputs(a), _outputs(fingered)
    same = before[0] == after[0] and before[1] == after[1]
    if before[2] is not None and after[2] is not None:
        same = same and before[2] == after[2]
    return None if same else f"{a.braid} (beta {j}, piece {k})"


@pytest.fixture(scope="module")
def corpus():
    """One pass over every word of length <= 6 on 2 and 3 strands.

    Diagrams are extended one letter at a time from the cached prefix,
    which is the same computation as applying the whole word because
    normalization happens after each letter.
    """
    start = time.perf_counter()
    diagrams = {}
    out = {"words": 0, "oracle": [], "identities": [], "relations": [], "counts": [], "r_tilde": [],
           "bigon_checked": 0, "bigon": []}
    for index, b in enumerate(corpus_words()):
        if b.letters:
            prefix = diagrams[b.strands, b.letters[:-1]]
            d = apply_braid(prefix, to_plat(BraidWord(b.strands, b.letters[-1:])))
        else:
            d = standard_matching(b.strands)
        if len(b) < 6:
            diagrams[b.strands, b.letters] = d
        a = Analysis(b, d)
        out["words"] += 1
        if normalize(a.jones_q) != kauffman_jones(b):
            out["oracle"].append(str(b))
        if _identity_failures(a):
            out["identities"].append(str(b))
        if _point_relations(a.system):
            out["relations"].append(str(b))
        hat = lift_points(d, enumerate_intersections(d))
        if len(hat_generators(hat, a.m)) != len(a.generators):
            out["counts"].append(str(b))
        if any(r.two_R != 2 * r_tilde(r) - (a.m + a.w) for r in a.records):
            out["r_tilde"].append(str(b))
        if len(b) <= 2 or index % 16 == 0:
            out["bigon_checked"] += 1
            failure = _bigon_check(a, index)
            if failure:
                out["bigon"].append(failure)
    out["seconds"] = time.perf_counter() - start
    return out


def test_criterion_3_oracle_corpus(emit, corpus):
    bad = corpus["oracle"]
    emit(3, not bad, f"{corpus['words']} words, {len(bad)} mismatches, {corpus['seconds']:.0f}s {bad[:5]}")
    assert not bad


def test_criterion_4_grading_identities(emit, corpus):
    bad = corpus["identities"] + corpus["relations"]
    emit(4, not bad, f"identities and e/e' relations on {corpus['words']} words, {len(bad)} failures {bad[:5]}")
    assert not bad


def test_criterion_5_isotopy_invariance(emit, corpus):
    m1 = BraidWord(1)
    plain = Analysis(m1, standard_matching(1))
    fingered = Analysis(m1, FlattenedDiagram(1, (BetaPath((F(1), F(3, 2), F(7, 4), F(2)), 1),)))
    unknots = [x.jones_q for x in (plain, fingered)]
    bad = corpus["bigon"]
    ok = all(j == Q_PLUS_QINV for j in unknots) and not bad
    emit(5, ok, f"both unknots give {unknots[1].q_text()}; {corpus['bigon_checked']} finger moves, "
                f"{len(bad)} changed outputs {bad[:3]}")
    assert ok


def test_criterion_6_identity_symmetry(emit):
    bad = []
    for m in range(1, 5):
        recs = analysis("", m).records
        for name in ("P", "two_R"):
            values = Counter(getattr(r, name) for r in recs)
            if values != Counter({-k: n for k, n in values.items()}):
                bad.append(f"m={m} {name}")
    emit(6, not bad, "P and 2R symmetric for the identity braid, m = 1..4" if not bad else str(bad))
    assert not bad


def _fixed_point_sample(rng, m):
    """Points on the v = 0 locus; half the samples contain an opposite pair over one z."""
    tau = random_tau(rng, m)
    n = int(rng.integers(2, m + 1)) if m > 1 else 2
    zs = []
    while len(zs) < n:
        z = complex(*rng.uniform(-3, 3, 2))
        if all(abs(z - w) > 0.1 for w in zs + list(tau)):
            zs.append(z)
    opposite = bool(rng.integers(0, 2))
    if opposite:
        zs[-1] = zs[0]
    points = []
    for k, z in enumerate(zs):
        u = np.sqrt(-p_tau_at(tau, z) + 0j)
        if opposite and k == len(zs) - 1:
            u = -u
        points.append(FiberPoint(complex(u), 0j, z))
    return points, tau, opposite


def test_criterion_7_slice_roundtrip(emit):
    rng = np.random.default_rng(20240607)
    roundtrip = commute = 0.0
    for _ in range(1000):
        m = int(rng.integers(1, 5))
        n = int(rng.integers(1, m + 1))
        p = random_slice_point(rng, n, m)
        image = hilbert_image(p)
        back = reconstruct(image, p.tau)
        for x, y in ((p.A, back.A), (p.B, back.B), (p.C, back.C), (p.D, back.D)):
            roundtrip = max(roundtrip, float(np.max(np.abs(x - y))))
        for q, r in zip(image, hilbert_image(involution(p))):
            commute = max(commute, abs(q.z - r.z), abs(q.u - r.u), abs(q.v + r.v))
    disagree = 0
    for _ in range(1000):
        points, tau, opposite = _fixed_point_sample(rng, int(rng.integers(1, 5)))
        flagged = anti_diagonal_check(points, tau)
        try:
            reconstruct(points, tau)
            refused = False
        except InputError:
            refused = True
        if flagged != refused or flagged != opposite:
            disagree += 1
    ok = roundtrip <= 1e-9 and commute <= 1e-9 and disagree == 0
    emit(7, ok, f"roundtrip {roundtrip:.1e}, involution {commute:.1e}, anti-diagonal disagreements {disagree}/1000")
    assert ok


def test_criterion_8_branched_cover(emit, corpus):
    bad = corpus["counts"] + corpus["r_tilde"]
    emit(8, not bad, f"lifted generator counts and R~ identity on {corpus['words']} words, {len(bad)} failures {bad[:5]}")
    assert not bad
