"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""

import random
import time

from plueckerlab import GF, GREVLEX, LEX, QQ, GrassmannContext, Ideal, buchberger, hilbert_data
from plueckerlab import ideal_quotient, intersect, pluecker_ideal, saturate
from plueckerlab.complexes import homology_dimension, is_regular_sequence, koszul_complex
from plueckerlab.grassmann import minor_vector
from plueckerlab.verify import cmd_search_g36, cmd_verify_p2, cmd_verify_richardson, cmd_verify_section
from plueckerlab.verify import cmd_verify_two_points, cmd_verify_zero_dim

from strategies import brute_hilbert, random_homogeneous, random_monomial_ideal, random_poly, ring


def _claim_texts(rep):
    return [c.text for c in rep.claims]


def _failures(rep):
    return "; ".join(c.text for c in rep.failures())


def test_criterion_1_two_points(criterion):
    t0 = time.perf_counter()
    rep = cmd_verify_two_points((2, 3, 5, 7))
    dt = time.perf_counter() - t0
    texts = " ".join(_claim_texts(rep))
    for needle in ("saturat", "projective dimension", "degree", "points", "tau"):
        assert needle in texts
    ok = rep.passed and dt < 5
    criterion(1, "G(2,4) two points", ok, f"{dt:.1f}s {_failures(rep)}".strip())
    assert ok


def test_criterion_2_section(criterion, oracle):
    t0 = time.perf_counter()
    reps = [cmd_verify_section(m, (2, 3, 5)) for m in (4, 5, 6)]
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in reps) and dt < 60
    for m, r in zip((4, 5, 6), reps):
        ranks = [c for c in r.claims if "Jacobian rank" in c.text]
        assert len(ranks) == 4  # Q, F2, F3, F5
        assert all(c.expected == oracle["N"][str(m)] for c in ranks)
        assert any("multiplicity" in c.text for c in r.claims)
    criterion(2, "section is unramified at the origin, m = 4, 5, 6", ok, f"{dt:.1f}s")
    assert ok


def test_criterion_3_zero_dim(criterion):
    t0 = time.perf_counter()
    reps = {m: cmd_verify_zero_dim(m, (2, 3, 5, 7)) for m in (4, 5)}
    dt = time.perf_counter() - t0
    degrees = {m: r.parameters["degrees"] for m, r in reps.items()}
    ok = (all(r.passed for r in reps.values()) and dt < 600
          and all(len(set(d.values())) == 1 and len(d) == 5 for d in degrees.values())
          and set(degrees[4].values()) == {2})
    criterion(3, "zero-dimensional fibres, m = 4, 5", ok, f"{dt:.1f}s degrees {degrees}")
    assert ok


def test_criterion_4_p2(criterion):
    t0 = time.perf_counter()
    rep = cmd_verify_p2()
    dt = time.perf_counter() - t0
    ok = rep.passed and dt < 5
    criterion(4, "P^2 diagram", ok, f"{dt:.1f}s {_failures(rep)}".strip())
    assert ok
    assert not cmd_verify_p2(flip_sign=True).passed


def test_criterion_5_richardson(criterion):
    t0 = time.perf_counter()
    rep = cmd_verify_richardson(4)
    dt = time.perf_counter() - t0
    scans = [c for c in rep.claims if "exhaustive point scan" in c.text]
    assert {c.text.split()[1] for c in scans} == {"k=6:", "k=7:"}
    ok = rep.passed and dt < 60
    criterion(5, "Richardson decomposition, m = 4", ok, f"{dt:.1f}s {_failures(rep)}".strip())
    assert ok


def test_criterion_6_g36(criterion):
    t0 = time.perf_counter()
    rep = cmd_search_g36(101)
    dt = time.perf_counter() - t0
    dims = [c for c in rep.claims if c.text.endswith("projective dimension")]
    assert len(dims) == 10
    ok = rep.passed and dt <= 1800
    criterion(6, "G(3,6) fibres are non-reduced", ok, f"{dt:.1f}s {_failures(rep)}".strip())
    assert ok


def _gb_permutations(rng, n):
    for _ in range(n):
        R = ring(rng.randint(1, 3), GF(7) if rng.random() < 0.5 else QQ)
        gens = [f for f in (random_poly(rng, R, 3) for _ in range(rng.randint(1, 3))) if f]
        if not gens:
            continue
        for order in (GREVLEX, LEX):
            G = buchberger(gens, order, ring=R).elements
            perm = gens[:]
            rng.shuffle(perm)
            if buchberger(perm, order, ring=R).elements != G:
                return False
    return True


def intersect_quotients(I, J):
    Q = ideal_quotient(I, J.gens[0])
    for g in J.gens[1:]:
        Q = intersect(Q, ideal_quotient(I, g))
    return Q


def _saturations(rng, n):
    for _ in range(n):
        R = ring(3, GF(7))
        I = Ideal([random_homogeneous(rng, R, rng.randint(1, 3)) for _ in range(2)], R)
        J = Ideal([R.var(v) for v in rng.sample(R.variables, rng.randint(1, 3))], R)
        I2 = Ideal(list(I.gens) + [random_homogeneous(rng, R, 2)], R)
        S, S2 = saturate(I, J), saturate(I2, J)
        # extensive, idempotent, monotone; and S : J = S
        if not (S.contains(I) and saturate(S, J) == S and S2.contains(S)):
            return False
        if intersect_quotients(S, J) != S:
            return False
    return True


def _koszul(rng, n):
    for _ in range(n):
        R = ring(rng.randint(1, 3), QQ)
        gens = [f for f in (random_homogeneous(rng, R, rng.randint(1, 2)) for _ in range(rng.randint(1, 3))) if f]
        if not gens:
            continue
        K = koszul_complex(gens)
        hi = sum(g.degree() for g in gens) + 2 * R.nvars
        exact = all(homology_dimension(K, i, d) == 0 for i in range(1, K.length + 1) for d in range(hi + 1))
        if exact != is_regular_sequence(gens, Ideal([], R)):
            return False
    return True


def _hilbert(rng, n):
    for _ in range(n):
        I = random_monomial_ideal(rng, rng.randint(1, 4), maxdeg=6)
        hd = hilbert_data(I)
        if any(hd.hilbert_function(d) != brute_hilbert(I, d) for d in range(10)):
            return False
    return True


def _minors(rng, n):
    for d, m in ((2, 4), (2, 5), (2, 6), (3, 6)):
        ctx = GrassmannContext(d, m, QQ)
        gens = pluecker_ideal(ctx).gens
        for _ in range(n):
            M = [[rng.randint(-9, 9) for _ in range(d)] for _ in range(m)]
            pt = minor_vector(ctx, M)
            if any(g.evaluate(pt) != 0 for g in gens):
                return False
    return True


def test_criterion_7_property_suites(criterion):
    rng = random.Random(20240607)
    t0 = time.perf_counter()
    results = {
        "GB permutation (200)": _gb_permutations(rng, 200),
        "saturation (100)": _saturations(rng, 100),
        "Koszul vs regular sequence (50)": _koszul(rng, 50),
        "Hilbert vs monomial count (100)": _hilbert(rng, 100),
        "Pluecker minors (4 x 100)": _minors(rng, 100),
    }
    dt = time.perf_counter() - t0
    ok = all(results.values()) and dt < 300
    bad = [k for k, v in results.items() if not v]
    criterion(7, "property suites", ok, f"{dt:.1f}s" + (f" failed: {bad}" if bad else ""))
    assert ok
