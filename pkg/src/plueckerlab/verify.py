"""End-to-end verification runs producing :class:`VerificationReport` objects.

Each ``cmd_*`` function builds its ideals from scratch, checks a list of
claims and never raises on a failed claim; failures are report entries.
Per-field work goes through :func:`run_tasks`, which uses worker processes
when ``PLUECKERLAB_THREADS`` is above 1 and always returns results in
parameter order.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb

from . import __version__
from .complexes import chain_map_defect, exact_in_window, first_nonzero_composite, is_regular_sequence
from .domains import GF, QQ, CoefficientDomain
from .grassmann import (GrassmannContext, affine_chart_ideal, g36_forms, hyperplane_form, pluecker_ideal,
                        schubert_ideal, schubert_pairs_of_dimension, section_point, tau_apply, tau_point,
                        v_forms, v_ideal)
from .ideals import (Ideal, first_not_contained, hilbert_data, intersect, linear_section, same_radical,
                     saturate)
from .linalg import matrix_rank
from .p2 import bottom_row, expected_top_differentials, projection_map, top_row
from .polynomial import evaluate_matrix, jacobian
from .report import DERIVED, PUBLISHED, TRIVIAL, Claim, VerificationReport
from .zerodim import (affine_degree, affine_local_multiplicity, affine_points, covering_chart,
                      projective_points, zero_dim_radical)

DEFAULT_PRIMES = (2, 3, 5, 7)
SECTION_PRIMES = (2, 3, 5)
G36_DEGREE = 42


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("PLUECKERLAB_THREADS", "1")))
    except ValueError:
        return 1


def run_tasks(fn, args: list) -> list:
    """``[fn(*a) for a in args]``, possibly in worker processes; order is kept."""
    n = thread_count()
    if n <= 1 or len(args) <= 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=min(n, len(args))) as pool:
        futures = [pool.submit(fn, *a) for a in args]
        return [f.result() for f in futures]


def _fields(primes) -> list:
    return [QQ] + [GF(p) for p in primes]


def _collect(report: VerificationReport, results: list):
    for claims, notes, timings in results:
        report.claims.extend(claims)
        report.notes.extend(notes)
        report.timings.update(timings)


def _claim(text, expected, computed, source, passed=None, counterexample=None) -> Claim:
    if passed is None:
        passed = expected == computed
    return Claim(text, expected, computed, bool(passed), source,
                 None if counterexample is None else str(counterexample))


def _ideal_difference(I: Ideal, J: Ideal):
    """First generator of one ideal outside the other, or None if they are equal."""
    miss = first_not_contained(I, J)
    return miss if miss is not None else first_not_contained(J, I)


# --------------------------------------------------------------------------
# P^2 diagram


def cmd_verify_p2(window: tuple = (1, 6), flip_sign: bool = False) -> VerificationReport:
    rep = VerificationReport("verify p2", {"degree_window": f"{window[0]}..{window[1]}",
                                           "field": "Q", "flip_sign": flip_sign}, __version__)
    t0 = time.perf_counter()
    top, bottom = top_row(), bottom_row()
    for name, C, src in (("top", top, TRIVIAL), ("bottom", bottom, DERIVED)):
        bad = first_nonzero_composite(C)
        rep.add(f"{name} row is a complex (d^2 = 0)", True, bad is None, src,
                counterexample=None if bad is None else f"d_{bad[0] - 1} d_{bad[0]} entry {bad[3]}")

    want = expected_top_differentials(top.ring)
    got = [[list(r) for r in d] for d in top.differentials]
    mismatch = None
    for i, (A, B) in enumerate(zip(want, got), start=1):
        for r, (ra, rb) in enumerate(zip(A, B)):
            for c, (a, b) in enumerate(zip(ra, rb)):
                if a != b and mismatch is None:
                    mismatch = f"d_{i}[{r}][{c}] = {b}, expected {a}"
    rep.add("Koszul differentials of x1, x2, x3 match the reference matrices entry for entry",
            True, mismatch is None and len(want) == len(got), PUBLISHED, counterexample=mismatch)

    lo, hi = window
    for name, C in (("top", top), ("bottom", bottom)):
        bad = exact_in_window(C, range(1, C.length + 1), window)
        rep.add(f"{name} row: homology vanishes in positions >= 1, degrees {lo}..{hi}", [], bad, DERIVED,
                counterexample=None if not bad else f"H_{bad[0][0]} in degree {bad[0][1]} has dim {bad[0][2]}")
        bad0 = exact_in_window(C, [0], (max(lo, 1), hi)) if hi >= 1 else []
        rep.add(f"{name} row: position 0 homology vanishes in degrees {max(lo, 1)}..{hi}", [], bad0, DERIVED,
                counterexample=None if not bad0 else f"H_0 in degree {bad0[0][1]} has dim {bad0[0][2]}")
    rep.add("x1, x2, x3 is a regular sequence on S", True,
            is_regular_sequence(list(top.ring.gens()), Ideal([], top.ring)), TRIVIAL)

    f = projection_map(top, bottom, flip_sign=flip_sign)
    defect = chain_map_defect(f)
    rep.add("projection (identity, proj, proj, canonical surjection) is a chain map", True, defect is None,
            PUBLISHED, counterexample=None if defect is None
            else f"square at position {defect[0]}, entry ({defect[1]},{defect[2]}): {defect[3]}")
    rep.note("degree 0 of position 0 carries H_0 = k in both rows; it has no sheaf-level content")
    rep.timings["p2"] = time.perf_counter() - t0
    return rep


# --------------------------------------------------------------------------
# two points on G(2,4)


def _two_points_field(dom: CoefficientDomain):
    t0 = time.perf_counter()
    F = str(dom)
    ctx = GrassmannContext(2, 4, dom)
    p = ctx.p
    X = pluecker_ideal(ctx)
    V = v_ideal(ctx)
    S = saturate(X + V)
    E = Ideal([p(1, 2), p(1, 3), p(2, 4), p(3, 4), p(1, 4) * p(2, 3)], ctx.ring)
    claims = []
    diff = _ideal_difference(S, E)
    claims.append(_claim(f"[{F}] saturation of I_X + (l3, l4, l6, l7) equals (p12, p13, p24, p34, p14*p23)",
                         "equal", "equal" if diff is None else "different", PUBLISHED, counterexample=diff))
    claims.append(_claim(f"[{F}] l3, l4, l6, l7 form a regular sequence on X", True,
                         is_regular_sequence(list(V.gens), X), PUBLISHED))
    hd = hilbert_data(S)
    claims.append(_claim(f"[{F}] projective dimension", 0, hd.proj_dim, PUBLISHED))
    claims.append(_claim(f"[{F}] degree", 2, hd.degree, PUBLISHED))

    pts = projective_points(S)
    found = [(" ".join(pt.support()), mult) for pt, mult in pts]
    claims.append(_claim(f"[{F}] points and multiplicities", [("p14", 1), ("p23", 1)], sorted(found),
                         PUBLISHED, counterexample=None if pts.complete else "points not all rational"))
    claims.append(_claim(f"[{F}] multiplicities sum to the degree", hd.degree, sum(m for _, m in pts),
                         DERIVED))
    chart = covering_chart(S)
    A = chart.ideal(S)
    R = zero_dim_radical(A)
    claims.append(_claim(f"[{F}] chart ideal on {chart.form} = 1 is radical", True,
                         _ideal_difference(A, R) is None, DERIVED, counterexample=_ideal_difference(A, R)))

    quad = X.gens[0]
    claims.append(_claim(f"[{F}] tau fixes the Pluecker quadric", str(quad), str(tau_apply(ctx, quad)), DERIVED))
    tS = Ideal([tau_apply(ctx, g) for g in S.gens], ctx.ring)
    claims.append(_claim(f"[{F}] tau preserves the saturated ideal", True, tS == S, DERIVED,
                         counterexample=_ideal_difference(tS, S)))
    P1 = Ideal([v for v in ctx.ring.gens() if str(v) != "p14"], ctx.ring)
    P2 = Ideal([v for v in ctx.ring.gens() if str(v) != "p23"], ctx.ring)
    tP1 = Ideal([tau_apply(ctx, g) for g in P1.gens], ctx.ring)
    claims.append(_claim(f"[{F}] tau sends the ideal of P1 = e14 to the ideal of P2 = e23", True, tP1 == P2,
                         PUBLISHED, counterexample=_ideal_difference(tP1, P2)))
    coords = [pt.coordinates for pt, _ in pts]
    swapped = sorted(tau_point(ctx, c) for c in coords)
    claims.append(_claim(f"[{F}] tau permutes the computed points without fixed points", True,
                         swapped == sorted(coords) and all(tau_point(ctx, c) != c for c in coords),
                         PUBLISHED))
    return claims, [], {F: time.perf_counter() - t0}


def cmd_verify_two_points(primes=DEFAULT_PRIMES) -> VerificationReport:
    primes = tuple(primes)
    rep = VerificationReport("verify two-points", {"grassmannian": "2,4", "fields": ["Q"] + [f"F{p}" for p in primes]},
                             __version__)
    _collect(rep, run_tasks(_two_points_field, [(d,) for d in _fields(primes)]))
    return rep


# --------------------------------------------------------------------------
# section through the chart origin


def _section_field(m: int, dom: CoefficientDomain, with_multiplicity: bool):
    t0 = time.perf_counter()
    F = str(dom)
    ctx = GrassmannContext(2, m, dom)
    a = affine_chart_ideal(ctx)
    R = a.ring
    origin = {v: dom.zero for v in R.variables}
    claims = []
    if dom == QQ:
        outside = next((g for g in a.gens if g.evaluate(origin)), None)
        claims.append(_claim(f"[{F}] chart ideal is contained in the maximal ideal of the origin", True,
                             outside is None, PUBLISHED, counterexample=outside))
        XV = pluecker_ideal(ctx) + v_ideal(ctx)
        pt = section_point(ctx)
        off = next((g for g in XV.gens if g.evaluate(pt)), None)
        claims.append(_claim(f"[{F}] e1{m} lies on X ∩ V", True, off is None, PUBLISHED, counterexample=off))
    J = evaluate_matrix(jacobian(list(a.gens), R.variables), origin)
    claims.append(_claim(f"[{F}] Jacobian rank at the origin equals N = C({m},2) - 1", ctx.N,
                         matrix_rank(J, dom), DERIVED))
    if dom == QQ:
        missing = [v for j, v in enumerate(R.variables)
                   if not any(row[j] in (1, -1) for row in J)]
        claims.append(_claim(f"[{F}] every chart variable is the unit linear term of some generator", [],
                             missing, PUBLISHED, counterexample=missing[0] if missing else None))
    if with_multiplicity:
        mult = affine_local_multiplicity(a, [dom.zero] * R.nvars)
        claims.append(_claim(f"[{F}] local multiplicity of the origin", 1, mult, PUBLISHED))
    return claims, [], {f"m={m} {F}": time.perf_counter() - t0}


def cmd_verify_section(m: int, primes=SECTION_PRIMES, max_m: int = 6) -> VerificationReport:
    if not 4 <= m <= max_m:
        raise ValueError(f"m must lie in 4..{max_m}")
    primes = tuple(primes)
    rep = VerificationReport("verify section", {"m": m, "N": comb(m, 2) - 1,
                                                "fields": ["Q"] + [f"F{p}" for p in primes]}, __version__)
    tasks = [(m, d, True) for d in _fields(primes)]
    _collect(rep, run_tasks(_section_field, tasks))
    return rep


# --------------------------------------------------------------------------
# zero-dimensional fibres of X ∩ V


def _zero_dim_field(m: int, dom: CoefficientDomain):
    t0 = time.perf_counter()
    F = str(dom)
    ctx = GrassmannContext(2, m, dom)
    J, _ = linear_section(pluecker_ideal(ctx), v_forms(ctx))
    hd = hilbert_data(J)
    claims = [_claim(f"[{F}] projective dimension of X ∩ V", 0, hd.proj_dim, PUBLISHED)]
    notes = []
    if hd.proj_dim == 0:
        pts = projective_points(J)
        desc = ", ".join(f"{' '.join(pt.support())}:{k}" for pt, k in pts)
        notes.append(f"[{F}] degree {hd.degree}; points (support:multiplicity) {desc}")
        if pts.complete:
            claims.append(_claim(f"[{F}] multiplicities of the points sum to the degree", hd.degree,
                                 sum(k for _, k in pts), DERIVED))
        else:
            notes.append(f"[{F}] points not enumerable over this field ({pts.unresolved} unresolved)")
    return claims, notes, {F: time.perf_counter() - t0}, hd.degree


def cmd_verify_zero_dim(m: int, primes=DEFAULT_PRIMES) -> VerificationReport:
    if not 4 <= m <= 6:
        raise ValueError("m must lie in 4..6")
    primes = tuple(primes)
    fields = _fields(primes)
    rep = VerificationReport("verify zero-dim", {"m": m, "fields": [str(d) for d in fields]}, __version__)
    results = run_tasks(_zero_dim_field, [(m, d) for d in fields])
    _collect(rep, [r[:3] for r in results])
    degrees = {str(d): r[3] for d, r in zip(fields, results)}
    rep.add("degree is the same over every field (flatness evidence)", 1, len(set(degrees.values())), DERIVED)
    rep.parameters["degrees"] = degrees
    if m == 4:
        rep.add("common degree for m = 4", 2, degrees["Q"], PUBLISHED)
    else:
        rep.note(f"degree {degrees['Q']} for m = {m} is computed here, not a published value")
    return rep


# --------------------------------------------------------------------------
# Richardson decomposition


def _richardson_field(m: int, dom: CoefficientDomain):
    t0 = time.perf_counter()
    F = str(dom)
    ctx = GrassmannContext(2, m, dom)
    X = pluecker_ideal(ctx)
    claims, notes = [], []
    for k in range(2 * m - 1, m + 1, -1):
        L = X + [hyperplane_form(ctx, s) for s in range(k, 2 * m)]
        pairs = schubert_pairs_of_dimension(ctx, k - 4)
        comps = [schubert_ideal(ctx, pr) for pr in pairs]
        U = comps[0]
        for c in comps[1:]:
            U = intersect(U, c)
        names = " ∪ ".join(f"Y{i}{j}" for i, j in pairs)
        wit = same_radical(L, U)
        claims.append(_claim(f"[{F}] k={k}: V(I_X + (l{k}..l{2 * m - 1})) = {names} (radical membership)",
                             True, wit is None, DERIVED, counterexample=wit))
        if m == 4:
            wit = _ideal_difference(saturate(L), saturate(U))
            claims.append(_claim(f"[{F}] k={k}: saturated ideals agree with {names}", True, wit is None,
                                 DERIVED, counterexample=wit))
        if k == 2 * m - 1:
            Y = schubert_ideal(ctx, (m - 2, m))
            wit = _ideal_difference(L, Y)
            claims.append(_claim(f"[{F}] k={k}: I_X + (l{k}) is the Schubert divisor Y{m - 2}{m}", True,
                                 wit is None, PUBLISHED, counterexample=wit))
    return claims, notes, {F: time.perf_counter() - t0}


def _format_point(ctx, row) -> str:
    return "(" + ", ".join(f"{v}={int(c)}" for v, c in zip(ctx.ring.variables, row)) + ")"


def _richardson_scan(m: int, p: int = 5):
    import numpy as np

    from .pointscan import projective_space, vanishing_mask
    t0 = time.perf_counter()
    F = f"F{p}"
    ctx = GrassmannContext(2, m, GF(p))
    pts = projective_space(len(ctx.ring.variables), p)
    on_x = vanishing_mask(pluecker_ideal(ctx).gens, pts, p)
    claims = []
    for k in range(2 * m - 1, m + 1, -1):
        left = on_x & vanishing_mask([hyperplane_form(ctx, s) for s in range(k, 2 * m)], pts, p)
        right = np.zeros_like(on_x)
        pairs = schubert_pairs_of_dimension(ctx, k - 4)
        for pr in pairs:
            right |= on_x & vanishing_mask([f for f in schubert_ideal(ctx, pr).gens
                                            if f.degree() == 1], pts, p)
        bad = (left != right).nonzero()[0]
        names = " ∪ ".join(f"Y{i}{j}" for i, j in pairs)
        claims.append(_claim(f"[{F}] k={k}: exhaustive point scan, V(I_X + (l{k}..l{2 * m - 1})) = {names}",
                             int(left.sum()), int(right.sum()), DERIVED, passed=len(bad) == 0,
                             counterexample=_format_point(ctx, pts[bad[0]]) if len(bad) else None))
    fibre = on_x & vanishing_mask(v_forms(ctx), pts, p)
    found = sorted(_format_point(ctx, r) for r in pts[fibre])
    expected = []
    for k in range(1, m // 2 + 1):
        row = [1 if t == (k, m + 1 - k) else 0 for t in ctx.tuples]
        expected.append(_format_point(ctx, row))
    claims.append(_claim(f"[{F}] points of X ∩ V are the Richardson points e(k, m+1-k), 1 <= k <= m/2",
                         sorted(expected), found, DERIVED))
    notes = [f"X ∩ V has {len(found)} points for m = {m}; the range 1 <= k < m/2 would give {(m - 1) // 2}"]
    return claims, notes, {f"{F} scan": time.perf_counter() - t0}


def cmd_verify_richardson(m: int) -> VerificationReport:
    if m not in (4, 5):
        raise ValueError("richardson checks are implemented for m in {4, 5}")
    rep = VerificationReport("verify richardson", {"m": m, "k": f"{2 * m - 1}..{m + 2}", "fields": ["Q", "F5"],
                                                   "scan_field": "F5"}, __version__)
    tasks = [(_richardson_field, (m, QQ)), (_richardson_field, (m, GF(5))), (_richardson_scan, (m, 5))]
    _collect(rep, run_tasks(_call, tasks))
    return rep


def _call(fn, args):
    return fn(*args)


# --------------------------------------------------------------------------
# G(3,6)


def _g36_subset(prime: int, omit: int):
    t0 = time.perf_counter()
    ctx = GrassmannContext(3, 6, GF(prime))
    forms = g36_forms(ctx)
    used = [f for i, f in enumerate(forms) if i != omit]
    label = f"omit l{omit + 6}"
    J, _ = linear_section(pluecker_ideal(ctx), used)
    hd = hilbert_data(J)
    claims = [_claim(f"[{label}] projective dimension", 0, hd.proj_dim, DERIVED)]
    notes = []
    if hd.proj_dim != 0:
        return claims, notes, {label: time.perf_counter() - t0}
    chart = covering_chart(J)
    A = chart.ideal(J)
    rad = zero_dim_radical(A)
    rdeg = affine_degree(rad)
    claims.append(_claim(f"[{label}] degree of the scheme exceeds degree of its radical", True,
                         hd.degree > rdeg, PUBLISHED, counterexample=None if hd.degree > rdeg
                         else f"degree {hd.degree}, radical degree {rdeg}"))
    pts = affine_points(A)
    low = next((pt for pt, k in pts if k < 2), None)
    mults = [k for _, k in pts]
    claims.append(_claim(f"[{label}] every point has multiplicity >= 2", True, low is None and bool(pts),
                         PUBLISHED, counterexample=low))
    if pts.complete:
        claims.append(_claim(f"[{label}] multiplicities sum to the degree", hd.degree, sum(mults), DERIVED))
    else:
        notes.append(f"[{label}] {pts.unresolved} of {hd.degree} not over F{prime}")
    notes.append(f"[{label}] degree {hd.degree}, radical degree {rdeg}, multiplicities {mults}")
    return claims, notes, {label: time.perf_counter() - t0}


def cmd_search_g36(prime: int = 101) -> VerificationReport:
    GF(prime)  # rejects non-primes
    if prime <= G36_DEGREE:
        raise ValueError(f"prime must exceed the expected degree {G36_DEGREE}; got {prime}")
    rep = VerificationReport("verify g36", {"grassmannian": "3,6", "prime": prime, "subsets": 10}, __version__)
    _collect(rep, run_tasks(_g36_subset, [(prime, i) for i in range(10)]))
    return rep
