"""Independent reference values, computed with sympy and brute force.

Run ``python3 tests/oracles/compute_oracles.py`` to regenerate
``tests/data/oracle_values.json``.  Nothing here imports plueckerlab; the
test suite only reads the frozen JSON.
"""

import itertools
import json
import pathlib
from math import comb

import sympy as sp

OUT = pathlib.Path(__file__).resolve().parents[1] / "data" / "oracle_values.json"


def gb_strings(polys, gens, order, modulus=None):
    kw = {"modulus": modulus} if modulus else {}
    G = sp.groebner(polys, *gens, order=order, **kw)
    return G, sorted(str(sp.expand(g)) for g in G.exprs)


def small_examples():
    x, y, z = sp.symbols("x y z")
    out = {}
    _, out["gb_lex_x2-y_y"] = gb_strings([x**2 - y, y], [x, y], "lex")
    G = sp.groebner([x**2 - y], x, y, order="lex")
    out["nf_lex_x2y"] = str(G.reduce(x**2 * y)[1])
    # (x^2 y, x z) : x, checked by membership both ways against (x y, z)
    I = sp.groebner([x**2 * y, x * z], x, y, z, order="grevlex")
    cand = [x * y, z]
    out["quotient_candidate_times_x_in_I"] = all(I.contains(sp.expand(c * x)) for c in cand)
    # eliminate x from (x y, x - z)
    G = sp.groebner([x * y, x - z], x, y, z, order="lex")
    out["eliminate_x"] = sorted(str(g) for g in G.exprs if not g.has(x))
    return out


def hilbert_counts():
    # monomials of degree d in x, y, z outside (x^2, xy, y^2)
    counts = []
    for d in range(9):
        n = 0
        for a in range(d + 1):
            for b in range(d + 1 - a):
                if not (a >= 2 or (a >= 1 and b >= 1) or b >= 2):
                    n += 1
        counts.append(n)
    return counts


def f5_points():
    return sorted([a, b] for a in range(5) for b in range(5) if (a * a + 1) % 5 == 0 and b % 5 == 0)


def pluecker_sym(m):
    names = {t: sp.Symbol(f"p{t[0]}{t[1]}") for t in itertools.combinations(range(1, m + 1), 2)}
    rel = []
    for i, j, k, l in itertools.combinations(range(1, m + 1), 4):
        rel.append(names[(i, j)] * names[(k, l)] - names[(i, k)] * names[(j, l)] + names[(i, l)] * names[(j, k)])
    forms = []
    for s in range(3, 2 * m):
        if s == m + 1:
            continue
        forms.append(sum(v for t, v in names.items() if sum(t) == s))
    return names, rel, forms


def jacobian_rank(m):
    names, rel, forms = pluecker_sym(m)
    corner = names[(1, m)]
    chart_vars = [v for t, v in names.items() if t != (1, m)]
    gens = [sp.expand(g.subs(corner, 1)) for g in rel + forms]
    J = sp.Matrix([[sp.diff(g, v) for v in chart_vars] for g in gens]).subs({v: 0 for v in chart_vars})
    return int(J.rank())


def fibre_degree(m, modulus=None):
    """Hilbert function values of S/(I_X + V) in degrees 6, 7, 8, via a sympy basis."""
    names, rel, forms = pluecker_sym(m)
    allv = list(names.values())
    # Hilbert function of the quotient in a few large degrees; for a
    # zero-dimensional scheme it is constant and equal to the degree
    kw = {"modulus": modulus} if modulus else {}
    G = sp.groebner(rel + forms, *allv, order="grevlex", **kw)
    lead = [sp.Poly(g, *allv).monoms(order="grevlex")[0] for g in G.exprs]
    n = len(allv)

    def count(D):
        c = 0
        for e in _compositions(D, n):
            if not any(all(a <= b for a, b in zip(l, e)) for l in lead):
                c += 1
        return c
    vals = [count(D) for D in (6, 7, 8)]
    return vals


def _compositions(D, n):
    for bars in itertools.combinations(range(D + n - 1), n - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(D + n - 2 - prev)
        yield tuple(e)


def main():
    data = {
        "small": small_examples(),
        "hilbert_x2_xy_y2_counts": hilbert_counts(),
        "f5_points_x2+1_y": f5_points(),
        "jacobian_rank": {str(m): jacobian_rank(m) for m in (4, 5, 6)},
        "N": {str(m): comb(m, 2) - 1 for m in (4, 5, 6)},
        "fibre_hilbert_values_6_7_8": {
            f"{m}:{p}": fibre_degree(m, p) for m in (4, 5, 6) for p in (None, 2, 3)
        },
        "pluecker_counts": {"2,4": comb(4, 4), "2,5": comb(5, 4), "2,6": comb(6, 4)},
    }
    OUT.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    print(json.dumps(data, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
