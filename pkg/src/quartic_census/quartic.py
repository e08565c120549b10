"""Ternary quartic forms: monomial bookkeeping and bulk coefficient operators.

A ternary form of degree d is stored as its coefficient vector in the fixed
monomial order: exponent triples (a, b, c) with a + b + c = d, sorted by a
descending, then b descending.  For quartics that is

    x^4, x^3 y, x^3 z, x^2 y^2, x^2 y z, x^2 z^2, x y^3, x y^2 z, x y z^2,
    x z^3, y^4, y^3 z, y^2 z^2, y z^3, z^4

so a quartic is 15 numbers.  Bulk routines act on uint64 arrays of shape
(n_mon(d), N), one column per curve, entries reduced mod p; they accumulate
lazily in 64 bits and reduce once per output row.  Scalar routines work on
FieldElt tuples and serve the low-volume Galois descent code.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .gf import Mat3


@lru_cache(maxsize=None)
def monomials(d):
    """Exponent triples of degree d in the standard order."""
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


@lru_cache(maxsize=None)
def mon_index(d):
    return {m: i for i, m in enumerate(monomials(d))}


def n_mon(d):
    return (d + 1) * (d + 2) // 2


def _ff(e, m):
    """Falling factorial e (e-1) ... (e-m+1)."""
    out = 1
    for i in range(m):
        out *= e - i
    return out


@lru_cache(maxsize=None)
def _mul_table(da, db):
    idx = mon_index(da + db)
    out = []
    for ia, ma in enumerate(monomials(da)):
        for ib, mb in enumerate(monomials(db)):
            s = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
            out.append((ia, ib, idx[s]))
    return out


@lru_cache(maxsize=None)
def _dop_table(k, l):
    """Terms of the polar pairing: operator of degree k against form of degree l."""
    assert k <= l
    idx = mon_index(l - k)
    out = []
    for ig, mg in enumerate(monomials(k)):
        for if_, mf in enumerate(monomials(l)):
            if all(mf[t] >= mg[t] for t in range(3)):
                c = _ff(mf[0], mg[0]) * _ff(mf[1], mg[1]) * _ff(mf[2], mg[2])
                out.append((ig, if_, idx[(mf[0] - mg[0], mf[1] - mg[1], mf[2] - mg[2])], c))
    return out


def b_mul(p, A, da, B, db):
    """Coefficients of the product of two form batches."""
    out = np.zeros((n_mon(da + db), A.shape[1]), dtype=np.uint64)
    for ia, ib, io in _mul_table(da, db):
        out[io] += A[ia] * B[ib]
    out %= p
    return out


def b_dop(p, G, k, F, l):
    """Batch polar pairing: sum_m G_m d^m F, an (l-k)-form batch.

    Treats G as a differential operator term by term; the same routine serves
    forms in the point variables paired against forms in the dual variables.
    For k == l the result is the full contraction, shape (1, N).
    """
    out = np.zeros((n_mon(l - k), G.shape[1]), dtype=np.uint64)
    for ig, if_, io, c in _dop_table(k, l):
        out[io] += G[ig] * F[if_] * np.uint64(c % p)
    out %= p
    return out


def b_diff(p, F, d, var):
    """Partial derivative batch of a degree-d form along variable var."""
    src = monomials(d)
    idx = mon_index(d - 1)
    out = np.zeros((n_mon(d - 1), F.shape[1]), dtype=np.uint64)
    for i, m in enumerate(src):
        if m[var]:
            t = list(m)
            t[var] -= 1
            out[idx[tuple(t)]] += m[var] * F[i]
    out %= p
    return out


def b_hessian(p, F):
    """Hessian determinant batch of quartics, a sextic batch (28, N)."""
    d1 = [b_diff(p, F, 4, v) for v in range(3)]
    h = {}
    for i in range(3):
        for j in range(i, 3):
            h[(i, j)] = b_diff(p, d1[i], 3, j)
    m00, m11, m22 = h[(0, 0)], h[(1, 1)], h[(2, 2)]
    m01, m02, m12 = h[(0, 1)], h[(0, 2)], h[(1, 2)]
    pw = np.uint64(p)
    c0 = (b_mul(p, m11, 2, m22, 2) + pw - b_mul(p, m12, 2, m12, 2)) % p
    c1 = (b_mul(p, m01, 2, m22, 2) + pw - b_mul(p, m12, 2, m02, 2)) % p
    c2 = (b_mul(p, m01, 2, m12, 2) + pw - b_mul(p, m11, 2, m02, 2)) % p
    out = (b_mul(p, m00, 2, c0, 4) + pw + b_mul(p, m02, 2, c2, 4) - b_mul(p, m01, 2, c1, 4)) % p
    return out


@lru_cache(maxsize=None)
def _proj_grid(p, d=4):
    """Monomial value matrix over the points of P^2(F_p), reduced mod p.

    Point order: (1:y:z) for y, z in 0..p-1 row major, then (0:1:z), then
    (0:0:1).  Shape (p^2 + p + 1, n_mon(d)).
    """
    pts = [(1, y, z) for y in range(p) for z in range(p)]
    pts += [(0, 1, z) for z in range(p)]
    pts += [(0, 0, 1)]
    mons = monomials(d)
    V = np.empty((len(pts), len(mons)), dtype=np.float64)
    for i, (x, y, z) in enumerate(pts):
        for j, (a, b, c) in enumerate(mons):
            V[i, j] = (pow(x, a, p) * pow(y, b, p) * pow(z, c, p)) % p
    return V


def count_points_batch(p, C):
    """Points on X: f = 0 in P^2(F_p) for each quartic column of C (15, N)."""
    V = _proj_grid(p)
    N = C.shape[1]
    counts = np.zeros(N, dtype=np.int64)
    Cf = C.astype(np.float64)
    rows = V.shape[0]
    row_chunk = max(1, (1 << 22) // max(N, 1))
    for r0 in range(0, rows, row_chunk):
        R = V[r0:r0 + row_chunk] @ Cf
        R -= p * np.floor(R / p)
        counts += (R < 0.5).sum(axis=0)
    return counts


def count_points(field, coeffs):
    """Points of the plane quartic in P^2 over field.

    Charts are scanned in the fixed order (1:y:z), (0:1:z), (0:0:1).
    """
    mons = monomials(4)
    cs = [field.coerce(c) for c in coeffs]
    terms = [(c, b, cc) for c, (a, b, cc) in zip(cs, mons) if not c.is_zero()]
    total = 0
    elems = list(field.elements())
    powtab = {}
    for e in elems:
        pw = [field.one]
        for _ in range(4):
            pw.append(pw[-1] * e)
        powtab[e.c] = pw
    for y in elems:
        ypow = powtab[y.c]
        for z in elems:
            zpow = powtab[z.c]
            acc = field.zero
            for c, b, cc in terms:
                acc = acc + c * ypow[b] * zpow[cc]
            if acc.is_zero():
                total += 1
    inf_terms = [(c, cc) for c, (a, b, cc) in zip(cs, mons) if a == 0 and not c.is_zero()]
    for z in elems:
        zpow = powtab[z.c]
        acc = field.zero
        for c, cc in inf_terms:
            acc = acc + c * zpow[cc]
        if acc.is_zero():
            total += 1
    if cs[-1].is_zero():
        total += 1
    return total


def eval_form(field, coeffs, pt, d=4):
    """Value of a degree-d form at a projective point tuple."""
    acc = field.zero
    x, y, z = (field.coerce(v) for v in pt)
    for c, (a, b, cc) in zip(coeffs, monomials(d)):
        c = field.coerce(c)
        if not c.is_zero():
            acc = acc + c * x ** a * y ** b * z ** cc
    return acc


def substitute(field, coeffs, M):
    """Coefficients of f(M x) for a quartic f; M is a Mat3 over field."""
    if not isinstance(M, Mat3):
        M = Mat3(field, M)
    rows = [M.a[0:3], M.a[3:6], M.a[6:9]]
    idx = mon_index(4)
    out = [field.zero] * 15
    for c, (a, b, cc) in zip(coeffs, monomials(4)):
        c = field.coerce(c)
        if c.is_zero():
            continue
        poly = {(0, 0, 0): field.one}
        for var, e in ((0, a), (1, b), (2, cc)):
            for _ in range(e):
                nxt = {}
                for mon, v in poly.items():
                    for j in range(3):
                        if rows[var][j].is_zero():
                            continue
                        key = list(mon)
                        key[j] += 1
                        key = tuple(key)
                        nxt[key] = nxt.get(key, field.zero) + v * rows[var][j]
                poly = nxt
        for mon, v in poly.items():
            out[idx[mon]] = out[idx[mon]] + c * v
    return tuple(out)


def normalize_lead(field, coeffs):
    """Scale so the first nonzero coefficient is 1."""
    coeffs = [field.coerce(c) for c in coeffs]
    for c in coeffs:
        if not c.is_zero():
            inv = c.inv()
            return tuple(v * inv for v in coeffs)
    raise AssertionError("zero form")


def coeffs_to_ints(coeffs):
    """Prime-field coefficient tuple as plain ints."""
    return tuple(c.as_int() for c in coeffs)
