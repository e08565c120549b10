"""Candidate families per automorphism stratum, in census processing order.

Each stratum owns a list of parametrized coefficient shapes.  A shape is a
pure function of (p, parameter index range), so streams shard trivially and
deterministically: parameters run lexicographically over integer residues,
shapes in a fixed order inside their stratum.

Singular fibers and fibers with extra automorphisms are NOT filtered here;
the census discards them via the discriminant and the seen-key store.
"""

import itertools

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf import Mat3, ext_field, fp_inv, smallest_nonsquare
from . import quartic


@dataclass(frozen=True)
class Stratum:
    token: str
    label: str
    dim: int
    order: int
    rank: int


# Processed in ascending dimension; within dimension 2 the S3 stratum must
# precede C3 (its family contains C3 fibers, the reverse never holds).
STRATA = (
    Stratum("g168", "G168", 0, 168, 0),
    Stratum("g96", "G96", 0, 96, 1),
    Stratum("g48", "G48", 0, 48, 2),
    Stratum("c9", "C9", 0, 9, 3),
    Stratum("c6", "C6", 1, 6, 4),
    Stratum("s4", "S4", 1, 24, 5),
    Stratum("g16", "G16", 1, 16, 6),
    Stratum("s3", "S3", 2, 6, 7),
    Stratum("c3", "C3", 2, 3, 8),
    Stratum("d8", "D8", 2, 8, 9),
    Stratum("d4", "D4", 3, 4, 10),
    Stratum("c2", "C2", 4, 2, 11),
    Stratum("triv", "1", 6, 1, 12),
)

BY_TOKEN = {s.token: s for s in STRATA}
BY_RANK = {s.rank: s for s in STRATA}


def of_token(token):
    s = BY_TOKEN.get(token)
    if s is None:
        raise KeyError(f"unknown stratum token {token!r}")
    return s


def _digits(p, idx, k):
    """Base-p digits of each index, most significant row first."""
    out = np.empty((k, idx.size), dtype=np.int64)
    v = idx.astype(np.int64).copy()
    for j in range(k - 1, -1, -1):
        out[j] = v % p
        v //= p
    return out


class Shape:
    """One coefficient shape: fixed entries plus free parameter slots.

    entries maps monomial slot -> int constant, or -> callable taking the
    digit rows (k, n) and returning the slot values.
    """

    def __init__(self, name, nparams, entries):
        self.name = name
        self.nparams = nparams
        self.entries = entries

    def count(self, p):
        return p ** self.nparams

    def coeffs(self, p, lo, hi):
        idx = np.arange(lo, hi, dtype=np.int64)
        d = _digits(p, idx, self.nparams) if self.nparams else None
        out = np.zeros((15, idx.size), dtype=np.int64)
        for slot, val in self.entries.items():
            out[slot] = val(d) if callable(val) else val
        return (out % p).astype(np.uint8)


def _const_shape(name, vec):
    return Shape(name, 0, {i: v for i, v in enumerate(vec) if v})


def _free(row):
    return lambda d, r=row: d[r]


def _d4_cubic_resolvent_shape():
    # 3-parameter shape: slot values are polynomial in (a, b, c).
    def e(fn):
        return lambda d: fn(d[0], d[1], d[2])

    return Shape("d4-abc", 3, {
        0: e(lambda a, b, c: a + 3),
        1: e(lambda a, b, c: 4 * a * a - 8 * b + 4 * a),
        2: e(lambda a, b, c: 12 * c + 4 * b),
        3: e(lambda a, b, c: 6 * a ** 3 - 18 * a * b + 18 * c + 2 * a * a),
        4: e(lambda a, b, c: 12 * a * c + 4 * a * b),
        5: e(lambda a, b, c: 6 * b * c + 2 * b * b),
        6: e(lambda a, b, c: 4 * a ** 4 - 16 * a * a * b + 8 * b * b
             + 16 * a * c + 2 * a * b - 6 * c),
        7: e(lambda a, b, c: 12 * a * a * c - 24 * b * c + 2 * a * a * b
             - 4 * b * b + 6 * a * c),
        8: e(lambda a, b, c: 36 * c * c + 2 * a * b * b - 4 * a * a * c
             + 6 * b * c),
        9: e(lambda a, b, c: 4 * b * b * c - 8 * a * c * c + 2 * a * b * c
             - 6 * c * c),
        10: e(lambda a, b, c: a ** 5 - 5 * a ** 3 * b + 5 * a * b * b
              + 5 * a * a * c - 5 * b * c + b * b - 2 * a * c),
        11: e(lambda a, b, c: 4 * a ** 3 * c - 12 * a * b * c + 12 * c * c
              + 4 * a * a * c - 8 * b * c),
        12: e(lambda a, b, c: 6 * a * c * c + a * a * b * b - 2 * b ** 3
              - 2 * a ** 3 * c + 4 * a * b * c + 9 * c * c),
        13: e(lambda a, b, c: 4 * b * c * c + 4 * b * b * c - 8 * a * c * c),
        14: e(lambda a, b, c: b ** 3 * c - 3 * a * b * c * c + 3 * c ** 3
              + a * a * c * c - 2 * b * c * c),
    })


def _d4_quadratic_shape():
    def e(fn):
        return lambda d: fn(d[0], d[1])

    return Shape("d4-ab", 2, {
        0: 1,
        3: 2,
        4: e(lambda a, b: 2 * a),
        5: e(lambda a, b: a * a - 2 * b),
        10: _free(0),
        11: e(lambda a, b: 4 * (a * a - 2 * b)),
        12: e(lambda a, b: 6 * (a ** 3 - 3 * a * b)),
        13: e(lambda a, b: 4 * (a ** 4 - 4 * a * a * b + 2 * b * b)),
        14: e(lambda a, b: a ** 5 - 5 * a ** 3 * b + 5 * a * b * b),
    })


@lru_cache(maxsize=None)
def shapes(p, token):
    """Coefficient shapes of a stratum, in enumeration order."""
    alpha = smallest_nonsquare(p)
    if token == "g168":
        if p == 7:
            raise ValueError("the order-168 stratum is empty for p = 7")
        return (_const_shape("klein", (0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0)),)
    if token == "g96":
        return (_const_shape("fermat", (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1)),)
    if token == "g48":
        return (_const_shape("g48", (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, p - 1)),)
    if token == "c9":
        return (_const_shape("c9", (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1)),)
    if token == "c6":
        return (Shape("c6-a", 1, {2: 1, 10: _free(0), 12: _free(0), 14: 1}),)
    if token == "s4":
        return (Shape("s4-a", 1, {0: 1, 10: 1, 14: 1,
                                  3: _free(0), 5: _free(0), 12: _free(0)}),)
    if token == "g16":
        return (Shape("g16-a", 1, {0: 1, 11: 1, 13: _free(0), 14: _free(0)}),)
    if token == "s3":
        return (Shape("s3-ab", 2, {2: 1, 11: 1, 3: 1, 8: _free(0), 14: _free(1)}),)
    if token == "c3":
        return (
            Shape("c3-ab", 2, {2: 1, 10: 1, 12: _free(0), 13: _free(0), 14: _free(1)}),
            Shape("c3-a", 1, {2: 1, 10: 1, 13: _free(0), 14: _free(0)}),
        )
    if token == "d8":
        return (Shape("d8-ab", 2, {0: 1, 4: 1, 10: 1, 12: _free(0), 14: _free(1)}),)
    if token == "d4":
        return (_d4_cubic_resolvent_shape(), _d4_quadratic_shape())
    if token == "c2":
        out = []
        for eps in (1, alpha):
            for mu in (0, 1):
                out.append(Shape(f"c2-y2-e{eps}-m{mu}", 4,
                                 {0: 1, 3: eps, 10: _free(0), 11: mu,
                                  12: _free(1), 13: _free(2), 14: _free(3)}))
        for eps in (0, 1, alpha):
            out.append(Shape(f"c2-yz-e{eps}", 4,
                             {0: 1, 4: 1, 10: _free(0), 11: eps,
                              12: _free(1), 13: _free(2), 14: _free(3)}))
        out.append(Shape("c2-norm", 5,
                         {0: 1, 3: 1, 5: p - alpha, 10: _free(0), 11: _free(1),
                          12: _free(2), 13: _free(3), 14: _free(4)}))
        return tuple(out)
    if token == "triv":
        # Ten shapes covering every quartic with a rational point.
        def sh(name, fixed, free):
            ent = dict(fixed)
            ent.update({slot: _free(r) for r, slot in enumerate(free)})
            return Shape(name, len(free), ent)

        return (
            sh("pt-1", {7: 1, 12: 1, 13: 1}, (0, 1, 3, 5, 6, 10, 11)),
            sh("pt-2", {6: 1, 12: 1, 13: 1}, (0, 1, 3, 5, 10, 11)),
            sh("pt-3", {12: 1, 13: 1}, (0, 1, 3, 5, 10, 11)),
            sh("pt-4", {6: 1, 7: 1, 13: 1}, (0, 1, 3, 5, 10, 11)),
            sh("pt-5", {7: 1, 13: 1}, (0, 1, 3, 5, 10, 11)),
            sh("pt-6", {0: 1, 13: 1}, (1, 3, 5, 6, 10, 11)),
            sh("pt-7", {13: 1}, (1, 3, 5, 6, 10, 11)),
            sh("pt-8", {2: 1, 8: 1, 13: 1}, (3, 6, 7, 10, 11, 12)),
            sh("pt-9", {2: 1, 13: 1}, (3, 6, 7, 10, 11, 12)),
            sh("pt-10", {0: 1, 13: 1}, (3, 4, 6, 7, 10, 11)),
        )
    raise KeyError(f"unknown stratum token {token!r}")


def param_count(p, token):
    """Total number of candidates in a stratum's stream."""
    return sum(s.count(p) for s in shapes(p, token))


def candidate_block(p, token, lo, hi):
    """Coefficients (15, hi-lo) and shape ids for the flat index range."""
    out = np.empty((15, hi - lo), dtype=np.uint8)
    fam = np.empty(hi - lo, dtype=np.uint8)
    base = 0
    pos = 0
    for fid, s in enumerate(shapes(p, token)):
        n = s.count(p)
        a, b = max(lo, base), min(hi, base + n)
        if a < b:
            out[:, pos:pos + (b - a)] = s.coeffs(p, a - base, b - base)
            fam[pos:pos + (b - a)] = fid
            pos += b - a
        base += n
    assert pos == hi - lo, "index range exceeds stream length"
    return out, fam


def enumerate_stratum(p, token, block=4096):
    """Stream of (flat index, shape id, coefficient vector) for one stratum.

    Intended for small strata and tests; the census consumes
    candidate_block directly.
    """
    total = param_count(p, token)
    for lo in range(0, total, block):
        hi = min(lo + block, total)
        coeffs, fam = candidate_block(p, token, lo, hi)
        for j in range(hi - lo):
            yield lo + j, int(fam[j]), coeffs[:, j]


EXCEPTIONAL_P11 = (7, 3, 10, 10, 10, 6, 0, 7, 1, 4, 9, 5, 8, 9, 9)


def exceptional_curves(p):
    """Pointless curves with trivial automorphisms missed by the
    rational-point shapes.  A single curve at p = 11, nothing elsewhere."""
    if p == 11:
        return [np.array(EXCEPTIONAL_P11, dtype=np.uint8)]
    return []


# automorphism generator templates


@dataclass(frozen=True)
class AutDescriptor:
    token: str
    field: object
    n: int
    generators: tuple
    elements: tuple
    order: int


def _proportional(field, u, v):
    lam = None
    for a, b in zip(u, v):
        az, bz = a.is_zero(), b.is_zero()
        if az != bz:
            return False
        if az:
            continue
        if lam is None:
            lam = a * b.inv()
        elif a != lam * b:
            return False
    return lam is not None


def _fixes(field, coeffs, g):
    cc = [field.coerce(int(c)) for c in coeffs]
    return _proportional(field, quartic.substitute(field, cc, g), cc)


def _closure(field, gens, cap):
    seen = {}
    ident = Mat3.identity(field).proj_normalized()
    seen[ident.key()] = ident
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                w = (g * h).proj_normalized()
                k = w.key()
                if k not in seen:
                    if len(seen) >= cap:
                        raise AssertionError("closure exceeded expected order")
                    seen[k] = w
                    nxt.append(w)
        frontier = nxt
    return tuple(seen.values())

def _verified(token, field, n, coeffs, gens, order):
    for g in gens:
        if not _fixes(field, coeffs, g):
            raise AssertionError(f"{token}: generator does not fix the curve")
    elems = _closure(field, gens, order)
    if len(elems) != order:
        raise AssertionError(f"{token}: closure has size {len(elems)}, want {order}")
    return AutDescriptor(token, field, n, tuple(gens), elems, order)


@lru_cache(maxsize=None)
def _zeta_degree(p, n):
    d = 1
    while pow(p, d, n) != 1:
        d += 1
    return d


def _perm_cycle(field):
    o, l = field.zero, field.one
    return Mat3.from_rows(field, ((o, l, o), (o, o, l), (l, o, o)))


def _perm_swap_xy(field):
    o, l = field.zero, field.one
    return Mat3.from_rows(field, ((o, l, o), (l, o, o), (o, o, l)))


def _kernel_vec(field, rows):
    """One nonzero kernel vector of an n x 4 system, by elimination."""
    m = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for c in range(4):
        pr = None
        for i in range(r, len(m)):
            if not m[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inv()
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(4) if c not in piv_cols]
    assert free, "no kernel"
    fc = free[0]
    vec = [field.zero] * 4
    vec[fc] = field.one
    for i, c in enumerate(piv_cols):
        vec[c] = -m[i][fc]
    return vec


def _mobius_involution(field, pairs):
    """PGL2 element swapping both point pairs; points are (u, v) tuples."""
    conds = []
    for s, t in pairs:
        for a, b in ((s, t), (t, s)):
            u, v = a
            up, vp = b
            # (u', v') = M (u, v): cross product vanishes
            conds.append((vp * u, vp * v, -(up * u), -(up * v)))
    vec = _kernel_vec(field, conds[:3])
    al, be, ga, de = vec
    M = ((al, be), (ga, de))
    for s, t in pairs:
        u, v = s
        img = (al * u + be * v, ga * u + de * v)
        up, vp = t
        assert (img[0] * vp - img[1] * up).is_zero(), "interpolation failed"
    return M


def _binary_quartic_ratio(field, q, M):
    """Scalar k with q(M(y,z)) = k q(y,z) for a binary quartic, or None."""
    (al, be), (ga, de) = M
    out = [field.zero] * 5
    for j, c in enumerate(q):
        if c.is_zero():
            continue
        e = 4 - j
        poly = {(0, 0): field.one}
        for ent, cnt in (((al, be), e), ((ga, de), j)):
            for _ in range(cnt):
                nxt = {}
                for (dy, dz), v in poly.items():
                    for step, w in ((1, ent[0]), (0, ent[1])):
                        if w.is_zero():
                            continue
                        kk = (dy + step, dz + (1 - step))
                        nxt[kk] = nxt.get(kk, field.zero) + v * w
                poly = nxt
        for (dy, dz), v in poly.items():
            out[dz] = out[dz] + c * v
    lam = None
    for a, b in zip(out, q):
        if b.is_zero() != a.is_zero():
            return None
        if not b.is_zero():
            t = a * b.inv()
            if lam is None:
                lam = t
            elif t != lam:
                return None
    return lam


_EXT_TRIALS = (1, 2, 3, 4, 6, 8, 12, 24)


def _lift_pgl2(field, M, q):
    """Extend a (y:z) symmetry to the quartic x^4 + q(y,z) z-free model."""
    k = _binary_quartic_ratio(field, q, M)
    assert k is not None, "matrix does not permute the binary quartic roots"
    rts = field.nth_roots(k, 4)
    if not rts:
        return None
    mu = rts[0]
    (al, be), (ga, de) = M
    o = field.zero
    return Mat3.from_rows(field, ((mu, o, o), (o, al, be), (o, ga, de)))


def _binary_quartic(field, coeffs):
    """Coefficients of f(0, y, z) as [y^4, y^3 z, ..., z^4]."""
    return [field.coerce(int(coeffs[i])) for i in (10, 11, 12, 13, 14)]


def _aut_cyclic_diag(token, p, coeffs, zeta_n, exps, order):
    n = _zeta_degree(p, zeta_n)
    field = ext_field(p, n)
    z = field.zeta(zeta_n)
    g = Mat3.diag(field, z ** exps[0], z ** exps[1], z ** exps[2])
    return _verified(token, field, n, coeffs, (g,), order)


def _aut_c2(p, coeffs):
    field = ext_field(p, 1)
    g = Mat3.diag(field, -field.one, field.one, field.one)
    return _verified("c2", field, 1, coeffs, (g,), 2)


def _aut_c6(p, coeffs):
    n = _zeta_degree(p, 3)
    field = ext_field(p, n)
    z = field.zeta(3)
    g = Mat3.diag(field, z, -field.one, field.one)
    return _verified("c6", field, n, coeffs, (g,), 6)


def _aut_s3(p, coeffs):
    n = _zeta_degree(p, 3)
    field = ext_field(p, n)
    z = field.zeta(3)
    g1 = Mat3.diag(field, z, z * z, field.one)
    return _verified("s3", field, n, coeffs, (g1, _perm_swap_xy(field)), 6)


def _aut_s4(p, coeffs):
    field = ext_field(p, 1)
    gens = (_perm_cycle(field), _perm_swap_xy(field),
            Mat3.diag(field, -field.one, field.one, field.one))
    return _verified("s4", field, 1, coeffs, gens, 24)


def _aut_d8(p, coeffs):
    b = int(coeffs[14])
    assert b % p, "z^4 coefficient must be nonzero on smooth fibers"
    for n in (1, 2, 4):
        if (p ** n - 1) % 4:
            continue
        field = ext_field(p, n)
        rts = field.nth_roots(b, 4)
        if not rts:
            continue
        r = rts[0]
        i4 = field.zeta(4)
        S = Mat3.diag(field, field.one, i4, -i4)
        o = field.zero
        T = Mat3.from_rows(field, ((field.one, o, o), (o, o, r), (o, r.inv(), o)))
        return _verified("d8", field, n, coeffs, (S, T), 8)
    raise AssertionError("d8: no fourth root found in any admissible extension")


def _aut_g16(p, coeffs):
    a = int(coeffs[13])
    assert a % p, "degenerate fiber reached the template stage"
    for n in _EXT_TRIALS:
        if (p ** n - 1) % 4:
            continue
        field = ext_field(p, n)
        ws = field.roots([field.coerce(a), field.coerce(a), field.zero, field.one])
        if len(ws) != 3:
            continue
        inf = (field.one, field.zero)
        pts = [(w, field.one) for w in ws]
        q = _binary_quartic(field, coeffs)
        gens = [Mat3.diag(field, field.zeta(4), field.one, field.one)]
        ok = True
        for j in range(3):
            others = [pts[t] for t in range(3) if t != j]
            M = _mobius_involution(field, ((inf, pts[j]), tuple(others)))
            g = _lift_pgl2(field, M, q)
            if g is None:
                ok = False
                break
            gens.append(g)
        if not ok:
            continue
        return _verified("g16", field, n, coeffs, tuple(gens), 16)
    raise AssertionError("g16: template construction failed")


def _aut_g48(p, coeffs):
    for n in _EXT_TRIALS:
        if (p ** n - 1) % 12:
            continue
        field = ext_field(p, n)
        z3 = field.zeta(3)
        gens = [Mat3.diag(field, field.zeta(4), field.one, field.one),
                Mat3.diag(field, field.one, z3, field.one)]
        inf = (field.one, field.zero)
        one = (field.one, field.one)
        q = _binary_quartic(field, coeffs)
        M = _mobius_involution(
            field, ((inf, one), ((z3, field.one), (z3 * z3, field.one))))
        g = _lift_pgl2(field, M, q)
        if g is None:
            continue
        gens.append(g)
        return _verified("g48", field, n, coeffs, tuple(gens), 48)
    raise AssertionError("g48: template construction failed")


def _aut_g96(p, coeffs):
    n = _zeta_degree(p, 4)
    field = ext_field(p, n)
    i4 = field.zeta(4)
    gens = (Mat3.diag(field, i4, field.one, field.one),
            Mat3.diag(field, field.one, i4, field.one),
            _perm_cycle(field), _perm_swap_xy(field))
    return _verified("g96", field, n, coeffs, gens, 96)


def _aut_g168(p, coeffs):
    n = _zeta_degree(p, 7)
    field = ext_field(p, n)
    z = field.zeta(7)
    gens = [Mat3.diag(field, z, z ** 4, z ** 2), _perm_cycle(field)]
    trips = [(z ** (4 * t) - z ** (3 * t), z ** (2 * t) - z ** (5 * t),
              z ** t - z ** (6 * t)) for t in range(1, 7)]
    for trip in trips:
        for a, b, c in itertools.permutations(trip):
            g = Mat3.from_rows(field, ((a, b, c), (b, c, a), (c, a, b)))
            if _fixes(field, coeffs, g):
                gens.append(g)
                break
        if len(gens) == 3:
            break
    else:
        raise AssertionError("g168: no circulant generator fixes the curve")
    return _verified("g168", field, n, coeffs, tuple(gens), 168)


def _conjugated_klein_four(token, p, coeffs, field, n, gamma, diags):
    gi = gamma.inv()
    for left, right in ((gamma, gi), (gi, gamma)):
        gens = [left * d * right for d in diags]
        if all(_fixes(field, coeffs, g) for g in gens):
            return _verified(token, field, n, coeffs, tuple(gens), 4)
    raise AssertionError(f"{token}: conjugated involutions do not fix the curve")


def _aut_d4(p, coeffs, fam):
    if fam == 0:
        a = int(coeffs[0]) - 3
        b = (4 * a * a + 4 * a - int(coeffs[1])) * fp_inv(8, p)
        c = (int(coeffs[2]) - 4 * b) * fp_inv(12, p)
        a, b, c = a % p, b % p, c % p
        for n in (1, 2, 3, 6):
            field = ext_field(p, n)
            rts = field.roots([-field.coerce(c), field.coerce(b),
                               -field.coerce(a), field.one])
            if len(rts) != 3:
                continue
            r, s, t = rts
            gamma = Mat3.from_rows(field, (
                (field.one, r, s * t),
                (field.one, s, t * r),
                (field.one, t, r * s)))
            assert not gamma.det().is_zero(), "repeated resolvent root"
            l = field.one
            diags = (Mat3.diag(field, l, -l, -l), Mat3.diag(field, -l, l, -l))
            return _conjugated_klein_four("d4", p, coeffs, field, n, gamma, diags)
        raise AssertionError("d4: resolvent cubic did not split")
    a, b = int(coeffs[10]), (int(coeffs[10]) ** 2 - int(coeffs[5])) * fp_inv(2, p) % p
    for n in (1, 2):
        field = ext_field(p, n)
        rts = field.roots([field.coerce(b), -field.coerce(a), field.one])
        if len(rts) != 2:
            continue
        r, s = rts
        o, l = field.zero, field.one
        gamma = Mat3.from_rows(field, ((l, o, o), (o, l, r), (o, l, s)))
        assert not gamma.det().is_zero(), "repeated quadratic root"
        diags = (Mat3.diag(field, l, -l, l), Mat3.diag(field, l, l, -l))
        return _conjugated_klein_four("d4", p, coeffs, field, n, gamma, diags)
    raise AssertionError("d4: quadratic did not split")


def aut_generators(p, token, coeffs, fam=0):
    """Verified automorphism group data for a census survivor.

    coeffs is the 15-vector as emitted by the stratum's shape; fam is the
    shape id (only the D4 stratum branches on it).  Every template is
    checked at runtime: generators fix the curve, closure has the stratum's
    order.  Failure raises, it never degrades silently.
    """
    coeffs = np.asarray(coeffs, dtype=np.uint8)
    if token == "triv":
        field = ext_field(p, 1)
        return AutDescriptor("triv", field, 1, (),
                             (Mat3.identity(field).proj_normalized(),), 1)
    if token == "c2":
        return _aut_c2(p, coeffs)
    if token == "c3":
        return _aut_cyclic_diag("c3", p, coeffs, 3, (1, 0, 0), 3)
    if token == "c6":
        return _aut_c6(p, coeffs)
    if token == "c9":
        return _aut_cyclic_diag("c9", p, coeffs, 9, (1, 3, 6), 9)
    if token == "s3":
        return _aut_s3(p, coeffs)
    if token == "s4":
        return _aut_s4(p, coeffs)
    if token == "d8":
        return _aut_d8(p, coeffs)
    if token == "d4":
        return _aut_d4(p, coeffs, fam)
    if token == "g16":
        return _aut_g16(p, coeffs)
    if token == "g48":
        return _aut_g48(p, coeffs)
    if token == "g96":
        return _aut_g96(p, coeffs)
    if token == "g168":
        return _aut_g168(p, coeffs)
    raise KeyError(f"unknown stratum token {token!r}")


def expected_counts(p):
    """Published per-stratum class counts: token -> (geometric, arithmetic).

    Bracket terms apply only under the stated congruence on p.  The
    geometric column must sum to p^6 + 1; a "total" entry carries the two
    grand totals.
    """
    assert p > 7
    in7 = p % 7 in (1, 2, 4)
    q12, q9, q4, q3 = p % 12, p % 9, p % 4, p % 3
    geo = {
        "g168": 1,
        "g96": 1,
        "g48": 1,
        "c9": 1,
        "c6": p - 2,
        "s4": p - 4 - (2 if in7 else 0),
        "g16": p - 2,
        "s3": p * p - 3 * p + 4 + (2 if in7 else 0),
        "c3": p * p - p,
        "d8": p * p - 4 * p + 6 + (2 if in7 else 0),
        "d4": p ** 3 - 3 * p ** 2 + 5 * p - 5,
        "c2": p ** 4 - 2 * p ** 3 + 2 * p ** 2 - 3 * p + 1 - (2 if in7 else 0),
        "triv": p ** 6 - p ** 4 + p ** 3 - 2 * p ** 2 + 3 * p - 1,
    }
    arith = {
        "g168": 4 + (2 if in7 else 0),
        "g96": 6 + (4 if q4 == 1 else 0),
        "g48": 4 + {1: 10, 5: 2, 7: 4}.get(q12, 0),
        "c9": 1 + {1: 8, 4: 2, 7: 6}.get(q9, 0),
        "c6": 2 * (1 + (2 if q3 == 1 else 0)) * geo["c6"],
        "s4": 5 * geo["s4"],
        "g16": 2 * (2 * (p - 3) + ((p - 2) if q4 == 1 else 0)),
        "s3": 3 * geo["s3"],
        "c3": (1 + (2 if q3 == 1 else 0)) * geo["c3"],
        "d8": 4 * geo["d8"] - 3 * p + 8,
        "d4": 2 * p ** 3 - 8 * p ** 2 + 17 * p - 19,
        "c2": 2 * geo["c2"],
        "triv": p ** 6 - p ** 4 + p ** 3 - 2 * p ** 2 + 3 * p - 1,
    }
    assert sum(geo.values()) == p ** 6 + 1
    out = {s.token: (geo[s.token], arith[s.token]) for s in STRATA}
    out["total"] = (sum(geo.values()), sum(arith.values()))
    return out
