"""Arithmetic in F_p and its small extensions F_{p^m}.

Elements of F_{p^m} are coefficient tuples (c0, ..., c_{m-1}) in the power
basis of a fixed monic irreducible modulus, constant term first.  The modulus
is the lexicographically smallest irreducible one, coefficient tuples compared
constant term first, so the field constructed for a given (p, m) is identical
across runs.  All other choices made here (subfield embeddings, roots of
polynomials, roots of unity) are deterministic too, which keeps everything
built on top byte stable.

Speed matters only mildly in this module: bulk enumeration work is done in
numpy elsewhere, and these classes serve the per-representative bookkeeping
(automorphism groups, Galois descent), where fields stay small.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


def fp_inv(a, p):
    """Inverse of a modulo p; a must not be divisible by p."""
    a %= p
    assert a != 0
    return pow(a, p - 2, p)


@lru_cache(maxsize=None)
def inv_table(p):
    """uint64 array t of length p with t[a] = a^-1 mod p (t[0] = 0)."""
    t = np.zeros(p, dtype=np.uint64)
    for a in range(1, p):
        t[a] = pow(a, p - 2, p)
    return t


@lru_cache(maxsize=None)
def smallest_nonsquare(p):
    """Least quadratic non-residue modulo an odd prime p."""
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return a
    raise ValueError(f"no non-residue mod {p}")


# Dense univariate polynomials over F_p as int lists, ascending degree.
# Used only to pick field moduli.

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmulmod(a, b, g, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    m = len(g) - 1
    for k in range(len(out) - 1, m - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for j in range(m):
                out[k - m + j] = (out[k - m + j] - c * g[j]) % p
    return _ptrim(out[:m])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    a = _ptrim(list(a))
    b = _ptrim(list(b))
    assert b
    inv = fp_inv(b[-1], p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = a
    while r and len(r) >= len(b):
        c = (r[-1] * inv) % p
        s = len(r) - len(b)
        q[s] = c
        for j in range(len(b)):
            r[s + j] = (r[s + j] - c * b[j]) % p
        _ptrim(r)
    return _ptrim(q), r


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    _ptrim(a)
    _ptrim(b)
    while b:
        inv = fp_inv(b[-1], p)
        m = len(b) - 1
        r = list(a)
        while len(r) - 1 >= m and _ptrim(r):
            c = (r[-1] * inv) % p
            s = len(r) - 1 - m
            for j in range(len(b)):
                r[s + j] = (r[s + j] - c * b[j]) % p
            _ptrim(r)
        a, b = b, r
    return a


def _is_irreducible(g, p):
    """g monic over F_p, degree >= 1."""
    m = len(g) - 1
    if m == 1:
        return True
    h = [0, 1]
    powers = {}
    for k in range(1, m + 1):
        e, acc = p, h
        res = None
        while e:
            if e & 1:
                res = acc if res is None else _pmulmod(res, acc, g, p)
            e >>= 1
            if e:
                acc = _pmulmod(acc, acc, g, p)
        h = res
        powers[k] = h
    xm = list(powers[m])
    while len(xm) < 2:
        xm.append(0)
    xm[1] = (xm[1] - 1) % p
    if _ptrim(xm):
        return False
    for ell in {q for q in range(2, m + 1) if m % q == 0 and _is_prime(q)}:
        hk = list(powers[m // ell])
        while len(hk) < 2:
            hk.append(0)
        hk[1] = (hk[1] - 1) % p
        if len(_pgcd(hk, g, p)) - 1 != 0:
            return False
    return True


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def _lex_min_modulus(p, m):
    if m == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=m):
        if tail[0] == 0:
            continue
        g = list(tail) + [1]
        if _is_irreducible(g, p):
            return tuple(g)
    raise AssertionError("unreachable")


class FieldElt:
    """Element of an ExtField, stored as a coefficient tuple."""

    __slots__ = ("f", "c")

    def __init__(self, field, coeffs):
        self.f = field
        self.c = coeffs

    def __add__(self, other):
        other = self.f.coerce(other)
        p = self.f.p
        return FieldElt(self.f, tuple((a + b) % p for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.f.p
        return FieldElt(self.f, tuple((-a) % p for a in self.c))

    def __sub__(self, other):
        other = self.f.coerce(other)
        p = self.f.p
        return FieldElt(self.f, tuple((a - b) % p for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return self.f.coerce(other) - self

    def __mul__(self, other):
        other = self.f.coerce(other)
        return FieldElt(self.f, self.f._mul(self.c, other.c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.f.coerce(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.f.coerce(other) * self.inv()

    def inv(self):
        return FieldElt(self.f, self.f._inv(self.c))

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        res = self.f.one
        acc = self
        while e:
            if e & 1:
                res = res * acc
            e >>= 1
            if e:
                acc = acc * acc
        return res

    def frob(self, k=1):
        """Image under the p-power Frobenius applied k times."""
        c = self.c
        for _ in range(k % self.f.m if self.f.m > 1 else 0):
            c = self.f._frob(c)
        return FieldElt(self.f, c)

    def norm_to_prime(self):
        """Norm down to F_p, as an int."""
        q = self.f.order
        n = self ** ((q - 1) // (self.f.p - 1)) if not self.is_zero() else self.f.zero
        return n.c[0]

    def is_zero(self):
        return all(a == 0 for a in self.c)

    def lift(self, big, emb=None):
        """This element mapped into the larger field big."""
        return (emb or big.embed_from(self.f))(self)

    def as_int(self):
        assert all(a == 0 for a in self.c[1:]), "element not in prime field"
        return self.c[0]

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.f.coerce(other)
        return isinstance(other, FieldElt) and self.f is other.f and self.c == other.c

    def __hash__(self):
        return hash((id(self.f), self.c))

    def __lt__(self, other):
        return self.c < other.c

    def __repr__(self):
        return f"FieldElt{self.c}"


class ExtField:
    """F_{p^m} with the deterministic lex-smallest modulus."""

    def __init__(self, p, m):
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = _lex_min_modulus(p, m)
        self._red = self._reduction_rows()
        self.zero = FieldElt(self, (0,) * m)
        self.one = FieldElt(self, (1,) + (0,) * (m - 1))
        self.gen = FieldElt(self, tuple(1 if i == 1 else 0 for i in range(m)))
        self._frob_cols = None
        self._embeds = {}
        self._zetas = {}

    def _reduction_rows(self):
        p, m, g = self.p, self.m, self.modulus
        rows = []
        cur = [(-g[j]) % p for j in range(m)]
        rows.append(tuple(cur))
        for _ in range(m - 2):
            nxt = [0] * m
            top = cur[m - 1]
            for j in range(m - 1):
                nxt[j + 1] = cur[j]
            if top:
                for j in range(m):
                    nxt[j] = (nxt[j] + top * rows[0][j]) % p
            rows.append(tuple(nxt))
            cur = nxt
        return rows

    def _mul(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return ((a[0] * b[0]) % p,)
        full = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    full[i + j] += ai * bj
        out = [c % p for c in full[:m]]
        for k in range(m - 1):
            c = full[m + k] % p
            if c:
                row = self._red[k]
                for j in range(m):
                    out[j] = (out[j] + c * row[j]) % p
        return tuple(out)

    def _inv(self, a):
        p, m = self.p, self.m
        assert any(a), "zero has no inverse"
        if m == 1:
            return (fp_inv(a[0], p),)
        r0, r1 = list(self.modulus), _ptrim(list(a))
        s0, s1 = [0], [1]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            qs = _pmul(q, s1, p)
            s = [(x - y) % p for x, y in itertools.zip_longest(s0, qs, fillvalue=0)]
            s0, s1 = s1, _ptrim(s) or [0]
        c = fp_inv(r1[0], p)
        out = [(v * c) % p for v in s1][:m]
        return tuple(out + [0] * (m - len(out)))

    def _frob(self, c):
        if self._frob_cols is None:
            cols = []
            for j in range(self.m):
                xj = [0] * self.m
                xj[j] = 1
                e, acc, res = self.p, tuple(xj), None
                one = [0] * self.m
                one[0] = 1
                res = tuple(one)
                while e:
                    if e & 1:
                        res = self._mul(res, acc)
                    e >>= 1
                    if e:
                        acc = self._mul(acc, acc)
                cols.append(res)
            self._frob_cols = cols
        p = self.p
        out = [0] * self.m
        for j, cj in enumerate(c):
            if cj:
                col = self._frob_cols[j]
                for i in range(self.m):
                    out[i] = (out[i] + cj * col[i]) % p
        return tuple(out)

    def coerce(self, x):
        if isinstance(x, FieldElt):
            assert x.f is self, "element from a different field"
            return x
        assert isinstance(x, int)
        return FieldElt(self, (x % self.p,) + (0,) * (self.m - 1))

    def elt(self, coeffs):
        if isinstance(coeffs, int):
            return self.coerce(coeffs)
        coeffs = tuple(c % self.p for c in coeffs)
        assert len(coeffs) == self.m
        return FieldElt(self, coeffs)

    def elements(self):
        """All field elements in lexicographic coefficient order."""
        for t in itertools.product(range(self.p), repeat=self.m):
            yield FieldElt(self, t)

    def random(self, rng):
        return FieldElt(self, tuple(int(v) for v in rng.integers(self.p, size=self.m)))

    def roots(self, coeffs):
        """Roots in this field of sum(coeffs[i] x^i), sorted lexicographically.

        coeffs are FieldElt of this field, or ints.
        """
        poly = [self.coerce(c) for c in coeffs]
        while poly and poly[-1].is_zero():
            poly.pop()
        assert poly, "zero polynomial"
        if len(poly) == 1:
            return []
        out = []
        if poly[0].is_zero():
            out.append(self.zero)
            while poly[0].is_zero():
                poly.pop(0)
        if len(poly) == 1:
            return sorted(set(out))
        if len(poly) == 2:
            out.append(-(poly[0] * poly[1].inv()))
            return sorted(set(out))
        lead_inv = poly[-1].inv()
        poly = [c * lead_inv for c in poly]
        xq = self._xq_mod(poly)
        lin = self._poly_gcd(self._poly_sub_x(xq), poly)
        out.extend(self._split_linears(lin))
        return sorted(set(out))

    def _poly_sub_x(self, a):
        a = list(a)
        while len(a) < 2:
            a.append(self.zero)
        a[1] = a[1] - self.one
        return a

    def _poly_trim(self, a):
        while a and a[-1].is_zero():
            a.pop()
        return a

    def _poly_mulmod(self, a, b, g):
        out = [self.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        m = len(g) - 1
        for k in range(len(out) - 1, m - 1, -1):
            c = out[k]
            if not c.is_zero():
                out[k] = self.zero
                for j in range(m):
                    out[k - m + j] = out[k - m + j] - c * g[j]
        return self._poly_trim(out[:m]) or [self.zero]

    def _poly_gcd(self, a, b):
        a = self._poly_trim(list(a))
        b = self._poly_trim(list(b))
        while b:
            inv = b[-1].inv()
            r = list(a)
            while self._poly_trim(r) and len(r) >= len(b):
                c = r[-1] * inv
                s = len(r) - len(b)
                for j in range(len(b)):
                    r[s + j] = r[s + j] - c * b[j]
                self._poly_trim(r)
            a, b = b, r
        if a:
            inv = a[-1].inv()
            a = [c * inv for c in a]
        return a

    def _xq_mod(self, g):
        h = [self.zero, self.one]
        if len(g) - 1 <= 1:
            return [self.zero]
        for _ in range(self.m):
            e, acc, res = self.p, h, [self.one]
            while e:
                if e & 1:
                    res = self._poly_mulmod(res, acc, g)
                e >>= 1
                if e:
                    acc = self._poly_mulmod(acc, acc, g)
            h = res
        return h

    def _split_linears(self, g):
        """Roots of g, a product of distinct linear factors."""
        g = self._poly_trim(list(g))
        if len(g) <= 1:
            return []
        if len(g) == 2:
            return [-(g[0] * g[1].inv())]
        half = (self.order - 1) // 2
        for c in self.elements():
            base = [c, self.one]
            e, acc, res = half, base, [self.one]
            while e:
                if e & 1:
                    res = self._poly_mulmod(res, acc, g)
                e >>= 1
                if e:
                    acc = self._poly_mulmod(acc, acc, g)
            w = self._poly_trim([res[0] - self.one] + res[1:])
            d = self._poly_gcd(w, g)
            if 0 < len(d) - 1 < len(g) - 1:
                rest = self._poly_quot(g, d)
                return self._split_linears(d) + self._split_linears(rest)
        raise AssertionError("splitting failed")

    def _poly_quot(self, a, b):
        a = list(a)
        q = [self.zero] * (len(a) - len(b) + 1)
        inv = b[-1].inv()
        while self._poly_trim(a) and len(a) >= len(b):
            c = a[-1] * inv
            s = len(a) - len(b)
            q[s] = c
            for j in range(len(b)):
                a[s + j] = a[s + j] - c * b[j]
            self._poly_trim(a)
        return q

    def embed_from(self, src):
        """Deterministic field embedding src -> self as a callable.

        Picks the lex-smallest root of src's modulus in this field.  Constants
        from F_p map to constants, so any tower built through intermediate
        fields agrees on F_p.
        """
        if src is self:
            return lambda x: x
        key = (src.p, src.m)
        if key not in self._embeds:
            assert src.p == self.p and self.m % src.m == 0
            root = self.roots([int(c) for c in src.modulus])[0]
            powers = [self.one]
            for _ in range(src.m - 1):
                powers.append(powers[-1] * root)
            self._embeds[key] = powers
        powers = self._embeds[key]

        def emb(x):
            assert x.f is src
            acc = self.zero
            for cj, pw in zip(x.c, powers):
                if cj:
                    acc = acc + pw * cj
            return acc

        return emb

    def zeta(self, n):
        """Deterministic primitive n-th root of unity; requires n | p^m - 1."""
        if n in self._zetas:
            return self._zetas[n]
        q = self.order
        assert (q - 1) % n == 0, f"no {n}-th roots of unity in F_{self.p}^{self.m}"
        exp = (q - 1) // n
        pf = sorted({ell for ell in range(2, n + 1) if n % ell == 0 and _is_prime(ell)})
        for y in self.elements():
            if y.is_zero():
                continue
            z = y ** exp
            if any((z ** (n // ell)) == self.one for ell in pf):
                continue
            self._zetas[n] = z
            return z
        raise AssertionError("unreachable")

    def nth_roots(self, a, n):
        """All solutions of x^n = a in this field, sorted; may be empty."""
        coeffs = [-a if isinstance(a, FieldElt) else -self.coerce(a)]
        coeffs += [self.zero] * (n - 1) + [self.one]
        return self.roots(coeffs)

    def __repr__(self):
        return f"ExtField({self.p}, {self.m})"


@lru_cache(maxsize=None)
def ext_field(p, m):
    """The field F_{p^m}; cached so field identity is object identity."""
    return ExtField(p, m)


class Mat3:
    """3x3 matrix over an ExtField, row major."""

    __slots__ = ("f", "a")

    def __init__(self, field, entries):
        self.f = field
        self.a = tuple(field.coerce(e) for e in entries)
        assert len(self.a) == 9

    @classmethod
    def identity(cls, field):
        return cls(field, (1, 0, 0, 0, 1, 0, 0, 0, 1))

    @classmethod
    def diag(cls, field, d0, d1, d2):
        z = field.zero
        return cls(field, (d0, z, z, z, d1, z, z, z, d2))

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, tuple(e for row in rows for e in row))

    def __mul__(self, other):
        assert self.f is other.f
        a, b = self.a, other.a
        out = []
        for i in range(3):
            for j in range(3):
                out.append(a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j])
        return Mat3(self.f, out)

    def scale(self, s):
        s = self.f.coerce(s)
        return Mat3(self.f, tuple(e * s for e in self.a))

    def det(self):
        a = self.a
        return (a[0] * (a[4] * a[8] - a[5] * a[7])
                - a[1] * (a[3] * a[8] - a[5] * a[6])
                + a[2] * (a[3] * a[7] - a[4] * a[6]))

    def inv(self):
        a = self.a
        d = self.det()
        di = d.inv()
        cof = (
            a[4] * a[8] - a[5] * a[7], a[2] * a[7] - a[1] * a[8], a[1] * a[5] - a[2] * a[4],
            a[5] * a[6] - a[3] * a[8], a[0] * a[8] - a[2] * a[6], a[2] * a[3] - a[0] * a[5],
            a[3] * a[7] - a[4] * a[6], a[1] * a[6] - a[0] * a[7], a[0] * a[4] - a[1] * a[3],
        )
        return Mat3(self.f, tuple(c * di for c in cof))

    def frob(self, k=1):
        return Mat3(self.f, tuple(e.frob(k) for e in self.a))

    def transpose(self):
        a = self.a
        return Mat3(self.f, (a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]))

    def matvec(self, v):
        a = self.a
        return tuple(a[3 * i] * v[0] + a[3 * i + 1] * v[1] + a[3 * i + 2] * v[2] for i in range(3))

    def proj_normalized(self):
        """Scaled so the first nonzero entry in row-major order is 1."""
        for e in self.a:
            if not e.is_zero():
                return self.scale(e.inv())
        raise AssertionError("zero matrix")

    def proj_eq(self, other):
        return self.proj_normalized() == other.proj_normalized()

    def is_scalar(self):
        a = self.a
        off = all(a[i].is_zero() for i in (1, 2, 3, 5, 6, 7))
        return off and a[0] == a[4] and a[4] == a[8] and not a[0].is_zero()

    def lift(self, big):
        emb = big.embed_from(self.f)
        return Mat3(big, tuple(emb(e) for e in self.a))

    def key(self):
        return tuple(e.c for e in self.a)

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.f is other.f and self.a == other.a

    def __hash__(self):
        return hash((id(self.f), self.key()))

    def __repr__(self):
        return f"Mat3({self.key()})"
