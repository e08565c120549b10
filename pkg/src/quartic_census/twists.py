"""Twists of a smooth plane quartic over F_p.

A curve over F_p with geometric automorphism group G has one twist per
class of G under the twisted conjugation g ~ (alpha^phi)^(-1) g alpha,
phi the p-power Frobenius.  For a class representative A, the
multiplicative form of Hilbert's theorem 90 yields an invertible B over
an extension field with B^phi = B A^(-1), found as
B = P + sum_{i=1}^{m-1} P^(phi^i) A^(phi^(i-1)) ... A^phi A for a random
P, after rescaling the lift of A so the m-fold Frobenius product is the
identity.  The model f o B^(-1) then has coefficients on a single
Frobenius-stable line, and a scalar Hilbert 90 rescales that line into
F_p.  The identity class contributes the input model itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .gf import Mat3, ext_field
from .quartic import substitute, normalize_lead, coeffs_to_ints

MAX_ORDER = 168


@dataclass(frozen=True)
class Twist:
    coeffs: tuple
    aut_order: int


def group_closure(gens):
    """Closure of a projective matrix generator list.

    Returns the identity first and the rest sorted by entry key, so the
    ordering is reproducible no matter how the generators were found.
    """
    assert gens, "need at least one generator"
    field = gens[0].f
    ident = Mat3.identity(field).proj_normalized()
    seen = {ident.key(): ident}
    frontier = [ident]
    norm = [g.proj_normalized() for g in gens]
    while frontier:
        nxt = []
        for h in frontier:
            for g in norm:
                w = (g * h).proj_normalized()
                k = w.key()
                if k not in seen:
                    assert len(seen) < MAX_ORDER, "closure exceeds any quartic group"
                    seen[k] = w
                    nxt.append(w)
        frontier = nxt
    rest = sorted(k for k in seen if k != ident.key())
    return (ident,) + tuple(seen[k] for k in rest)


def _ordered(elements):
    ident = Mat3.identity(elements[0].f).proj_normalized()
    rest = sorted((e.key(), e) for e in elements if e.key() != ident.key())
    return [ident] + [e for _, e in rest]


def frobenius_classes(elements, q):
    """One representative per twisted-conjugacy class, in element order.

    The relation g ~ (alpha^phi)^(-1) g alpha is a single-step equivalence,
    so each class is swept with one pass over the group.
    """
    elems = _ordered(list(elements))
    field = elems[0].f
    assert q == field.p
    index = {e.key() for e in elems}
    visited = set()
    reps = []
    for g in elems:
        if g.key() in visited:
            continue
        reps.append(g)
        for a in elems:
            af = a.frob().proj_normalized()
            assert af.key() in index, "group not stable under Frobenius"
            h = (af.inv() * g * a).proj_normalized()
            visited.add(h.key())
    return reps


def _mat_add(x, y):
    return Mat3(x.f, tuple(a + b for a, b in zip(x.a, y.a)))


def hilbert90(A, q, rng):
    """Coboundary (B, m) for a twisted-conjugacy representative A.

    m is the smallest length for which the Frobenius product
    A^(phi^(m-1)) ... A^phi A is a scalar lying in F_p; the lift is then
    rescaled by a solution of the norm equation so the product is exactly
    the identity, and B = P + sum P^(phi^i) (product up to i) for random P
    over F_{p^m}, retried until invertible.  B^phi = B A^(-1) holds for
    the rescaled lift, which represents the same projective class.
    """
    field = A.f
    p = field.p
    assert q == p
    n = field.m
    pi = A
    m = 1
    while not (pi.is_scalar() and pi.a[0].frob() == pi.a[0]):
        pi = A.frob(m) * pi
        m += 1
        assert m <= n * MAX_ORDER, "no rational scalar Frobenius product"
    c = pi.a[0]
    cinv = int(c.inv().c[0])
    fm = ext_field(p, m)
    while True:
        lam = fm.random(rng)
        if not lam.is_zero() and lam.norm_to_prime() == cinv:
            break
    big = ext_field(p, lcm(m, n))
    emb = big.embed_from(fm)
    a2 = A.lift(big).scale(emb(lam))
    pis = [Mat3.identity(big), a2]
    for i in range(1, m - 1):
        pis.append(a2.frob(i) * pis[i])
    if m > 1:
        assert a2.frob(m - 1) * pis[m - 1] == Mat3.identity(big), "norm fix failed"
    else:
        assert a2 == Mat3.identity(big), "norm fix failed"
    retries = 0
    while True:
        pmat = Mat3(big, tuple(emb(fm.random(rng)) for _ in range(9)))
        b = pmat
        for i in range(1, m):
            b = _mat_add(b, pmat.frob(i) * pis[i])
        if not b.det().is_zero():
            break
        retries += 1
        assert retries <= 64, "coboundary kept coming out singular"
    assert b.frob() == b * a2.inv()
    return b, m


def rational_aut_order(elements, B=None):
    """Order of the automorphism subgroup defined over F_p on a model.

    With no coboundary this inspects the group itself; with B it counts
    elements whose conjugate B a B^(-1) is projectively rational, which is
    the automorphism action carried over to the twisted model.
    """
    count = 0
    if B is None:
        for a in elements:
            w = a.proj_normalized()
            if all(e.frob() == e for e in w.a):
                count += 1
        return count
    big = B.f
    binv = B.inv()
    for a in elements:
        w = (B * a.lift(big) * binv).proj_normalized()
        if all(e.frob() == e for e in w.a):
            count += 1
    return count


def twists_of(p, coeffs, desc, rng):
    """All F_p-models of a curve up to F_p-isomorphism.

    coeffs is the 15-vector over F_p; desc carries the verified
    automorphism elements over F_{p^n}.  Returns one Twist per Frobenius
    class: the model's integer coefficients (first nonzero scaled to 1)
    and the order of its rational automorphism subgroup.
    """
    coeffs = [int(v) for v in coeffs]
    f1 = ext_field(p, 1)
    elems = desc.elements
    ident_key = Mat3.identity(desc.field).proj_normalized().key()
    out = []
    for rep in frobenius_classes(elems, p):
        if rep.key() == ident_key:
            model = coeffs_to_ints(normalize_lead(f1, coeffs))
            out.append(Twist(model, rational_aut_order(elems)))
            continue
        b, _ = hilbert90(rep, p, rng)
        big = b.f
        g = substitute(big, coeffs, b.inv())
        lam = None
        for cg in g:
            if not cg.is_zero():
                lam = cg.frob() * cg.inv()
                break
        for cg in g:
            assert cg.frob() == lam * cg, "twisted model escaped its scalar line"
        while True:
            r = big.random(rng)
            u = big.zero
            nu = big.one
            for _ in range(big.m):
                u = u + nu * r
                r = r.frob()
                nu = lam * nu.frob()
            assert nu == big.one, "Frobenius multiplier has nontrivial norm"
            if not u.is_zero():
                break
        ints = []
        for cg in g:
            v = u * cg
            assert all(a == 0 for a in v.c[1:]), "twist coefficient not rational"
            ints.append(int(v.c[0]))
        model = coeffs_to_ints(normalize_lead(f1, ints))
        out.append(Twist(model, rational_aut_order(elems, b)))
    return out
