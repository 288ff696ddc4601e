import itertools
import random
from pathlib import Path

import pytest

from wittlab.errors import ParameterMismatch
from wittlab.rings import GF, ZZ, Zmod
from wittlab.witt import (
    WittVector,
    gen_universal_polys,
    padic_to_witt,
    poly_text_lines,
    witt_to_padic,
)

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "polys"
GOLDEN_GRID = [(2, n) for n in (1, 2, 3, 4)] + \
              [(3, n) for n in (1, 2, 3)] + \
              [(5, n) for n in (1, 2)]
KINDS = ("sum", "product", "negation", "frobenius")

rng = random.Random(20260814)


def rand_witt(p, n, ring=ZZ, lo=-9, hi=9):
    return WittVector(p, ring, tuple(rng.randint(lo, hi) for _ in range(n)))


# ---------------------------------------------------------------------------
# universal polynomials and golden files


@pytest.mark.parametrize("p,n", GOLDEN_GRID)
@pytest.mark.parametrize("kind", KINDS)
def test_golden_files(p, n, kind):
    path = GOLDEN_DIR / f"p{p}_n{n}_{kind}.txt"
    want = path.read_bytes()
    got = "".join(line + "\n" for line in poly_text_lines(p, n, kind))
    assert got.encode() == want


def test_poly_spot_values():
    s = gen_universal_polys(2, 2, "sum")
    assert s[1].text() == "x1 + y1 - x0*y0"
    pr = gen_universal_polys(2, 2, "product")
    assert pr[1].text() == "2*x1*y1 + x0^2*y1 + x1*y0^2"
    f = gen_universal_polys(3, 2, "frobenius")
    assert f[0].text() == "3*a1 + a0^3"
    ng = gen_universal_polys(2, 2, "negation")
    assert ng[1].text() == "-x1 - x0^2"


@pytest.mark.parametrize("p,n", GOLDEN_GRID)
def test_frobenius_congruence(p, n):
    # f_m reduces to a_{m-1}^p modulo p
    for m, q in enumerate(gen_universal_polys(p, n, "frobenius"), start=1):
        reduced = {e: c % p for e, c in q.terms.items() if c % p}
        expo = [0] * len(q.variables)
        expo[q.variables.index(f"a{m - 1}")] = p
        assert reduced == {tuple(expo): 1}


def test_unknown_kind_rejected():
    with pytest.raises(ParameterMismatch):
        poly_text_lines(2, 2, "quotient")


# ---------------------------------------------------------------------------
# ghost maps: the defining identities, exact over Z


@pytest.mark.parametrize("p", (2, 3, 5))
def test_ghost_homomorphism_random(p):
    for trial in range(200):
        n = rng.randint(1, 4)
        u = rand_witt(p, n)
        v = rand_witt(p, n)
        gu, gv = u.ghost(), v.ghost()
        assert (u + v).ghost() == [a + b for a, b in zip(gu, gv)]
        assert (u * v).ghost() == [a * b for a, b in zip(gu, gv)]
        assert (-u).ghost() == [-a for a in gu]
        if n >= 2:
            assert u.frobenius().ghost() == gu[1:]
            assert u.restriction().ghost() == gu[:-1]
        assert u.verschiebung().ghost() == [0] + [p * a for a in gu]


def test_ghost_values_by_hand():
    u = WittVector(2, ZZ, (3, 5))
    assert u.ghost() == [3, 3 ** 2 + 2 * 5]
    v = WittVector(3, ZZ, (1, 2, 1))
    assert v.ghost() == [1, 1 + 6, 1 + 3 * 2 ** 3 + 9]


# ---------------------------------------------------------------------------
# ring axioms through the universal polynomials


def test_ring_axioms_random_over_z():
    p = 2
    for trial in range(60):
        n = rng.randint(1, 3)
        u, v, w = (rand_witt(p, n, lo=-5, hi=5) for _ in range(3))
        zero = WittVector.zero(p, ZZ, n)
        one = WittVector.one(p, ZZ, n)
        assert u + v == v + u
        assert (u + v) + w == u + (v + w)
        assert u * v == v * u
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w
        assert u + zero == u
        assert u * one == u
        assert u - u == zero


def test_ring_axioms_exhaustive_small_field():
    r = GF(2)
    vecs = [WittVector(2, r, c)
            for c in itertools.product(r.elements(), repeat=2)]
    for u, v in itertools.product(vecs, repeat=2):
        assert u + v == v + u
        assert u * v == v * u
    zero = WittVector.zero(2, r, 2)
    for u in vecs:
        assert u + (-u) == zero


def test_operator_identities_random():
    p = 3
    for trial in range(50):
        n = rng.randint(2, 4)
        u = rand_witt(p, n, lo=-5, hi=5)
        v = rand_witt(p, n, lo=-5, hi=5)
        # R is a ring map
        assert (u + v).restriction() == u.restriction() + v.restriction()
        assert (u * v).restriction() == u.restriction() * v.restriction()
        # F is a ring map
        assert (u + v).frobenius() == u.frobenius() + v.frobenius()
        assert (u * v).frobenius() == u.frobenius() * v.frobenius()
        # V is additive, and V(a)b = V(a F(b))
        ur = u.restriction()
        vr = v.restriction()
        assert (ur + vr).verschiebung() == ur.verschiebung() + vr.verschiebung()
        assert ur.verschiebung() * v == (ur * v.frobenius()).verschiebung()
        # FR = RF in W_{n-1} after one more restriction
        if n >= 3:
            assert u.frobenius().restriction() == u.restriction().frobenius()


def test_teichmuller_multiplicative():
    for p in (2, 3, 5):
        for a in range(-4, 5):
            for b in range(-4, 5):
                ta = WittVector.teichmuller(p, ZZ, a, 3)
                tb = WittVector.teichmuller(p, ZZ, b, 3)
                assert ta * tb == WittVector.teichmuller(p, ZZ, a * b, 3)


# ---------------------------------------------------------------------------
# exhaustive structure over prime fields


def vf_scalar(u):
    # p * id as repeated addition
    out = u
    for _ in range(u.p - 1):
        out = out + u
    return out


@pytest.mark.parametrize("p,n", ((2, 3), (3, 2)))
def test_vf_fv_equal_p(p, n):
    r = Zmod(p)
    for comps in itertools.product(range(p), repeat=n):
        u = WittVector(p, r, comps)
        vf = u.frobenius().verschiebung()
        fv = u.verschiebung().frobenius()
        pu = vf_scalar(u)
        assert vf == pu
        assert fv == pu


@pytest.mark.parametrize("p,n", ((2, 3), (3, 2)))
def test_image_v_is_kernel_r(p, n):
    # im(V^k: W_{n-k} -> W_n) = ker(R^{n-k}: W_n -> W_k) exhaustively
    r = Zmod(p)
    for k in range(1, n):
        image = set()
        for comps in itertools.product(range(p), repeat=n - k):
            u = WittVector(p, r, comps)
            for _ in range(k):
                u = u.verschiebung()
            image.add(u.comps)
        kernel = set()
        for comps in itertools.product(range(p), repeat=n):
            u = WittVector(p, r, comps)
            w = u
            for _ in range(n - k):
                w = w.restriction()
            if w == WittVector.zero(p, r, k):
                kernel.add(u.comps)
        assert image == kernel


# ---------------------------------------------------------------------------
# the p-adic isomorphism, exhaustively


@pytest.mark.parametrize("p,n", ((2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (5, 3)))
def test_padic_iso_exhaustive(p, n):
    r = Zmod(p)
    seen = set()
    for comps in itertools.product(range(p), repeat=n):
        u = WittVector(p, r, comps)
        x = witt_to_padic(u)
        assert 0 <= x < p ** n
        seen.add(x)
        assert padic_to_witt(p, x, n) == u
    assert len(seen) == p ** n
    # ring homomorphism on both operations
    for xa, xb in itertools.product(range(p ** n), repeat=2):
        ua = padic_to_witt(p, xa, n)
        ub = padic_to_witt(p, xb, n)
        assert witt_to_padic(ua + ub) == (xa + xb) % p ** n
        assert witt_to_padic(ua * ub) == (xa * xb) % p ** n


def test_padic_unit_and_teichmuller():
    assert witt_to_padic(WittVector.one(3, Zmod(3), 3)) == 1
    # Teichmuller lift of 2 in Z/27 is the cube root of unity times -1: 26
    t = WittVector.teichmuller(3, Zmod(3), 2, 3)
    x = witt_to_padic(t)
    assert pow(x, 3, 27) == x
    assert x % 3 == 2


# ---------------------------------------------------------------------------
# guards


def test_mixed_length_rejected():
    u = WittVector(2, ZZ, (1, 2))
    v = WittVector(2, ZZ, (1, 2, 3))
    with pytest.raises(ParameterMismatch):
        u + v
    with pytest.raises(ParameterMismatch):
        u * WittVector(3, ZZ, (1, 2))


def test_composite_p_rejected():
    with pytest.raises(ParameterMismatch):
        WittVector(4, ZZ, (1, 2))
    with pytest.raises(ParameterMismatch):
        gen_universal_polys(6, 2, "sum")


def test_frobenius_needs_length_two():
    u = WittVector(2, ZZ, (1,))
    with pytest.raises(ParameterMismatch):
        u.frobenius()
    with pytest.raises(ParameterMismatch):
        u.restriction()
