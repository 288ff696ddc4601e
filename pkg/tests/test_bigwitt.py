import itertools
import random
from math import gcd
from pathlib import Path

import pytest

from wittlab.bigwitt import (
    BigWitt,
    TruncSeries,
    big_product_text_lines,
    eps_action,
    p_typical_decompose,
)
from wittlab.errors import NotPLocal, ParameterMismatch
from wittlab.rings import GF, ZZ, Zmod

GOLDEN = Path(__file__).resolve().parent.parent / "polys" / "big_product_m6.txt"

rng = random.Random(1729)


def test_golden_product_polys():
    got = "".join(line + "\n" for line in big_product_text_lines(6))
    assert got.encode() == GOLDEN.read_bytes()


def test_ghost_by_hand():
    # w_m = sum over divisors d of m: d * a_d^(m/d)
    v = BigWitt(ZZ, (2, 3, 1, 5))
    assert v.ghost() == [
        2,
        2 ** 2 + 2 * 3,
        2 ** 3 + 3 * 1,
        2 ** 4 + 2 * 3 ** 2 + 4 * 5,
    ]


def test_ghost_of_operations_random():
    for trial in range(120):
        n = rng.randint(1, 6)
        u = BigWitt(ZZ, tuple(rng.randint(-9, 9) for _ in range(n)))
        v = BigWitt(ZZ, tuple(rng.randint(-9, 9) for _ in range(n)))
        gu, gv = u.ghost(), v.ghost()
        assert (u + v).ghost() == [a + b for a, b in zip(gu, gv)]
        assert (u * v).ghost() == [a * b for a, b in zip(gu, gv)]
        assert (-u).ghost() == [-a for a in gu]
        assert (u - u) == BigWitt.zero(ZZ, n)


def test_series_round_trip_random_z():
    for trial in range(80):
        n = rng.randint(1, 6)
        u = BigWitt(ZZ, tuple(rng.randint(-9, 9) for _ in range(n)))
        s = u.to_series()
        assert isinstance(s, TruncSeries)
        assert s.coeffs[0] == ZZ.one
        assert BigWitt.from_series(s) == u


@pytest.mark.parametrize("q", (2, 3))
def test_series_round_trip_exhaustive(q):
    r = GF(q)
    els = list(r.elements())
    for comps in itertools.product(els, repeat=4):
        u = BigWitt(r, comps)
        assert BigWitt.from_series(u.to_series()) == u
    # and from the series side: every unit power series is hit once
    seen = set()
    for comps in itertools.product(els, repeat=4):
        seen.add(BigWitt(r, comps).to_series())
    assert len(seen) == q ** 4


def test_series_addition_is_multiplication():
    # the additive-to-multiplicative dictionary, exact over Z
    for trial in range(40):
        n = rng.randint(1, 6)
        u = BigWitt(ZZ, tuple(rng.randint(-6, 6) for _ in range(n)))
        v = BigWitt(ZZ, tuple(rng.randint(-6, 6) for _ in range(n)))
        assert (u + v).to_series() == u.to_series() * v.to_series()


def test_eps_relations():
    # eps_i eps_j = (ij / lcm(i,j)) eps_lcm(i,j), with eps_k = 0 past the
    # truncation
    n = 8
    for i in range(1, 5):
        for j in range(1, 5):
            lcm = i * j // gcd(i, j)
            e = BigWitt.eps(ZZ, n, i) * BigWitt.eps(ZZ, n, j)
            want = BigWitt.zero(ZZ, n)
            if lcm <= n:
                for _ in range((i * j) // lcm):
                    want = want + BigWitt.eps(ZZ, n, lcm)
            assert e == want


def test_eps_ghost_profile():
    # ghost of eps_i is i at multiples of i and 0 elsewhere
    n = 6
    for i in range(1, 5):
        g = BigWitt.eps(ZZ, n, i).ghost()
        assert g == [i if (m % i == 0) else 0 for m in range(1, n + 1)]


def test_eps_action_matches_multiplication():
    for i in (1, 2, 3):
        for trial in range(20):
            v = BigWitt(ZZ, tuple(rng.randint(-5, 5) for _ in range(6)))
            assert eps_action(i, v) == BigWitt.eps(ZZ, 6, i) * v


def test_p_typical_decomposition():
    # over Z/8 (2-local), length 4: parts indexed by odd n <= 4
    r = Zmod(8)
    v = BigWitt(r, (1, 3, 2, 5))
    parts = p_typical_decompose(2, v)
    assert sorted(parts) == [1, 3]
    assert len(parts[1]) == 3  # 1, 2, 4 <= 4
    assert len(parts[3]) == 1  # 3 <= 4 < 6
    big_ghost = v.ghost()
    for n, w in parts.items():
        cg = w.ghost()
        for j in range(len(w)):
            assert cg[j] == big_ghost[n * 2 ** j - 1]


def test_p_typical_needs_p_local():
    v = BigWitt(ZZ, (1, 2, 3, 4))
    with pytest.raises(NotPLocal):
        p_typical_decompose(2, v)
    v3 = BigWitt(Zmod(9), (1, 2, 3))
    parts = p_typical_decompose(3, v3)
    assert sorted(parts) == [1, 2]


def test_length_mismatch_rejected():
    u = BigWitt(ZZ, (1, 2))
    with pytest.raises(ParameterMismatch):
        u + BigWitt(ZZ, (1, 2, 3))
    with pytest.raises(ParameterMismatch):
        u * BigWitt(Zmod(4), (1, 2))


def test_eps_bounds():
    with pytest.raises(ParameterMismatch):
        BigWitt.eps(ZZ, 4, 0)
    with pytest.raises(ParameterMismatch):
        BigWitt.eps(ZZ, 4, 5)
