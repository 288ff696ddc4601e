"""Splitting the p-power additivity defect into cyclic norm images.

In the free algebra on x0, x1 the defect (x0+x1)^q - x0^q - x1^q with
q = p^n decomposes as a sum of norm images of integral elements c_i of
degree p^i:

    (x0+x1)^q = x0^q + x1^q + sum over i <= n of nu_i(c_i^(p^(n-i)))

where nu_i applies id + rotate + ... + rotate^(p^i - 1) to degree-q
words.  The c_i are not unique; the solver's canonical choice is the
solution supported on lexicographically least rotation representatives.
Abelianizing letters to commuting variables turns nu_i into the scalar
p^i, so the images of the c_i satisfy the integer recursion that also
produces the classical Witt sum polynomials.
"""

from .errors import ParameterMismatch, ResourceLimit
from .freealg import FreeAlgElt
from .poly import MultiPoly, poly_exact_div
from .tate import get_limit, orbit_of_word
from .witt import check_prime


def power_defect(p, n):
    """(x0+x1)^(p^n) minus both diagonal powers, 2^(p^n) words total."""
    x0 = FreeAlgElt.letter(2, 0)
    x1 = FreeAlgElt.letter(2, 1)
    q = p ** n
    return (x0 + x1) ** q - x0 ** q - x1 ** q


def solve_norm_rotation(elt: FreeAlgElt, total: int, degree: int) -> FreeAlgElt:
    """Solve (id + rotate + ... + rotate^(total-1)) x = elt in one degree.

    elt must be homogeneous of the given degree with coefficients
    constant on rotation orbits, and total a multiple of every orbit
    size; the orbit sum then scales each orbit by total/size, which
    must divide the orbit's coefficient for an integral solution.  The
    solution returned is supported on lex-least orbit representatives.
    """
    if not elt.is_homogeneous(degree):
        raise ParameterMismatch("norm solve needs a homogeneous right side")
    seen = set()
    out = {}
    for word, coeff in elt.terms.items():
        if word in seen:
            continue
        orbit = orbit_of_word(word)
        seen.update(orbit)
        size = len(orbit)
        if any(elt.terms.get(w, 0) != coeff for w in orbit):
            raise ParameterMismatch("right side is not rotation invariant")
        if total % size:
            raise ParameterMismatch("orbit size does not divide the norm order")
        mult = total // size
        if coeff % mult:
            raise ParameterMismatch("norm equation has no integral solution")
        out[min(orbit)] = coeff // mult
    return FreeAlgElt(elt.nletters, out)


def solve_nc_c(p: int, upto: int, limit=None):
    """Integral splitting elements c_1 .. c_upto for the power defect.

    c_i is homogeneous of degree p^i; subtracting the norm images of the
    earlier c_i from the defect leaves a norm multiple at each stage.

    >>> [c.text() for c in solve_nc_c(2, 2)]
    ['x0.x1', 'x0.x0.x0.x1 + x0.x0.x1.x1 + x0.x1.x1.x1']
    """
    check_prime(p)
    if upto < 1:
        raise ParameterMismatch("need at least one splitting element")
    bound = limit if limit is not None else get_limit()
    words = 2 ** (p ** upto)
    if words > bound:
        raise ResourceLimit(
            f"2^{p ** upto} degree-{p ** upto} words exceed limit {bound}"
        )
    cs = []
    for n in range(1, upto + 1):
        diff = power_defect(p, n)
        for i, c in enumerate(cs, start=1):
            diff = diff - (c ** (p ** (n - i))).norm_sum(p ** i)
        q = p ** n
        cn = solve_norm_rotation(diff, q, q)
        # construction guarantees the identity; keep the exact check
        if cn.norm_sum(q) != diff:
            raise ParameterMismatch("norm solve failed to reproduce the defect")
        cs.append(cn)
    return cs


def splitting_holds(p: int, cs, n: int) -> bool:
    """Exact expansion check of the degree-p^n splitting identity."""
    x0 = FreeAlgElt.letter(2, 0)
    x1 = FreeAlgElt.letter(2, 1)
    q = p ** n
    rhs = x0 ** q + x1 ** q
    for i in range(1, n + 1):
        rhs = rhs + (cs[i - 1] ** (p ** (n - i))).norm_sum(p ** i)
    return rhs == (x0 + x1) ** q


def comm_c_polys(p: int, upto: int):
    """The unique commutative splitting polynomials in Z[x0, x1].

    Determined degree by degree from
    (x0+x1)^(p^n) = x0^(p^n) + x1^(p^n) + sum of p^i * c_i^(p^(n-i));
    the division by p^n at each stage is exact.

    >>> [c.text() for c in comm_c_polys(2, 2)]
    ['x0*x1', 'x0^3*x1 + x0^2*x1^2 + x0*x1^3']
    """
    check_prime(p)
    x0, x1 = MultiPoly.gens(("x0", "x1"))
    cs = []
    for n in range(1, upto + 1):
        q = p ** n
        rest = (x0 + x1) ** q - x0 ** q - x1 ** q
        for i, c in enumerate(cs, start=1):
            rest = rest - c ** (p ** (n - i)) * (p ** i)
        cs.append(poly_exact_div(rest, q))
    return cs
