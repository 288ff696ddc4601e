"""Multivariate polynomials over Z with a canonical text form.

Terms are kept in a dict keyed by exponent tuples.  The canonical
order used for printing and serialization is graded lexicographic:
terms of lower total degree come first, and within a degree the term
whose exponent vector is lexicographically largest (so powers of the
earliest variable win) comes first.  Example: ``x1 + y1 - x0*y0``.

Coefficients are normally Python ints.  The arithmetic never divides,
so ``fractions.Fraction`` coefficients also work; that is used
internally for the p-typical splitting polynomials.  The public
contract for universal Witt polynomials is integer coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotDivisible, ParameterMismatch

_SCALAR = (int, Fraction)


class MultiPoly:
    """A polynomial in a fixed ordered tuple of variables.

    >>> x0, x1 = MultiPoly.gens(["x0", "x1"])
    >>> str(x0 * x0 + 2 * x1)
    '2*x1 + x0^2'
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def const(cls, c, variables):
        variables = tuple(variables)
        if c == 0:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name, variables):
        variables = tuple(variables)
        i = variables.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {e: 1})

    @classmethod
    def gens(cls, variables):
        variables = tuple(variables)
        return [cls.var(v, variables) for v in variables]

    def _check(self, other):
        if self.variables != other.variables:
            raise ParameterMismatch(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        if isinstance(other, _SCALAR):
            other = MultiPoly.const(other, self.variables)
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            nc = t.get(e, 0) + c
            if nc:
                t[e] = nc
            elif e in t:
                del t[e]
        return MultiPoly(self.variables, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, _SCALAR):
            other = MultiPoly.const(other, self.variables)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALAR):
            if other == 0:
                return MultiPoly.zero(self.variables)
            return MultiPoly(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                nc = out.get(key, 0) + ca * cb
                if nc:
                    out[key] = nc
                elif key in out:
                    del out[key]
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        acc = MultiPoly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self):
        """Terms in the canonical (graded lexicographic) order."""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), tuple(-x for x in item[0])),
        )

    def text(self):
        """Canonical text, e.g. ``x1 + y1 - x0*y0``."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.variables, e)
                if k
            )
            mag = c if c > 0 else -c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = text

    def __repr__(self):
        return f"MultiPoly({self.text()!r})"

    def evaluate(self, ring, values):
        """Evaluate in ``ring`` with ``values`` mapping names to elements.

        Integer coefficients go through ``ring.from_int``; Fraction
        coefficients additionally need the denominator invertible.
        """
        order = [values[v] for v in self.variables]
        # memoized powers per variable index
        pows = [{0: ring.one} for _ in order]

        def power(i, k):
            tbl = pows[i]
            if k in tbl:
                return tbl[k]
            half = power(i, k // 2)
            out = ring.mul(half, half)
            if k & 1:
                out = ring.mul(out, order[i])
            tbl[k] = out
            return out

        acc = ring.zero
        for e, c in self.terms.items():
            mono = ring.one
            for i, k in enumerate(e):
                if k:
                    mono = ring.mul(mono, power(i, k))
            acc = ring.add(acc, ring.mul(_coeff_in(ring, c), mono))
        return acc

    def map_variables(self, mapping, new_variables):
        """Rename variables; ``mapping`` sends old names to new names."""
        new_variables = tuple(new_variables)
        idx = {v: i for i, v in enumerate(new_variables)}
        out: dict = {}
        for e, c in self.terms.items():
            ne = [0] * len(new_variables)
            for v, k in zip(self.variables, e):
                if k:
                    ne[idx[mapping[v]]] += k
            key = tuple(ne)
            out[key] = out.get(key, 0) + c
        return MultiPoly(new_variables, out)


def _coeff_in(ring, c):
    if isinstance(c, int):
        return ring.from_int(c)
    # Fraction-like: numerator/denominator attributes
    num = ring.from_int(c.numerator)
    inv = ring.inv_int(c.denominator)
    if isinstance(inv, int):
        inv = ring.from_int(inv)
    return ring.mul(num, inv)


def poly_exact_div(poly: MultiPoly, k: int) -> MultiPoly:
    """Divide every coefficient by the integer ``k``, exactly.

    Raises :class:`NotDivisible` naming the first offending monomial in
    canonical order.

    >>> x, y = MultiPoly.gens(["x", "y"])
    >>> str(poly_exact_div((x + y) ** 2 - x ** 2 - y ** 2, 2))
    'x*y'
    """
    if k == 0:
        raise ZeroDivisionError("division of a polynomial by zero")
    out = {}
    bad = None
    for e, c in poly.terms.items():
        q, r = divmod(c, k)
        if r != 0:
            if bad is None or (sum(e), tuple(-x for x in e)) < bad[0]:
                bad = ((sum(e), tuple(-x for x in e)), e, c)
        else:
            out[e] = q
    if bad is not None:
        _, e, c = bad
        mono = "*".join(
            v if kk == 1 else f"{v}^{kk}"
            for v, kk in zip(poly.variables, e)
            if kk
        ) or "1"
        raise NotDivisible(f"coefficient {c} of {mono} is not divisible by {k}")
    return MultiPoly(poly.variables, out)
