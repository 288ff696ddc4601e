"""Free associative algebra over the integers on letters x0, x1, ...

Elements are integer combinations of words; multiplication concatenates.
Words print dot-separated, ``x0.x0.x1``.  The cyclic rotation moves the
last letter to the front, matching the rotation on tensor words used by
the Tate-construction operators.
"""

from .errors import ParameterMismatch
from .poly import MultiPoly


def word_text(word):
    """Dot-joined form of a letter-index tuple.

    >>> word_text((0, 0, 1))
    'x0.x0.x1'
    >>> word_text(())
    '1'
    """
    if not word:
        return "1"
    return ".".join(f"x{i}" for i in word)


class FreeAlgElt:
    """Finite integer combination of words in a fixed alphabet.

    >>> x0 = FreeAlgElt.letter(2, 0)
    >>> x1 = FreeAlgElt.letter(2, 1)
    >>> ((x0 + x1) * (x0 + x1)).text()
    'x0.x0 + x0.x1 + x1.x0 + x1.x1'
    >>> (x0 * x1 - x1 * x0).rotate().text()
    '-x0.x1 + x1.x0'
    """

    __slots__ = ("nletters", "terms")

    def __init__(self, nletters, terms=None):
        self.nletters = nletters
        clean = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if any(not 0 <= ch < nletters for ch in word):
                raise ParameterMismatch(f"letter out of range in {word}")
            c = clean.get(word, 0) + coeff
            if c:
                clean[word] = c
            elif word in clean:
                del clean[word]
        self.terms = clean

    @classmethod
    def zero(cls, nletters):
        return cls(nletters, {})

    @classmethod
    def one(cls, nletters):
        return cls(nletters, {(): 1})

    @classmethod
    def letter(cls, nletters, i):
        return cls(nletters, {(i,): 1})

    def _coerce(self, other):
        if isinstance(other, int):
            return FreeAlgElt(self.nletters, {(): other})
        if isinstance(other, FreeAlgElt):
            if other.nletters != self.nletters:
                raise ParameterMismatch("alphabet size mismatch")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return FreeAlgElt(self.nletters, out)

    __radd__ = __add__

    def __neg__(self):
        return FreeAlgElt(self.nletters, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return FreeAlgElt.zero(self.nletters)
            return FreeAlgElt(
                self.nletters, {w: c * other for w, c in self.terms.items()}
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        return FreeAlgElt(self.nletters, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ParameterMismatch("exponent must be a nonnegative integer")
        out = FreeAlgElt.one(self.nletters)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.nletters, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self, degree=None):
        lengths = {len(w) for w in self.terms}
        if degree is not None:
            return lengths <= {degree}
        return len(lengths) <= 1

    def component(self, degree):
        """The degree-homogeneous part (word length = degree)."""
        return FreeAlgElt(
            self.nletters,
            {w: c for w, c in self.terms.items() if len(w) == degree},
        )

    def rotate(self, j=1):
        """Apply the last-to-front rotation j times to every word."""
        out = {}
        for w, c in self.terms.items():
            if w:
                k = j % len(w)
                w = w[-k:] + w[:-k] if k else w
            out[w] = out.get(w, 0) + c
        return FreeAlgElt(self.nletters, out)

    def norm_sum(self, r):
        """id + rotate + ... + rotate^(r-1) applied to this element."""
        out = FreeAlgElt.zero(self.nletters)
        for j in range(r):
            out = out + self.rotate(j)
        return out

    def abelianize(self):
        """Image in the commutative polynomial ring, letters to variables."""
        variables = tuple(f"x{i}" for i in range(self.nletters))
        terms = {}
        for w, c in self.terms.items():
            e = [0] * self.nletters
            for ch in w:
                e[ch] += 1
            e = tuple(e)
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(variables, terms)

    def sorted_terms(self):
        """Terms ordered by word length, then lexicographically."""
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def text(self):
        """Canonical text, e.g. ``x0.x0.x1 + x0.x1.x1``."""
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = word_text(w) if w else ""
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
        return f"FreeAlgElt({self.text()!r})"
