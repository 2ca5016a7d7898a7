"""Prime-field polynomial arithmetic under a fixed degree-reverse-lexicographic order.

Monomials are plain exponent tuples.  Polynomials keep their terms sorted in
strictly descending monomial order, so the leading term is ``terms[0]`` and
addition/reduction work by merging sorted term lists.  Coefficients live in a
prime field F_p with canonical representatives in ``[0, p)``.
"""

from __future__ import annotations


MAX_VARS = 32


class RingMismatchError(ValueError):
    """Operands belong to different ring contexts."""


class ExactDivisionError(ValueError):
    """Requested monomial quotient does not exist."""


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_p for an odd prime ``3 <= p < 2**31``.

    Elements are plain ints reduced to ``[0, p)``; the class only carries the
    modulus and the inversion helper.
    """

    __slots__ = ("p",)

    def __init__(self, p):
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"characteristic must be an int, got {p!r}")
        if not (3 <= p < 2**31) or not _is_prime(p) or p == 2:
            raise ValueError(f"characteristic must be an odd prime in [3, 2**31), got {p}")
        self.p = p

    def normalize(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a = a % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a prime field")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# -- monomial helpers --------------------------------------------------------
#
# A monomial over n variables is a length-n tuple of nonnegative ints.  The
# order is degrevlex: higher total degree wins; on equal degrees the monomial
# whose exponent difference has a *negative* last nonzero entry is larger.
# Equivalently the key (deg, -e_n, ..., -e_1) compares lexicographically.


def degrevlex_key(m):
    """Sort key realizing degrevlex: tuples compare like the monomials."""
    return (sum(m), *(-e for e in reversed(m)))


def cmp_degrevlex(a, b):
    """Compare monomials; returns -1, 0 or 1 (Less/Equal/Greater)."""
    if len(a) != len(b):
        raise RingMismatchError(f"monomial arity mismatch: {len(a)} vs {len(b)}")
    if a == b:
        return 0
    return 1 if degrevlex_key(a) > degrevlex_key(b) else -1


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b, strict=True))


def mono_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b, strict=True))


def mono_divides(a, b):
    """True iff ``a`` divides ``b`` componentwise."""
    if len(a) != len(b):
        raise RingMismatchError(f"monomial arity mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exact quotient ``a / b``; raises ExactDivisionError when it does not exist."""
    q = tuple(x - y for x, y in zip(a, b, strict=True))
    if any(e < 0 for e in q):
        raise ExactDivisionError(f"{b} does not divide {a}")
    return q


def mono_degree(m):
    return sum(m)


_NAME_OK = str.isidentifier


class PolyRing:
    """Polynomial ring context: named variables over a prime field, degrevlex.

    Variables are ordered as given, first name largest.  The context caches
    degrevlex keys per monomial since comparisons dominate the run time.
    """

    __slots__ = ("field", "names", "nvars", "zero_mono", "_keys", "_zero")

    def __init__(self, names, field):
        names = tuple(names)
        if not 1 <= len(names) <= MAX_VARS:
            raise ValueError(f"need between 1 and {MAX_VARS} variables, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for nm in names:
            if not _NAME_OK(nm):
                raise ValueError(f"invalid variable name {nm!r}")
        if not isinstance(field, PrimeField):
            field = PrimeField(field)
        self.field = field
        self.names = names
        self.nvars = len(names)
        self.zero_mono = (0,) * len(names)
        self._keys = {}
        self._zero = Polynomial(self, ())

    def key(self, m):
        """Cached degrevlex key of a monomial of this ring."""
        k = self._keys.get(m)
        if k is None:
            if len(m) != self.nvars:
                raise RingMismatchError(f"monomial {m} has wrong arity for {self!r}")
            k = self._keys[m] = (sum(m), *(-e for e in reversed(m)))
        return k

    @property
    def zero(self):
        return self._zero

    def constant(self, c):
        c = c % self.field.p
        if c == 0:
            return self._zero
        return Polynomial(self, ((self.zero_mono, c),))

    def from_dict(self, d):
        """Polynomial from ``{monomial: coefficient}``; zeros dropped, terms sorted."""
        p = self.field.p
        items = []
        for m, c in d.items():
            c %= p
            if c:
                if len(m) != self.nvars:
                    raise RingMismatchError(f"monomial {m} has wrong arity for {self!r}")
                items.append((m, c))
        items.sort(key=lambda t: self.key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def from_terms(self, terms):
        d = {}
        p = self.field.p
        for m, c in terms:
            d[m] = (d.get(m, 0) + c) % p
        return self.from_dict(d)

    def gens(self):
        """The variables as polynomials, in ring order."""
        out = []
        for i in range(self.nvars):
            m = tuple(1 if j == i else 0 for j in range(self.nvars))
            out.append(Polynomial(self, ((m, 1),)))
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and other.names == self.names and other.field == self.field)

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"PolyRing({','.join(self.names)} over F_{self.field.p})"


def _merge_sub(a, b, p, key):
    """``a - b`` for descending term lists sharing one ring."""
    out = []
    append = out.append
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            c = (ca - cb) % p
            if c:
                append((ma, c))
            i += 1
            j += 1
        elif key(ma) > key(mb):
            append(a[i])
            i += 1
        else:
            append((mb, p - cb))
            j += 1
    if i < la:
        out.extend(a[i:])
    while j < lb:
        mb, cb = b[j]
        append((mb, p - cb))
        j += 1
    return out


def _merge_add(a, b, p, key):
    out = []
    append = out.append
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            c = (ca + cb) % p
            if c:
                append((ma, c))
            i += 1
            j += 1
        elif key(ma) > key(mb):
            append(a[i])
            i += 1
        else:
            append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


class Polynomial:
    """Immutable polynomial: a tuple of ``(monomial, coefficient)`` terms in
    strictly descending degrevlex order with no zero coefficients.  The zero
    polynomial has no terms."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self):
        return not self.terms

    @property
    def LM(self):
        """Leading monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def LC(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    @property
    def LT(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        # under degrevlex the leading term has maximal total degree
        return sum(self.terms[0][0])

    def _check(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        self._check(other)
        r = self.ring
        return Polynomial(r, tuple(_merge_add(self.terms, other.terms, r.field.p, r.key)))

    def __sub__(self, other):
        self._check(other)
        r = self.ring
        return Polynomial(r, tuple(_merge_sub(self.terms, other.terms, r.field.p, r.key)))

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, tuple((m, p - c) for m, c in self.terms))

    def mul_term(self, term):
        """Multiply by a single term ``(monomial, coefficient)``.

        Degrevlex is compatible with multiplication, so the term order is
        preserved and no re-sort is needed.
        """
        t, c = term
        p = self.ring.field.p
        c %= p
        if c == 0 or not self.terms:
            return self.ring.zero
        if c == 1:
            return Polynomial(self.ring, tuple((mono_mul(t, m), cf) for m, cf in self.terms))
        return Polynomial(self.ring,
                          tuple((mono_mul(t, m), (c * cf) % p) for m, cf in self.terms))

    def sub_mul(self, c, t, other):
        """``self - c * t * other`` in one merge; the reduction workhorse."""
        self._check(other)
        r = self.ring
        p = r.field.p
        c %= p
        if c == 0:
            return self
        if c == 1:
            shifted = [(mono_mul(t, m), cf) for m, cf in other.terms]
        else:
            shifted = [(mono_mul(t, m), (c * cf) % p) for m, cf in other.terms]
        return Polynomial(r, tuple(_merge_sub(self.terms, shifted, p, r.key)))

    def monic(self):
        """Scale so the leading coefficient is 1; zero stays zero."""
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == 1:
            return self
        p = self.ring.field.p
        s = pow(lc, -1, p)
        return Polynomial(self.ring, tuple((m, (s * c) % p) for m, c in self.terms))

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and other.terms == self.terms and other.ring == self.ring)

    def __hash__(self):
        return hash((self.ring, self.terms))

    def _term_str(self, m, c):
        factors = []
        for name, e in zip(self.ring.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        if not mono:
            return str(c)
        if c == 1:
            return mono
        return f"{c}*{mono}"

    def __str__(self):
        if not self.terms:
            return "0"
        p = self.ring.field.p
        parts = []
        for i, (m, c) in enumerate(self.terms):
            # print representatives above p/2 as negatives: nicer and still parses
            neg = c > p // 2
            body = self._term_str(m, p - c if neg else c)
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<{self} over F_{self.ring.field.p}>"


# Functional aliases for the method-based polynomial operations.

def poly_add(p, q):
    return p + q


def poly_mul_term(p, term):
    return p.mul_term(term)


def poly_make_monic(p):
    return p.monic()
