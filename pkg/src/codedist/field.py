"""Exact arithmetic in GF(q), q = p^e.

Elements are plain ints in ``[0, q)``.  For e > 1 the integer is the
base-p little-endian digit string of a polynomial: ``code = sum(a_j p^j)``
stands for ``sum(a_j x^j)`` reduced modulo the field's modulus.  For e = 1
the code is the residue itself.

Full addition and multiplication tables are built at construction time,
which is why the field size is capped at ``Q_CAP``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

FieldElement = int

# Tables are q x q; 2^10 keeps construction under a couple of seconds.
Q_CAP = 1 << 10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomials over GF(p), coefficient lists low degree first
# ---------------------------------------------------------------------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo a monic b."""
    r = list(a)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _poly_trim(r[:db])


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Brute-force irreducibility: no monic divisor of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over GF(p).

    Coefficients are compared low degree first.  Returned as e+1
    coefficients, low degree first, ending in the leading 1.
    """
    # product() varies the last position fastest, so feed it (a_0, ..., a_{e-1})
    for low in product(range(p), repeat=e):
        poly = low + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise ValueError(f"no irreducible polynomial of degree {e} over GF({p})")


class FieldSpec:
    """The finite field GF(p^e) with a fixed modulus and primitive element.

    Instances are immutable and interned by :func:`make_field`; build them
    through that function rather than directly.
    """

    __slots__ = (
        "p", "e", "q", "modulus", "alpha",
        "_add", "_mul", "_neg", "_inv", "_exp", "_log", "_digits",
    )

    def __init__(self, p: int, e: int) -> None:
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p={p!r} is not prime")
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"extension degree e={e!r} must be >= 1")
        q = p**e
        if q > Q_CAP:
            raise ValueError(f"q={q} exceeds the supported field size cap {Q_CAP}")
        set_ = object.__setattr__
        set_(self, "p", p)
        set_(self, "e", e)
        set_(self, "q", q)
        set_(self, "modulus", smallest_irreducible(p, e) if e > 1 else None)

        digits = [tuple((c // p**j) % p for j in range(e)) for c in range(q)]
        set_(self, "_digits", digits)
        weights = [p**j for j in range(e)]

        def encode(ds: Sequence[int]) -> int:
            return sum(d * w for d, w in zip(ds, weights))

        if e == 1:
            add = [[(a + b) % p for b in range(q)] for a in range(q)]
        elif p == 2:
            add = [[a ^ b for b in range(q)] for a in range(q)]
        else:
            add = [
                [encode([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)]
                for a in range(q)
            ]
        neg = [encode([(-x) % p for x in digits[a]]) for a in range(q)]

        mod = self.modulus

        def mulmod(a: int, b: int) -> int:
            if e == 1:
                return a * b % p
            da, db = digits[a], digits[b]
            prod = [0] * (2 * e - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
            return encode(_poly_mod(prod, mod, p))

        def order(a: int) -> int:
            # smallest t | q-1 with a^t = 1, via the prime factors of q-1
            t = q - 1
            for r in prime_factors(q - 1):
                while t % r == 0 and _pow(a, t // r) == 1:
                    t //= r
            return t

        def _pow(a: int, n: int) -> int:
            result, base = 1, a
            while n:
                if n & 1:
                    result = mulmod(result, base)
                base = mulmod(base, base)
                n >>= 1
            return result

        alpha = next(a for a in range(1, q) if order(a) == q - 1)
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = mulmod(exp[i - 1], alpha)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            la = log[a]
            row = mul[a]
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % (q - 1)]
        inv = [0] + [exp[(-log[a]) % (q - 1)] for a in range(1, q)]

        set_(self, "alpha", alpha)
        set_(self, "_add", tuple(tuple(r) for r in add))
        set_(self, "_mul", tuple(tuple(r) for r in mul))
        set_(self, "_neg", tuple(neg))
        set_(self, "_inv", tuple(inv))
        set_(self, "_exp", tuple(exp))
        set_(self, "_log", tuple(log))

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __reduce__(self):
        return (make_field, (self.p, self.e))

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.e == 1 else f"GF({self.p}^{self.e})"

    # -- element arithmetic -------------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError(f"0 has no inverse in {self!r}")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        t = 1
        x = a
        while x != 1:
            x = self._mul[x][a]
            t += 1
        return t

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def digits(self, a: int) -> tuple[int, ...]:
        """Polynomial coefficients of a, low degree first."""
        return self._digits[a]

    # -- vectors (tuples of element codes) ----------------------------------

    def scale(self, c: int, v: Sequence[int]) -> tuple[int, ...]:
        row = self._mul[c]
        return tuple(row[x] for x in v)

    def axpy(self, c: int, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        """y + c*x."""
        add, row = self._add, self._mul[c]
        return tuple(add[b][row[a]] for a, b in zip(x, y))

    def vadd(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        add = self._add
        return tuple(add[a][b] for a, b in zip(x, y))

    def combine(self, coeffs: Sequence[int], rows: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
        """sum(c_i * rows_i) as a length-n vector."""
        acc = (0,) * n
        for c, r in zip(coeffs, rows):
            if c:
                acc = self.axpy(c, r, acc)
        return acc

    def vectors(self, length: int) -> Iterator[tuple[int, ...]]:
        """All q^length tuples, index 0 varying fastest."""
        for t in product(range(self.q), repeat=length):
            yield t[::-1]


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """Build (and intern) GF(p^e)."""
    return FieldSpec(p, e)


def field_of_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"q={q} is not a prime power")
    p = ps[0]
    e = 0
    r = q
    while r > 1:
        r //= p
        e += 1
    return make_field(p, e)
