"""Exact arithmetic in finite fields GF(p^n).

An element is identified with an integer index in [0, q): index i encodes
the polynomial whose coefficient of x^k is the k-th base-p digit of i
(constant term first).  A field is a concrete presentation: the modulus
polynomial is part of its identity, so two presentations of GF(9) built
from different irreducible quadratics compare unequal.

Arithmetic is table-driven for small fields and computed digit-wise for
larger ones; either path is exact.
"""

from __future__ import annotations

import itertools

from .errors import (
    CapExceeded,
    FieldMismatch,
    NonPrimeCharacteristic,
    ReduciblePolynomial,
    ZeroInverse,
)

MAX_FIELD_SIZE = 2 ** 16

# Full operation tables are built below this size; q**2 entries per table.
_TABLE_MAX = 256


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    f = 3
    while f * f <= k:
        if k % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over Z_p; coefficient lists are constant-term first
# ---------------------------------------------------------------------------

def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, b, p):
    """Remainder of a divided by b over Z_p; b need not be monic."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        factor = (a[-1] * inv_lead) % p
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
        a = _poly_trim(a)
    return a


def _poly_eval(c, t, p):
    acc = 0
    for coeff in reversed(c):
        acc = (acc * t + coeff) % p
    return acc


def _is_irreducible(coeffs, p):
    """Irreducibility of a monic polynomial over Z_p.

    Degree <= 3 reduces to a root search; higher degrees add trial
    division by every monic irreducible of degree <= deg/2.
    """
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for t in range(p):
        if _poly_eval(coeffs, t, p) == 0:
            return False
    if deg <= 3:
        return True
    for e in range(2, deg // 2 + 1):
        for divisor in _monic_irreducibles(p, e):
            if not _poly_mod(list(coeffs), list(divisor), p):
                return False
    return True


def _monic_irreducibles(p, deg):
    """All monic irreducibles of the given degree, ascending lexicographic
    by coefficient tuple (constant term first)."""
    for low in itertools.product(range(p), repeat=deg):
        cand = tuple(low) + (1,)
        if _is_irreducible(cand, p):
            yield cand


def default_modulus(p: int, n: int) -> tuple:
    """The lexicographically smallest monic irreducible of degree n over Z_p,
    comparing coefficient tuples constant-term first."""
    for cand in _monic_irreducibles(p, n):
        return cand
    raise RuntimeError(f"no irreducible of degree {n} over Z_{p}")  # unreachable


# ---------------------------------------------------------------------------
# field presentation
# ---------------------------------------------------------------------------

class FieldSpec:
    """A concrete presentation GF(p^n) = Z_p[x]/(modulus).

    Immutable after construction; equality and hashing go by (p, n, modulus),
    so independently built presentations interoperate.
    """

    def __init__(self, p: int, n: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p!r} is not prime")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"extension degree must be a positive integer, got {n!r}")
        q = p ** n
        if q > MAX_FIELD_SIZE:
            raise CapExceeded(f"field size {q} exceeds the construction cap {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = default_modulus(p, n)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {n} (constant term first)")
            if not _is_irreducible(modulus, p):
                raise ReduciblePolynomial(f"{poly_str(modulus)} factors over Z_{p}")
        self.p = p
        self.n = n
        self.q = q
        self.modulus = modulus
        if q <= _TABLE_MAX:
            self._build_tables()
        else:
            self._add_t = self._mul_t = self._neg_t = self._inv_t = None

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.p, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.n == 1:
            return f"FieldSpec(GF({self.q}))"
        return f"FieldSpec(GF({self.q}) = Z_{self.p}[x]/({poly_str(self.modulus)}))"

    def __str__(self):
        return f"GF({self.q})"

    # -- index <-> coefficient conversions ----------------------------------

    def coeffs(self, index: int) -> tuple:
        """Base-p digits of the index, constant term first, length n."""
        out = []
        for _ in range(self.n):
            out.append(index % self.p)
            index //= self.p
        return tuple(out)

    def index(self, coeffs) -> int:
        acc = 0
        for c in reversed(list(coeffs)):
            acc = acc * self.p + (c % self.p)
        return acc

    # -- raw arithmetic on element indices -----------------------------------

    def _add_raw(self, a, b):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.n):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _neg_raw(self, a):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.n):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def _mul_raw(self, a, b):
        p = self.p
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        conv = [0] * (2 * self.n - 1)
        for i, ai in enumerate(ca):
            if ai:
                for j, bj in enumerate(cb):
                    conv[i + j] = (conv[i + j] + ai * bj) % p
        mod = self.modulus
        for k in range(len(conv) - 1, self.n - 1, -1):
            c = conv[k]
            if c:
                conv[k] = 0
                for j in range(self.n):
                    conv[k - self.n + j] = (conv[k - self.n + j] - c * mod[j]) % p
        return self.index(conv[: self.n])

    def _build_tables(self):
        q = self.q
        self._add_t = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._mul_t = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        self._neg_t = [self._neg_raw(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.pow(a, q - 2)
        self._inv_t = inv

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self._neg_t is not None:
            return self._neg_t[a]
        return self._neg_raw(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        return self._mul_raw(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul_raw(out, base) if self._mul_t is None else self._mul_t[out][base]
            base = self._mul_raw(base, base) if self._mul_t is None else self._mul_t[base][base]
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        if self._inv_t is not None:
            return self._inv_t[a]
        return self.pow(a, self.q - 2)

    # -- element construction ------------------------------------------------

    def element(self, index: int) -> "FieldElement":
        """The element with the given integer index in [0, q)."""
        if not 0 <= index < self.q:
            raise ValueError(f"element index {index} out of range for {self}")
        return FieldElement(self, index)

    def of_int(self, k: int) -> "FieldElement":
        """Canonical image of the integer k, i.e. k copies of 1 summed."""
        return FieldElement(self, k % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def all_elements(self):
        """All q elements exactly once, ascending by integer index."""
        return [FieldElement(self, i) for i in range(self.q)]


def make_field(p: int, n: int = 1, modulus=None) -> FieldSpec:
    """Construct GF(p**n).

    When the modulus is omitted, the lexicographically smallest monic
    irreducible of degree n is selected (constant-term-first comparison),
    which is deterministic across runs.
    """
    return FieldSpec(p, n, modulus)


class FieldElement:
    """A value-like element of one FieldSpec; immutable and hashable."""

    __slots__ = ("field", "index")

    def __init__(self, field: FieldSpec, index: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple:
        return self.field.coeffs(self.index)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.index
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._coerce(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self.field.inv(self._coerce(other))))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.index == other.index
        )

    def __hash__(self):
        return hash((self.field, self.index))

    def __str__(self):
        if self.field.n == 1:
            return str(self.index)
        return poly_str(self.coeffs)

    def __repr__(self):
        return f"<{self} : {self.field}>"


def poly_str(coeffs) -> str:
    """Human form of a coefficient tuple (constant first), descending powers."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            var = "x" if k == 1 else f"x^{k}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) if terms else "0"
