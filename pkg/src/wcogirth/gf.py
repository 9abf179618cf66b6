"""Arithmetic in small finite fields GF(q), q = p^m <= 32.

Elements are the integers ``0..q-1``.  For ``m > 1`` the base-``p`` digits of
an element (least significant first) are the coefficients of a polynomial of
degree ``< m``, constant term first, reduced modulo a fixed irreducible monic
polynomial.  The modulus is the smallest irreducible monic polynomial of degree
``m`` when monic polynomials are ordered by their integer encoding (highest
degree coefficient compared first), so ``GF(8)`` uses ``x^3 + x + 1``.

Full addition, multiplication, negation and inverse tables are built once per
field; the tables are what the enumeration kernels index into.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import FieldError

MAX_ORDER = 32

__all__ = [
    "FieldSpec",
    "field_spec",
    "gf_add",
    "gf_sub",
    "gf_neg",
    "gf_mul",
    "gf_inv",
    "gf_pow",
    "is_irreducible",
    "prime_power",
]


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` and ``p`` prime, or ``None``."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    return (p, m) if rest == 1 else None


def _poly_divmod_rem(num: list[int], den: list[int], p: int) -> list[int]:
    # Remainder of num / den over GF(p); den monic; coefficient lists constant-first.
    num = list(num)
    dd = len(den) - 1
    for shift in range(len(num) - 1 - dd, -1, -1):
        c = num[shift + dd] % p
        if c:
            for i, d in enumerate(den):
                num[shift + i] = (num[shift + i] - c * d) % p
    rem = num[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        value, d = divmod(value, p)
        out.append(d)
    return out


def is_irreducible(coeffs: tuple[int, ...] | list[int], p: int) -> bool:
    """Exhaustive irreducibility test of a monic polynomial over GF(p).

    ``coeffs`` is constant-term first with leading coefficient 1.  Trial
    division by every monic polynomial of degree ``1..deg//2``; only meant for
    the tiny degrees used here.
    """
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] % p != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if not _poly_divmod_rem(list(coeffs), divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in range(p**m):
        cand = tuple(_digits(low, p, m) + [1])
        if is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


def _build_tables(p: int, m: int, modulus: tuple[int, ...] | None):
    q = p**m
    digits = [_digits(a, p, m) for a in range(q)]

    def encode(ds):
        v = 0
        for d in reversed(ds):
            v = v * p + d
        return v

    add = tuple(
        tuple(encode([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q))
        for a in range(q)
    )
    neg = tuple(encode([(-x) % p for x in digits[a]]) for a in range(q))
    if m == 1:
        mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    else:
        rows = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = [0] * (2 * m - 1)
                for i, x in enumerate(digits[a]):
                    if x:
                        for j, y in enumerate(digits[b]):
                            prod[i + j] = (prod[i + j] + x * y) % p
                rem = _poly_divmod_rem(prod, list(modulus), p)
                row.append(encode(rem + [0] * (m - len(rem))))
            rows.append(tuple(row))
        mul = tuple(rows)
    inv = [0] * q
    for a in range(1, q):
        inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
    return add, neg, mul, tuple(inv)


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^m) together with its arithmetic tables.

    Build instances through :func:`field_spec`, which caches one object per
    order.  Equality only looks at ``(p, m, modulus)``.
    """

    p: int
    m: int
    modulus: tuple[int, ...] | None = None
    add: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    neg: tuple[int, ...] = field(init=False, repr=False, compare=False)
    mul: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    inv: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if prime_power(self.p) != (self.p, 1) or self.m < 1:
            raise FieldError(f"invalid field parameters p={self.p}, m={self.m}")
        if self.m == 1:
            if self.modulus is not None:
                raise FieldError("prime fields carry no modulus")
        elif self.modulus is None or len(self.modulus) != self.m + 1 or not is_irreducible(
            self.modulus, self.p
        ):
            raise FieldError(f"modulus {self.modulus} is not irreducible of degree {self.m}")
        add, neg, mul, inv = _build_tables(self.p, self.m, self.modulus)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "inv", inv)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element of GF({self.q})")
        return a

    def __str__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_spec(q: int) -> FieldSpec:
    """Return the canonical :class:`FieldSpec` for GF(q).

    Raises:
        FieldError: ``q`` is not a prime power or lies outside ``2..32``.
    """
    pm = prime_power(q) if isinstance(q, int) else None
    if pm is None:
        raise FieldError(f"{q!r} is not a prime power")
    if q > MAX_ORDER:
        raise FieldError(f"GF({q}) is outside the supported range 2..{MAX_ORDER}")
    p, m = pm
    return FieldSpec(p, m, _smallest_irreducible(p, m) if m > 1 else None)


def gf_add(F: FieldSpec, a: int, b: int) -> int:
    return F.add[F.check(a)][F.check(b)]


def gf_neg(F: FieldSpec, a: int) -> int:
    return F.neg[F.check(a)]


def gf_sub(F: FieldSpec, a: int, b: int) -> int:
    return F.add[F.check(a)][F.neg[F.check(b)]]


def gf_mul(F: FieldSpec, a: int, b: int) -> int:
    return F.mul[F.check(a)][F.check(b)]


def gf_inv(F: FieldSpec, a: int) -> int:
    if F.check(a) == 0:
        raise ZeroDivisionError("zero has no multiplicative inverse")
    return F.inv[a]


def gf_pow(F: FieldSpec, a: int, e: int) -> int:
    """``a**e`` in the field; negative exponents use the inverse."""
    F.check(a)
    if e < 0:
        a, e = gf_inv(F, a), -e
    out = 1
    while e:
        if e & 1:
            out = F.mul[out][a]
        a = F.mul[a][a]
        e >>= 1
    return out
