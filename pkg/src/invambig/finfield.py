"""Exact arithmetic in finite fields GF(p^n).

Elements are stored as integers ``c_0 + c_1 p + ... + c_{n-1} p^{n-1}`` where
``c_0 + c_1 X + ... + c_{n-1} X^{n-1}`` is the reduced polynomial
representative.  Ascending integer value is the canonical element order, so
GF(4) enumerates as ``0, 1, X, X+1``.

Prime fields use plain modular integers.  Extension fields multiply through
discrete log tables that are built on first use; with ``q <= 2**20`` these
stay small.
"""

from __future__ import annotations

import functools
import itertools
from functools import cached_property
from typing import Iterator, Optional, Sequence

MAX_ORDER = 2**20


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class DegreeZero(FieldError):
    pass


class Overflow(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class ZeroInverse(FieldError, ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic trial division; inputs here never exceed 2**20."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return ``(p, n)`` with ``q == p**n`` or None if q is not a prime power."""
    if q < 2:
        return None
    f = prime_factors(q)
    if len(f) != 1:
        return None
    p, n = f[0], 0
    while q > 1:
        q //= p
        n += 1
    return p, n


# polynomials over GF(p): coefficient lists, low degree first, no trailing zeros

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    m = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(m)]
    return _trim(out)


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    lead_inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_mod(out, f, p)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` (low degree first) over GF(p)."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**n, f, p), x, p):
        return False
    for r in prime_factors(n):
        h = _poly_sub(_poly_powmod(x, p ** (n // r), f, p), x, p)
        if len(_poly_gcd(f, h, p)) != 1:
            return False
    return True


def has_root(f: Sequence[int], p: int) -> bool:
    return any(sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0 for x in range(p))


class FieldSpec:
    """The field GF(p^n) presented as GF(p)[X] / (modulus).

    ``modulus`` is monic of degree n, coefficients low degree first.  Instances
    are immutable and compare by ``(p, n, modulus)``.
    """

    __slots__ = ("p", "n", "modulus", "q", "__dict__")

    def __init__(self, p: int, n: int, modulus: Sequence[int]):
        if n < 1:
            raise DegreeZero(f"extension degree must be >= 1, got {n}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p**n > MAX_ORDER:
            raise Overflow(f"q = {p}^{n} exceeds {MAX_ORDER}")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {n}")
        if n > 1 and not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "q", p**n)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={self.modulus})"

    @property
    def label(self) -> str:
        return str(self.p) if self.n == 1 else f"{self.p}^{self.n}"

    # conversions

    def coeffs(self, value: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            value, c = divmod(value, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.n:
            coeffs = _poly_mod(list(coeffs), self.modulus, self.p)
        value = 0
        for c in reversed(list(coeffs)):
            value = value * self.p + c % self.p
        return value

    def __call__(self, value) -> "FieldElement":
        """Element from an integer (embedded as ``value mod p``), a
        coefficient sequence, or another element of this field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.from_coeffs(value))

    def element(self, index: int) -> "FieldElement":
        """Element at position ``index`` of the canonical order."""
        if not 0 <= index < self.q:
            raise IndexError(f"index {index} out of range for GF({self.q})")
        return FieldElement(self, index)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.q))

    def parse(self, text: str) -> "FieldElement":
        parts = [int(t) for t in text.replace(" ", "").split(",")]
        if len(parts) == 1:
            return self(parts[0])
        if len(parts) > self.n:
            raise FieldError(f"too many coefficients for GF({self.label})")
        return self(parts)

    def format(self, value: int) -> str:
        if self.n == 1:
            return str(value)
        return ",".join(str(c) for c in self.coeffs(value))

    # raw arithmetic on integer encodings

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.n == 1:
            return (a + b) % p
        out, scale = 0, 1
        for _ in range(self.n):
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.n == 1:
            return -a % p
        out, scale = 0, 1
        for _ in range(self.n):
            a, x = divmod(a, p)
            out += (-x % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        if self.n == 1:
            return pow(a, -1, self.p)
        exp, log = self._tables
        return exp[-log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.n == 1:
            return pow(a, e, self.p)
        exp, log = self._tables
        return exp[log[a] * e % (self.q - 1)]

    def _polymul(self, a: int, b: int) -> int:
        c = _poly_mulmod(list(self.coeffs(a)), list(self.coeffs(b)), self.modulus, self.p)
        return self.from_coeffs(c)

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        """exp/log tables relative to the least primitive element."""
        q = self.q
        cofactors = [(q - 1) // r for r in prime_factors(q - 1)]
        for g in range(2, q):
            gc = list(self.coeffs(g))
            if all(_poly_powmod(gc, e, self.modulus, self.p) != [1] for e in cofactors):
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise FieldError("no primitive element found")
        exp = [1] * (q - 1)
        for k in range(1, q - 1):
            exp[k] = self._polymul(exp[k - 1], g)
        log = [0] * q
        for k, v in enumerate(exp):
            log[v] = k
        return exp, log

    @cached_property
    def square_roots(self) -> dict[int, tuple[int, ...]]:
        """Map every square to its square roots, by squaring each element."""
        roots: dict[int, list[int]] = {}
        for y in range(self.q):
            roots.setdefault(self.mul(y, y), []).append(y)
        return {k: tuple(v) for k, v in roots.items()}


class FieldElement:
    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        self.spec = spec
        self.value = value

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(b, self.spec.inv(self.value)))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.q, self.value))

    def __lt__(self, other: "FieldElement"):
        return self.value < other.value

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.coeffs(self.value)

    def __str__(self):
        return self.spec.format(self.value)

    def __repr__(self):
        return f"GF({self.spec.label})({self})"


@functools.lru_cache(maxsize=None)
def field_make(p: int, n: int = 1) -> FieldSpec:
    """Build GF(p^n) using the least monic irreducible modulus.

    Candidates X^n + c_{n-1} X^{n-1} + ... + c_0 are ordered by the integer
    ``sum c_i p^i`` (so the highest coefficients weigh most, the same order
    as element encoding): GF(8) gets X^3 + X + 1, not X^3 + X^2 + 1.
    For ``n == 1`` the modulus is X.
    """
    if n < 1:
        raise DegreeZero(f"extension degree must be >= 1, got {n}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p**n > MAX_ORDER:
        raise Overflow(f"q = {p}^{n} exceeds {MAX_ORDER}")
    if n == 1:
        return FieldSpec(p, 1, (0, 1))
    for high in itertools.product(range(p), repeat=n):
        f = high[::-1] + (1,)
        if f[0] == 0:
            continue
        if n <= 3:
            ok = not has_root(f, p)
        else:
            ok = is_irreducible(f, p)
        if ok:
            return FieldSpec(p, n, f)
    raise FieldError(f"no irreducible polynomial of degree {n} over GF({p})")  # pragma: no cover


def field_from_order(q: int) -> FieldSpec:
    pp = prime_power(q)
    if pp is None:
        raise NotPrime(f"{q} is not a prime power")
    return field_make(*pp)


def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise FieldMismatch("operands belong to different fields")
    return a.spec


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.add(a.value, b.value))


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.mul(a.value, b.value))


def field_neg(a: FieldElement) -> FieldElement:
    return -a


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def is_nonzero_square(a: FieldElement, method: str = "euler") -> bool:
    """True iff ``a != 0`` and ``a == b*b`` for some b.

    ``method="euler"`` tests ``a^((q-1)/2) == 1`` for odd q; ``"scan"`` looks
    the value up in the table of all squares.  In characteristic 2 squaring is
    a bijection, so every nonzero element qualifies.
    """
    if a.value == 0:
        return False
    spec = a.spec
    if method == "scan":
        return a.value in spec.square_roots
    if method != "euler":
        raise ValueError(f"unknown method {method!r}")
    if spec.p == 2:
        return True
    return spec.pow(a.value, (spec.q - 1) // 2) == 1


def sqrt_of_minus_one(spec: FieldSpec) -> Optional[FieldElement]:
    """Least element whose square is -1, or None when q = 3 mod 4."""
    if spec.p == 2:
        return spec.one
    if spec.q % 4 == 3:
        return None
    target = spec.neg(1)
    for v in range(spec.q):
        if spec.mul(v, v) == target:
            return FieldElement(spec, v)
    raise FieldError("no square root of -1 found")  # pragma: no cover


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    return list(spec.elements())
