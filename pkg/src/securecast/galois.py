"""Exact arithmetic over the finite fields used by the coding pipeline.

Elements are plain integers in [0, q-1] (canonical representatives).
Two families are supported:

- prime fields GF(p) for primes p < 2^16, via modular arithmetic;
- binary extension fields GF(2^m) for m in {1, 4, 8, 16}, via polynomial
  arithmetic modulo a fixed irreducible polynomial.

For m <= 8 multiplication goes through precomputed log/antilog tables;
GF(2^16) multiplies on the fly with shift-and-add.  Array variants of the
operations (``add_arr`` etc.) accept numpy integer arrays holding canonical
values and are the fast path for matrix work.
"""

from __future__ import annotations

import numpy as np

from .errors import FieldMismatchError, UsageError

# Irreducible polynomials, bit i = coefficient of x^i (bit m included).
_BINARY_POLYS = {
    1: 0b11,                 # x + 1
    4: 0b10011,              # x^4 + x + 1
    8: 0b100011011,          # x^8 + x^4 + x^3 + x + 1
    16: 0b10001000000001011,  # x^16 + x^12 + x^3 + x + 1
}

_TABLE_MAX_M = 8


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """One finite field; immutable after construction, safe to share."""

    def __init__(self, q: int, kind: str, m: int = 0, poly: int = 0):
        self.q = q
        self.kind = kind            # "prime" | "binary"
        self.m = m                  # extension degree, binary only
        self.poly = poly            # reduction polynomial, binary only
        self._exp = None
        self._log = None
        if kind == "binary" and m <= _TABLE_MAX_M:
            self._build_tables()

    # -- construction ------------------------------------------------------

    @classmethod
    def prime(cls, p: int) -> "Field":
        if p >= 1 << 16:
            raise UsageError(f"prime field order must be < 2^16, got {p}")
        if not _is_prime(p):
            raise UsageError(f"{p} is not prime")
        return cls(p, "prime")

    @classmethod
    def binary(cls, m: int) -> "Field":
        if m not in _BINARY_POLYS:
            raise UsageError(
                f"binary extension degree must be one of {sorted(_BINARY_POLYS)}, got {m}"
            )
        return cls(1 << m, "binary", m=m, poly=_BINARY_POLYS[m])

    @classmethod
    def parse(cls, spec: str) -> "Field":
        """Build a field from a config string: ``gf256`` or ``prime:257``."""
        s = spec.strip().lower()
        if s.startswith("prime:"):
            try:
                p = int(s.split(":", 1)[1])
            except ValueError:
                raise UsageError(f"bad field spec {spec!r}") from None
            return cls.prime(p)
        if s.startswith("gf"):
            try:
                q = int(s[2:])
            except ValueError:
                raise UsageError(f"bad field spec {spec!r}") from None
            m = q.bit_length() - 1
            if 1 << m != q:
                raise UsageError(f"gf<q> requires a power of two, got {q}")
            return cls.binary(m)
        raise UsageError(f"bad field spec {spec!r} (expected gf<2^m> or prime:<p>)")

    def spec_string(self) -> str:
        return f"gf{self.q}" if self.kind == "binary" else f"prime:{self.q}"

    # -- table setup -------------------------------------------------------

    def _poly_mul(self, a: int, b: int) -> int:
        """Shift-and-add product with reduction, no tables."""
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            if a >> self.m & 1:
                a ^= self.poly
            b >>= 1
        return acc

    def _build_tables(self) -> None:
        q = self.q
        if q == 2:
            # GF(2) multiplication is AND; tables degenerate.
            self._exp = np.array([1, 1], dtype=np.int64)
            self._log = np.array([0, 0], dtype=np.int64)
            return
        for g in range(2, q):
            exp = np.zeros(2 * (q - 1), dtype=np.int64)
            log = np.zeros(q, dtype=np.int64)
            x = 1
            ok = True
            for i in range(q - 1):
                if x == 1 and i > 0:
                    ok = False
                    break
                exp[i] = x
                log[x] = i
                x = self._poly_mul(x, g)
            if ok and x == 1:
                exp[q - 1:] = exp[: q - 1]
                self._exp = exp
                self._log = log
                return
        raise AssertionError(f"no generator found for GF({q}); bad polynomial?")

    # -- validation --------------------------------------------------------

    def validate(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldMismatchError(
                f"{a} is not a canonical element of {self.spec_string()}"
            )
        return a

    # -- scalar operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self.validate(a)
        self.validate(b)
        if self.kind == "prime":
            return (a + b) % self.q
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        self.validate(a)
        self.validate(b)
        if self.kind == "prime":
            return (a - b) % self.q
        return a ^ b

    def neg(self, a: int) -> int:
        self.validate(a)
        if self.kind == "prime":
            return (-a) % self.q
        return a

    def mul(self, a: int, b: int) -> int:
        self.validate(a)
        self.validate(b)
        if self.kind == "prime":
            return a * b % self.q
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            if self.q == 2:
                return a & b
            return int(self._exp[self._log[a] + self._log[b]])
        return self._poly_mul(a, b)

    def inv(self, a: int) -> int:
        self.validate(a)
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self.kind == "prime":
            return pow(a, -1, self.q)
        if self._exp is not None and self.q > 2:
            return int(self._exp[(self.q - 1 - int(self._log[a])) % (self.q - 1)])
        if self.q == 2:
            return 1
        # GF(2^16): a^(q-2) by square and multiply
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    # -- array operations (canonical-valued int arrays, no validation) ------

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.kind == "prime":
            return (a + b) % self.q
        return np.bitwise_xor(a, b)

    def sub_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.kind == "prime":
            return (a - b) % self.q
        return np.bitwise_xor(a, b)

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.kind == "prime":
            return a.astype(np.int64) * b % self.q
        if self._exp is not None:
            if self.q == 2:
                return np.bitwise_and(a, b)
            nz = (a != 0) & (b != 0)
            out = self._exp[self._log[a * nz] + self._log[b * nz]]
            return np.where(nz, out, 0)
        return self._clmul_arr(a, b)

    def _clmul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        acc = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for k in range(self.m):
            acc ^= np.where((b >> k) & 1 == 1, a << k, 0)
        for bit in range(2 * self.m - 2, self.m - 1, -1):
            acc ^= np.where((acc >> bit) & 1 == 1, self.poly << (bit - self.m), 0)
        return acc

    def scale_arr(self, s: int, a: np.ndarray) -> np.ndarray:
        return self.mul_arr(np.int64(self.validate(s)), np.asarray(a))

    # -- misc ----------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.kind, self.q, self.poly) == (other.kind, other.q, other.poly)
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.q, self.poly))

    def __repr__(self) -> str:
        return f"Field({self.spec_string()})"
