"""Exact arithmetic in the cyclotomic field Q(omega), omega = exp(2*pi*i/k).

Values are canonical residues modulo the k-th cyclotomic polynomial, stored
on the power basis {1, omega, ..., omega^(phi(k) - 1)} with Fraction
coefficients.  Reduction mod x^k - 1 alone would not give a field (that
quotient has zero divisors), so exponent folding mod k is only a transient
first step and every visible value is divided down by Phi_k.  Equality and
hashing are structural on the reduced coefficient vector.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidArgumentError

__all__ = [
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "euler_phi",
    "poly_divmod",
    "poly_mul",
]


def euler_phi(k: int) -> int:
    """Count of 1 <= i <= k coprime to k; the degree of Phi_k."""
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"euler_phi needs an integer k >= 1, got {k!r}")
    return sum(1 for i in range(1, k + 1) if gcd(i, k) == 1)


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Product of integer polynomials, coefficients lowest degree first."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Long division of integer polynomials by a monic divisor."""
    den = _trim(list(den))
    if not den or den[-1] != 1:
        raise InvalidArgumentError("polynomial divisor must be monic")
    work = list(num)
    deg = len(den) - 1
    if len(work) - 1 < deg:
        return (), _trim(work)
    quotient = [0] * (len(work) - deg)
    for e in range(len(work) - 1, deg - 1, -1):
        c = work[e]
        if c:
            quotient[e - deg] = c
            for i, dc in enumerate(den):
                work[e - deg + i] -= c * dc
    return _trim(quotient), _trim(work)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[int, ...]:
    """Coefficients of Phi_k, lowest degree first.

    Computed exactly by dividing x^k - 1 by the product of Phi_d over the
    proper divisors d of k; the division is integer-exact because every
    cyclotomic polynomial is monic with integer coefficients.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"cyclotomic polynomial needs an integer k >= 1, got {k!r}")
    if k == 1:
        return (-1, 1)
    divisor = (1,)
    for d in range(1, k):
        if k % d == 0:
            divisor = poly_mul(divisor, cyclotomic_polynomial(d))
    x_k_minus_one = (-1,) + (0,) * (k - 1) + (1,)
    quotient, remainder = poly_divmod(x_k_minus_one, divisor)
    if remainder:
        raise ArithmeticError(f"cyclotomic division left a remainder for k={k}")
    return quotient


def _reduce_mod_phi(k: int, folded: list[Fraction]) -> tuple[Fraction, ...]:
    # folded has length k (exponents already taken mod k); divide by Phi_k
    phi = cyclotomic_polynomial(k)
    deg = len(phi) - 1
    work = list(folded)
    if len(work) < deg:
        work.extend([Fraction(0)] * (deg - len(work)))
    for e in range(len(work) - 1, deg - 1, -1):
        c = work[e]
        if c:
            for i in range(deg):
                work[e - deg + i] -= c * phi[i]
            work[e] = Fraction(0)
    return tuple(work[:deg])


class CyclotomicNumber:
    """An element of Q(omega_k) on the canonical power basis.

    The constructor accepts a polynomial in omega of any degree (rational
    coefficients, lowest degree first) and reduces it: exponents fold mod k
    since omega^k = 1, then the result is reduced mod Phi_k.  Two values are
    equal exactly when their reduced coefficient vectors are equal; a value
    also compares equal to a plain int or Fraction when it is rational.
    """

    __slots__ = ("_k", "_coeffs")

    def __init__(self, k: int, coeffs: Iterable = ()) -> None:
        if not isinstance(k, int) or k < 1:
            raise InvalidArgumentError(f"cyclotomic order must be an integer >= 1, got {k!r}")
        folded = [Fraction(0)] * k
        for exponent, c in enumerate(coeffs):
            if c:
                folded[exponent % k] += Fraction(c)
        self._k = k
        self._coeffs = _reduce_mod_phi(k, folded)

    @property
    def k(self) -> int:
        return self._k

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Reduced coefficients on {1, omega, ..., omega^(phi(k)-1)}."""
        return self._coeffs

    @classmethod
    def zero(cls, k: int) -> "CyclotomicNumber":
        return cls(k)

    @classmethod
    def one(cls, k: int) -> "CyclotomicNumber":
        return cls(k, (1,))

    @classmethod
    def from_rational(cls, k: int, value) -> "CyclotomicNumber":
        return cls(k, (Fraction(value),))

    @classmethod
    def root_of_unity(cls, k: int, exponent: int) -> "CyclotomicNumber":
        """omega_k ** exponent (any integer exponent)."""
        if not isinstance(k, int) or k < 1:
            raise InvalidArgumentError(f"cyclotomic order must be an integer >= 1, got {k!r}")
        coeffs = [Fraction(0)] * k
        coeffs[exponent % k] = Fraction(1)
        return cls(k, coeffs)

    def is_rational(self) -> "Fraction | None":
        """The value as a Fraction when it lies in Q, else None."""
        if any(self._coeffs[1:]):
            return None
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def _coerce(self, other) -> "CyclotomicNumber | None":
        if isinstance(other, CyclotomicNumber):
            if other._k != self._k:
                raise InvalidArgumentError(
                    f"cyclotomic order mismatch: {self._k} vs {other._k}"
                )
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self._k, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = CyclotomicNumber.zero(self._k)
        out._coeffs = tuple(a + b for a, b in zip(self._coeffs, rhs._coeffs))
        return out

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        out = CyclotomicNumber.zero(self._k)
        out._coeffs = tuple(-a for a in self._coeffs)
        return out

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        conv = [Fraction(0)] * (2 * max(len(self._coeffs), 1))
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(rhs._coeffs):
                    if b:
                        conv[i + j] += a * b
        return CyclotomicNumber(self._k, conv)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CyclotomicNumber":
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidArgumentError("cyclotomic power needs a nonnegative integer")
        result = CyclotomicNumber.one(self._k)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            if other._k == self._k:
                return self._coeffs == other._coeffs
            mine, theirs = self.is_rational(), other.is_rational()
            return mine is not None and mine == theirs
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            mine = self.is_rational()
            return mine is not None and mine == other
        return NotImplemented

    def __hash__(self) -> int:
        rational_value = self.is_rational()
        if rational_value is not None:
            return hash(rational_value)
        return hash((self._k, self._coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self._k}, {[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not any(self._coeffs):
            return "0"
        terms = []
        for exponent, c in enumerate(self._coeffs):
            if not c:
                continue
            if exponent == 0:
                terms.append(str(c))
            else:
                power = "w" if exponent == 1 else f"w^{exponent}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms)

    def as_dict(self) -> dict:
        """JSON form: {"k": k, "coeffs": ["p/q", ...]} on the canonical basis."""
        return {
            "k": self._k,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self._coeffs],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "CyclotomicNumber":
        try:
            k = payload["k"]
            raw = payload["coeffs"]
        except (TypeError, KeyError):
            raise InvalidArgumentError(f"malformed cyclotomic payload: {payload!r}") from None
        coeffs = []
        for item in raw:
            if isinstance(item, str):
                num, _, den = item.partition("/")
                try:
                    coeffs.append(Fraction(int(num), int(den) if den else 1))
                except (ValueError, ZeroDivisionError):
                    raise InvalidArgumentError(f"malformed coefficient: {item!r}") from None
            else:
                coeffs.append(Fraction(item))
        return cls(k, coeffs)
