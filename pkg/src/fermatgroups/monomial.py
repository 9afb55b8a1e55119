"""Finite monomial groups preserving the k-th power form x_1^k + ... + x_n^k.

For k >= 3 the linear symmetries of the form are generalized permutation
matrices whose nonzero entries are k-th roots of unity: row i holds
omega^(l_i) in column sigma(i).  An element is therefore the pair
(sigma, l), and the group law needs only permutation composition plus
integer exponent arithmetic mod k; dense cyclotomic matrices appear solely
in verification oracles.  The resulting group has order k^n * n!.  k = 2 is
excluded: the quadratic form has an infinite symmetry group and belongs to
the circle and hyperbola modules.

Enumerations and orbits are capped.  The default cap is 10**6 elements,
overridable per call or through the FERMAT_ORBIT_LIMIT environment variable.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .cyclotomic import CyclotomicNumber
from .errors import InvalidArgumentError, ResourceLimitError

__all__ = [
    "DEFAULT_ELEMENT_LIMIT",
    "ENV_LIMIT",
    "MonomialMatrix",
    "RationalSubgroupReport",
    "cyclo_vector",
    "element_limit",
    "enumerate_group",
    "form_value",
    "group_order",
    "orbit",
    "orbit_rational_points",
    "rational_elements",
    "stabilizer",
]

DEFAULT_ELEMENT_LIMIT = 10**6
ENV_LIMIT = "FERMAT_ORBIT_LIMIT"

CyclotomicVector = tuple[CyclotomicNumber, ...]


def element_limit(override: "int | None" = None) -> int:
    """Effective enumeration cap: explicit override, else env var, else default."""
    if override is not None:
        if not isinstance(override, int) or override < 1:
            raise InvalidArgumentError(f"element limit must be a positive integer, got {override!r}")
        return override
    raw = os.environ.get(ENV_LIMIT)
    if raw is None:
        return DEFAULT_ELEMENT_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise InvalidArgumentError(f"{ENV_LIMIT} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidArgumentError(f"{ENV_LIMIT} must be positive, got {value}")
    return value


def _check_order(k) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or k < 3:
        raise InvalidArgumentError(f"monomial groups need an integer k >= 3, got {k!r}")
    return k


class MonomialMatrix:
    """One monomial symmetry: permutation sigma plus exponent vector l mod k.

    As a matrix, entry (i, j) is omega^(l_i) when j = sigma(i) and 0
    otherwise.  Stored exponents are always reduced mod k, so structural
    equality of the pairs coincides with matrix equality.
    """

    __slots__ = ("_k", "_perm", "_exps")

    def __init__(self, k: int, perm: Sequence[int], exponents: Sequence[int]) -> None:
        self._k = _check_order(k)
        perm = tuple(perm)
        n = len(perm)
        if n < 1 or sorted(perm) != list(range(n)):
            raise InvalidArgumentError(f"not a permutation of 0..{n - 1}: {perm!r}")
        exps = tuple(int(e) % k for e in exponents)
        if len(exps) != n:
            raise InvalidArgumentError(
                f"need one exponent per row: {n} rows, {len(exps)} exponents"
            )
        self._perm = perm
        self._exps = exps

    @property
    def k(self) -> int:
        return self._k

    @property
    def n(self) -> int:
        return len(self._perm)

    @property
    def perm(self) -> tuple[int, ...]:
        return self._perm

    @property
    def exponents(self) -> tuple[int, ...]:
        return self._exps

    @classmethod
    def identity(cls, k: int, n: int) -> "MonomialMatrix":
        if not isinstance(n, int) or n < 1:
            raise InvalidArgumentError(f"dimension must be an integer >= 1, got {n!r}")
        return cls(k, tuple(range(n)), (0,) * n)

    def _require_compatible(self, other: "MonomialMatrix") -> None:
        if self._k != other._k:
            raise InvalidArgumentError(f"order mismatch: k={self._k} vs k={other._k}")
        if len(self._perm) != len(other._perm):
            raise InvalidArgumentError(
                f"dimension mismatch: n={len(self._perm)} vs n={len(other._perm)}"
            )

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Matrix product self·other, computed on the (sigma, l) data.

        Row i of the product reaches column other.sigma(self.sigma(i)) with
        entry omega^(self.l_i + other.l_(self.sigma(i))).
        """
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        self._require_compatible(other)
        k = self._k
        perm = tuple(other._perm[self._perm[i]] for i in range(len(self._perm)))
        exps = tuple(
            (self._exps[i] + other._exps[self._perm[i]]) % k
            for i in range(len(self._perm))
        )
        return MonomialMatrix(k, perm, exps)

    def inverse(self) -> "MonomialMatrix":
        n = len(self._perm)
        inv_perm = [0] * n
        for i, j in enumerate(self._perm):
            inv_perm[j] = i
        exps = tuple((-self._exps[inv_perm[j]]) % self._k for j in range(n))
        return MonomialMatrix(self._k, tuple(inv_perm), exps)

    def apply(self, vector: Sequence[CyclotomicNumber]) -> CyclotomicVector:
        """Image of a cyclotomic vector: component i is omega^(l_i) * v[sigma(i)]."""
        vec = tuple(vector)
        if len(vec) != len(self._perm):
            raise InvalidArgumentError(
                f"vector length {len(vec)} does not match dimension {len(self._perm)}"
            )
        for component in vec:
            if not isinstance(component, CyclotomicNumber):
                raise InvalidArgumentError(f"vector components must be cyclotomic, got {component!r}")
            if component.k != self._k:
                raise InvalidArgumentError(
                    f"order mismatch: element k={self._k}, component k={component.k}"
                )
        return tuple(
            CyclotomicNumber.root_of_unity(self._k, self._exps[i]) * vec[self._perm[i]]
            for i in range(len(vec))
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return (
            self._k == other._k
            and self._perm == other._perm
            and self._exps == other._exps
        )

    def __hash__(self) -> int:
        return hash((self._k, self._perm, self._exps))

    def __repr__(self) -> str:
        return f"MonomialMatrix(k={self._k}, perm={self._perm}, exponents={self._exps})"

    def sort_key(self) -> tuple:
        return (self._perm, self._exps)

    def as_dict(self) -> dict:
        """JSON form: {"perm": [...], "exp": [...]}."""
        return {"perm": list(self._perm), "exp": list(self._exps)}

    @classmethod
    def from_dict(cls, k: int, payload: dict) -> "MonomialMatrix":
        try:
            return cls(k, payload["perm"], payload["exp"])
        except (TypeError, KeyError):
            raise InvalidArgumentError(f"malformed monomial payload: {payload!r}") from None


def group_order(k: int, n: int) -> int:
    """Order of the full monomial group: k^n * n!."""
    _check_order(k)
    if not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"dimension must be an integer >= 1, got {n!r}")
    return k**n * factorial(n)


def enumerate_group(k: int, n: int, limit: "int | None" = None) -> list[MonomialMatrix]:
    """Every element of the monomial group, in (perm, exponents) lexicographic order."""
    order = group_order(k, n)
    cap = element_limit(limit)
    if order > cap:
        raise ResourceLimitError(f"group order {order} exceeds the element cap {cap}")
    return [
        MonomialMatrix(k, perm, exps)
        for perm in itertools.permutations(range(n))
        for exps in itertools.product(range(k), repeat=n)
    ]


def cyclo_vector(k: int, components: Iterable) -> CyclotomicVector:
    """Lift rational (or already cyclotomic) components into Q(omega_k)^n."""
    _check_order(k)
    out = []
    for component in components:
        if isinstance(component, CyclotomicNumber):
            if component.k != k:
                raise InvalidArgumentError(
                    f"order mismatch: expected k={k}, component has k={component.k}"
                )
            out.append(component)
        else:
            out.append(CyclotomicNumber.from_rational(k, Fraction(component)))
    if not out:
        raise InvalidArgumentError("vector must have at least one component")
    return tuple(out)


def form_value(vector: Sequence[CyclotomicNumber], k: "int | None" = None) -> CyclotomicNumber:
    """Exact value of x_1^k + ... + x_n^k on a cyclotomic vector."""
    vec = tuple(vector)
    if not vec:
        raise InvalidArgumentError("form of an empty vector is undefined")
    orders = {c.k for c in vec if isinstance(c, CyclotomicNumber)}
    if len(orders) > 1:
        raise InvalidArgumentError(f"mixed cyclotomic orders in vector: {sorted(orders)}")
    if k is None:
        if not orders:
            raise InvalidArgumentError("form order k is required for rational vectors")
        k = orders.pop()
    else:
        _check_order(k)
        if orders and orders.pop() != k:
            raise InvalidArgumentError("vector order does not match requested k")
    vec = cyclo_vector(k, vec)
    total = CyclotomicNumber.zero(k)
    for component in vec:
        total = total + component**k
    return total


def _vector_with_order(vector, k: "int | None") -> tuple[int, CyclotomicVector]:
    components = tuple(vector)
    if not components:
        raise InvalidArgumentError("vector must have at least one component")
    inferred = None
    for component in components:
        if isinstance(component, CyclotomicNumber):
            inferred = component.k
            break
    if k is None:
        k = inferred
    if k is None:
        raise InvalidArgumentError("order k is required for purely rational vectors")
    return k, cyclo_vector(k, components)


def orbit(vector, k: "int | None" = None, limit: "int | None" = None) -> set[CyclotomicVector]:
    """All images of a vector under the full monomial group (a finite set)."""
    k, vec = _vector_with_order(vector, k)
    return {element.apply(vec) for element in enumerate_group(k, len(vec), limit)}


def stabilizer(vector, k: "int | None" = None, limit: "int | None" = None) -> list[MonomialMatrix]:
    """Every group element fixing the vector, in enumeration order."""
    k, vec = _vector_with_order(vector, k)
    return [element for element in enumerate_group(k, len(vec), limit) if element.apply(vec) == vec]


@dataclass(frozen=True)
class RationalSubgroupReport:
    """The subgroup of elements whose matrix entries are all rational.

    An entry omega^l is rational only for l = 0 (value 1) and, when k is
    even, l = k/2 (value -1); the elements listed here are exactly those
    built from such exponents.  The closure flags certify the subgroup
    property by exhaustive check, and `permutations_only` records whether
    the subgroup is just the plain permutation matrices (true for odd k;
    even k admits all sign changes as well).
    """

    k: int
    n: int
    elements: tuple[MonomialMatrix, ...]
    closed_under_product: bool
    closed_under_inverse: bool
    contains_identity: bool
    permutations_only: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_group(self) -> bool:
        return self.closed_under_product and self.closed_under_inverse and self.contains_identity


def rational_elements(k: int, n: int, limit: "int | None" = None) -> RationalSubgroupReport:
    """Enumerate and certify the rational-entry subgroup."""
    _check_order(k)
    if not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"dimension must be an integer >= 1, got {n!r}")
    rational_exps = [
        l
        for l in range(k)
        if CyclotomicNumber.root_of_unity(k, l).is_rational() is not None
    ]
    count = len(rational_exps) ** n * factorial(n)
    cap = element_limit(limit)
    if count > cap:
        raise ResourceLimitError(f"rational subgroup size {count} exceeds the element cap {cap}")
    elements = tuple(
        MonomialMatrix(k, perm, exps)
        for perm in itertools.permutations(range(n))
        for exps in itertools.product(rational_exps, repeat=n)
    )
    members = set(elements)
    closed_product = all(a * b in members for a in elements for b in elements)
    closed_inverse = all(element.inverse() in members for element in elements)
    identity = MonomialMatrix.identity(k, n)
    return RationalSubgroupReport(
        k=k,
        n=n,
        elements=tuple(sorted(elements, key=MonomialMatrix.sort_key)),
        closed_under_product=closed_product,
        closed_under_inverse=closed_inverse,
        contains_identity=identity in members,
        permutations_only=all(not any(element.exponents) for element in elements),
    )


def orbit_rational_points(k: int, limit: "int | None" = None) -> set[tuple[Fraction, Fraction]]:
    """Rational points of x^k + y^k = 1 reached from (1, 0) by the group."""
    start = cyclo_vector(k, (1, 0))
    points = set()
    for image in orbit(start, limit=limit):
        rationals = [component.is_rational() for component in image]
        if all(value is not None for value in rationals):
            points.add(tuple(rationals))
    return points
