"""Exact arithmetic in the Chow ring of a rational normal scroll.

A non-singular rational normal scroll of dimension n-1 and degree g-n+1
inside P^{g-1} has Chow ring generated by the hyperplane class D and the
fiber class f, subject to the relations

    f^2 = 0,        D^{n-1} = (g-n+1) * D^{n-2} f.

Classes are stored in the normal form these relations induce: integer
combinations of the monomials D^a f^b with 0 <= a <= n-2 and b in {0, 1}.
Monomials of codimension above n-1 vanish for dimension reasons.  The
point class is D^{n-2} f, normalized to degree 1, so deg(D^{n-1}) equals
the scroll degree g-n+1.

Coefficients are arbitrary-precision integers; there is no floating
point anywhere in this module.  All values are immutable after
construction and all operations are pure, so everything is safe for
unrestricted concurrent use.
"""

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DomainError

# (a, b): exponents of D and f
Monomial = tuple[int, int]


@dataclass(frozen=True)
class AmbientScroll:
    """The scroll attached to a genus-g curve with a degree-n pencil.

    It has dimension n-1 and degree g-n+1 inside P^{g-1}.  The standing
    range assumption is n >= 3 and 2n-2 < g.
    """

    g: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise DomainError(f"requires n >= 3 (got n={self.n})")
        if self.g < 2:
            raise DomainError(f"requires g >= 2 (got g={self.g})")
        if 2 * self.n - 2 >= self.g:
            raise DomainError(
                f"requires 2n-2 < g (got 2n-2={2 * self.n - 2}, g={self.g})"
            )

    @property
    def dimension(self) -> int:
        return self.n - 1

    @property
    def degree(self) -> int:
        return self.g - self.n + 1

    def unit(self) -> "ChowClass":
        return ChowClass(self, {(0, 0): 1})

    def monomial(self, a: int, b: int, coeff: int = 1) -> "ChowClass":
        return ChowClass(self, {(a, b): coeff})

    def point_class(self) -> "ChowClass":
        return ChowClass(self, {(self.n - 2, 1): 1})

    def hyperplane(self) -> "DivisorClass":
        return DivisorClass(self, 1, 0)

    def fiber(self) -> "DivisorClass":
        return DivisorClass(self, 0, 1)


def _add_term(acc: dict, ambient: AmbientScroll, a: int, b: int, c: int) -> None:
    """Accumulate c * D^a f^b into acc, rewriting to normal form."""
    if a < 0 or b < 0:
        raise DomainError(f"negative exponent in monomial D^{a} f^{b}")
    if c == 0:
        return
    n = ambient.n
    while True:
        if b >= 2 or a + b > n - 1:
            return  # killed by f^2 = 0 or by codimension > dim X
        if a <= n - 2:
            acc[(a, b)] = acc.get((a, b), 0) + c
            return
        # here a = n-1 and b = 0: substitute D^{n-1} = deg(X) D^{n-2} f
        c *= ambient.degree
        a -= 1
        b += 1


class ChowClass:
    """An integer cycle class on a scroll, kept in normal form.

    Construct from a mapping of monomials (a, b) to coefficients; any
    monomials outside the normal-form basis are rewritten on the spot.
    Supports +, -, * (by another class, a divisor class, or an integer).
    """

    __slots__ = ("ambient", "_coeffs")

    def __init__(
        self,
        ambient: AmbientScroll,
        coeffs: Mapping[Monomial, int] | None = None,
    ) -> None:
        acc: dict[Monomial, int] = {}
        for (a, b), c in (coeffs or {}).items():
            _add_term(acc, ambient, a, b, c)
        self.ambient = ambient
        self._coeffs = {m: c for m, c in sorted(acc.items()) if c != 0}

    @property
    def coefficients(self) -> dict[Monomial, int]:
        return dict(self._coeffs)

    def coefficient(self, a: int, b: int) -> int:
        return self._coeffs.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def codimensions(self) -> set[int]:
        """Codimensions a+b present in this class (empty for the zero class)."""
        return {a + b for a, b in self._coeffs}

    def degree(self) -> int:
        """Coefficient of the point class D^{n-2} f; 0 if there is no top part."""
        return self._coeffs.get((self.ambient.n - 2, 1), 0)

    def _coerce(self, other) -> "ChowClass":
        if isinstance(other, DivisorClass):
            other = other.to_chow()
        if not isinstance(other, ChowClass):
            raise TypeError(f"cannot combine ChowClass with {type(other).__name__}")
        if other.ambient != self.ambient:
            raise DomainError(
                f"classes live on different scrolls: "
                f"(g={self.ambient.g}, n={self.ambient.n}) vs "
                f"(g={other.ambient.g}, n={other.ambient.n})"
            )
        return other

    def __add__(self, other) -> "ChowClass":
        other = self._coerce(other)
        acc = dict(self._coeffs)
        for m, c in other._coeffs.items():
            acc[m] = acc.get(m, 0) + c
        return ChowClass(self.ambient, acc)

    def __sub__(self, other) -> "ChowClass":
        return self + (-self._coerce(other))

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ambient, {m: -c for m, c in self._coeffs.items()})

    def __mul__(self, other) -> "ChowClass":
        if isinstance(other, int):
            return ChowClass(
                self.ambient, {m: other * c for m, c in self._coeffs.items()}
            )
        other = self._coerce(other)
        acc: dict[Monomial, int] = {}
        for (a1, b1), c1 in self._coeffs.items():
            for (a2, b2), c2 in other._coeffs.items():
                _add_term(acc, self.ambient, a1 + a2, b1 + b2, c1 * c2)
        return ChowClass(self.ambient, acc)

    def __rmul__(self, other) -> "ChowClass":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, ChowClass):
            return self.ambient == other.ambient and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        bits: list[str] = []
        for (a, b), c in sorted(self._coeffs.items(), key=lambda mc: (sum(mc[0]), mc[0][1])):
            mono = _monomial_str(a, b)
            mag = abs(c)
            term = mono if (mag == 1 and mono != "1") else (
                f"{mag}" if mono == "1" else f"{mag}*{mono}"
            )
            if not bits:
                bits.append(term if c > 0 else f"-{term}")
            else:
                bits.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(bits)


def _monomial_str(a: int, b: int) -> str:
    parts = []
    if a == 1:
        parts.append("D")
    elif a > 1:
        parts.append(f"D^{a}")
    if b == 1:
        parts.append("f")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class DivisorClass:
    """A codimension-1 class d*D + f_coeff*f, embedding losslessly in the ring."""

    ambient: AmbientScroll
    d: int
    f: int

    def to_chow(self) -> ChowClass:
        return ChowClass(self.ambient, {(1, 0): self.d, (0, 1): self.f})

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.ambient, -self.d, -self.f)

    def __str__(self) -> str:
        return repr(self.to_chow())


def intersect_number(divisors: Sequence[DivisorClass], tail: ChowClass) -> int:
    """Degree of the intersection product of divisor classes with a tail class.

    The tail must be homogeneous and the total codimension (one per
    divisor plus the tail's) must equal n-1; a zero tail gives 0.
    """
    ambient = tail.ambient
    for dv in divisors:
        if dv.ambient != ambient:
            raise DomainError("classes live on different scrolls")
    codims = tail.codimensions()
    if len(codims) > 1:
        raise DomainError(
            f"tail class is not homogeneous (codimensions {sorted(codims)})"
        )
    if codims:
        total = len(divisors) + codims.pop()
        if total != ambient.dimension:
            raise DomainError(
                f"total codimension {total} does not match n-1 = {ambient.dimension}"
            )
    product = tail
    for dv in divisors:
        product = product * dv
    return product.degree()
