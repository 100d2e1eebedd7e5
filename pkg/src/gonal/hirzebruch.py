"""Closed-form line-bundle cohomology on Hirzebruch surfaces.

F_e is the P^1-bundle over P^1 with a section C_0 of self-intersection
-e and fiber f; divisor classes are written a*C_0 + b*f.  The oracle has
exactly two primitive ingredients: the pushforward formula for h^0 and
the surface Riemann-Roch for chi.  h^2 comes from Serre duality, so any
inconsistency between the ingredients surfaces as a negative h^1 and is
raised, never clamped.

For trigonal curves the generic scroll is one of these surfaces: F_0
when g is even, F_1 when g is odd.  Restricting multiples of the fiber
class to a curve in the class 3D + (4-g)f computes section counts of
multiples of the degree-3 pencil by the restriction exact sequence,
independently of the piecewise formulas in ``invariants``.  The same
trick does not extend to n >= 4, where the curve has codimension n-2
in the scroll and is no longer a divisor.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .chow import intersect_number
from .errors import ConsistencyError, DomainError
from .scroll import canonical_class, curve_class, generic_scroll, hyperplane_in_c0_f_basis


@dataclass(frozen=True)
class FeBundle:
    """A line bundle a*C_0 + b*f on the Hirzebruch surface F_e.

    Intersection rules: C_0^2 = -e, C_0.f = 1, f^2 = 0.
    """

    e: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.e < 0:
            raise DomainError(f"requires e >= 0 (got e={self.e})")

    def _coerce(self, other) -> "FeBundle":
        if not isinstance(other, FeBundle):
            raise TypeError(f"cannot combine FeBundle with {type(other).__name__}")
        if other.e != self.e:
            raise DomainError(f"bundles live on different surfaces: F_{self.e} vs F_{other.e}")
        return other

    def intersect(self, other: "FeBundle") -> int:
        other = self._coerce(other)
        return -self.e * self.a * other.a + self.a * other.b + other.a * self.b

    def __add__(self, other) -> "FeBundle":
        other = self._coerce(other)
        return FeBundle(self.e, self.a + other.a, self.b + other.b)

    def __sub__(self, other) -> "FeBundle":
        other = self._coerce(other)
        return FeBundle(self.e, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "FeBundle":
        return FeBundle(self.e, -self.a, -self.b)

    def __rmul__(self, k) -> "FeBundle":
        if isinstance(k, int):
            return FeBundle(self.e, k * self.a, k * self.b)
        return NotImplemented

    def __str__(self) -> str:
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}*C0 {sign} {abs(self.b)}*f on F_{self.e}"


class Cohomology(NamedTuple):
    h0: int
    h1: int
    h2: int


def canonical_bundle(e: int) -> FeBundle:
    """The canonical class of F_e: -2C_0 - (e+2)f."""
    return FeBundle(e, -2, -(e + 2))


def _h0(bundle: FeBundle) -> int:
    # h^0(P^1, Sym^a(O + O(-e)) (x) O(b)) summed over the splitting
    if bundle.a < 0:
        return 0
    return sum(max(0, bundle.b - i * bundle.e + 1) for i in range(bundle.a + 1))


def bundle_cohomology(bundle: FeBundle) -> Cohomology:
    """(h^0, h^1, h^2) of the bundle, all exact integers.

    h^0 by pushforward, h^2 = h^0(K - L) by Serre duality, and
    h^1 = h^0 + h^2 - chi with chi = 1 + L.(L-K)/2.  A negative h^1
    would mean the ingredients disagree and raises ConsistencyError.
    """
    h0 = _h0(bundle)
    k = canonical_bundle(bundle.e)
    h2 = _h0(k - bundle)
    chi = 1 + bundle.intersect(bundle - k) // 2
    h1 = h0 + h2 - chi
    if h1 < 0:
        raise ConsistencyError(
            f"negative h^1 = {h1} for {bundle}: h0={h0}, h2={h2}, chi={chi}"
        )
    return Cohomology(h0, h1, h2)


def very_ample(bundle: FeBundle) -> bool:
    """Very-ampleness of a*C_0 + b*f: a > 0 and b > a*e (b > 0 on F_0)."""
    if bundle.e == 0:
        return bundle.a > 0 and bundle.b > 0
    return bundle.a > 0 and bundle.b > bundle.a * bundle.e


def trigonal_curve_bundle(g: int) -> FeBundle:
    """The class 3D + (4-g)f of a canonical trigonal curve on its surface.

    In the (C_0, f) basis this is (3, (g+2)/2) on F_0 for g even and
    (3, (g+5)/2) on F_1 for g odd.
    """
    if g < 5:
        raise DomainError(f"requires g >= 5 (got g={g})")
    e = g % 2
    _, m = hyperplane_in_c0_f_basis(generic_scroll(g, 3))
    return FeBundle(e, 3, 3 * m + 4 - g)


def trigonal_h0_oracle(g: int, k: int) -> int:
    """Sections of k times the pencil on the generic trigonal curve.

    Computed from the restriction sequence
    0 -> O_S(kf - C) -> O_S(kf) -> O_C(kf) -> 0 on the surface S = F_e:
    the answer is h^0(kf) - h^0(kf - C) + h^1(kf - C), which is valid
    because h^1(O_S(kf)) = 0.  Both vanishing facts are asserted.
    """
    if g < 5:
        raise DomainError(f"requires g >= 5 (got g={g})")
    if k < 0:
        raise DomainError(f"requires k >= 0 (got k={k})")
    curve = trigonal_curve_bundle(g)
    kf = FeBundle(curve.e, 0, k)
    on_s = bundle_cohomology(kf)
    twisted = bundle_cohomology(kf - curve)
    if twisted.h0 != 0:
        raise ConsistencyError(
            f"h^0(kf - C) = {twisted.h0} != 0 at (g={g}, k={k}); "
            f"the C_0-coefficient should be -3"
        )
    if on_s.h1 != 0:
        raise ConsistencyError(
            f"h^1(O_S(kf)) = {on_s.h1} != 0 at (g={g}, k={k})"
        )
    return on_s.h0 - twisted.h0 + twisted.h1


class RatherFreeResult(NamedTuple):
    pairing: int
    is_rather_free: bool


def _rather_free_criterion(pairing: int, irregularity: int) -> bool:
    # sufficient criterion: (L.K_S) <= -2 on a surface with h^1(O_S) = 0
    return pairing <= -2 and irregularity == 0


def rather_free_check(g: int) -> RatherFreeResult:
    """Check that the trigonal curve system separates points fiberwise.

    Returns the intersection pairing (K_S . L) = -g-8, computed in the
    scroll's intersection ring, together with the verdict of the
    sufficient criterion: pairing <= -2 and h^1(O_S) = 0.
    """
    if g < 5:
        raise DomainError(f"requires g >= 5 (got g={g})")
    spec = generic_scroll(g, 3)
    pairing = intersect_number([canonical_class(spec)], curve_class(spec))
    irregularity = bundle_cohomology(FeBundle(g % 2, 0, 0)).h1
    return RatherFreeResult(pairing, _rather_free_criterion(pairing, irregularity))
