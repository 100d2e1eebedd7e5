"""Numeric invariants of the generic n-gonal curve of genus g.

Euler characteristics of the restricted tangent and normal bundles,
section counts of multiples of the degree-n pencil (both the piecewise
splitting-type formula and the generic closed form), moduli and
Hilbert-scheme dimensions, and the pencil count at the boundary genus.

Everything is an exact integer; branch thresholds are decided by integer
comparisons, never floats.
"""

from math import comb
from typing import Sequence

from .chow import AmbientScroll, intersect_number
from .errors import ConsistencyError, DomainError
from .scroll import ScrollSpec, canonical_class, curve_class, generic_scroll


def _require_scroll_range(g: int, n: int) -> None:
    if n < 3:
        raise DomainError(f"requires n >= 3 (got n={n})")
    if 2 * n - 2 >= g:
        raise DomainError(f"requires 2n-2 < g (got 2n-2={2 * n - 2}, g={g})")


def chi_restricted_tangent(g: int, n: int, check: bool = False) -> int:
    """chi of the ambient tangent bundle restricted to the curve: n^2+1-g.

    With ``check=True`` the value is recomputed through the intersection
    ring as -K.C + (n-1)(1-g) and any mismatch raises.
    """
    _require_scroll_range(g, n)
    value = n * n + 1 - g
    if check:
        spec = generic_scroll(g, n)
        via_chow = intersect_number(
            [-canonical_class(spec)], curve_class(spec)
        ) + (n - 1) * (1 - g)
        if via_chow != value:
            raise ConsistencyError(
                f"chi(T|C) mismatch at (g={g}, n={n}): "
                f"formula {value}, intersection route {via_chow}"
            )
    return value


def chi_normal_bundle(g: int, n: int) -> int:
    """chi of the normal bundle of the embedded curve: 2g + n^2 - 2.

    This is also the dimension of the Hilbert scheme of such curves on
    the generic scroll, and equals chi_restricted_tangent + 3g - 3.
    """
    _require_scroll_range(g, n)
    return 2 * g + n * n - 2


def h1_double_pencil(g: int, n: int) -> int:
    """h^1 of twice the pencil on the generic curve: g - 2n + 2."""
    if n < 2:
        raise DomainError(f"requires n >= 2 (got n={n})")
    if 2 * n - 2 >= g:
        raise DomainError(f"requires 2n-2 < g (got 2n-2={2 * n - 2}, g={g})")
    return g - 2 * n + 2


def moduli_dimension(g: int, n: int) -> int:
    """Dimension of the n-gonal locus in moduli: min(3g-3, 2n+2g-5)."""
    if g < 2:
        raise DomainError(f"requires g >= 2 (got g={g})")
    if n < 2:
        raise DomainError(f"requires n >= 2 (got n={n})")
    return min(3 * g - 3, 2 * n + 2 * g - 5)


def gonal_pencil_count(n: int) -> int:
    """Number of degree-n pencils on the generic curve of genus 2n-2.

    The exact value (2n-2)! / (n! (n-1)!), a Catalan number.
    """
    if n < 2:
        raise DomainError(f"requires n >= 2 (got n={n})")
    return comb(2 * n - 2, n - 1) // n


def ballico_h0(g: int, n: int, k: int) -> int:
    """Sections of k times the pencil on the generic n-gonal curve.

    k+1 below the threshold k < g/(n-1), and the Riemann-Roch value
    nk - g + 1 at or above it.  The threshold comparison is exact:
    k(n-1) < g.
    """
    _require_scroll_range(g, n)
    if k < 0:
        raise DomainError(f"requires k >= 0 (got k={k})")
    if k * (n - 1) < g:
        return k + 1
    return n * k - g + 1


def _maroni_eta(g: int, n: int, splitting: Sequence[int]) -> int:
    big_n = sum(splitting)
    eta, rem = divmod(g - big_n, n - 1)
    if rem != 0:
        raise DomainError(
            f"invalid splitting {tuple(splitting)}: g - N = {g - big_n} "
            f"is not divisible by n-1 = {n - 1}"
        )
    return eta


def _maroni_branch(
    g: int, n: int, eta: int, splitting: Sequence[int], j: int, k: int
) -> int:
    """Value of branch j of the piecewise section-count formula at k.

    Branch 0 is k+1, branch j for 1 <= j <= n-2 is
    (j+1)k + 1 - j*eta - (r_1 + ... + r_j), branch n-1 is nk + 1 - g.
    """
    if j == 0:
        return k + 1
    if j == n - 1:
        return n * k + 1 - g
    return (j + 1) * k + 1 - j * eta - sum(splitting[:j])


def maroni_h0(
    g: int, n: int, k: int, splitting: Sequence[int] | None = None
) -> int:
    """Sections of k times the pencil, from the scroll's splitting type.

    With eta = (g-N)/(n-1), the value is k+1 for k < eta, then the
    piecewise-linear branch for eta + r_j <= k < eta + r_{j+1}
    (j = 1..n-2), and nk + 1 - g once k >= eta + r_{n-1}.  The default
    splitting is the generic one, where this agrees with ballico_h0.
    """
    _require_scroll_range(g, n)
    if k < 0:
        raise DomainError(f"requires k >= 0 (got k={k})")
    if splitting is None:
        spec = generic_scroll(g, n)
    else:
        spec = ScrollSpec(AmbientScroll(g, n), tuple(splitting))
    rs = spec.splitting
    eta = _maroni_eta(g, n, rs)
    if k < eta:
        return k + 1
    for j in range(1, n - 1):
        if eta + rs[j - 1] <= k < eta + rs[j]:
            return _maroni_branch(g, n, eta, rs, j, k)
    return _maroni_branch(g, n, eta, rs, n - 1, k)


def maroni_branch_boundaries(
    g: int, n: int, splitting: Sequence[int] | None = None
) -> list[int]:
    """The branch switch points eta + r_j, j = 1..n-1."""
    if splitting is None:
        splitting = generic_scroll(g, n).splitting
    eta = _maroni_eta(g, n, splitting)
    return [eta + r for r in splitting]


def maroni_branch_continuity(
    g: int, n: int, splitting: Sequence[int] | None = None
) -> bool:
    """Adjacent branches of the piecewise formula agree at every boundary."""
    if splitting is None:
        splitting = generic_scroll(g, n).splitting
    rs = tuple(splitting)
    eta = _maroni_eta(g, n, rs)
    for j in range(1, n):
        k = eta + rs[j - 1]
        left = _maroni_branch(g, n, eta, rs, j - 1, k)
        right = _maroni_branch(g, n, eta, rs, j, k)
        if left != right:
            return False
    return True
