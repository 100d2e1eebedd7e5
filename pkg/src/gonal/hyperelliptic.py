"""Hyperelliptic models a*y^2 = f(x) and the rescaling twist.

A binary form of degree 2g+2 with nonvanishing discriminant cuts out a
smooth hyperelliptic curve of genus g; the point of the moduli space it
determines depends only on the form, not on the scalar a.  Rescaling
a to f(x0) therefore moves inside one isomorphism class of models while
making (x0, 1) a rational point.

Coefficients live in an exact domain: the rationals (p=None, stored as
Fraction) or a prime field GF(p) with p odd.  Characteristic 2 is
refused outright.  Discriminant vanishing is decided by two independent
routes, the Euclidean algorithm on (f, f') and a Sylvester-matrix
resultant, which must and do agree.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UnsupportedError

Scalar = Fraction | int


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


def _normalize_scalar(c, p: int | None) -> Scalar:
    if p is None:
        return Fraction(c)
    if not isinstance(c, int):
        raise DomainError(f"GF({p}) scalars must be integers (got {c!r})")
    return c % p


def _trim(cs: list) -> list:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _deriv(cs: list, p: int | None) -> list:
    out = [i * cs[i] for i in range(1, len(cs))]
    if p is not None:
        out = [c % p for c in out]
    return _trim(out)


def _inv(c, p: int | None):
    if p is None:
        return Fraction(1) / c
    return pow(c, -1, p)


def _poly_rem(a: list, b: list, p: int | None) -> list:
    """Remainder of a modulo b over the coefficient field (b nonzero)."""
    a = _trim(a)
    lead_inv = _inv(b[-1], p)
    while len(a) >= len(b):
        q = a[-1] * lead_inv
        if p is not None:
            q %= p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - q * bc
            if p is not None:
                a[shift + i] %= p
        a = _trim(a)
    return a


def _gcd_degree(f: list, h: list, p: int | None) -> int:
    """Degree of gcd(f, h) over the field; both inputs nonzero."""
    a, b = _trim(f), _trim(h)
    while b:
        a, b = b, _poly_rem(a, b, p)
    return len(a) - 1


def _resultant_nonzero(f: list, h: list, p: int | None) -> bool:
    """Res(f, h) != 0, decided by Gaussian elimination on the Sylvester
    matrix of the two (trimmed, nonzero) polynomials."""
    m, t = len(f) - 1, len(h) - 1
    if m == 0 or t == 0:
        return True  # a nonzero constant shares no root with anything
    size = m + t
    zero = 0 if p is not None else Fraction(0)
    mat = []
    for i in range(t):
        row = [zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c if p is None else c % p
        mat.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(h)):
            row[i + j] = c if p is None else c % p
        mat.append(row)
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if pivot is None:
            return False
        mat[col], mat[pivot] = mat[pivot], mat[col]
        inv_p = _inv(mat[col][col], p)
        for r in range(col + 1, size):
            if mat[r][col] == 0:
                continue
            factor = mat[r][col] * inv_p
            if p is not None:
                factor %= p
            for cidx in range(col, size):
                mat[r][cidx] = mat[r][cidx] - factor * mat[col][cidx]
                if p is not None:
                    mat[r][cidx] %= p
    return True


@dataclass(frozen=True)
class BinaryForm:
    """A binary form of degree 2g+2: coefficients[i] multiplies x^i y^(d-i).

    Coefficients are normalized on construction into the chosen domain
    (Fraction for p=None, residues for an odd prime p).
    """

    degree: int
    coefficients: tuple
    p: int | None = None

    def __post_init__(self) -> None:
        if self.degree < 6 or self.degree % 2 != 0:
            raise DomainError(
                f"degree must be 2g+2 with g >= 2 (got degree={self.degree})"
            )
        if len(self.coefficients) != self.degree + 1:
            raise DomainError(
                f"need {self.degree + 1} coefficients (got {len(self.coefficients)})"
            )
        if self.p is not None:
            if self.p == 2:
                raise UnsupportedError("characteristic 2 is not supported")
            if not _is_prime(self.p):
                raise DomainError(f"p = {self.p} is not prime")
        object.__setattr__(
            self,
            "coefficients",
            tuple(_normalize_scalar(c, self.p) for c in self.coefficients),
        )

    @property
    def genus(self) -> int:
        return (self.degree - 2) // 2

    def evaluate(self, x) -> Scalar:
        """The dehomogenized value f(x, 1)."""
        x = _normalize_scalar(x, self.p)
        acc = _normalize_scalar(0, self.p)
        for c in reversed(self.coefficients):
            acc = acc * x + c
            if self.p is not None:
                acc %= self.p
        return acc


def discriminant_nonzero(form: BinaryForm, method: str = "gcd") -> bool:
    """True iff the form has 2g+2 distinct roots in the projective line.

    The root at infinity (present when the top coefficient vanishes)
    must be simple, and the dehomogenization must be squarefree.
    method="gcd" decides squarefreeness by the Euclidean algorithm on
    (f, f'); method="resultant" decides it by Res(f, f') != 0 on the
    Sylvester matrix.  The two routes agree everywhere.
    """
    cs = list(form.coefficients)
    d = form.degree
    if all(c == 0 for c in cs):
        return False
    if cs[d] == 0 and cs[d - 1] == 0:
        return False  # root at infinity with multiplicity >= 2
    f = _trim(cs)
    fp = _deriv(f, form.p)
    if not fp:
        return False  # f' = 0 in characteristic p: f is a p-th power
    if method == "gcd":
        return _gcd_degree(f, fp, form.p) == 0
    if method == "resultant":
        return _resultant_nonzero(f, fp, form.p)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class HyperellipticModel:
    """A smooth affine model a*y^2 = f(x) with a != 0."""

    a: Scalar
    form: BinaryForm

    def __post_init__(self) -> None:
        a = _normalize_scalar(self.a, self.form.p)
        if a == 0:
            raise DomainError("requires a != 0")
        object.__setattr__(self, "a", a)
        if not discriminant_nonzero(self.form):
            raise DomainError("the form has vanishing discriminant")

    def residual(self, x, y) -> Scalar:
        """a*y^2 - f(x); zero exactly when (x, y) lies on the curve."""
        p = self.form.p
        x = _normalize_scalar(x, p)
        y = _normalize_scalar(y, p)
        value = self.a * y * y - self.form.evaluate(x)
        return value % p if p is not None else value


def twist_with_point(model: HyperellipticModel, x0) -> tuple[HyperellipticModel, tuple]:
    """Rescale a to f(x0) != 0, producing a model through (x0, 1).

    The form is untouched, so the twisted model maps to the same moduli
    point; the returned point satisfies the new equation exactly.
    """
    value = model.form.evaluate(x0)
    if value == 0:
        raise DomainError(f"f(x0) = 0 at x0 = {x0}; pick x0 away from the roots")
    p = model.form.p
    point = (_normalize_scalar(x0, p), _normalize_scalar(1, p))
    return HyperellipticModel(value, model.form), point


def hg_dimension(g: int) -> int:
    """Dimension of the hyperelliptic locus: 2g-1.

    Computed as the dimension 2g+2 of the projective space of binary
    forms of degree 2g+2 minus the 3 dimensions of PGL(2).
    """
    if g < 2:
        raise DomainError(f"requires g >= 2 (got g={g})")
    return (2 * g + 2) - 3
