"""Dense univariate polynomials with exact rational coefficients.

Backed by ``fractions.Fraction`` throughout; no floating point is used
anywhere, so evaluation, interpolation and serialization are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

Rational = Fraction | int


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class RationalPolynomial:
    """Immutable polynomial over Q, coefficients stored in ascending degree.

    Canonical form: trailing zero coefficients trimmed, every coefficient a
    reduced ``Fraction``.  The zero polynomial has an empty coefficient tuple
    and degree -1.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of t^i (zero beyond the stored degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return RationalPolynomial(summed)

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            c = _as_fraction(other)
            return RationalPolynomial(tuple(c * x for x in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def translate(self, a) -> "RationalPolynomial":
        """Return q with q(t) = p(t + a), by exact binomial expansion."""
        a = _as_fraction(a)
        d = len(self.coeffs)
        out = [Fraction(0)] * d
        for m, c in enumerate(self.coeffs):
            power = Fraction(1)
            for j in range(m, -1, -1):
                out[j] += c * comb(m, j) * power
                power *= a
        return RationalPolynomial(out)

    def to_json_dict(self) -> dict:
        """Exact serialization: coefficients as "num/den" strings, ascending."""
        return {"coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "RationalPolynomial":
        return cls(tuple(Fraction(s) for s in data["coeffs"]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                body = t if abs(c) == 1 else f"{abs(c)} {t}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RationalPolynomial({self.coeffs!r})"


def lagrange_interpolate(points) -> RationalPolynomial:
    """Exact polynomial through the given (x, y) pairs (distinct x values)."""
    points = [(_as_fraction(x), _as_fraction(y)) for x, y in points]
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = RationalPolynomial.zero()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = RationalPolynomial((1,))
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * RationalPolynomial((-xj, Fraction(1)))
            denom *= xi - xj
        result = result + basis * (yi / denom)
    return result
