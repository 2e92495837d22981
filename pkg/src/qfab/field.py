"""Exact scalar fields: the rationals (arbitrary precision) and prime fields.

Scalars are plain values supporting +, -, *, /, ==, hash.  Rationals are
gmpy2.mpq when available (much faster), else fractions.Fraction; both keep
values in lowest terms with a positive denominator.  Prime-field elements are
small wrapper objects around a residue.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _rational


class RationalField:
    """The field Q."""

    name = "Q"
    characteristic = 0

    def __call__(self, num, den=1):
        return _rational(num, den)

    @property
    def zero(self):
        return _rational(0)

    @property
    def one(self):
        return _rational(1)

    def coerce(self, x):
        if isinstance(x, str):
            if "/" in x:
                n, d = x.split("/")
                return _rational(int(n), int(d))
            return _rational(int(x))
        return _rational(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class FpElement:
    """A residue modulo p with operator arithmetic."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return FpElement(self.v + _residue(other, self.p), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpElement(self.v - _residue(other, self.p), self.p)

    def __rsub__(self, other):
        return FpElement(_residue(other, self.p) - self.v, self.p)

    def __mul__(self, other):
        return FpElement(self.v * _residue(other, self.p), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        ov = _residue(other, self.p)
        if ov == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.v * pow(ov, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(_residue(other, self.p) * pow(self.v, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}"


def _residue(x, p):
    if isinstance(x, FpElement):
        if x.p != p:
            raise ValueError("mixed prime fields")
        return x.v
    return int(x) % p


class PrimeField:
    """The field F_p for a prime p."""

    characteristic: int

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def __call__(self, num, den=1):
        val = FpElement(num, self.p)
        if den != 1:
            val = val / FpElement(den, self.p)
        return val

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def coerce(self, x):
        if isinstance(x, FpElement):
            return x
        if isinstance(x, str):
            if "/" in x:
                n, d = x.split("/")
                return self(int(n), int(d))
            return FpElement(int(x), self.p)
        if hasattr(x, "numerator") and hasattr(x, "denominator"):
            return self(int(x.numerator), int(x.denominator))
        return FpElement(int(x), self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


def field_by_name(name):
    """Parse a field spec: "Q", or "F5" / "Fp:5" style names."""
    name = name.strip()
    if name in ("Q", "QQ", "q"):
        return QQ
    if name.lower().startswith("f"):
        digits = name[1:].lstrip("p:_ ")
        return PrimeField(int(digits))
    raise ValueError(f"unknown field {name!r}")
