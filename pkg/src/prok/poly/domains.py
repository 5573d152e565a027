"""Coefficient rings: the integers, the rationals and prime fields."""

from fractions import Fraction
from math import gcd

from ..errors import UnsupportedRing


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class BaseRing:
    """One of ZZ, QQ or GF(p).

    Elements are plain Python ints (ZZ, GF(p) reduced into ``[0, p)``) or
    ``Fraction`` (QQ).  Instances compare by value so they can key caches.
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind not in ("ZZ", "QQ", "GF"):
            raise UnsupportedRing(f"unknown coefficient ring {kind!r}")
        if kind == "GF":
            if p is None or not is_prime(int(p)):
                raise UnsupportedRing(f"GF({p}) needs a prime modulus")
            p = int(p)
        else:
            p = None
        self.kind = kind
        self.p = p

    # identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, BaseRing) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.kind == "GF" else self.kind

    __str__ = __repr__

    @property
    def is_field(self):
        return self.kind != "ZZ"

    @property
    def characteristic(self):
        return self.p if self.kind == "GF" else 0

    # elements -----------------------------------------------------------
    @property
    def zero(self):
        return Fraction(0) if self.kind == "QQ" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "QQ" else 1

    def __call__(self, x):
        """Coerce an int or Fraction into this ring."""
        if self.kind == "QQ":
            return Fraction(x)
        if isinstance(x, Fraction):
            if self.kind == "ZZ":
                if x.denominator != 1:
                    raise UnsupportedRing(f"{x} is not an integer")
                return int(x.numerator)
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if self.kind == "GF":
            return int(x) % self.p
        return int(x)

    def red(self, x):
        return x % self.p if self.kind == "GF" else x

    def div(self, a, b):
        """Exact quotient; in ZZ it must divide."""
        if self.kind == "QQ":
            return a / b
        if self.kind == "GF":
            return a * pow(b, -1, self.p) % self.p
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def divides(self, a, b):
        """Does ``a`` divide ``b``?"""
        if self.kind != "ZZ":
            return a != 0 or b == 0
        if a == 0:
            return b == 0
        return b % a == 0

    def is_unit(self, a):
        if self.kind == "ZZ":
            return a in (1, -1)
        return a != 0

    def gcdex(self, a, b):
        """``(g, x, y)`` with ``x*a + y*b = g`` a normalized gcd."""
        if self.kind == "ZZ":
            return xgcd(a, b)
        if a != 0:
            return self.one, self.div(self.one, a), self.zero
        if b != 0:
            return self.one, self.zero, self.div(self.one, b)
        return self.zero, self.zero, self.zero

    def normal_unit(self, a):
        """Unit ``u`` such that ``u*a`` is the canonical associate of ``a``."""
        if self.kind == "ZZ":
            return -1 if a < 0 else 1
        return self.div(self.one, a) if a != 0 else self.one

    def euclid_norm(self, a):
        if self.kind == "ZZ":
            return abs(a)
        return 0 if a == 0 else 1

    def lcm(self, a, b):
        if self.kind == "ZZ":
            return abs(a * b) // gcd(a, b) if a and b else 0
        return self.one

    def fmt(self, c):
        if isinstance(c, Fraction):
            return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return str(c)

    def to_json(self):
        return str(self)


ZZ = BaseRing("ZZ")
QQ = BaseRing("QQ")


def GF(p):
    return BaseRing("GF", p)


def base_ring_from_name(name):
    """Parse ``ZZ``, ``QQ``, ``GF(p)`` (also ``FF(p)``, ``F_p``)."""
    name = name.strip()
    if name in ("ZZ", "Z"):
        return ZZ
    if name in ("QQ", "Q"):
        return QQ
    for prefix in ("GF(", "FF("):
        if name.startswith(prefix) and name.endswith(")"):
            return GF(int(name[len(prefix):-1]))
    if name.startswith("F_"):
        return GF(int(name[2:]))
    raise UnsupportedRing(f"unknown coefficient ring {name!r}")
