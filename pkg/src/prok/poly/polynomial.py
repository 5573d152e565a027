"""Exact multivariate polynomials over ZZ, QQ or GF(p)."""

from fractions import Fraction

from ..errors import ProkError, RingMismatch
from .domains import QQ, BaseRing, base_ring_from_name
from .orders import DEGREVLEX
from .parse import parse_expression


class PolyRing:
    """``base[vars]`` with the variables in declaration order."""

    __slots__ = ("base", "vars", "_index")

    def __init__(self, base, variables):
        if isinstance(base, str):
            base = base_ring_from_name(base)
        if not isinstance(base, BaseRing):
            raise ProkError(f"not a coefficient ring: {base!r}")
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ProkError(f"repeated variable in {variables}")
        self.base = base
        self.vars = variables
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.vars)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.base == other.base and self.vars == other.vars

    def __hash__(self):
        return hash((self.base, self.vars))

    def __repr__(self):
        return f"{self.base}[{','.join(self.vars)}]"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ProkError(f"unknown variable {name!r} in {self}") from None

    # constructors -------------------------------------------------------
    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.base(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name):
        i = self.index(name) if isinstance(name, str) else name
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.base.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exp, coeff=1):
        c = self.base(coeff)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def __call__(self, x):
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            return x.change_ring(self)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, tuple):
            return self.from_expr(x)
        return self.const(x)

    def parse(self, text):
        return self.from_expr(parse_expression(text))

    def from_expr(self, e):
        kind = e[0]
        if kind == "num":
            return self.const(e[1])
        if kind == "var":
            return self.gen(e[1])
        if kind == "neg":
            return -self.from_expr(e[1])
        if kind == "pow":
            return self.from_expr(e[1]) ** e[2]
        a, b = self.from_expr(e[1]), self.from_expr(e[2])
        if kind == "add":
            return a + b
        if kind == "sub":
            return a - b
        if kind == "mul":
            return a * b
        if not b.is_constant() or b.is_zero():
            raise ProkError("division is only allowed by a nonzero constant")
        c = b.constant_coeff()
        if self.base.kind == "ZZ":
            # allowed when exact
            out = {}
            for t, v in a.terms.items():
                q = Fraction(v, c)
                if q.denominator != 1:
                    raise ProkError(f"{v}/{c} is not an integer")
                out[t] = int(q)
            return Polynomial(self, out)
        inv = self.base.div(self.base.one, self.base(c))
        return a * inv


class Polynomial:
    """Immutable polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_dict(cls, ring, terms):
        red = ring.base.red
        clean = {}
        for e, c in terms.items():
            c = red(ring.base(c))
            if c:
                clean[tuple(e)] = c
        return cls(ring, clean)

    # basics -------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.base.zero)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def leading_term(self, order=DEGREVLEX):
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.base.red
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = red(out.get(e, 0) + c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.base.red
        return Polynomial(self.ring, {e: red(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.base.red
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = red(out.get(e, 0) + c1 * c2)
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ProkError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff(self, var):
        """Formal partial derivative."""
        i = self.ring.index(var) if isinstance(var, str) else var
        red = self.ring.base.red
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                s = red(c * e[i])
                if s:
                    out[tuple(d)] = s
        return Polynomial(self.ring, out)

    def compose(self, images, target=None):
        """Substitute ``images[i]`` (polynomials in ``target``) for variable ``i``."""
        if len(images) != self.ring.nvars:
            raise ProkError("wrong number of images")
        if target is None:
            target = images[0].ring if images else self.ring
        result = target.zero()
        powers = [dict() for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        for e, c in self.terms.items():
            term = target.const(target.base(c) if target.base != self.ring.base else c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            result = result + term
        return result

    def change_ring(self, ring):
        """Reinterpret in ``ring`` by variable name (missing names must not occur)."""
        if ring.base != self.ring.base:
            terms = {e: c for e, c in self.terms.items()}
            self = Polynomial.from_dict(PolyRing(ring.base, self.ring.vars), terms)
        idx = []
        for i, v in enumerate(self.ring.vars):
            idx.append(ring._index.get(v))
        out = {}
        for e, c in self.terms.items():
            d = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    if idx[i] is None:
                        raise RingMismatch(f"variable {self.ring.vars[i]} is not in {ring}")
                    d[idx[i]] += k
            out[tuple(d)] = c
        return Polynomial(ring, out)

    # display ------------------------------------------------------------
    def sorted_terms(self, order=DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        fmt = self.ring.base.fmt
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.ring.vars, e) if k
            )
            neg = isinstance(c, (int, Fraction)) and c < 0 and self.ring.base.kind != "GF"
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{fmt(a)}*{mono}"
            else:
                body = fmt(a)
            parts.append(("-" if neg else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Polynomial({str(self)!r}, {self.ring})"


def poly_ring(spec, variables=None):
    """``poly_ring("QQ", "x,y")`` or ``poly_ring(QQ, ["x", "y"])``."""
    if variables is None:
        base, rest = spec.split("[", 1)
        variables = rest.rstrip("]")
        spec = base
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    return PolyRing(spec, variables)


__all__ = ["PolyRing", "Polynomial", "poly_ring", "QQ"]
