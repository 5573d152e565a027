"""Built-in excision situations: cusp, node, swan(p), truncated(N)."""

import re

from .errors import ProkError
from .excision import validate_excision
from .fpring import FPRing, RingHom, hom_kernel
from .poly.domains import base_ring_from_name, is_prime


def cusp():
    A = FPRing("QQ", ["x", "y"], ["y^2 - x^3"])
    B = FPRing("QQ", ["t"])
    f = RingHom(A, B, ["t^2", "t^3"], module_gens=["1", "t"])
    return validate_excision(f, A.ideal(["x", "y"]), name="cusp")


def node():
    A = FPRing("QQ", ["x", "y"], ["x*y"])
    B = FPRing("QQ", ["s", "e"], ["e^2 - e"])
    f = RingHom(A, B, ["s*e", "s*(1 - e)"], module_gens=["1", "e"])
    return validate_excision(f, A.ideal(["x", "y"]), name="node")


def cyclotomic(p):
    return " + ".join(f"z^{i}" for i in range(p - 1, 0, -1)) + " + 1"


def swan_rings(p):
    """``B = ZZ[z]/Φ_p`` and ``A = ZZ + pB`` generated by ``a_i = p z^i``."""
    if p < 3 or not is_prime(p):
        raise ProkError("swan(p) needs an odd prime p")
    B = FPRing("ZZ", ["z"], [cyclotomic(p)])
    names = [f"a{i}" for i in range(1, p - 1)]
    free = FPRing("ZZ", names)
    images = [f"{p}*z^{i}" for i in range(1, p - 1)]
    K = hom_kernel(RingHom(free, B, images))
    A = FPRing("ZZ", names, K.gens)
    return A, B, images


def swan(p):
    A, B, images = swan_rings(p)
    gens = ["1"] + [f"z^{i}" for i in range(1, p - 1)]
    f = RingHom(A, B, images, module_gens=gens)
    I = A.ideal([p] + list(A.vars))
    return validate_excision(f, I, name=f"swan({p})")


def truncated(N, base="QQ"):
    if N < 1:
        raise ProkError("truncated(N) needs N >= 1")
    R = FPRing(base, ["x"], [f"x^{N}"])
    f = RingHom(R, R, ["x"], module_gens=["1"])
    return validate_excision(f, R.ideal(["x"]), name=f"truncated({N})")


_PATTERN = re.compile(r"^\s*([a-z]+)\s*(?:\((.*)\))?\s*$")


def _parse_builtin(name):
    m = _PATTERN.match(name.replace("builtin:", ""))
    if not m:
        raise ProkError(f"unknown builtin {name!r}")
    kind, args = m.group(1), m.group(2)
    args = [a.strip() for a in args.split(",")] if args else []
    try:
        if kind in ("cusp", "node") and not args:
            return kind, ()
        if kind == "swan" and len(args) == 1:
            p = int(args[0])
            if p >= 3 and is_prime(p):
                return kind, (p,)
            raise ProkError("swan(p) needs an odd prime p")
        if kind == "truncated" and 1 <= len(args) <= 2:
            base = base_ring_from_name(args[1]) if len(args) == 2 else "QQ"
            N = int(args[0])
            if N < 1:
                raise ProkError("truncated(N) needs N >= 1")
            return kind, (N, base)
    except ValueError:
        pass
    raise ProkError(f"unknown builtin {name!r}")


def load_builtin(name):
    """``cusp``, ``node``, ``swan(p)``, ``truncated(N)`` or ``truncated(N, GF(p))``."""
    kind, args = _parse_builtin(name)
    return {"cusp": cusp, "node": node, "swan": swan, "truncated": truncated}[kind](*args)


def builtin_variables(name):
    """Variable names of (A, B) for a builtin, without building it."""
    kind, args = _parse_builtin(name)
    if kind == "cusp":
        return ("x", "y"), ("t",)
    if kind == "node":
        return ("x", "y"), ("s", "e")
    if kind == "swan":
        return tuple(f"a{i}" for i in range(1, args[0] - 1)), ("z",)
    return ("x",), ("x",)


BUILTIN_NAMES = ("cusp", "node", "swan(p)", "truncated(N)")
