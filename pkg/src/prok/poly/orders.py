"""Monomial orders and their extensions to free modules.

An order is represented by a sort key: larger key means larger monomial.
Module terms are pairs ``(pos, exp)``.
"""

from ..errors import ProkError


def _degrevlex(e):
    return (sum(e), tuple(-x for x in reversed(e)))


class MonomialOrder:
    """``lex``, ``degrevlex`` or ``elim`` (first ``block`` variables eliminated)."""

    __slots__ = ("kind", "block")

    def __init__(self, kind="degrevlex", block=None):
        if kind not in ("lex", "degrevlex", "elim"):
            raise ProkError(f"unknown monomial order {kind!r}")
        if kind == "elim" and (block is None or block < 0):
            raise ProkError("elimination order needs a block size")
        self.kind = kind
        self.block = block if kind == "elim" else None

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.block) == (other.kind, other.block)

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind

    def key(self, e):
        if self.kind == "lex":
            return e
        if self.kind == "degrevlex":
            return _degrevlex(e)
        k = self.block
        return (_degrevlex(e[:k]), _degrevlex(e[k:]))

    def check(self, nvars):
        if self.kind == "elim" and self.block > nvars:
            raise ProkError("elimination block exceeds the variable count")


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


def elim(block):
    return MonomialOrder("elim", block)


class TermOrder:
    """Order on module terms ``(pos, exp)``.

    ``pot`` (default): position over term, position 0 largest.  ``top``: term
    over position.  A custom ``keyfunc`` on ``(pos, exp)`` overrides both.
    """

    def __init__(self, order=DEGREVLEX, mode="pot", keyfunc=None):
        self.order = order
        self.mode = mode
        self._custom = keyfunc
        self._cache = {}

    def key(self, term):
        k = self._cache.get(term)
        if k is None:
            pos, e = term
            if self._custom is not None:
                k = self._custom(pos, e)
            elif self.mode == "pot":
                k = (-pos, self.order.key(e))
            else:
                k = (self.order.key(e), -pos)
            self._cache[term] = k
        return k


def block_elim_module_order(nelim, npos_first):
    """Module order eliminating the first ``nelim`` variables *and* positions
    ``< npos_first``.

    Comparison: positions ``< npos_first`` first (POT), then the eliminated
    variable block, then position, then the remaining variables.  Any element
    whose leading term sits in position ``>= npos_first`` and is free of the
    eliminated block has all its terms there.
    """

    def keyfunc(pos, e):
        head = 1 if pos < npos_first else 0
        first_pos = -pos if pos < npos_first else 0
        return (head, first_pos, _degrevlex(e[:nelim]), -pos, _degrevlex(e[nelim:]))

    return TermOrder(keyfunc=keyfunc)
