"""Sessions: a parsed program plus static name resolution and type checks."""

from dataclasses import dataclass, field

from ..builtins import builtin_variables
from ..errors import ProkError
from .syntax import (
    HomDecl,
    IdealDecl,
    ModuleDecl,
    Program,
    RingDecl,
    SituationDecl,
    format_statement,
    parse_program,
)


class SessionError(ProkError):
    """Unresolved name or type mismatch found before anything runs."""

    def __init__(self, index, statement, message):
        self.index = index
        self.statement = statement
        where = f"statement {index + 1}" if index >= 0 else "command line"
        super().__init__(f"{where} ({statement}): {message}")


@dataclass(frozen=True)
class Symbol:
    kind: str                 # ring | hom | ideal | module | situation
    ring: str = None          # owning ring of ideals and modules
    variables: tuple = ()     # ring variables
    source: str = None        # hom source / situation source ring (None for builtins)
    target: str = None
    avars: tuple = ()         # situation: variables of A and B
    bvars: tuple = ()


@dataclass
class Session:
    program: Program
    symbols: dict
    # statement index -> (ring name or None, variables) for ideal commands;
    # None means the polynomial ring QQ[variables in order of appearance]
    rings: dict = field(default_factory=dict)
    # statements bound from command-line flags ahead of the text
    prelude: int = 0

    @property
    def statements(self):
        return self.program.statements


def expr_vars(e, out=None):
    out = [] if out is None else out
    kind = e[0]
    if kind == "var":
        if e[1] not in out:
            out.append(e[1])
    elif kind != "num":
        for sub in e[1:]:
            if isinstance(sub, tuple):
                expr_vars(sub, out)
    return out


class _Checker:
    def __init__(self, prelude=0):
        self.prelude = prelude
        self.symbols = {}
        self.rings = {}
        self.index = 0
        self.stmt = None

    def fail(self, message):
        raise SessionError(self.index - self.prelude, format_statement(self.stmt), message)

    def lookup(self, name, *kinds):
        sym = self.symbols.get(name)
        if sym is None:
            self.fail(f"unresolved name {name!r}")
        if kinds and sym.kind not in kinds:
            want = " or ".join(kinds)
            self.fail(f"type mismatch: {name!r} is a {sym.kind}, expected a {want}")
        return sym

    def bind(self, name, sym):
        if name in self.symbols:
            self.fail(f"name {name!r} is already bound")
        self.symbols[name] = sym

    def check_vars(self, exprs, allowed, where):
        for e in exprs:
            for v in expr_vars(e):
                if v not in allowed:
                    self.fail(f"unknown variable {v!r} in {where}")

    def positive(self, value, what):
        if value is not None and value < 1:
            self.fail(f"{what} must be at least 1")

    def ideal_operand(self, I, ring_name, variables):
        if I.name is not None:
            sym = self.lookup(I.name, "ideal")
            if ring_name is not None and sym.ring != ring_name:
                self.fail(f"type mismatch: ideal {I.name!r} lives in {sym.ring!r}, not {ring_name!r}")
        else:
            self.check_vars(I.gens, variables, f"ring {ring_name or 'QQ'}")
        self.positive(I.power, "an ideal power")

    # declarations -------------------------------------------------------
    def ring(self, st):
        if len(set(st.variables)) != len(st.variables):
            self.fail("repeated variable")
        self.check_vars(st.relations, st.variables, f"ring {st.name}")
        self.bind(st.name, Symbol("ring", variables=st.variables))

    def hom(self, st):
        src = self.lookup(st.source, "ring")
        tgt = self.lookup(st.target, "ring")
        names = [v for v, _ in st.images]
        for v in names:
            if v not in src.variables:
                self.fail(f"{v!r} is not a variable of {st.source}")
        if len(set(names)) != len(names):
            self.fail("a variable is mapped twice")
        missing = [v for v in src.variables if v not in names]
        if missing:
            self.fail(f"no image given for {', '.join(missing)}")
        self.check_vars([e for _, e in st.images], tgt.variables, f"ring {st.target}")
        if st.gens is not None:
            self.check_vars(st.gens, tgt.variables, f"ring {st.target}")
        self.bind(st.name, Symbol("hom", source=st.source, target=st.target))

    def ideal(self, st):
        R = self.lookup(st.ring, "ring")
        self.check_vars(st.gens, R.variables, f"ring {st.ring}")
        self.bind(st.name, Symbol("ideal", ring=st.ring))

    def module(self, st):
        R = self.lookup(st.ring, "ring")
        widths = {len(r) for r in st.rows}
        if len(widths) != 1:
            self.fail("matrix rows have different lengths")
        self.check_vars([e for row in st.rows for e in row], R.variables, f"ring {st.ring}")
        self.bind(st.name, Symbol("module", ring=st.ring))

    def situation(self, st):
        if st.builtin is not None:
            try:
                avars, bvars = builtin_variables(st.builtin)
            except ProkError as exc:
                self.fail(str(exc))
            self.bind(st.name, Symbol("situation", avars=avars, bvars=bvars))
            return
        f = self.lookup(st.hom, "hom")
        A = self.symbols[f.source]
        self.ideal_operand(st.ideal, f.source, A.variables)
        self.bind(st.name, Symbol("situation", source=f.source, target=f.target,
                                  avars=A.variables, bvars=self.symbols[f.target].variables))

    # commands -------------------------------------------------------------
    def system(self, S, verb):
        if verb == "proiso" and S.kind != "swan":
            self.fail("pro-isomorphism checks are available for swan(E)")
        args = S.args
        if S.kind in ("gw", "swan"):
            if len(args) != 1:
                self.fail(f"{S.kind}(E) takes one situation")
            self.lookup(args[0], "situation")
            return
        # tor(E, n) or tor(R, I, n)
        if len(args) == 2 and isinstance(args[1], int):
            self.lookup(args[0], "situation")
        elif len(args) == 3 and isinstance(args[1], str) and isinstance(args[2], int):
            self.lookup(args[0], "ring")
            I = self.lookup(args[1], "ideal")
            if I.ring != args[0]:
                self.fail(f"type mismatch: ideal {args[1]!r} lives in {I.ring!r}")
        else:
            self.fail("expected tor(E, n) or tor(R, I, n)")
        self.positive(args[-1], "the Tor degree")

    def ideal_command(self, st):
        first, second = st.get("first"), st.get("second")
        ring = st.get("ring")
        if ring is None:
            for I in (first, second):
                if I.name is not None:
                    ring = self.lookup(I.name, "ideal").ring
                    break
        variables = []
        for I in (first, second):
            if I.gens is not None:
                for e in I.gens:
                    expr_vars(e, variables)
        if ring is not None:
            sym = self.lookup(ring, "ring")
            self.rings[self.index] = (ring, sym.variables)
            allowed = sym.variables
        else:
            self.rings[self.index] = (None, tuple(variables))
            allowed = tuple(variables)
        for I in (first, second):
            self.ideal_operand(I, ring, allowed)
        self.positive(st.get("bound"), "the bound")

    def command(self, st):
        verb = st.verb
        if verb in ("gw", "validate", "swan", "klow", "mennicke", "criteria"):
            sym = self.lookup(st.get("target"), "situation")
            if verb == "klow" and st.get("degree") > 1:
                self.fail("low-degree rules cover degrees n <= 1")
            if verb == "mennicke":
                self.check_vars([st.get("b")], sym.bvars, "the target ring")
                self.check_vars([st.get("x")], sym.avars, "the source ring")
            if verb == "criteria":
                self.positive(st.get("depth"), "the Tor depth")
        elif verb in ("conductor", "kernel"):
            self.lookup(st.get("target"), "hom", "situation")
        elif verb in ("prozero", "proiso"):
            self.system(st.get("system"), verb)
        elif verb == "tor":
            M = self.lookup(st.get("left"), "module")
            N = self.lookup(st.get("right"), "module")
            if M.ring != N.ring:
                self.fail(f"type mismatch: {st.get('left')} is over {M.ring} "
                          f"but {st.get('right')} is over {N.ring}")
            if st.get("degree") < 0:
                self.fail("the Tor degree must be non-negative")
        elif verb == "resolve":
            self.lookup(st.get("module"), "module")
        elif verb in ("reduce", "artin-rees", "intertwine"):
            self.ideal_command(st)
        elif verb == "snf":
            if len({len(r) for r in st.get("matrix")}) != 1:
                self.fail("matrix rows have different lengths")
        for key in ("s", "r", "length"):
            self.positive(st.get(key), key)

    def run(self, program):
        for i, st in enumerate(program.statements):
            self.index, self.stmt = i, st
            if isinstance(st, RingDecl):
                self.ring(st)
            elif isinstance(st, HomDecl):
                self.hom(st)
            elif isinstance(st, IdealDecl):
                self.ideal(st)
            elif isinstance(st, ModuleDecl):
                self.module(st)
            elif isinstance(st, SituationDecl):
                self.situation(st)
            else:
                self.command(st)
        return Session(program, self.symbols, self.rings, self.prelude)


def check_program(program, prelude=0):
    """Resolve every name and check kinds; raises SessionError."""
    return _Checker(prelude).run(program)


def parse_session(text, builtin=None):
    """Parse and check a session.

    ``builtin`` (e.g. ``"cusp"``) binds the situation ``E`` ahead of the text.
    """
    program = parse_program(text)
    if builtin is None:
        return check_program(program)
    spec = builtin[len("builtin:"):] if builtin.startswith("builtin:") else builtin
    program = Program((SituationDecl("E", builtin=spec),) + program.statements)
    return check_program(program, prelude=1)
