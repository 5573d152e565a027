"""The session language: AST, parser and pretty-printer.

A session is a list of statements, each terminated by ``;``::

    ring B = QQ[t];
    ring A = QQ[x,y]/(y^2 - x^3);
    hom f : A -> B = {x -> t^2, y -> t^3} gens (1, t);
    situation E = excision(f, ideal(x, y));
    gw E;
    prozero gw(E) upto s=3 r=8;

Polynomials stay as expression trees (see ``prok.poly.parse``) so that
``parse(pretty(ast)) == ast`` holds structurally.
"""

from dataclasses import dataclass

from ..poly.parse import ParseError, TokenStream, format_expr, parse_expr, tokenize

KEYWORDS = ("artin-rees", "tor-depth")

DECLARATIONS = ("ring", "hom", "ideal", "module", "situation")
COMMANDS = ("gw", "conductor", "prozero", "proiso", "criteria", "tor", "resolve", "mennicke",
            "reduce", "artin-rees", "snf", "validate", "kernel", "swan", "klow", "intertwine")


# AST -------------------------------------------------------------------------

@dataclass(frozen=True)
class IdealExpr:
    """A named ideal or an explicit generator list, optionally raised to a power."""
    name: str = None
    gens: tuple = None
    power: int = 1


@dataclass(frozen=True)
class SystemExpr:
    kind: str           # gw | tor | swan
    args: tuple         # names (str) and integers


@dataclass(frozen=True)
class RingDecl:
    name: str
    base: str
    variables: tuple
    relations: tuple = ()


@dataclass(frozen=True)
class HomDecl:
    name: str
    source: str
    target: str
    images: tuple       # ((var, expr), ...)
    gens: tuple = None


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ring: str
    gens: tuple


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    ring: str
    rows: tuple         # rows = generators, columns = relations


@dataclass(frozen=True)
class SituationDecl:
    name: str
    hom: str = None
    ideal: IdealExpr = None
    builtin: str = None


@dataclass(frozen=True)
class Command:
    """``verb`` plus keyword arguments stored as a sorted tuple of pairs."""
    verb: str
    args: tuple = ()

    def get(self, key, default=None):
        for k, v in self.args:
            if k == key:
                return v
        return default


@dataclass(frozen=True)
class Program:
    statements: tuple = ()


def command(verb, **kw):
    return Command(verb, tuple(sorted((k, v) for k, v in kw.items() if v is not None)))


# parser ----------------------------------------------------------------------

def _name(ts, what="a name"):
    return ts.expect_kind("ident", what).text


def _int(ts, what="an integer"):
    neg = bool(ts.accept("-"))
    v = int(ts.expect_kind("num", what).text)
    return -v if neg else v


def _expr_list(ts, close=")"):
    out = []
    if ts.at(close):
        return tuple(out)
    out.append(parse_expr(ts))
    while ts.accept(","):
        out.append(parse_expr(ts))
    return tuple(out)


def _paren_exprs(ts):
    ts.expect("(")
    out = _expr_list(ts)
    ts.expect(")")
    return out


def _power(ts):
    if ts.accept("^"):
        return _int(ts, "an integer exponent")
    return 1


def _ideal_expr(ts):
    if ts.accept("ideal"):
        gens = _paren_exprs(ts)
        return IdealExpr(gens=gens, power=_power(ts))
    if ts.at("("):
        gens = _paren_exprs(ts)
        return IdealExpr(gens=gens, power=_power(ts))
    return IdealExpr(name=_name(ts, "an ideal"), power=_power(ts))


def _base_ring(ts):
    t = ts.peek()
    name = _name(ts, "a coefficient ring")
    if name in ("QQ", "ZZ"):
        return name
    if name == "GF":
        ts.expect("(")
        p = _int(ts, "a prime")
        ts.expect(")")
        return f"GF({p})"
    raise ParseError(f"unknown coefficient ring {name!r}", t.line, t.col)


def _builtin_spec(ts):
    kind = _name(ts, "a builtin name")
    if not ts.accept("("):
        return kind
    args = []
    while True:
        t = ts.peek()
        if t.kind == "num":
            args.append(str(_int(ts)))
        else:
            args.append(_base_ring(ts))
        if not ts.accept(","):
            break
    ts.expect(")")
    return f"{kind}({', '.join(args)})"


def _ring_decl(ts):
    name = _name(ts)
    ts.expect("=")
    base = _base_ring(ts)
    variables = []
    ts.expect("[")
    if not ts.at("]"):
        variables.append(_name(ts, "a variable"))
        while ts.accept(","):
            variables.append(_name(ts, "a variable"))
    ts.expect("]")
    rels = ()
    if ts.accept("/"):
        rels = _paren_exprs(ts)
    return RingDecl(name, base, tuple(variables), rels)


def _hom_decl(ts):
    name = _name(ts)
    ts.expect(":")
    source = _name(ts, "a ring")
    ts.expect("->")
    target = _name(ts, "a ring")
    ts.expect("=")
    ts.expect("{")
    images = []
    if not ts.at("}"):
        while True:
            var = _name(ts, "a variable")
            ts.expect("->")
            images.append((var, parse_expr(ts)))
            if not ts.accept(","):
                break
    ts.expect("}")
    gens = None
    if ts.accept("gens"):
        gens = _paren_exprs(ts)
    return HomDecl(name, source, target, tuple(images), gens)


def _ideal_decl(ts):
    name = _name(ts)
    ts.expect("in")
    ring = _name(ts, "a ring")
    ts.expect("=")
    return IdealDecl(name, ring, _paren_exprs(ts))


def _matrix(ts, entry):
    ts.expect("[")
    rows = []
    while True:
        ts.expect("[")
        row = [entry(ts)]
        while ts.accept(","):
            row.append(entry(ts))
        ts.expect("]")
        rows.append(tuple(row))
        if not ts.accept(","):
            break
    ts.expect("]")
    return tuple(rows)


def _module_decl(ts):
    name = _name(ts)
    ts.expect("over")
    ring = _name(ts, "a ring")
    ts.expect("=")
    ts.expect("coker")
    return ModuleDecl(name, ring, _matrix(ts, parse_expr))


def _situation_decl(ts):
    name = _name(ts)
    ts.expect("=")
    if ts.accept("builtin"):
        ts.expect(":")
        return SituationDecl(name, builtin=_builtin_spec(ts))
    ts.expect("excision")
    ts.expect("(")
    hom = _name(ts, "a homomorphism")
    ts.expect(",")
    ideal = _ideal_expr(ts)
    ts.expect(")")
    return SituationDecl(name, hom=hom, ideal=ideal)


def _system_expr(ts):
    t = ts.peek()
    kind = _name(ts, "a system (gw, tor or swan)")
    if kind not in ("gw", "tor", "swan"):
        raise ParseError(f"unknown system {kind!r}", t.line, t.col)
    ts.expect("(")
    args = [_name(ts)]
    while ts.accept(","):
        args.append(_int(ts) if ts.peek().kind in ("num", "op") else _name(ts))
    ts.expect(")")
    return SystemExpr(kind, tuple(args))


def _upto(ts):
    if not ts.accept("upto"):
        return None, None
    S = r = None
    while ts.at("s") or ts.at("r"):
        key = ts.next().text
        ts.expect("=")
        if key == "s":
            S = _int(ts)
        else:
            r = _int(ts)
    return S, r


def _over(ts):
    return _name(ts, "a ring") if ts.accept("over") else None


def _bound(ts):
    ts.expect("bound")
    return _int(ts, "a bound")


def _command(ts, verb):
    if verb in ("gw", "conductor", "validate", "kernel", "swan"):
        return command(verb, target=_name(ts))
    if verb == "klow":
        target = _name(ts)
        ts.expect("degree")
        return command(verb, target=target, degree=_int(ts))
    if verb in ("prozero", "proiso"):
        system = _system_expr(ts)
        S, r = _upto(ts)
        return command(verb, system=system, s=S, r=r)
    if verb == "criteria":
        target = _name(ts)
        depth = None
        if ts.accept("tor-depth"):
            depth = _int(ts)
        S, r = _upto(ts)
        return command(verb, target=target, depth=depth, s=S, r=r)
    if verb == "tor":
        ts.expect("(")
        m = _name(ts, "a module")
        ts.expect(",")
        n = _name(ts, "a module")
        ts.expect(",")
        deg = _int(ts, "a degree")
        ts.expect(")")
        return command(verb, left=m, right=n, degree=deg)
    if verb == "resolve":
        m = _name(ts, "a module")
        length = None
        if ts.accept("length"):
            length = _int(ts)
        return command(verb, module=m, length=length)
    if verb == "mennicke":
        target = _name(ts)
        ts.expect("with")
        vals = {}
        while True:
            key = ts.peek()
            k = _name(ts, "b or x")
            if k not in ("b", "x") or k in vals:
                raise ParseError("expected 'b = ...' and 'x = ...'", key.line, key.col)
            ts.expect("=")
            vals[k] = parse_expr(ts)
            if not ts.accept(","):
                break
        if set(vals) != {"b", "x"}:
            ts.error("mennicke needs both b and x")
        return command(verb, target=target, b=vals["b"], x=vals["x"])
    if verb in ("reduce", "artin-rees", "intertwine"):
        first = _ideal_expr(ts)
        if verb == "reduce":
            ts.expect("in")
        else:
            ts.expect(",")
        second = _ideal_expr(ts)
        ring = _over(ts)
        return command(verb, first=first, second=second, ring=ring, bound=_bound(ts))
    if verb == "snf":
        matrix = _matrix(ts, _int)
        over = _base_ring(ts) if ts.accept("over") else None
        return command(verb, matrix=matrix, over=over)
    raise AssertionError(verb)


def _statement(ts):
    t = ts.peek()
    if t.kind != "ident":
        ts.error("expected a declaration or a command")
    word = t.text
    ts.next()
    if word == "ring":
        stmt = _ring_decl(ts)
    elif word == "hom":
        stmt = _hom_decl(ts)
    elif word == "ideal":
        stmt = _ideal_decl(ts)
    elif word == "module":
        stmt = _module_decl(ts)
    elif word == "situation":
        stmt = _situation_decl(ts)
    elif word in COMMANDS:
        stmt = _command(ts, word)
    else:
        raise ParseError(f"unknown statement {word!r}", t.line, t.col)
    ts.expect(";")
    return stmt


def parse_program(text):
    """Parse session text into a ``Program``; raises ParseError with line/column."""
    ts = TokenStream(tokenize(text, keywords=KEYWORDS))
    out = []
    while ts.peek().kind != "eof":
        out.append(_statement(ts))
    return Program(tuple(out))


# pretty-printer --------------------------------------------------------------

def _exprs(es):
    return ", ".join(format_expr(e) for e in es)


def format_ideal(I):
    if I.name is not None:
        core = I.name
    else:
        core = f"({_exprs(I.gens)})"
    return core if I.power == 1 else f"{core}^{I.power}"


def format_system(S):
    return f"{S.kind}({', '.join(str(a) for a in S.args)})"


def _format_upto(c):
    parts = []
    if c.get("s") is not None:
        parts.append(f"s={c.get('s')}")
    if c.get("r") is not None:
        parts.append(f"r={c.get('r')}")
    return " upto " + " ".join(parts) if parts else ""


def _format_matrix(rows, entry):
    return "[" + ", ".join("[" + ", ".join(entry(e) for e in row) + "]" for row in rows) + "]"


def _format_command(c):
    v = c.verb
    if v in ("gw", "conductor", "validate", "kernel", "swan"):
        return f"{v} {c.get('target')}"
    if v == "klow":
        return f"klow {c.get('target')} degree {c.get('degree')}"
    if v in ("prozero", "proiso"):
        return f"{v} {format_system(c.get('system'))}{_format_upto(c)}"
    if v == "criteria":
        s = f"criteria {c.get('target')}"
        if c.get("depth") is not None:
            s += f" tor-depth {c.get('depth')}"
        return s + _format_upto(c)
    if v == "tor":
        return f"tor({c.get('left')}, {c.get('right')}, {c.get('degree')})"
    if v == "resolve":
        s = f"resolve {c.get('module')}"
        return s + (f" length {c.get('length')}" if c.get("length") is not None else "")
    if v == "mennicke":
        return f"mennicke {c.get('target')} with b = {format_expr(c.get('b'))}, x = {format_expr(c.get('x'))}"
    if v in ("reduce", "artin-rees", "intertwine"):
        sep = " in " if v == "reduce" else ", "
        s = f"{v} {format_ideal(c.get('first'))}{sep}{format_ideal(c.get('second'))}"
        if c.get("ring") is not None:
            s += f" over {c.get('ring')}"
        return s + f" bound {c.get('bound')}"
    if v == "snf":
        s = "snf " + _format_matrix(c.get("matrix"), str)
        return s + (f" over {c.get('over')}" if c.get("over") else "")
    raise AssertionError(v)


def format_statement(st):
    if isinstance(st, RingDecl):
        s = f"ring {st.name} = {st.base}[{', '.join(st.variables)}]"
        if st.relations:
            s += f"/({_exprs(st.relations)})"
    elif isinstance(st, HomDecl):
        images = ", ".join(f"{v} -> {format_expr(e)}" for v, e in st.images)
        s = f"hom {st.name} : {st.source} -> {st.target} = {{{images}}}"
        if st.gens is not None:
            s += f" gens ({_exprs(st.gens)})"
    elif isinstance(st, IdealDecl):
        s = f"ideal {st.name} in {st.ring} = ({_exprs(st.gens)})"
    elif isinstance(st, ModuleDecl):
        s = f"module {st.name} over {st.ring} = coker {_format_matrix(st.rows, format_expr)}"
    elif isinstance(st, SituationDecl):
        if st.builtin is not None:
            s = f"situation {st.name} = builtin:{st.builtin}"
        else:
            s = f"situation {st.name} = excision({st.hom}, {format_ideal(st.ideal)})"
    else:
        s = _format_command(st)
    return s + ";"


def format_program(prog):
    return "".join(format_statement(st) + "\n" for st in prog.statements)
