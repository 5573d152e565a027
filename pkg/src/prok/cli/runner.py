"""Execute a checked session and build its report stream."""

import time
from dataclasses import dataclass, field

from ..abgrp import FGAbelianGroup, diagonal, matmul, smith_normal_form
from ..builtins import load_builtin
from ..errors import (
    BoundExhausted,
    BudgetExceeded,
    ExcisionRejected,
    ProkError,
)
from ..excision import gw_birelative_k1, k_low_rules, mennicke, swan_sequence, validate_excision
from ..fpmod import FPModule, clear_caches, free_resolution, tor
from ..fpring import FPRing, RingHom, conductor, hom_kernel
from ..poly.domains import base_ring_from_name
from ..poly.gb import groebner_budget
from ..poly.parse import format_expr
from ..prosys import (
    DEFAULT_PRO_BUDGET,
    artin_rees_witness,
    criteria_report,
    gw_system,
    intertwine_check,
    powers_chain,
    pro_iso_certify,
    pro_zero_certify,
    reduction_index,
    swan_source_system,
    tor_system,
)
from .syntax import (
    Command,
    HomDecl,
    IdealDecl,
    ModuleDecl,
    RingDecl,
    SituationDecl,
    format_statement,
)

SCHEMA_VERSION = "prok-report/1"
DEFAULT_RESOLUTION_LENGTH = 4

# exit codes
OK, INTERNAL, CERT_FAILURE, INPUT_ERROR = 0, 1, 2, 3

_SEVERITY = {
    "ok": OK, "certified": OK,
    "refuted": CERT_FAILURE, "budget": CERT_FAILURE, "rejected": CERT_FAILURE,
    "bound-exhausted": CERT_FAILURE, "skipped": CERT_FAILURE,
    "error": INPUT_ERROR, "internal-error": INTERNAL,
}


def exit_code_for(statuses):
    codes = [_SEVERITY[s] for s in statuses]
    for c in (INPUT_ERROR, CERT_FAILURE, INTERNAL):
        if c in codes:
            return c
    return OK


@dataclass
class Options:
    budget_groebner: int = None
    budget_pro: tuple = DEFAULT_PRO_BUDGET
    resolution_length: int = DEFAULT_RESOLUTION_LENGTH


@dataclass
class Report:
    index: int
    command: str
    verb: str
    status: str
    result: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)
    provenance: str = "computed"
    seconds: float = 0.0

    def to_json(self, timing=True):
        out = {
            "index": self.index,
            "command": self.command,
            "verb": self.verb,
            "status": self.status,
            "result": self.result,
            "certificates": self.certificates,
            "provenance": self.provenance,
        }
        if timing:
            out["timing"] = {"seconds": round(self.seconds, 6)}
        return out


class _Failed:
    """Placeholder for a declaration that did not evaluate."""

    def __init__(self, name, status, message):
        self.name, self.status, self.message = name, status, message


class _Skip(Exception):
    def __init__(self, failed):
        self.failed = failed
        super().__init__(f"{failed.name!r} is unavailable: {failed.message}")


def _strs(polys):
    return [str(p) for p in polys]


class Runner:
    def __init__(self, session, options=None):
        self.session = session
        self.options = options or Options()
        self.env = {}

    # values -------------------------------------------------------------
    def value(self, name):
        v = self.env[name]
        if isinstance(v, _Failed):
            raise _Skip(v)
        return v

    def poly(self, R, e):
        return R.reduce(R.poly(format_expr(e)))

    def ideal(self, R, I):
        if I.name is not None:
            J = self.value(I.name)
        else:
            J = R.ideal([format_expr(e) for e in I.gens])
        return J if I.power == 1 else R.ideal_power(J, I.power)

    def situation(self, name):
        return self.value(name)

    def hom_of(self, name):
        v = self.value(name)
        return v.f if hasattr(v, "f") else v

    def pro_bounds(self, st):
        S, r = self.options.budget_pro
        return st.get("s") or S, st.get("r") or r

    # declarations ---------------------------------------------------------
    def declare(self, st):
        if isinstance(st, RingDecl):
            R = FPRing(base_ring_from_name(st.base), st.variables,
                       [format_expr(e) for e in st.relations])
            return R
        if isinstance(st, HomDecl):
            A, B = self.value(st.source), self.value(st.target)
            images = dict(st.images)
            imgs = [format_expr(images[v]) for v in A.vars]
            gens = None if st.gens is None else [format_expr(g) for g in st.gens]
            return RingHom(A, B, imgs, module_gens=gens)
        if isinstance(st, IdealDecl):
            R = self.value(st.ring)
            return R.ideal([format_expr(e) for e in st.gens])
        if isinstance(st, ModuleDecl):
            R = self.value(st.ring)
            ncols = len(st.rows[0])
            rels = [tuple(format_expr(row[j]) for row in st.rows) for j in range(ncols)]
            return FPModule(R, len(st.rows), rels)
        if isinstance(st, SituationDecl):
            if st.builtin is not None:
                return load_builtin(st.builtin)
            f = self.value(st.hom)
            return validate_excision(f, self.ideal(f.source, st.ideal), name=st.name)
        raise AssertionError(st)

    # commands ---------------------------------------------------------------
    def cmd_gw(self, st):
        E = self.situation(st.get("target"))
        gw = gw_birelative_k1(E)
        result = gw.to_json()
        result["is_zero"] = gw.is_zero()
        return "ok", result, {"recheck": gw.recheck(), "situation": E.certificates()}

    def cmd_validate(self, st):
        E = self.situation(st.get("target"))
        fresh = E.revalidate()
        return "ok", {"valid": True}, fresh.certificates()

    def cmd_conductor(self, st):
        f = self.hom_of(st.get("target"))
        C = conductor(f)
        A = f.source
        # every conductor element times every module generator lands in f(A)
        ok = all(f.preimage(f.target.reduce(f.apply_poly(c) * m)) is not None
                 for c in C.gens for m in f.module_gens)
        return "ok", {"ideal": _strs(C.gens), "ring": repr(A)}, {"multiplies_into_subring": ok}

    def cmd_kernel(self, st):
        f = self.hom_of(st.get("target"))
        K = hom_kernel(f)
        return "ok", {"kernel": _strs(K.gens), "injective": not K.gens}, {}

    def cmd_swan(self, st):
        E = self.situation(st.get("target"))
        seq = swan_sequence(E)
        coker = seq.cokernel()
        result = {"source": seq.source.to_json(), "target": seq.target.to_json(),
                  "surjective": seq.is_surjective(), "cokernel": coker.to_json()}
        return "ok", result, {"matrix": [list(map(str, r)) for r in seq.swan_vorst.matrix]}

    def cmd_klow(self, st):
        E = self.situation(st.get("target"))
        out = k_low_rules(E, st.get("degree"))
        prov = out.pop("provenance")
        return "ok", out, {}, prov

    def cmd_mennicke(self, st):
        E = self.situation(st.get("target"))
        b = format_expr(st.get("b"))
        x = format_expr(st.get("x"))
        M = mennicke(E, b, x)
        return "ok", M.to_json(), {"determinant_is_one": True, "congruent_to_identity_mod_I": True}

    def _system(self, S):
        if S.kind == "gw":
            return gw_system(self.situation(S.args[0]))
        if S.kind == "swan":
            return swan_source_system(self.situation(S.args[0]))
        if len(S.args) == 2:
            E = self.situation(S.args[0])
            return tor_system(E.A, E.I, S.args[1])
        R = self.value(S.args[0])
        return tor_system(R, self.value(S.args[1]), S.args[2])

    def cmd_prozero(self, st):
        S, r = self.pro_bounds(st)
        cert = pro_zero_certify(self._system(st.get("system")), S, r)
        certs = {"revalidated": cert.revalidate()} if cert.certified else {}
        return cert.status, cert.to_json(), certs

    def cmd_proiso(self, st):
        S, r = self.pro_bounds(st)
        cert = pro_iso_certify(self._system(st.get("system")).level_map, S, r)
        certs = {}
        if cert.status == "certified":
            certs = {"revalidated": cert.kernel.revalidate() and cert.cokernel.revalidate()}
        return cert.status, cert.to_json(), certs

    def cmd_criteria(self, st):
        E = self.situation(st.get("target"))
        S, r = self.pro_bounds(st)
        rep = criteria_report(E, n_max=st.get("depth") or 2, S_max=S, r_max=r)
        certs = rep.pop("certificates")
        layer3 = next(l for l in rep["layers"] if l["layer"] == 3)
        reval = {str(n): c.revalidate() for n, c in certs.items() if c.certified}
        status = "certified" if layer3["status"] == "certified" else layer3["status"]
        return status, rep, {"revalidated": reval}, "mixed"

    def cmd_tor(self, st):
        M, N = self.value(st.get("left")), self.value(st.get("right"))
        T = tor(M, N, st.get("degree"))
        return "ok", T.describe(), {}

    def cmd_resolve(self, st):
        M = self.value(st.get("module"))
        L = st.get("length") or self.options.resolution_length
        res = free_resolution(M, L)
        return "ok", {"ranks": list(res.ranks), "length": L}, {"is_complex": res.check_complex()}

    def _ideal_ring(self, st):
        name, variables = self.session.rings[self._index]
        if name is not None:
            return self.value(name)
        return FPRing("QQ", variables)

    def cmd_reduce(self, st):
        R = self._ideal_ring(st)
        Jp, J = self.ideal(R, st.get("first")), self.ideal(R, st.get("second"))
        res = reduction_index(R, Jp, J, st.get("bound"))
        certs = {}
        if res.n is not None:
            lhs = R.ideal_product(Jp, R.ideal_power(J, res.n))
            certs = {"product_equals_power": R.ideal_equal(lhs, R.ideal_power(J, res.n + 1))}
        return res.status, res.to_json(), certs

    def cmd_artin_rees(self, st):
        R = self._ideal_ring(st)
        I, K = self.ideal(R, st.get("first")), self.ideal(R, st.get("second"))
        w = artin_rees_witness(R, I, K, st.get("bound"))
        meet = R.ideal_intersection(R.ideal_power(I, w.s), K)
        certs = {"intersection_is_zero": R.ideal_is_zero(meet)}
        if w.minimality is not None:
            prev = R.ideal_power(I, w.s - 1) if w.s > 1 else R.ideal([1])
            certs["minimality_in_previous_power"] = (R.ideal_contains(prev, w.minimality)
                                                     and R.ideal_contains(K, w.minimality))
        return "certified", w.to_json(), certs

    def cmd_intertwine(self, st):
        R = self._ideal_ring(st)
        I, K = self.ideal(R, st.get("first")), self.ideal(R, st.get("second"))
        res = intertwine_check(powers_chain(R, I), powers_chain(R, K), st.get("bound"))
        return res.status, res.to_json(), {}

    def cmd_snf(self, st):
        D = base_ring_from_name(st.get("over") or "ZZ")
        M = [[D(x) for x in row] for row in st.get("matrix")]
        S, U, V = smith_normal_form(M, D)
        # cokernel of M acting on column vectors: relations are the columns
        G = FGAbelianGroup(len(M), [list(c) for c in zip(*M)], D)
        diag = [str(d) for d in diagonal(S)]
        result = {"diagonal": diag, "cokernel": G.to_json()}
        certs = {"unimodular_factorization": matmul(matmul(U, M, D), V, D) == S}
        return "ok", result, certs

    # driver -------------------------------------------------------------------
    def execute(self, i, st):
        self._index = i
        handler = getattr(self, "cmd_" + st.verb.replace("-", "_"))
        out = handler(st)
        prov = "computed"
        if len(out) == 4:
            status, result, certs, prov = out
        else:
            status, result, certs = out
        return Report(i, format_statement(st), st.verb, status, result, certs, prov)

    def run(self):
        reports = []
        budget = self.options.budget_groebner
        for i, st in enumerate(self.session.statements):
            t0 = time.perf_counter()
            try:
                if budget is not None:
                    with groebner_budget(budget):
                        rep = self._step(i, st)
                else:
                    rep = self._step(i, st)
            except Exception as exc:  # never let one command take the session down
                rep = self._failure(i, st, exc)
            if rep is not None:
                rep.index = i - self.session.prelude + 1
                rep.seconds = time.perf_counter() - t0
                reports.append(rep)
        return reports

    def _step(self, i, st):
        if isinstance(st, Command):
            return self.execute(i, st)
        self.env[st.name] = self.declare(st)
        return None

    def _failure(self, i, st, exc):
        if isinstance(exc, _Skip):
            status, result = "skipped", {"reason": str(exc)}
        elif isinstance(exc, ExcisionRejected):
            status, result = "rejected", {"axiom": exc.axiom, "witness": str(exc.witness),
                                          "message": str(exc)}
        elif isinstance(exc, BudgetExceeded):
            status, result = "budget", {"message": str(exc)}
        elif isinstance(exc, BoundExhausted):
            status, result = "bound-exhausted", {"message": str(exc)}
        elif isinstance(exc, ProkError):
            status, result = "error", {"message": str(exc)}
        else:
            status, result = "internal-error", {"message": f"{type(exc).__name__}: {exc}"}
        if not isinstance(st, Command):
            self.env[st.name] = _Failed(st.name, status, result.get("message", result.get("reason")))
            verb = type(st).__name__.replace("Decl", "").lower()
        else:
            verb = st.verb
        return Report(i, format_statement(st), verb, status, result, {}, "computed")


def run(session, options=None):
    """Execute ``session``; returns ``(reports, exit_code)``."""
    # start cold so budget outcomes depend on the session alone
    clear_caches()
    reports = Runner(session, options).run()
    return reports, exit_code_for(r.status for r in reports)


def report_document(reports, timing=True):
    return {"schema": SCHEMA_VERSION, "reports": [r.to_json(timing) for r in reports]}
