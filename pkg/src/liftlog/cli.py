"""Command-line front end: ``liftlog <group> <command> [options]``.

Every command builds a report (command echo, ring, inputs, outputs,
citations, discrepancy flags and, with --verify, oracle checks) and prints
it as text or JSON. Exit codes: 0 success, 1 usage or input error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from .charts import (
    MonomialMap,
    UnramifiedChartWarning,
    chart_liftable,
    direct_lift,
    induced_weight,
    lifts_for_weight,
    lifts_regularly,
    pullback_weight,
    ramified_coordinates,
    tangency_check,
)
from .closures import default_oracle_k, integral_closure, integral_members_oracle, rr_closure
from .derivations import (
    GradedDerivation,
    apply,
    ZERO,
    DerivationModule,
    module_equal,
    module_subset,
    preserves,
    staircase_T_2var,
    staircase_exponents,
    tangent_module,
    tangent_piece,
    degree_box,
)
from .errors import LiftlogError
from .monomial import (
    MonomialIdeal,
    RingContext,
    intersect,
    is_m_primary,
    member,
    power,
    quotient,
    radical,
)
from .newton import newton_polyhedron
from .parsing import parse_derivation, parse_ideal, parse_map, parse_ring_and_ideal
from .semigroup import (
    NumericalSemigroup,
    SemigroupIdeal,
    sgr_is_regular,
    sgr_power,
    sgr_quotient,
    sgr_rr_report,
    sgr_tangent,
    sgr_tangent_ring,
)
from .valuations import (
    WeightValuation,
    liftable_module,
    log_module,
    rees_valuations,
    sandwich_report,
    value,
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------- inputs

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def read_ideal(text, ring=None, ctx=None):
    """Ideal from ``ring x,y; gens``, or bare gens against --ring / inferred names."""
    text = text.strip()
    if text.startswith("ring"):
        return parse_ring_and_ideal(text)
    if ctx is None:
        if ring:
            ctx = RingContext.of(ring)
        else:
            names = []
            for m in _NAME.finditer(text):
                if m.group() not in names:
                    names.append(m.group())
            if not names:
                raise UsageError("cannot infer variables; pass --ring or a 'ring ...;' header")
            ctx = RingContext(tuple(names))
    if text == "0":
        return ctx, MonomialIdeal.zero(ctx)
    return ctx, parse_ideal(text, ctx)


def _ints(text):
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _module_json(M: DerivationModule):
    return {"text": str(M), "generators": M.to_json()}


# ----------------------------------------------------------- bookkeeping

# Known divergences between published worked values and what the toolkit
# derives; each triggers on specific inputs and only annotates the report.
DISCREPANCIES = {
    "weighted-log-module": "published example prints (x^2,y)∂y for ν(x)=4, ν(y)=9; "
                           "derived (x^3,y)∂y since ν(x^2)=8 < ν(y)=9 and the direct lift rejects x^2∂y",
    "staircase-orientation": "displayed staircase formula puts max(a_i - a_{i+1}) on the y-power; "
                             "the worked values require max(b_{i+1} - b_i) there; both are reported",
    "semigroup-maximal-tangent": "published example lists two generators t∂t, t^2∂t for T(m) over <4,5,6,7>; "
                                 "the exhaustive order scan gives orders {1,2,3,4}",
}


class Report:
    def __init__(self, command, ring=None):
        self.data = {
            "command": command,
            "ring": list(ring.variable_names) if ring else None,
            "inputs": {},
            "outputs": {},
            "citations": [],
            "discrepancy_flags": [],
            "verification": {"ran": False, "ok": True, "checks": []},
        }

    def inputs(self, **kw):
        self.data["inputs"].update(kw)

    def out(self, **kw):
        self.data["outputs"].update(kw)

    def cite(self, *tags):
        for t in tags:
            if t not in self.data["citations"]:
                self.data["citations"].append(t)

    def flag(self, key):
        entry = {"id": key, "note": DISCREPANCIES[key]}
        if entry not in self.data["discrepancy_flags"]:
            self.data["discrepancy_flags"].append(entry)

    def check(self, name, ok, detail=None):
        v = self.data["verification"]
        v["ran"] = True
        v["checks"].append({"name": name, "ok": bool(ok), **({"detail": detail} if detail else {})})
        v["ok"] = v["ok"] and bool(ok)

    @property
    def ok(self):
        return self.data["verification"]["ok"]


def render_text(data) -> str:
    lines = [f"command: {data['command']}"]
    if data["ring"]:
        lines.append(f"ring: {', '.join(data['ring'])}")
    for k, v in data["inputs"].items():
        lines.append(f"input {k}: {_text_value(v)}")
    for k, v in data["outputs"].items():
        lines.append(f"{k}: {_text_value(v)}")
    if data["citations"]:
        lines.append("citations: " + ", ".join(data["citations"]))
    for f in data["discrepancy_flags"]:
        lines.append(f"FLAG {f['id']}: {f['note']}")
    ver = data["verification"]
    if ver["ran"]:
        lines.append(f"verification: {'ok' if ver['ok'] else 'FAILED'}")
        for c in ver["checks"]:
            tail = f" ({c['detail']})" if "detail" in c else ""
            lines.append(f"  [{'ok' if c['ok'] else 'FAIL'}] {c['name']}{tail}")
    return "\n".join(lines)


def _text_value(v):
    if isinstance(v, dict) and "text" in v:
        return v["text"]
    if isinstance(v, (dict, list)):
        return json.dumps(v, ensure_ascii=False, sort_keys=True)
    return str(v)


# ------------------------------------------------------------- commands

def cmd_ideal(args, rep):
    ctx, I = read_ideal(args.ideal, args.ring)
    rep.data["ring"] = list(ctx.variable_names)
    rep.inputs(I=str(I))
    op = args.op
    if op in ("sum", "product", "intersect", "quotient"):
        if not args.other:
            raise UsageError(f"ideal {op} needs -J")
        _, J = read_ideal(args.other, ctx=ctx) if not args.other.strip().startswith("ring") else read_ideal(args.other)
        rep.inputs(J=str(J))
        res = {"sum": lambda: I + J, "product": lambda: I * J, "intersect": lambda: intersect(I, J),
               "quotient": lambda: quotient(I, J)}[op]()
    elif op == "power":
        res = power(I, args.k)
        rep.inputs(k=args.k)
    elif op == "radical":
        res = radical(I)
    else:
        res = I
        rep.out(m_primary=is_m_primary(I))
    rep.out(result=str(res), generators=[list(g) for g in res.gens])
    if args.verify and op == "quotient":
        rep.check("quotient times divisor lies in dividend", (res * J) <= I)


def cmd_closure(args, rep):
    ctx, I = read_ideal(args.ideal, args.ring)
    rep.data["ring"] = list(ctx.variable_names)
    rep.inputs(I=str(I))
    if args.kind == "rr":
        r = rr_closure(I, n_max=args.n_max, window=args.window)
        rep.out(**r.to_json())
        rep.cite("ratliff-rush-colon-stabilization", "high-powers-agree")
        if args.verify:
            rep.check("power check I^m = Î^m", r.power_check_passed)
            rep.check("I ⊆ Î", I <= r.closure)
            rep.check("Î ⊆ Ī", r.closure <= integral_closure(I))
    else:
        bar = integral_closure(I)
        rep.out(closure=[list(g) for g in bar.gens], closure_text=str(bar))
        rep.cite("integral-closure-newton-polyhedron", "integral-dependence-equation")
        if args.verify:
            import itertools
            box = I.max_exponents()
            pts = list(itertools.product(*(range(m + 1) for m in box)))
            k = args.k_max or default_oracle_k(I)
            oracle = integral_members_oracle(I, pts, k)
            bad = [p for p in pts if oracle[p] != member(bar, p)]
            rep.check(f"power oracle agrees on {len(pts)} box points (k_max={k})", not bad,
                      f"disagreements {bad[:5]}" if bad else None)


def cmd_newton(args, rep):
    ctx, I = read_ideal(args.ideal, args.ring)
    rep.data["ring"] = list(ctx.variable_names)
    rep.inputs(I=str(I))
    P = newton_polyhedron(I)
    rep.out(facets=[{"w": list(w), "d": d} for w, d in P.facets], text=str(P))
    rep.cite("integral-closure-newton-polyhedron", "rees-valuations-as-facets")
    if args.verify:
        rep.check("generators satisfy every facet", all(P.contains(g) for g in I.gens))
        rep.check("every facet is tight on a generator", all(any(sum(a * b for a, b in zip(w, g)) == d for g in I.gens)
                                                         for w, d in P.facets))
        if ctx.n == 2:
            rep.check("sweep and double description agree",
                      newton_polyhedron(I, method="sweep").facets == newton_polyhedron(I, method="dd").facets)


def _verify_tangent(rep, I, T):
    rep.check("every generator preserves I", all(preserves(g, I) for g in T.generators))
    hi = T.box[1]
    bad = [b for b in degree_box(I.ctx.n, hi) if tangent_piece(I, b) != T.piece(b)]
    rep.check(f"graded pieces recomputed on [-1,{hi}]^{I.ctx.n}", not bad, f"degrees {bad[:3]}" if bad else None)


def _staircase_outputs(rep, I):
    p, q = staircase_exponents(I)
    S = staircase_T_2var(I)
    rep.out(staircase={"p": p, "q": q, "module": str(S),
                       "displayed_formula_module": f"R x∂x + R y∂y + R y^{q}∂x + R x^{p}∂y"})
    if p != q:
        rep.flag("staircase-orientation")
    return S


def cmd_der(args, rep):
    ctx, I = read_ideal(args.ideal, args.ring)
    rep.data["ring"] = list(ctx.variable_names)
    rep.inputs(I=str(I))
    if args.kind == "module":
        T = tangent_module(I, args.box_margin)
        rep.out(module=_module_json(T))
        rep.cite("derivations-preserving-ideal")
        S = None
        if ctx.n == 2 and is_m_primary(I) and len(I.gens) > 1:
            S = _staircase_outputs(rep, I)
            rep.cite("staircase-generators")
        if args.verify:
            _verify_tangent(rep, I, T)
            if S is not None:
                rep.check("general algorithm equals staircase formula", module_equal(T, S))
    elif args.kind == "staircase":
        S = _staircase_outputs(rep, I)
        rep.cite("staircase-generators")
        if args.verify:
            rep.check("staircase formula equals general algorithm", module_equal(S, tangent_module(I, args.box_margin)))
    elif args.kind == "log":
        if not args.weight:
            raise UsageError("der log needs -w")
        v = WeightValuation(ctx, _ints(args.weight))
        M = log_module(v, I)
        rep.inputs(w=list(v.w))
        rep.out(module=_module_json(M))
        rep.cite("log-module-valuation-inequality", "log-module-generator-sufficiency")
        if ctx.n == 2 and not I.is_unit() and radical(I) == MonomialIdeal.maximal(ctx) \
                and tuple(x // max(1, _gcd(v.w)) for x in v.w) == (4, 9):
            rep.flag("weighted-log-module")
        if args.verify:
            _verify_log(rep, v, I, M, args)
    elif args.kind == "check":
        if not args.derivation:
            raise UsageError("der check needs -d")
        b, c = parse_derivation(args.derivation, ctx)
        d = GradedDerivation(b, c)
        T = tangent_module(I, args.box_margin)
        rep.inputs(d=d.format(ctx))
        rep.out(preserves=preserves(d, I), in_module=T.contains(d), module=_module_json(T))
        rep.cite("derivations-preserving-ideal")
        if args.verify:
            rep.check("membership agrees with preservation", preserves(d, I) == T.contains(d))


def _gcd(w):
    import math
    return math.gcd(*w)


def _probes(ctx, hi, rng, extra=10):
    """Monomial derivations x^u ∂_i with u in [0, hi]^n, plus random sums."""
    import itertools
    n = ctx.n
    out = [GradedDerivation.monomial(u, i) for u in itertools.product(range(hi + 1), repeat=n) for i in range(n)]
    for _ in range(extra):
        b = tuple(rng.randint(0, hi) for _ in range(n))
        c = tuple(rng.randint(-3, 3) for _ in range(n))
        if any(c):
            out.append(GradedDerivation(b, c))
    return out


def _verify_log(rep, v, I, M, args):
    ctx = I.ctx
    gens_ok = all(
        (r := apply(g, a)) is ZERO or value(v, r[1]) >= value(v, a)
        for g in M.generators for a in I.gens
    )
    rep.check("ν(∂f) >= ν(f) on the generators of I", gens_ok)
    if args.chart:
        src, tgt, rows = parse_map(args.chart)
        if src != ctx:
            src = RingContext(tuple(ctx.variable_names))
        chart = MonomialMap(src, tgt, rows)
        W = _ints(args.target_weight) if args.target_weight else None
        if W is None:
            raise UsageError("--chart needs --target-weight")
        if pullback_weight(chart, W).w != v.w:
            raise UsageError(f"target weight {W} pulls back to {pullback_weight(chart, W).w}, not {v.w}")
        rep.check("every generator lifts through the chart without lowering the target weight",
                  all(lifts_for_weight(chart, g, W) for g in M.generators))
        rng = random.Random(args.seed)
        probes = _probes(ctx, max(3, M.top_degree() + 1), rng)
        bad = [d.format(ctx) for d in probes if M.contains(d) != lifts_for_weight(chart, d, W)]
        rep.check(f"criterion agrees with direct lift on {len(probes)} probes", not bad, f"{bad[:3]}" if bad else None)
        rejected = [d.format(ctx) for d in probes if d.slot() is not None and not lifts_for_weight(chart, d, W)
                    and sum(d.degree) + 1 <= M.top_degree() + 1]
        rep.out(rejected_by_lift=sorted(rejected)[:12])


def cmd_lift(args, rep):
    if args.kind == "blowup":
        ctx, I = read_ideal(args.ideal, args.ring)
        rep.data["ring"] = list(ctx.variable_names)
        rep.inputs(I=str(I))
        r = sandwich_report(I, n_max=args.n_max, box_margin=args.box_margin)
        rep.out(**r.to_json())
        rep.cite("liftable-equals-log-module", "sandwich-inclusion", "defining-ideal-independence",
                 "uniform-implies-differential")
        if r.ideal.gens == ((10, 0), (8, 1), (1, 4), (0, 5)):
            rep.cite("staircase-generators")
        if args.verify:
            rep.check("T(I) ⊆ T(Î) ⊆ L ⊆ T(Ī)", r.chain_ok, None if r.chain_ok else str(r.chain))
            rep.check("L ⊆ T(√I)", module_subset(r.L, r.T_rad))
            for v, _ in r.rees:
                lw = log_module(v, I)
                same = module_equal(lw, log_module(v, power(I, 2))) and module_equal(lw, log_module(v, radical(I)))
                rep.check(f"log module for w={v.w} independent of defining ideal", same)
            if r.uniformly_ramified:
                rep.check("uniformly ramified implies differentially ramified", r.differentially_ramified)
    else:
        if not args.map:
            raise UsageError("lift chart needs --map")
        src, tgt, rows = parse_map(args.map)
        chart = MonomialMap(src, tgt, rows)
        crit = [c.strip() for c in (args.critical or "").split(",") if c.strip()]
        if not crit:
            raise UsageError("lift chart needs --critical")
        for c in crit:
            if c not in tgt.variable_names:
                raise UsageError(f"unknown critical coordinate {c!r}")
        rep.data["ring"] = list(src.variable_names)
        rep.inputs(map=str(chart), critical=crit)
        import warnings
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", UnramifiedChartWarning)
            M = chart_liftable(chart, crit)
        rep.out(weights={c: list(induced_weight(chart, c).w) for c in crit}, module=_module_json(M),
                warnings=[str(w.message) for w in caught])
        rep.cite("chart-lift-log-criterion", "liftable-tangent-to-critical-locus")
        checks = []
        for text in args.check or []:
            b, c = parse_derivation(text, src)
            d = GradedDerivation(b, c)
            img = direct_lift(chart, d)
            regular = lifts_regularly(chart, d, crit)
            checks.append({"d": d.format(src), "in_module": M.contains(d), "lift": img.values_str(),
                           "lifts_regularly": regular,
                           "tangent": tangency_check(chart, d, crit) if regular else None})
        if checks:
            rep.out(checks=checks)
        if args.verify:
            rep.check("generators lift regularly", all(lifts_regularly(chart, g, crit) for g in M.generators))
            rep.check("generators are tangent to the critical locus",
                      all(tangency_check(chart, g, crit) for g in M.generators))
            ramified = [c for c in crit if chart.coord(c) in ramified_coordinates(chart)]
            if ramified:
                Mr = chart_liftable(chart, ramified)
                rng = random.Random(args.seed)
                probes = _probes(src, max(3, Mr.top_degree() + 1), rng)
                bad = [d.format(src) for d in probes if Mr.contains(d) != lifts_regularly(chart, d, ramified)]
                rep.check(f"criterion agrees with direct lift on {len(probes)} probes", not bad,
                          f"{bad[:3]}" if bad else None)


def cmd_sgr(args, rep):
    S = NumericalSemigroup(_ints(args.gens))
    rep.inputs(semigroup=list(S.generators))
    rep.out(frobenius=S.frobenius)

    def ideal(text, default=None):
        if not text:
            if default is None:
                raise UsageError(f"sgr {args.kind} needs --ideal")
            return default
        return SemigroupIdeal(S, _ints(text))

    if args.kind == "rr":
        E = ideal(args.ideal)
        rep.inputs(ideal=list(E.gens))
        r = sgr_rr_report(E, n_max=args.n_max)
        rep.out(closure=list(r.closure.gens), closure_text=str(r.closure), stabilized_at=r.stabilized_at,
                power_check_passed=r.power_check_passed,
                colons=[{"n": n, "quotient": list(sgr_quotient(sgr_power(E, n + 1), sgr_power(E, n)).gens)}
                        for n in range(1, min(r.stabilized_at + 1, args.n_max) + 1)])
        rep.cite("ratliff-rush-colon-stabilization", "high-powers-agree")
        if args.verify:
            rep.check("power check", r.power_check_passed)
            rep.check("E ⊆ closure", all(e in r.closure for e in E.gens))
    elif args.kind in ("tangent", "ring"):
        m = SemigroupIdeal.maximal(S)
        E = ideal(args.ideal, m) if args.kind == "tangent" else SemigroupIdeal.unit(S)
        K = sgr_tangent(E)
        rep.inputs(ideal=list(E.gens))
        rep.out(orders=K.to_json(), module=K.module_str(), regular=sgr_is_regular(S))
        rep.cite("derivations-preserving-ideal", "one-dimensional-regularity")
        if S.generators == (4, 5, 6, 7) and E == m:
            rep.flag("semigroup-maximal-tangent")
        if args.verify:
            window = range(0, max(S.conductor, E.conductor) + 10)
            ok = all((k in K) == (all((s + k - 1) in S for s in S.generators)
                                  and all((e + k - 1) in E for e in E.gens if e)) for k in window)
            rep.check("order set matches a direct scan", ok)
            if not sgr_is_regular(S):
                rep.check("no order 0 in a singular ring", K.min_order() is None or K.min_order() >= 1)
                rep.check("T(A) = T(m) in a singular ring", sgr_tangent_ring(S) == sgr_tangent(m))
    elif args.kind == "quotient":
        E, F = ideal(args.ideal), ideal(args.by)
        Q = sgr_quotient(E, F)
        rep.inputs(ideal=list(E.gens), by=list(F.gens))
        rep.out(quotient=list(Q.gens), quotient_text=str(Q))
    else:
        rep.out(regular=sgr_is_regular(S), gaps=S.gaps())


# ------------------------------------------------------------- corpus

def fixture_dir():
    return resources.files("liftlog") / "fixtures"


def load_fixtures(directory=None):
    base = Path(directory) if directory else fixture_dir()
    out = []
    for p in sorted(base.iterdir(), key=lambda p: p.name):
        if p.name.endswith(".json"):
            out.append(json.loads(p.read_text(encoding="utf-8")))
    return out


def _lookup(data, path):
    cur = data
    for part in path.split("."):
        if isinstance(cur, list):
            cur = cur[int(part)]
        else:
            cur = cur[part]
    return cur


def run_fixture(fx):
    """Run every command of a fixture; returns a list of (label, ok, detail)."""
    results = []
    for i, run in enumerate(fx["runs"]):
        data, code = run_command(["--format", "json", "--verify"] + run["argv"])
        label = f"{fx['name']}[{i}] {data['command'] if data else '?'}"
        problems = []
        if code != EXIT_OK:
            problems.append(f"exit code {code}")
        for path, want in run.get("expect", {}).items():
            try:
                got = _lookup(data, path)
            except (KeyError, IndexError, TypeError):
                problems.append(f"{path} missing")
                continue
            if got != want:
                problems.append(f"{path}: got {got!r}, want {want!r}")
        flags = {f["id"] for f in data.get("discrepancy_flags", [])} if data else set()
        for f in run.get("flags", []):
            if f not in flags:
                problems.append(f"flag {f} not raised")
        results.append((label, not problems, "; ".join(problems)))
    return results


def cmd_verify_corpus(args, rep):
    fixtures = load_fixtures(args.fixtures)
    rows = []
    for fx in fixtures:
        for label, ok, detail in run_fixture(fx):
            rows.append({"run": label, "ok": ok, **({"detail": detail} if detail else {})})
            rep.check(label, ok, detail or None)
    rep.out(fixtures=[fx["name"] for fx in fixtures], runs=len(rows))


# ------------------------------------------------------------- parser

def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--verify", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--box-margin", type=int, default=argparse.SUPPRESS)
    common.add_argument("--n-max", type=int, default=argparse.SUPPRESS)

    p = _Parser(prog="liftlog", parents=[common],
                description="Liftable derivations, closures and logarithmic modules of monomial ideals.")
    p.add_argument("--version", action="version", version=f"liftlog {__version__}")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def ideal_opts(q, required=True):
        q.add_argument("-I", "--ideal", required=required, help='e.g. "ring x,y; x^2, x*y"')
        q.add_argument("--ring", help="variable names when -I has no ring header")

    g = sub.add_parser("ideal", parents=[common], help="monomial ideal operations")
    g.add_argument("op", choices=["show", "radical", "sum", "product", "intersect", "quotient", "power"])
    ideal_opts(g)
    g.add_argument("-J", "--other")
    g.add_argument("-k", type=int, default=2)
    g.set_defaults(func=cmd_ideal)

    g = sub.add_parser("closure", parents=[common], help="Ratliff-Rush or integral closure")
    g.add_argument("kind", choices=["rr", "integral"])
    ideal_opts(g)
    g.add_argument("--window", type=int, default=2)
    g.add_argument("--k-max", type=int)
    g.set_defaults(func=cmd_closure)

    g = sub.add_parser("newton", parents=[common], help="Newton polyhedron facets")
    g.add_argument("kind", choices=["facets"])
    ideal_opts(g)
    g.set_defaults(func=cmd_newton)

    g = sub.add_parser("der", parents=[common], help="derivation modules")
    g.add_argument("kind", choices=["module", "log", "check", "staircase"])
    ideal_opts(g)
    g.add_argument("-w", "--weight")
    g.add_argument("-d", "--derivation")
    g.add_argument("--chart", help="map used to certify a log module, e.g. 'x = x; y = x^2*s'")
    g.add_argument("--target-weight")
    g.set_defaults(func=cmd_der)

    g = sub.add_parser("lift", parents=[common], help="liftable derivations")
    g.add_argument("kind", choices=["blowup", "chart"])
    ideal_opts(g, required=False)
    g.add_argument("--map")
    g.add_argument("--critical", help="comma-separated target coordinates")
    g.add_argument("--check", action="append", help="derivation to lift (repeatable)")
    g.set_defaults(func=cmd_lift)

    g = sub.add_parser("sgr", parents=[common], help="numerical semigroup rings")
    g.add_argument("--gens", required=True)
    g.add_argument("kind", choices=["rr", "tangent", "ring", "quotient", "regular"])
    g.add_argument("--ideal")
    g.add_argument("--by")
    g.set_defaults(func=cmd_sgr)

    g = sub.add_parser("verify-corpus", parents=[common], help="run the bundled worked examples")
    g.add_argument("--fixtures", help="directory of fixture JSON files")
    g.set_defaults(func=cmd_verify_corpus)
    return p


GLOBAL_DEFAULTS = {"format": "text", "verify": False, "seed": 0, "box_margin": 1, "n_max": 20}


def run_command(argv):
    """Parse and execute; returns (report dict or None, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    # set_defaults would leak into the subparsers through the shared parent actions
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if args.group == "lift" and args.kind == "blowup" and not args.ideal:
        raise UsageError("lift blowup needs -I")
    command = " ".join([args.group] + ([args.op] if hasattr(args, "op") else [])
                       + ([args.kind] if hasattr(args, "kind") else []))
    rep = Report(command)
    args.func(args, rep)
    code = EXIT_OK if rep.ok else EXIT_VERIFY
    return rep.data, code


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    fmt = "json" if "--format=json" in argv or any(a == "json" and argv[i - 1] == "--format"
                                                    for i, a in enumerate(argv) if i) else "text"
    try:
        data, code = run_command(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (LiftlogError, ValueError) as exc:
        print(f"liftlog: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if fmt == "json":
        print(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True))
    else:
        print(render_text(data))
    return code


if __name__ == "__main__":
    sys.exit(main())
