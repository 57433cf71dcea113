"""Command-line front end.

Every command prints one JSON report (``report_v`` 1) unless it writes a
file with ``-o``.  Exit codes: 0 when all checks pass, 2 when a check fails,
3 when a resource budget runs out, 4 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .errors import FvslabError, ParseError, ResourceLimit, SearchFailed, TooLarge

EXIT_OK, EXIT_FAIL, EXIT_RESOURCE, EXIT_PARSE = 0, 2, 3, 4


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


class Report:
    def __init__(self, argv: list):
        self.data: dict = {"report_v": 1, "command": list(argv), "checks": [], "result": {}}
        self.t0 = time.perf_counter()
        self.stream = sys.stdout

    def check(self, name: str, ok, expected=None, actual=None, cite: str | None = None) -> None:
        status = "pass" if ok else "fail"
        if ok is None:
            status = "skipped"
        row = {"name": name, "status": status, "expected": _jsonable(expected), "actual": _jsonable(actual)}
        if cite:
            row["cite"] = cite
        self.data["checks"].append(row)

    def result(self, **kw) -> None:
        self.data["result"].update({k: _jsonable(v) for k, v in kw.items()})

    @property
    def failed(self) -> bool:
        return any(c["status"] == "fail" for c in self.data["checks"])

    def finish(self) -> dict:
        self.data["elapsed_s"] = round(time.perf_counter() - self.t0, 3)
        return self.data


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("FVSLAB_BUDGET")
    return int(env) if env else None


def _read(path: str):
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.is_file():
        raise ParseError("no such file", path)
    return p


def _pdg(path: str):
    from .formats import read_pdg

    return read_pdg(_read(path))


def _psk(path: str):
    from .formats import read_psk

    return read_psk(_read(path))


# ----------------------------------------------------------------------
# gen


def _cmd_gen(args, rep: Report) -> int:
    from . import families as F
    from .formats import write_pdg, write_psk

    fam = args.family
    k, g, ell, r = args.k, args.g, args.l, args.r
    claim = None
    if fam == "dicycle":
        text = write_pdg(F.gen_dicycle(g))
        claim = F.dicycle_claim(g)
    elif fam == "octahedron":
        text = write_pdg(F.gen_octahedron_family(k))
        claim = F.octahedron_claim(k)
    elif fam == "okg":
        text = write_pdg(F.gen_Okg(k, g))
        claim = F.octahedron_claim(k, g)
    elif fam == "frieze":
        text = write_pdg(F.gen_frieze(k, g))
        claim = F.frieze_claim(k, g)
    elif fam == "c4-coating":
        text = write_pdg(F.gen_c4_coating(g).graph)
    elif fam == "small-digirth":
        _S, C = F.gen_small_digirth_family(g, k, r, budget=_budget(args))
        text = write_pdg(C.graph)
        claim = F.small_digirth_claim(g, k, r)
    elif fam == "glk":
        text = write_psk(F.gen_Glk_skeleton(k, ell))
    elif fam == "glkr":
        text = write_psk(F.gen_Glkr_skeleton(k, r, ell))
    elif fam == "random":
        text = write_pdg(F.gen_random_plane_digraph(args.n, args.seed))
    elif fam == "random-skeleton":
        text = write_psk(F.gen_random_skeleton(args.n, args.seed))
    else:  # argparse restricts the choices
        raise ParseError(f"unknown family {fam!r}")
    if args.o:
        Path(args.o).write_text(text, encoding="utf-8")
        if claim is not None:
            side = {"family": claim.family, "params": claim.params, "expected": claim.expected, "provenance": claim.provenance}
            Path(args.o + ".claim.json").write_text(json.dumps(_jsonable(side), indent=1) + "\n", encoding="utf-8")
        rep.result(written=args.o)
        return EXIT_OK
    rep.stream.write(text)
    return -1  # output already written, no report


# ----------------------------------------------------------------------
# solve / verify on plane digraphs


def _cmd_solve_fvs(args, rep: Report) -> int:
    from .fvs import fvs_bruteforce, fvs_exact, is_acyclic

    G = _pdg(args.file)
    res = fvs_exact(G, budget=_budget(args))
    rep.result(size=res.size, witness=list(res.witness), nodes=res.nodes, optimal=res.optimal)
    rep.check("witness_acyclic", is_acyclic(G, res.witness), True, is_acyclic(G, res.witness))
    if args.oracle:
        ref = fvs_bruteforce(G)
        rep.check("oracle_size", ref.size == res.size, ref.size, res.size)
    return EXIT_OK


def _verify_one(kind: str, path: str, expect, budget) -> dict:
    """One file of verify digirth|fvs|normal; runs in worker processes."""
    from .cycles import energies, max_normal_set
    from .fvs import fvs_exact
    from .plane import digirth

    G = _pdg(path)
    out: dict = {"file": path}
    if kind == "digirth":
        val = digirth(G)
        out["digirth"] = val
    elif kind == "fvs":
        res = fvs_exact(G, budget=budget)
        val = res.size
        out.update(fvs=res.size, witness=_jsonable(list(res.witness)))
    else:
        N = max_normal_set(G)
        val = len(N)
        out["normal_size"] = val
        out["cycles"] = [_jsonable(list(C.arcs)) for C in N.cycles]
        if N.cycles:
            e = energies(G, N)
            out["energies"] = _jsonable({"E1": e.E1, "E2": e.E2, "E3": e.E3, "E4": e.E4, "E_tot": e.E_tot})
            out["bound"] = _jsonable(Fraction(G.n - 2, e.g - 2)) if e.g > 2 else None
    out["value"] = val
    return out


def _cmd_verify_graphs(args, rep: Report) -> int:
    budget = _budget(args)
    jobs = max(1, args.jobs)
    if jobs > 1 and len(args.files) > 1 and "-" not in args.files:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_verify_one, [args.kind] * len(args.files), args.files, [args.expect] * len(args.files), [budget] * len(args.files)))
    else:
        rows = [_verify_one(args.kind, f, args.expect, budget) for f in args.files]
    for row in rows:
        if args.expect is not None:
            rep.check(f"{args.kind}:{row['file']}", row["value"] == args.expect, args.expect, row["value"])
    rep.result(files=rows)
    return EXIT_OK


def _cmd_verify_energy(args, rep: Report) -> int:
    from .cycles import energies, energy_identity_check, is_normal
    from .formats import cycles_from_json

    G = _pdg(args.file)
    cycles = cycles_from_json(G, _read(args.cycles))
    normal = is_normal(G, cycles)
    rep.check("normal", normal, True, normal)
    if normal and cycles:
        e = energies(G, cycles)
        rep.result(size=len(cycles), g=e.g, E1=e.E1, E2=e.E2, E3=e.E3, E4=e.E4, E_tot=e.E_tot)
        rep.check("energies_nonnegative", e.nonnegative(), True, e.nonnegative())
        ok = energy_identity_check(G, cycles)
        rep.check("energy_identity", ok, Fraction(G.n - 2, e.g - 2) - e.E_tot / (e.g - 2), len(cycles))
    return EXIT_OK


def _cmd_verify_valuation(args, rep: Report) -> int:
    from .formats import valuation_from_json
    from .valuations import is_laminar_valuation, multiplicity

    G = _pdg(args.file)
    V = valuation_from_json(G, _read(args.valuation))
    rep.result(weight=V.weight, multiplicity=multiplicity(G, V), laminar=is_laminar_valuation(G, V))
    return EXIT_OK


# ----------------------------------------------------------------------
# coatings


def _cmd_coat(args, rep: Report) -> int:
    from .coatings import build_coating, coating_stats_audit
    from .formats import read_cf, write_pdg

    S = _psk(args.skeleton)
    h = read_cf(_read(args.cf), S)
    C = build_coating(S, h)
    audit = coating_stats_audit(C, fvs_budget=_budget(args))
    for name in ("sum_h", "ii_faces", "iii_sizes", "iv_g_coating", "v_degree"):
        if name in audit:
            rep.check(name, audit[name]["ok"], None, {k: v for k, v in audit[name].items() if k != "ok"})
    rep.result(n_H=C.n, m_H=C.graph.m, g=C.g)
    if args.o:
        Path(args.o).write_text(write_pdg(C.graph), encoding="utf-8")
        rep.result(written=args.o)
    return EXIT_OK


def _cmd_verify_coating(args, rep: Report) -> int:
    from .coatings import audit_coating_fvs, build_coating, coating_stats_audit
    from .formats import read_cf

    S = _psk(args.skeleton)
    C = build_coating(S, read_cf(_read(args.cf), S))
    audit = coating_stats_audit(C, fvs_budget=_budget(args))
    for name in ("sum_h", "ii_faces", "iii_sizes", "iv_g_coating", "v_degree", "i_fvs_vs_faces"):
        if name in audit:
            rep.check(name, audit[name]["ok"], None, {k: v for k, v in audit[name].items() if k != "ok"})
    fv = audit_coating_fvs(C, budget=_budget(args))
    for name, ok in fv["checks"].items():
        rep.check(name, ok)
    rep.result(n_H=C.n, g=C.g, digirth=fv["digirth"], fvs=fv["fvs"])
    return EXIT_OK


def _cmd_search_coating(args, rep: Report) -> int:
    from .coatings import SearchStats, build_coating, search_coating_function
    from .formats import write_cf
    from .plane import digirth

    S = _psk(args.skeleton)
    stats = SearchStats()
    budget = _budget(args) or 10**6
    h = search_coating_function(S, args.g, args.perfect, budget, stats=stats)
    rep.result(found=h is not None, nodes=stats.nodes, rejected_by_digirth=stats.rejected_digirth)
    if h is None:
        rep.check("found", False, "a coating function", None)
        return EXIT_OK
    C = build_coating(S, h)
    dg = digirth(C.graph)
    rep.check("digirth", dg == args.g, args.g, dg)
    text = write_cf(S, h)
    if args.o:
        Path(args.o).write_text(text, encoding="utf-8")
        rep.result(written=args.o)
    else:
        rep.result(cf=text.splitlines())
    return EXIT_OK


def _load_family(path: str):
    """Family JSON: {"builtin": g} or {"skeleton": psk, "cf": cf,
    "ring_in": [...], "ring_out": [...]} with paths relative to the file."""
    from .coatings import RecursiveFamily
    from .families import small_digirth_base
    from .formats import _read_ident, read_cf, read_psk

    src = _read(path)
    text = src.read_text(encoding="utf-8") if isinstance(src, Path) else src
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", path, exc.lineno) from exc
    if "builtin" in data:
        return small_digirth_base(int(data["builtin"]))
    base = Path(path).parent if path != "-" else Path(".")
    try:
        S = read_psk(base / data["skeleton"])
        h = read_cf(base / data["cf"], S)
        ring_in = tuple(_read_ident(str(v)) for v in data["ring_in"])
        ring_out = tuple(_read_ident(str(v)) for v in data["ring_out"])
    except KeyError as exc:
        raise ParseError(f"missing key {exc.args[0]!r}", path) from exc
    return RecursiveFamily(S, h, ring_in, ring_out, name=data.get("name", ""))


def _cmd_verify_recursive(args, rep: Report) -> int:
    from .coatings import verify_recursive_digirth

    fam = _load_family(args.family)
    res = verify_recursive_digirth(fam, args.g)
    rep.check("digirth_H0", res["digirth_H0"] == args.g, args.g, res["digirth_H0"])
    rep.check("digirth_H1", res["digirth_H1"] == args.g, args.g, res["digirth_H1"])
    rep.check("link_distances_monotone", res["distances_ok"], True, res["distances_ok"])
    rep.result(
        table_H0=res["table_H0"],
        table_H1=res["table_H1"],
        n_H0=res["n_H0"],
        n_H1=res["n_H1"],
        conclusion=f"digirth(H_k) = {args.g} for all k" if res["ok"] else "not certified",
    )
    return EXIT_OK


def _cmd_verify_arboricity(args, rep: Report) -> int:
    from .arboricity import WeightedForestFamily, fractional_arboricity, verify_arborization

    S = _psk(args.skeleton)
    af, cert = fractional_arboricity(S)
    # 2g/(g+2) = af  <=>  g = 2 af / (2 - af)
    admissible = []
    if af < 2:
        g = 2 * af / (2 - af)
        if g.denominator == 1 and S.is_connected() and not S.loops():
            admissible.append(int(g))
    rep.result(a_f=af, certificate={"vertices": sorted(map(str, cert.vertices)), "edges": cert.edges, "density": cert.density}, admissible_g=admissible)
    if args.cert:
        src = _read(args.cert)
        data = json.loads(src.read_text(encoding="utf-8") if isinstance(src, Path) else src)
        try:
            edges = list(S.edges)
            forests = [tuple(edges.index(e) if e in edges else edges.index(int(e)) for e in f) for f in data["forests"]]
            weights = [Fraction(w) for w in data["weights"]]
            c = Fraction(data["c"])
        except (KeyError, ValueError) as exc:
            raise ParseError(f"bad arborization certificate: {exc}", args.cert) from exc
        ok = verify_arborization(S, WeightedForestFamily(tuple(forests), tuple(weights)), c)
        rep.check("arborization", ok, True, ok)
        rep.check("a_f_le_c", af <= c, c, af)
    return EXIT_OK


# ----------------------------------------------------------------------
# reports and drawings


def _cmd_report_tau(args, rep: Report) -> int:
    from .families import tau_report

    gs = range(args.g, (args.to or args.g) + 1)
    rep.result(bounds=[tau_report(g) for g in gs])
    return EXIT_OK


def _cmd_dump_svg(args, rep: Report) -> int:
    from .svg import dump_svg

    path = args.file
    if path.endswith(".psk"):
        G = _psk(path).emb
    else:
        G = _pdg(path)
    text = dump_svg(G)
    if args.o:
        Path(args.o).write_text(text, encoding="utf-8")
        rep.result(written=args.o)
        return EXIT_OK
    rep.stream.write(text)
    return -1


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fvslab", description="Feedback vertex sets of planar digraphs with given digirth.")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a family member")
    g.add_argument(
        "family",
        choices=["dicycle", "octahedron", "okg", "frieze", "c4-coating", "small-digirth", "glk", "glkr", "random", "random-skeleton"],
    )
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--g", type=int, default=4)
    g.add_argument("--l", type=int, default=1)
    g.add_argument("--r", type=int, default=0)
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--budget", type=int)
    g.add_argument("-o")
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("solve", help="solve a problem")
    ssub = s.add_subparsers(dest="what", required=True)
    sf = ssub.add_parser("fvs")
    sf.add_argument("file")
    sf.add_argument("--budget", type=int)
    sf.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    sf.set_defaults(func=_cmd_solve_fvs)

    v = sub.add_parser("verify", help="verify claims")
    vsub = v.add_subparsers(dest="what", required=True)
    for kind in ("digirth", "fvs", "normal"):
        q = vsub.add_parser(kind)
        q.add_argument("files", nargs="+")
        q.add_argument("--expect", type=int)
        q.add_argument("--budget", type=int)
        q.add_argument("--jobs", type=int, default=1)
        q.set_defaults(func=_cmd_verify_graphs, kind=kind)
    q = vsub.add_parser("energy")
    q.add_argument("file")
    q.add_argument("cycles")
    q.set_defaults(func=_cmd_verify_energy)
    q = vsub.add_parser("valuation")
    q.add_argument("file")
    q.add_argument("valuation")
    q.set_defaults(func=_cmd_verify_valuation)
    q = vsub.add_parser("coating")
    q.add_argument("skeleton")
    q.add_argument("cf")
    q.add_argument("--budget", type=int)
    q.set_defaults(func=_cmd_verify_coating)
    q = vsub.add_parser("recursive")
    q.add_argument("family")
    q.add_argument("--g", type=int, required=True)
    q.set_defaults(func=_cmd_verify_recursive)
    q = vsub.add_parser("arboricity")
    q.add_argument("skeleton")
    q.add_argument("--cert")
    q.set_defaults(func=_cmd_verify_arboricity)

    c = sub.add_parser("coat", help="build a coating from a skeleton and a coating function")
    c.add_argument("skeleton")
    c.add_argument("cf")
    c.add_argument("--budget", type=int)
    c.add_argument("-o")
    c.set_defaults(func=_cmd_coat)

    se = sub.add_parser("search", help="search objects")
    sesub = se.add_subparsers(dest="what", required=True)
    q = sesub.add_parser("coating")
    q.add_argument("skeleton")
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--perfect", action="store_true")
    q.add_argument("--budget", type=int)
    q.add_argument("-o")
    q.set_defaults(func=_cmd_search_coating)

    r = sub.add_parser("report", help="reports")
    rsub = r.add_subparsers(dest="what", required=True)
    q = rsub.add_parser("tau")
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--to", type=int)
    q.set_defaults(func=_cmd_report_tau)

    d = sub.add_parser("dump", help="drawings")
    dsub = d.add_subparsers(dest="what", required=True)
    q = dsub.add_parser("svg")
    q.add_argument("file")
    q.add_argument("-o")
    q.set_defaults(func=_cmd_dump_svg)
    return p


def run(argv: list | None = None, *, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    rep = Report(argv)
    rep.stream = out
    try:
        code = args.func(args, rep)
    except ParseError as exc:
        rep.data["error"] = {"kind": "parse", "message": str(exc)}
        code = EXIT_PARSE
    except (ResourceLimit, TooLarge) as exc:
        rep.data["error"] = {"kind": "resource", "message": str(exc)}
        code = EXIT_RESOURCE
    except SearchFailed as exc:
        rep.data["error"] = {"kind": "search_failed", "message": str(exc)}
        code = EXIT_FAIL
    except FvslabError as exc:
        rep.data["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        code = EXIT_FAIL
    if code == -1:
        return EXIT_OK
    if code == EXIT_OK and rep.failed:
        code = EXIT_FAIL
    rep.data["exit_code"] = code
    json.dump(rep.finish(), out, indent=1)
    out.write("\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
