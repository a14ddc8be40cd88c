"""Command-line entry point: ``starcolour <command> ...``.

Every command prints one JSON document (or a csv/markdown table for the
tabular commands) with a ``manifest`` recording the arguments, seed, caps and
input digests.  Timing lives only under keys named ``wall_time``; pass
``--no-timing`` to drop them for byte-exact comparisons.

Exit codes: 0 success, 1 check mismatch, 2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from importlib import resources
from typing import Sequence

from . import __version__
from . import constructions as cons
from . import detect, oracle
from .core import (
    CapExceeded,
    SimpleGraph,
    StarColouring,
    dumps,
    parse_pattern,
    pattern,
    validate_colouring,
)
from .tournaments import (
    NotStronglyConnected,
    Tournament,
    find_ck_free_tournament,
    hamilton_cycle,
    is_ck_free,
    moon_cycles,
    redei_hamilton_path,
    strong_components,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
DEFAULT_MAX_N = 6


class InputError(ValueError):
    pass


# --------------------------------------------------------------------------
# helpers


def _int_range(text: str) -> list[int]:
    """``5`` or ``4..7`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return list(range(int(a), int(b) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _pattern_arg(text: str) -> SimpleGraph:
    try:
        return parse_pattern(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class Inputs:
    """Reads JSON inputs and records their digests for the manifest."""

    def __init__(self, stdin=None):
        self.digests: dict[str, str] = {}
        self._stdin = stdin

    def load(self, path: str) -> dict:
        if path == "-":
            data = (self._stdin or sys.stdin).read()
        else:
            try:
                with open(path, encoding="utf-8") as fh:
                    data = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read {path}: {exc.strerror}") from None
        self.digests[path] = hashlib.sha256(data.encode()).hexdigest()
        try:
            return json.loads(data)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc.msg})") from None

    def colouring(self, path: str) -> StarColouring:
        d = _unwrap(self.load(path), "colouring")
        try:
            c = StarColouring.from_json(d)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{path}: not a colouring ({exc})") from None
        return c


def _unwrap(d, key: str):
    """Accept a bare object or a full command document containing it."""
    if isinstance(d, dict) and isinstance(d.get("result"), dict):
        d = d["result"]
    if isinstance(d, dict) and key in d:
        d = d[key]
    return d


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "wall_time"}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _table(rows: list[dict], fmt: str) -> str:
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    cell = lambda v: v if isinstance(v, str) else json.dumps(v, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([cell(r.get(c, "")) for c in cols])
        return buf.getvalue()
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for r in rows:
        lines.append("| " + " | ".join(cell(r.get(c, "")).replace("|", "\\|") for c in cols) + " |")
    return "\n".join(lines) + "\n"


def load_golden() -> dict:
    return json.loads(resources.files("starcolour").joinpath("golden.json").read_text(encoding="utf-8"))


# --------------------------------------------------------------------------
# construct


CONSTRUCTIONS = ["lexical", "rainbow", "orientable", "blowup", "modified", "cycle-extremal",
                 "k4-two-part", "k4-three-part", "k4minus", "apex", "min-degree",
                 "clique-blowup", "girth-modified"]


def _need(args, *names):
    for nm in names:
        if getattr(args, nm) is None:
            raise InputError(f"--{nm.replace('_', '-')} is required for this construction")


def cmd_construct(args, inputs: Inputs) -> tuple[dict, int]:
    kind = args.name
    if kind in ("lexical", "rainbow", "cycle-extremal", "k4-two-part", "k4-three-part", "k4minus",
                "min-degree", "clique-blowup", "girth-modified", "blowup"):
        _need(args, "n")
    n = args.n
    if n is not None and n > args.max_n_construct:
        raise CapExceeded(f"n={n} above construction cap {args.max_n_construct}")
    if kind == "lexical":
        c = cons.lexical(n)
    elif kind == "rainbow":
        c = cons.rainbow_complete(n)
    elif kind == "orientable":
        c = cons.orientable(_tournament_input(args, inputs))
    elif kind == "blowup":
        _need(args, "parts")
        c = cons.rainbow_blowup(cons.BlowupSpec.balanced(n, args.parts))
    elif kind == "modified":
        if args.colouring is None or args.graph is None:
            raise InputError("modified needs --colouring and --graph")
        base = inputs.colouring(args.colouring)
        g = SimpleGraph.from_json(_unwrap(inputs.load(args.graph), "graph"))
        c = cons.modified(base, g)
    elif kind == "cycle-extremal":
        _need(args, "k")
        t = _tournament_input(args, inputs) if args.tournament else None
        c = cons.cycle_extremal(n, args.k, t)
    elif kind == "k4-two-part":
        c = cons.k4_extremal_two_part(n, args.split if args.split is not None else 2)
    elif kind == "k4-three-part":
        _need(args, "sizes")
        if sum(args.sizes) != n:
            raise InputError("--sizes must sum to --n")
        c = cons.k4_extremal_three_part(n, args.sizes)
    elif kind == "k4minus":
        s_edges = None
        if args.s_edges:
            flat = args.s_edges
            if len(flat) % 2:
                raise InputError("--s-edges takes an even number of vertex ids")
            s_edges = [tuple(flat[i:i + 2]) for i in range(0, len(flat), 2)]
        c = cons.k4minus_extremal(n, args.a, s_edges)
    elif kind == "apex":
        if args.colouring is None:
            raise InputError("apex needs --colouring")
        c = cons.apex_extension(inputs.colouring(args.colouring))
    elif kind == "min-degree":
        _need(args, "pattern")
        c = cons.min_degree_construction(n, args.pattern)
    elif kind == "clique-blowup":
        _need(args, "m")
        c = cons.clique_blowup_lower(n, args.m)
    else:  # girth-modified
        _need(args, "pattern")
        c = cons.girth_modified_lower(n, args.pattern)
    return {"construction": kind, "colouring": c.to_json(), "colours": c.num_colours}, EXIT_OK


def _tournament_input(args, inputs: Inputs) -> Tournament:
    if args.tournament:
        d = _unwrap(inputs.load(args.tournament), "tournament")
        try:
            return Tournament.from_json(d)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"not a tournament ({exc})") from None
    if args.n is None:
        raise InputError("need --tournament FILE or --n for a seeded random tournament")
    return Tournament.random(args.n, detect.derive_rng(args.seed, "tournament", args.n))


# --------------------------------------------------------------------------
# validate / detect


def cmd_validate(args, inputs: Inputs) -> tuple[dict, int]:
    d = _unwrap(inputs.load(args.colouring), "colouring")
    try:
        c = StarColouring.from_json(d)
    except (KeyError, TypeError, ValueError) as exc:
        return {"valid": False, "problems": [f"malformed input: {exc}"]}, EXIT_MISMATCH
    rep = validate_colouring(c)
    out = {"valid": rep.ok, "problems": [[i, why] for i, why in rep.violations], "colours": c.num_colours}
    return out, EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_detect(args, inputs: Inputs) -> tuple[dict, int]:
    if args.colouring is None:
        raise InputError("--colouring is required")
    c = inputs.colouring(args.colouring)
    if c.n > args.max_n_detect:
        raise CapExceeded(f"n={c.n} above detection cap {args.max_n_detect}")
    mode = args.mode
    if mode == "rainbow":
        if args.pattern is None:
            raise InputError("--pattern is required")
        cert = detect.find_rainbow(c, args.pattern)
        return {"found": cert is not None, "certificate": cert and cert.to_json()}, EXIT_OK
    if mode == "spectrum":
        spec = detect.rainbow_cycle_spectrum(c)
        return {"lengths": sorted(spec), "certificates": {str(k): v.to_json() for k, v in sorted(spec.items())}}, EXIT_OK
    if mode == "hamilton":
        cert = detect.rainbow_hamilton_cycle(c)
        return {"found": cert is not None, "certificate": cert and cert.to_json()}, EXIT_OK
    # join
    if args.t1 is None or args.t2 is None:
        raise InputError("join needs --t1 and --t2")
    cert = detect.find_rainbow_join(c, args.t1, args.t2, seed=args.seed)
    return {"found": cert is not None, "certificate": cert and cert.to_json(),
            "note": "a negative answer is not a proof of absence"}, EXIT_OK


# --------------------------------------------------------------------------
# tournaments


def cmd_tournament(args, inputs: Inputs) -> tuple[dict, int]:
    if args.action == "ck-free":
        if args.n is None or args.k is None:
            raise InputError("ck-free needs --n and --k")
        t = find_ck_free_tournament(args.n, args.k, nontrivial=args.nontrivial)
        return {"tournament": t.to_json()}, EXIT_OK
    t = _tournament_input(args, inputs)
    if args.action == "show":
        return {"tournament": t.to_json()}, EXIT_OK
    if args.action == "components":
        return {"components": strong_components(t)}, EXIT_OK
    if args.action == "redei":
        return {"path": redei_hamilton_path(t)}, EXIT_OK
    if args.action == "moon":
        try:
            cyc = moon_cycles(t)
        except NotStronglyConnected as exc:
            raise InputError(str(exc)) from None
        return {"cycles": {str(k): v for k, v in sorted(cyc.items())}}, EXIT_OK
    if args.action == "hamilton":
        try:
            return {"cycle": hamilton_cycle(t)}, EXIT_OK
        except NotStronglyConnected as exc:
            raise InputError(str(exc)) from None
    # check
    if args.k is None:
        raise InputError("check needs --k")
    free, cyc = is_ck_free(t, args.k)
    return {"ck_free": free, "cycle": cyc}, EXIT_OK


# --------------------------------------------------------------------------
# oracle


def _oracle_cap(args, n: int) -> None:
    if n > args.max_n:
        raise CapExceeded(f"n={n} above --max-n {args.max_n}; raise --max-n to opt in")


def cmd_oracle(args, inputs: Inputs) -> tuple[dict, int]:
    q = args.quantity
    if q in ("arstar", "extremal", "family", "ex"):
        if args.n is None:
            raise InputError("--n is required")
    if q in ("arstar", "extremal", "nsar") and args.pattern is None:
        raise InputError("--pattern is required")
    if q == "arstar":
        _oracle_cap(args, args.n)
        res = oracle.star_anti_ramsey(args.n, args.pattern, threads=args.threads, cap=args.max_n)
    elif q == "extremal":
        _oracle_cap(args, args.n)
        res = oracle.star_anti_ramsey(args.n, args.pattern, threads=args.threads, cap=args.max_n)
        if not args.emit_all:
            res.witnesses = res.witnesses[:1]
    elif q == "family":
        _oracle_cap(args, args.n)
        if not args.family:
            raise InputError("--family is required")
        res = oracle.star_anti_ramsey_family(args.n, _family(args.family), threads=args.threads, cap=args.max_n)
    elif q == "removal-family":
        _oracle_cap(args, args.n)
        res = oracle.star_anti_ramsey_family(args.n, oracle.removal_family(args.pattern),
                                             threads=args.threads, cap=args.max_n)
    elif q == "nsar":
        res = oracle.nsar(args.pattern, cap=args.max_n, threads=args.threads)
    elif q == "ex":
        if not args.family:
            raise InputError("--family is required")
        res = oracle.ex_small(args.n, _family(args.family), seed=args.seed)
    else:  # z
        if None in (args.m, args.n, args.s, args.t):
            raise InputError("z needs --m --n --s --t")
        res = oracle.zarankiewicz_small(args.m, args.n, args.s, args.t)
    return res.to_json(), EXIT_OK


def _family(text: str) -> list[SimpleGraph]:
    """``C<=5`` or a comma-free list ``K3;C4``."""
    text = text.strip()
    if text.startswith("C<="):
        try:
            g = int(text[3:])
        except ValueError:
            raise InputError(f"bad family {text!r}") from None
        return cons.short_cycle_family(g)
    try:
        return [parse_pattern(p) for p in text.split(";") if p]
    except ValueError as exc:
        raise InputError(str(exc)) from None


# --------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args, inputs: Inputs) -> tuple[dict, int]:
    if args.n is None:
        raise InputError("--n is required")
    _oracle_cap(args, args.n)
    out: dict = {"n": args.n, "canonical_only": args.canonical}
    cols = []
    count = 0
    for c in oracle.enumerate_star_colourings(args.n, canonical_only=args.canonical, cap=args.max_n):
        count += 1
        if args.emit:
            cols.append(c.to_json())
    out["count"] = count
    if args.emit:
        out["colourings"] = cols
    return out, EXIT_OK


# --------------------------------------------------------------------------
# theorem checks


def _row(instance: dict, formula, value, key: str | None) -> dict:
    return {**instance, "formula": formula, "oracle": value, "witness": key,
            "status": "PASS" if formula == value else "FAIL"}


def _arstar_rows(h: SimpleGraph, ns: list[int], formula, args, structure=None) -> list[dict]:
    rows = []
    for n in ns:
        _oracle_cap(args, n)
        res = oracle.star_anti_ramsey(n, h, threads=args.threads, cap=args.max_n)
        row = _row({"n": n}, formula(n), res.value, res.witnesses[0].key.hex() if res.witnesses else None)
        if structure is not None:
            ok = all(structure(w.colouring) for w in res.witnesses)
            row["structure"] = "PASS" if ok else "FAIL"
            if not ok:
                row["status"] = "FAIL"
        rows.append(row)
    return rows


def cmd_check_theorem(args, inputs: Inputs) -> tuple[dict, int]:
    name = args.name
    ns = args.n_range
    rows: list[dict] = []
    if name == "k3":
        rows = _arstar_rows(pattern("C", k=3), ns or list(range(3, 7)), lambda n: n - 1, args,
                            structure=oracle.is_lexical)
    elif name == "cycle":
        for k in args.k_range or [3, 4, 5]:
            lo = max(k, min(ns)) if ns else k
            hi = max(ns) if ns else 6
            for r in _arstar_rows(pattern("C", k=k), list(range(lo, hi + 1)),
                                  lambda n, k=k: cons.count_cycle_extremal(n, k), args,
                                  structure=lambda c, k=k: oracle.check_structure_ck(c, k).ok):
                rows.append({"k": k, **r})
    elif name == "k4":
        rows = _arstar_rows(pattern("K", k=4), ns or list(range(4, 7)), cons.count_k4, args)
    elif name == "k4minus":
        rows = _arstar_rows(pattern("K_minus", k=4), ns or list(range(4, 7)), cons.count_k4minus, args,
                            structure=lambda c: oracle.check_structure_k4minus(c).ok)
    elif name == "nsar-paths":
        for t in ns or [1, 2, 3]:
            res = oracle.nsar(pattern("P", t=t), cap=args.max_n, threads=args.threads)
            rows.append(_row({"t": t}, t + 1, res.value, None))
    elif name == "zex-sandwich":
        for n in ns or list(range(2, 7)):
            for s, t in ((2, 2), (2, 3)):
                ex = oracle.ex_small(n, [pattern("K_st", s=s, t=t)], seed=args.seed).value
                z = oracle.zarankiewicz_small(n, n, s, t).value
                ok = 2 * ex <= z <= 4 * ex
                rows.append({"n": n, "s": s, "t": t, "ex": ex, "z": z, "status": "PASS" if ok else "FAIL"})
    elif name == "redblue":
        trees = {3: [("P2", pattern("P", t=2))], 4: [("P3", pattern("P", t=3)), ("star3", pattern("star", t=3))]}
        for s in (3, 4):
            for t in (3, 4):
                if s > t:
                    continue
                for n1, t1 in trees[s]:
                    for n2, t2 in trees[t]:
                        rep = oracle.check_redblue(t1, t2)
                        rows.append({"t1": n1, "t2": n2, "forests": rep.forests_checked,
                                     "status": "PASS" if rep.holds else "FAIL"})
    else:  # pragma: no cover - argparse restricts the choices
        raise InputError(f"unknown theorem {name!r}")
    failed = any(r["status"] != "PASS" for r in rows)
    return {"theorem": name, "rows": rows, "all_pass": not failed}, EXIT_MISMATCH if failed else EXIT_OK


# --------------------------------------------------------------------------
# report


def _golden_rows(args) -> list[dict]:
    golden = load_golden()
    rows = []
    for item in golden["arstar"]:
        h = parse_pattern(item["pattern"])
        n = item["n"]
        if n > args.max_n:
            rows.append({"quantity": "arstar", "params": f"n={n},H={item['pattern']}", "golden": item["value"],
                         "oracle": None, "construction": None, "status": "SKIPPED (cap)"})
            continue
        res = oracle.star_anti_ramsey(n, h, threads=args.threads, cap=args.max_n)
        lb = cons.best_lower_bound(n, h)
        rows.append({"quantity": "arstar", "params": f"n={n},H={item['pattern']}", "golden": item["value"],
                     "oracle": res.value, "construction": lb[0] if lb else None,
                     "status": "PASS" if res.value == item["value"] else "FAIL"})
    for item in golden["nsar"]:
        res = oracle.nsar(parse_pattern(item["pattern"]), cap=args.max_n, threads=args.threads)
        rows.append({"quantity": "nsar", "params": f"H={item['pattern']}", "golden": item["value"],
                     "oracle": res.value, "construction": None,
                     "status": "PASS" if res.value == item["value"] else "FAIL"})
    for item in golden["z"]:
        m, n, s, t = item["m"], item["n"], item["s"], item["t"]
        res = oracle.zarankiewicz_small(m, n, s, t)
        rows.append({"quantity": "z", "params": f"m={m},n={n},s={s},t={t}", "golden": item["value"],
                     "oracle": res.value, "construction": None,
                     "status": "PASS" if res.value == item["value"] else "FAIL"})
    for item in golden["ex"]:
        res = oracle.ex_small(item["n"], _family(item["family"]), seed=args.seed)
        rows.append({"quantity": "ex", "params": f"n={item['n']},F={item['family']}", "golden": item["value"],
                     "oracle": res.value, "construction": None,
                     "status": "PASS" if res.value == item["value"] else "FAIL"})
    return rows


def cmd_report(args, inputs: Inputs) -> tuple[dict, int]:
    if args.inputs:
        rows = []
        for path in args.inputs:
            d = inputs.load(path)
            result = d.get("result", d)
            for r in result.get("rows", []):
                rows.append({"source": result.get("theorem", path), **r})
    else:
        rows = _golden_rows(args)
    failed = any(str(r.get("status", "PASS")).startswith("FAIL") for r in rows)
    return {"rows": rows, "all_pass": not failed}, EXIT_MISMATCH if failed else EXIT_OK


# --------------------------------------------------------------------------
# parser and driver


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--threads", type=int, default=1, help="worker processes for oracle searches")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="cap on oracle n (7 is opt-in)")
    common.add_argument("--format", choices=["json", "csv", "md"], default="json")
    common.add_argument("--no-timing", action="store_true", help="omit wall_time fields")
    common.add_argument("--out", help="write the document here instead of stdout")

    p = argparse.ArgumentParser(prog="starcolour", description="Star-colourings of complete graphs.")
    p.add_argument("--version", action="version", version=f"starcolour {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a named colouring")
    c.add_argument("name", choices=CONSTRUCTIONS)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int, help="clique order for clique-blowup")
    c.add_argument("--parts", type=int)
    c.add_argument("--split", type=int, help="|V_1| for k4-two-part")
    c.add_argument("--sizes", type=_int_list)
    c.add_argument("--a", type=int)
    c.add_argument("--s-edges", type=_int_list, help="flat vertex list u1,v1,u2,v2")
    c.add_argument("--pattern", type=_pattern_arg)
    c.add_argument("--colouring", help="JSON colouring file or - for stdin")
    c.add_argument("--graph", help="JSON graph file")
    c.add_argument("--tournament", help="JSON tournament file")
    c.set_defaults(func=cmd_construct, max_n_construct=64)

    v = sub.add_parser("validate", parents=[common], help="check the star-colouring axioms")
    v.add_argument("--colouring", default="-")
    v.set_defaults(func=cmd_validate)

    d = sub.add_parser("detect", parents=[common], help="rainbow subgraph detection")
    d.add_argument("mode", nargs="?", default="rainbow", choices=["rainbow", "spectrum", "hamilton", "join"])
    d.add_argument("--colouring", default="-")
    d.add_argument("--pattern", type=_pattern_arg)
    d.add_argument("--t1", type=_pattern_arg)
    d.add_argument("--t2", type=_pattern_arg)
    d.set_defaults(func=cmd_detect, max_n_detect=40)

    t = sub.add_parser("tournament", parents=[common], help="tournament algorithms")
    t.add_argument("action", choices=["show", "components", "redei", "moon", "hamilton", "check", "ck-free"])
    t.add_argument("--tournament")
    t.add_argument("--n", type=int)
    t.add_argument("--k", type=int)
    t.add_argument("--nontrivial", action="store_true")
    t.set_defaults(func=cmd_tournament)

    o = sub.add_parser("oracle", parents=[common], help="exact small-case values")
    o.add_argument("quantity", choices=["arstar", "extremal", "family", "removal-family", "nsar", "ex", "z"])
    o.add_argument("--n", type=int)
    o.add_argument("--m", type=int)
    o.add_argument("--s", type=int)
    o.add_argument("--t", type=int)
    o.add_argument("--pattern", type=_pattern_arg)
    o.add_argument("--family", help="C<=g or patterns separated by ';'")
    o.add_argument("--emit-all", action="store_true")
    o.set_defaults(func=cmd_oracle)

    ct = sub.add_parser("check-theorem", parents=[common], help="formula versus oracle tables")
    ct.add_argument("name", choices=["cycle", "k4", "k4minus", "k3", "nsar-paths", "zex-sandwich", "redblue"])
    ct.add_argument("--n", dest="n_range", type=_int_range)
    ct.add_argument("--k", dest="k_range", type=_int_range)
    ct.set_defaults(func=cmd_check_theorem)

    e = sub.add_parser("enumerate", parents=[common], help="list star-colourings of K_n")
    e.add_argument("--n", type=int)
    e.add_argument("--canonical", action="store_true")
    e.add_argument("--emit", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("report", parents=[common], help="table of computed values")
    r.add_argument("inputs", nargs="*", help="check-theorem JSON outputs; default recomputes the golden table")
    r.set_defaults(func=cmd_report)
    return p


def _manifest(argv: Sequence[str], args, inputs: Inputs, wall: float) -> dict:
    return {"command": list(argv), "seed": args.seed, "threads": args.threads,
            "caps": {"max_n": args.max_n}, "version": __version__,
            "inputs": dict(sorted(inputs.digests.items())), "wall_time": round(wall, 6)}


def render(doc: dict, fmt: str) -> str:
    if fmt != "json" and "rows" in doc["result"]:
        return _table(doc["result"]["rows"], fmt)
    return dumps(doc) + "\n"


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    inputs = Inputs(stdin)
    t0 = time.perf_counter()
    try:
        result, code = args.func(args, inputs)
    except CapExceeded as exc:
        print(f"starcolour: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, oracle.PatternError, oracle.PreconditionError, ValueError) as exc:
        print(f"starcolour: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = {"manifest": _manifest(argv, args, inputs, time.perf_counter() - t0), "result": result}
    if args.no_timing:
        doc = _strip_timing(doc)
    text = render(doc, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
