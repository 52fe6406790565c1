"""Command-line front end.

Every subcommand is a pure function of its RunConfig: the same arguments
always produce byte-identical output (randomized rank probes draw from a
seeded generator).  Exit codes: 0 on success, 1 for bad input (syntax,
missing arguments, out-of-range values), 2 when the computation itself
fails or refuses (degenerate input, internal cross-check failure,
corpus/oracle mismatch).
"""

import argparse
import json
import sys
from dataclasses import dataclass

from agjordan.apolarity import graded_basis, reduce_essential
from agjordan.constructions import as_bigraded, concat, coproduct, perazzo_example, rank_drop_family
from agjordan.corpus import run_corpus
from agjordan.diagram import build_diagram, render_ascii
from agjordan.errors import ComputationError
from agjordan.hessian import (
    DEFAULT_SEED,
    GenericRankConfig,
    generic_rank,
    mixed_hessian,
    rank_at,
    rank_table,
    rank_table_at,
)
from agjordan.jordan import jordan_type, jordan_type_at
from agjordan.lefschetz import lefschetz_report
from agjordan.oracle import cross_check
from agjordan.poly import LinearForm, Poly, format_poly, parse_poly


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand reads.  Two equal configs give equal output."""

    command: str
    poly_texts: tuple = ()
    var_order: tuple = None
    at: str = None
    k: int = 1
    t: int = 1
    seed: int = DEFAULT_SEED
    trials: int = 3
    bound: int = 10**4
    exact: bool = False
    reduce: bool = False
    json_out: bool = False
    kind: str = None
    degree: int = None
    delta: int = 1


class _Parser(argparse.ArgumentParser):
    # argparse exits on its own; we want a catchable input error instead
    def error(self, message):
        raise ValueError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="agjordan",
        description="Jordan types and Lefschetz properties of graded Gorenstein algebras",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    form = argparse.ArgumentParser(add_help=False)
    form.add_argument(
        "-f",
        "--poly",
        action="append",
        default=[],
        metavar="TEXT",
        help="dual generator, e.g. \"x*u^2 + y*u*v + z*v^2\"",
    )
    form.add_argument(
        "--vars",
        metavar="NAMES",
        help="comma-separated variable order (default: order of first appearance)",
    )
    form.add_argument(
        "--reduce",
        action="store_true",
        help="project away non-essential variables before computing",
    )
    form.add_argument("--json", action="store_true", help="machine-readable output")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed")
    sampling.add_argument("--trials", type=int, default=3, help="random points per rank")
    sampling.add_argument("--bound", type=int, default=10**4, help="coordinate bound")
    sampling.add_argument(
        "--exact",
        action="store_true",
        help="symbolic generic ranks instead of random sampling",
    )

    at = argparse.ArgumentParser(add_help=False)
    at.add_argument(
        "--at",
        metavar="FORM",
        help="evaluate at this linear form instead of a generic one",
    )

    sub.add_parser("hilbert", parents=[form], help="Hilbert vector of the quotient algebra")
    hess = sub.add_parser(
        "hessian",
        parents=[form, sampling, at],
        help="mixed Hessian matrix rank",
    )
    hess.add_argument("-k", type=int, default=1, help="row degree (default 1)")
    hess.add_argument("-t", type=int, default=1, help="power of the linear form (default 1)")
    sub.add_parser(
        "jordan",
        parents=[form, sampling, at],
        help="generic Jordan type (or the type at --at)",
    )
    sub.add_parser(
        "lefschetz",
        parents=[form, sampling, at],
        help="weak and strong Lefschetz verdicts",
    )
    sub.add_parser(
        "diagram",
        parents=[form, sampling, at],
        help="string diagram of the generic multiplication",
    )
    sub.add_parser(
        "verify",
        parents=[form, sampling],
        help="cross-check the rank-table pipeline against multiplication matrices",
    )
    sub.add_parser(
        "corpus",
        parents=[sampling],
        help="run the built-in examples against their frozen expectations",
    ).add_argument("--json", action="store_true", help="machine-readable output")

    cons = sub.add_parser("construct", parents=[form], help="emit a named construction")
    cons.add_argument(
        "kind",
        choices=["perazzo-example", "coproduct", "concat", "rank-drop"],
        help="which construction to build",
    )
    cons.add_argument("-d", type=int, default=None, help="socle degree")
    cons.add_argument("--delta", type=int, default=1, help="corank drop (rank-drop only)")
    return parser


def parse_args(argv=None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    var_order = None
    raw = getattr(ns, "vars", None)
    if raw is not None:
        var_order = tuple(name.strip() for name in raw.split(","))
        if not all(var_order):
            raise ValueError("empty name in --vars")
    return RunConfig(
        command=ns.command,
        poly_texts=tuple(getattr(ns, "poly", []) or []),
        var_order=var_order,
        at=getattr(ns, "at", None),
        k=getattr(ns, "k", 1),
        t=getattr(ns, "t", 1),
        seed=getattr(ns, "seed", DEFAULT_SEED),
        trials=getattr(ns, "trials", 3),
        bound=getattr(ns, "bound", 10**4),
        exact=getattr(ns, "exact", False),
        reduce=getattr(ns, "reduce", False),
        json_out=getattr(ns, "json", False),
        kind=getattr(ns, "kind", None),
        degree=getattr(ns, "d", None),
        delta=getattr(ns, "delta", 1),
    )


def _load_form(cfg: RunConfig) -> Poly:
    if not cfg.poly_texts:
        raise ValueError("missing polynomial: pass -f/--poly")
    if len(cfg.poly_texts) > 1:
        raise ValueError("this command takes a single -f/--poly")
    f = parse_poly(cfg.poly_texts[0], cfg.var_order)
    if cfg.reduce:
        f = reduce_essential(f)
    return f


def _rank_cfg(cfg: RunConfig) -> GenericRankConfig:
    return GenericRankConfig(
        trials=cfg.trials, coeff_bound=cfg.bound, seed=cfg.seed, exact_mode=cfg.exact
    )


def _parse_at(text: str, f: Poly) -> LinearForm:
    """Linear form in the variables of f; names match case-insensitively.

    Operators are conventionally written in upper case (X dual to x), so
    "X + 2*Y" against f(x, y, ...) resolves to x + 2y.
    """
    probe = parse_poly(text)
    lowered = {}
    for name in f.var_names:
        lowered.setdefault(name.lower(), []).append(name)
    where = {}
    for name in probe.var_names:
        if name in f.var_names:
            where[name] = f.var_names.index(name)
            continue
        candidates = lowered.get(name.lower(), [])
        if len(candidates) != 1:
            raise ValueError(
                f"unknown variable {name!r} in --at; "
                f"the form has variables {', '.join(f.var_names)}"
            )
        where[name] = f.var_names.index(candidates[0])
    terms = {}
    for mono, c in probe.terms.items():
        expo = [0] * len(f.var_names)
        for pos, e in enumerate(mono):
            if e:
                expo[where[probe.var_names[pos]]] += e
        key = tuple(expo)
        terms[key] = terms.get(key, 0) + c
    return LinearForm.from_poly(Poly(f.var_names, terms))


def _emit(cfg: RunConfig, payload, text: str) -> None:
    if cfg.json_out:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_hilbert(cfg: RunConfig) -> int:
    basis = graded_basis(_load_form(cfg))
    _emit(cfg, {"hilbert": list(basis.hilbert)}, " ".join(str(h) for h in basis.hilbert))
    return 0


def cmd_hessian(cfg: RunConfig) -> int:
    basis = graded_basis(_load_form(cfg))
    h = mixed_hessian(basis, cfg.k, cfg.t)
    if cfg.at is not None:
        mode = "at"
        r = rank_at(h, _parse_at(cfg.at, basis.f).point())
    else:
        mode = "exact" if cfg.exact else "generic"
        r = generic_rank(h, _rank_cfg(cfg))
    rows, cols = h.shape
    payload = {"k": cfg.k, "t": cfg.t, "rows": rows, "cols": cols, "rank": r, "mode": mode}
    label = "rank at the given form" if mode == "at" else "generic rank"
    _emit(cfg, payload, f"mixed Hessian (k={cfg.k}, t={cfg.t}): {rows} x {cols}\n{label}: {r}")
    return 0


def _jordan_report(cfg: RunConfig, basis):
    if cfg.at is not None:
        return jordan_type_at(basis, _parse_at(cfg.at, basis.f))
    return jordan_type(rank_table(basis, _rank_cfg(cfg)))


def cmd_jordan(cfg: RunConfig) -> int:
    basis = graded_basis(_load_form(cfg))
    jt = _jordan_report(cfg, basis)
    payload = {
        "hilbert": list(jt.hilbert),
        "jordan": jt.jordan.to_json(),
        "hilbert_dual": jt.hilbert_dual.to_json(),
        "ranks": [[i, j, r] for (i, j), r in jt.rank_table.cells()],
        "eij": [[i, j, e] for (i, j), e in jt.eij.cells()],
    }
    _emit(cfg, payload, jt.jordan.render())
    return 0


def cmd_lefschetz(cfg: RunConfig) -> int:
    basis = graded_basis(_load_form(cfg))
    jt = _jordan_report(cfg, basis)
    lf = lefschetz_report(jt.rank_table, jt)
    payload = {
        "wlp": lf.wlp,
        "slp": lf.slp,
        "sperner": lf.sperner,
        "jordan": lf.jordan.to_json(),
        "hilbert_dual": lf.hilbert_dual.to_json(),
        "failing_maps": [list(item) for item in lf.failing_maps],
    }
    lines = [
        f"WLP: {'yes' if lf.wlp else 'no'}",
        f"SLP: {'yes' if lf.slp else 'no'}",
        f"Sperner number: {lf.sperner}",
        f"Jordan type: {lf.jordan.render()}",
        f"dual of Hilbert vector: {lf.hilbert_dual.render()}",
    ]
    for i, j, achieved, maximal in lf.failing_maps:
        lines.append(f"degree {i} times l^{j}: rank {achieved} < {maximal}")
    _emit(cfg, payload, "\n".join(lines))
    return 0


def cmd_diagram(cfg: RunConfig) -> int:
    basis = graded_basis(_load_form(cfg))
    jt = _jordan_report(cfg, basis)
    dg = build_diagram(jt.eij, jt.hilbert)
    _emit(cfg, dg.to_json(), render_ascii(dg))
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    basis = graded_basis(_load_form(cfg))
    report = cross_check(basis, _rank_cfg(cfg))
    payload = {
        "agreement": report.agreement,
        "partition": report.partition.to_json(),
        "points": [[int(c) for c in p] for p in report.points],
    }
    text = (
        f"oracle agreement at {len(report.points)} point(s): "
        f"{report.partition.render()}"
    )
    _emit(cfg, payload, text)
    return 0


def cmd_corpus(cfg: RunConfig) -> int:
    results = run_corpus(_rank_cfg(cfg))
    if cfg.json_out:
        payload = [
            {
                "name": res.name,
                "ok": res.ok,
                "rows": [
                    {"field": field, "expected": expected, "got": got}
                    for field, expected, got in res.rows
                ],
            }
            for res in results
        ]
        print(json.dumps(payload, indent=2))
    else:
        for res in results:
            print(f"{res.name}: {'ok' if res.ok else 'MISMATCH'}")
            if not res.ok:
                for field, expected, got in res.rows:
                    marker = " " if expected == got else "!"
                    print(f"  {marker} {field}: expected {expected}, got {got}")
        good = sum(1 for res in results if res.ok)
        print(f"{good}/{len(results)} entries match")
    return 0 if all(res.ok for res in results) else 2


def cmd_construct(cfg: RunConfig) -> int:
    if cfg.kind == "perazzo-example":
        if cfg.degree is None:
            raise ValueError("construct perazzo-example needs -d")
        out = perazzo_example(cfg.degree)
    elif cfg.kind == "rank-drop":
        if cfg.degree is None:
            raise ValueError("construct rank-drop needs -d")
        out = rank_drop_family(cfg.degree, cfg.delta)
    elif cfg.kind in ("coproduct", "concat"):
        if len(cfg.poly_texts) != 2:
            raise ValueError(f"construct {cfg.kind} needs two -f/--poly arguments")
        f1 = parse_poly(cfg.poly_texts[0], cfg.var_order)
        f2 = parse_poly(cfg.poly_texts[1])
        if cfg.kind == "coproduct":
            out = coproduct(f1, f2)
        else:
            out = concat(as_bigraded(f1), as_bigraded(f2))
    else:  # argparse choices make this unreachable
        raise ValueError(f"unknown construction {cfg.kind!r}")
    payload = {"kind": cfg.kind, "poly": format_poly(out), "variables": list(out.var_names)}
    _emit(cfg, payload, format_poly(out))
    return 0


_DISPATCH = {
    "hilbert": cmd_hilbert,
    "hessian": cmd_hessian,
    "jordan": cmd_jordan,
    "lefschetz": cmd_lefschetz,
    "diagram": cmd_diagram,
    "verify": cmd_verify,
    "corpus": cmd_corpus,
    "construct": cmd_construct,
}


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
        return _DISPATCH[cfg.command](cfg)
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
