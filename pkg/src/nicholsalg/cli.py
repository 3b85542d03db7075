"""Command-line front end.

Subcommands dispatch into the library modules; configs are shipped names or
JSON paths. Reports carry {command, config_echo, results, warnings} and are
printed as text tables or JSON. Exit codes: 0 success, 2 for undecided or
budget-limited partial results, 1 for errors.
"""

import argparse
import json
import sys

from .bialgebra import (
    attach_diagonal_category,
    from_nichols,
    nichols_ideal_biideal_check,
)
from .braided import check_braid_equation
from .cohomology import (
    epsilon_H2,
    hom_M_dim,
    kernel_M,
    total_square_check,
    truncated_H2,
)
from .configs import ConfigError, resolve_config, shipped_config_names, load_shipped
from .cyclo import CycNumber, format_cyc, parse_cyc, zeta
from .fk import (
    build_fk_space,
    fk_bialgebra,
    fk_dims_rewriting,
    fk_dims_symmetrizer,
    fk_rigidity,
)
from .liealg import (
    AbelianBicharacter,
    check_braided_lie,
    check_cocycle_random,
    color_pair,
    color_triple,
    enveloping_dims,
    heisenberg_flip,
    scheunert_cocycle,
    sl2_flip,
    superline,
)
from .relations import generate_relations, g_chi, rigidity_verdict
from .rewriting import rewrite_dims
from .tensoralg import nichols_dims
from .weyl import diagram_summary, enumerate_roots

LIE_EXAMPLES = {
    "heisenberg": heisenberg_flip,
    "superline": superline,
    "color_pair": color_pair,
    "sl2": sl2_flip,
    "color_triple": lambda: color_triple(zeta(5)),
}


def _fmt(x):
    if isinstance(x, CycNumber):
        return format_cyc(x)
    if isinstance(x, dict):
        return {str(_fmt(k)): _fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    return x


def _print_text(results, indent=""):
    for k, v in results.items():
        if isinstance(v, dict):
            print(f"{indent}{k}:")
            _print_text(v, indent + "  ")
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            print(f"{indent}{k}:")
            for item in v:
                parts = "  ".join(f"{kk}={vv}" for kk, vv in item.items())
                print(f"{indent}  {parts}")
        else:
            print(f"{indent}{k}: {v}")


def _diag_config(args):
    cfg = resolve_config(args.config)
    if cfg.kind != "diagonal":
        raise ConfigError(f"subcommand needs a diagonal config, got kind {cfg.kind!r}")
    return cfg


def _max_degree(args, cfg):
    if getattr(args, "max_degree", None) is not None:
        return args.max_degree
    return cfg.budgets["max_degree"]


def cmd_diagram(args):
    cfg = _diag_config(args)
    V = cfg.space()
    diag, cmat, kinds = diagram_summary(V, cap=cfg.budgets["cartan_cap"])
    results = {
        "vertices": [format_cyc(v) for v in diag.vertices],
        "edges": {f"{i}-{j}": format_cyc(v) for (i, j), v in diag.edges.items()},
        "cartan_matrix": [list(row) for row in cmat],
        "vertex_kinds": list(kinds),
    }
    return 0, cfg, results, []


def cmd_roots(args):
    cfg = _diag_config(args)
    V = cfg.space()
    rs = enumerate_roots(
        V, cap=cfg.budgets["cartan_cap"], object_cap=cfg.budgets["object_cap"]
    )
    results = {
        "finite": rs.finite,
        "objects": rs.objects,
        "positive_roots": [list(r) for r in rs.positive_roots],
        "cartan_roots": [list(r) for r in rs.cartan_roots],
    }
    if not rs.finite:
        return 2, cfg, results, ["root system not shown finite within caps"]
    return 0, cfg, results, []


def cmd_relations(args):
    cfg = _diag_config(args)
    V = cfg.space()
    real = cfg.realization(V)
    rs = enumerate_roots(
        V, cap=cfg.budgets["cartan_cap"], object_cap=cfg.budgets["object_cap"]
    )
    if not rs.finite:
        return 2, cfg, {"finite": False}, ["root system not finite; no relation list"]
    instances = generate_relations(V, rs, cap=cfg.budgets["cartan_cap"])
    rows = []
    for inst in instances:
        _, _, scalar = g_chi(real, inst)
        rows.append(
            {
                "family": inst.family,
                "participants": str(inst.participants),
                "degree": str(inst.degree),
                "chi_R(g_R)": format_cyc(scalar),
            }
        )
    return 0, cfg, {"count": len(instances), "relations": rows}, []


def cmd_rigidity(args):
    cfg = _diag_config(args)
    V = cfg.space()
    real = cfg.realization(V)
    try:
        verdict, reports = rigidity_verdict(
            V, real, pre_nichols=args.pre_nichols, cap=cfg.budgets["cartan_cap"]
        )
    except ValueError as e:
        return 2, cfg, {"verdict": "NotDecided"}, [str(e)]
    failing = [
        {
            "family": rep["instance"].family,
            "participants": str(rep["instance"].participants),
            "clashes": rep["clashes"],
        }
        for rep in reports
        if not rep["ok"]
    ]
    results = {
        "verdict": verdict,
        "relation_count": len(reports),
        "pre_nichols": args.pre_nichols,
        "failing": failing,
    }
    return (0 if verdict == "Rigid" else 2), cfg, results, []


def cmd_nichols(args):
    cfg = _diag_config(args)
    V = cfg.space()
    dims = nichols_dims(V, _max_degree(args, cfg))
    return 0, cfg, {"dims": dims, "total": sum(dims)}, []


def cmd_rewrite(args):
    cfg = _diag_config(args)
    V = cfg.space()
    rs = enumerate_roots(
        V, cap=cfg.budgets["cartan_cap"], object_cap=cfg.budgets["object_cap"]
    )
    if not rs.finite:
        return 2, cfg, {"finite": False}, ["root system not finite"]
    instances = generate_relations(V, rs, cap=cfg.budgets["cartan_cap"])
    warnings = []
    elems = []
    for inst in instances:
        if inst.element is None:
            warnings.append(f"no explicit element for {inst.family} {inst.participants}")
        else:
            elems.append(inst.element)
    dims, _ = rewrite_dims(V.rank, elems, _max_degree(args, cfg))
    return 0, cfg, {"dims": dims, "total": sum(dims)}, warnings


def _finite_bialgebra(cfg, args):
    """Build the finite quotient with its category; None if budget hit."""
    if cfg.kind == "fk":
        if cfg.n != 3:
            return None, None, [f"bialgebra construction limited to n = 3, got {cfg.n}"]
        B, rels = fk_bialgebra(3)
        return B, rels, []
    V = cfg.space()
    rs = enumerate_roots(
        V, cap=cfg.budgets["cartan_cap"], object_cap=cfg.budgets["object_cap"]
    )
    if not rs.finite:
        return None, None, ["root system not finite"]
    instances = generate_relations(V, rs, cap=cfg.budgets["cartan_cap"])
    elems = [inst.element for inst in instances if inst.element is not None]
    try:
        B = from_nichols(V, elems, _max_degree(args, cfg))
    except ValueError as e:
        return None, None, [f"budget: {e}"]
    attach_diagonal_category(B, cfg.realization(V))
    return B, elems, []


def cmd_cohomology(args):
    cfg = resolve_config(args.config)
    B, _, warnings = _finite_bialgebra(cfg, args)
    if B is None:
        return 2, cfg, {}, warnings
    if args.ell is not None:
        ells = [args.ell]
    else:
        ells = range(-1, -2 * B.top_degree - 1, -1)
    table = {}
    all_zero = True
    for ell in ells:
        r = truncated_H2(B, ell)
        table[ell] = r
        if r["H"]:
            all_zero = False
    results = {
        "dims": B.dims(),
        "H2_by_degree": {str(k): v for k, v in table.items()},
        "all_zero": all_zero,
    }
    return 0, cfg, results, warnings


def cmd_epsilon(args):
    cfg = resolve_config(args.config)
    B, rels, warnings = _finite_bialgebra(cfg, args)
    if B is None:
        return 2, cfg, {}, warnings
    md = kernel_M(B, relations=rels, word_check_degree=min(5, 2 * B.top_degree))
    eh = epsilon_H2(B)
    hm = hom_M_dim(B, md)
    results = {
        "M_dims": {str(k): v for k, v in md["dims"].items()},
        "M_dims_word_route": {str(k): v for k, v in md["word_dims"].items()},
        "H2_eps": eh,
        "dim_Hom_M_U": hm,
        "identity_holds": eh["H"] == hm,
    }
    return (0 if eh["H"] == hm else 1), cfg, results, warnings


def _load_bicharacter(path):
    with open(path) as f:
        data = json.load(f)
    order = data.get("cyclotomic_order", 1)
    if "values_exponents" in data:
        vals = [[zeta(order, e) for e in row] for row in data["values_exponents"]]
    elif "values" in data:
        vals = [
            [parse_cyc(str(v), ambient_order=order) for v in row]
            for row in data["values"]
        ]
    else:
        raise ConfigError("bicharacter file needs values or values_exponents")
    return AbelianBicharacter(vals, data.get("orders"), skew=data.get("skew", False))


def cmd_twist(args):
    beta = _load_bicharacter(args.bicharacter)
    sigma, beta_sigma = scheunert_cocycle(beta)
    ok, witness = check_cocycle_random(sigma, seed=args.seed)
    results = {
        "sigma": [[format_cyc(v) for v in row] for row in sigma.values],
        "beta_sigma": [[format_cyc(v) for v in row] for row in beta_sigma.values],
        "beta_sigma_is_sign": beta_sigma.is_sign(),
        "cocycle_identity_random": ok,
    }
    return (0 if ok else 1), None, results, []


def cmd_lie_check(args):
    L = LIE_EXAMPLES[args.example]()
    rep = check_braided_lie(L)
    results = {
        axiom: {"ok": ok, "witness": str(w) if w else None}
        for axiom, (ok, w) in rep.items()
    }
    return 0, None, results, []


def cmd_pbw(args):
    L = LIE_EXAMPLES[args.example]()
    r = enveloping_dims(L, args.max_degree if args.max_degree is not None else 4)
    match = r["gr"] == r["nichols"]
    results = {
        "filtered": r["filtered"],
        "gr": r["gr"],
        "nichols": r["nichols"],
        "match": match,
    }
    return (0 if match else 2), None, results, []


def cmd_fk(args):
    if args.n < 3:
        raise ConfigError(f"n: need n >= 3, got {args.n}")
    max_degree = args.max_degree if args.max_degree is not None else (4 if args.n == 3 else 12)
    dims = fk_dims_rewriting(args.n, max_degree)
    results = {"n": args.n, "dims": dims, "total": sum(dims)}
    if args.symmetrizer:
        sdims = fk_dims_symmetrizer(args.n, max_degree)
        results["symmetrizer_dims"] = sdims
        results["routes_agree"] = sdims == dims
    if args.rigidity:
        verdict, details = fk_rigidity(args.n)
        results["rigidity"] = verdict
        if details:
            results["rigidity_details"] = [str(d) for d in details]
    code = 0
    if args.rigidity and results.get("rigidity") != "Rigid":
        code = 2
    return code, None, results, []


def cmd_selfcheck(args):
    warnings = []
    results = {}
    ok_all = True

    braid = {}
    for name in shipped_config_names():
        cfg = load_shipped(name)
        V = cfg.space() if cfg.kind == "diagonal" else build_fk_space(cfg.n)
        ok, bad = check_braid_equation(V)
        braid[name] = ok
        ok_all = ok_all and ok
    results["braid_equation"] = braid

    square = {}
    for name in ("rank1_m1", "rank1_zeta3", "rank1_zeta4"):
        cfg = load_shipped(name)

        class _A:
            max_degree = None

        B, _, warn = _finite_bialgebra(cfg, _A)
        if B is None:
            square[name] = False
            warnings += warn
            ok_all = False
            continue
        ok, w = total_square_check(B, seed=args.seed)
        square[name] = ok
        ok_all = ok_all and ok
    Bfk, _ = fk_bialgebra(3)
    ok, w = total_square_check(Bfk, seed=args.seed, entries=6)
    square["fk3"] = ok
    ok_all = ok_all and ok
    results["total_differential_squares_to_zero"] = square

    biideal = {}
    for name in shipped_config_names():
        cfg = load_shipped(name)
        if cfg.kind == "fk":
            if cfg.n > 3:
                continue  # budget: skip the larger symmetric groups
            V = build_fk_space(cfg.n)
        else:
            V = cfg.space()
        ok, w = nichols_ideal_biideal_check(V, max_degree=4)
        biideal[name] = ok
        ok_all = ok_all and ok
    results["nichols_ideal_biideal"] = biideal

    results["all_green"] = ok_all
    return (0 if ok_all else 1), None, results, warnings


COMMANDS = {
    "diagram": cmd_diagram,
    "roots": cmd_roots,
    "relations": cmd_relations,
    "rigidity": cmd_rigidity,
    "nichols": cmd_nichols,
    "rewrite": cmd_rewrite,
    "cohomology": cmd_cohomology,
    "epsilon": cmd_epsilon,
    "twist": cmd_twist,
    "lie-check": cmd_lie_check,
    "pbw": cmd_pbw,
    "fk": cmd_fk,
    "selfcheck": cmd_selfcheck,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nicholsalg",
        description="Diagonal and symmetric-group braided algebra toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, config=False, help=""):
        p = sub.add_parser(name, help=help)
        if config:
            p.add_argument("--config", required=True, help="shipped config name or JSON path")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
        p.add_argument(
            "--threads",
            type=int,
            default=1,
            help="reserved; computations currently run single-threaded",
        )
        return p

    add("diagram", config=True, help="vertex/edge labels and Cartan data")
    add("roots", config=True, help="positive roots and Cartan roots")
    add("relations", config=True, help="defining relation instances with degrees")
    p = add("rigidity", config=True, help="(g_R, chi_R) rigidity criterion")
    p.add_argument("--pre-nichols", action="store_true", help="drop Cartan root power relations")
    p = add("nichols", config=True, help="graded dims via symmetrizer ranks")
    p.add_argument("--max-degree", type=int)
    p = add("rewrite", config=True, help="graded dims of the relation quotient")
    p.add_argument("--max-degree", type=int)
    p = add("cohomology", config=True, help="truncated second cohomology by degree")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--ell", type=int, help="single homogeneity degree")
    p = add("epsilon", config=True, help="H2_eps versus Hom(M, U)")
    p.add_argument("--max-degree", type=int)
    p = add("twist", help="Scheunert cocycle and sign twist of a bicharacter")
    p.add_argument("--bicharacter", required=True, help="bicharacter JSON path")
    p = add("lie-check", help="braided Lie axioms on a shipped example")
    p.add_argument("--example", choices=sorted(LIE_EXAMPLES), required=True)
    p = add("pbw", help="envelope filtration dims versus Nichols dims")
    p.add_argument("--example", choices=sorted(LIE_EXAMPLES), required=True)
    p.add_argument("--max-degree", type=int)
    p = add("fk", help="symmetric-group quadratic algebra dims and rigidity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--rigidity", action="store_true")
    p.add_argument("--symmetrizer", action="store_true", help="cross-check via symmetrizer ranks")
    add("selfcheck", help="invariant suite over the shipped configs")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, cfg, results, warnings = COMMANDS[args.command](args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    report = {
        "command": args.command,
        "config_echo": cfg.raw if cfg is not None else None,
        "results": _fmt(results),
        "warnings": warnings,
    }
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        if cfg is not None:
            print(f"config: {cfg.name}")
        _print_text(report["results"])
        for w in warnings:
            print(f"warning: {w}")
    return code


if __name__ == "__main__":
    sys.exit(main())
