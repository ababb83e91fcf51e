"""Command-line front end; all output is deterministic for fixed input.

Exit codes: 0 on success, 1 on domain errors (a vanishing block is data, not
an error), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .brauer import (
    BrauerGraph,
    cartan_matrix as graph_cartan_matrix,
    decomp_search,
    derived_invariants,
    gamma_family,
    quiver_presentation,
)
from .cartan import RootVector
from .classify import FieldParams, TClass, classify
from .maxweights import LevelKDominant, max_plus
from .quiver import TQuiver, WeightQuiver, build_quiver, t_subquiver
from .tableaux import charges_of, graded_dim, graded_dim_total


class UsageError(ValueError):
    pass


def _parse_int_vector(text: str, expected_len: int | None, what: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--{what}: expected comma-separated integers") from exc
    if expected_len is not None and len(vals) != expected_len:
        raise UsageError(
            f"--{what}: expected {expected_len} comma-separated values, got {len(vals)}"
        )
    return vals


def _weight_from_args(args) -> LevelKDominant:
    coeffs = _parse_int_vector(args.weight, args.ell + 1, "weight")
    if any(c < 0 for c in coeffs):
        raise UsageError("--weight: coefficients must be nonnegative")
    return LevelKDominant(coeffs)


def weight_name(coeffs: tuple[int, ...]) -> str:
    """Render a dominant weight the way the figures do, e.g. '2Λ0+Λ2'."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 1:
            parts.append(f"Λ{i}")
        elif c >= 2:
            parts.append(f"{c}Λ{i}")
    return "+".join(parts) if parts else "0"


def _vec(x) -> str:
    return "(" + ",".join(str(v) for v in x) + ")"


def quiver_to_json_dict(q: WeightQuiver | TQuiver) -> dict:
    data = {
        "ell": q.rank.ell,
        "k": q.base.level,
        "base": list(q.base.coeffs),
        "vertices": [
            {
                "coeffs": list(v.weight.coeffs),
                "x": list(v.x),
                "beta": list(v.beta.coeffs),
            }
            for v in q.vertices
        ],
        "arrows": [
            {"src": a.src, "dst": a.dst, "label": [a.label[0], a.label[1]]}
            for a in q.arrows
        ],
    }
    if isinstance(q, TQuiver):
        data["tags"] = {
            str(vid): sorted(tags) for vid, tags in sorted(q.tags.items())
        }
    return data


def quiver_from_json_dict(data: dict) -> WeightQuiver:
    """Rebuild a weight quiver from its JSON form (round-trip support)."""
    base = LevelKDominant(tuple(data["base"]))
    q = build_quiver(base)
    expect_vertices = [tuple(v["coeffs"]) for v in data["vertices"]]
    got_vertices = [v.weight.coeffs for v in q.vertices]
    expect_arrows = {
        (a["src"], a["dst"], (a["label"][0], a["label"][1])) for a in data["arrows"]
    }
    got_arrows = {(a.src, a.dst, a.label) for a in q.arrows}
    if expect_vertices != got_vertices or expect_arrows != got_arrows:
        raise ValueError("JSON data does not describe the quiver of its base weight")
    return q


def quiver_to_dot(q: WeightQuiver | TQuiver) -> str:
    tags = q.tags if isinstance(q, TQuiver) else {}
    lines = ["digraph quiver {", "  rankdir=LR;"]
    for vid, v in enumerate(q.vertices):
        name = weight_name(v.weight.coeffs)
        label = name
        if vid in tags and tags[vid]:
            label += " [" + ",".join(str(s) for s in sorted(tags[vid])) + "]"
        lines.append(f'  v{vid} [label="{label}"];')
    for a in q.arrows:
        lines.append(f'  v{a.src} -> v{a.dst} [label="({a.label[0]},{a.label[1]})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_maxweights(args, out) -> int:
    base = _weight_from_args(args)
    entries = max_plus(base)
    if args.format == "json":
        data = [
            {
                "weight": list(e.weight.coeffs),
                "x": list(e.x),
                "beta": list(e.beta.coeffs),
                "max_weight": {"lam": list(e.max_weight.lam), "delta": e.max_weight.delta},
            }
            for e in entries
        ]
        json.dump({"ell": args.ell, "base": list(base.coeffs), "entries": data}, out)
        out.write("\n")
        return 0
    for e in entries:
        mw = weight_name(e.max_weight.lam)
        d = e.max_weight.delta
        mw_str = mw if d == 0 else f"{mw}{d:+d}δ"
        out.write(
            f"{weight_name(e.weight.coeffs):<24} X={_vec(e.x):<20} "
            f"beta={_vec(e.beta.coeffs):<20} max={mw_str}\n"
        )
    return 0


def _emit_quiver(q, args, out) -> int:
    if args.format == "json":
        json.dump(quiver_to_json_dict(q), out)
        out.write("\n")
    elif args.format == "dot":
        out.write(quiver_to_dot(q))
    else:
        tags = q.tags if isinstance(q, TQuiver) else {}
        for vid, v in enumerate(q.vertices):
            suffix = (
                " [" + ",".join(map(str, sorted(tags[vid]))) + "]"
                if vid in tags and tags[vid]
                else ""
            )
            out.write(
                f"{vid}: {weight_name(v.weight.coeffs)}{suffix} X={_vec(v.x)}\n"
            )
        for a in q.arrows:
            out.write(f"{a.src} -> {a.dst} ({a.label[0]},{a.label[1]})\n")
    return 0


def _cmd_quiver(args, out) -> int:
    return _emit_quiver(build_quiver(_weight_from_args(args)), args, out)


def _cmd_tquiver(args, out) -> int:
    return _emit_quiver(t_subquiver(_weight_from_args(args)), args, out)


def _t_class_from_args(args) -> TClass:
    mapping = {
        "2": TClass.TWO,
        "two": TClass.TWO,
        "-2": TClass.MINUS_TWO,
        "minustwo": TClass.MINUS_TWO,
        "sign": TClass.SIGN_ELL,
        "signell": TClass.SIGN_ELL,
        "other": TClass.OTHER,
    }
    key = args.t.lower()
    if key not in mapping:
        raise UsageError(f"--t: unknown class {args.t!r}")
    return mapping[key]


def _cmd_classify(args, out) -> int:
    base = _weight_from_args(args)
    beta_coeffs = _parse_int_vector(args.beta, args.ell + 1, "beta")
    if any(c < 0 for c in beta_coeffs):
        raise UsageError("--beta: coefficients must be nonnegative")
    if args.mdelta:
        beta_coeffs = tuple(c + args.mdelta for c in beta_coeffs)
    params = FieldParams(char_p=args.char, t_class=_t_class_from_args(args))
    try:
        params.check_rank(args.ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = classify(base, RootVector(beta_coeffs), params, cap=args.cap)
    if args.format == "json":
        json.dump(
            {
                "ell": args.ell,
                "base": list(base.coeffs),
                "beta": list(beta_coeffs),
                "char": args.char,
                "t": args.t,
                "type": str(result),
            },
            out,
        )
        out.write("\n")
    else:
        out.write(f"{result}\n")
    return 0


def _cmd_gdim(args, out) -> int:
    base = _weight_from_args(args)
    beta_coeffs = _parse_int_vector(args.beta, args.ell + 1, "beta")
    if args.mdelta:
        beta_coeffs = tuple(c + args.mdelta for c in beta_coeffs)
    beta = RootVector(beta_coeffs)
    charges = charges_of(base.coeffs)
    if (args.nu is None) != (args.nup is None):
        raise UsageError("--nu and --nup must be given together")
    if args.nu is None:
        poly = graded_dim_total(charges, beta, max_height=args.max_height)
        label = "total"
    else:
        nu = _parse_int_vector(args.nu, beta.height, "nu")
        nup = _parse_int_vector(args.nup, beta.height, "nup")
        poly = graded_dim(charges, beta, nu, nup, max_height=args.max_height)
        label = f"e{_vec(nu)} .. e{_vec(nup)}"
    if args.format == "json":
        json.dump(
            {
                "ell": args.ell,
                "base": list(base.coeffs),
                "beta": list(beta_coeffs),
                "which": label,
                "terms": {str(k): v for k, v in sorted(poly.terms.items())},
                "at_one": poly.at_one(),
            },
            out,
        )
        out.write("\n")
    else:
        out.write(f"{poly}\n")
    return 0


def _graph_from_args(args) -> BrauerGraph:
    if args.gamma is not None:
        s, a, m = _parse_int_vector(args.gamma, 3, "gamma")
        return gamma_family(s, a, m)
    if args.graph is None:
        raise UsageError("need either --graph FILE or --gamma s,a,m")
    with open(args.graph, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    mults = [0] * len(data["vertices"])
    for v in data["vertices"]:
        mults[v["id"]] = v["mult"]
    rotations = {int(k): v for k, v in data.get("rotation", {}).items()}
    return BrauerGraph.build(mults, [tuple(e) for e in data["edges"]], rotations)


def _cmd_brauer(args, out) -> int:
    g = _graph_from_args(args)
    inv = derived_invariants(g)
    show = args.what
    result: dict = {}
    if show in ("invariants", "all"):
        result["invariants"] = {
            "vertices": inv.n_vertices,
            "edges": inv.n_edges,
            "faces": inv.n_faces,
            "multiplicities": list(inv.mult_multiset),
            "perimeters": list(inv.perimeter_multiset),
            "bipartite": inv.bipartite,
            "genus": inv.genus,
        }
    if show in ("cartan", "all"):
        result["cartan"] = graph_cartan_matrix(g)
    if show in ("quiver", "all"):
        pres = quiver_presentation(g)
        result["quiver"] = {
            "vertices": list(pres.q_vertices),
            "arrows": [
                {"name": a.name, "src": a.src_edge, "dst": a.dst_edge}
                for a in pres.q_arrows
            ],
            "relations": {
                "cycle_overshoot": list(pres.rel_cycle_overshoot),
                "cycle_equality": list(pres.rel_cycle_equality),
                "mixed_products": list(pres.rel_mixed_products),
            },
        }
    if args.format == "json":
        json.dump(result, out)
        out.write("\n")
    else:
        for key, value in result.items():
            out.write(f"[{key}]\n")
            if key == "cartan":
                for row in value:
                    out.write("  " + " ".join(f"{v:3d}" for v in row) + "\n")
            elif key == "invariants":
                for k2, v2 in value.items():
                    out.write(f"  {k2}: {v2}\n")
            else:
                out.write(f"  vertices: {value['vertices']}\n")
                for a in value["arrows"]:
                    out.write(f"  {a['name']}: {a['src']} -> {a['dst']}\n")
                for fam, rels in value["relations"].items():
                    for r in rels:
                        out.write(f"  [{fam}] {r}\n")
    return 0


def _cmd_decomp(args, out) -> int:
    if args.cartan is not None:
        rows = args.cartan.split(";")
        c = [list(map(int, r.split(","))) for r in rows]
    else:
        g = _graph_from_args(args)
        c = graph_cartan_matrix(g)
    result = decomp_search(c)
    if args.format == "json":
        json.dump(
            {
                "cartan": c,
                "unique": result.unique,
                "solutions": [[list(r) for r in sol] for sol in result.solutions],
            },
            out,
        )
        out.write("\n")
    else:
        out.write(f"unique: {'yes' if result.unique else 'no'}\n")
        for idx, sol in enumerate(result.solutions):
            out.write(f"solution {idx + 1} ({len(sol)} rows):\n")
            for r in sol:
                out.write("  " + " ".join(str(v) for v in r) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klrblocks",
        description="Dominant maximal weights, weight quivers, block types and "
        "graded dimensions in affine type A",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_weight_opts(p):
        p.add_argument("--ell", type=int, required=True, help="rank (e = ell + 1)")
        p.add_argument(
            "--weight",
            required=True,
            help="comma-separated coefficients on Λ0..Λell (length ell+1)",
        )

    p = sub.add_parser("maxweights", help="dominant maximal weights of a class")
    add_weight_opts(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_maxweights)

    p = sub.add_parser("quiver", help="the full weight quiver")
    add_weight_opts(p)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=_cmd_quiver)

    p = sub.add_parser("tquiver", help="the tagged depth-2 subquiver")
    add_weight_opts(p)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=_cmd_tquiver)

    p = sub.add_parser("classify", help="representation type of a block")
    add_weight_opts(p)
    p.add_argument("--beta", required=True, help="comma-separated alpha coefficients")
    p.add_argument("--mdelta", type=int, default=0, help="add m copies of delta")
    p.add_argument("--char", type=int, default=0, help="field characteristic")
    p.add_argument(
        "--t",
        default="other",
        help="t class: 'two'/'minustwo' (ell=1), 'signell' (ell>=2) or 'other'",
    )
    p.add_argument("--cap", type=int, default=None, help="reflection iteration cap")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("gdim", help="graded dimension of a block")
    add_weight_opts(p)
    p.add_argument("--beta", required=True, help="comma-separated alpha coefficients")
    p.add_argument("--mdelta", type=int, default=0, help="add m copies of delta")
    p.add_argument("--nu", default=None, help="residue sequence of the left idempotent")
    p.add_argument("--nup", default=None, help="residue sequence of the right idempotent")
    p.add_argument("--max-height", type=int, default=14, help="enumeration bound")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_gdim)

    p = sub.add_parser("brauer", help="Brauer graph data")
    p.add_argument("--graph", default=None, help="JSON graph file")
    p.add_argument("--gamma", default=None, help="line family parameters s,a,m")
    p.add_argument(
        "--what", choices=["invariants", "cartan", "quiver", "all"], default="all"
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_brauer)

    p = sub.add_parser("decomp", help="decomposition matrices with D^t D = C")
    p.add_argument("--cartan", default=None, help="matrix rows 'a,b;c,d'")
    p.add_argument("--graph", default=None, help="JSON graph file")
    p.add_argument("--gamma", default=None, help="line family parameters s,a,m")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_decomp)

    return parser


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (ValueError, KeyError, RuntimeError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
