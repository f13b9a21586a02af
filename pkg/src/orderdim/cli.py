"""Command-line front end: solvers, reductions, generators, campaigns.

Exit codes: 0 success or property verified, 1 property violated with a
counterexample printed, 2 usage or input error, 3 search budget or size
guard exceeded. The DICHRO_BUDGET environment variable overrides the
default search budget; --budget overrides both.
"""

from __future__ import annotations

import argparse
import os
import sys

from .campaigns import CAMPAIGNS, run_campaign
from .digraphs import HomWitness, find_homomorphism, verify_homomorphism
from .errors import (
    BranchTooLarge,
    CycleInX,
    LimitExceeded,
    OrderdimError,
    TooLarge,
)
from .generate import (
    antichain_order,
    bidirected_clique,
    boolean_order,
    chain_order,
    crown_order,
    directed_cycle,
    enumerate_posets,
    random_digraph,
    random_order,
    random_quasi,
    random_symmetric,
)
from .reduction import (
    cover_to_extensions,
    extensions_to_cover,
    pair_digraph,
    two_level_order,
)
from .selectors import (
    DenseSelector,
    canonical_cycles,
    density_report,
    level_edge_count,
    prefix_monotone,
    selector_digraph,
)
from .serialize import (
    FormatError,
    cover_from_payload,
    cover_payload,
    digraph_from_payload,
    digraph_payload,
    dumps,
    family_from_payload,
    family_payload,
    homwitness_from_payload,
    homwitness_payload,
    order_from_payload,
    order_payload,
    parse_json,
)
from .solvers import (
    DEFAULT_SEARCH_BUDGET,
    chromatic_number,
    dichromatic_number,
    order_dimension,
)

GUARD_ERRORS = (LimitExceeded, TooLarge, BranchTooLarge)


class UsageError(Exception):
    pass


def _resolve_budget(args) -> int:
    if getattr(args, "budget", None):
        return args.budget
    env = os.environ.get("DICHRO_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"DICHRO_BUDGET must be an integer, got {env!r}")
    return DEFAULT_SEARCH_BUDGET


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def _load_order(path: str):
    try:
        return order_from_payload(parse_json(_read(path)))
    except OrderdimError as exc:
        raise UsageError(f"{path}: {exc}")


def _load_digraph(path: str):
    try:
        return digraph_from_payload(parse_json(_read(path)))
    except OrderdimError as exc:
        raise UsageError(f"{path}: {exc}")


def _parse_sigma(text: str) -> tuple[int, ...]:
    if text.strip() == "":
        return ()
    try:
        entries = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--sigma expects comma-separated integers, got {text!r}")
    if any(v < 2 for v in entries):
        raise UsageError("--sigma entries must all be at least 2")
    return entries


def _emit(args, out, payload: dict, text: str) -> None:
    out.write(dumps(payload) if args.format == "json" else text + "\n")


# ---------------------------------------------------------------- handlers


def _cmd_dim(args, out) -> int:
    base = _load_order(args.order)
    res = order_dimension(base, args.method, _resolve_budget(args))
    _emit(
        args,
        out,
        {"d": res.d, "family": family_payload(res.witness)},
        f"d={res.d} extensions={res.witness.size}",
    )
    return 0


def _cmd_dicr(args, out) -> int:
    g = _load_digraph(args.digraph)
    res = dichromatic_number(g, _resolve_budget(args))
    _emit(
        args,
        out,
        {"k": res.k, "cover": cover_payload(res.witness)},
        f"k={res.k} classes={len(res.witness.classes)}",
    )
    return 0


def _cmd_chrom(args, out) -> int:
    g = _load_digraph(args.digraph)
    k, colors = chromatic_number(g, _resolve_budget(args))
    _emit(
        args,
        out,
        {"k": k, "coloring": list(colors)},
        f"k={k}",
    )
    return 0


def _cmd_reduce(args, out) -> int:
    if args.what in ("ap", "bp"):
        base = _load_order(args.source)
        d, pvm = pair_digraph(base, incomparable_only=args.what == "bp")
        _emit(
            args,
            out,
            {
                "digraph": digraph_payload(d),
                "pairs": [list(p) for p in pvm.pairs],
            },
            f"vertices={d.n} edges={d.edge_count()}",
        )
        return 0
    g = _load_digraph(args.source)
    q, emb = two_level_order(g)
    _emit(
        args,
        out,
        {"order": order_payload(q), "embedding": list(emb)},
        f"elements={q.n}",
    )
    return 0


def _cmd_convert(args, out) -> int:
    base = _load_order(args.order)
    doc = parse_json(_read(args.witness))
    if args.direction == "cover-to-ext":
        cover = cover_from_payload(doc)
        fam = cover_to_extensions(base, cover)
        _emit(args, out, family_payload(fam), f"extensions={fam.size}")
        return 0
    fam = family_from_payload(doc, base)
    cover = extensions_to_cover(fam)
    _emit(
        args,
        out,
        cover_payload(cover),
        f"classes={len(cover.classes)}",
    )
    return 0


def _cmd_g0(args, out) -> int:
    sigma = _parse_sigma(args.sigma)
    sel = DenseSelector()
    if args.what == "selector":
        val = sel(sigma)
        _emit(
            args,
            out,
            {"sigma": list(sigma), "selector": list(val)},
            ",".join(map(str, val)),
        )
        return 0
    if args.what == "k":
        kd = selector_digraph(sel, sigma)
        cycles = canonical_cycles(sel, sigma)
        _emit(
            args,
            out,
            {
                "sigma": list(sigma),
                "digraph": digraph_payload(kd.graph),
                "verts": [list(t) for t in kd.verts],
                "level_edges": [
                    level_edge_count(sigma, k) for k in range(len(sigma))
                ],
                "canonical_cycles": [list(c.verts) for c in cycles],
            },
            f"vertices={kd.graph.n} edges={kd.graph.edge_count()} "
            f"canonical_cycles={len(cycles)}",
        )
        return 0
    if args.what == "density":
        depth = len(sigma) if args.depth is None else args.depth
        if depth < 0 or depth > len(sigma):
            raise UsageError(f"--depth must lie in 0..{len(sigma)}")
        rep = density_report(sel, sigma, depth)
        _emit(
            args,
            out,
            {
                "sigma": list(sigma),
                "depth": depth,
                "witnessed": [[list(s), l] for s, l in rep.witnessed],
                "unresolved": [[list(s), l] for s, l in rep.unresolved],
                "violations": [[list(s), l] for s, l in rep.violations],
                "ok": rep.ok,
            },
            f"witnessed={len(rep.witnessed)} unresolved={len(rep.unresolved)} "
            f"violations={len(rep.violations)}",
        )
        return 0 if rep.ok else 1
    ok = prefix_monotone(sel, sigma)
    counterexample = None
    if not ok:
        vals = [sel(sigma[:m]) for m in range(len(sigma))]
        for m in range(len(sigma)):
            for n in range(m, len(sigma)):
                if vals[n][:m] == vals[m] and sigma[m] > sigma[n]:
                    counterexample = [m, n]
                    break
            if counterexample:
                break
    _emit(
        args,
        out,
        {"sigma": list(sigma), "monotone": ok, "counterexample": counterexample},
        "monotone" if ok else f"violated at prefix lengths {counterexample}",
    )
    return 0 if ok else 1


def _cmd_hom(args, out) -> int:
    g = _load_digraph(args.g)
    h = _load_digraph(args.h)
    if args.what == "find":
        w = find_homomorphism(
            g, h, minimal=args.minimal, budget=_resolve_budget(args)
        )
        if w is None:
            _emit(
                args,
                out,
                {"found": False, "minimal": args.minimal},
                "no homomorphism",
            )
            return 1
        _emit(
            args,
            out,
            {"found": True, **homwitness_payload(w)},
            "map=" + ",".join(map(str, w.mapping)),
        )
        return 0
    if args.witness is None:
        raise UsageError("hom check needs a witness file")
    try:
        w = homwitness_from_payload(parse_json(_read(args.witness)))
    except OrderdimError as exc:
        raise UsageError(f"{args.witness}: {exc}")
    res = verify_homomorphism(g, h, w)
    payload = {
        "ok": res.ok,
        "reason": res.reason,
        "pair": list(res.pair) if res.pair else None,
        "cycle": list(res.cycle) if res.cycle else None,
    }
    _emit(args, out, payload, "ok" if res.ok else f"violation: {res.reason}")
    return 0 if res.ok else 1


def _cmd_gen(args, out) -> int:
    n, p, seed = args.n, args.p, args.seed
    if n is None:
        n = 4
    if args.kind == "poset":
        payload = order_payload(random_order(n, p, seed))
    elif args.kind == "quasi":
        payload = order_payload(random_quasi(n, p, seed))
    elif args.kind == "digraph":
        payload = digraph_payload(random_digraph(n, p, seed))
    elif args.kind == "symmetric":
        payload = digraph_payload(random_symmetric(n, p, seed))
    elif args.kind == "crown":
        payload = order_payload(crown_order(n))
    elif args.kind == "chain":
        payload = order_payload(chain_order(n))
    elif args.kind == "antichain":
        payload = order_payload(antichain_order(n))
    elif args.kind == "boolean":
        payload = order_payload(boolean_order(n))
    elif args.kind == "cycle":
        payload = digraph_payload(directed_cycle(n))
    else:
        payload = digraph_payload(bidirected_clique(n))
    out.write(dumps(payload))
    return 0


def _cmd_enumerate(args, out) -> int:
    n = 4 if args.n is None else args.n
    count = 0
    for q in enumerate_posets(n):
        count += 1
        if args.format == "json":
            out.write(dumps(order_payload(q)))
    if args.format == "text":
        out.write(f"count={count}\n")
    return 0


def _cmd_verify(args, out) -> int:
    if args.name not in CAMPAIGNS:
        raise UsageError(
            f"unknown campaign {args.name!r}; choose from "
            + ", ".join(sorted(CAMPAIGNS))
        )
    budget = _resolve_budget(args)
    total = 0
    for cert in run_campaign(
        args.name,
        n=args.n,
        seed=args.seed,
        exhaustive=args.exhaustive,
        budget=budget,
    ):
        total += 1
        out.write(dumps(cert.to_payload()))
        if not cert.verified:
            print(
                f"campaign {args.name}: certificate {cert.index} "
                "failed verification (counterexample above)",
                file=sys.stderr,
            )
            return 1
    print(
        f"campaign {args.name}: {total} certificates, all verified",
        file=sys.stderr,
    )
    return 0


# ------------------------------------------------------------------ parser


def _add_common(sub, budget=True):
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--out", default=None, metavar="FILE")
    if budget:
        sub.add_argument("--budget", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orderdim",
        description=(
            "Exact order-dimension and dichromatic-number toolkit with "
            "verifiable witnesses"
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("dim", help="order dimension of a quasi order")
    p.add_argument("order")
    p.add_argument(
        "--method", choices=("via_dicr", "realizer"), default="via_dicr"
    )
    _add_common(p)
    p.set_defaults(handler=_cmd_dim)

    p = subs.add_parser("dicr", help="dichromatic number of a digraph")
    p.add_argument("digraph")
    _add_common(p)
    p.set_defaults(handler=_cmd_dicr)

    p = subs.add_parser("chrom", help="chromatic number of a symmetric digraph")
    p.add_argument("digraph")
    _add_common(p)
    p.set_defaults(handler=_cmd_chrom)

    p = subs.add_parser("reduce", help="order/digraph reductions")
    p.add_argument("what", choices=("ap", "bp", "pg"))
    p.add_argument("source")
    _add_common(p, budget=False)
    p.set_defaults(handler=_cmd_reduce)

    p = subs.add_parser("convert", help="witness conversions")
    p.add_argument("direction", choices=("cover-to-ext", "ext-to-cover"))
    p.add_argument("order")
    p.add_argument("witness")
    _add_common(p, budget=False)
    p.set_defaults(handler=_cmd_convert)

    p = subs.add_parser("g0", help="branching-tree digraphs and selectors")
    p.add_argument("what", choices=("selector", "k", "density", "monotone"))
    p.add_argument("--sigma", required=True)
    p.add_argument("--depth", type=int, default=None)
    _add_common(p, budget=False)
    p.set_defaults(handler=_cmd_g0)

    p = subs.add_parser("hom", help="digraph homomorphisms")
    p.add_argument("what", choices=("find", "check"))
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("witness", nargs="?", default=None)
    p.add_argument("--minimal", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_hom)

    p = subs.add_parser("gen", help="instance generators")
    p.add_argument(
        "kind",
        choices=(
            "poset",
            "quasi",
            "digraph",
            "symmetric",
            "crown",
            "chain",
            "antichain",
            "boolean",
            "cycle",
            "biclique",
        ),
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p, budget=False)
    p.set_defaults(handler=_cmd_gen)

    p = subs.add_parser("enumerate", help="all labeled posets up to a size")
    p.add_argument("--n", type=int, default=None)
    _add_common(p, budget=False)
    p.set_defaults(handler=_cmd_enumerate)

    p = subs.add_parser("verify", help="run a certificate campaign")
    p.add_argument("name")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    close = False
    if args.out is None:
        out = sys.stdout
    else:
        try:
            out = open(args.out, "w", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot open {args.out}: {exc}", file=sys.stderr)
            return 2
        close = True
    try:
        return args.handler(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GUARD_ERRORS as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except CycleInX as exc:
        out.write(dumps({"cycle": [list(p) for p in exc.pairs]}))
        print("property violated: offered pairs contain a cycle", file=sys.stderr)
        return 1
    except OrderdimError as exc:
        print(f"property violated: {exc}", file=sys.stderr)
        return 1
    finally:
        if close:
            out.close()


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
