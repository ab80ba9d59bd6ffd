"""Command-line interface.

All subcommands read a JSON config file holding the family code, the rank
``n``, the adapted word ``iota_word`` (one period, leftmost entry applied
first), and optionally a dominant weight ``lambda`` as a color-to-multiplicity
mapping.  When the ``lambda`` key is absent, vector commands act on the limit
crystal.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import Context, weight_from_config
from .crystal import CrystalOps, ZVector
from .inequalities import (
    boundary_closure_for_color,
    epsilon_star_forms,
    limit_inequalities,
    membership,
    membership_family,
    offset_closure_for_color,
    sorted_forms,
    weight_inequalities,
)
from .oracle import crosscheck_membership, epsilon_star_oracle, generate_closure
from .shapes import comb_infinity, comb_lambda, weight_family


def _load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _forms_payload(ctx: Context, meta: dict, forms, converged: bool) -> dict:
    ordered = sorted_forms(forms)
    payload = dict(meta)
    payload["converged"] = bool(converged)
    payload["count"] = len(ordered)
    payload["forms"] = [{**f.to_json(ctx), "text": f.render(ctx)} for f in ordered]
    return payload


def cmd_gen_ineq(ctx: Context, lam: dict, args) -> int:
    window, mode, k = args.window, args.mode, args.k
    if mode == "sprime":
        res = (
            limit_inequalities(ctx, window)
            if k is None
            else offset_closure_for_color(ctx, k, window)
        )
        forms, converged = res.within(window), res.converged
    elif mode == "shat":
        res = (
            weight_inequalities(ctx, lam, window)
            if k is None
            else boundary_closure_for_color(ctx, lam, k, window)
        )
        forms, converged = res.within(window), res.converged
    elif mode == "comb-limit":
        forms, converged = comb_infinity(ctx, window)
    elif k is None:
        forms, converged = weight_family(ctx, lam, window)
    else:
        forms, converged = comb_lambda(ctx, lam, k, window)
    meta = {
        "family": ctx.family,
        "n": ctx.n,
        "iota_word": list(ctx.word),
        "lambda": {str(c): v for c, v in sorted(lam.items())},
        "mode": mode,
        "k": k,
        "window": window,
    }
    text = json.dumps(_forms_payload(ctx, meta, forms, converged), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if converged else 2


def cmd_check(ctx: Context, lam: dict | None, args) -> int:
    x = ZVector.parse(args.vector, ctx)
    if not x.nonnegative():
        print("not a member: negative entry")
        return 1
    support = max(x.max_pos(), ctx.n)
    forms, converged = membership_family(ctx, lam, support, margin_periods=2)
    if not converged:
        raise RuntimeError("inequality generation hit the node cap")
    ok, witness = membership(forms, x)
    if ok:
        print(f"member ({len(forms)} forms checked, support {support})")
        return 0
    print(
        f"not a member: {witness.render(ctx)} evaluates to {witness.evaluate(x)}"
    )
    return 1


def cmd_enumerate(ctx: Context, lam: dict | None, args) -> int:
    ops = CrystalOps(ctx, lam)
    closure, levels = generate_closure(ops, args.depth)
    for d, level in enumerate(levels):
        print(f"depth {d}: {len(level)}")
    print(f"total: {len(closure)}")
    counts: dict[tuple[int, ...], int] = {}
    for x in closure:
        w = ops.weight_coeffs(x)
        counts[w] = counts.get(w, 0) + 1
    for w in sorted(counts):
        print("colors " + ",".join(map(str, w)) + f": {counts[w]}")
    return 0


def cmd_epsilon_star(ctx: Context, args) -> int:
    x = ZVector.parse(args.vector, ctx)
    ks = [args.k] if args.k is not None else list(ctx.colors())
    disagree = False
    lines = []
    for k in ks:
        entry = {}
        if args.method in ("forms", "both"):
            entry["forms"] = epsilon_star_forms(ctx, x, k)
        if args.method in ("oracle", "both"):
            try:
                entry["oracle"] = epsilon_star_oracle(ctx, x, k)
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
        if len(entry) == 2 and entry["forms"] != entry["oracle"]:
            disagree = True
        lines.append(f"k={k}: " + " ".join(f"{m}={v}" for m, v in entry.items()))
    print("\n".join(lines))
    return 1 if disagree else 0


def cmd_crosscheck(ctx: Context, lam: dict, args) -> int:
    report = crosscheck_membership(ctx, lam, args.depth, args.window)
    print(json.dumps(report, indent=2))
    return 0 if report["matched"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crystal-poly",
        description="Polyhedral realizations of affine crystals: inequality "
        "generation, membership, enumeration, and cross-checks.",
    )
    ap.add_argument(
        "--config",
        required=True,
        help="JSON config: family, n, iota_word, optional lambda",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-ineq", help="emit defining inequalities as JSON")
    g.add_argument(
        "--mode",
        choices=["sprime", "shat", "comb", "comb-limit"],
        default="comb",
        help="rewriting closure (sprime/shat) or closed forms (comb*)",
    )
    g.add_argument("--window", type=int, required=True, help="largest position kept")
    g.add_argument("--k", type=int, help="restrict to one color's family")
    g.add_argument("--out", help="write JSON here instead of stdout")

    c = sub.add_parser("check", help="test membership of a vector")
    c.add_argument("--vector", required=True, help="[a1,a2,...] or {(s,k): v}")

    e = sub.add_parser("enumerate", help="count elements by depth and color totals")
    e.add_argument("--depth", type=int, required=True)

    s = sub.add_parser("epsilon-star", help="starred string values of a vector")
    s.add_argument("--vector", required=True)
    s.add_argument("--k", type=int, help="single color (default: all)")
    s.add_argument("--method", choices=["forms", "oracle", "both"], default="both")

    x = sub.add_parser(
        "crosscheck", help="exhaustive membership comparison against the operators"
    )
    x.add_argument("--depth", type=int, required=True)
    x.add_argument("--window", type=int, help="force a generation window")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = _load_config(args.config)
    ctx = Context.from_config(cfg)
    lam = weight_from_config(cfg) if "lambda" in cfg else None
    try:
        if args.command == "gen-ineq":
            return cmd_gen_ineq(ctx, lam or {}, args)
        if args.command == "check":
            return cmd_check(ctx, lam, args)
        if args.command == "enumerate":
            return cmd_enumerate(ctx, lam, args)
        if args.command == "epsilon-star":
            return cmd_epsilon_star(ctx, args)
        return cmd_crosscheck(ctx, lam, args)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
