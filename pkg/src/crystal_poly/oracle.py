"""Brute-force oracles: closure enumeration, origin reachability, starred
string values by cutoff search, and exhaustive membership cross-checks.

Everything here works purely through the operator model, independently of the
rewriting procedure and of the closed-form families, so agreement between the
two sides is meaningful evidence.
"""

from __future__ import annotations

import time

import numpy as np

from .cartan import Context
from .crystal import CrystalOps, ZVector
from .inequalities import membership_family

# --------------------------------------------------------------------------------
# closure enumeration
# --------------------------------------------------------------------------------


def generate_closure(ops: CrystalOps, depth: int):
    """Vectors reachable from the origin by at most ``depth`` lowering steps.

    Returns (set of vectors, levels list).  Each lowering step grows the entry
    sum by exactly one, so level d holds precisely the size-d elements.
    """
    seen = {ZVector.ZERO}
    level = [ZVector.ZERO]
    levels = [list(level)]
    colors = ops.ctx.colors()
    for _ in range(depth):
        nxt = []
        for x in level:
            for k in colors:
                y = ops.apply_f(x, k)
                if y is not None and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        levels.append(nxt)
        level = nxt
    return seen, levels


def weight_graded_counts(ops: CrystalOps, depth: int) -> dict[tuple[int, ...], int]:
    """Element counts per per-color entry total, over the depth closure."""
    closure, _ = generate_closure(ops, depth)
    out: dict[tuple[int, ...], int] = {}
    for x in closure:
        w = ops.weight_coeffs(x)
        out[w] = out.get(w, 0) + 1
    return out


# --------------------------------------------------------------------------------
# reachability and starred string values
# --------------------------------------------------------------------------------


def reaches_origin(ops: CrystalOps, x: ZVector, memo: dict | None = None) -> bool:
    """Whether repeated raising brings x back to the origin.

    Raising and lowering are mutual partial inverses and raising strictly
    shrinks the entry sum, so this holds exactly when x lies in the image of
    the lowering closure of the origin.  Vectors with a negative entry can
    never reach the origin and are pruned.
    """
    if memo is None:
        memo = {}
    colors = ops.ctx.colors()

    def rec(v: ZVector) -> bool:
        if v.is_zero():
            return True
        hit = memo.get(v)
        if hit is not None:
            return hit
        ok = False
        for k in colors:
            w = ops.apply_e(v, k)
            if w is not None and w.nonnegative() and rec(w):
                ok = True
                break
        memo[v] = ok
        return ok

    return rec(x)


def epsilon_star_oracle(ctx: Context, x: ZVector, k: int) -> int:
    """Smallest color-k weight cutoff admitting x, all other colors uncapped.

    The cutoff weight puts m on color k and the entry sum of x on every other
    color; the answer is the least m for which x stays reachable.
    """
    if not x.nonnegative():
        raise ValueError("vector has negative entries")
    total = x.size()
    if not reaches_origin(CrystalOps(ctx, None), x):
        raise ValueError("vector is outside the limit crystal")
    for m in range(total + 1):
        lam = {j: (m if j == k else total) for j in ctx.colors()}
        if reaches_origin(CrystalOps(ctx, lam), x):
            return m
    raise RuntimeError("no admissible cutoff up to the entry sum")


def random_reachable(ops: CrystalOps, rng, depth: int) -> ZVector:
    """A random walk of at most ``depth`` lowering steps from the origin."""
    x = ZVector.ZERO
    for _ in range(depth):
        ks = [k for k in ops.ctx.colors() if ops.apply_f(x, k) is not None]
        if not ks:
            break
        x = ops.apply_f(x, rng.choice(ks))
    return x


# --------------------------------------------------------------------------------
# exhaustive membership cross-check
# --------------------------------------------------------------------------------


def _sum_bounded_tuples(nvars: int, total: int):
    """All nonnegative integer tuples of length ``nvars`` with sum <= total."""
    if nvars == 0:
        yield ()
        return

    def rec(prefix: tuple, remaining: int, slots: int):
        if slots == 1:
            for v in range(remaining + 1):
                yield prefix + (v,)
            return
        for v in range(remaining + 1):
            yield from rec(prefix + (v,), remaining - v, slots - 1)

    yield from rec((), total, nvars)


def _compile_matrix(forms, support: int):
    """Dense coefficient matrix of the forms' restrictions to the support box.

    Rows that cannot go negative on nonnegative vectors are dropped, duplicate
    restrictions are merged, and rows are ordered by their last active column
    so that short local forms (the strongest rejectors) are applied first.
    """
    rows = {}
    for f in forms:
        vec = [0] * support
        for p, c in f.terms:
            if p <= support:
                vec[p - 1] = c
        if f.constant >= 0 and all(c >= 0 for c in vec):
            continue
        rows.setdefault(tuple(vec), f.constant)
    ordered = sorted(
        rows.items(),
        key=lambda it: (max((i for i, c in enumerate(it[0]) if c), default=0), it),
    )
    coeffs = np.array([vec for vec, _ in ordered], dtype=np.int64)
    consts = np.array([const for _, const in ordered], dtype=np.int64)
    return coeffs, consts


_CANDIDATE_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _candidate_matrix(support: int, total: int) -> np.ndarray:
    key = (support, total)
    cands = _CANDIDATE_CACHE.get(key)
    if cands is None:
        cands = np.array(list(_sum_bounded_tuples(support, total)), dtype=np.int64)
        _CANDIDATE_CACHE[key] = cands
    return cands


def _feasible_tuples(ctx: Context, lam, depth: int, support: int, margin: int):
    forms, converged = membership_family(ctx, lam, support, margin)
    if not converged:
        raise RuntimeError("inequality generation hit the node cap")
    coeffs, consts = _compile_matrix(forms, support)
    cands = _candidate_matrix(support, depth)
    alive = np.arange(len(cands))
    for start in range(0, len(coeffs), 2048):
        block, base = coeffs[start:start + 2048], consts[start:start + 2048]
        values = cands[alive] @ block.T + base
        alive = alive[(values >= 0).all(axis=1)]
        if alive.size == 0:
            break
    feasible = {tuple(int(v) for v in cands[i]) for i in alive}
    return feasible, len(coeffs)


def crosscheck_membership(
    ctx: Context, lam, depth: int, window: int | None = None
) -> dict:
    """Compare the inequality-feasible set against the operator closure.

    Scans every nonnegative vector with entry sum at most ``depth`` supported
    on the first ``window`` positions (default: depth word-lengths, grown if a
    closure element needs more room).  On a first-pass mismatch the inequality
    family is regenerated with one more period of margin; if that repairs the
    mismatch the report is flagged window sensitive.
    """
    t0 = time.perf_counter()
    ops = CrystalOps(ctx, lam)
    closure, _ = generate_closure(ops, depth)
    support = window if window is not None else depth * ctx.n
    support = max(support, max((x.max_pos() for x in closure), default=1))
    closure_set = {x.to_tuple(support) for x in closure}

    margin_used = 1
    window_sensitive = False
    feasible, active_forms = _feasible_tuples(ctx, lam, depth, support, margin_used)
    if feasible != closure_set:
        retry = margin_used + 1
        feasible2, active2 = _feasible_tuples(ctx, lam, depth, support, retry)
        if feasible2 == closure_set:
            window_sensitive = True
            margin_used, feasible, active_forms = retry, feasible2, active2

    mismatches = [
        {"vector": list(t), "side": "feasible_only"}
        for t in sorted(feasible - closure_set)
    ] + [
        {"vector": list(t), "side": "closure_only"}
        for t in sorted(closure_set - feasible)
    ]
    return {
        "family": ctx.family,
        "n": ctx.n,
        "iota_word": list(ctx.word),
        "lambda": None if lam is None else {str(k): v for k, v in sorted(lam.items())},
        "depth": depth,
        "support_positions": support,
        "window": support,
        "margin_periods": margin_used,
        "active_forms": active_forms,
        "candidates": _candidate_count(support, depth),
        "feasible": len(feasible),
        "closure": len(closure_set),
        "matched": not mismatches,
        "window_sensitive": window_sensitive,
        "mismatches": mismatches,
        "seconds": round(time.perf_counter() - t0, 3),
    }


def _candidate_count(nvars: int, total: int) -> int:
    # C(nvars + total, total): stars and bars, sums 0..total
    num = den = 1
    for i in range(1, total + 1):
        num *= nvars + i
        den *= i
    return num // den
