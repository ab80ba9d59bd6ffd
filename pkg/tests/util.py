"""Shared test helpers: context builders, form builders, frozen reference
series, and reusable randomized checkers.

All expected values in this module are integer-exact reference data: short
series were derived by hand from the coupling rules and cross-checked against
the brute-force operator oracle before being frozen here.
"""

from __future__ import annotations

import random

from crystal_poly import (
    Context,
    CrystalOps,
    LinearForm,
    coupling_form,
    generate_closure,
    rewrite,
    rewrite_plain,
    weight_seed,
)
from crystal_poly.shapes import (
    WallPattern,
    eyd_form,
    eyd_term_index,
    ground_shape,
    reyd_adm_index,
    reyd_form,
    reyd_rem_index,
    shape_children,
    shape_kind,
    wall_form,
)

# Default adapted words used throughout the suite, one per family.
DEFAULT_WORDS = {"A1": (2, 1, 3), "A2": (2, 1, 3), "C1": (1, 2, 3), "D2": (1, 2, 3)}

# The full acceptance grid: each family at rank 3 with two adapted words.
GRID8 = [
    ("A1", (2, 1, 3)),
    ("A1", (1, 2, 3)),
    ("A2", (2, 1, 3)),
    ("A2", (3, 2, 1)),
    ("C1", (1, 2, 3)),
    ("C1", (3, 2, 1)),
    ("D2", (1, 2, 3)),
    ("D2", (2, 1, 3)),
]


def make_context(family: str, word=None) -> Context:
    return Context(family, 3, word or DEFAULT_WORDS[family])


def mk(ctx: Context, entries: dict, const: int = 0) -> LinearForm:
    """Build a form from ``{(occurrence, color): coeff}`` entries."""
    terms: dict[int, int] = {}
    for (s, k), c in entries.items():
        p = ctx.pos_of(s, k)
        terms[p] = terms.get(p, 0) + c
    return LinearForm(const, terms)


# ----------------------------------------------------------------------------------
# Frozen weight-free series (family A1 and A2, rank 3, word 2,1,3).  Each entry
# maps the leading occurrence index s >= 1 to the form's (occurrence, color)
# coefficients; the displayed generators repeat with period one occurrence.
# ----------------------------------------------------------------------------------

UNTWISTED_SERIES = [
    lambda s: {(s, 1): 1},
    lambda s: {(s + 1, 2): 1, (s, 3): 1, (s + 1, 1): -1},
    lambda s: {(s + 1, 3): 1, (s, 3): 1, (s + 2, 2): -1},
    lambda s: {(s + 1, 2): 2, (s + 1, 3): -1},
    lambda s: {(s + 1, 2): 1, (s + 1, 1): 1, (s + 2, 2): -1},
    lambda s: {(s + 1, 2): 1, (s + 1, 3): 1, (s + 2, 1): -1},
    lambda s: {(s, 2): 1},
    lambda s: {(s, 1): 1, (s, 3): 1, (s + 1, 2): -1},
    lambda s: {(s, 1): 1, (s + 1, 1): 1, (s + 1, 3): -1},
    lambda s: {(s, 3): 2, (s + 1, 1): -1},
    lambda s: {(s, 3): 1, (s + 1, 2): 1, (s + 1, 3): -1},
    lambda s: {(s, 3): 1, (s + 1, 1): 1, (s + 2, 2): -1},
    lambda s: {(s, 3): 1},
    lambda s: {(s + 1, 1): 1, (s + 1, 2): 1, (s + 1, 3): -1},
    lambda s: {(s + 2, 2): 1, (s + 1, 2): 1, (s + 2, 1): -1},
    lambda s: {(s + 1, 1): 2, (s + 2, 2): -1},
    lambda s: {(s + 1, 1): 1, (s + 1, 3): 1, (s + 2, 1): -1},
    lambda s: {(s + 1, 1): 1, (s + 2, 2): 1, (s + 2, 3): -1},
]

TWISTED_A_SERIES = [
    lambda s: {(s, 2): 1},
    lambda s: {(s, 1): 2, (s, 3): 1, (s + 1, 2): -1},
    lambda s: {(s, 1): 1, (s, 3): 1, (s + 1, 1): -1},
    lambda s: {(s, 1): 1, (s + 1, 2): 2, (s + 1, 3): -1, (s + 1, 1): -1},
    lambda s: {(s, 1): 1, (s + 1, 2): 1, (s + 1, 1): 1, (s + 2, 2): -1},
    lambda s: {(s, 1): 1, (s + 1, 2): 1, (s + 2, 1): -1},
    lambda s: {(s, 3): 1},
    lambda s: {(s + 1, 2): 2, (s + 1, 3): -1},
    lambda s: {(s + 1, 1): 2, (s + 1, 2): 1, (s + 2, 2): -1},
    lambda s: {(s, 1): 1},
    lambda s: {(s + 1, 2): 1, (s + 1, 1): -1},
    lambda s: {(s + 1, 3): 1, (s + 1, 1): 1, (s + 2, 2): -1},
    lambda s: {(s + 1, 3): 1, (s + 2, 1): -1},
    lambda s: {(s + 2, 2): 1, (s + 1, 1): 1, (s + 2, 3): -1},
]


def instantiate(ctx: Context, series, window: int):
    """All series instances whose forms fit inside the window.

    Returns (set of forms, number of generated instances); equal sizes mean
    the instances are pairwise distinct.
    """
    out = set()
    count = 0
    for pat in series:
        for s in range(1, window + 2):
            f = mk(ctx, pat(s))
            if f.max_pos() <= window:
                out.add(f)
                count += 1
    return out, count


# ----------------------------------------------------------------------------------
# Frozen shape/form pairs (rank 3, word 2,1,3).
# ----------------------------------------------------------------------------------

# Charge-3 one-sided diagrams of the cyclic family and their forms.
CHARGE3_DIAGRAMS = [
    ((2,), {(1, 1): 1, (1, 2): 1, (1, 3): -1}),
    ((2, 2), {(2, 2): 1, (1, 2): 1, (2, 1): -1}),
    ((1,), {(1, 1): 2, (2, 2): -1}),
    ((1, 2), {(1, 1): 1, (1, 3): 1, (2, 1): -1}),
    ((1, 1), {(1, 1): 1, (2, 2): 1, (2, 3): -1}),
]

# Charge-1 walls of the twisted A family and their forms.
WALL_VALUES = [
    ((2,), {(1, 2): 1, (1, 1): -1}),
    ((3,), {(1, 3): 1, (1, 1): 1, (2, 2): -1}),
    ((3, 2), {(1, 3): 1, (2, 1): -1}),
    ((4,), {(2, 2): 1, (1, 1): 1, (2, 3): -1}),
]

# Charge-3 two-sided diagrams of the twisted A family and their forms.
REVISED_VALUES = [
    ({0: 2}, {(1, 2): 2, (1, 3): -1}),
    ({-1: 1, 0: 2}, {(1, 1): 2, (1, 2): 1, (2, 2): -1}),
    ({-1: 1, 0: 2, 1: 2}, {(1, 1): 4, (1, 3): 1, (2, 2): -2}),
    ({-1: 1, 0: 1, 1: 2}, {(1, 1): 4, (2, 3): -1}),
]

# Rightward ladder of color 1 (family A1, word 2,1,3), rungs 2..6.
RIGHT_LADDER_A1_K1 = [
    (2, {(1, 2): 1, (1, 1): -1}),
    (3, {(1, 3): 1, (2, 2): -1}),
    (4, {(2, 1): 1, (2, 3): -1}),
    (5, {(3, 2): 1, (3, 1): -1}),
    (6, {(3, 3): 1, (4, 2): -1}),
]

# Leftward ladder of color 2 (family C1, word 1,2,3), rungs 2 down to -2.
LEFT_LADDER_C1_K2 = [
    (2, {(1, 1): 2, (1, 2): -1}),
    (1, {(1, 1): 1, (2, 1): -1}),
    (0, {(1, 2): 1, (2, 1): -2}),
    (-1, {(1, 3): 2, (2, 2): -1}),
    (-2, {(1, 3): 1, (2, 3): -1}),
]


# ----------------------------------------------------------------------------------
# Reusable randomized checkers.
# ----------------------------------------------------------------------------------


def random_shape(ctx, k, rng, max_steps=6):
    sh = ground_shape(ctx, k)
    for _ in range(rng.randrange(0, max_steps + 1)):
        kids = shape_children(ctx, sh)
        if not kids:
            break
        sh = rng.choice(kids)
    return sh


def run_move_checks(ctx: Context, rounds: int, seed: int):
    """Verify the one-box move identity on random shapes of every color.

    Each legal single move must change the shape's form by exactly one
    coupling form at the move's index; double wall moves (a half-block pair)
    must compose to twice that.  Returns (ok, bad) counts.
    """
    rng = random.Random(seed)
    ok = bad = 0

    def tally(condition):
        nonlocal ok, bad
        if condition:
            ok += 1
        else:
            bad += 1

    for k in ctx.colors():
        kind = shape_kind(ctx, k)
        pat = WallPattern.get(ctx, k) if kind == "wall" else None
        for _ in range(rounds):
            sh = random_shape(ctx, k, rng)
            s = rng.choice((1, 2))
            if kind == "eyd":
                base = eyd_form(ctx, k, sh, s)
                for i, sh2 in sh.additions():
                    idx, color = eyd_term_index(ctx, k, s, i, sh.y(i))
                    if idx < 1:
                        continue
                    diff = eyd_form(ctx, k, sh2, s) - base
                    tally(diff == -coupling_form(ctx, idx, color))
                for i, sh2 in sh.removals():
                    idx, color = eyd_term_index(ctx, k, s, i, sh2.y(i))
                    if idx < 1:
                        continue
                    diff = eyd_form(ctx, k, sh2, s) - base
                    tally(diff == coupling_form(ctx, idx, color))
            elif kind == "reyd":
                base = reyd_form(ctx, k, sh, s)
                for i, level, _color, _dbl in sh.admissible_points(ctx):
                    sh2 = sh.dec(ctx, i)
                    idx, color = reyd_adm_index(ctx, k, s, i, level)
                    if idx < 1:
                        continue
                    diff = reyd_form(ctx, k, sh2, s) - base
                    tally(diff == -coupling_form(ctx, idx, color))
                for i, level, _color, _dbl in sh.removable_points(ctx):
                    sh2 = sh.inc(ctx, i - 1)
                    # the restored entry sits one above the recorded level
                    idx, color = reyd_rem_index(ctx, k, s, i, level + 1)
                    if idx < 1:
                        continue
                    diff = reyd_form(ctx, k, sh2, s) - base
                    tally(diff == coupling_form(ctx, idx, color))
            else:
                base = wall_form(ctx, k, sh, s)
                for i in range(len(sh.cols) + 1):
                    sh2 = sh.add(ctx, i)
                    if sh2 is None:
                        continue
                    band, color, _half = pat.slot(sh.col(i))
                    idx = s + ctx.wall_shift(k, band) + i
                    if idx < 1:
                        continue
                    diff = wall_form(ctx, k, sh2, s) - base
                    tally(diff == -coupling_form(ctx, idx, color))
                for i in range(len(sh.cols)):
                    sh2 = sh.remove(ctx, i)
                    if sh2 is None:
                        continue
                    band, color, _half = pat.slot(sh.col(i) - 1)
                    idx = s + ctx.wall_shift(k, band) + i
                    if idx < 1:
                        continue
                    diff = wall_form(ctx, k, sh2, s) - base
                    tally(diff == coupling_form(ctx, idx, color))
                # pair moves at double slots compose two single moves
                for i, band, color, dbl in sh.admissible_slots(ctx):
                    if not dbl:
                        continue
                    sh2 = sh.add(ctx, i).add(ctx, i)
                    idx = s + ctx.wall_shift(k, band) + i
                    if idx < 1:
                        continue
                    diff = wall_form(ctx, k, sh2, s) - base
                    tally(diff == coupling_form(ctx, idx, color).scaled(-2))
    return ok, bad


def run_rewrite_relation_checks(ctx: Context, lam: dict, rounds: int, seed: int):
    """Verify the boundary rewriting step against the plain one.

    Off the boundary case (negative coefficient at a first occurrence) the two
    steps agree after stripping the constant; on it, the boundary step
    subtracts the color's weight seed.  Returns (ok, bad).
    """
    rng = random.Random(seed)
    ok = bad = 0
    for _ in range(rounds):
        terms = {
            rng.randrange(1, 10): rng.choice((-3, -2, -1, 1, 2, 3))
            for _ in range(rng.randrange(1, 5))
        }
        const = rng.randrange(-2, 3)
        f = LinearForm(const, terms)
        for pos in f.positions():
            s, k = ctx.sk_of(pos)
            got = rewrite(ctx, lam, f, pos)
            if f.coeff(pos) < 0 and s == 1:
                want = f - weight_seed(ctx, lam, k)
            else:
                want = rewrite_plain(ctx, f - LinearForm(const), pos) + LinearForm(const)
            if got == want:
                ok += 1
            else:
                bad += 1
    return ok, bad


def run_axiom_checks(ctx: Context, lam, depth: int):
    """Structural operator identities over the full depth-bounded closure.

    Returns (number of (element, color) pairs checked, list of failures).
    """
    ops = CrystalOps(ctx, lam)
    closure, _ = generate_closure(ops, depth)
    checks = 0
    bad = []
    for x in closure:
        for k in ctx.colors():
            checks += 1
            eps = ops.epsilon(x, k)
            phi = ops.phi(x, k)
            wt = ops.weight_pairing(x, k)
            if phi != eps + wt:
                bad.append(("phi-eps-weight", x, k))
            y = ops.apply_f(x, k)
            if lam is None:
                if y is None:
                    bad.append(("lowering-total", x, k))
            else:
                if (y is None) != (phi <= 0):
                    bad.append(("lowering-domain", x, k))
            if y is not None:
                if ops.epsilon(y, k) != eps + 1:
                    bad.append(("eps-step", x, k))
                if ops.phi(y, k) != phi - 1:
                    bad.append(("phi-step", x, k))
                if ops.weight_pairing(y, k) != wt - 2:
                    bad.append(("weight-step", x, k))
                if ops.apply_e(y, k) != x:
                    bad.append(("raise-after-lower", x, k))
            z = ops.apply_e(x, k)
            if z is not None and ops.apply_f(z, k) != x:
                bad.append(("lower-after-raise", x, k))
    return checks, bad
