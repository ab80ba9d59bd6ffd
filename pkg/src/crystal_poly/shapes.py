"""Combinatorial shape families and their closed-form inequality sets.

Three shape families index the closed-form inequalities:

* :class:`ExtendedYoungDiagram` -- one-sided, eventually-constant nondecreasing
  integer profiles of a given charge (plain and C-machinery cases);
* :class:`RevisedEYD` -- two-sided profiles with residue-periodic step
  relaxations (twisted machineries, non-special colors);
* :class:`YoungWall` -- block walls over a half-block ground row (twisted
  machineries, special colors).

Every shape maps to an integer linear form through its boundary data (corners,
admissible/removable points, admissible slots/removable blocks); the per-color
inequality family of a dominant weight is either a singleton, a one-sided
ladder, or the forms of all nonground shapes, selected by the relative order
of first occurrences in the word.
"""

from __future__ import annotations

from collections import deque

from .cartan import Context
from .crystal import ZVector
from .inequalities import LinearForm, node_cap

# --------------------------------------------------------------------------------
# extended Young diagrams
# --------------------------------------------------------------------------------


class ExtendedYoungDiagram:
    """Nondecreasing profile ``y_0 <= y_1 <= ...`` with values < charge stored
    explicitly and the constant tail implied."""

    __slots__ = ("charge", "ys")

    def __init__(self, charge: int, ys=()):
        ys = tuple(int(v) for v in ys)
        while ys and ys[-1] >= charge:
            if ys[-1] > charge:
                raise ValueError("profile exceeds charge")
            ys = ys[:-1]
        if any(a > b for a, b in zip(ys, ys[1:])) or (ys and ys[-1] > charge):
            raise ValueError("profile must be nondecreasing")
        self.charge = charge
        self.ys = ys

    @classmethod
    def ground(cls, charge: int) -> "ExtendedYoungDiagram":
        return cls(charge)

    def y(self, r: int) -> int:
        return self.ys[r] if r < len(self.ys) else self.charge

    def boxes(self) -> int:
        return sum(self.charge - v for v in self.ys)

    def corners(self):
        """(concave, convex) corner lists as (i, level) pairs."""
        concave = [(0, self.y(0))]
        convex = []
        for r in range(len(self.ys)):
            if self.y(r) < self.y(r + 1):
                convex.append((r + 1, self.y(r)))
                concave.append((r + 1, self.y(r + 1)))
        return concave, convex

    def additions(self):
        """All single-box additions, as (column, new diagram) pairs."""
        out = []
        for i in range(len(self.ys) + 1):
            v = self.y(i) - 1
            if i == 0 or self.y(i - 1) <= v:
                ys = list(self.ys)
                if i == len(ys):
                    ys.append(v)
                else:
                    ys[i] = v
                out.append((i, ExtendedYoungDiagram(self.charge, ys)))
        return out

    def removals(self):
        out = []
        for i in range(len(self.ys)):
            v = self.ys[i] + 1
            if v <= self.y(i + 1):
                ys = list(self.ys)
                ys[i] = v
                out.append((i, ExtendedYoungDiagram(self.charge, ys)))
        return out

    def render(self) -> str:
        if not self.ys:
            return "(ground)"
        lo = min(self.ys)
        rows = []
        for level in range(self.charge - 1, lo - 1, -1):
            rows.append("".join("#" if v <= level else " " for v in self.ys))
        return "\n".join(rows)

    def __eq__(self, other):
        return (
            isinstance(other, ExtendedYoungDiagram)
            and self.charge == other.charge
            and self.ys == other.ys
        )

    def __hash__(self):
        return hash((self.charge, self.ys))

    def __repr__(self):
        return f"EYD(charge={self.charge}, ys={list(self.ys)})"


def eyd_term_index(ctx: Context, k: int, s: int, i: int, j: int) -> tuple[int, int]:
    """(occurrence index, color) of the form term attached to corner (i, j)."""
    return s + ctx.shift(k, i + j) + min(k - j, i), ctx.fold(i + j)


def eyd_form(ctx: Context, k: int, diagram: ExtendedYoungDiagram, s: int) -> LinearForm:
    terms: dict[int, int] = {}
    concave, convex = diagram.corners()
    for sign, pts in ((1, concave), (-1, convex)):
        for i, j in pts:
            idx, color = eyd_term_index(ctx, k, s, i, j)
            if idx >= 1:
                pos = ctx.pos_of(idx, color)
                terms[pos] = terms.get(pos, 0) + sign
    return LinearForm(0, terms)


# --------------------------------------------------------------------------------
# revised extended Young diagrams
# --------------------------------------------------------------------------------


class RevisedEYD:
    """Two-sided profile stored as deviations from the ground profile
    ``charge + min(t, 0)``; always weakly below ground."""

    __slots__ = ("charge", "devs")

    def __init__(self, charge: int, devs=()):
        if isinstance(devs, dict):
            devs = devs.items()
        self.charge = charge
        self.devs = tuple(sorted((int(t), int(y)) for t, y in devs))
        for t, y in self.devs:
            if y == self.ground(t):
                raise ValueError(f"entry at {t} equals the ground profile")

    @classmethod
    def ground_shape(cls, charge: int) -> "RevisedEYD":
        return cls(charge)

    def ground(self, t: int) -> int:
        return self.charge + min(t, 0)

    def y(self, t: int) -> int:
        for u, v in self.devs:
            if u == t:
                return v
        return self.ground(t)

    def boxes(self) -> int:
        return sum(self.ground(t) - v for t, v in self.devs)

    def _dev_span(self):
        if not self.devs:
            return 0, 0
        return self.devs[0][0], self.devs[-1][0]

    def _scan(self):
        lo, hi = self._dev_span()
        return range(min(lo - 3, -3), max(hi + 3, 3) + 1)

    def _step_ok(self, ctx: Context, t: int, a: int, b: int) -> bool:
        """Whether consecutive levels a = y_t, b = y_{t+1} are permitted."""
        r = (self.charge + t) % ctx.fold_period
        special = r == 0 or (ctx.machinery == "D2" and r == ctx.n)
        if not special:
            return b == a or b == a + 1
        if t > 0:
            return b >= a
        if t < 0:
            return b <= a + 1
        return True  # a turning residue at t=0 (only D2 charge n) is unconstrained

    def _with(self, t: int, v: int) -> "RevisedEYD":
        devs = {u: w for u, w in self.devs}
        if v == self.ground(t):
            devs.pop(t, None)
        else:
            devs[t] = v
        return RevisedEYD(self.charge, devs)

    def dec(self, ctx: Context, i: int) -> "RevisedEYD | None":
        v = self.y(i) - 1
        if not self._step_ok(ctx, i - 1, self.y(i - 1), v):
            return None
        if not self._step_ok(ctx, i, v, self.y(i + 1)):
            return None
        return self._with(i, v)

    def inc(self, ctx: Context, i: int) -> "RevisedEYD | None":
        v = self.y(i) + 1
        if v > self.ground(i):  # shortcut; the step rules reject this anyway
            return None
        if not self._step_ok(ctx, i - 1, self.y(i - 1), v):
            return None
        if not self._step_ok(ctx, i, v, self.y(i + 1)):
            return None
        return self._with(i, v)

    def _doubling_residues(self, ctx: Context):
        return (0,) if ctx.machinery == "A2" else (0, ctx.n)

    def admissible_points(self, ctx: Context):
        """Valid decrements as (index, level, color, double) tuples."""
        out = []
        for i in self._scan():
            if self.dec(ctx, i) is None:
                continue
            color = ctx.fold(i + self.charge)
            double = False
            if color in ctx.specials and self.y(i - 1) < self.y(i) == self.y(i + 1):
                r = (i + self.charge) % ctx.fold_period
                lows = self._doubling_residues(ctx)
                ups = tuple((l + 1) % ctx.fold_period for l in lows)
                double = (i < 0 and r in ups) or (i > 0 and r in lows)
            out.append((i, self.y(i), color, double))
        return out

    def removable_points(self, ctx: Context):
        """Valid increments at i-1, reported at index i, as (i, level, color,
        double) with level the entry being restored."""
        out = []
        for i in self._scan():
            if self.inc(ctx, i - 1) is None:
                continue
            color = ctx.fold(i + self.charge - 1)
            double = False
            if color in ctx.specials and self.y(i - 2) == self.y(i - 1) < self.y(i):
                r = (i + self.charge - 1) % ctx.fold_period
                lows = self._doubling_residues(ctx)
                ups = tuple((l + 1) % ctx.fold_period for l in lows)
                double = (i > 1 and r in ups) or (i < 1 and r in lows)
            out.append((i, self.y(i - 1), color, double))
        return out

    def render(self) -> str:
        lo, hi = self._dev_span()
        ts = range(lo - 2, hi + 3)
        levels = [self.y(t) for t in ts] + [self.ground(t) for t in ts]
        rows = []
        for level in range(max(levels), min(levels), -1):
            row = []
            for t in ts:
                if self.y(t) < level <= self.ground(t):
                    row.append("#")
                elif level <= self.ground(t):
                    row.append(".")
                else:
                    row.append(" ")
            rows.append("".join(row))
        return "\n".join(rows) or "(ground)"

    def __eq__(self, other):
        return (
            isinstance(other, RevisedEYD)
            and self.charge == other.charge
            and self.devs == other.devs
        )

    def __hash__(self):
        return hash((self.charge, self.devs))

    def __repr__(self):
        return f"RevisedEYD(charge={self.charge}, devs={dict(self.devs)})"


def reyd_adm_index(ctx: Context, k: int, s: int, i: int, level: int) -> tuple[int, int]:
    return (
        s + ctx.shift(k, i + k) + min(i, 0) + k - level,
        ctx.fold(i + k),
    )


def reyd_rem_index(ctx: Context, k: int, s: int, i: int, level: int) -> tuple[int, int]:
    return (
        s + ctx.shift(k, i + k - 1) + min(i - 1, 0) + k - level,
        ctx.fold(i + k - 1),
    )


def reyd_form(ctx: Context, k: int, shape: RevisedEYD, s: int) -> LinearForm:
    terms: dict[int, int] = {}
    for i, level, color, double in shape.admissible_points(ctx):
        idx, _ = reyd_adm_index(ctx, k, s, i, level)
        if idx >= 1:
            pos = ctx.pos_of(idx, color)
            terms[pos] = terms.get(pos, 0) + (2 if double else 1)
    for i, level, color, double in shape.removable_points(ctx):
        idx, _ = reyd_rem_index(ctx, k, s, i, level)
        if idx >= 1:
            pos = ctx.pos_of(idx, color)
            terms[pos] = terms.get(pos, 0) - (2 if double else 1)
    return LinearForm(0, terms)


# --------------------------------------------------------------------------------
# Young walls
# --------------------------------------------------------------------------------

_PATTERNS: dict[tuple[str, int, int], "WallPattern"] = {}


class WallPattern:
    """Vertical slot pattern above a ground color: special-color bands carry
    two half slots, others one unit slot."""

    def __init__(self, ctx: Context, charge: int):
        if ctx.machinery not in ("A2", "D2") or charge not in ctx.specials:
            raise ValueError(f"no wall pattern for color {charge} in {ctx.machinery}")
        self.ctx = ctx
        self.charge = charge
        self.slots: list[tuple[int, int, int | None]] = []  # (band, color, half index)
        self.cumhalf = [0]
        self._next_band = charge

    @staticmethod
    def get(ctx: Context, charge: int) -> "WallPattern":
        key = (ctx.machinery, ctx.n, charge, ctx.word)
        pat = _PATTERNS.get(key)
        if pat is None or pat.ctx is not ctx:
            pat = WallPattern(ctx, charge)
            _PATTERNS[key] = pat
        return pat

    def ensure(self, m: int) -> None:
        while len(self.slots) < m:
            band = self._next_band
            self._next_band += 1
            color = self.ctx.wall_fold(band)
            if color in self.ctx.specials:
                self.slots.append((band, color, 0))
                self.cumhalf.append(self.cumhalf[-1] + 1)
                self.slots.append((band, color, 1))
                self.cumhalf.append(self.cumhalf[-1] + 1)
            else:
                self.slots.append((band, color, None))
                self.cumhalf.append(self.cumhalf[-1] + 2)

    def slot(self, i: int):
        self.ensure(i + 1)
        return self.slots[i]

    def half_height(self, count: int) -> int:
        self.ensure(count)
        return self.cumhalf[count]

    def is_full(self, count: int) -> bool:
        return self.half_height(count) % 2 == 0


class YoungWall:
    """Columns of filled slot counts (>= 1 everywhere; trailing ground columns
    implied), weakly decreasing, no two full columns of equal height."""

    __slots__ = ("charge", "cols")

    def __init__(self, charge: int, cols=()):
        cols = tuple(int(c) for c in cols)
        while cols and cols[-1] == 1:
            cols = cols[:-1]
        if any(c < 1 for c in cols):
            raise ValueError("slot counts start at the ground block")
        if any(a < b for a, b in zip(cols, cols[1:])):
            raise ValueError("columns must be weakly decreasing")
        self.charge = charge
        self.cols = cols

    @classmethod
    def ground_wall(cls, charge: int) -> "YoungWall":
        return cls(charge)

    def col(self, i: int) -> int:
        return self.cols[i] if i < len(self.cols) else 1

    def blocks(self) -> int:
        return sum(c - 1 for c in self.cols)

    def is_proper(self, ctx: Context) -> bool:
        pat = WallPattern.get(ctx, self.charge)
        return all(
            not (a == b and pat.is_full(a)) for a, b in zip(self.cols, self.cols[1:])
        )

    def _make(self, i: int, count: int) -> "YoungWall":
        cols = list(self.cols)
        while len(cols) <= i:
            cols.append(1)
        cols[i] = count
        return YoungWall(self.charge, cols)

    def add(self, ctx: Context, i: int) -> "YoungWall | None":
        pat = WallPattern.get(ctx, self.charge)
        c2 = self.col(i) + 1
        if i > 0 and self.col(i - 1) < c2:
            return None
        if pat.is_full(c2) and i > 0 and self.col(i - 1) == c2:
            return None
        return self._make(i, c2)

    def remove(self, ctx: Context, i: int) -> "YoungWall | None":
        pat = WallPattern.get(ctx, self.charge)
        c2 = self.col(i) - 1
        if c2 < 1 or c2 < self.col(i + 1):
            return None
        if pat.is_full(c2) and self.col(i + 1) == c2:
            return None
        return self._make(i, c2)

    def _pair_add_ok(self, pat: WallPattern, i: int) -> bool:
        band, _, half = pat.slot(self.col(i))
        if half != 0:
            return False
        c2 = self.col(i) + 2
        if i > 0 and self.col(i - 1) < c2:
            return False
        if pat.is_full(c2) and i > 0 and self.col(i - 1) == c2:
            return False
        return True

    def _pair_remove_ok(self, pat: WallPattern, i: int) -> bool:
        top = self.col(i) - 1
        if top < 1:
            return False
        band, _, half = pat.slot(top)
        if half != 1:
            return False
        c2 = self.col(i) - 2
        if c2 < 1 or c2 < self.col(i + 1):
            return False
        if pat.is_full(c2) and self.col(i + 1) == c2:
            return False
        return True

    def admissible_slots(self, ctx: Context):
        """(column, band, color, double) for each place a block may enter.

        A slot where both halves of a special band fit as a pair counts once,
        as double; otherwise a valid single addition counts as single.
        """
        pat = WallPattern.get(ctx, self.charge)
        out = []
        for i in range(len(self.cols) + 1):
            band, color, _half = pat.slot(self.col(i))
            if self._pair_add_ok(pat, i):
                out.append((i, band, color, True))
            elif self.add(ctx, i) is not None:
                out.append((i, band, color, False))
        return out

    def removable_blocks(self, ctx: Context):
        pat = WallPattern.get(ctx, self.charge)
        out = []
        for i in range(len(self.cols)):
            top = self.col(i) - 1
            if top < 1:
                continue
            band, color, _half = pat.slot(top)
            if self._pair_remove_ok(pat, i):
                out.append((i, band, color, True))
            elif self.remove(ctx, i) is not None:
                out.append((i, band, color, False))
        return out

    def render(self, ctx: Context) -> str:
        pat = WallPattern.get(ctx, self.charge)
        if not self.cols:
            return "(ground)"
        height = self.cols[0]
        rows = []
        for level in range(height - 1, -1, -1):
            _, color, half = pat.slot(level)
            mark = str(color) if half is None else f"{color}'"
            cells = "".join("#" if self.col(i) > level else " " for i in range(len(self.cols)))
            rows.append(f"{mark:>3} |{cells}")
        return "\n".join(rows)

    def __eq__(self, other):
        return (
            isinstance(other, YoungWall)
            and self.charge == other.charge
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.charge, self.cols))

    def __repr__(self):
        return f"YoungWall(charge={self.charge}, cols={list(self.cols)})"


def wall_form(ctx: Context, k: int, wall: YoungWall, s: int) -> LinearForm:
    terms: dict[int, int] = {}
    for i, band, color, double in wall.admissible_slots(ctx):
        idx = s + ctx.wall_shift(k, band) + i
        if idx >= 1:
            pos = ctx.pos_of(idx, color)
            terms[pos] = terms.get(pos, 0) + (2 if double else 1)
    for i, band, color, double in wall.removable_blocks(ctx):
        idx = s + ctx.wall_shift(k, band) + i + 1
        if idx >= 1:
            pos = ctx.pos_of(idx, color)
            terms[pos] = terms.get(pos, 0) - (2 if double else 1)
    return LinearForm(0, terms)


# --------------------------------------------------------------------------------
# shape family dispatch
# --------------------------------------------------------------------------------


def shape_kind(ctx: Context, k: int) -> str:
    """Which shape family indexes color k's inequalities."""
    if ctx.machinery in ("A1", "C1"):
        return "eyd"
    return "wall" if k in ctx.specials else "reyd"


def ground_shape(ctx: Context, k: int):
    kind = shape_kind(ctx, k)
    if kind == "eyd":
        return ExtendedYoungDiagram.ground(k)
    if kind == "reyd":
        return RevisedEYD.ground_shape(k)
    return YoungWall.ground_wall(k)


def shape_form(ctx: Context, k: int, shape, s: int) -> LinearForm:
    if isinstance(shape, ExtendedYoungDiagram):
        return eyd_form(ctx, k, shape, s)
    if isinstance(shape, RevisedEYD):
        return reyd_form(ctx, k, shape, s)
    return wall_form(ctx, k, shape, s)


def shape_children(ctx: Context, shape):
    if isinstance(shape, ExtendedYoungDiagram):
        return [t for _, t in shape.additions()]
    if isinstance(shape, RevisedEYD):
        out = []
        for i, _, _, _ in shape.admissible_points(ctx):
            t = shape.dec(ctx, i)
            if t is not None:
                out.append(t)
        return out
    out = []
    for i in range(len(shape.cols) + 1):
        t = shape.add(ctx, i)
        if t is not None:
            out.append(t)
    return out


_SHAPE_CACHE: dict[tuple, tuple] = {}


def enumerate_shapes(ctx: Context, k: int, s: int, bound: int):
    """BFS over single additions from the ground shape, keeping shapes whose
    form at offset ``s`` stays inside the position bound.

    Returns (shapes set, converged flag).  Shapes are pruned by the position
    reach of their own form, so the traversal terminates; the margin built
    into callers' bounds is validated by the closure-equality checks.
    """
    key = (ctx.family, ctx.n, ctx.word, k, s, bound)
    cached = _SHAPE_CACHE.get(key)
    if cached is not None:
        return cached
    cap = node_cap()
    ground = ground_shape(ctx, k)
    seen = {ground}
    queue = deque([ground])
    converged = True
    while queue:
        shape = queue.popleft()
        for child in shape_children(ctx, shape):
            if child in seen:
                continue
            if shape_form(ctx, k, child, s).max_pos() > bound:
                continue
            if len(seen) >= cap:
                converged = False
                queue.clear()
                break
            seen.add(child)
            queue.append(child)
    result = (frozenset(seen), converged)
    _SHAPE_CACHE[key] = result
    return result


# --------------------------------------------------------------------------------
# ladder forms (the one-sided cases)
# --------------------------------------------------------------------------------


def _ladder(ctx: Context, hi_idx, hi_color, lo_idx, lo_color) -> LinearForm:
    hi_coeff = lo_coeff = 1
    if ctx.machinery in ("A2", "D2") and hi_color != lo_color:
        if hi_color in ctx.specials:
            hi_coeff = 2
        elif lo_color in ctx.specials:
            lo_coeff = 2
    terms: dict[int, int] = {}
    if hi_idx >= 1:
        pos = ctx.pos_of(hi_idx, hi_color)
        terms[pos] = terms.get(pos, 0) + hi_coeff
    if lo_idx >= 1:
        pos = ctx.pos_of(lo_idx, lo_color)
        terms[pos] = terms.get(pos, 0) - lo_coeff
    return LinearForm(0, terms)


def right_ladder(ctx: Context, k: int, r: int) -> LinearForm:
    """Rung ``r >= k+1`` of the rightward ladder family for color k."""
    return _ladder(
        ctx,
        ctx.shift(k, r),
        ctx.fold(r),
        1 + ctx.shift(k, r - 1),
        ctx.fold(r - 1),
    )


def left_ladder(ctx: Context, k: int, r: int) -> LinearForm:
    """Rung ``r <= k`` of the leftward ladder family for color k."""
    return _ladder(
        ctx,
        ctx.shift(k, r - 1),
        ctx.fold(r - 1),
        1 + ctx.shift(k, r),
        ctx.fold(r),
    )


# --------------------------------------------------------------------------------
# closed-form inequality sets
# --------------------------------------------------------------------------------


def comb_lambda_case(ctx: Context, k: int) -> str:
    """Select the shape of color k's weight-dependent family from the word."""
    if shape_kind(ctx, k) == "wall":
        above = ctx.first_pos(ctx.wall_fold(k + 1))
        return "singleton" if ctx.first_pos(k) < above else "shapes"
    me = ctx.first_pos(k)
    up = ctx.first_pos(ctx.fold(k + 1))
    down = ctx.first_pos(ctx.fold(k - 1))
    if me < up and me < down:
        return "singleton"
    if me < up:
        return "left"
    if me < down:
        return "right"
    return "shapes"


def _ladder_family(ctx: Context, k: int, window: int, direction: str):
    idx_bound = window // ctx.n + 2
    out = set()
    r = k if direction == "left" else k + 1
    while True:
        if direction == "left":
            form = left_ladder(ctx, k, r)
            idxs = (ctx.shift(k, r - 1), 1 + ctx.shift(k, r))
            r -= 1
        else:
            form = right_ladder(ctx, k, r)
            idxs = (ctx.shift(k, r), 1 + ctx.shift(k, r - 1))
            r += 1
        # occurrence indexes grow monotonically along the ladder, so once both
        # pass the bound no later rung can reenter the window
        if min(idxs) > idx_bound:
            break
        if form.max_pos() <= window:
            out.add(form)
    return out


def comb_lambda(ctx: Context, lam: dict[int, int], k: int, window: int):
    """Color k's weight-dependent inequality family inside the window.

    Returns (frozenset of forms, converged flag).
    """
    const = lam.get(k, 0)
    case = comb_lambda_case(ctx, k)
    if case == "singleton":
        return frozenset({LinearForm(const, {ctx.first_pos(k): -1})}), True
    if case in ("left", "right"):
        fam = _ladder_family(ctx, k, window, case)
        return frozenset(LinearForm(const) + f for f in fam), True
    shapes, converged = enumerate_shapes(ctx, k, 0, window + 2 * ctx.n)
    ground = ground_shape(ctx, k)
    out = set()
    for shape in shapes:
        if shape == ground:
            continue
        form = shape_form(ctx, k, shape, 0)
        if form.max_pos() <= window:
            out.add(LinearForm(const) + form)
    return frozenset(out), converged


def comb_infinity(ctx: Context, window: int):
    """The weight-free inequality family inside the window: every shape of
    every color, at every nonnegative period shift that stays inside.

    Returns (frozenset of forms, converged flag).
    """
    out = set()
    converged = True
    for k in ctx.colors():
        shapes, ok = enumerate_shapes(ctx, k, 1, window + 2 * ctx.n)
        converged = converged and ok
        for shape in shapes:
            base = shape_form(ctx, k, shape, 1)
            delta = 0
            while True:
                form = base.shift_periods(ctx.n, delta)
                if form.max_pos() > window:
                    break
                out.add(form)
                delta += 1
    return frozenset(out), converged


def weight_family(ctx: Context, lam: dict[int, int], window: int):
    """Window slice of the full defining family for a dominant weight."""
    forms, converged = comb_infinity(ctx, window)
    all_forms = set(forms)
    for k in ctx.colors():
        fam, ok = comb_lambda(ctx, lam, k, window)
        converged = converged and ok
        all_forms |= fam
    return frozenset(all_forms), converged


# --------------------------------------------------------------------------------
# starred string values from forms
# --------------------------------------------------------------------------------

_EPS_CACHE: dict[tuple, frozenset[LinearForm]] = {}


def epsilon_star_value(ctx: Context, x: ZVector, k: int) -> int:
    """max(0, max of -form(x)) over the zero-weight family of color k.

    Shapes beyond the window touch none of x's support and evaluate to 0,
    which the explicit 0 accounts for.
    """
    window = max(x.max_pos(), ctx.n) + 2 * ctx.n
    key = (ctx.family, ctx.n, ctx.word, k, window)
    forms = _EPS_CACHE.get(key)
    if forms is None:
        forms, converged = comb_lambda(ctx, {}, k, window)
        if not converged:
            raise RuntimeError("shape enumeration hit the node cap")
        _EPS_CACHE[key] = forms
    best = 0
    for form in forms:
        val = -form.evaluate(x)
        if val > best:
            best = val
    return best
