"""Exact integer linear forms and the rewriting closures that generate them.

A form is ``constant + sum(coeff * x_position)``; the defining inequality sets
of the realizations are closures of small seed sets under two rewriting steps:

* the plain step (limit crystal): at a positively-weighted position subtract
  that position's coupling form, at a negatively-weighted one add the coupling
  form of the previous same-color position (nothing at a first occurrence);
* the boundary-aware step (highest-weight case): same, except that a negative
  coefficient at a first occurrence adds the negated weight seed of its color.
"""

from __future__ import annotations

import os
from collections import deque

from .cartan import Context
from .crystal import ZVector

DEFAULT_NODE_CAP = 10**6


def node_cap() -> int:
    return int(os.environ.get("CRYSTAL_POLY_NODE_CAP", DEFAULT_NODE_CAP))


class LinearForm:
    """Immutable exact-integer affine form on sparse vectors."""

    __slots__ = ("constant", "_terms", "_h")

    def __init__(self, constant: int = 0, terms=None):
        clean = {}
        for p, c in (terms or {}).items():
            if c:
                if p < 1:
                    raise ValueError(f"positions start at 1, got {p}")
                clean[p] = int(c)
        self.constant = int(constant)
        self._terms = tuple(sorted(clean.items()))
        self._h = hash((self.constant, self._terms))

    ZERO: "LinearForm"

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coeff(self, pos: int) -> int:
        for p, c in self._terms:
            if p == pos:
                return c
        return 0

    def positions(self):
        return [p for p, _ in self._terms]

    def max_pos(self) -> int:
        return self._terms[-1][0] if self._terms else 0

    def is_constant(self) -> bool:
        return not self._terms

    def evaluate(self, x) -> int:
        get = x.get
        return self.constant + sum(c * get(p) for p, c in self._terms)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        t = dict(self._terms)
        for p, c in other._terms:
            t[p] = t.get(p, 0) + c
        return LinearForm(self.constant + other.constant, t)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        t = dict(self._terms)
        for p, c in other._terms:
            t[p] = t.get(p, 0) - c
        return LinearForm(self.constant - other.constant, t)

    def __neg__(self) -> "LinearForm":
        return LinearForm(-self.constant, {p: -c for p, c in self._terms})

    def scaled(self, m: int) -> "LinearForm":
        return LinearForm(self.constant * m, {p: c * m for p, c in self._terms})

    def shift_periods(self, period: int, delta: int) -> "LinearForm":
        """Translate every position by ``delta`` word periods."""
        if delta == 0:
            return self
        return LinearForm(
            self.constant, {p + delta * period: c for p, c in self._terms}
        )

    def sort_key(self):
        """Deterministic order: max position, then coefficient string, constant."""
        m = self.max_pos()
        dense = tuple(dict(self._terms).get(p, 0) for p in range(1, m + 1))
        return (m, dense, self.constant)

    def render(self, ctx: Context) -> str:
        if not self._terms and not self.constant:
            return "0"
        bits = []
        for p, c in self._terms:
            s, k = ctx.sk_of(p)
            mag = abs(c)
            var = f"x[{s},{k}]" if mag == 1 else f"{mag}*x[{s},{k}]"
            if not bits:
                bits.append(var if c > 0 else f"-{var}")
            else:
                bits.append(("+ " if c > 0 else "- ") + var)
        if self.constant or not bits:
            mag = abs(self.constant)
            if not bits:
                bits.append(str(self.constant))
            else:
                bits.append(("+ " if self.constant > 0 else "- ") + str(mag))
        return " ".join(bits)

    def to_json(self, ctx: Context) -> dict:
        return {
            "constant": self.constant,
            "terms": [
                {"s": ctx.occurrence_of(p), "k": ctx.color_of(p), "coeff": c}
                for p, c in self._terms
            ],
        }

    @staticmethod
    def from_json(ctx: Context, obj: dict) -> "LinearForm":
        return LinearForm(
            obj.get("constant", 0),
            {
                ctx.pos_of(int(t["s"]), int(t["k"])): int(t["coeff"])
                for t in obj.get("terms", [])
            },
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearForm)
            and self.constant == other.constant
            and self._terms == other._terms
        )

    def __hash__(self):
        return self._h

    def __repr__(self):
        inside = " ".join(f"{c:+d}*x{p}" for p, c in self._terms)
        return f"LinearForm({self.constant} {inside})".rstrip()


LinearForm.ZERO = LinearForm()


def variable(pos: int) -> LinearForm:
    return LinearForm(0, {pos: 1})


def var_sk(ctx: Context, s: int, k: int) -> LinearForm:
    return variable(ctx.pos_of(s, k))


def sorted_forms(forms) -> list[LinearForm]:
    return sorted(forms, key=LinearForm.sort_key)


# ---- coupling forms and seeds ---------------------------------------------------


def coupling_form(ctx: Context, s: int, k: int) -> LinearForm:
    """The form subtracted when rewriting at the s-th occurrence of color k.

    Two unit terms at consecutive occurrences of k plus the Cartan-weighted
    coupled colors, each offset by the word order matrix.
    """
    t = {ctx.pos_of(s, k): 1, ctx.pos_of(s + 1, k): 1}
    for c in ctx.colors():
        a = ctx.pairing(k, c)
        if c != k and a < 0:
            pos = ctx.pos_of(s + ctx.p[(c, k)], c)
            t[pos] = t.get(pos, 0) + a
    return LinearForm(0, t)


def weight_seed(ctx: Context, lam: dict[int, int], k: int) -> LinearForm:
    """The color-k boundary form: the weight pairing minus the leading terms.

    Constant ``<h_k, lam>``; minus the pairing-weighted positions before the
    first occurrence of k; minus the first occurrence itself.
    """
    first = ctx.first_pos(k)
    t = {first: -1}
    for pos in range(1, first):
        a = ctx.pairing(k, ctx.color_of(pos))
        if a:
            t[pos] = t.get(pos, 0) - a
    return LinearForm(lam.get(k, 0), t)


def seed_offset(ctx: Context, k: int) -> LinearForm:
    """The linear part of the color-k boundary form (constant dropped)."""
    return weight_seed(ctx, {}, k)


# ---- rewriting steps ------------------------------------------------------------


def rewrite_plain(ctx: Context, form: LinearForm, pos: int) -> LinearForm:
    """One plain rewriting step at ``pos`` (limit-crystal flavor)."""
    c = form.coeff(pos)
    if c == 0:
        return form
    s, k = ctx.sk_of(pos)
    if c > 0:
        return form - coupling_form(ctx, s, k)
    if s >= 2:
        return form + coupling_form(ctx, s - 1, k)
    return form


def rewrite(ctx: Context, lam: dict[int, int], form: LinearForm, pos: int) -> LinearForm:
    """One boundary-aware rewriting step at ``pos`` (highest-weight flavor)."""
    c = form.coeff(pos)
    if c == 0:
        return form
    s, k = ctx.sk_of(pos)
    if c > 0:
        return form - coupling_form(ctx, s, k)
    if s >= 2:
        return form + coupling_form(ctx, s - 1, k)
    return form - weight_seed(ctx, lam, k)


# ---- closures --------------------------------------------------------------------


class ClosureResult:
    __slots__ = ("forms", "converged", "pruned")

    def __init__(self, forms, converged, pruned):
        self.forms = frozenset(forms)
        self.converged = converged
        self.pruned = pruned

    def within(self, window: int) -> frozenset[LinearForm]:
        return frozenset(f for f in self.forms if f.max_pos() <= window)

    def __iter__(self):
        return iter(self.forms)


def _close(seeds, step, bound: int) -> ClosureResult:
    cap = node_cap()
    seen = set(seeds)
    queue = deque(seen)
    pruned = 0
    converged = True
    while queue:
        form = queue.popleft()
        for pos in form.positions():
            new = step(form, pos)
            if new == form or new in seen:
                continue
            if new.max_pos() > bound:
                pruned += 1
                continue
            if len(seen) >= cap:
                converged = False
                queue.clear()
                break
            seen.add(new)
            queue.append(new)
    return ClosureResult(seen, converged, pruned)


def _bound(ctx: Context, window: int, margin_periods: int = 2) -> int:
    return window + margin_periods * ctx.period


def closure_plain(ctx: Context, seeds, window: int) -> ClosureResult:
    """Closure of ``seeds`` under plain rewriting, generated out to a margin."""
    return _close(seeds, lambda f, p: rewrite_plain(ctx, f, p), _bound(ctx, window))


def closure_boundary(ctx: Context, lam, seeds, window: int) -> ClosureResult:
    return _close(seeds, lambda f, p: rewrite(ctx, lam, f, p), _bound(ctx, window))


def limit_inequalities(ctx: Context, window: int) -> ClosureResult:
    """Closure of all single-variable seeds inside the window (limit crystal)."""
    seeds = [variable(p) for p in range(1, _bound(ctx, window) + 1)]
    return closure_plain(ctx, seeds, window)


def weight_inequalities(ctx: Context, lam, window: int) -> ClosureResult:
    """Closure of the variables plus all boundary seeds (highest-weight case)."""
    seeds = [variable(p) for p in range(1, _bound(ctx, window) + 1)]
    seeds += [weight_seed(ctx, lam, k) for k in ctx.colors()]
    return closure_boundary(ctx, lam, seeds, window)


def boundary_closure_for_color(ctx: Context, lam, k: int, window: int) -> ClosureResult:
    """Closure of the single color-k boundary seed under boundary rewriting."""
    return closure_boundary(ctx, lam, [weight_seed(ctx, lam, k)], window)


def offset_closure_for_color(ctx: Context, k: int, window: int) -> ClosureResult:
    """Closure of the color-k seed offset under plain rewriting."""
    return closure_plain(ctx, [seed_offset(ctx, k)], window)


def membership_family(ctx: Context, lam, support: int,
                      margin_periods: int = 1) -> tuple[frozenset[LinearForm], bool]:
    """Inequality family adequate for deciding membership of vectors supported
    in positions ``1..support``.

    Combines the limit closure of the variables with, in the highest-weight
    case, the closure of each color's boundary seed.  Terms at positions beyond
    ``support`` evaluate to zero on such vectors, so only each form's
    restriction to the support matters; generating out to a margin and keeping
    every form can only sharpen the test, never wrongly reject a member.
    """
    bound = support + margin_periods * ctx.period
    seeds = [variable(p) for p in range(1, bound + 1)]
    res = _close(seeds, lambda f, p: rewrite_plain(ctx, f, p), bound)
    forms = set(res.forms)
    converged = res.converged
    if lam is not None:
        for k in ctx.colors():
            extra = _close([weight_seed(ctx, lam, k)],
                           lambda f, p: rewrite(ctx, lam, f, p), bound)
            forms |= extra.forms
            converged = converged and extra.converged
    return frozenset(forms), converged


_EPS_FORMS_CACHE: dict[tuple, list[LinearForm]] = {}


def epsilon_star_forms(ctx: Context, x, k: int, window: int | None = None) -> int:
    """Starred string value of ``x`` at color ``k``: the maximum of ``-f(x)``
    over the color-k offset closure (clamped at 0, attained by the zero form's
    limit).  Every closure element is a valid inequality, so enlarging the
    window can only raise the computed value toward the true one."""
    if window is None:
        window = max(x.max_pos(), ctx.period) + ctx.period
    key = (ctx.family, ctx.n, ctx.word, k, window)
    forms = _EPS_FORMS_CACHE.get(key)
    if forms is None:
        res = offset_closure_for_color(ctx, k, window)
        if not res.converged:
            raise RuntimeError(
                f"offset closure for color {k} did not converge at window {window}; "
                "raise CRYSTAL_POLY_NODE_CAP or lower the window")
        forms = sorted_forms(res.forms)
        _EPS_FORMS_CACHE[key] = forms
    best = 0
    for form in forms:
        value = -form.evaluate(x)
        if value > best:
            best = value
    return best


# ---- structural checks ------------------------------------------------------------


def first_violation_positivity(ctx: Context, forms) -> tuple[LinearForm, int] | None:
    """First form with a negative coefficient at some first-occurrence position."""
    for form in sorted_forms(forms):
        for p in range(1, ctx.period + 1):
            if form.coeff(p) < 0:
                return form, p
    return None


def check_positivity(ctx: Context, forms) -> bool:
    return first_violation_positivity(ctx, forms) is None


def check_strict_positivity(ctx: Context, window: int) -> bool:
    """Positivity over the per-color offset closures (seeds removed) plus the
    limit closure."""
    pool: set[LinearForm] = set(limit_inequalities(ctx, window).forms)
    for k in ctx.colors():
        res = offset_closure_for_color(ctx, k, window)
        pool |= res.forms - {seed_offset(ctx, k)}
    return check_positivity(ctx, pool)


def check_ample(forms) -> bool:
    return all(f.constant >= 0 for f in forms)


# ---- membership -------------------------------------------------------------------


def membership(forms, x: ZVector) -> tuple[bool, LinearForm | None]:
    """Evaluate ordered forms on x; return (ok, first violated)."""
    for form in sorted_forms(forms):
        if form.evaluate(x) < 0:
            return False, form
    return True, None
