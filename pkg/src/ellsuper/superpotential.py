"""Superpotential values by three mutually validating routes.

``wtT(d, a)`` is the normalized count: the plain count ``T(d, a)`` times the
multiplicity of the path point at index 3d-1.  Three independent pipelines
compute it exactly:

* ``recursion_wtT``: the recursion

      wtT_d = (G_{3d-1})! * ( (d!)^-3
              - sum over splits d_1+..+d_k = d, k >= 2, of
                wtT_{d_1} .. wtT_{d_k} / (k! * (G_{3d_1-1}+..+G_{3d_k-1})!) )

  where ``G_k`` is the lattice path point of ``a`` and ``(.)!`` the pair
  factorial.  The inner sum runs over ordered splits with the 1/k! factor or,
  equivalently, over multisets with inverse multiplicity factorials; both are
  implemented and must agree.

* ``tree_wtT``: a single pass over rooted trees with d unordered leaves,

      wtT_d = (G_2!)^d * sum over trees T of
              (-1)^(#unmovable internal) / |Aut(T)|
              * prod over internal v of G_{3l(v)-1}! / (sum over children v'
                of G_{3l(v')-1})!
              * prod over movable v of ( (l(v)!)^-2 (l(v)*G_2)! / (G_2!)^l(v) - 1 )

  with ``l(v)`` the leaf number; leaf children contribute ``G_2`` to the sums
  and ``l(v)*G_2`` is a scalar multiple of the lattice point.

* ``linf_superpotential`` (in :mod:`.linf`): inversion of the ellipsoid
  morphism, summed against the split constants.

``tree_wtT_infinity`` is the infinite-ratio specialization of the tree sum
(``G_k = (k, 0)``) written out with plain integer factorials and central
binomials; it is kept as a separate implementation purely as a cross-check.

All dependence on ``a`` enters through the path prefix ``G_0..G_{3d-1}``, so
the recursion memo is keyed by (d, prefix) and ratios sharing a prefix share
work and trivially share values.
"""

from __future__ import annotations

import json
import math
import os
import threading
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .lattice import AspectRatio, gamma_path, mult, pair_factorial, point_add, point_scale
from .linf import linf_superpotential
from .numerics import binomial, compositions, factorial, partitions
from .trees import enumerate_trees, vertex_data

METHODS = ("recursion", "tree", "linf")
DEFAULT_LINF_BOUND = 6  # the inversion route is an oracle; beyond this it gets slow

WORKERS_ENV = "ELLSUPER_WORKERS"


class MethodDisagreement(RuntimeError):
    """Two pipelines produced different exact values; the message carries a full dump."""


@dataclass(frozen=True)
class SuperpotentialResult:
    d: int
    a: AspectRatio
    wtT: Fraction
    multiplier: int
    T: Fraction
    method: str


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn, items):
    # Order-preserving map; items are pure terms, so any schedule gives the
    # same exact sum.  Threads only when explicitly requested via env var.
    n = _worker_count()
    items = list(items)
    if n <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def path_signature(a: AspectRatio, d: int) -> tuple[tuple[int, int], ...]:
    """The path prefix G_0..G_{3d-1} that wtT(d, .) depends on."""
    return tuple(gamma_path(a, 3 * d - 1))


_RECURSION_CACHE: dict = {}
_RECURSION_LOCK = threading.Lock()


def recursion_wtT(d: int, a: AspectRatio, inner: str = "ordered") -> Fraction:
    """wtT by the split recursion; memoized per (d, path prefix, inner mode)."""
    if d < 1:
        raise ValueError(f"recursion_wtT requires d >= 1, got {d}")
    if inner not in ("ordered", "multiset"):
        raise ValueError(f"inner must be 'ordered' or 'multiset', got {inner!r}")
    path = path_signature(a, d)
    return _recursion_from_path(d, path, inner)


def _recursion_from_path(d: int, path, inner: str) -> Fraction:
    key = (d, path[: 3 * d], inner)
    hit = _RECURSION_CACHE.get(key)
    if hit is not None:
        return hit
    inner_sum = Fraction(0)
    if inner == "ordered":
        for comp in compositions(d, min_parts=2):
            term = Fraction(1, factorial(len(comp)))
            for ds in comp:
                term *= _recursion_from_path(ds, path, inner)
            inner_sum += term / pair_factorial(point_add(*(path[3 * ds - 1] for ds in comp)))
    else:
        for part in partitions(d, min_parts=2):
            term = Fraction(1)
            for _, grp in groupby(part):
                term /= factorial(len(tuple(grp)))
            for ds in part:
                term *= _recursion_from_path(ds, path, inner)
            inner_sum += term / pair_factorial(point_add(*(path[3 * ds - 1] for ds in part)))
    value = pair_factorial(path[3 * d - 1]) * (Fraction(1, factorial(d) ** 3) - inner_sum)
    with _RECURSION_LOCK:
        _RECURSION_CACHE[key] = value
    return value


def tree_wtT(d: int, a: AspectRatio) -> Fraction:
    """wtT by the closed sum over rooted trees with d unordered leaves."""
    if d < 1:
        raise ValueError(f"tree_wtT requires d >= 1, got {d}")
    path = path_signature(a, d)
    g2 = path[2]
    g2f = pair_factorial(g2)

    def term(tree) -> Fraction:
        value = Fraction(1, tree.aut_order)
        for v in vertex_data(tree):
            if not v.movable:
                value = -value
            num = pair_factorial(path[3 * v.leaf_number - 1])
            den = pair_factorial(point_add(*(path[3 * c - 1] for c in v.child_leaf_numbers)))
            value *= Fraction(num, den)
            if v.movable:
                ell = v.leaf_number
                movable = Fraction(pair_factorial(point_scale(g2, ell)),
                                   factorial(ell) ** 2 * g2f ** ell) - 1
                value *= movable
        return value

    total = sum(_map(term, enumerate_trees(d)), Fraction(0))
    return g2f ** d * total


def tree_wtT_infinity(d: int) -> Fraction:
    """Infinite-ratio specialization of the tree sum, as an independent formula.

    With every path point equal to (k, 0) the internal factor collapses to
    (3l(v)-1)! / (3l(v)-|v|+1)! and the movable factor to the central-binomial
    expression 2^-l * binom(2l, l) - 1, with overall prefactor 2^d.
    """
    if d < 1:
        raise ValueError(f"tree_wtT_infinity requires d >= 1, got {d}")
    total = Fraction(0)
    for tree in enumerate_trees(d):
        value = Fraction(1, tree.aut_order)
        for v in vertex_data(tree):
            if not v.movable:
                value = -value
            value *= Fraction(factorial(3 * v.leaf_number - 1),
                              factorial(3 * v.leaf_number - v.valency + 1))
            if v.movable:
                ell = v.leaf_number
                value *= Fraction(binomial(2 * ell, ell), 2 ** ell) - 1
        total += value
    return 2 ** d * total


def _warn_outside_range(a: AspectRatio) -> None:
    # All headline evaluations assume a > 1; a = p/q + delta stays above 1
    # exactly when p >= q.
    if not a.is_infinite and a.p < a.q:
        warnings.warn(f"aspect ratio {a} is below 1: outside the intended range a > 1",
                      stacklevel=3)


def superpotential(d: int, a: AspectRatio, method: str = "tree",
                   linf_bound: int = DEFAULT_LINF_BOUND) -> SuperpotentialResult:
    """Full record: wtT by the chosen method, the multiplier, and T = wtT / mult."""
    if d < 1:
        raise ValueError(f"superpotential requires d >= 1, got {d}")
    _warn_outside_range(a)
    if method == "recursion":
        wt = recursion_wtT(d, a)
    elif method == "tree":
        wt = tree_wtT(d, a)
    elif method == "linf":
        if d > linf_bound:
            raise ValueError(
                f"method 'linf' is an oracle intended for d <= {linf_bound}; "
                f"use 'tree' or 'recursion' for d={d}, or pass a larger linf_bound"
            )
        wt = linf_superpotential(d, a)
    else:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    multiplier = mult(a, path_signature(a, d)[3 * d - 1])
    return SuperpotentialResult(d=d, a=a, wtT=wt, multiplier=multiplier,
                                T=wt / multiplier, method=method)


def cross_validate(d: int, a: AspectRatio, linf_bound: int = DEFAULT_LINF_BOUND) -> dict:
    """Run every applicable pipeline, demand exact agreement, report values and timings.

    Raises :class:`MethodDisagreement` with a full operand dump if any two
    pipelines differ.  ``linf_bound=0`` skips the inversion oracle.
    """
    if d < 1:
        raise ValueError(f"cross_validate requires d >= 1, got {d}")
    _warn_outside_range(a)
    values: dict[str, Fraction] = {}
    timings: dict[str, float] = {}

    def run(name, fn):
        start = time.perf_counter()
        values[name] = fn()
        timings[name] = round((time.perf_counter() - start) * 1e3, 3)

    run("recursion", lambda: recursion_wtT(d, a))
    run("recursion-multiset", lambda: recursion_wtT(d, a, inner="multiset"))
    run("tree", lambda: tree_wtT(d, a))
    if a.is_infinite:
        run("tree-infinity", lambda: tree_wtT_infinity(d))
    if d <= linf_bound:
        run("linf", lambda: linf_superpotential(d, a))

    if len(set(values.values())) != 1:
        dump = {
            "d": d,
            "a": str(a),
            "path_prefix": [list(pt) for pt in path_signature(a, d)],
            "values": {name: str(v) for name, v in values.items()},
        }
        raise MethodDisagreement(f"superpotential pipelines disagree: {json.dumps(dump)}")

    wt = values["recursion"]
    multiplier = mult(a, path_signature(a, d)[3 * d - 1])
    return {
        "d": d,
        "a": str(a),
        "wtT": str(wt),
        "mult": multiplier,
        "T": str(wt / multiplier),
        "methods": sorted(values),
        "agree": True,
        "ms": timings,
    }


def scan_breakpoints(d: int) -> list[Fraction]:
    """Reduced fractions p/q > 1 with p + q <= 3d, sorted ascending.

    These are the only ratios at which the path prefix G_0..G_{3d-1} can
    change: the argmin at level k flips where adjacent candidates tie, i.e.
    at a = (k-j)/(j+1) or a = (k-j-1)/j with k <= 3d-1, and both kinds have
    numerator plus denominator at most 3d.  (The bound 3d is sharp: the
    prefix point at index 3d-1 flips from (3d-2, 1) to (3d-1, 0) at
    a = 3d-1, a fraction with p + q = 3d.)
    """
    if d < 1:
        raise ValueError(f"scan_breakpoints requires d >= 1, got {d}")
    out = set()
    for total in range(3, 3 * d + 1):
        for q in range(1, total):
            p = total - q
            if p > q and math.gcd(p, q) == 1:
                out.add(Fraction(p, q))
    return sorted(out)


def scan_monotonicity(d: int) -> dict:
    """Profile of T(d, a) over the intervals between breakpoints, a in (1, inf).

    Each interval is represented by its left endpoint plus delta (for the
    first interval, 1 + delta).  Every representative value is cross-validated
    between the recursion and the tree sum, and a second point inside the same
    interval (the mediant with the next breakpoint) guards the breakpoint
    analysis: the report is marked inconsistent if the two ever differ.  A
    non-monotone profile is reported, never raised; it is exploratory output.
    """
    bps = scan_breakpoints(d)
    reps = [Fraction(1)] + bps
    rows = []
    nondecreasing = True
    consistent = True
    previous: Fraction | None = None
    for idx, rep in enumerate(reps):
        a = AspectRatio.plus_delta(rep.numerator, rep.denominator)
        report = cross_validate(d, a, linf_bound=0)
        value = Fraction(report["T"])
        if idx + 1 < len(reps):
            nxt = reps[idx + 1]
            mid = Fraction(rep.numerator + nxt.numerator, rep.denominator + nxt.denominator)
        else:
            mid = rep + 1
        mid_a = AspectRatio.plus_delta(mid.numerator, mid.denominator)
        mid_value = superpotential(d, mid_a, "tree").T
        if mid_value != value:
            consistent = False
        if previous is not None and value < previous:
            nondecreasing = False
        previous = value
        rows.append({
            "interval_start": str(rep),
            "a": str(a),
            "T": str(value),
            "midpoint": str(mid),
            "midpoint_T": str(mid_value),
        })
    infinity_T = superpotential(d, AspectRatio.infinite(), "tree").T
    if previous is not None and infinity_T < previous:
        nondecreasing = False
    if rows and Fraction(rows[-1]["T"]) != infinity_T:
        consistent = False  # the last interval extends to the infinite ratio
    return {
        "d": d,
        "profile": rows,
        "infinity_T": str(infinity_T),
        "nondecreasing": nondecreasing,
        "consistent": consistent,
    }


def integrality_scan(d: int) -> dict:
    """T(d, p/q + delta) for every reduced p/q > 1 with p + q = 3d.

    Reports, per fraction, the exact value, whether it is a nonnegative
    integer, whether it vanishes, and whether the pair clears the adjunction
    bound (p-1)(q-1) <= (d-1)(d-2).  The bound column is informational: the
    scan asserts nothing about where the count may vanish.
    """
    if d < 1:
        raise ValueError(f"integrality_scan requires d >= 1, got {d}")
    rows = []
    for q in range(1, 3 * d):
        p = 3 * d - q
        if p <= q or math.gcd(p, q) != 1:
            continue
        a = AspectRatio.plus_delta(p, q)
        res = superpotential(d, a, "tree")
        rows.append({
            "p": p,
            "q": q,
            "a": str(a),
            "T": str(res.T),
            "integer": res.T.denominator == 1,
            "nonnegative": res.T >= 0,
            "vanishes": res.T == 0,
            "adjunction_bound": (p - 1) * (q - 1) <= (d - 1) * (d - 2),
        })
    return {
        "d": d,
        "rows": rows,
        "all_integral": all(r["integer"] for r in rows),
        "all_nonnegative": all(r["nonnegative"] for r in rows),
    }
