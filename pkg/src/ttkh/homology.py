"""Graded chain complexes with degree +2 differentials, over pluggable fields.

Both complexes built here (the spanning-tree complex and the twisted cube
collapsed to its delta grading) have differentials that raise the grading
by exactly 2, so homology splits by grading and each graded piece needs
two ranks.  The field is abstract: exact rational-function arithmetic for
the symbolic tier, GF(2^k) ints for the evaluated tier.

Gaussian elimination works on column dictionaries with a cheap Markowitz
style pivot choice (sparsest column, then sparsest row within it), which
keeps fill-in tolerable on the block sizes that occur here.

`cancel` removes an isomorphism component of the differential and perturbs
the rest, preserving homology; it is the elementary move by which the big
deformed cube retracts onto the tree complex, and is exposed for tests.
"""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable

from .gf2algebra import GF2k, MultiPoly, RationalFn

__all__ = [
    "ExactField",
    "EvalField",
    "GradedComplex",
    "matrix_rank",
    "verify_d_squared",
    "cancel",
]

Gen = Hashable


class ExactField:
    """Field of rational functions over GF(2) in a fixed variable set."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.zero = RationalFn.zero(nvars)
        self.one = RationalFn.one(nvars)

    def add(self, a: RationalFn, b: RationalFn) -> RationalFn:
        return a + b

    sub = add  # characteristic 2

    def mul(self, a: RationalFn, b: RationalFn) -> RationalFn:
        return a * b

    def inv(self, a: RationalFn) -> RationalFn:
        return a.inv()

    def is_zero(self, a: RationalFn) -> bool:
        return a.is_zero()

    def __repr__(self) -> str:
        return f"Frac(GF(2)[x1..x{self.nvars}])"


class EvalField:
    """GF(2^k) with elements as ints; thin adapter over GF2k tables."""

    def __init__(self, gf: GF2k):
        self.gf = gf
        self.zero = 0
        self.one = 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        return self.gf.mul(a, b)

    def inv(self, a: int) -> int:
        return self.gf.inv(a)

    @staticmethod
    def is_zero(a: int) -> bool:
        return a == 0

    def __repr__(self) -> str:
        return repr(self.gf)


class GradedComplex:
    """Chain complex: generators with int gradings, differential of degree +2.

    `diff` maps a generator to {target: coefficient}; absent keys are zero
    columns.  Coefficients live in `field`.
    """

    def __init__(
        self,
        field: Any,
        gradings: dict[Gen, int],
        diff: dict[Gen, dict[Gen, Any]],
    ):
        self.field = field
        self.gradings = dict(gradings)
        self.diff = {g: dict(col) for g, col in diff.items() if col}
        for g, col in self.diff.items():
            for t, coeff in col.items():
                if t not in self.gradings or g not in self.gradings:
                    raise ValueError("differential entry on unknown generator")
                if self.gradings[t] != self.gradings[g] + 2:
                    raise ValueError(
                        f"entry {g} -> {t} changes grading by "
                        f"{self.gradings[t] - self.gradings[g]}, expected +2"
                    )

    @property
    def generators(self) -> list[Gen]:
        return list(self.gradings)

    def dim(self) -> int:
        return len(self.gradings)

    def dims_by_grading(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g, q in self.gradings.items():
            out[q] = out.get(q, 0) + 1
        return out

    def column(self, g: Gen) -> dict[Gen, Any]:
        return self.diff.get(g, {})

    def d_squared_violations(self, limit: int = 10) -> list[tuple[Gen, Gen, Any]]:
        """Nonzero entries of the composite differential, up to `limit`."""
        field = self.field
        bad: list[tuple[Gen, Gen, Any]] = []
        for g, col in self.diff.items():
            acc: dict[Gen, Any] = {}
            for mid, c1 in col.items():
                for tgt, c2 in self.diff.get(mid, {}).items():
                    prev = acc.get(tgt, field.zero)
                    acc[tgt] = field.add(prev, field.mul(c1, c2))
            for tgt, val in acc.items():
                if not field.is_zero(val):
                    bad.append((g, tgt, val))
                    if len(bad) >= limit:
                        return bad
        return bad

    def rank_by_grading(self) -> dict[int, int]:
        """Rank of the differential leaving each grading."""
        cols_by_grading: dict[int, list[dict[Gen, Any]]] = {}
        for g, col in self.diff.items():
            cols_by_grading.setdefault(self.gradings[g], []).append(col)
        return {
            q: matrix_rank(cols, self.field) for q, cols in cols_by_grading.items()
        }

    def betti(self) -> dict[int, int]:
        """Homology ranks by grading (zero entries omitted)."""
        dims = self.dims_by_grading()
        ranks = self.rank_by_grading()
        out: dict[int, int] = {}
        for q, dim in dims.items():
            b = dim - ranks.get(q, 0) - ranks.get(q - 2, 0)
            if b < 0:
                raise AssertionError("negative betti number; rank overshoot")
            if b:
                out[q] = b
        return out

    def total_rank(self) -> int:
        return sum(self.betti().values())


def matrix_rank(columns: Iterable[dict[Gen, Any]], field: Any) -> int:
    """Rank of a sparse matrix given as a list of {row: coeff} columns."""
    cols: dict[int, dict[Gen, Any]] = {}
    for i, col in enumerate(columns):
        live = {r: v for r, v in col.items() if not field.is_zero(v)}
        if live:
            cols[i] = live
    row_home: dict[Gen, set[int]] = {}
    for i, col in cols.items():
        for r in col:
            row_home.setdefault(r, set()).add(i)

    rank = 0
    while cols:
        # Sparsest column, then its sparsest row: cheap Markowitz choice.
        ci = min(cols, key=lambda i: len(cols[i]))
        col = cols.pop(ci)
        pr = min(col, key=lambda r: len(row_home[r]))
        pv = col[pr]
        rank += 1
        for r in col:
            row_home[r].discard(ci)
        pv_inv = field.inv(pv)
        touched = [j for j in row_home.get(pr, ()) if j in cols]
        for j in touched:
            other = cols[j]
            factor = field.mul(other[pr], pv_inv)
            for r, v in col.items():
                cur = other.get(r, field.zero)
                nv = field.sub(cur, field.mul(factor, v))
                if field.is_zero(nv):
                    if r in other:
                        del other[r]
                        row_home[r].discard(j)
                else:
                    if r not in other:
                        row_home.setdefault(r, set()).add(j)
                    other[r] = nv
            if not other:
                del cols[j]
    return rank


def verify_d_squared(cx: GradedComplex) -> None:
    """Raise AssertionError with a witness if the differential fails d^2=0."""
    bad = cx.d_squared_violations(limit=3)
    if bad:
        g, t, val = bad[0]
        raise AssertionError(
            f"d^2 != 0: component {g} -> {t} is {val} ({len(bad)}+ violations)"
        )


def cancel(cx: GradedComplex, s: Gen, t: Gen) -> GradedComplex:
    """Cancel the invertible component <ds, t> and perturb the rest.

    Removes generators s and t; every other generator x picks up the
    correction d'x = dx - <dx, t> l^-1 ds.  Homology is unchanged.
    """
    field = cx.field
    lam = cx.column(s).get(t)
    if lam is None or field.is_zero(lam):
        raise ValueError("cancellation requires a nonzero component <ds, t>")
    lam_inv = field.inv(lam)
    ds = cx.column(s)

    new_grad = {g: q for g, q in cx.gradings.items() if g not in (s, t)}
    new_diff: dict[Gen, dict[Gen, Any]] = {}
    for g in new_grad:
        col = cx.column(g)
        coeff_t = col.get(t)
        if coeff_t is not None and not field.is_zero(coeff_t):
            factor = field.mul(coeff_t, lam_inv)
            merged = dict(col)
            for r, v in ds.items():
                cur = merged.get(r, field.zero)
                merged[r] = field.sub(cur, field.mul(factor, v))
        else:
            merged = dict(col)
        cleaned = {
            r: v
            for r, v in merged.items()
            if r not in (s, t) and not field.is_zero(v)
        }
        if cleaned:
            new_diff[g] = cleaned
    return GradedComplex(field, new_grad, new_diff)
