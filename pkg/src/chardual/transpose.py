"""Duality between the class sizes and the degrees of a character table.

For a table X with degree diagonal D and N = diag(d_i) where
d_i = sqrt(|C_i|), the transpose array is (D^-1 X N)^T: rows indexed
by the classes of X, columns by its characters, entry
(i, chi) = d_i chi(g_i) / chi(1).  This module decides when that
array is formally a character table again and searches for groups
realizing it.  All arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm

import numpy as np

from .chartab import (
    _INT64_BOUND,
    CharacterTable,
    CharacterTableError,
    character_table,
    conjugation_matrix,
    entry_tensor,
    make_table,
    monomial_exponents,
    monomial_gram,
    power_matrix,
    reduction_tensor,
    verify_table,
)
from .cyclotomic import Cyclotomic, basis_size
from .groups import FiniteGroup, ToolkitError
from .numutil import exact_isqrt

__all__ = [
    "NON_SQUARE_CLASS_SIZE",
    "NON_ALGEBRAIC_INTEGER_ENTRY",
    "NON_INTEGRAL_STRUCTURE_CONSTANT",
    "FORMALLY_TRANSPOSABLE",
    "REALIZED_BY",
    "Verdict",
    "TransposeReport",
    "TableEquivalence",
    "NonSquareClassSizeError",
    "normalized_table",
    "transpose_degrees",
    "transpose_table",
    "check_integrality",
    "check_structure_constants",
    "tables_equivalent",
    "kron_tables",
    "kronecker_factor",
    "check_formally_transposable",
    "check_transposable",
]


NON_SQUARE_CLASS_SIZE = "NonSquareClassSize"
NON_ALGEBRAIC_INTEGER_ENTRY = "NonAlgebraicIntegerEntry"
NON_INTEGRAL_STRUCTURE_CONSTANT = "NonIntegralStructureConstant"
FORMALLY_TRANSPOSABLE = "FormallyTransposable"
REALIZED_BY = "RealizedBy"


class NonSquareClassSizeError(ToolkitError):
    def __init__(self, class_index: int, size: int):
        self.class_index = class_index
        self.size = size
        super().__init__(f"class {class_index} has non-square size {size}")


@dataclass(frozen=True)
class Verdict:
    kind: str
    detail: tuple = ()

    def __str__(self):
        if not self.detail:
            return self.kind
        return f"{self.kind}({', '.join(str(x) for x in self.detail)})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "detail": list(self.detail)}


@dataclass(frozen=True)
class TableEquivalence:
    """Permutation pair witnessing Y[r][c] == X[row_perm[r]][col_perm[c]]."""

    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]

    def to_json(self) -> dict:
        return {"row_perm": list(self.row_perm), "col_perm": list(self.col_perm)}


@dataclass(frozen=True)
class TransposeReport:
    verdict: Verdict
    transpose_degrees: tuple[int, ...] | None = None
    transpose_table: CharacterTable | None = None
    witness: TableEquivalence | None = None

    @property
    def formally_transposable(self) -> bool:
        return self.verdict.kind in (FORMALLY_TRANSPOSABLE, REALIZED_BY)

    @property
    def realized(self) -> bool:
        return self.verdict.kind == REALIZED_BY

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.to_json(),
            "transpose_degrees": (
                None if self.transpose_degrees is None else list(self.transpose_degrees)
            ),
            "transpose_table": (
                None if self.transpose_table is None else self.transpose_table.to_json()
            ),
            "witness": None if self.witness is None else self.witness.to_json(),
        }


# --------------------------------------------------------------- basic maps


def normalized_table(X: CharacterTable) -> tuple[tuple[Cyclotomic, ...], ...]:
    """Rows of X divided by their degrees (the normalized character values)."""
    return tuple(
        tuple(v / X.degrees[r] for v in row) for r, row in enumerate(X.entries)
    )


def transpose_degrees(X: CharacterTable) -> tuple[int, ...]:
    """Square roots of the class sizes, the degree vector of the transpose."""
    out = []
    for nu, size in enumerate(X.class_sizes):
        d = exact_isqrt(size)
        if d is None:
            raise NonSquareClassSizeError(nu, size)
        out.append(d)
    return tuple(out)


def transpose_table(X: CharacterTable) -> CharacterTable:
    """The transpose array as a table: entry (i, chi) = d_i chi(g_i)/chi(1).

    Rows keep the class order of X, columns keep its character order, so
    row 0 is the all-ones row and column 0 carries the new degrees d_i.
    """
    degs = transpose_degrees(X)
    k = X.k
    rows = [
        tuple(X.entries[chi][i] * degs[i] / X.degrees[chi] for chi in range(k))
        for i in range(k)
    ]
    sizes = [d * d for d in X.degrees]
    return make_table(X.order, sizes, rows, conductor=X.conductor, sort_rows=False)


def check_integrality(Xt: CharacterTable) -> tuple[int, int] | None:
    """First (row, column) whose entry is not an algebraic integer, if any."""
    for r, row in enumerate(Xt.entries):
        for c, v in enumerate(row):
            if not v.is_algebraic_integer:
                return (r, c)
    return None


# ----------------------------------------------- structure constant sweeps
#
# _all_b(X): values b_{ij nu} = (1/|G|) sum_c |C_c| X[i,c] X[j,c] conj(X[nu,c])
# _all_a(X): values a_{ij nu} = (w_i w_j/|G|) sum_r X[r,i] X[r,j] conj(X[r,nu]) / d_r
#
# Each returns (tensor, None) with an exact integer (k,k,k) array when every
# value is a nonnegative integer, else (None, (i,j,nu)) for the first triple
# in lexicographic order that is irrational, non-integral, or negative.


def _scan_hist_rows(
    H: np.ndarray, PV: np.ndarray, scale: int, modulus: int
) -> tuple[np.ndarray, int | None]:
    """Values (scale * reduced)/modulus per histogram row; first bad row."""
    coords = H.astype(np.int64) @ PV
    num = coords[:, 0] * scale
    bad = (num % modulus != 0) | (num < 0)
    if coords.shape[1] > 1:
        bad |= np.any(coords[:, 1:] != 0, axis=1)
    if bad.any():
        return num // modulus, int(np.argwhere(bad)[0][0])
    return num // modulus, None


def _all_b_monomial(X: CharacterTable, P: np.ndarray):
    n, k = X.conductor, X.k
    PV = power_matrix(n)
    w = np.array(X.class_sizes, dtype=np.int64)
    gram = monomial_gram(P, w, n, PV)
    target = np.zeros_like(gram)
    target[np.arange(k), np.arange(k), 0] = X.order
    if not np.array_equal(gram, target):
        return NotImplemented
    row_index = {tuple(P[r].tolist()): r for r in range(k)}
    out = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        Q = (P[i][None, :] + P) % n
        for j in range(k):
            m = row_index.get(tuple(Q[j].tolist()))
            if m is not None:
                # row orthogonality turns the sum into an indicator
                out[i, j, m] = 1
                continue
            D = (Q[j][None, :] - P) % n
            codes = (np.arange(k)[:, None] * n + D).reshape(-1)
            wt = np.tile(w.astype(np.float64), k)
            H = np.bincount(codes, weights=wt, minlength=k * n).reshape(k, n)
            vals, badrow = _scan_hist_rows(H, PV, 1, X.order)
            if badrow is not None:
                return None, (i, j, badrow)
            out[i, j] = vals
    return out, None


def _all_a_monomial(X: CharacterTable, P: np.ndarray):
    # monomial tables have degree 1 rows, so the 1/d_r weights drop out
    n, k = X.conductor, X.k
    PV = power_matrix(n)
    w = [int(s) for s in X.class_sizes]
    Pt = P.T.copy()
    gram = monomial_gram(Pt, [1] * k, n, PV)
    target = np.zeros_like(gram)
    for i in range(k):
        if X.order % w[i]:
            return NotImplemented
        target[i, i, 0] = X.order // w[i]
    if not np.array_equal(gram, target):
        return NotImplemented
    col_index = {tuple(Pt[c].tolist()): c for c in range(k)}
    out = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        Q = (Pt[i][None, :] + Pt) % n
        for j in range(k):
            m = col_index.get(tuple(Q[j].tolist()))
            if m is not None:
                # column orthogonality: a_{ij.} = w_i w_j / w_m at column m
                num = w[i] * w[j]
                if num % w[m]:
                    return None, (i, j, m)
                out[i, j, m] = num // w[m]
                continue
            D = (Q[j][None, :] - Pt) % n
            codes = (np.arange(k)[:, None] * n + D).reshape(-1)
            H = np.bincount(codes, minlength=k * n).reshape(k, n)
            vals, badrow = _scan_hist_rows(H, PV, w[i] * w[j], X.order)
            if badrow is not None:
                return None, (i, j, badrow)
            out[i, j] = vals
    return out, None


def _tensor_pack(X: CharacterTable):
    packed = entry_tensor(X)
    if packed is None:
        return None
    E, L = packed
    R = reduction_tensor(X.conductor)
    C = conjugation_matrix(X.conductor)
    Ec = np.einsum("rce,eb->rcb", E, C)
    return E, Ec, L, R


def _slab_scan(E, Efold, R, weights_mode):
    """Per-slab triple products: S_i[j,v,b] for the slab at index i.

    weights_mode "cols": slab i over rows, contraction over columns c with
    the weight array folded into Efold.  weights_mode "rows": slab i over
    columns, contraction over rows r with weights folded into the P stage.
    """
    k = E.shape[0]
    phi = E.shape[2]
    for i in range(k):
        if weights_mode == "cols":
            Pst = np.einsum("ce,jcf,efm->jcm", E[i], E, R)
            A = np.einsum("jcm,mgb->jcgb", Pst, R)
            S = np.einsum("jcgb,vcg->jvb", A, Efold)
        else:
            Pst = np.einsum("re,rjf,efm,r->rjm", E[:, i, :], E, R, Efold[1])
            A = np.einsum("rjm,mgb->rjgb", Pst, R)
            S = np.einsum("rjgb,rvg->jvb", A, Efold[0])
        yield i, S.reshape(k, k, phi)


def _first_bad(slab0, rest_bad, modulus, scale_rows=None):
    num = slab0 if scale_rows is None else slab0 * scale_rows
    bad = (num % modulus != 0) | (num < 0) | rest_bad
    if bad.any():
        j, v = np.argwhere(bad)[0]
        return None, (int(j), int(v))
    return num // modulus, None


def _all_b_numpy(X: CharacterTable, pack):
    E, Ec, L, R = pack
    k = X.k
    w = np.array(X.class_sizes, dtype=np.int64)
    Ecw = Ec * w[np.newaxis, :, np.newaxis]
    modulus = X.order * L**3
    out = np.empty((k, k, k), dtype=np.int64)
    for i, S in _slab_scan(E, Ecw, R, "cols"):
        rest = np.any(S[:, :, 1:] != 0, axis=2)
        vals, bad = _first_bad(S[:, :, 0], rest, modulus)
        if bad is not None:
            return None, (i, bad[0], bad[1])
        out[i] = vals
    return out, None


def _all_a_numpy(X: CharacterTable, pack):
    E, Ec, L, R = pack
    k = X.k
    D = lcm(*X.degrees)
    u = np.array([D // d for d in X.degrees], dtype=np.int64)
    w = np.array(X.class_sizes, dtype=np.int64)
    modulus = X.order * D * L**3
    out = np.empty((k, k, k), dtype=np.int64)
    for i, S in _slab_scan(E, (Ec, u), R, "rows"):
        rest = np.any(S[:, :, 1:] != 0, axis=2)
        vals, bad = _first_bad(S[:, :, 0], rest, modulus, (w[i] * w)[:, None])
        if bad is not None:
            return None, (i, bad[0], bad[1])
        out[i] = vals
    return out, None


def _scan_bound(X: CharacterTable, pack, mode: str) -> int:
    E, Ec, L, R = pack
    phi = basis_size(X.conductor)
    k = X.k
    maxA = int(np.abs(E).max(initial=1))
    maxR = int(np.abs(R).max(initial=1))
    maxEc = int(np.abs(Ec).max(initial=1))
    maxw = max(X.class_sizes)
    if mode == "b":
        p1 = phi * phi * maxA * maxA * maxR
        return p1 * phi * maxR * k * phi * (maxEc * maxw)
    D = lcm(*X.degrees)
    p1 = phi * phi * maxA * maxA * maxR * D
    return p1 * phi * maxR * k * phi * maxEc * maxw * maxw


def _nonneg_int(v: Cyclotomic) -> int | None:
    if not v.is_rational:
        return None
    q = v.rational_value()
    if q.denominator != 1 or q < 0:
        return None
    return int(q)


def _all_b_pure(X: CharacterTable):
    k = X.k
    conj = [[v.conjugate() for v in row] for row in X.entries]
    out = np.zeros((k, k, k), dtype=object)
    for i in range(k):
        for j in range(k):
            row = [X.entries[i][c] * X.entries[j][c] * X.class_sizes[c] for c in range(k)]
            for v in range(k):
                acc = Cyclotomic.zero(X.conductor)
                for c in range(k):
                    acc = acc + row[c] * conj[v][c]
                val = _nonneg_int(acc / X.order)
                if val is None:
                    return None, (i, j, v)
                out[i, j, v] = val
    return out, None


def _all_a_pure(X: CharacterTable):
    k = X.k
    conj = [[v.conjugate() for v in row] for row in X.entries]
    out = np.zeros((k, k, k), dtype=object)
    for i in range(k):
        for j in range(k):
            row = [
                X.entries[r][i] * X.entries[r][j] * X.class_sizes[i] * X.class_sizes[j]
                for r in range(k)
            ]
            for v in range(k):
                acc = Cyclotomic.zero(X.conductor)
                for r in range(k):
                    acc = acc + row[r] * conj[r][v] / X.degrees[r]
                val = _nonneg_int(acc / X.order)
                if val is None:
                    return None, (i, j, v)
                out[i, j, v] = val
    return out, None


def _all_b(X: CharacterTable, force_pure: bool = False):
    if not force_pure:
        P = monomial_exponents(X)
        if P is not None:
            res = _all_b_monomial(X, P)
            if res is not NotImplemented:
                return res
        pack = _tensor_pack(X)
        if pack is not None and _scan_bound(X, pack, "b") < _INT64_BOUND:
            return _all_b_numpy(X, pack)
    return _all_b_pure(X)


def _all_a(X: CharacterTable, force_pure: bool = False):
    if not force_pure:
        P = monomial_exponents(X)
        if P is not None:
            res = _all_a_monomial(X, P)
            if res is not NotImplemented:
                return res
        pack = _tensor_pack(X)
        if pack is not None and _scan_bound(X, pack, "a") < _INT64_BOUND:
            return _all_a_numpy(X, pack)
    return _all_a_pure(X)


def check_structure_constants(
    X: CharacterTable, Xt: CharacterTable, force_pure: bool = False
) -> tuple[int, int, int, str] | None:
    """First triple breaking integrality of the transpose structure constants.

    Checks, in order: the b constants of Xt are nonnegative integers, the a
    constants of Xt are nonnegative integers, and the duality identity
    b~_{ij nu} d_i d_j = d_nu a_{ij nu} holds against the a constants of X.
    Returns (i, j, nu, "a"|"b") for the first failure, None when clean.
    """
    bt, bad = _all_b(Xt, force_pure)
    if bad is not None:
        return (bad[0], bad[1], bad[2], "b")
    at, bad = _all_a(Xt, force_pure)
    if bad is not None:
        return (bad[0], bad[1], bad[2], "a")
    ax, bad = _all_a(X, force_pure)
    if bad is not None:
        raise CharacterTableError(
            f"left table has defective structure constants at {bad}"
        )
    d = transpose_degrees(X)
    dm = max(d)
    bmax = int(bt.max(initial=0)) if bt.size else 0
    amax = int(ax.max(initial=0)) if ax.size else 0
    if bmax * dm * dm >= _INT64_BOUND or amax * dm >= _INT64_BOUND:
        bt = bt.astype(object)
        ax = ax.astype(object)
    dv = np.array(d, dtype=bt.dtype)
    lhs = bt * dv[:, None, None] * dv[None, :, None]
    rhs = ax * dv[None, None, :]
    if not np.array_equal(lhs, rhs):
        i, j, v = np.argwhere(lhs != rhs)[0]
        raise CharacterTableError(
            f"transpose duality identity violated at triple ({i}, {j}, {v})"
        )
    return None


# --------------------------------------------------------- table equivalence


class _EquivalenceSearch:
    """Color refinement with individualization over two entry-id matrices."""

    def __init__(self, MX, MY, xrow_init, yrow_init, xcol_init, ycol_init):
        self.MX = MX
        self.MY = MY
        self.k = MX.shape[0]
        self.nid = int(max(MX.max(), MY.max())) + 1
        self.init = (xrow_init, yrow_init, xcol_init, ycol_init)
        self.nodes = 0

    def run(self) -> TableEquivalence | None:
        return self._search(*self.init)

    def _refine(self, rx, ry, cx, cy):
        k, nid = self.k, self.nid
        while True:
            before = int(rx.max()) + int(cx.max())
            code_x = cx[None, :] * nid + self.MX
            code_y = cy[None, :] * nid + self.MY
            sx = np.sort(code_x, axis=1)
            sy = np.sort(code_y, axis=1)
            stack = np.vstack([
                np.column_stack([rx, sx]),
                np.column_stack([ry, sy]),
            ])
            _, inv = np.unique(stack, axis=0, return_inverse=True)
            rx, ry = inv[:k].copy(), inv[k:].copy()
            if np.any(
                np.bincount(rx, minlength=2 * k) != np.bincount(ry, minlength=2 * k)
            ):
                return None
            code_x = rx[:, None] * nid + self.MX
            code_y = ry[:, None] * nid + self.MY
            sx = np.sort(code_x, axis=0).T
            sy = np.sort(code_y, axis=0).T
            stack = np.vstack([
                np.column_stack([cx, sx]),
                np.column_stack([cy, sy]),
            ])
            _, inv = np.unique(stack, axis=0, return_inverse=True)
            cx, cy = inv[:k].copy(), inv[k:].copy()
            if np.any(
                np.bincount(cx, minlength=2 * k) != np.bincount(cy, minlength=2 * k)
            ):
                return None
            if int(rx.max()) + int(cx.max()) == before:
                return rx, ry, cx, cy

    def _search(self, rx, ry, cx, cy):
        self.nodes += 1
        if self.nodes > 200000:
            raise ToolkitError("table equivalence search exceeded its budget")
        state = self._refine(rx, ry, cx, cy)
        if state is None:
            return None
        rx, ry, cx, cy = state
        rcounts = np.bincount(rx)
        ccounts = np.bincount(cx)
        if rcounts.max() == 1 and ccounts.max() == 1:
            xrow_of = {int(c): r for r, c in enumerate(rx)}
            xcol_of = {int(c): r for r, c in enumerate(cx)}
            row_perm = tuple(xrow_of[int(c)] for c in ry)
            col_perm = tuple(xcol_of[int(c)] for c in cy)
            sub = self.MX[np.ix_(row_perm, col_perm)]
            if np.array_equal(sub, self.MY):
                return TableEquivalence(row_perm, col_perm)
            return None
        ambiguous_rows = np.nonzero(rcounts > 1)[0]
        fresh = int(max(rx.max(), cx.max(), ry.max(), cy.max())) + 1
        if ambiguous_rows.size:
            color = int(ambiguous_rows[0])
            y_pick = int(np.nonzero(ry == color)[0][0])
            for x_pick in np.nonzero(rx == color)[0]:
                rx2, ry2 = rx.copy(), ry.copy()
                rx2[int(x_pick)] = fresh
                ry2[y_pick] = fresh
                found = self._search(rx2, ry2, cx.copy(), cy.copy())
                if found is not None:
                    return found
            return None
        color = int(np.nonzero(ccounts > 1)[0][0])
        y_pick = int(np.nonzero(cy == color)[0][0])
        for x_pick in np.nonzero(cx == color)[0]:
            cx2, cy2 = cx.copy(), cy.copy()
            cx2[int(x_pick)] = fresh
            cy2[y_pick] = fresh
            found = self._search(rx.copy(), ry.copy(), cx2, cy2)
            if found is not None:
                return found
        return None


def tables_equivalent(X: CharacterTable, Y: CharacterTable) -> TableEquivalence | None:
    """A row/column permutation pair carrying X onto Y, or None.

    On success Y[r][c] == X[row_perm[r]][col_perm[c]] for all r, c, with
    degrees and class sizes transported the same way.  Power maps play no
    role.  The search is deterministic.
    """
    if X.k != Y.k or X.order != Y.order:
        return None
    if sorted(X.degrees) != sorted(Y.degrees):
        return None
    if sorted(X.class_sizes) != sorted(Y.class_sizes):
        return None
    n = lcm(X.conductor, Y.conductor)
    ids: dict = {}

    def idmat(T):
        M = np.empty((T.k, T.k), dtype=np.int64)
        for r, row in enumerate(T.entries):
            for c, v in enumerate(row):
                M[r, c] = ids.setdefault(v.lift(n).key(), len(ids))
        return M

    MX, MY = idmat(X), idmat(Y)
    if (
        X.degrees == Y.degrees
        and X.class_sizes == Y.class_sizes
        and np.array_equal(MX, MY)
    ):
        ident = tuple(range(X.k))
        return TableEquivalence(ident, ident)
    if sorted(MX.ravel().tolist()) != sorted(MY.ravel().tolist()):
        return None
    shared: dict = {}
    xr = np.array([shared.setdefault(("r", d), len(shared)) for d in X.degrees])
    yr = np.array([shared.setdefault(("r", d), len(shared)) for d in Y.degrees])
    xc = np.array([shared.setdefault(("c", s), len(shared)) for s in X.class_sizes])
    yc = np.array([shared.setdefault(("c", s), len(shared)) for s in Y.class_sizes])
    return _EquivalenceSearch(MX, MY, xr, yr, xc, yc).run()


# --------------------------------------------------------------- realization


def check_formally_transposable(
    X: CharacterTable, force_pure: bool = False
) -> TransposeReport:
    """Run the table-side pipeline: square sizes, integrality, structure
    constants.  Cheapest checks go first and each failure has its own
    verdict."""
    try:
        degs = transpose_degrees(X)
    except NonSquareClassSizeError as err:
        return TransposeReport(Verdict(NON_SQUARE_CLASS_SIZE, (err.class_index,)))
    Xt = transpose_table(X)
    spot = check_integrality(Xt)
    if spot is not None:
        return TransposeReport(
            Verdict(NON_ALGEBRAIC_INTEGER_ENTRY, spot), degs, Xt
        )
    triple = check_structure_constants(X, Xt, force_pure=force_pure)
    if triple is not None:
        return TransposeReport(
            Verdict(NON_INTEGRAL_STRUCTURE_CONSTANT, triple), degs, Xt
        )
    rep = verify_table(Xt, force_pure=force_pure)
    if not rep.ok:
        raise CharacterTableError(
            f"transpose table failed verification: {rep.failure}"
        )
    return TransposeReport(Verdict(FORMALLY_TRANSPOSABLE), degs, Xt)


def check_transposable(
    G: FiniteGroup,
    candidates=None,
    force_pure: bool = False,
) -> TransposeReport:
    """Decide transposability of G's table and search for a realizing group.

    candidates is an iterable of (descriptor, group or table) pairs; None
    selects the built-in catalog filtered by order.  G itself is always
    tried first and reported as RealizedBy(self).
    """
    X = character_table(G)
    base = check_formally_transposable(X, force_pure=force_pure)
    if base.verdict.kind != FORMALLY_TRANSPOSABLE:
        return base
    Xt = base.transpose_table
    eq = tables_equivalent(X, Xt)
    if eq is not None:
        return TransposeReport(
            Verdict(REALIZED_BY, ("self",)), base.transpose_degrees, Xt, eq
        )
    if candidates is None:
        from .catalog import candidates_of_order

        candidates = candidates_of_order(X.order)
    for desc, cand in candidates:
        XC = cand if isinstance(cand, CharacterTable) else character_table(cand)
        if XC.order != Xt.order:
            continue
        eq = tables_equivalent(XC, Xt)
        if eq is not None:
            return TransposeReport(
                Verdict(REALIZED_BY, (desc,)), base.transpose_degrees, Xt, eq
            )
    return base


# ------------------------------------------------------ kronecker structure


def kron_tables(X1: CharacterTable, X2: CharacterTable) -> CharacterTable:
    """Kronecker product table: characters and classes are ordered pairs,
    the first factor varying slowest."""
    n = lcm(X1.conductor, X2.conductor)
    sizes = [s1 * s2 for s1 in X1.class_sizes for s2 in X2.class_sizes]
    rows = []
    for r1 in range(X1.k):
        for r2 in range(X2.k):
            rows.append(
                tuple(
                    X1.entries[r1][c1].lift(n) * X2.entries[r2][c2].lift(n)
                    for c1 in range(X1.k)
                    for c2 in range(X2.k)
                )
            )
    return make_table(
        X1.order * X2.order, sizes, rows, conductor=n, sort_rows=False
    )


def kronecker_factor(X: CharacterTable):
    """Split X as a Kronecker product of two smaller tables, if possible.

    Scans complementary pairs in the kernel-intersection lattice: N, H with
    trivial meet and |N| |H| = |G|.  Returns (X1, X2, witness) with X1 the
    smaller factor and witness = tables_equivalent(kron_tables(X1, X2), X),
    or None when X is Kronecker-indecomposable.
    """
    from .structure import normal_subgroups, quotient_table

    lattice = normal_subgroups(X)
    nodes = [N for N in lattice.nodes if 1 < N.order < X.order]
    for big, small in itertools.product(nodes, repeat=2):
        if big.order < small.order:
            continue
        if big.order * small.order != X.order:
            continue
        if big.classes & small.classes != frozenset({0}):
            continue
        X1 = quotient_table(X, big.classes)
        X2 = quotient_table(X, small.classes)
        K = kron_tables(X1, X2)
        eq = tables_equivalent(K, X)
        if eq is not None:
            return X1, X2, eq
    return None
