"""Exact character tables and class-algebra structure constants.

character_table computes the table of any enumerable group by the class
algebra eigenvector method: build class-multiplication matrices, split
their common eigenspaces over a prime field F_l with l = 1 mod exp(G),
read off degrees and character residues, and lift to exact cyclotomic
values by discrete Fourier sums over the power map of each class.  The
lifted table must pass the full exact verification before it is returned;
any inconsistency retries with a larger prime.

All entries of a table share one conductor, so bulk checks (orthogonality,
structure constants) can run on integer coefficient tensors with numpy;
the tensors carry explicit overflow bounds and fall back to pure
cyclotomic arithmetic when a bound is too tight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

import numpy as np

from .cyclotomic import Cyclotomic, basis_size, power_vector, reduction_rows
from .groups import AbelianTupleGroup, ClassData, FiniteGroup, ToolkitError, conjugacy_classes
from .numutil import next_prime_in_class, primitive_root, sqrt_mod

__all__ = [
    "CharacterTable",
    "CharacterTableError",
    "character_table",
    "a_from_group",
    "a_from_table",
    "b_constants",
    "verify_table",
    "VerifyReport",
]

MAX_PRIME_ATTEMPTS = 5
_INT64_BOUND = 2 ** 62


class CharacterTableError(ToolkitError):
    pass


# ----------------------------------------------------------------- the table


@dataclass(frozen=True)
class CharacterTable:
    """Square table of exact character values.

    Rows are irreducible characters, columns are conjugacy classes; column
    0 is the identity class and row 0 the trivial character.  Every entry
    is a Cyclotomic at the table's conductor.
    """

    order: int
    conductor: int
    degrees: tuple[int, ...]
    class_sizes: tuple[int, ...]
    entries: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def k(self) -> int:
        return len(self.class_sizes)

    def entry(self, r: int, c: int) -> Cyclotomic:
        return self.entries[r][c]

    def row(self, r: int) -> tuple[Cyclotomic, ...]:
        return self.entries[r]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "conductor": self.conductor,
            "degrees": list(self.degrees),
            "class_sizes": list(self.class_sizes),
            "entries": [[v.to_json() for v in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CharacterTable":
        rows = [[Cyclotomic.from_json(v) for v in row] for row in obj["entries"]]
        return make_table(
            int(obj["order"]),
            [int(s) for s in obj["class_sizes"]],
            rows,
            conductor=int(obj["conductor"]),
            sort_rows=False,
        )

    def __repr__(self):
        return f"CharacterTable(order={self.order}, k={self.k}, conductor={self.conductor})"


def make_table(order, class_sizes, rows, conductor=None, sort_rows=True) -> CharacterTable:
    """Normalize rows to a single conductor and package them.

    sort_rows applies the canonical order: the all-ones row first, then
    ascending (degree, entry coefficient tuple).
    """
    k = len(class_sizes)
    if len(rows) != k or any(len(r) != k for r in rows):
        raise ValueError("table must be square over the class count")
    if conductor is None:
        conductor = 1
        for row in rows:
            for v in row:
                conductor = lcm(conductor, v.n)
    lifted = [tuple(v.lift(conductor) for v in row) for row in rows]
    degs = []
    for row in lifted:
        d = row[0]
        if not d.is_rational or d.rational_value().denominator != 1 or d.rational_value() <= 0:
            raise ValueError("column 0 must hold positive integer degrees")
        degs.append(int(d.rational_value()))
    if sort_rows:
        one = Cyclotomic.one(conductor)
        trivial = [r for r, row in enumerate(lifted) if all(v == one for v in row)]
        if len(trivial) != 1:
            raise ValueError("table must contain exactly one all-ones row")
        t = trivial[0]
        rest = sorted(
            (r for r in range(k) if r != t),
            key=lambda r: (degs[r], tuple(v.key() for v in lifted[r])),
        )
        perm = [t] + rest
        lifted = [lifted[r] for r in perm]
        degs = [degs[r] for r in perm]
    return CharacterTable(
        order=int(order),
        conductor=int(conductor),
        degrees=tuple(degs),
        class_sizes=tuple(int(s) for s in class_sizes),
        entries=tuple(lifted),
    )


# ----------------------------------------------------------- integer tensors


@lru_cache(maxsize=None)
def reduction_tensor(n: int) -> np.ndarray:
    """R[e, f, b]: basis vector of x^e * x^f, shape (phi, phi, phi)."""
    rows = reduction_rows(n)
    phi = basis_size(n)
    out = np.zeros((phi, phi, phi), dtype=np.int64)
    for e in range(phi):
        for f in range(phi):
            out[e, f, :] = rows[e + f]
    return out


@lru_cache(maxsize=None)
def conjugation_matrix(n: int) -> np.ndarray:
    """C[e, b]: basis vector of conj(x^e) = x^(n-e), shape (phi, phi)."""
    phi = basis_size(n)
    out = np.zeros((phi, phi), dtype=np.int64)
    for e in range(phi):
        out[e, :] = power_vector(n, -e)
    return out


def entry_tensor(X: CharacterTable):
    """(E, L): int64 numerators over the common denominator L, or None.

    E has shape (k, k, phi).  None when some numerator exceeds the int64
    range, in which case callers use the pure cyclotomic path.
    """
    phi = basis_size(X.conductor)
    L = 1
    for row in X.entries:
        for v in row:
            L = lcm(L, v.den)
    k = X.k
    E = np.zeros((k, k, phi), dtype=np.int64)
    for r in range(k):
        for c in range(k):
            v = X.entries[r][c]
            scale = L // v.den
            for e, num in enumerate(v.num):
                val = num * scale
                if abs(val) >= _INT64_BOUND:
                    return None
                E[r, c, e] = val
    return E, L


def _tensor_bound(X: CharacterTable, E: np.ndarray) -> int:
    phi = basis_size(X.conductor)
    maxA = int(np.abs(E).max(initial=1))
    maxW = max(X.class_sizes)
    maxR = int(np.abs(reduction_tensor(X.conductor)).max(initial=1))
    maxC = int(np.abs(conjugation_matrix(X.conductor)).max(initial=1))
    return X.k * maxW * (maxA * maxA * max(maxC, 1) * phi) * maxR * phi * phi


def power_matrix(n: int) -> np.ndarray:
    """Rows m = 0..n-1: basis coordinates of zeta_n^m."""
    return np.array([power_vector(n, m) for m in range(n)], dtype=np.int64)


def monomial_exponents(X: CharacterTable) -> np.ndarray | None:
    """Exponent matrix P with X[r][c] = zeta_n^P[r,c], or None if some entry
    is not a plain root of unity.  Such tables have all degrees equal 1."""
    n = X.conductor
    lookup = {tuple(power_vector(n, m)): m for m in range(n)}
    P = np.empty((X.k, X.k), dtype=np.int64)
    for r, row in enumerate(X.entries):
        for c, v in enumerate(row):
            if v.den != 1:
                return None
            e = lookup.get(tuple(v.num))
            if e is None:
                return None
            P[r, c] = e
    return P


def monomial_gram(P: np.ndarray, weights, n: int, PV: np.ndarray) -> np.ndarray:
    """Exact basis coordinates of G[r,s] = sum_c w_c zeta^(P[r,c]-P[s,c]).

    Exponent histograms are accumulated with bincount; the weighted counts
    stay below 2^53 so the float64 accumulator is exact.
    """
    k = P.shape[0]
    diff = (P[:, None, :] - P[None, :, :]) % n
    codes = (np.arange(k * k)[:, None] * n + diff.reshape(k * k, k)).reshape(-1)
    wt = np.tile(np.asarray(weights, dtype=np.float64), k * k)
    H = np.bincount(codes, weights=wt, minlength=k * k * n).reshape(k * k, n)
    return (H.astype(np.int64) @ PV).reshape(k, k, PV.shape[1])


# ------------------------------------------------------------- verification


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    failure: str | None = None


def _fail(msg: str) -> VerifyReport:
    return VerifyReport(False, msg)


def verify_table(X: CharacterTable, force_pure: bool = False) -> VerifyReport:
    """Exact check of every table invariant; reports the first violation."""
    k = X.k
    if k == 0 or len(X.entries) != k or any(len(r) != k for r in X.entries):
        return _fail("table is not square")
    if any(s <= 0 for s in X.class_sizes):
        return _fail("class sizes must be positive")
    one = Cyclotomic.one(X.conductor)
    for c in range(k):
        if X.entries[0][c] != one:
            return _fail(f"row 0 is not trivial at class {c}")
    for r in range(k):
        if X.entries[r][0] != X.degrees[r]:
            return _fail(f"column 0 disagrees with degree at row {r}")
        if X.degrees[r] <= 0 or X.order % X.degrees[r]:
            return _fail(f"degree {X.degrees[r]} of row {r} does not divide the order")
    if sum(X.class_sizes) != X.order:
        return _fail("class sizes do not sum to the order")
    if sum(d * d for d in X.degrees) != X.order:
        return _fail("degree squares do not sum to the order")

    rowfail, colfail = _orthogonality_failures(X, force_pure)
    if rowfail is not None:
        return _fail(f"row orthogonality fails at rows {rowfail}")
    if colfail is not None:
        return _fail(f"column orthogonality fails at classes {colfail}")
    return VerifyReport(True)


def _orthogonality_failures(X: CharacterTable, force_pure: bool):
    if not force_pure:
        P = monomial_exponents(X)
        if P is not None:
            return _orthogonality_monomial(X, P)
        packed = entry_tensor(X)
        if packed is not None and _tensor_bound(X, packed[0]) < _INT64_BOUND:
            return _orthogonality_numpy(X, *packed)
    return _orthogonality_pure(X)


def _orthogonality_monomial(X: CharacterTable, P: np.ndarray):
    k = X.k
    PV = power_matrix(X.conductor)
    idx = np.arange(k)
    G = monomial_gram(P, X.class_sizes, X.conductor, PV)
    target = np.zeros_like(G)
    target[idx, idx, 0] = X.order
    if not np.array_equal(G, target):
        bad = np.argwhere(np.any(G != target, axis=2))[0]
        return (int(bad[0]), int(bad[1])), None
    CG = monomial_gram(P.T.copy(), [1] * k, X.conductor, PV)
    w = np.array(X.class_sizes, dtype=np.int64)
    CG[:, :, 0] *= w[:, None]
    target = np.zeros_like(CG)
    target[idx, idx, 0] = X.order
    if not np.array_equal(CG, target):
        bad = np.argwhere(np.any(CG != target, axis=2))[0]
        return None, (int(bad[0]), int(bad[1]))
    return None, None


def _orthogonality_numpy(X: CharacterTable, E: np.ndarray, L: int):
    k = X.k
    R = reduction_tensor(X.conductor)
    C = conjugation_matrix(X.conductor)
    Ec = np.einsum("rce,eb->rcb", E, C)
    w = np.array(X.class_sizes, dtype=np.int64)
    # row orthogonality: sum_i w_i X[r,i] conj(X[s,i]) = |G| L^2 delta_rs
    T = np.einsum("rie,sif,i->rsef", E, Ec, w)
    S = np.einsum("rsef,efb->rsb", T, R)
    target = np.zeros_like(S)
    idx = np.arange(k)
    target[idx, idx, 0] = X.order * L * L
    if not np.array_equal(S, target):
        bad = np.argwhere(np.any(S != target, axis=2))[0]
        return (int(bad[0]), int(bad[1])), None
    # column orthogonality, scaled by |C_i| to stay in integers:
    # sum_r |C_i| X[r,i] conj(X[r,j]) = delta_ij |G| L^2
    T2 = np.einsum("rie,rjf,i->ijef", E, Ec, w)
    S2 = np.einsum("ijef,efb->ijb", T2, R)
    target2 = np.zeros_like(S2)
    target2[idx, idx, 0] = X.order * L * L
    if not np.array_equal(S2, target2):
        bad = np.argwhere(np.any(S2 != target2, axis=2))[0]
        return None, (int(bad[0]), int(bad[1]))
    return None, None


def _orthogonality_pure(X: CharacterTable):
    k = X.k
    conj_rows = [[v.conjugate() for v in row] for row in X.entries]
    for r in range(k):
        for s in range(r, k):
            acc = Cyclotomic.zero(X.conductor)
            for i in range(k):
                acc = acc + X.entries[r][i] * conj_rows[s][i] * X.class_sizes[i]
            if acc != (X.order if r == s else 0):
                return (r, s), None
    for i in range(k):
        for j in range(i, k):
            acc = Cyclotomic.zero(X.conductor)
            for r in range(k):
                acc = acc + X.entries[r][i] * conj_rows[r][j]
            if acc * X.class_sizes[i] != (X.order if i == j else 0):
                return None, (i, j)
    return None, None


# ----------------------------------------------------- structure constants


def a_from_group(G: FiniteGroup, cd: ClassData, i: int, j: int) -> list[int]:
    """a_{ij.}: counts of pairs (x, y) in C_i x C_j with xy = class rep."""
    els = G.elements
    out = [0] * cd.k
    jset = set(cd.members[j])
    index = G.index
    for xi in cd.members[i]:
        xinv = G.inv(els[xi])
        for nu, rep in enumerate(cd.reps):
            if index[G.mul(xinv, rep)] in jset:
                out[nu] += 1
    return out


def _as_integer(v: Cyclotomic, what: str) -> int:
    if not v.is_rational:
        raise ValueError(f"{what} is not rational")
    q = v.rational_value()
    if q.denominator != 1:
        raise ValueError(f"{what} is not an integer")
    return int(q)


def a_from_table(X: CharacterTable, i: int, j: int) -> list[int]:
    """a_{ij.} from the table: (|C_i||C_j|/|G|) sum over characters."""
    k = X.k
    coef = Fraction(X.class_sizes[i] * X.class_sizes[j], X.order)
    out = []
    for nu in range(k):
        acc = Cyclotomic.zero(X.conductor)
        for r in range(k):
            acc = acc + X.entries[r][i] * X.entries[r][j] * X.entries[r][nu].conjugate() / X.degrees[r]
        out.append(_as_integer(acc * coef, f"a[{i},{j},{nu}]"))
    return out


def b_constants(X: CharacterTable, i: int, j: int) -> list[int]:
    """b_{ij.}: multiplicities of each character in the product X_i * X_j."""
    k = X.k
    out = []
    for nu in range(k):
        acc = Cyclotomic.zero(X.conductor)
        for c in range(k):
            acc = acc + (
                X.entries[i][c] * X.entries[j][c] * X.entries[nu][c].conjugate()
                * X.class_sizes[c]
            )
        val = _as_integer(acc / X.order, f"b[{i},{j},{nu}]")
        if val < 0:
            raise ValueError(f"b[{i},{j},{nu}] is negative")
        out.append(val)
    return out


# ------------------------------------------------------------ modular algebra


def _mod_rref(A: np.ndarray, l: int):
    """Row-reduce A mod l in place; returns (matrix, pivot columns)."""
    A = A % l
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        inv = pow(int(A[r, c]), l - 2, l)
        A[r] = (A[r] * inv) % l
        other = np.nonzero(A[:, c])[0]
        for q in other:
            if q != r:
                A[q] = (A[q] - A[q, c] * A[r]) % l
        pivots.append(c)
        r += 1
    return A[: len(pivots)], pivots


def _mod_kernel(A: np.ndarray, l: int):
    """Kernel basis rows of the square matrix A mod l, with pivot columns."""
    R, pivots = _mod_rref(A.copy(), l)
    n = A.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for prow, pcol in enumerate(pivots):
            basis[t, pcol] = (-int(R[prow, f])) % l
    return basis, free


def _hessenberg_charpoly(A: np.ndarray, l: int) -> list[int]:
    """Characteristic polynomial of A mod l, ascending coefficients, monic."""
    H = A.copy() % l
    n = H.shape[0]
    for j in range(n - 2):
        nz = np.nonzero(H[j + 1:, j])[0]
        if nz.size == 0:
            continue
        p = j + 1 + int(nz[0])
        if p != j + 1:
            H[[j + 1, p]] = H[[p, j + 1]]
            H[:, [j + 1, p]] = H[:, [p, j + 1]]
        inv = pow(int(H[j + 1, j]), l - 2, l)
        for r in range(j + 2, n):
            f = int(H[r, j]) * inv % l
            if f:
                H[r] = (H[r] - f * H[j + 1]) % l
                H[:, j + 1] = (H[:, j + 1] + f * H[:, r]) % l
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        # p_m = (x - H[m-1,m-1]) p_{m-1} - sum_s H[s,m-1] (prod subdiag) p_s
        prev = polys[m - 1]
        cur = np.zeros(m + 1, dtype=np.int64)
        cur[1:] = prev
        cur[:-1] = (cur[:-1] - int(H[m - 1, m - 1]) * prev) % l
        cur %= l
        fac = 1
        for s in range(m - 2, -1, -1):
            fac = fac * int(H[s + 1, s]) % l
            coef = int(H[s, m - 1]) * fac % l
            if coef:
                cur[: s + 1] = (cur[: s + 1] - coef * polys[s]) % l
        polys.append(cur)
    return [int(c) for c in polys[n]]


def _poly_roots_mod(coeffs: list[int], l: int) -> dict[int, int]:
    """Roots in F_l with multiplicities, by full-domain evaluation."""
    xs = np.arange(l, dtype=np.int64)
    acc = np.zeros(l, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % l
    roots = {}
    for root in np.nonzero(acc == 0)[0]:
        root = int(root)
        poly = list(coeffs)
        mult = 0
        while len(poly) > 1:
            # synthetic division by (x - root)
            out = [0] * (len(poly) - 1)
            carry = 0
            for idx in range(len(poly) - 1, 0, -1):
                carry = (poly[idx] + carry * root) % l
                out[idx - 1] = carry
            rem = (poly[0] + carry * root) % l
            if rem:
                break
            mult += 1
            poly = out
        roots[root] = mult
    return roots


# ------------------------------------------------------------ the algorithm


class _RetryPrime(Exception):
    pass


def _class_matrix(G: FiniteGroup, cd: ClassData, i: int) -> np.ndarray:
    """N_i[j, nu] = a_{ij nu}, built by walking the members of class i."""
    k = cd.k
    els = G.elements
    index = G.index
    out = np.zeros((k, k), dtype=np.int64)
    for xi in cd.members[i]:
        xinv = G.inv(els[xi])
        for nu, rep in enumerate(cd.reps):
            j = cd.class_of[index[G.mul(xinv, rep)]]
            out[j, nu] += 1
    return out


def _split_eigenspaces(G, cd, l):
    k = cd.k
    spaces = [(np.eye(k, dtype=np.int64), list(range(k)))]
    order_by_size = sorted(range(1, k), key=lambda i: (cd.sizes[i], i))
    for i in order_by_size:
        if all(B.shape[0] == 1 for B, _ in spaces):
            break
        Ni = _class_matrix(G, cd, i)
        nxt = []
        for B, P in spaces:
            dim = B.shape[0]
            if dim == 1:
                nxt.append((B, P))
                continue
            V = (Ni @ B.T % l) % l
            R = V[P, :] % l
            cp = _hessenberg_charpoly(R, l)
            roots = _poly_roots_mod(cp, l)
            if sum(roots.values()) != dim:
                raise _RetryPrime("characteristic polynomial does not split")
            if len(roots) == 1:
                nxt.append((B, P))
                continue
            for lam in sorted(roots):
                M = (R - lam * np.eye(dim, dtype=np.int64)) % l
                K, free = _mod_kernel(M, l)
                if K.shape[0] == 0:
                    raise _RetryPrime("empty eigenspace")
                newB = (K @ B) % l
                newP = [P[t] for t in free]
                nxt.append((newB, newP))
        spaces = nxt
    if any(B.shape[0] != 1 for B, _ in spaces):
        raise _RetryPrime("eigenspaces failed to split to dimension one")
    return [B[0] % l for B, _ in spaces]


def _lift_character(theta, d, cd, exponent, omega, l):
    """Exact row from residues theta_nu via Fourier sums over power maps."""
    k = cd.k
    row = []
    for nu in range(k):
        o = cd.orders[nu]
        oinv = pow(o, l - 2, l)
        womega = pow(omega, exponent // o, l)
        winv = pow(womega, l - 2, l)
        mults = []
        for t in range(o):
            acc = 0
            wt = pow(winv, t, l)
            cur = 1
            for j in range(o):
                acc = (acc + theta[cd.power_class(nu, j)] * cur) % l
                cur = cur * wt % l
            m = acc * oinv % l
            if m > d:
                raise _RetryPrime(f"multiplicity lift out of range at class {nu}")
            mults.append(m)
        if sum(mults) != d:
            raise _RetryPrime(f"multiplicities do not sum to the degree at class {nu}")
        val = Cyclotomic.zero(exponent)
        for t, m in enumerate(mults):
            if m:
                val = val + Cyclotomic.root_of_unity(exponent, (exponent // o) * t) * m
        row.append(val)
    return row


def _dixon_attempt(G, cd, l, exponent):
    k = cd.k
    n = G.order
    vectors = _split_eigenspaces(G, cd, l)
    if len(vectors) != k:
        raise _RetryPrime("wrong number of eigenvectors")
    omega = pow(primitive_root(l), (l - 1) // exponent, l)
    sizes = cd.sizes
    inv_sizes = [pow(s, l - 2, l) for s in sizes]
    root_n = isqrt(n)
    rows = []
    degrees = []
    for w in vectors:
        if w[0] % l == 0:
            raise _RetryPrime("eigenvector vanishes on the identity class")
        w = (w * pow(int(w[0]), l - 2, l)) % l
        v = [int(w[nu]) * inv_sizes[nu] % l for nu in range(k)]
        denom = 0
        for nu in range(k):
            denom = (denom + sizes[nu] * v[nu] * v[cd.inverse_class[nu]]) % l
        if denom == 0:
            raise _RetryPrime("degree denominator vanished")
        d2 = n * pow(denom, l - 2, l) % l
        r = sqrt_mod(d2, l)
        if r is None:
            raise _RetryPrime("degree square has no root")
        d = min(r, l - r)
        if not 1 <= d <= root_n:
            raise _RetryPrime("degree out of range")
        theta = [d * v[nu] % l for nu in range(k)]
        rows.append(_lift_character(theta, d, cd, exponent, omega, l))
        degrees.append(d)
    return rows


def character_table(G: FiniteGroup) -> CharacterTable:
    cd = conjugacy_classes(G)
    if isinstance(G, AbelianTupleGroup):
        X = _abelian_table(G, cd)
        report = verify_table(X)
        if not report.ok:
            raise CharacterTableError(f"abelian table failed verification: {report.failure}")
        return X
    return _table_from_classes(G, cd)


def _table_from_classes(G: FiniteGroup, cd: ClassData) -> CharacterTable:
    n = G.order
    exponent = 1
    for o in cd.orders:
        exponent = lcm(exponent, o)
    if cd.k == 1:
        return make_table(n, [1], [[Cyclotomic.one(1)]], conductor=1)
    threshold = 2 * (isqrt(n) + 1) * max(cd.sizes)
    l = next_prime_in_class(threshold, exponent, 1)
    last = None
    for _ in range(MAX_PRIME_ATTEMPTS):
        try:
            rows = _dixon_attempt(G, cd, l, exponent)
            X = make_table(n, cd.sizes, rows, conductor=exponent)
            report = verify_table(X)
            if not report.ok:
                raise _RetryPrime(f"lifted table failed verification: {report.failure}")
            return X
        except _RetryPrime as exc:
            last = exc
            l = next_prime_in_class(l, exponent, 1)
    raise CharacterTableError(f"character table did not stabilize: {last}")


def _abelian_table(G: AbelianTupleGroup, cd: ClassData) -> CharacterTable:
    """Direct construction for products of cyclics.

    Classes are singletons in element order; character (a_1, ..., a_t)
    sends x to zeta_e^(sum_i (e/m_i) a_i x_i).
    """
    moduli = G.moduli
    e = 1
    for m in moduli:
        e = lcm(e, m)
    assert cd.k == G.order and all(s == 1 for s in cd.sizes)
    rows = []
    for a in itertools.product(*(range(m) for m in moduli)):
        row = []
        for rep in cd.reps:
            expo = sum((e // m) * ai * xi for m, ai, xi in zip(moduli, a, rep)) % e
            row.append(Cyclotomic.root_of_unity(e, expo))
        rows.append(row)
    return make_table(G.order, cd.sizes, rows, conductor=e)
