"""Prime blocks of a character table through exact modular reduction.

Everything reduces modulo one fixed maximal ideal over p in the
cyclotomic integers: roots of unity of p-power order collapse to 1 and
the remaining primitive root maps to a root of a chosen irreducible
factor of its cyclotomic polynomial over F_p.  Characters are linked
into blocks when their reduced central characters agree on every class,
and the defect of a block comes from the p-valuation of its degrees.

A transposable table leaves no room for small blocks: every block must
have full defect, each principal block value must be congruent to the
class size, and the group itself must be nilpotent.  Those three checks
are the point of this module; the partition machinery serves them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chartab import CharacterTable, CharacterTableError, character_table
from .cyclotomic import Cyclotomic, cyclotomic_polynomial
from .finitefield import (
    FieldElement,
    FieldSpec,
    factor_mod_p,
    field_with_modulus,
    poly_divmod,
    poly_mod,
)
from .groups import FiniteGroup, central_series_group
from .numutil import factorint, is_prime, valuation
from .transpose import TransposeReport, check_formally_transposable, transpose_table


# ------------------------------------------------------------------ the ideal


@dataclass(frozen=True)
class IdealData:
    """A maximal ideal over p in the integers of the conductor-n field.

    The residue map sends the primitive n-th root to root**v, where root
    is the class of x in F_p[x]/(f) and v inverts the p-power part of n
    modulo the p'-part n1; p-power roots of unity collapse to 1.
    """

    p: int
    n: int
    n1: int
    f: tuple[int, ...]
    spec: FieldSpec
    v: int

    @property
    def residue_degree(self) -> int:
        return self.spec.m

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "conductor": self.n,
            "factor": list(self.f),
            "residue_degree": self.residue_degree,
        }


def ideal_data(n: int, p: int, factor=None) -> IdealData:
    """Choose the maximal ideal over p at conductor n, deterministically.

    The p-power part of n collapses under any such ideal, so only the
    cyclotomic polynomial of the p'-part n1 gets factored; the first
    irreducible factor in (degree, coefficient) order is taken unless an
    explicit one is supplied.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("conductor must be positive")
    n1 = n
    pk = 1
    while n1 % p == 0:
        n1 //= p
        pk *= p
    if n1 == 1:
        f = ((p - 1) % p, 1)  # x - 1: residue field F_p, every root maps to 1
    elif factor is None:
        f = factor_mod_p(cyclotomic_polynomial(n1), p)[0][0]
    else:
        f = poly_mod(factor, p)
        _, rem = poly_divmod(poly_mod(cyclotomic_polynomial(n1), p), f, p)
        if rem:
            raise ValueError("factor does not divide the cyclotomic polynomial mod p")
    spec = field_with_modulus(p, f)
    v = pow(pk, -1, n1) if n1 > 1 else 0
    return IdealData(p=p, n=n, n1=n1, f=tuple(f), spec=spec, v=v)


@lru_cache(maxsize=None)
def _root_power(I: IdealData, t: int) -> FieldElement:
    return I.spec.gen() ** t


def reduce(a: Cyclotomic, I: IdealData) -> FieldElement:
    """Image of an algebraic integer in the residue field of the ideal."""
    if I.n % a.n:
        raise ValueError("value conductor does not divide the ideal conductor")
    a = a.lift(I.n)
    if not a.is_algebraic_integer:
        raise ValueError("only algebraic integers reduce modulo the ideal")
    out = I.spec.zero()
    for e, c in enumerate(a.num):
        if c:
            out = out + I.spec.from_int(c) * _root_power(I, (e * I.v) % I.n1)
    return out


# ------------------------------------------------------------------- blocks


@dataclass(frozen=True)
class BlockPartition:
    """p-blocks of a table: linked character index sets with defects.

    blocks[0] is the principal block (the one holding the trivial
    character); the others are ordered by smallest member index.
    """

    p: int
    blocks: tuple[tuple[int, ...], ...]
    defects: tuple[int, ...]

    def block_of(self, r: int) -> int:
        for b, members in enumerate(self.blocks):
            if r in members:
                return b
        raise ValueError(f"character {r} is not in any block")

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "blocks": [list(b) for b in self.blocks],
            "defects": list(self.defects),
        }


def _central_character(X: CharacterTable, I: IdealData, r: int):
    d = X.degrees[r]
    out = []
    for c in range(X.k):
        val = X.entries[r][c] * X.class_sizes[c] / d
        try:
            out.append(reduce(val, I))
        except ValueError as err:
            raise CharacterTableError(
                f"central character value at ({r}, {c}) does not reduce: {err}"
            ) from None
    return tuple(out)


def p_blocks(X: CharacterTable, p: int, ideal: IdealData | None = None) -> BlockPartition:
    """Partition the characters of X into p-blocks.

    Two characters are linked exactly when their central characters
    |C_i| chi(g_i)/chi(1) agree modulo the ideal on every class.
    """
    I = ideal if ideal is not None else ideal_data(X.conductor, p)
    groups: dict = {}
    for r in range(X.k):
        groups.setdefault(_central_character(X, I, r), []).append(r)
    blocks = sorted(groups.values(), key=lambda b: (0 not in b, b[0]))
    a = valuation(X.order, p)
    defects = tuple(a - min(valuation(X.degrees[r], p) for r in b) for b in blocks)
    return BlockPartition(p=p, blocks=tuple(tuple(b) for b in blocks), defects=defects)


# ------------------------------------------------------------------- reports


@dataclass(frozen=True)
class DefectReport:
    """Block defects against the full-defect requirement.

    asserted is False when the table is not formally transposable; the
    defects are then reported observationally and ok stays None.
    """

    ok: bool | None
    p: int
    a: int
    partition: BlockPartition
    asserted: bool
    failure: str | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "p": self.p,
            "full_defect": self.a,
            "partition": self.partition.to_json(),
            "asserted": self.asserted,
            "failure": self.failure,
        }


def full_defect_check(X: CharacterTable, p: int, formal: TransposeReport | None = None) -> DefectReport:
    """Every block of a formally transposable table has full defect.

    A precomputed pipeline report can be passed to skip rerunning it;
    otherwise the necessary conditions are checked here first.
    """
    part = p_blocks(X, p)
    a = valuation(X.order, p)
    if formal is None:
        formal = check_formally_transposable(X)
    if not formal.formally_transposable:
        return DefectReport(ok=None, p=p, a=a, partition=part, asserted=False)
    bad = next((b for b, d in enumerate(part.defects) if d != a), None)
    if bad is None:
        return DefectReport(True, p, a, part, True)
    return DefectReport(
        False, p, a, part, True,
        failure=f"block {bad} has defect {part.defects[bad]}, expected {a}")


@dataclass(frozen=True)
class CongruenceReport:
    """Principal block congruence outcome.

    checked lists the transpose rows with degree invertible mod p, which
    carry the assertion; skipped rows are reported without one.  The
    corollary field tracks that principal characters of degree prime to p
    are linear.
    """

    ok: bool
    p: int
    principal: tuple[int, ...]
    checked: tuple[int, ...]
    skipped: tuple[int, ...]
    corollary_ok: bool
    violation: tuple | None = None
    corollary_violation: int | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "p": self.p,
            "principal": list(self.principal),
            "checked": list(self.checked),
            "skipped": list(self.skipped),
            "corollary_ok": self.corollary_ok,
            "violation": list(self.violation) if self.violation else None,
            "corollary_violation": self.corollary_violation,
        }


def principal_block_congruence(
    X: CharacterTable, p: int, transpose: CharacterTable | None = None
) -> CongruenceReport:
    """|C_chi| phi(x_chi)/phi(1) must reduce to |C_chi| on the principal block.

    chi runs over the principal p-block of X; under the duality chi is a
    class of the transpose with size chi(1)^2, and phi over the transpose
    rows whose degree survives reduction.  Rows with degree divisible by
    p carry no assertion and are listed as skipped.
    """
    Xt = transpose if transpose is not None else transpose_table(X)
    I = ideal_data(Xt.conductor, p)
    part = p_blocks(X, p)
    principal = part.blocks[0]
    checked = []
    skipped = []
    violation = None
    for i in range(Xt.k):
        d = Xt.degrees[i]
        if d % p == 0:
            skipped.append(i)
            continue
        checked.append(i)
        for chi in principal:
            size = Xt.class_sizes[chi]
            lhs = reduce(Xt.entries[i][chi] * size / d, I)
            if lhs != I.spec.from_int(size) and violation is None:
                violation = (chi, i)
    corollary_violation = next(
        (chi for chi in principal if X.degrees[chi] % p and X.degrees[chi] != 1),
        None,
    )
    return CongruenceReport(
        ok=violation is None and corollary_violation is None,
        p=p,
        principal=principal,
        checked=tuple(checked),
        skipped=tuple(skipped),
        corollary_ok=corollary_violation is None,
        violation=violation,
        corollary_violation=corollary_violation,
    )


@dataclass(frozen=True)
class NilpotencyReport:
    """Nilpotency consequences of formal transposability.

    reached is False when the pipeline rejects the table earlier; ok then
    stays None and the note records why.  A False ok would contradict the
    duality theory, so it must never occur on honest inputs.
    """

    reached: bool
    ok: bool | None
    nilpotent: bool | None = None
    note: str | None = None
    failure: str | None = None

    def to_json(self) -> dict:
        return {
            "reached": self.reached,
            "ok": self.ok,
            "nilpotent": self.nilpotent,
            "note": self.note,
            "failure": self.failure,
        }


def nilpotency_consistency(G: FiniteGroup, X: CharacterTable | None = None) -> NilpotencyReport:
    """A formally transposable table forces a nilpotent group.

    Verifies the group-side upper central series reaches G and that every
    nonlinear principal block character has degree divisible by its prime,
    for each prime dividing the order.
    """
    if X is None:
        X = character_table(G)
    rep = check_formally_transposable(X)
    if not rep.formally_transposable:
        return NilpotencyReport(
            reached=False, ok=None,
            note=f"table is not formally transposable: {rep.verdict}")
    upper, _ = central_series_group(G)
    if len(upper[-1]) != G.order:
        return NilpotencyReport(True, False, False, failure="group is not nilpotent")
    for p in sorted(factorint(X.order)):
        part = p_blocks(X, p)
        bad = next(
            (r for r in part.blocks[0] if X.degrees[r] > 1 and X.degrees[r] % p),
            None,
        )
        if bad is not None:
            return NilpotencyReport(
                True, False, True,
                failure=f"nonlinear principal character {bad} has degree prime to {p}")
    return NilpotencyReport(True, True, True)
