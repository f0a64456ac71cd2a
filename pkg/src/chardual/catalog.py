"""Descriptor grammar and the built-in group catalog.

A descriptor is a compact text name for a group the toolkit can build:

    sym:4  dih:6  q8  abelian:2x4  hanaki:p=3  coclass2:p=5
    suzuki:q=3,s=3,l=2

and direct products of those joined by `*`.  The catalog is the fixed
list of descriptors used as negative controls, self-duality stock, and
the candidate pool for realization searches.
"""

from dataclasses import dataclass
from typing import Callable

from .families import (
    SuzukiParams,
    abelian,
    coclass2_p7,
    dihedral,
    hanaki_p5,
    quaternion8,
    suzuki_type,
    symmetric,
)
from .groups import (
    AbelianTupleGroup,
    FiniteGroup,
    PcGroup,
    PcPresentation,
    PermGroup,
    QuotientGroup,
    ToolkitError,
    direct_product,
    subgroup_closure,
)

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "candidates_of_order",
    "catalog_entry",
    "group_from_description",
    "parse_descriptor",
    "print_descriptor",
]


class DescriptorError(ToolkitError):
    pass


def _positive_int(text: str, what: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise DescriptorError(f"{what} is not an integer: {text!r}") from None
    if n < 1:
        raise DescriptorError(f"{what} must be positive: {n}")
    return n


def _parse_params(body: str, keys: tuple, what: str) -> dict:
    got = {}
    for piece in body.split(","):
        if "=" not in piece:
            raise DescriptorError(f"{what} expects key=value parameters, got {piece!r}")
        key, _, val = piece.partition("=")
        if key not in keys or key in got:
            raise DescriptorError(f"unexpected parameter {key!r} for {what}")
        got[key] = _positive_int(val, f"{what} parameter {key}")
    missing = [k for k in keys if k not in got]
    if missing:
        raise DescriptorError(f"{what} is missing parameters: {', '.join(missing)}")
    return got


def _parse_atom(text: str) -> FiniteGroup:
    name, sep, body = text.partition(":")
    if name == "q8":
        if sep:
            raise DescriptorError("q8 takes no parameters")
        return quaternion8()
    if not sep or not body:
        raise DescriptorError(f"descriptor {text!r} needs parameters after ':'")
    if name == "sym":
        return symmetric(_positive_int(body, "sym degree"))
    if name == "dih":
        return dihedral(_positive_int(body, "dih order parameter"))
    if name == "abelian":
        return abelian([_positive_int(m, "abelian invariant") for m in body.split("x")])
    if name == "hanaki":
        return hanaki_p5(_parse_params(body, ("p",), "hanaki")["p"])
    if name == "coclass2":
        return coclass2_p7(_parse_params(body, ("p",), "coclass2")["p"])
    if name == "suzuki":
        got = _parse_params(body, ("q", "s", "l"), "suzuki")
        return suzuki_type(SuzukiParams(got["q"], got["s"], got["l"]))
    raise DescriptorError(f"unknown descriptor kind {name!r}")


def parse_descriptor(text: str) -> FiniteGroup:
    """Build the group a descriptor names; `*` means direct product."""
    parts = [p.strip() for p in text.split("*")]
    if any(not p for p in parts):
        raise DescriptorError(f"empty factor in descriptor {text!r}")
    G = _parse_atom(parts[0])
    for part in parts[1:]:
        G = direct_product(G, _parse_atom(part))
    return G


def print_descriptor(G: FiniteGroup) -> str:
    """The canonical descriptor of a descriptor-built group."""
    if not G.descriptor:
        raise DescriptorError("group was not built from a descriptor")
    return G.descriptor


# ------------------------------------------------------- description files


def group_from_description(obj: dict) -> FiniteGroup:
    """Rebuild a group from its description JSON (the build artifact)."""
    kind = obj.get("kind")
    if kind == "perm":
        return PermGroup(int(obj["degree"]), [tuple(g) for g in obj["generators"]])
    if kind == "abelian":
        return AbelianTupleGroup([int(m) for m in obj["moduli"]])
    if kind == "pc":
        pres = PcPresentation(
            p=int(obj["p"]),
            ngens=int(obj["ngens"]),
            powers=tuple(tuple(tuple(t) for t in w) for w in obj["powers"]),
            commutators={
                (j, i): tuple(tuple(t) for t in w) for j, i, w in obj["commutators"]
            },
        )
        return PcGroup(pres)
    if kind == "tuple":
        return suzuki_type(SuzukiParams(int(obj["q"]), int(obj["s"]), int(obj["l"])))
    if kind == "product":
        factors = [group_from_description(f) for f in obj["factors"]]
        G = factors[0]
        for H in factors[1:]:
            G = direct_product(G, H)
        return G
    if kind == "quotient":
        parent = group_from_description(obj["of"])
        gens = []
        for word in obj["by"]:
            x = parent.identity
            for gi in word:
                x = parent.mul(x, parent.generators[gi])
            gens.append(x)
        return QuotientGroup(parent, subgroup_closure(parent, gens))
    raise DescriptorError(f"unknown description kind {kind!r}")


# --------------------------------------------------------------- the catalog


@dataclass(frozen=True)
class CatalogEntry:
    descriptor: str
    build: Callable[[], FiniteGroup]
    order: int
    tags: tuple[str, ...]


def _entry(descriptor: str, order: int, *tags: str) -> CatalogEntry:
    return CatalogEntry(descriptor, lambda d=descriptor: parse_descriptor(d), order, tags)


def _abelian_entry(invariants: tuple) -> CatalogEntry:
    desc = "abelian:" + "x".join(str(m) for m in invariants)
    order = 1
    for m in invariants:
        order *= m
    return _entry(desc, order, "abelian")


_ABELIANS = (
    (2,), (3,), (4,), (2, 2), (6,), (8,), (2, 4), (2, 2, 2),
    (9,), (3, 3), (12,), (2, 6), (16,), (2, 8), (4, 4), (2, 2, 4),
    (18,), (3, 6), (24,), (2, 12), (27,), (3, 3, 3), (36,), (6, 6),
    (64,), (72,),
)

CATALOG: tuple = (
    _entry("sym:3", 6, "control"),
    _entry("dih:4", 8, "control"),
    _entry("q8", 8, "control"),
    _entry("dih:6", 12, "control"),
    _entry("sym:4", 24, "control"),
    *(_abelian_entry(inv) for inv in _ABELIANS),
    _entry("suzuki:q=3,s=3,l=1", 27, "stem-family"),
    _entry("hanaki:p=3", 243, "stem-family"),
    _entry("suzuki:q=3,s=3,l=2", 729, "stem-family"),
)

_BY_DESCRIPTOR = {e.descriptor: e for e in CATALOG}


def catalog_entry(descriptor: str) -> CatalogEntry | None:
    return _BY_DESCRIPTOR.get(descriptor)


def candidates_of_order(order: int) -> list:
    """Catalog groups of the given order, as (descriptor, group) pairs.

    This is the realization-search pool: a table can only be realized by
    a group the toolkit can actually build and compare against.
    """
    return [(e.descriptor, e.build()) for e in CATALOG if e.order == order]
