"""Command line front end.

Builds groups from descriptors, computes and caches character tables,
runs the transposability pipeline, and emits lattice, central-series,
and block reports.  `verify` chains every check the toolkit knows.

Exit codes: 0 all checks pass (RealizedBy for transposability commands),
2 formally transposable but no realizing group found, 3 a necessary
condition failed, 1 usage or internal error.
"""

import argparse
import hashlib
import json
import os
import sys
from collections import Counter
from pathlib import Path

from filelock import FileLock

from . import __version__
from .blocks import full_defect_check, p_blocks, principal_block_congruence
from .catalog import (
    catalog_entry,
    group_from_description,
    parse_descriptor,
)
from .chartab import (
    CharacterTable,
    CharacterTableError,
    character_table,
    verify_table,
)
from .families import SuzukiParams, suzuki_profile_expected
from .groups import FiniteGroup, ToolkitError, conjugacy_classes
from .numutil import factorint
from .structure import (
    center_abelianization_check,
    central_factor_correspondence,
    dual_lattice_check,
    abelian_invariants,
    lower_central_series_table,
    normal_subgroups,
    section_table,
    upper_central_series_table,
)
from .transpose import (
    FORMALLY_TRANSPOSABLE,
    REALIZED_BY,
    check_formally_transposable,
    check_transposable,
)

EXIT_REALIZED = 0
EXIT_USAGE = 1
EXIT_FORMAL = 2
EXIT_FAULT = 3


class CacheCorruption(ToolkitError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; 2 is taken, usage errors are 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ----------------------------------------------------------------- plumbing


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(obj, path: str | None):
    text = _canonical_json(obj)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_group(spec: str):
    """Descriptor text or a path to a description file -> (descriptor, group).

    File-built groups have no cache key; only descriptors are hashed.
    """
    if os.path.isfile(spec):
        with open(spec) as fh:
            G = group_from_description(json.load(fh))
        return G.descriptor, G
    G = parse_descriptor(spec)
    return G.descriptor, G


def _cache_dir(args) -> Path | None:
    if getattr(args, "cache_dir", None):
        return Path(args.cache_dir)
    env = os.environ.get("CHARTAB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "chardual"


def _payload_digest(payload: dict) -> str:
    return hashlib.sha256(_canonical_json(payload).encode()).hexdigest()


def _table_for(descriptor: str | None, G: FiniteGroup, cache: Path | None) -> CharacterTable:
    """Compute the table, going through the on-disk cache when keyable."""
    if cache is None or descriptor is None:
        return character_table(G)
    key = hashlib.sha256(f"{__version__}:{descriptor}".encode()).hexdigest()
    path = cache / f"table-{key[:32]}.json"
    cache.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        if path.exists():
            obj = json.loads(path.read_text())
            payload = obj.get("table")
            if (
                not isinstance(payload, dict)
                or obj.get("toolkit_version") != __version__
                or obj.get("descriptor") != descriptor
                or obj.get("payload_sha256") != _payload_digest(payload)
            ):
                raise CacheCorruption(
                    f"cache file {path} failed its checksum; delete it to recompute"
                )
            return CharacterTable.from_json(payload)
        X = character_table(G)
        payload = X.to_json()
        path.write_text(
            _canonical_json(
                {
                    "toolkit_version": __version__,
                    "descriptor": descriptor,
                    "payload_sha256": _payload_digest(payload),
                    "table": payload,
                }
            )
        )
        return X


def _print_table(X: CharacterTable):
    print(f"order {X.order}, {X.k} classes, conductor {X.conductor}")
    width = max(
        [len("size")]
        + [len(str(s)) for s in X.class_sizes]
        + [len(str(v)) for row in X.entries for v in row]
    )
    print("size  " + " ".join(str(s).rjust(width) for s in X.class_sizes))
    for row in X.entries:
        print("      " + " ".join(str(v).rjust(width) for v in row))


# ----------------------------------------------------------------- commands


def cmd_build(args) -> int:
    G = parse_descriptor(args.descriptor)
    _emit(G.to_description(), args.json)
    return 0


def cmd_chartab(args) -> int:
    descriptor, G = _load_group(args.group)
    X = _table_for(descriptor, G, _cache_dir(args))
    if args.json is not None:
        _emit(X.to_json(), args.json)
    else:
        _print_table(X)
    return 0


def _parse_candidates(text: str | None):
    if text in (None, "auto"):
        return None
    if text == "none":
        return []
    return [(d.strip(), parse_descriptor(d.strip())) for d in text.split(",")]


def _transpose_exit(report) -> int:
    if report.verdict.kind == REALIZED_BY:
        return EXIT_REALIZED
    if report.verdict.kind == FORMALLY_TRANSPOSABLE:
        return EXIT_FORMAL
    return EXIT_FAULT


def cmd_transpose_check(args) -> int:
    _, G = _load_group(args.group)
    report = check_transposable(G, _parse_candidates(args.candidates))
    print(f"verdict: {report.verdict}")
    if report.witness is not None:
        print(f"witness row permutation: {list(report.witness.row_perm)}")
        print(f"witness column permutation: {list(report.witness.col_perm)}")
    if args.json is not None:
        _emit(report.to_json(), args.json)
    return _transpose_exit(report)


def _lattice_covers(lat):
    k = len(lat.nodes)
    covers = []
    for i in range(k):
        for j in range(k):
            if i == j or not lat.leq(i, j):
                continue
            between = any(
                l not in (i, j) and lat.leq(i, l) and lat.leq(l, j) for l in range(k)
            )
            if not between:
                covers.append((i, j))
    return covers


def cmd_lattice(args) -> int:
    descriptor, G = _load_group(args.group)
    X = _table_for(descriptor, G, _cache_dir(args))
    lat = normal_subgroups(X)
    dual_orders = None
    dual = None
    if check_formally_transposable(X).formally_transposable:
        dual = dual_lattice_check(X)
        dual_orders = [pair[1] for pair in dual.pairs]
    print(f"{len(lat)} normal subgroups")
    for i, node in enumerate(lat.nodes):
        line = f"  order {node.order}, {len(node.classes)} classes"
        if dual_orders is not None:
            line += f", dual order {dual_orders[i]}"
        print(line)
    obj = {
        "nodes": [n.to_json() for n in lat.nodes],
        "covers": [list(c) for c in _lattice_covers(lat)],
        "duality": None if dual is None else dual.to_json(),
    }
    if args.json is not None:
        _emit(obj, args.json)
    if args.dot is not None:
        lines = ["digraph lattice {", "  rankdir=BT;"]
        for i, node in enumerate(lat.nodes):
            label = f"order {node.order}"
            if dual_orders is not None:
                label += f"\\ndual {dual_orders[i]}"
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in _lattice_covers(lat):
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        text = "\n".join(lines) + "\n"
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            Path(args.dot).write_text(text)
    return 0


def cmd_central_series(args) -> int:
    descriptor, G = _load_group(args.group)
    X = _table_for(descriptor, G, _cache_dir(args))
    upper = upper_central_series_table(X)
    lower = lower_central_series_table(X)
    layer_invariants = [
        list(abelian_invariants(section_table(X, upper[i].classes, upper[i - 1].classes)))
        for i in range(1, len(upper))
    ]
    print("upper central series orders:", [n.order for n in upper])
    print("lower central series orders:", [n.order for n in lower])
    for i, inv in enumerate(layer_invariants, start=1):
        print(f"  layer {i} invariants: {inv}")
    correspondence = None
    if check_formally_transposable(X).formally_transposable:
        correspondence = central_factor_correspondence(X)
        print("central-factor correspondence:", "ok" if correspondence.ok else "FAILED")
    if args.json is not None:
        _emit(
            {
                "upper_orders": [n.order for n in upper],
                "lower_orders": [n.order for n in lower],
                "upper_layer_invariants": layer_invariants,
                "correspondence": None if correspondence is None else correspondence.to_json(),
            },
            args.json,
        )
    return 0


def cmd_blocks(args) -> int:
    descriptor, G = _load_group(args.group)
    X = _table_for(descriptor, G, _cache_dir(args))
    part = p_blocks(X, args.p)
    defect = full_defect_check(X, args.p)
    # the congruence lives on the transpose table, which only exists when
    # the table is formally transposable
    congruence = principal_block_congruence(X, args.p) if defect.asserted else None
    for b, (members, d) in enumerate(zip(part.blocks, part.defects)):
        tag = " (principal)" if 0 in members else ""
        print(f"block {b}{tag}: defect {d}, characters {list(members)}")
    if defect.asserted:
        print("full defect:", "ok" if defect.ok else f"FAILED: {defect.failure}")
    if congruence is None:
        print("principal block congruence: skipped (table is not formally transposable)")
    else:
        print("principal block congruence:", "ok" if congruence.ok else "FAILED")
    if args.json is not None:
        _emit(
            {
                "partition": part.to_json(),
                "full_defect": defect.to_json(),
                "congruence": None if congruence is None else congruence.to_json(),
            },
            args.json,
        )
    return 0


def _expected_profile(descriptor: str | None, G: FiniteGroup) -> dict | None:
    """size -> class count, for families whose profile the toolkit knows."""
    if descriptor is None or "*" in descriptor:
        return None
    name, _, body = descriptor.partition(":")
    if name == "abelian":
        return {1: G.order}
    if name == "hanaki":
        p = int(body.partition("=")[2])
        return {1: p * p, p * p: p ** 3 - 1}
    if name == "suzuki":
        params = dict(piece.split("=") for piece in body.split(","))
        rows = suzuki_profile_expected(
            SuzukiParams(int(params["q"]), int(params["s"]), int(params["l"]))
        )
        profile: Counter = Counter()
        for count, _, size in rows:
            profile[size] += count
        return dict(profile)
    return None


def cmd_verify(args) -> int:
    descriptor, G = _load_group(args.group)
    checks: list[tuple[str, bool, str]] = []
    report: dict = {"descriptor": descriptor, "toolkit_version": __version__}

    def record(name: str, ok: bool, detail: str):
        checks.append((name, ok, detail))
        print(f"{name}: {'ok' if ok else 'FAILED'} ({detail})")

    cd = conjugacy_classes(G)
    profile = Counter(cd.sizes)
    entry = catalog_entry(descriptor) if descriptor else None
    ok = sum(cd.sizes) == G.order and (entry is None or entry.order == G.order)
    expected = _expected_profile(descriptor, G)
    if expected is not None:
        ok = ok and profile == Counter(expected)
    record(
        "class profile",
        ok,
        f"order {G.order}, sizes " + " ".join(f"{s}^{c}" for s, c in sorted(profile.items())),
    )
    report["profile"] = {"order": G.order, "sizes": sorted(cd.sizes)}

    X = _table_for(descriptor, G, _cache_dir(args))
    ver = verify_table(X)
    record("table invariants", ver.ok, f"{X.k} characters, conductor {X.conductor}")
    report["table"] = {"k": X.k, "conductor": X.conductor, "ok": ver.ok}

    trans = check_transposable(G, _parse_candidates(args.candidates))
    record(
        "transposability",
        trans.formally_transposable,
        str(trans.verdict),
    )
    report["transposability"] = trans.verdict.to_json()
    if not trans.formally_transposable:
        report["exit"] = EXIT_FAULT
        if args.json is not None:
            _emit(report, args.json)
        return EXIT_FAULT

    lattice = dual_lattice_check(X)
    record("lattice duality", lattice.ok, f"{len(lattice.pairs)} normal subgroups")
    report["lattice"] = lattice.to_json()

    series = central_factor_correspondence(X)
    record("central-series correspondence", series.ok, f"{len(series.layers)} layers")
    report["central_series"] = series.to_json()

    center = center_abelianization_check(X)
    record(
        "center vs abelianization",
        center.ok,
        f"invariants {list(center.center_invariants)}",
    )
    report["center_abelianization"] = center.to_json()

    report["blocks"] = {}
    for p in sorted(factorint(X.order)):
        defect = full_defect_check(X, p, formal=trans)
        congruence = principal_block_congruence(X, p)
        ok = bool(defect.ok) and congruence.ok and congruence.corollary_ok
        record(
            f"blocks at p={p}",
            ok,
            f"{len(defect.partition.blocks)} blocks, defects {list(defect.partition.defects)}",
        )
        report["blocks"][str(p)] = {
            "full_defect": defect.to_json(),
            "congruence": congruence.to_json(),
        }

    failed = any(not ok for _, ok, _ in checks)
    if failed:
        code = EXIT_FAULT
    elif trans.realized:
        code = EXIT_REALIZED
    else:
        code = EXIT_FORMAL
    verdict_line = {
        EXIT_REALIZED: "all checks pass",
        EXIT_FORMAL: "formally transposable, no realizing group found",
        EXIT_FAULT: "necessary condition failed",
    }[code]
    print(verdict_line)
    report["exit"] = code
    if args.json is not None:
        _emit(report, args.json)
    return code


# -------------------------------------------------------------- entry point


def _add_common(p, cache: bool = True):
    p.add_argument("--json", metavar="PATH", help="write a JSON report to PATH ('-' for stdout)")
    p.add_argument(
        "--threads",
        type=int,
        metavar="N",
        help="advisory worker count; current algorithms run in one process",
    )
    if cache:
        p.add_argument("--cache-dir", metavar="PATH", help="table cache directory")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chardual", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"chardual {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("build", help="write the description file of a descriptor")
    p.add_argument("descriptor")
    _add_common(p, cache=False)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("chartab", help="compute the character table")
    p.add_argument("group", help="descriptor or description file")
    _add_common(p)
    p.set_defaults(func=cmd_chartab)

    p = sub.add_parser("transpose-check", help="run the transposability pipeline")
    p.add_argument("group", help="descriptor or description file")
    p.add_argument(
        "--candidates",
        default="auto",
        metavar="auto|none|d1,d2,...",
        help="realization search pool (default: built-in catalog)",
    )
    _add_common(p)
    p.set_defaults(func=cmd_transpose_check)

    p = sub.add_parser("lattice", help="normal subgroup lattice from the table")
    p.add_argument("group", help="descriptor or description file")
    p.add_argument("--dot", metavar="PATH", help="write a DOT graph to PATH ('-' for stdout)")
    _add_common(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("central-series", help="upper and lower central series from the table")
    p.add_argument("group", help="descriptor or description file")
    _add_common(p)
    p.set_defaults(func=cmd_central_series)

    p = sub.add_parser("blocks", help="p-blocks, defects, and block congruences")
    p.add_argument("group", help="descriptor or description file")
    p.add_argument("-p", type=int, required=True, metavar="PRIME")
    _add_common(p)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("verify", help="run every applicable check")
    p.add_argument("group", help="descriptor or description file")
    p.add_argument(
        "--candidates",
        default="auto",
        metavar="auto|none|d1,d2,...",
        help="realization search pool (default: built-in catalog)",
    )
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.func(args)
    except (ToolkitError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
