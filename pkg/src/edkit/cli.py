"""Batch front end: group catalogs in, machine-readable reports out.

Row-oriented commands (rdim, chartab, edbounds, jordan, family) emit
newline-delimited JSON, one object per row; embed and prime emit a single
object.  ``--format=csv`` flattens the same rows.  Exit codes: 0 success,
1 usage error, 2 computation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import primes
from .chartab import character_table, verify_orthogonality
from .edbounds import (
    EdBoundsReport,
    FamilySpec,
    JordanTable,
    bounds_report,
    dirichlet_prime,
    family_report,
)
from .errors import DuplicateName, InvalidInput, InvalidSpec, ParseError, ToolkitError
from .groups import (
    DEFAULT_JORDAN_LIMIT,
    DEFAULT_ORDER_LIMIT,
    FiniteGroup,
    GroupSpec,
    construct,
    validate_spec,
)
from .jordan import corpus_scan, jordan_certificate
from .monomial import induce_monomial, minimal_faithful_characters, verify_embedding
from .repdim import rdim


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: GroupSpec


def load_catalog(path: str | Path) -> list[CatalogEntry]:
    """Parse and validate a catalog file: {"groups": [{name, kind, params}]}."""
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ParseError(f"catalog {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"catalog {path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    groups = raw.get("groups")
    if not isinstance(groups, list):
        raise ParseError(f'catalog {path}: expected a top-level "groups" list')
    entries: list[CatalogEntry] = []
    seen: set[str] = set()
    for item in groups:
        name = item.get("name")
        if not isinstance(name, str) or not name:
            raise ParseError(f"catalog {path}: every entry needs a non-empty name")
        if name in seen:
            raise DuplicateName(f"duplicate catalog name {name!r}")
        seen.add(name)
        spec = GroupSpec(item.get("kind", ""), dict(item.get("params", {})))
        try:
            validate_spec(spec)
        except InvalidSpec as exc:
            raise InvalidSpec(f"entry {name!r}: {exc}") from exc
        entries.append(CatalogEntry(name, spec))
    return entries


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="edkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, catalog=True):
        if catalog:
            p.add_argument("--catalog", required=True, help="path to a group catalog JSON file")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--max-order", type=int, default=DEFAULT_ORDER_LIMIT)
        p.add_argument("--max-jordan-order", type=int, default=DEFAULT_JORDAN_LIMIT)
        p.add_argument("--prime-cap", type=int, default=primes.DEFAULT_PROGRESSION_CAP)

    add_common(sub.add_parser("rdim", help="minimal faithful degrees per catalog entry"))

    p = sub.add_parser("chartab", help="character tables per catalog entry")
    add_common(p)
    p.add_argument("--name", help="only the named entry")

    p = sub.add_parser("edbounds", help="essential-dimension bounds per catalog entry")
    add_common(p)
    p.add_argument("--jordan-table", help="path to a Jordan-constant table JSON file")

    p = sub.add_parser("embed", help="monomial embedding for one catalog entry")
    add_common(p)
    p.add_argument("--name", required=True)
    p.add_argument(
        "--subgroup", default="jordan-witness",
        help="abelian subgroup strategy: center | jordan-witness | sylow:P",
    )

    add_common(sub.add_parser("jordan", help="Jordan certificates for the whole catalog"))

    p = sub.add_parser("family", help="bounds for a one-parameter family")
    add_common(p, catalog=False)
    p.add_argument("--kind", required=True)
    p.add_argument("--range", required=True, help="index range A..B (inclusive)")
    p.add_argument("--p", type=int, help="prime for gamma families")
    p.add_argument("--units", help="comma-separated units for semidirect_custom")
    p.add_argument("--jordan-table", help="path to a Jordan-constant table JSON file")

    p = sub.add_parser("prime", help="smallest prime q with q == 1 (mod p^n)")
    add_common(p, catalog=False)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def run(argv: list[str]) -> int:
    """Entry point used by tests and `main`; returns the process exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        rows, verified = _dispatch(args)
    except ToolkitError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(rows, args.format)
    return 0 if verified else 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def _dispatch(args) -> tuple[list[dict], bool]:
    """Produce output rows plus a verification flag (False forces exit 3)."""
    if args.command == "rdim":
        return _cmd_rdim(args)
    if args.command == "chartab":
        return _cmd_chartab(args)
    if args.command == "edbounds":
        return _cmd_edbounds(args)
    if args.command == "embed":
        return _cmd_embed(args)
    if args.command == "jordan":
        return _cmd_jordan(args)
    if args.command == "family":
        return _cmd_family(args)
    if args.command == "prime":
        q = dirichlet_prime(args.p, args.n, cap=args.prime_cap)
        return [{"p": args.p, "n": args.n, "q": q}], True
    raise InvalidInput(f"unknown command {args.command!r}")


def _groups_from_catalog(args) -> list[tuple[str, FiniteGroup]]:
    entries = load_catalog(args.catalog)
    out = []
    for entry in entries:
        G = construct(entry.spec, order_limit=args.max_order, prime_cap=args.prime_cap)
        G.name = entry.name
        out.append((entry.name, G))
    return out


def _cmd_rdim(args) -> tuple[list[dict], bool]:
    rows = []
    for name, G in _groups_from_catalog(args):
        cert = rdim(G, order_limit=args.max_order)
        degrees = character_table(G).degrees() if G.order > 1 else ()
        rows.append({
            "name": name,
            "order": G.order,
            "total_degree": cert.total_degree,
            "constituent_indices": list(cert.constituent_indices),
            "constituent_degrees": [degrees[i] for i in cert.constituent_indices],
        })
    return rows, True


def _cmd_chartab(args) -> tuple[list[dict], bool]:
    rows = []
    all_ok = True
    for name, G in _groups_from_catalog(args):
        if args.name and name != args.name:
            continue
        table = character_table(G, order_limit=args.max_order)
        report = verify_orthogonality(table)
        all_ok = all_ok and report.ok
        rows.append({
            "name": name,
            "order": G.order,
            "num_classes": len(table.classes),
            "class_sizes": list(table.classes.sizes),
            "class_rep_orders": list(table.classes.rep_orders),
            "degrees": list(table.degrees()),
            "values": [
                [
                    {"order": v.order, "multiplicities": list(v.multiplicities)}
                    for v in ch.values
                ]
                for ch in table.irreducibles
            ],
            "orthogonality_ok": report.ok,
        })
    if args.name and not rows:
        raise InvalidInput(f"no catalog entry named {args.name!r}")
    return rows, all_ok


def _cmd_edbounds(args) -> tuple[list[dict], bool]:
    jt = JordanTable.from_json_file(args.jordan_table) if args.jordan_table else None
    rows = []
    for name, G in _groups_from_catalog(args):
        report = bounds_report(G, name=name, jordan_table=jt, order_limit=args.max_order)
        rows.append(_report_row(report))
    return rows, True


def _cmd_embed(args) -> tuple[list[dict], bool]:
    for name, G in _groups_from_catalog(args):
        if name == args.name:
            break
    else:
        raise InvalidInput(f"no catalog entry named {args.name!r}")
    strategy = args.subgroup
    if strategy == "center":
        sub = G.center()
    elif strategy == "jordan-witness":
        sub = jordan_certificate(G, limit=args.max_jordan_order).strong_witness
    elif strategy.startswith("sylow:"):
        sub = G.sylow(int(strategy.split(":", 1)[1]))
    else:
        raise InvalidInput(f"unknown subgroup strategy {strategy!r}")
    chars = minimal_faithful_characters(sub)
    rep = induce_monomial(G, sub, chars)
    report = verify_embedding(rep)
    row = {
        "name": name,
        "order": G.order,
        "subgroup_strategy": strategy,
        "subgroup_order": sub.order,
        "subgroup_index": sub.index,
        "size": rep.dimension,
        "root_order": rep.root_order,
        "coset_count": rep.coset_count,
        "character_count": rep.character_count,
        "basis_labels": [list(l) for l in rep.basis_labels],
        "images": [
            {"permutation": list(M.line_permutation.images), "exponents": list(M.exponents)}
            for M in rep.images
        ],
        "verification": {
            "ok": report.ok,
            "stage": report.stage,
            "witness": list(report.witness) if report.witness else None,
            "pairs_checked": report.pairs_checked,
            "sampled": report.sampled,
        },
    }
    return [row], report.ok


def _cmd_jordan(args) -> tuple[list[dict], bool]:
    entries = load_catalog(args.catalog)
    rows: list[dict] = []
    summary = corpus_scan(
        [e.spec for e in entries],
        rows.append,
        names=[e.name for e in entries],
        limit=args.max_jordan_order,
        order_limit=args.max_order,
    )
    rows.append({
        "summary": {
            "groups_scanned": summary.groups_scanned,
            "groups_skipped": summary.groups_skipped,
            "max_weak_index": summary.max_weak_index,
            "max_strong_index": summary.max_strong_index,
            "square_relation_ok": summary.square_relation_ok,
        }
    })
    return rows, summary.square_relation_ok


def _cmd_family(args) -> tuple[list[dict], bool]:
    try:
        start_s, stop_s = args.range.split("..", 1)
        start, stop = int(start_s), int(stop_s)
    except ValueError as exc:
        raise InvalidInput(f"bad --range {args.range!r}; expected A..B") from exc
    units = tuple(int(u) for u in args.units.split(",")) if args.units else ()
    fs = FamilySpec(args.kind, start, stop, p=args.p, units=units)
    jt = JordanTable.from_json_file(args.jordan_table) if args.jordan_table else None
    rows = [
        _report_row(r)
        for r in family_report(
            fs, jordan_table=jt, order_limit=args.max_order, prime_cap=args.prime_cap
        )
    ]
    return rows, True


def _report_row(report: EdBoundsReport) -> dict:
    row = dataclasses.asdict(report)
    row["contrapositive_entries"] = list(report.contrapositive_entries)
    return row


def _emit(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        for row in rows:
            sys.stdout.write(json.dumps(row) + "\n")
        return
    # CSV: union of keys in first-seen order; nested values flattened
    fields: list[str] = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    sys.stdout.write(buf.getvalue())


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return ";".join(str(_csv_cell(v)) for v in value)
    if isinstance(value, dict):
        return json.dumps(value)
    return value


if __name__ == "__main__":
    main()
