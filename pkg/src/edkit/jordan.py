"""Jordan-constant certificates: minimal-index abelian subgroups.

The weak index minimizes over all abelian subgroups, the strong index over
normal abelian subgroups; per group these always satisfy
weak <= strong <= weak^2, and the corpus scan exists to confirm that
relation across a whole catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import OrderLimitExceeded, ToolkitError
from .groups import (
    DEFAULT_JORDAN_LIMIT,
    DEFAULT_ORDER_LIMIT,
    FiniteGroup,
    GroupSpec,
    Subgroup,
    construct,
)


@dataclass(frozen=True)
class JordanCertificate:
    group_name: str
    order: int
    weak_index: int
    strong_index: int
    weak_witness: Subgroup
    strong_witness: Subgroup

    def __post_init__(self):
        assert self.weak_witness.is_abelian()
        assert self.strong_witness.is_abelian() and self.strong_witness.is_normal()
        assert self.weak_index == self.weak_witness.index
        assert self.strong_index == self.strong_witness.index
        assert self.weak_index <= self.strong_index <= self.weak_index**2


def jordan_certificate(G: FiniteGroup, *, limit: int = DEFAULT_JORDAN_LIMIT) -> JordanCertificate:
    """True minimal indices over abelian and normal abelian subgroups, with
    witnesses; exhaustive, so only available below the jordan order limit."""
    if G.order > limit:
        raise OrderLimitExceeded(f"order {G.order} exceeds the jordan limit {limit}")
    weak = G.abelian_subgroup_of_min_index(require_normal=False, limit=limit)
    strong = G.abelian_subgroup_of_min_index(require_normal=True, limit=limit)
    return JordanCertificate(
        group_name=G.name,
        order=G.order,
        weak_index=weak.index,
        strong_index=strong.index,
        weak_witness=weak,
        strong_witness=strong,
    )


@dataclass(frozen=True)
class ScanSummary:
    groups_scanned: int
    groups_skipped: int
    max_weak_index: int
    max_strong_index: int
    square_relation_ok: bool


def corpus_scan(
    specs: Sequence[GroupSpec],
    sink: Callable[[dict], None],
    *,
    names: Sequence[str] | None = None,
    limit: int = DEFAULT_JORDAN_LIMIT,
    order_limit: int = DEFAULT_ORDER_LIMIT,
) -> ScanSummary:
    """Emit one certificate row per spec to `sink` and return the summary.

    Rows for groups beyond the limits are structured skip records; the
    square relation flag in the summary covers every scanned group.
    """
    scanned = skipped = 0
    max_weak = max_strong = 0
    square_ok = True
    for pos, spec in enumerate(specs):
        name = names[pos] if names is not None else spec.describe()
        try:
            G = construct(spec, order_limit=order_limit)
            G.name = name
            cert = jordan_certificate(G, limit=limit)
        except ToolkitError as exc:
            skipped += 1
            sink({
                "name": name,
                "skipped": True,
                "reason": f"{type(exc).__name__}: {exc}",
            })
            continue
        scanned += 1
        max_weak = max(max_weak, cert.weak_index)
        max_strong = max(max_strong, cert.strong_index)
        if cert.strong_index > cert.weak_index**2:
            square_ok = False
        sink(certificate_row(cert))
    return ScanSummary(scanned, skipped, max_weak, max_strong, square_ok)


def certificate_row(cert: JordanCertificate) -> dict:
    """Flat, JSON-ready view of a certificate."""
    return {
        "name": cert.group_name,
        "order": cert.order,
        "weak_index": cert.weak_index,
        "strong_index": cert.strong_index,
        "weak_witness_orders": list(cert.weak_witness.element_orders()),
        "strong_witness_orders": list(cert.strong_witness.element_orders()),
        "skipped": False,
    }
