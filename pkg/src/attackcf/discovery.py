"""Attack path discovery over a vulnerability-annotated asset graph.

An entry point is eligible when the configured attacker meets the location
and capability requirements of at least one of its vulnerabilities of an
allowed type.  For every eligible entry, targets are pruned by BFS
shortest-path distance (a target farther than the propagation length can
have no bounded path), then every simple path within the propagation
length is enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from attackcf import _kernels
from attackcf.model import (
    AssetGraph,
    AttackPath,
    AttackerProfile,
    DiscoveryConfig,
    VulnType,
)


@dataclass(frozen=True)
class DiscoveryResult:
    """Discovered paths, the assets they touch, and the graph they came from.

    no_eligible_entries is set when every configured entry point failed the
    attacker/vulnerability-type guard; an empty result is data, not an error.
    """

    paths: tuple[AttackPath, ...]
    affected_assets: frozenset[str]
    graph: AssetGraph
    no_eligible_entries: bool = False


class _Csr:
    """CSR adjacency of an AssetGraph, node indices in sorted-id order."""

    def __init__(self, graph: AssetGraph):
        self.ids = sorted(a.id for a in graph.assets)
        self.index = {aid: i for i, aid in enumerate(self.ids)}
        n = len(self.ids)
        indptr = np.zeros(n + 1, dtype=np.int64)
        rows: list[int] = []
        succ = graph.successors
        for i, aid in enumerate(self.ids):
            neighbors = sorted(self.index[d] for d in succ.get(aid, ()))
            rows.extend(neighbors)
            indptr[i + 1] = len(rows)
        self.indptr = indptr
        self.indices = np.asarray(rows, dtype=np.int64)


def _require_asset(graph: AssetGraph, asset_id: str) -> None:
    if not graph.has_asset(asset_id):
        raise KeyError(f"unknown asset id {asset_id!r}")


def entry_eligible(
    entry: str,
    graph: AssetGraph,
    attacker: AttackerProfile,
    allowed_types: frozenset[VulnType],
) -> bool:
    """True when the attacker can exploit at least one allowed-type vulnerability on entry."""
    _require_asset(graph, entry)
    for v in graph.vulns_by_asset.get(entry, ()):
        if (
            attacker.location >= v.required_location
            and attacker.capability >= v.required_capability
            and v.vuln_type in allowed_types
        ):
            return True
    return False


def shortest_path_lengths(
    graph: AssetGraph, source: str, backend: str | None = None
) -> dict[str, int]:
    """BFS distances in edge count from source; unreachable assets are absent."""
    _require_asset(graph, source)
    csr = _Csr(graph)
    dist = _kernels.bfs_lengths(csr.indptr, csr.indices, csr.index[source], backend)
    return {csr.ids[i]: int(d) for i, d in enumerate(dist) if d >= 0}


def enumerate_simple_paths(
    graph: AssetGraph,
    entry: str,
    target: str,
    max_len: int,
    backend: str | None = None,
) -> list[AttackPath]:
    """All simple directed paths entry->target with at most max_len edges.

    Output is ordered lexicographically by node-id sequence.
    """
    _require_asset(graph, entry)
    _require_asset(graph, target)
    if entry == target:
        raise ValueError(f"entry and target must differ, got {entry!r} for both")
    if max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")
    csr = _Csr(graph)
    return _paths_from_csr(csr, csr.index[entry], csr.index[target], max_len, backend)


def _paths_from_csr(csr: _Csr, src: int, dst: int, max_len: int,
                    backend: str | None) -> list[AttackPath]:
    flat, lens = _kernels.simple_paths(csr.indptr, csr.indices, src, dst,
                                       max_len, backend)
    out: list[AttackPath] = []
    pos = 0
    for ln in lens:
        out.append(AttackPath(csr.ids[i] for i in flat[pos:pos + ln]))
        pos += ln
    return out


def discover(
    graph: AssetGraph,
    config: DiscoveryConfig,
    prune: bool = True,
    backend: str | None = None,
) -> DiscoveryResult:
    """Enumerate every bounded attack path from eligible entries to targets.

    The graph is assumed structurally valid (see validate_model).  prune
    toggles the shortest-path distance pre-filter on (entry, target)
    pairs; it never changes the result, only skips hopeless enumerations.
    """
    ids = set(graph.asset_by_id)
    entries = sorted(config.entry_points & ids)
    targets = sorted(config.target_points & ids)
    if not entries:
        raise ValueError("no configured entry point exists in the graph")
    if not targets:
        raise ValueError("no configured target point exists in the graph")

    eligible = [
        e
        for e in entries
        if entry_eligible(e, graph, config.attacker, config.allowed_types)
    ]
    if not eligible:
        return DiscoveryResult(
            paths=(),
            affected_assets=frozenset(),
            graph=graph,
            no_eligible_entries=True,
        )

    csr = _Csr(graph)
    max_len = config.propagation_length
    found: list[AttackPath] = []
    for e in eligible:
        src = csr.index[e]
        dist = (
            _kernels.bfs_lengths(csr.indptr, csr.indices, src, backend)
            if prune
            else None
        )
        for t in targets:
            if t == e:
                continue
            dst = csr.index[t]
            if dist is not None and not 0 <= dist[dst] <= max_len:
                continue
            found.extend(_paths_from_csr(csr, src, dst, max_len, backend))

    unique = sorted(set(found), key=lambda p: p.nodes)
    affected = frozenset(n for p in unique for n in p.nodes)
    return DiscoveryResult(paths=tuple(unique), affected_assets=affected, graph=graph)
