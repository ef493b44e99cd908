"""Domain types shared by discovery, similarity, and prediction.

All types are immutable after construction and safe for concurrent reads.
Graph-level consistency (dangling references, duplicate ids, out-of-range
scores) is reported by :func:`validate_model` rather than raised at
construction time, so that broken input data can be inspected as data.
Configuration types, by contrast, reject invalid values immediately:
a bad config is an operator error, not a data-quality finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property


class AssetKind(Enum):
    HARDWARE = "hardware"
    SOFTWARE = "software"


class VulnType(Enum):
    """Vulnerability categories recognised by the path discovery filter.

    OTHER covers anything outside the six named categories; it never
    satisfies the default discovery type filter.
    """

    CODE_EXECUTION = "CodeExecution"
    OVERFLOW = "Overflow"
    XSS = "XSS"
    BYPASS_SOMETHING = "BypassSomething"
    OBTAIN_PRIVILEGE = "ObtainPrivilege"
    MEMORY_CORRUPTION = "MemoryCorruption"
    OTHER = "Other"


#: Types an attack step may exploit unless the configuration says otherwise.
DEFAULT_ALLOWED_TYPES: frozenset[VulnType] = frozenset(
    {
        VulnType.CODE_EXECUTION,
        VulnType.OVERFLOW,
        VulnType.XSS,
        VulnType.BYPASS_SOMETHING,
        VulnType.OBTAIN_PRIVILEGE,
        VulnType.MEMORY_CORRUPTION,
    }
)


@dataclass(frozen=True)
class Asset:
    """A hardware or software node in the infrastructure graph."""

    id: str
    name: str
    kind: AssetKind
    host: str | None = None

    def _sort_key(self):
        return (self.id, self.name, self.kind.value, self.host or "")


@dataclass(frozen=True)
class VulnerabilityInstance:
    """A CVE occurrence on one asset.

    score is the CVSS base score in [0, 10].  required_location and
    required_capability are the minimum attacker attributes (1-3 scales)
    needed to exploit the instance.
    """

    cve_id: str
    asset: str
    score: float
    cwe_id: str | None
    vuln_type: VulnType
    required_location: int
    required_capability: int

    def _sort_key(self):
        return (self.cve_id, self.asset, self.score, self.cwe_id or "",
                self.vuln_type.value, self.required_location, self.required_capability)


@dataclass(frozen=True)
class AssetGraph:
    """Immutable asset graph: assets, vulnerability instances, reachability edges.

    Construction normalises the three collections to sorted, de-duplicated
    tuples so that structurally equal models compare equal regardless of
    input order.
    """

    assets: tuple[Asset, ...]
    vulnerabilities: tuple[VulnerabilityInstance, ...]
    edges: tuple[tuple[str, str], ...]

    def __init__(self, assets, vulnerabilities=(), edges=()):
        object.__setattr__(
            self, "assets", tuple(sorted(set(assets), key=Asset._sort_key))
        )
        object.__setattr__(
            self,
            "vulnerabilities",
            tuple(sorted(set(vulnerabilities), key=VulnerabilityInstance._sort_key)),
        )
        object.__setattr__(self, "edges", tuple(sorted(set(edges))))

    @cached_property
    def asset_by_id(self) -> dict[str, Asset]:
        # first occurrence wins; duplicate ids surface via validate_model
        out: dict[str, Asset] = {}
        for a in self.assets:
            out.setdefault(a.id, a)
        return out

    @cached_property
    def vulns_by_asset(self) -> dict[str, tuple[VulnerabilityInstance, ...]]:
        grouped: dict[str, list[VulnerabilityInstance]] = {}
        for v in self.vulnerabilities:
            grouped.setdefault(v.asset, []).append(v)
        return {k: tuple(vs) for k, vs in grouped.items()}

    @cached_property
    def successors(self) -> dict[str, tuple[str, ...]]:
        nxt: dict[str, list[str]] = {a.id: [] for a in self.assets}
        for src, dst in self.edges:
            nxt.setdefault(src, []).append(dst)
        return {k: tuple(sorted(ws)) for k, ws in nxt.items()}

    def has_asset(self, asset_id: str) -> bool:
        return asset_id in self.asset_by_id


@dataclass(frozen=True)
class AttackerProfile:
    """Modeled adversary: location 1-3 (local/adjacent/network), capability 1-3 (low/medium/high)."""

    location: int
    capability: int

    def __post_init__(self):
        if self.location not in (1, 2, 3):
            raise ValueError(f"attacker location must be 1, 2 or 3, got {self.location}")
        if self.capability not in (1, 2, 3):
            raise ValueError(f"attacker capability must be 1, 2 or 3, got {self.capability}")


@dataclass(frozen=True)
class DiscoveryConfig:
    """Parameters steering attack path discovery."""

    entry_points: frozenset[str]
    target_points: frozenset[str]
    attacker: AttackerProfile
    propagation_length: int
    allowed_types: frozenset[VulnType] = DEFAULT_ALLOWED_TYPES

    def __init__(self, entry_points, target_points, attacker, propagation_length,
                 allowed_types=DEFAULT_ALLOWED_TYPES):
        object.__setattr__(self, "entry_points", frozenset(entry_points))
        object.__setattr__(self, "target_points", frozenset(target_points))
        object.__setattr__(self, "attacker", attacker)
        object.__setattr__(self, "propagation_length", propagation_length)
        object.__setattr__(self, "allowed_types", frozenset(allowed_types))
        if not self.entry_points:
            raise ValueError("entry_points must not be empty")
        if not self.target_points:
            raise ValueError("target_points must not be empty")
        if not isinstance(propagation_length, int) or propagation_length < 1:
            raise ValueError(
                f"propagation_length must be a positive integer, got {propagation_length!r}"
            )


@dataclass(frozen=True)
class AttackPath:
    """An ordered, non-repeating asset sequence from an entry point to a target point."""

    nodes: tuple[str, ...]

    def __init__(self, nodes):
        object.__setattr__(self, "nodes", tuple(nodes))
        if len(self.nodes) < 2:
            raise ValueError("an attack path needs at least two nodes")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError(f"attack path revisits a node: {self.nodes}")

    @property
    def entry(self) -> str:
        return self.nodes[0]

    @property
    def target(self) -> str:
        return self.nodes[-1]

    @property
    def n_edges(self) -> int:
        return len(self.nodes) - 1


class Classification(IntEnum):
    """Predicted-attack importance tier, totally ordered."""

    VERY_LOW = 1
    LOW = 2
    MEDIUM = 3
    HIGH = 4
    VERY_HIGH = 5


@dataclass(frozen=True)
class PredictionConfig:
    """Co-rated-count thresholds for the classification tiers (x1 > x2 > x3 > x4 >= 0)."""

    x1: int = 4
    x2: int = 2
    x3: int = 1
    x4: int = 0

    def __post_init__(self):
        xs = (self.x1, self.x2, self.x3, self.x4)
        if any(not isinstance(x, int) for x in xs):
            raise ValueError(f"thresholds must be integers, got {xs}")
        if not (self.x1 > self.x2 > self.x3 > self.x4 >= 0):
            raise ValueError(
                "thresholds must be strictly descending with x4 >= 0 "
                f"(x1 > x2 > x3 > x4 >= 0), got x1={self.x1} x2={self.x2} "
                f"x3={self.x3} x4={self.x4}"
            )


@dataclass(frozen=True)
class Prediction:
    """A classified directed asset pair.

    similarity carries the Pearson value of the pair's shared vulnerability
    scores (0.0 when undefined); degenerate marks values assigned by the
    zero-information / identical-scores rule instead of the correlation
    formula.  co_rated is the exact number of CVEs shared by src and dst.
    """

    src: str
    dst: str
    level: Classification
    similarity: float
    co_rated: int
    degenerate: bool = False

    def __post_init__(self):
        if self.src == self.dst:
            raise ValueError(f"prediction src and dst must differ, got {self.src}")


def validate_model(graph: AssetGraph) -> list[str]:
    """Check every structural invariant of a graph; return one message per violation.

    An empty list means the model is valid.  Violations are data, not
    failures: this never raises for bad model content.
    """
    violations: list[str] = []

    seen_ids: set[str] = set()
    for a in graph.assets:
        if a.id in seen_ids:
            violations.append(f"duplicate asset id {a.id}")
        seen_ids.add(a.id)
    ids = {a.id for a in graph.assets}

    for a in graph.assets:
        if a.host is not None:
            host = graph.asset_by_id.get(a.host)
            if host is None:
                violations.append(f"asset {a.id} hosted on missing asset {a.host}")
            elif host.kind is not AssetKind.HARDWARE:
                violations.append(
                    f"asset {a.id} hosted on non-hardware asset {a.host}"
                )

    seen_pairs: set[tuple[str, str]] = set()
    for v in graph.vulnerabilities:
        if v.asset not in ids:
            violations.append(f"vulnerability {v.cve_id} references missing asset {v.asset}")
        if not 0.0 <= v.score <= 10.0:
            violations.append(
                f"vulnerability {v.cve_id} on {v.asset} has score {v.score} outside [0, 10]"
            )
        if v.required_location not in (1, 2, 3):
            violations.append(
                f"vulnerability {v.cve_id} on {v.asset} has required_location "
                f"{v.required_location} outside {{1,2,3}}"
            )
        if v.required_capability not in (1, 2, 3):
            violations.append(
                f"vulnerability {v.cve_id} on {v.asset} has required_capability "
                f"{v.required_capability} outside {{1,2,3}}"
            )
        key = (v.cve_id, v.asset)
        if key in seen_pairs:
            violations.append(f"duplicate vulnerability instance {v.cve_id} on {v.asset}")
        seen_pairs.add(key)

    for src, dst in graph.edges:
        if src == dst:
            violations.append(f"self-loop edge on asset {src}")
        for endpoint in (src, dst):
            if endpoint not in ids:
                violations.append(f"edge references missing asset {endpoint}")

    return violations
