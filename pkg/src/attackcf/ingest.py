"""File ingestion and serialization for asset models and run configuration.

Formats are comma-separated UTF-8 text with a header line:

    assets.csv  id,name,kind,host
    vulns.csv   cve_id,asset_id,score,cwe_id,vuln_type,required_location,required_capability
    edges.csv   src,dst

The config file is flat key=value text (lists comma-separated, # comments
allowed).  Recognised keys: entry_points, target_points, attacker_location,
attacker_capability, propagation_length, allowed_types, x1, x2, x3, x4.
Unknown keys are rejected.

Vulnerability requirement fields accept plain integers 1-3, or a CVSS
base-vector string in the required_location field (e.g.
"AV:N/AC:L/Au:N/C:C/I:C/A:C"), in which case the location is derived from
the access vector (L/A/N -> 1/2/3), the capability from the access
complexity (L/M/H -> 1/2/3) and the required_capability field must be
left empty.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from attackcf.model import (
    Asset,
    AssetGraph,
    AssetKind,
    AttackerProfile,
    DEFAULT_ALLOWED_TYPES,
    DiscoveryConfig,
    PredictionConfig,
    VulnType,
    VulnerabilityInstance,
)

_VULN_TYPE_TOKENS = {t.value: t for t in VulnType}

_CONFIG_KEYS = frozenset(
    {
        "entry_points",
        "target_points",
        "attacker_location",
        "attacker_capability",
        "propagation_length",
        "allowed_types",
        "x1",
        "x2",
        "x3",
        "x4",
    }
)

_ACCESS_VECTOR = {"L": 1, "A": 2, "N": 3}
_ACCESS_COMPLEXITY = {"L": 1, "M": 2, "H": 3}


class IngestError(ValueError):
    """A file could be read but its content is invalid."""


class ConfigError(IngestError):
    """The configuration file is invalid."""


def _rows(path: Path, n_fields: int, what: str):
    """Yield (line_no, fields) for each data row; the header line is ignored."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        for line_no, row in enumerate(reader, start=1):
            if line_no == 1 or not row:
                continue
            if len(row) != n_fields:
                raise IngestError(
                    f"{path}:{line_no}: {what} row needs {n_fields} fields, got {len(row)}"
                )
            yield line_no, [f.strip() for f in row]


def load_assets(path) -> set[Asset]:
    """Parse an assets file into a set of Asset records."""
    path = Path(path)
    assets: set[Asset] = set()
    seen: set[str] = set()
    for line_no, (aid, name, kind, host) in _rows(path, 4, "asset"):
        if not aid:
            raise IngestError(f"{path}:{line_no}: empty asset id")
        if aid in seen:
            raise IngestError(f"{path}:{line_no}: duplicate asset id {aid}")
        seen.add(aid)
        try:
            kind_val = AssetKind(kind)
        except ValueError:
            raise IngestError(
                f"{path}:{line_no}: field kind must be 'hardware' or 'software', got {kind!r}"
            ) from None
        assets.add(Asset(id=aid, name=name, kind=kind_val, host=host or None))
    return assets


def _parse_requirements(path: Path, line_no: int, loc_field: str, cap_field: str):
    if "AV:" in loc_field:
        metrics = dict(
            part.split(":", 1) for part in loc_field.split("/") if ":" in part
        )
        av = metrics.get("AV", "").upper()
        ac = metrics.get("AC", "").upper()
        if av not in _ACCESS_VECTOR or ac not in _ACCESS_COMPLEXITY:
            raise IngestError(
                f"{path}:{line_no}: CVSS vector {loc_field!r} needs AV in "
                "{L,A,N} and AC in {L,M,H}"
            )
        if cap_field:
            raise IngestError(
                f"{path}:{line_no}: required_capability must be empty when a "
                "CVSS vector supplies both requirements"
            )
        return _ACCESS_VECTOR[av], _ACCESS_COMPLEXITY[ac]
    out = []
    for field_name, raw in (
        ("required_location", loc_field),
        ("required_capability", cap_field),
    ):
        try:
            out.append(int(raw))
        except ValueError:
            raise IngestError(
                f"{path}:{line_no}: field {field_name} must be an integer "
                f"or a CVSS vector, got {raw!r}"
            ) from None
    return out[0], out[1]


def load_vulnerabilities(path, assets: set[Asset]) -> set[VulnerabilityInstance]:
    """Parse a vulnerabilities file; every row must reference a known asset."""
    path = Path(path)
    ids = {a.id for a in assets}
    vulns: set[VulnerabilityInstance] = set()
    for line_no, (cve, aid, score_s, cwe, vtype, loc_s, cap_s) in _rows(
        path, 7, "vulnerability"
    ):
        if aid not in ids:
            raise IngestError(f"{path}:{line_no}: unknown asset {aid} for {cve}")
        try:
            score = float(score_s)
        except ValueError:
            raise IngestError(
                f"{path}:{line_no}: field score must be a decimal, got {score_s!r}"
            ) from None
        if not 0.0 <= score <= 10.0:
            raise IngestError(
                f"{path}:{line_no}: score {score_s} out of range [0, 10]"
            )
        if vtype not in _VULN_TYPE_TOKENS:
            raise IngestError(
                f"{path}:{line_no}: unknown vuln_type {vtype!r}; accepted: "
                + ", ".join(sorted(_VULN_TYPE_TOKENS))
            )
        loc, cap = _parse_requirements(path, line_no, loc_s, cap_s)
        vulns.add(
            VulnerabilityInstance(
                cve_id=cve,
                asset=aid,
                score=score,
                cwe_id=cwe or None,
                vuln_type=_VULN_TYPE_TOKENS[vtype],
                required_location=loc,
                required_capability=cap,
            )
        )
    return vulns


def load_edges(path, assets: set[Asset]) -> set[tuple[str, str]]:
    """Parse an edges file into directed (src, dst) pairs; duplicates collapse."""
    path = Path(path)
    ids = {a.id for a in assets}
    edges: set[tuple[str, str]] = set()
    for line_no, (src, dst) in _rows(path, 2, "edge"):
        if src == dst:
            raise IngestError(f"{path}:{line_no}: self-loop edge on {src}")
        for endpoint in (src, dst):
            if endpoint not in ids:
                raise IngestError(f"{path}:{line_no}: unknown asset {endpoint}")
        edges.add((src, dst))
    return edges


def _parse_int(raw: str, key: str, path: Path) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{path}: key {key} must be an integer, got {raw!r}") from None


def load_config(path) -> tuple[DiscoveryConfig, PredictionConfig]:
    """Parse a key=value config file into discovery and prediction configs."""
    path = Path(path)
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{line_no}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise ConfigError(f"{path}:{line_no}: unknown key {key!r}")
            if key in values:
                raise ConfigError(f"{path}:{line_no}: duplicate key {key!r}")
            values[key] = value.strip()

    for key in ("entry_points", "target_points", "attacker_location",
                "attacker_capability", "propagation_length"):
        if key not in values:
            raise ConfigError(f"{path}: missing required key {key}")

    entries = [t.strip() for t in values["entry_points"].split(",") if t.strip()]
    targets = [t.strip() for t in values["target_points"].split(",") if t.strip()]

    if "allowed_types" in values:
        allowed = set()
        for token in values["allowed_types"].split(","):
            token = token.strip()
            if token not in _VULN_TYPE_TOKENS:
                raise ConfigError(
                    f"{path}: unknown vuln_type {token!r} in allowed_types; "
                    "accepted: " + ", ".join(sorted(_VULN_TYPE_TOKENS))
                )
            allowed.add(_VULN_TYPE_TOKENS[token])
    else:
        allowed = set(DEFAULT_ALLOWED_TYPES)

    try:
        attacker = AttackerProfile(
            location=_parse_int(values["attacker_location"], "attacker_location", path),
            capability=_parse_int(
                values["attacker_capability"], "attacker_capability", path
            ),
        )
        discovery = DiscoveryConfig(
            entry_points=entries,
            target_points=targets,
            attacker=attacker,
            propagation_length=_parse_int(
                values["propagation_length"], "propagation_length", path
            ),
            allowed_types=allowed,
        )
        prediction = PredictionConfig(
            x1=_parse_int(values.get("x1", "4"), "x1", path),
            x2=_parse_int(values.get("x2", "2"), "x2", path),
            x3=_parse_int(values.get("x3", "1"), "x3", path),
            x4=_parse_int(values.get("x4", "0"), "x4", path),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    return discovery, prediction


def load_model(assets_path, vulns_path, edges_path) -> AssetGraph:
    """Load the three model files into an AssetGraph."""
    assets = load_assets(assets_path)
    vulns = load_vulnerabilities(vulns_path, assets)
    edges = load_edges(edges_path, assets)
    return AssetGraph(assets, vulns, edges)


@dataclass(frozen=True)
class ModelBundle:
    """A loaded graph with the configs that drive discovery and prediction."""

    graph: AssetGraph
    discovery: DiscoveryConfig
    prediction: PredictionConfig


def load_bundle(assets_path, vulns_path, edges_path, config_path) -> ModelBundle:
    """Load model and config files, checking that config references resolve."""
    graph = load_model(assets_path, vulns_path, edges_path)
    discovery, prediction = load_config(config_path)
    known = {a.id for a in graph.assets}
    for label, points in (
        ("entry_points", discovery.entry_points),
        ("target_points", discovery.target_points),
    ):
        missing = sorted(points - known)
        if missing:
            raise ConfigError(
                f"{config_path}: {label} reference unknown assets: {', '.join(missing)}"
            )
    return ModelBundle(graph=graph, discovery=discovery, prediction=prediction)


def _write_csv(path, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def save_assets(path, assets) -> None:
    ordered = sorted(assets, key=Asset._sort_key)
    _write_csv(
        path,
        ["id", "name", "kind", "host"],
        [[a.id, a.name, a.kind.value, a.host or ""] for a in ordered],
    )


def save_vulnerabilities(path, vulns) -> None:
    ordered = sorted(vulns, key=VulnerabilityInstance._sort_key)
    _write_csv(
        path,
        ["cve_id", "asset_id", "score", "cwe_id", "vuln_type",
         "required_location", "required_capability"],
        [
            [v.cve_id, v.asset, repr(v.score), v.cwe_id or "", v.vuln_type.value,
             v.required_location, v.required_capability]
            for v in ordered
        ],
    )


def save_edges(path, edges) -> None:
    _write_csv(path, ["src", "dst"], [list(e) for e in sorted(edges)])
