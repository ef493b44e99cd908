"""Pearson-correlation similarity between assets over shared vulnerability scores.

Assets play the role of users and CVEs the role of items: the score a CVE
carries on an asset is that asset's "rating" of it.  Similarity between
two assets is the Pearson correlation of their scores over the CVEs both
carry, with each asset's mean taken over that common set only.

Two fallback rules cover inputs the correlation formula cannot grade:

* identical score vectors mean perfect agreement and score 1.0 (shared
  CVEs usually carry the same score on both assets, so this is the common
  case in practice);
* a constant score vector on either side carries no co-variation
  information, so unequal inputs score 0.0.

Both fallbacks are flagged as degenerate in the results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from attackcf.model import AssetGraph


class UndefinedSimilarityError(ValueError):
    """Raised when fewer than two co-rated scores are supplied."""


@dataclass(frozen=True)
class PairSimilarity:
    """Similarity of an unordered asset pair.

    value is in [-1, 1]; co_rated counts the CVEs the pair shares;
    degenerate marks values assigned by a fallback rule rather than the
    correlation formula (including the single-common-CVE placeholder 0.0).
    """

    a: str
    b: str
    value: float
    co_rated: int
    degenerate: bool


def common_vulnerabilities(
    a: str, b: str, graph: AssetGraph
) -> list[tuple[str, float, float]]:
    """CVEs present on both assets with each side's score, sorted by CVE id."""
    if a == b:
        raise ValueError(f"assets must differ, got {a!r} for both")
    scores_a = {v.cve_id: v.score for v in graph.vulns_by_asset.get(a, ())}
    scores_b = {v.cve_id: v.score for v in graph.vulns_by_asset.get(b, ())}
    shared = sorted(scores_a.keys() & scores_b.keys())
    return [(cve, scores_a[cve], scores_b[cve]) for cve in shared]


def pcc(pairs: Sequence[tuple[float, float]]) -> tuple[float, bool]:
    """Pearson correlation of co-rated score pairs.

    Returns (value, degenerate).  Means are per-side means over the
    supplied pairs.  Raises UndefinedSimilarityError for fewer than two
    pairs; applies the degenerate fallbacks for constant or identical
    vectors (see module docstring).
    """
    if len(pairs) < 2:
        raise UndefinedSimilarityError(
            f"correlation needs at least 2 co-rated scores, got {len(pairs)}"
        )
    xs = np.asarray([p[0] for p in pairs], dtype=np.float64)
    ys = np.asarray([p[1] for p in pairs], dtype=np.float64)

    if np.array_equal(xs, ys):
        return 1.0, True
    if (xs == xs[0]).all() or (ys == ys[0]).all():
        return 0.0, True

    dx = xs - xs.mean()
    dy = ys - ys.mean()
    value = float((dx * dy).sum() / np.sqrt((dx * dx).sum() * (dy * dy).sum()))
    # guard against eps-scale overshoot of the mathematical bound
    return min(1.0, max(-1.0, value)), False


def similarity_matrix(graph: AssetGraph) -> list[PairSimilarity]:
    """Similarity for every unordered asset pair sharing at least one CVE.

    Pairs sharing exactly one CVE have no defined correlation; they are
    kept with value 0.0 so the shared vulnerability stays visible.
    Output is sorted by (a, b).
    """
    out: list[PairSimilarity] = []
    ids = sorted(graph.vulns_by_asset.keys() & graph.asset_by_id.keys())
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            shared = common_vulnerabilities(a, b, graph)
            if not shared:
                continue
            if len(shared) == 1:
                value, degenerate = 0.0, False
            else:
                value, degenerate = pcc([(sa, sb) for _, sa, sb in shared])
            out.append(
                PairSimilarity(
                    a=a, b=b, value=value, co_rated=len(shared), degenerate=degenerate
                )
            )
    return out
