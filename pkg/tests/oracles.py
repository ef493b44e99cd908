"""Independent reference implementations used to cross-check the engines.

Everything here is deliberately written the slow, obvious way (plain
loops, recursion, permutation tests) and shares no code with the package
internals.
"""

from __future__ import annotations

import itertools


def pearson_reference(xs, ys):
    """Textbook Pearson correlation over two equal-length sequences."""
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    dx = sum((x - mx) ** 2 for x in xs) ** 0.5
    dy = sum((y - my) ** 2 for y in ys) ** 0.5
    return num / (dx * dy)


def simple_paths_recursive(adj, src, dst, max_edges):
    """Simple src->dst paths with at most max_edges edges, by recursion."""
    out = []

    def walk(node, path):
        if node == dst:
            out.append(tuple(path))
            return
        if len(path) - 1 >= max_edges:
            return
        for nxt in sorted(adj.get(node, ())):
            if nxt in path:
                continue
            path.append(nxt)
            walk(nxt, path)
            path.pop()

    if src != dst:
        walk(src, [src])
    return out


def simple_paths_by_permutation(nodes, edges, src, dst, max_edges):
    """Test every candidate node sequence directly against the edge set.

    Exponential; keep node counts small.
    """
    found = []
    for k in range(2, min(len(nodes), max_edges + 1) + 1):
        for seq in itertools.permutations(nodes, k):
            if seq[0] != src or seq[-1] != dst:
                continue
            if all((a, b) in edges for a, b in zip(seq, seq[1:])):
                found.append(seq)
    return found


def discover_reference(adj, vulns_of, entries, targets, attacker, allowed, max_edges):
    """Eligibility guard plus per-pair recursive enumeration, merged as a set.

    vulns_of maps asset id -> iterable of (vuln_type, required_location,
    required_capability); attacker is (location, capability).
    """
    loc, cap = attacker
    paths = set()
    for e in sorted(entries):
        ok = any(
            loc >= rl and cap >= rc and vt in allowed
            for vt, rl, rc in vulns_of.get(e, ())
        )
        if not ok:
            continue
        for t in sorted(targets):
            if t == e:
                continue
            paths.update(simple_paths_recursive(adj, e, t, max_edges))
    return paths


def classify_reference(n, types_agree, x1, x2, x3, x4):
    """Literal transcription of the tier rules."""
    if n >= x1 and types_agree:
        return "very high"
    if x1 > n >= x2 and types_agree:
        return "high"
    if x2 > n >= x3:
        return "medium"
    if x3 > n >= x4:
        return "low"
    return "very low"


def predict_reference(shared, agree, path_pairs, x1, x2, x3, x4):
    """Classify then rearrange every ordered pair, the slow way.

    shared maps unordered frozenset pairs -> co-rated count; agree maps the
    same keys -> type agreement; path_pairs is a set of (entry, target).
    Returns {(src, dst): tier string}.
    """
    out = {}
    for key, n in shared.items():
        if n < 1:
            continue
        a, b = sorted(key)
        for src, dst in ((a, b), (b, a)):
            tier = classify_reference(n, agree[key], x1, x2, x3, x4)
            if (src, dst) in path_pairs:
                tier = "very high"
            elif tier == "very high":
                tier = "high"
            out[(src, dst)] = tier
    return out
