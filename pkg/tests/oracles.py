"""Reference implementations used to cross-check the library.

Everything here is deliberately naive: quadratic scans, try-every-value
h-index, plain JSON records. Slow and obviously correct beats fast and
shared with the code under test.
"""

from __future__ import annotations

import json


def brute_h(counts) -> int:
    """Try every candidate h from 0 upward; keep the largest that qualifies."""
    values = list(counts)
    best = 0
    for h in range(len(values) + 1):
        if sum(1 for value in values if value >= h) >= h:
            best = h
    return best


def author_aggregates_from_jsonl(text: str) -> dict[str, dict[str, int]]:
    """Recompute every author's (cd, c, sc, h, h_star) from serialized JSONL.

    Self-citations follow the author-set intersection rule. The filtered h
    (h_star) is the brute h over per-paper counts with self-citations
    removed, which is the h-index of the graph with self-citation edges
    deleted.
    """
    papers = [json.loads(line) for line in text.splitlines() if line.strip()]
    by_id = {paper["id"]: paper for paper in papers}
    incoming: dict[str, list[str]] = {pid: [] for pid in by_id}
    for paper in papers:
        for ref in paper.get("refs", []):
            if ref in by_id and ref != paper["id"]:
                incoming[ref].append(paper["id"])
    owners: dict[str, list[dict]] = {}
    for paper in papers:
        for author in dict.fromkeys(paper["authors"]):
            owners.setdefault(author, []).append(paper)
    result: dict[str, dict[str, int]] = {}
    for author, owned in owners.items():
        gross: list[int] = []
        net: list[int] = []
        for target in owned:
            citers = incoming[target["id"]]
            self_edges = sum(
                1
                for citing_id in citers
                if set(by_id[citing_id]["authors"]) & set(target["authors"])
            )
            gross.append(len(citers))
            net.append(len(citers) - self_edges)
        result[author] = {
            "cd": len(owned),
            "c": sum(gross),
            "sc": sum(gross) - sum(net),
            "h": brute_h(gross),
            "h_star": brute_h(net),
        }
    return result
