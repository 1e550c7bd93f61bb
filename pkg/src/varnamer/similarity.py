"""Structural, literal and context similarity between statement-level nodes."""

from __future__ import annotations

from typing import Union

from .syntax import Node, node_kind_multiset


def levenshtein(a: str, b: str) -> int:
    """Edit distance with unit-cost insert, delete and substitute."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def normalized_similarity(a: str, b: str) -> float:
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest


def _statement_text(x: Union[Node, str]) -> str:
    return (x.text if isinstance(x, Node) else x).strip()


def literal_similarity(a: Union[Node, str], b: Union[Node, str]) -> float:
    """1 - normalized edit distance between the raw statement texts."""
    return normalized_similarity(_statement_text(a), _statement_text(b))


def structural_similarity(a: Node, b: Node) -> float:
    """Dice coefficient over the descendant node-kind multisets of ``a`` and ``b``."""
    ma, mb = node_kind_multiset(a), node_kind_multiset(b)
    total = sum(ma.values()) + sum(mb.values())
    if total == 0:
        return 1.0
    common = sum((ma & mb).values())
    return 2.0 * common / total


def context_similarity(a: Node, b: Node) -> float:
    return 0.5 * structural_similarity(a, b) + 0.5 * literal_similarity(a, b)
