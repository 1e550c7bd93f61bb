"""FP-growth frequent itemset mining and association rule generation."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Optional


class _FPNode:
    __slots__ = ("item", "count", "parent", "children", "link")

    def __init__(self, item, parent):
        self.item = item
        self.count = 0
        self.parent = parent
        self.children: dict = {}
        self.link: Optional[_FPNode] = None


class FPTree:
    """Prefix tree of transactions with items ordered by descending support."""

    def __init__(self, transactions: Iterable[tuple[Iterable[Hashable], int]], min_support: int):
        transactions = [(frozenset(items), count) for items, count in transactions]
        support: dict = defaultdict(int)
        for items, count in transactions:
            for item in items:
                support[item] += count
        self.support = {i: s for i, s in support.items() if s >= min_support}
        # ties broken on repr so mixed item types still sort deterministically
        self.order = {item: rank for rank, item in enumerate(
            sorted(self.support, key=lambda i: (-self.support[i], repr(i))))}
        self.root = _FPNode(None, None)
        self.heads: dict = {}
        self._tails: dict = {}
        for items, count in transactions:
            path = sorted((i for i in items if i in self.order), key=self.order.__getitem__)
            self._insert(path, count)

    def _insert(self, path, count):
        node = self.root
        for item in path:
            child = node.children.get(item)
            if child is None:
                child = _FPNode(item, node)
                node.children[item] = child
                if item in self._tails:
                    self._tails[item].link = child
                else:
                    self.heads[item] = child
                self._tails[item] = child
            child.count += count
            node = child

    def nodes(self, item):
        node = self.heads.get(item)
        while node is not None:
            yield node
            node = node.link

    def prefix_paths(self, item):
        for node in self.nodes(item):
            path = []
            parent = node.parent
            while parent is not None and parent.item is not None:
                path.append(parent.item)
                parent = parent.parent
            if path:
                yield path, node.count


def _grow(tree: FPTree, suffix: frozenset, min_support: int, out: dict) -> None:
    for item in sorted(tree.support, key=lambda i: (tree.support[i], repr(i))):
        itemset = suffix | {item}
        out[itemset] = tree.support[item]
        conditional = FPTree(tree.prefix_paths(item), min_support)
        if conditional.support:
            _grow(conditional, itemset, min_support, out)


def fp_growth(transactions: Iterable[Iterable[Hashable]], min_support: int) -> dict[frozenset, int]:
    """All itemsets contained in at least ``min_support`` transactions.

    Items within a transaction are treated as a set. The returned dict iterates
    in descending support, then lexicographic order of the sorted items.
    """
    if min_support < 1:
        raise ValueError("min_support must be >= 1")
    tree = FPTree(((t, 1) for t in transactions), min_support)
    found: dict[frozenset, int] = {}
    _grow(tree, frozenset(), min_support, found)
    ordered = sorted(found.items(), key=lambda kv: (-kv[1], sorted(map(repr, kv[0]))))
    return dict(ordered)


@dataclass(frozen=True)
class AssociationRule:
    antecedent: frozenset
    consequent: frozenset
    support: int
    confidence: float


def generate_association_rules(
    itemsets: dict[frozenset, int],
    min_confidence: float,
    consequent_filter: Optional[Callable[[frozenset], bool]] = None,
) -> list[AssociationRule]:
    """Rules ``X => Y`` over the frequent itemsets with confidence >= ``min_confidence``.

    ``consequent_filter`` restricts which right-hand sides are considered;
    without it every non-empty proper split of every itemset is tried.
    """
    rules = []
    for itemset, support in itemsets.items():
        if len(itemset) < 2:
            continue
        items = sorted(itemset, key=repr)
        for r in range(1, len(items)):
            for rhs in combinations(items, r):
                consequent = frozenset(rhs)
                if consequent_filter is not None and not consequent_filter(consequent):
                    continue
                antecedent = itemset - consequent
                confidence = support / itemsets[antecedent]
                if confidence >= min_confidence:
                    rules.append(AssociationRule(antecedent, consequent, support, confidence))
    rules.sort(key=lambda r: (-r.confidence, -r.support, sorted(map(repr, r.antecedent)),
                              sorted(map(repr, r.consequent))))
    return rules
