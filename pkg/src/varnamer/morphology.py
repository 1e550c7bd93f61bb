"""Suffix-table singularization for English plural sub-tokens."""

from __future__ import annotations

from typing import Optional

# Singular words that already end in "s"; their plurals add "es".
_S_FINAL_STEMS = frozenset({
    "alias", "atlas", "bias", "canvas", "gas", "status", "bus", "virus", "bonus", "focus",
    "campus", "corpus", "census", "radius", "plus", "minus", "lens", "apparatus", "prospectus",
})

# Tokens ending in "s" that must be left alone.
_INVARIANT = frozenset({
    "series", "species", "news", "means", "physics", "mathematics", "always", "its", "this",
    "has", "was", "does", "yes", "less", "unless", "across", "thus", "perhaps", "whereas",
    "analytics", "gps", "https", "dns", "aws",
    "jms", "cms", "sms",
}) | _S_FINAL_STEMS

# "-ies" words whose singular ends in "ie", not "y".
_IE_WORDS = frozenset({"movies", "cookies", "zombies", "calories", "selfies", "pies", "lies",
                       "ties", "dies", "hippies", "goalies", "rookies"})


def plural_marker(word: str) -> Optional[str]:
    """``"es"`` or ``"s"`` naming the plural suffix of ``word``; None if not a plural."""
    w = word.lower()
    if len(w) < 3 or not w.endswith("s") or w in _INVARIANT:
        return None
    if w.endswith(("ss", "us", "is")):
        return None
    if w.endswith("ies"):
        return "s" if w in _IE_WORDS or len(w) <= 4 else "es"
    if w.endswith("ses"):
        stem = w[:-2]
        return "es" if stem.endswith("ss") or stem in _S_FINAL_STEMS else "s"
    if w.endswith(("xes", "shes", "zzes")):
        return "es"
    if w.endswith("ches"):
        return "s" if w.endswith("aches") else "es"
    return "s"


def singularize(word: str) -> str:
    """Singular form of a plural sub-token; anything else comes back unchanged.

    >>> singularize("aliases"), singularize("features"), singularize("status")
    ('alias', 'feature', 'status')
    """
    marker = plural_marker(word)
    if marker is None:
        return word
    if marker == "s":
        return word[:-1]
    if word.lower().endswith("ies"):
        return word[:-3] + "y"
    if word.lower().endswith("zzes"):
        return word[:-3]
    return word[:-2]
