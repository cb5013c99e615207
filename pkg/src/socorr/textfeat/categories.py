"""Category lexicon parsing and token counting with prefix wildcards."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping, Sequence


class CategoryLexicon:
    """Named categories of token patterns.

    A pattern is either a literal token or a prefix ending in '*'. A token
    belongs to a category when it equals a literal pattern or starts with a
    prefix pattern (empty suffix allowed); each token counts at most once
    per category. Patterns are stored case-folded.
    """

    def __init__(self, categories: Mapping[str, Iterable[str]]):
        cleaned: dict[str, tuple[str, ...]] = {}
        for name, patterns in categories.items():
            if not name or not name.strip():
                raise ValueError("category name must be non-empty")
            if name in cleaned:
                raise ValueError(f"duplicate category {name!r}")
            normalized = []
            for pattern in patterns:
                folded = pattern.casefold()
                stem = folded[:-1] if folded.endswith("*") else folded
                if not stem:
                    raise ValueError(f"empty pattern in category {name!r}")
                if "*" in stem:
                    raise ValueError(f"'*' only allowed in final position: {pattern!r}")
                normalized.append(folded)
            cleaned[name] = tuple(normalized)
        self.categories: dict[str, tuple[str, ...]] = cleaned
        self._exact: dict[str, set[str]] = {}
        self._prefixes: list[tuple[str, str]] = []
        for name, patterns in cleaned.items():
            for pattern in patterns:
                if pattern.endswith("*"):
                    self._prefixes.append((pattern[:-1], name))
                else:
                    self._exact.setdefault(pattern, set()).add(name)
        self._cache: dict[str, frozenset[str]] = {}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.categories)

    def match(self, token: str) -> frozenset[str]:
        """Categories the token belongs to (token matched as given)."""
        hit = self._cache.get(token)
        if hit is not None:
            return hit
        names = set(self._exact.get(token, ()))
        for prefix, name in self._prefixes:
            if token.startswith(prefix):
                names.add(name)
        result = frozenset(names)
        self._cache[token] = result
        return result


def load_category_lexicon(path: str | Path) -> CategoryLexicon:
    """Parse a lexicon file of "[category]" headers and one pattern per line."""
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                name = line[1:-1].strip()
                if not name:
                    raise ValueError(f"{path}:{line_no}: empty category header")
                if name in sections:
                    raise ValueError(f"{path}:{line_no}: duplicate category {name!r}")
                current = sections.setdefault(name, [])
                continue
            if current is None:
                raise ValueError(f"{path}:{line_no}: pattern before any [category] header")
            current.append(line)
    return CategoryLexicon(sections)


def category_counts(tokens: Sequence[str], lexicon: CategoryLexicon) -> dict[str, int]:
    """Count tokens per category; every lexicon category appears in the result.

    Callers are expected to case-fold tokens beforehand (patterns are stored
    case-folded); tokens are matched exactly as given.
    """
    counts = dict.fromkeys(lexicon.names, 0)
    for token in tokens:
        for name in lexicon.match(token):
            counts[name] += 1
    return counts
