"""Rule-based sentiment scoring in the VADER style.

Implements the rule subset used for the tweet attributes: lexicon valence
lookup, all-caps emphasis in mixed-case text, single-word boosters and
dampeners, negation within a three-token lookback, and exclamation-mark
amplification. Idioms, "least"/"kind of" constructions, question marks and
the but-clause reweighting are intentionally out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .tokens import tokenize, is_word_token

CAPS_EMPHASIS = 0.733
BOOSTER_STEP = 0.293
NEGATION_SCALAR = -0.74
EXCLAIM_STEP = 0.292
MAX_EXCLAIM = 3
NORMALIZATION_ALPHA = 15.0
NEGATION_LOOKBACK = 3
VALENCE_MIN, VALENCE_MAX = -4.0, 4.0

NEGATORS = frozenset(
    """
    aint arent cant cannot couldnt darent didnt doesnt dont hasnt havent
    isnt mightnt mustnt neednt neither never no nobody none nope nor not
    nothing nowhere oughtnt shant shouldnt wasnt werent wont wouldnt
    ain't aren't can't couldn't daren't didn't doesn't don't hasn't haven't
    isn't mightn't mustn't needn't oughtn't shan't shouldn't wasn't weren't
    won't wouldn't rarely seldom despite without
    """.split()
)

# word -> signed step; positive entries intensify, negative entries dampen
BOOSTERS: dict[str, float] = {
    word: BOOSTER_STEP
    for word in """
    absolutely amazingly awfully completely considerably decidedly deeply
    enormously entirely especially exceptionally extremely fabulously
    fully greatly highly hugely incredibly intensely majorly more most
    particularly purely quite really remarkably so substantially
    thoroughly totally tremendously unbelievably unusually utterly very
    """.split()
}
BOOSTERS.update(
    {
        word: -BOOSTER_STEP
        for word in """
        almost barely hardly kinda less little marginally occasionally
        partly scarcely slightly somewhat sorta
        """.split()
    }
)


@dataclass(frozen=True)
class SentimentScores:
    positive: float
    negative: float
    neutral: float
    compound: float


ZERO_SENTIMENT = SentimentScores(0.0, 0.0, 0.0, 0.0)


def load_valence_lexicon(path: str | Path) -> dict[str, float]:
    """Read a token<TAB>valence file into a case-folded lookup table."""
    lexicon: dict[str, float] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{line_no}: expected token<TAB>valence")
            token, value_text = parts
            try:
                value = float(value_text)
            except ValueError as exc:
                raise ValueError(f"{path}:{line_no}: bad valence {value_text!r}") from exc
            if not VALENCE_MIN <= value <= VALENCE_MAX:
                raise ValueError(f"{path}:{line_no}: valence {value} outside [-4, 4]")
            lexicon[token.casefold()] = value
    return lexicon


def normalize_valence(total: float) -> float:
    """Map a summed valence onto [-1, 1]; monotone in the sum."""
    value = total / math.sqrt(total * total + NORMALIZATION_ALPHA)
    return max(-1.0, min(1.0, value))


def _mixed_case(tokens: list[str]) -> bool:
    caps = [t.isupper() for t in tokens]
    return any(caps) and not all(caps)


def vader_scores(text: str, valence_lexicon: dict[str, float]) -> SentimentScores:
    """Score a text against a valence lexicon with the documented rule subset.

    Unknown tokens contribute zero valence. Punctuation-only tokens are
    excluded from scoring; exclamation marks act through the amplifier
    instead. Empty input yields all-zero scores.
    """
    tokens = [t for t in tokenize(text) if is_word_token(t)]
    if not tokens:
        return ZERO_SENTIMENT
    mixed = _mixed_case(tokens)

    valences: list[float] = []
    for i, token in enumerate(tokens):
        folded = token.casefold()
        base = valence_lexicon.get(folded)
        if base is None:
            valences.append(0.0)
            continue
        value = base
        if mixed and token.isupper():
            value += math.copysign(CAPS_EMPHASIS, value) if value else 0.0
        negated = False
        for back in range(1, NEGATION_LOOKBACK + 1):
            j = i - back
            if j < 0:
                break
            prev = tokens[j].casefold()
            if prev in valence_lexicon:
                continue
            step = BOOSTERS.get(prev)
            if step is not None and value:
                value += step if value > 0 else -step
            if prev in NEGATORS:
                negated = True
        if negated:
            value *= NEGATION_SCALAR
        valences.append(value)

    exclaim = min(text.count("!"), MAX_EXCLAIM) * EXCLAIM_STEP
    total = sum(valences)
    if total > 0:
        total += exclaim
    elif total < 0:
        total -= exclaim

    pos_mass = sum(v + 1.0 for v in valences if v > 0)
    neg_mass = sum(v - 1.0 for v in valences if v < 0)
    neu_count = float(sum(1 for v in valences if v == 0))
    if pos_mass > abs(neg_mass):
        pos_mass += exclaim
    elif pos_mass < abs(neg_mass):
        neg_mass -= exclaim
    denominator = pos_mass + abs(neg_mass) + neu_count
    if denominator == 0:
        return ZERO_SENTIMENT
    return SentimentScores(
        positive=pos_mass / denominator,
        negative=abs(neg_mass) / denominator,
        neutral=neu_count / denominator,
        compound=normalize_valence(total),
    )
