"""Surface-pattern politeness and impoliteness strategy counting.

Strategies follow the requests-corpus inventory restricted to what token
patterns can detect without parsing. Multi-word and sentence-initial
patterns are matched first and consume their tokens, longest first, so
"thank you" does not additionally fire the second-person strategy; the
remaining single-token strategies only see unconsumed tokens.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tokens import sentence_split, tokenize, is_word_token

POSITIVE_STRATEGIES: tuple[str, ...] = (
    "gratitude",
    "deference",
    "greeting",
    "please",
    "counterfactual_modal",
    "hedge",
    "apology",
    "first_person_plural",
    "positive_lexicon",
)
NEGATIVE_STRATEGIES: tuple[str, ...] = (
    "please_start",
    "direct_question",
    "direct_start",
    "second_person",
    "second_person_start",
    "factuality",
    "negative_lexicon",
)

# phrase -> strategy; matched anywhere in a sentence, longest first
_PHRASES: tuple[tuple[tuple[str, ...], str], ...] = (
    (("the", "truth", "is"), "factuality"),
    (("the", "reality", "is"), "factuality"),
    (("thank", "you"), "gratitude"),
    (("i", "apologize"), "apology"),
    (("could", "you"), "counterfactual_modal"),
    (("would", "you"), "counterfactual_modal"),
    (("in", "fact"), "factuality"),
    (("i", "think"), "hedge"),
    (("i", "believe"), "hedge"),
    (("i", "guess"), "hedge"),
)

_DEFERENCE_OPENERS = frozenset({"great", "good", "nice", "interesting"})
_GREETINGS = frozenset({"hi", "hello", "hey"})
_QUESTION_OPENERS = frozenset({"what", "why", "who", "how"})
_DIRECT_OPENERS = frozenset({"so", "then", "and", "but", "or"})
_SECOND_PERSON = frozenset({"you", "your", "yours", "yourself", "yourselves"})
_FIRST_PLURAL = frozenset({"we", "our", "us", "ours", "ourselves"})
_GRATITUDE_WORDS = frozenset({"thank", "thanks", "appreciate"})
_APOLOGY_WORDS = frozenset({"sorry", "oops", "apologize", "apologies"})
_FACTUALITY_WORDS = frozenset({"actually"})

HEDGE_WORDS = frozenset(
    """
    maybe perhaps possibly probably likely apparently presumably arguably
    seemingly somewhat roughly supposedly allegedly usually often sometimes
    generally might may could seems seem appears appear suggest suggests
    suspect
    """.split()
)

POSITIVE_WORDS = frozenset(
    """
    good great nice excellent wonderful amazing awesome fantastic helpful
    love loved lovely well right correct true agree agreed best better kind
    smart brilliant perfect beautiful glad happy interesting insightful
    useful valuable fair honest respectful friendly safe supportive
    encouraging clear accurate reasonable thoughtful generous
    """.split()
)

NEGATIVE_WORDS = frozenset(
    """
    bad wrong false terrible awful horrible worst worse stupid dumb idiot
    idiotic fool foolish ridiculous absurd nonsense garbage trash lie lies
    lying liar fake fraud scam shame shameful disgusting pathetic ignorant
    hate hateful toxic misleading hoax propaganda dishonest corrupt evil
    dangerous harmful reckless lazy useless clueless delusional
    """.split()
)


@dataclass(frozen=True)
class PolitenessProfile:
    strategy_counts: dict[str, int] = field(default_factory=dict)
    politeness_score: int = 0
    impoliteness_score: int = 0


def _classify_token(token: str, initial: bool) -> str | None:
    if token == "please":
        return "please_start" if initial else "please"
    if initial and token in _GREETINGS:
        return "greeting"
    if initial and token in _QUESTION_OPENERS:
        return "direct_question"
    if initial and token in _DIRECT_OPENERS:
        return "direct_start"
    if token in _SECOND_PERSON:
        return "second_person_start" if initial else "second_person"
    if token in _GRATITUDE_WORDS:
        return "gratitude"
    if token in _APOLOGY_WORDS:
        return "apology"
    if token in _FACTUALITY_WORDS:
        return "factuality"
    if token in _FIRST_PLURAL:
        return "first_person_plural"
    if token in HEDGE_WORDS:
        return "hedge"
    if token in POSITIVE_WORDS:
        return "positive_lexicon"
    if token in NEGATIVE_WORDS:
        return "negative_lexicon"
    return None


def politeness_profile(text: str) -> PolitenessProfile:
    """Count strategy instances over the sentences of a text."""
    counts = dict.fromkeys(POSITIVE_STRATEGIES + NEGATIVE_STRATEGIES, 0)
    for sentence in sentence_split(text):
        tokens = [t.casefold() for t in tokenize(sentence) if is_word_token(t)]
        if not tokens:
            continue
        consumed = [False] * len(tokens)

        if (
            len(tokens) >= 2
            and tokens[0] in _DEFERENCE_OPENERS
            and tokens[1] == "point"
        ):
            counts["deference"] += 1
            consumed[0] = consumed[1] = True

        for phrase, strategy in _PHRASES:
            width = len(phrase)
            i = 0
            while i + width <= len(tokens):
                window = tuple(tokens[i : i + width])
                if window == phrase and not any(consumed[i : i + width]):
                    counts[strategy] += 1
                    for j in range(i, i + width):
                        consumed[j] = True
                    i += width
                else:
                    i += 1

        for i, token in enumerate(tokens):
            if consumed[i]:
                continue
            strategy = _classify_token(token, initial=(i == 0))
            if strategy is not None:
                counts[strategy] += 1

    politeness = sum(counts[s] for s in POSITIVE_STRATEGIES)
    impoliteness = sum(counts[s] for s in NEGATIVE_STRATEGIES)
    return PolitenessProfile(counts, politeness, impoliteness)
