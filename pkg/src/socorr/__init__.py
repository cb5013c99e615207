"""Social-correction analysis toolkit.

Labels misinformation posts by counter-reply share, characterizes countered
versus uncountered posts across linguistic and account attributes, and trains
predictive models over those attributes plus hashed text vectors.
"""

from __future__ import annotations

from importlib import resources

from .attributes import (
    ENGAGEMENT_ATTRIBUTES,
    LENGTH_SENTIMENT_ATTRIBUTES,
    MODEL_INELIGIBLE,
    POLITENESS_ATTRIBUTES,
    POSTER_ATTRIBUTES,
    UNSCALED_ATTRIBUTES,
    attribute_names,
    attribute_values,
    category_attribute,
    family_counts,
    featurize_corpus,
)
from .corpus import (
    Corpus,
    CorpusError,
    DEFAULT_KEYWORDS,
    DEFAULT_MIN_REPLIES,
    DEFAULT_TOP_FRACTION,
    HistoryPost,
    PosterProfile,
    ReplyRecord,
    TweetRecord,
    counter_proportion,
    filter_for_analysis,
    format_timestamp,
    keyword_match,
    label_countered,
    load_corpus,
    parse_timestamp,
    save_corpus,
)
from .signals import EngagementFeatures, PosterFeatures, engagement_features, poster_features, user_ari
from .stats import (
    ConfidenceInterval,
    DegenerateSampleError,
    WelchResult,
    cohen_d,
    mean_ci95,
    student_t_two_sided_p,
    welch_t,
)
from .strata import (
    AttributeComparison,
    DEFAULT_STRATA,
    Group,
    InequalityReport,
    StrataPartition,
    StratumReport,
    StratumSpec,
    StratumTooSmall,
    TrendUndefined,
    compare_attribute,
    group_partition,
    inequality_trend,
    quantile,
    significant_attributes,
)
from .textfeat import (
    CategoryLexicon,
    LinguisticFeatures,
    PolitenessProfile,
    SentimentScores,
    UndefinedReadability,
    ari,
    category_counts,
    linguistic_features,
    load_category_lexicon,
    load_valence_lexicon,
    politeness_profile,
    sentence_split,
    tokenize,
    vader_scores,
    word_tokens,
)

__version__ = "0.1.0"


def default_valence_lexicon() -> dict[str, float]:
    """Load the valence lexicon bundled with the package."""
    path = resources.files(__name__) / "data" / "valence.tsv"
    with resources.as_file(path) as real:
        return load_valence_lexicon(real)


def default_category_lexicon() -> CategoryLexicon:
    """Load the category lexicon bundled with the package."""
    path = resources.files(__name__) / "data" / "categories.txt"
    with resources.as_file(path) as real:
        return load_category_lexicon(real)
