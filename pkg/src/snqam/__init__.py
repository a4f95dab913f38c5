"""Quality scoring for short social-network news posts.

The pipeline: lexicon-driven annotation -> 44 basic features -> 8 facet
scores -> a calibrated weighted-sum quality model served over library,
CLI, and HTTP surfaces.
"""

from .annotate import AnnotatedText, StructuralMarkers, Token, annotate, strip_structure, tokenize
from .corpus import (
    Engagement,
    FilterConfig,
    PeriodBucket,
    PeriodSeries,
    Post,
    bucket_by_period,
    filter_corpus,
    parse_corpus,
    quality_of,
)
from .errors import (
    CalibrationError,
    ConstantInputError,
    CorpusError,
    ForestError,
    LexiconError,
    ModelChecksumError,
    ModelError,
    ModelSchemaError,
    ModelVersionError,
    SnqamError,
    StatsError,
)
from .features import (
    FACET_MEMBERS,
    FACET_NAMES,
    FEATURE_NAMES,
    FacetScores,
    FeatureVector,
    PostMeta,
    compute_facets,
    extract_features,
    facet_names,
    feature_names,
)
from .forest import (
    CvReport,
    Dataset,
    ForestConfig,
    ForestModel,
    Label,
    cross_validate,
    forest_from_dict,
    forest_to_dict,
    importances,
    load_forest,
    predict,
    predict_batch,
    save_forest,
    stratified_folds,
    train,
)
from .lexicon import LexiconSet, PosTag, default_lexicon_dir, load_lexicons
from .model import (
    Assessment,
    QualityModel,
    Suggestion,
    calibrate,
    load_guidelines,
    load_model,
    save_model,
    score,
    suggest,
)
from .server import create_app, serve
from .stats import (
    common_top_features,
    detect_drift,
    engagement_cross_correlation,
    per_user_correlations,
    spearman,
)

__version__ = "0.1.0"
