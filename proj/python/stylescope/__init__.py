"""Function-word stylometry: variability statistics (V1-V4), bootstrap
comparisons of writing-style variability, and authorship classifiers."""

from ._stylescope import (  # noqa: F401
    BootstrapParams,
    Collection,
    DocKind,
    Document,
    Lexicon,
    LinearModel,
    NbModel,
    StylescopeError,
    SynthParams,
    bootstrap_compare,
    cell_stats,
    chisq_v4,
    chunk,
    count_document,
    counts_to_csv,
    fractions,
    gen_collection,
    gen_document,
    lin_train,
    lin_value,
    load_counts,
    loo_crossval,
    merge,
    nb_loglike,
    nb_train,
    null_experiment,
    outlier_rank,
    outlier_score,
    pooled_rates,
    resample,
    save_counts,
    strip_boilerplate,
    tokenize,
    trend_fit,
    v4_distribution,
)

__all__ = [name for name in dir() if not name.startswith("_")]
