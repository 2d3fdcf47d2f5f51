#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stylescope/document.hpp"
#include "stylescope/lexicon.hpp"

namespace stylescope {

// Null-model text generator: each word is independently a non-function
// placeholder with probability 1 - p_function, otherwise uniform over the
// lexicon. propensity_override replaces the uniform split with explicit
// per-word probabilities (entries nonnegative, sum <= 1; the remainder goes
// to the placeholder) to synthesize authors with distinct styles.
struct SynthParams {
    std::int64_t n_docs = 200;
    std::int64_t words_per_doc = 2000;
    double p_function = 0.30;
    FunctionWordLexicon lexicon = FunctionWordLexicon::default_lexicon();
    std::uint64_t seed = 0;
    std::optional<std::vector<double>> propensity_override;
    std::string label = "synthetic";

    void validate() const;
};

// Deterministic in (seed, doc_index). Only counts are materialized; the
// placeholder token never gets spelled out because everything downstream
// consumes (w, c) alone.
Document gen_document(const SynthParams& params, std::int64_t doc_index);

// n_docs documents, generated independently per index.
Collection gen_collection(const SynthParams& params);

struct NullExperiment {
    double mean_v4 = 0.0;
    double sd_v4 = 0.0; // (runs-1)-denominator; 0 when runs == 1
    std::vector<double> per_run;
};

// Each run generates a fresh collection (runs use independently derived
// seeds) and records its V4.
NullExperiment null_experiment(const SynthParams& params, std::int64_t runs);

} // namespace stylescope
