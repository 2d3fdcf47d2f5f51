#include "stylescope/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stylescope/errors.hpp"
#include "stylescope/parallel.hpp"
#include "stylescope/rng.hpp"
#include "stylescope/variability.hpp"

namespace stylescope {

void SynthParams::validate() const {
    if (n_docs < 1) throw error("synth: n_docs must be >= 1");
    if (words_per_doc < 1) throw error("synth: words_per_doc must be >= 1");
    if (p_function < 0.0 || p_function > 1.0)
        throw error("synth: p_function must be in [0, 1]");
    if (propensity_override) {
        if (propensity_override->size() != lexicon.size())
            throw error("synth: propensity_override has " +
                        std::to_string(propensity_override->size()) +
                        " entries, lexicon has " + std::to_string(lexicon.size()));
        double sum = 0.0;
        for (double p : *propensity_override) {
            if (p < 0.0) throw error("synth: negative propensity entry");
            sum += p;
        }
        if (sum > 1.0 + 1e-12)
            throw error("synth: propensity_override sums to " + std::to_string(sum) +
                        " > 1");
    }
}

Document gen_document(const SynthParams& params, std::int64_t doc_index) {
    params.validate();
    const std::size_t J = params.lexicon.size();
    rng::Stream stream(params.seed, "synth",
                       static_cast<std::uint64_t>(doc_index));

    Document doc;
    {
        std::string num = std::to_string(doc_index);
        std::size_t width = std::to_string(params.n_docs).size();
        doc.id = params.label + "-" +
                 std::string(width > num.size() ? width - num.size() : 0, '0') + num;
    }
    doc.author = params.label;
    doc.total_words = params.words_per_doc;
    doc.counts.assign(J, 0);

    if (params.propensity_override) {
        std::vector<double> cumulative(J);
        double acc = 0.0;
        for (std::size_t j = 0; j < J; ++j) {
            acc += (*params.propensity_override)[j];
            cumulative[j] = acc;
        }
        for (std::int64_t w = 0; w < params.words_per_doc; ++w) {
            double u = stream.next_double();
            if (u >= acc) continue; // placeholder word
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            ++doc.counts[static_cast<std::size_t>(it - cumulative.begin())];
        }
    } else {
        const double p = params.p_function;
        for (std::int64_t w = 0; w < params.words_per_doc; ++w) {
            double u = stream.next_double();
            if (u >= p) continue;
            // u is uniform on [0, p): rescale to pick the word.
            auto j = static_cast<std::size_t>(u / p * static_cast<double>(J));
            if (j >= J) j = J - 1;
            ++doc.counts[j];
        }
    }
    return doc;
}

Collection gen_collection(const SynthParams& params) {
    params.validate();
    std::vector<Document> docs(static_cast<std::size_t>(params.n_docs));
    parallel_for(docs.size(), [&](std::size_t i) {
        docs[i] = gen_document(params, static_cast<std::int64_t>(i));
    });
    return Collection(params.label, params.lexicon, std::move(docs));
}

NullExperiment null_experiment(const SynthParams& params, std::int64_t runs) {
    params.validate();
    if (runs < 1) throw error("null_experiment: runs must be >= 1");

    NullExperiment out;
    out.per_run.resize(static_cast<std::size_t>(runs));
    for (std::size_t r = 0; r < out.per_run.size(); ++r) {
        SynthParams run_params = params;
        run_params.seed = rng::derive_seed(params.seed, "null-run", r);
        out.per_run[r] = chisq_v4(gen_collection(run_params)).V4;
    }

    double n = static_cast<double>(runs);
    out.mean_v4 = std::accumulate(out.per_run.begin(), out.per_run.end(), 0.0) / n;
    if (runs > 1) {
        double ss = 0.0;
        for (double v : out.per_run) ss += (v - out.mean_v4) * (v - out.mean_v4);
        out.sd_v4 = std::sqrt(ss / (n - 1.0));
    }
    return out;
}

} // namespace stylescope
