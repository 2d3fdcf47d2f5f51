#pragma once

#include <cstdint>
#include <vector>

#include "stylescope/document.hpp"

namespace stylescope {

struct BootstrapParams {
    std::int64_t sample_size = 100;
    std::int64_t replicates = 1000;
    bool with_replacement = true;
    std::uint64_t seed = 0;

    void validate() const; // throws stylescope::error on bad values
};

struct BootstrapComparison {
    BootstrapParams params;
    double mean_a = 0.0;
    double mean_b = 0.0;
    double prob_a_gt_b = 0.0;
    double prob_b_gt_a = 0.0;
    double prob_tie = 0.0;
    double ci_lo = 0.0; // empirical 95% interval for V4_A - V4_B
    double ci_hi = 0.0;
    std::int64_t n_pairs = 0;
};

// Draws sample_size documents uniformly (with or without replacement). The
// result is a pure function of (seed, collection label, replicate_index);
// the documents of the original collection never change, and duplicated
// picks are relabeled so ids stay unique. Without replacement requires
// sample_size <= K.
Collection resample(const Collection& collection, const BootstrapParams& params,
                    std::int64_t replicate_index);

// Element r is V4 of resample(collection, params, r). Replicates run in
// parallel; indexing by replicate number keeps the output deterministic.
std::vector<double> v4_distribution(const Collection& collection,
                                    const BootstrapParams& params);

// Compares two bootstrap V4 distributions over all R_a * R_b pairs:
// exceedance probabilities count strict inequalities (ties reported
// separately), and the 95% CI is the nearest-rank 2.5%/97.5% quantile pair
// of the cross-difference multiset {a_r - b_s}. Up to pair_cap pairs the
// differences are materialized directly; past that a sorted-vector counting
// pass selects the same order statistics without materializing.
BootstrapComparison compare(const std::vector<double>& dist_a,
                            const std::vector<double>& dist_b,
                            const BootstrapParams& params = {},
                            std::size_t pair_cap = 1000000);

namespace detail {
// k-th smallest (1-based) of {a_i - b_j}, for sorted a and b, without
// materializing the cross product. Exposed for testing against the direct
// path.
double kth_cross_difference(const std::vector<double>& a_sorted,
                            const std::vector<double>& b_sorted,
                            std::int64_t k);
} // namespace detail

} // namespace stylescope
