#include "stylescope/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "stylescope/errors.hpp"
#include "stylescope/parallel.hpp"
#include "stylescope/rng.hpp"
#include "stylescope/variability.hpp"

namespace stylescope {

void BootstrapParams::validate() const {
    if (sample_size < 2)
        throw error("bootstrap: sample_size must be >= 2, got " +
                    std::to_string(sample_size));
    if (replicates < 1)
        throw error("bootstrap: replicates must be >= 1, got " +
                    std::to_string(replicates));
}

Collection resample(const Collection& collection, const BootstrapParams& params,
                    std::int64_t replicate_index) {
    params.validate();
    const std::size_t K = collection.size();
    const std::size_t n = static_cast<std::size_t>(params.sample_size);
    if (!params.with_replacement && n > K)
        throw error("bootstrap: sample_size " + std::to_string(n) +
                    " exceeds collection size " + std::to_string(K) +
                    " without replacement");

    rng::Stream stream(params.seed, collection.label(),
                       static_cast<std::uint64_t>(replicate_index));

    std::vector<std::size_t> picks;
    picks.reserve(n);
    if (params.with_replacement) {
        for (std::size_t k = 0; k < n; ++k)
            picks.push_back(static_cast<std::size_t>(stream.next_below(K)));
    } else {
        // Partial Fisher-Yates over the index vector.
        std::vector<std::size_t> pool(K);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t r = k + static_cast<std::size_t>(stream.next_below(K - k));
            std::swap(pool[k], pool[r]);
            picks.push_back(pool[k]);
        }
    }

    std::vector<Document> docs;
    docs.reserve(n);
    std::vector<std::size_t> times_picked(K, 0);
    for (std::size_t pick : picks) {
        Document d = collection.doc(pick);
        if (++times_picked[pick] > 1)
            d.id += "@" + std::to_string(times_picked[pick]);
        docs.push_back(std::move(d));
    }
    return Collection(collection.label() + "[r" + std::to_string(replicate_index) + "]",
                      collection.lexicon(), std::move(docs));
}

std::vector<double> v4_distribution(const Collection& collection,
                                    const BootstrapParams& params) {
    params.validate();
    std::vector<double> v4(static_cast<std::size_t>(params.replicates), 0.0);
    parallel_for(v4.size(), [&](std::size_t r) {
        v4[r] = chisq_v4(resample(collection, params, static_cast<std::int64_t>(r))).V4;
    });
    return v4;
}

namespace detail {

namespace {

// #{(i,j) : a_i - b_j <= d} for sorted a, b. a_i - b_j <= d iff
// b_j >= a_i - d; the cut index in b is nondecreasing as i grows, so one
// forward pass covers all rows.
std::int64_t count_pairs_leq(const std::vector<double>& a, const std::vector<double>& b,
                             double d) {
    std::int64_t count = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double threshold = a[i] - d;
        while (j < b.size() && b[j] < threshold) ++j;
        count += static_cast<std::int64_t>(b.size() - j);
    }
    return count;
}

// Smallest achievable difference strictly greater than d.
double next_difference_above(const std::vector<double>& a, const std::vector<double>& b,
                             double d) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t j = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        // want smallest a[i] - b[j] > d  =>  largest b[j] < a[i] - d
        double threshold = a[i] - d;
        while (j < b.size() && b[j] < threshold) ++j;
        if (j > 0) best = std::min(best, a[i] - b[j - 1]);
    }
    return best;
}

} // namespace

double kth_cross_difference(const std::vector<double>& a_sorted,
                            const std::vector<double>& b_sorted, std::int64_t k) {
    const std::int64_t total = static_cast<std::int64_t>(a_sorted.size()) *
                               static_cast<std::int64_t>(b_sorted.size());
    if (k < 1 || k > total) throw error("kth_cross_difference: rank out of range");

    double lo = a_sorted.front() - b_sorted.back();
    double hi = a_sorted.back() - b_sorted.front();
    if (count_pairs_leq(a_sorted, b_sorted, lo) >= k) return lo;

    // Value-space bisection narrows [lo, hi] with count(lo) < k <= count(hi);
    // the iteration cap matters when the target difference is 0 and the
    // bisection would otherwise crawl through denormals.
    for (int iter = 0; iter < 128 && std::nextafter(lo, hi) < hi; ++iter) {
        double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        if (count_pairs_leq(a_sorted, b_sorted, mid) >= k)
            hi = mid;
        else
            lo = mid;
    }
    // Walk the remaining achievable values; count(lo) < k guarantees the walk
    // reaches the k-th order statistic.
    for (;;) {
        double d = next_difference_above(a_sorted, b_sorted, lo);
        if (count_pairs_leq(a_sorted, b_sorted, d) >= k) return d;
        lo = d;
    }
}

} // namespace detail

BootstrapComparison compare(const std::vector<double>& dist_a,
                            const std::vector<double>& dist_b,
                            const BootstrapParams& params, std::size_t pair_cap) {
    if (dist_a.empty() || dist_b.empty())
        throw error("compare: empty bootstrap distribution");

    BootstrapComparison out;
    out.params = params;
    out.mean_a = std::accumulate(dist_a.begin(), dist_a.end(), 0.0) /
                 static_cast<double>(dist_a.size());
    out.mean_b = std::accumulate(dist_b.begin(), dist_b.end(), 0.0) /
                 static_cast<double>(dist_b.size());

    const std::int64_t ra = static_cast<std::int64_t>(dist_a.size());
    const std::int64_t rb = static_cast<std::int64_t>(dist_b.size());
    const std::int64_t n_pairs = ra * rb;
    out.n_pairs = n_pairs;

    std::vector<double> b_sorted = dist_b;
    std::sort(b_sorted.begin(), b_sorted.end());

    std::int64_t gt = 0, tie = 0;
    for (double a : dist_a) {
        auto [lo_it, hi_it] = std::equal_range(b_sorted.begin(), b_sorted.end(), a);
        gt += lo_it - b_sorted.begin();
        tie += hi_it - lo_it;
    }
    out.prob_a_gt_b = static_cast<double>(gt) / static_cast<double>(n_pairs);
    out.prob_tie = static_cast<double>(tie) / static_cast<double>(n_pairs);
    out.prob_b_gt_a = static_cast<double>(n_pairs - gt - tie) /
                      static_cast<double>(n_pairs);

    // Nearest-rank 2.5% / 97.5% quantiles of the cross-difference multiset.
    const std::int64_t k_lo = static_cast<std::int64_t>(
        std::ceil(0.025 * static_cast<double>(n_pairs)));
    const std::int64_t k_hi = static_cast<std::int64_t>(
        std::ceil(0.975 * static_cast<double>(n_pairs)));

    if (static_cast<std::size_t>(n_pairs) <= pair_cap) {
        std::vector<double> diffs;
        diffs.reserve(static_cast<std::size_t>(n_pairs));
        for (double a : dist_a)
            for (double b : dist_b) diffs.push_back(a - b);
        auto lo_it = diffs.begin() + (k_lo - 1);
        std::nth_element(diffs.begin(), lo_it, diffs.end());
        out.ci_lo = *lo_it;
        auto hi_it = diffs.begin() + (k_hi - 1);
        std::nth_element(diffs.begin(), hi_it, diffs.end());
        out.ci_hi = *hi_it;
    } else {
        std::vector<double> a_sorted = dist_a;
        std::sort(a_sorted.begin(), a_sorted.end());
        out.ci_lo = detail::kth_cross_difference(a_sorted, b_sorted, k_lo);
        out.ci_hi = detail::kth_cross_difference(a_sorted, b_sorted, k_hi);
    }
    return out;
}

} // namespace stylescope
