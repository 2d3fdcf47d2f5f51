#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stylescope/document.hpp"

namespace stylescope {

// Row-major dense matrix, just big enough for the fraction and
// expected-count tables.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

// The four variability statistics for one collection, plus the quantities
// needed to audit them. df = J*(K-1) and V4 = chisq/df.
struct VariabilityReport {
    std::string label;
    std::int64_t K = 0;
    std::int64_t J = 0;
    double mean_words_per_doc = 0.0;
    double V1 = 0.0;
    double V2 = 0.0;
    double V3 = 0.0;
    double chisq = 0.0;
    std::int64_t df = 0;
    double V4 = 0.0;
    std::int64_t v3_omitted_terms = 0;
    std::int64_t chisq_omitted_cells = 0;
};

// Distribution summary of the K*(J+1) contingency cells; small expected
// counts are where the chi-squared statistic gets shaky, so their prevalence
// is reported rather than silently corrected.
struct CellStats {
    std::int64_t n_cells = 0;
    double frac_expected_below_1 = 0.0;
    double frac_observed_below_1 = 0.0;
    double mean_expected = 0.0;
    double median_expected = 0.0;
    double mean_observed = 0.0;
    double median_observed = 0.0;
};

struct TrendFit {
    double slope = 0.0; // V4 per decade
    double intercept = 0.0;
    double p_value = 0.0; // two-sided t-test on the slope
    std::int64_t n_points = 0;
};

// f_ij = c_ij / w_i, K x J. Throws if any document has w = 0 (names it).
Matrix fractions(const Collection& collection);

// mu_j = (sum_i c_ij) / (sum_i w_i), the pooled estimate of each word's
// usage propensity.
std::vector<double> pooled_rates(const Collection& collection);

struct ClassicVariability {
    double v1 = 0.0;
    double v2 = 0.0;
    double v3 = 0.0;
    std::int64_t v3_omitted_terms = 0;
};

// V1 = sum_j sd(f_.j); V2 = sum_j sd(r_.j) with r_ij = sqrt(w_i)*(f_ij-mu_j);
// V3 = sum_j sd(q_.j) with q_ij = r_ij / sqrt(mu_j*(1-mu_j)), omitting (and
// counting) columns where mu_j*(1-mu_j) = 0. sd is the (K-1)-denominator
// sample standard deviation. Requires K >= 2.
ClassicVariability classic_variability(const Collection& collection);

// K x (J+1) expected counts under the pooled null; column 0 is the
// non-function-word remainder. Rows sum to w_i exactly and columns sum to
// the observed column totals exactly.
Matrix expected_counts(const Collection& collection);

// chisq over all K*(J+1) cells (skipping, and counting, cells with
// e_ij = 0, plus any with 0 < e_ij < min_expected when a threshold is set),
// df = J*(K-1), V4 = chisq/df; also fills V1-V3 and words/doc.
// Summation order is fixed (documents, then columns) so results are
// bit-stable. Requires K >= 2 and every w_i > 0.
VariabilityReport chisq_v4(const Collection& collection, double min_expected = 0.0);

CellStats cell_stats(const Collection& collection);

// Concatenates collections sharing one lexicon. Document ids are kept where
// already unique; a colliding id gets the source label and, if needed, a
// numeric suffix, so merge({a}) == a. Throws lexicon_mismatch_error.
Collection merge(const std::vector<Collection>& collections,
                 std::string label = {});

// Ordinary least squares of y on x, where x is a calendar year. The
// reported slope is per decade (10x the per-year slope; the intercept is
// unchanged by that rescaling). p_value is the two-sided t-test for
// slope != 0 with n-2 df. Requires n >= 3 and non-degenerate x.
TrendFit trend_fit(std::span<const std::pair<double, double>> points);

namespace detail {
// Two-sided p-value of a Student-t statistic, via the regularized
// incomplete beta function. Exposed for direct testing.
double student_t_two_sided_p(double t, double df);
double incomplete_beta(double a, double b, double x);
} // namespace detail

} // namespace stylescope
