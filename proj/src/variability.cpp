#include "stylescope/variability.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "stylescope/errors.hpp"

namespace stylescope {

namespace {

// (K-1)-denominator sample standard deviation.
double sample_sd(std::span<const double> xs) {
    std::size_t n = xs.size();
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(n - 1));
}

void require_k2(const Collection& c, const char* op) {
    if (c.size() < 2)
        throw error(std::string(op) + ": collection '" + c.label() +
                    "' needs at least 2 documents (has " +
                    std::to_string(c.size()) + ")");
}

double median_of_sorted(std::vector<double>& xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    if (n % 2 == 1) return xs[n / 2];
    return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

} // namespace

Matrix fractions(const Collection& collection) {
    const std::size_t K = collection.size();
    const std::size_t J = collection.lexicon().size();
    Matrix f(K, J);
    for (std::size_t i = 0; i < K; ++i) {
        const Document& d = collection.doc(i);
        if (d.total_words == 0)
            throw error("fractions: document '" + d.id + "' in '" +
                        collection.label() + "' has zero words");
        double w = static_cast<double>(d.total_words);
        for (std::size_t j = 0; j < J; ++j)
            f(i, j) = static_cast<double>(d.counts[j]) / w;
    }
    return f;
}

std::vector<double> pooled_rates(const Collection& collection) {
    const std::size_t J = collection.lexicon().size();
    std::int64_t total = collection.total_word_count();
    if (total == 0)
        throw error("pooled_rates: collection '" + collection.label() +
                    "' has zero total words");
    std::vector<std::int64_t> column(J, 0);
    for (const Document& d : collection.docs())
        for (std::size_t j = 0; j < J; ++j) column[j] += d.counts[j];
    std::vector<double> mu(J);
    for (std::size_t j = 0; j < J; ++j)
        mu[j] = static_cast<double>(column[j]) / static_cast<double>(total);
    return mu;
}

ClassicVariability classic_variability(const Collection& collection) {
    require_k2(collection, "classic_variability");
    const std::size_t K = collection.size();
    const std::size_t J = collection.lexicon().size();
    Matrix f = fractions(collection);
    std::vector<double> mu = pooled_rates(collection);

    ClassicVariability out;
    std::vector<double> col(K), r(K), q(K);
    for (std::size_t j = 0; j < J; ++j) {
        for (std::size_t i = 0; i < K; ++i) {
            double w = static_cast<double>(collection.doc(i).total_words);
            col[i] = f(i, j);
            r[i] = std::sqrt(w) * (f(i, j) - mu[j]);
        }
        out.v1 += sample_sd(col);
        out.v2 += sample_sd(r);
        double scale = mu[j] * (1.0 - mu[j]);
        if (scale <= 0.0) {
            ++out.v3_omitted_terms;
            continue;
        }
        double inv = 1.0 / std::sqrt(scale);
        for (std::size_t i = 0; i < K; ++i) q[i] = r[i] * inv;
        out.v3 += sample_sd(q);
    }
    return out;
}

Matrix expected_counts(const Collection& collection) {
    require_k2(collection, "expected_counts");
    const std::size_t K = collection.size();
    const std::size_t J = collection.lexicon().size();

    // Column totals with the non-function remainder in column 0.
    std::vector<std::int64_t> column(J + 1, 0);
    std::int64_t grand = 0;
    for (const Document& d : collection.docs()) {
        column[0] += d.remainder();
        for (std::size_t j = 0; j < J; ++j) column[j + 1] += d.counts[j];
        grand += d.total_words;
    }
    if (grand == 0)
        throw error("expected_counts: collection '" + collection.label() +
                    "' has zero total words");

    Matrix e(K, J + 1);
    for (std::size_t i = 0; i < K; ++i) {
        double w = static_cast<double>(collection.doc(i).total_words);
        for (std::size_t j = 0; j <= J; ++j)
            e(i, j) = w * (static_cast<double>(column[j]) / static_cast<double>(grand));
    }
    return e;
}

VariabilityReport chisq_v4(const Collection& collection, double min_expected) {
    require_k2(collection, "chisq_v4");
    const std::size_t K = collection.size();
    const std::size_t J = collection.lexicon().size();

    VariabilityReport report;
    report.label = collection.label();
    report.K = static_cast<std::int64_t>(K);
    report.J = static_cast<std::int64_t>(J);
    report.mean_words_per_doc =
        static_cast<double>(collection.total_word_count()) / static_cast<double>(K);

    ClassicVariability cv = classic_variability(collection);
    report.V1 = cv.v1;
    report.V2 = cv.v2;
    report.V3 = cv.v3;
    report.v3_omitted_terms = cv.v3_omitted_terms;

    Matrix e = expected_counts(collection);
    double chisq = 0.0;
    std::int64_t omitted = 0;
    for (std::size_t i = 0; i < K; ++i) {
        const Document& d = collection.doc(i);
        for (std::size_t j = 0; j <= J; ++j) {
            double expected = e(i, j);
            if (expected == 0.0 || expected < min_expected) {
                ++omitted;
                continue;
            }
            double observed =
                static_cast<double>(j == 0 ? d.remainder() : d.counts[j - 1]);
            double diff = observed - expected;
            chisq += diff * diff / expected;
        }
    }
    report.chisq = chisq;
    report.chisq_omitted_cells = omitted;
    report.df = static_cast<std::int64_t>(J) * static_cast<std::int64_t>(K - 1);
    report.V4 = chisq / static_cast<double>(report.df);
    return report;
}

CellStats cell_stats(const Collection& collection) {
    require_k2(collection, "cell_stats");
    const std::size_t K = collection.size();
    const std::size_t J = collection.lexicon().size();
    Matrix e = expected_counts(collection);

    std::vector<double> expected, observed;
    expected.reserve(K * (J + 1));
    observed.reserve(K * (J + 1));
    for (std::size_t i = 0; i < K; ++i) {
        const Document& d = collection.doc(i);
        for (std::size_t j = 0; j <= J; ++j) {
            expected.push_back(e(i, j));
            observed.push_back(
                static_cast<double>(j == 0 ? d.remainder() : d.counts[j - 1]));
        }
    }

    CellStats s;
    s.n_cells = static_cast<std::int64_t>(expected.size());
    double n = static_cast<double>(expected.size());
    double sum_e = 0.0, sum_o = 0.0;
    std::int64_t below_e = 0, below_o = 0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        sum_e += expected[k];
        sum_o += observed[k];
        if (expected[k] < 1.0) ++below_e;
        if (observed[k] < 1.0) ++below_o;
    }
    s.frac_expected_below_1 = static_cast<double>(below_e) / n;
    s.frac_observed_below_1 = static_cast<double>(below_o) / n;
    s.mean_expected = sum_e / n;
    s.mean_observed = sum_o / n;
    s.median_expected = median_of_sorted(expected);
    s.median_observed = median_of_sorted(observed);
    return s;
}

Collection merge(const std::vector<Collection>& collections, std::string label) {
    if (collections.empty()) throw error("merge: no collections given");
    const FunctionWordLexicon& lexicon = collections.front().lexicon();
    for (const Collection& c : collections)
        if (!(c.lexicon() == lexicon))
            throw lexicon_mismatch_error("merge: collection '" + c.label() +
                                         "' uses a different lexicon than '" +
                                         collections.front().label() + "'");

    if (label.empty()) {
        for (const Collection& c : collections) {
            if (!label.empty()) label += "+";
            label += c.label();
        }
    }

    std::vector<Document> docs;
    std::unordered_set<std::string> seen;
    for (const Collection& c : collections) {
        for (const Document& d : c.docs()) {
            Document copy = d;
            if (!seen.insert(copy.id).second) {
                // Disambiguate collisions; first try the source label, then
                // a numeric suffix.
                std::string base = c.label() + "/" + copy.id;
                std::string candidate = base;
                for (int k = 2; !seen.insert(candidate).second; ++k)
                    candidate = base + "~" + std::to_string(k);
                copy.id = candidate;
            }
            docs.push_back(std::move(copy));
        }
    }
    return Collection(std::move(label), lexicon, std::move(docs));
}

namespace detail {

// Regularized incomplete beta I_x(a, b) by the continued fraction (modified
// Lentz), with the symmetry transform for convergence.
double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    if (x > (a + 1.0) / (a + b + 2.0))
        return 1.0 - incomplete_beta(b, a, 1.0 - x);

    double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(log_front) / a;

    const double tiny = 1e-300;
    double f = 1.0, c = 1.0, d = 0.0;
    for (int m = 0; m <= 300; ++m) {
        double numerator;
        if (m == 0) {
            numerator = 1.0;
        } else if (m % 2 == 0) {
            double k = m / 2.0;
            numerator = k * (b - k) * x / ((a + 2.0 * k - 1.0) * (a + 2.0 * k));
        } else {
            double k = (m - 1.0) / 2.0;
            numerator = -(a + k) * (a + b + k) * x /
                        ((a + 2.0 * k) * (a + 2.0 * k + 1.0));
        }
        d = 1.0 + numerator * d;
        if (std::fabs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = 1.0 + numerator / c;
        if (std::fabs(c) < tiny) c = tiny;
        double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-15) break;
    }
    return front * (f - 1.0);
}

double student_t_two_sided_p(double t, double df) {
    if (!std::isfinite(t)) return 0.0;
    if (t == 0.0) return 1.0;
    double x = df / (df + t * t);
    return incomplete_beta(df / 2.0, 0.5, x);
}

} // namespace detail

TrendFit trend_fit(std::span<const std::pair<double, double>> points) {
    const std::size_t n = points.size();
    if (n < 3) throw error("trend_fit: need at least 3 points, got " + std::to_string(n));

    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if (sxx == 0.0) throw error("trend_fit: all x values are equal");

    double slope_per_year = sxy / sxx;
    double intercept = mean_y - slope_per_year * mean_x;

    double sse = 0.0;
    for (const auto& [x, y] : points) {
        double r = y - (intercept + slope_per_year * x);
        sse += r * r;
    }
    double df = static_cast<double>(n - 2);
    double p;
    if (sse <= 0.0) {
        p = slope_per_year == 0.0 ? 1.0 : 0.0; // exact fit
    } else {
        double se = std::sqrt(sse / df / sxx);
        p = detail::student_t_two_sided_p(slope_per_year / se, df);
    }

    TrendFit fit;
    fit.slope = 10.0 * slope_per_year; // per decade
    fit.intercept = intercept;
    fit.p_value = p;
    fit.n_points = static_cast<std::int64_t>(n);
    return fit;
}

} // namespace stylescope
