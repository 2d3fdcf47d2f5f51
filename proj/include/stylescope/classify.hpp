#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stylescope/document.hpp"

namespace stylescope {

// A word absent from every training document would give v_j = 0 and an
// undefined likelihood; the floor keeps the model usable and makes such
// words extremely informative, which is the intended behavior.
inline constexpr double kVarianceFloor = 1e-10;

// Per-word Gaussian model of function-word fractions.
struct NbModel {
    std::string label;
    std::vector<double> m; // mean fraction per word
    std::vector<double> v; // (K-1)-denominator variance, floored
    std::int64_t n_train = 0;
};

// Sample mean/variance of the K fraction rows. Requires K >= 2.
NbModel nb_train(const Collection& collection);

// loglike = -sum_j (0.5*ln(v_j) + (f_j - m_j)^2 / (2*v_j)); the additive
// constant is fixed at 0 (only differences between models matter).
double nb_loglike(const NbModel& model, std::span<const double> fractions);

// Label of the winning model: A exactly when loglike(A) > loglike(B),
// otherwise B (ties go to B). Models must share J.
std::string nb_classify(const NbModel& model_a, const NbModel& model_b,
                        std::span<const double> fractions);

struct LinearModel {
    std::vector<double> beta; // intercept first, then J word coefficients
    std::int64_t n_train = 0;
    std::string label_neg; // the -1 class ("A")
    std::string label_pos; // the +1 class ("B")
    bool rank_deficient = false;
};

// Least squares of y in {-1:+1} on [1, f_1..f_J], solved by a rank-revealing
// orthogonal decomposition; rank-deficient designs get the minimum-norm
// solution and set the rank_deficient flag. Requires at least one document
// per side.
LinearModel lin_train(const Collection& collection_a, const Collection& collection_b);

// The fitted value beta_0 + sum_j beta_j * g_j.
double lin_value(const LinearModel& model, std::span<const double> fractions);

// label_neg when the fitted value is < 0, else label_pos.
std::string lin_classify(const LinearModel& model, std::span<const double> fractions);

enum class Classifier { naive_bayes, linear };

std::string_view to_string(Classifier c);
Classifier classifier_from_string(std::string_view s);

struct CrossValReport {
    Classifier classifier = Classifier::naive_bayes;
    std::int64_t success_a = 0;
    std::int64_t total_a = 0;
    std::int64_t success_b = 0;
    std::int64_t total_b = 0;
};

// Leave-one-out: every document is classified by models retrained on all
// remaining documents; tallies are kept per side. Iterations run in
// parallel and are assembled by document index.
CrossValReport loo_crossval(const Collection& collection_a,
                            const Collection& collection_b, Classifier classifier);

struct OutlierEntry {
    std::string id;
    double loglike = 0.0;
    std::int64_t rank = 0; // 1 = smallest loglike = most outlier-like
};

struct OutlierReport {
    std::vector<OutlierEntry> per_doc; // in collection document order
    std::optional<std::string> outlier_id;
    std::optional<double> score; // 0..100, set when outlier_id is given
};

// Leave-one-out log-likelihood of every document against the rest of its
// own collection, ranked ascending (ties broken by ascending id). When the
// id of a known planted outlier is supplied, its rank is converted to the
// 0-100 score. Requires n >= 3.
OutlierReport outlier_rank(const Collection& collection,
                           std::optional<std::string> truth_id = {});

// score = 100 * (n - rank) / (n - 1): 100 when the outlier ranks first,
// 0 when it ranks last, 50 on average under random ranking.
double outlier_score(std::int64_t n, std::int64_t rank);

} // namespace stylescope
