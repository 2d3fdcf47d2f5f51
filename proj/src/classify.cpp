#include "stylescope/classify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "stylescope/errors.hpp"
#include "stylescope/parallel.hpp"
#include "stylescope/variability.hpp"

namespace stylescope {

std::string_view to_string(Classifier c) {
    return c == Classifier::naive_bayes ? "naive_bayes" : "linear";
}

Classifier classifier_from_string(std::string_view s) {
    if (s == "naive_bayes" || s == "nb") return Classifier::naive_bayes;
    if (s == "linear") return Classifier::linear;
    throw error("unknown classifier '" + std::string(s) + "' (want nb or linear)");
}

namespace {

// Mean/variance model from explicit fraction rows; shared by nb_train and
// the leave-one-out paths, which train on row subsets.
NbModel train_from_rows(const std::vector<std::span<const double>>& rows,
                        std::string label) {
    const std::size_t n = rows.size();
    if (n < 2)
        throw error("nb_train: need at least 2 documents to estimate variance (have " +
                    std::to_string(n) + ")");
    const std::size_t J = rows.front().size();
    NbModel model;
    model.label = std::move(label);
    model.n_train = static_cast<std::int64_t>(n);
    model.m.assign(J, 0.0);
    model.v.assign(J, 0.0);
    for (const auto& row : rows)
        for (std::size_t j = 0; j < J; ++j) model.m[j] += row[j];
    for (std::size_t j = 0; j < J; ++j) model.m[j] /= static_cast<double>(n);
    for (const auto& row : rows)
        for (std::size_t j = 0; j < J; ++j) {
            double d = row[j] - model.m[j];
            model.v[j] += d * d;
        }
    for (std::size_t j = 0; j < J; ++j)
        model.v[j] = std::max(model.v[j] / static_cast<double>(n - 1), kVarianceFloor);
    return model;
}

std::vector<std::span<const double>> matrix_rows(const Matrix& m,
                                                 std::size_t skip = SIZE_MAX) {
    std::vector<std::span<const double>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (i != skip) rows.push_back(m.row(i));
    return rows;
}

} // namespace

NbModel nb_train(const Collection& collection) {
    Matrix f = fractions(collection);
    return train_from_rows(matrix_rows(f), collection.label());
}

double nb_loglike(const NbModel& model, std::span<const double> fracs) {
    if (fracs.size() != model.m.size())
        throw error("nb_loglike: fraction vector length " + std::to_string(fracs.size()) +
                    " does not match model J=" + std::to_string(model.m.size()));
    double sum = 0.0;
    for (std::size_t j = 0; j < fracs.size(); ++j) {
        double d = fracs[j] - model.m[j];
        sum += 0.5 * std::log(model.v[j]) + d * d / (2.0 * model.v[j]);
    }
    return -sum;
}

std::string nb_classify(const NbModel& model_a, const NbModel& model_b,
                        std::span<const double> fracs) {
    if (model_a.m.size() != model_b.m.size())
        throw error("nb_classify: models disagree on lexicon size");
    return nb_loglike(model_a, fracs) > nb_loglike(model_b, fracs) ? model_a.label
                                                                   : model_b.label;
}

namespace {

// Minimum-norm least squares for y on [1 | F], rank-revealing.
LinearModel solve_linear(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                         std::string label_neg, std::string label_pos) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
    Eigen::VectorXd beta = cod.solve(y);
    LinearModel model;
    model.beta.assign(beta.data(), beta.data() + beta.size());
    model.n_train = design.rows();
    model.label_neg = std::move(label_neg);
    model.label_pos = std::move(label_pos);
    model.rank_deficient = cod.rank() < design.cols();
    return model;
}

Eigen::MatrixXd design_matrix(const Matrix& fa, const Matrix& fb,
                              std::size_t skip_a = SIZE_MAX,
                              std::size_t skip_b = SIZE_MAX) {
    const std::size_t J = fa.cols();
    const std::size_t na = fa.rows() - (skip_a < fa.rows() ? 1 : 0);
    const std::size_t nb = fb.rows() - (skip_b < fb.rows() ? 1 : 0);
    Eigen::MatrixXd x(na + nb, J + 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < fa.rows(); ++i) {
        if (i == skip_a) continue;
        x(r, 0) = 1.0;
        for (std::size_t j = 0; j < J; ++j) x(r, j + 1) = fa(i, j);
        ++r;
    }
    for (std::size_t i = 0; i < fb.rows(); ++i) {
        if (i == skip_b) continue;
        x(r, 0) = 1.0;
        for (std::size_t j = 0; j < J; ++j) x(r, j + 1) = fb(i, j);
        ++r;
    }
    return x;
}

Eigen::VectorXd target_vector(std::size_t na, std::size_t nb) {
    Eigen::VectorXd y(na + nb);
    for (std::size_t i = 0; i < na; ++i) y(i) = -1.0;
    for (std::size_t i = 0; i < nb; ++i) y(na + i) = 1.0;
    return y;
}

} // namespace

LinearModel lin_train(const Collection& collection_a, const Collection& collection_b) {
    if (!(collection_a.lexicon() == collection_b.lexicon()))
        throw lexicon_mismatch_error("lin_train: collections use different lexicons");
    Matrix fa = fractions(collection_a);
    Matrix fb = fractions(collection_b);
    Eigen::MatrixXd x = design_matrix(fa, fb);
    Eigen::VectorXd y = target_vector(fa.rows(), fb.rows());
    return solve_linear(x, y, collection_a.label(), collection_b.label());
}

double lin_value(const LinearModel& model, std::span<const double> fracs) {
    if (fracs.size() + 1 != model.beta.size())
        throw error("lin_value: fraction vector length " + std::to_string(fracs.size()) +
                    " does not match model J=" + std::to_string(model.beta.size() - 1));
    double ell = model.beta[0];
    for (std::size_t j = 0; j < fracs.size(); ++j) ell += model.beta[j + 1] * fracs[j];
    return ell;
}

std::string lin_classify(const LinearModel& model, std::span<const double> fracs) {
    return lin_value(model, fracs) < 0.0 ? model.label_neg : model.label_pos;
}

CrossValReport loo_crossval(const Collection& collection_a,
                            const Collection& collection_b, Classifier classifier) {
    if (!(collection_a.lexicon() == collection_b.lexicon()))
        throw lexicon_mismatch_error("loo_crossval: collections use different lexicons");
    const std::size_t ka = collection_a.size();
    const std::size_t kb = collection_b.size();
    if (classifier == Classifier::naive_bayes && (ka < 3 || kb < 3))
        throw error("loo_crossval: naive Bayes needs K >= 3 per side");
    if (classifier == Classifier::linear && (ka < 2 || kb < 2))
        throw error("loo_crossval: linear needs K >= 2 per side");

    Matrix fa = fractions(collection_a);
    Matrix fb = fractions(collection_b);
    const std::string& label_a = collection_a.label();
    const std::string& label_b = collection_b.label();

    // Comparison is by side, not by label, so two identically labeled
    // collections still cross-validate meaningfully.
    std::vector<char> correct(ka + kb, 0);
    parallel_for(ka + kb, [&](std::size_t t) {
        const bool from_a = t < ka;
        const std::size_t i = from_a ? t : t - ka;
        std::span<const double> test = from_a ? fa.row(i) : fb.row(i);
        bool predicted_a;
        if (classifier == Classifier::naive_bayes) {
            NbModel ma = train_from_rows(matrix_rows(fa, from_a ? i : SIZE_MAX), label_a);
            NbModel mb = train_from_rows(matrix_rows(fb, from_a ? SIZE_MAX : i), label_b);
            predicted_a = nb_loglike(ma, test) > nb_loglike(mb, test);
        } else {
            Eigen::MatrixXd x = design_matrix(fa, fb, from_a ? i : SIZE_MAX,
                                              from_a ? SIZE_MAX : i);
            Eigen::VectorXd y = target_vector(ka - (from_a ? 1 : 0),
                                              kb - (from_a ? 0 : 1));
            LinearModel model = solve_linear(x, y, label_a, label_b);
            predicted_a = lin_value(model, test) < 0.0;
        }
        correct[t] = predicted_a == from_a ? 1 : 0;
    });

    CrossValReport report;
    report.classifier = classifier;
    report.total_a = static_cast<std::int64_t>(ka);
    report.total_b = static_cast<std::int64_t>(kb);
    for (std::size_t t = 0; t < ka; ++t) report.success_a += correct[t];
    for (std::size_t t = ka; t < ka + kb; ++t) report.success_b += correct[t];
    return report;
}

double outlier_score(std::int64_t n, std::int64_t rank) {
    if (n < 2) throw error("outlier_score: need n >= 2");
    if (rank < 1 || rank > n) throw error("outlier_score: rank out of range 1.." +
                                          std::to_string(n));
    return 100.0 * static_cast<double>(n - rank) / static_cast<double>(n - 1);
}

OutlierReport outlier_rank(const Collection& collection,
                           std::optional<std::string> truth_id) {
    const std::size_t n = collection.size();
    if (n < 3)
        throw error("outlier_rank: collection '" + collection.label() +
                    "' needs at least 3 documents");
    Matrix f = fractions(collection);

    std::vector<double> loglike(n, 0.0);
    parallel_for(n, [&](std::size_t i) {
        NbModel model = train_from_rows(matrix_rows(f, i), collection.label());
        loglike[i] = nb_loglike(model, f.row(i));
    });

    // Ascending loglike; ties by ascending id.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (loglike[a] != loglike[b]) return loglike[a] < loglike[b];
        return collection.doc(a).id < collection.doc(b).id;
    });

    OutlierReport report;
    report.per_doc.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        report.per_doc[i] = {collection.doc(i).id, loglike[i], 0};
    for (std::size_t r = 0; r < n; ++r)
        report.per_doc[order[r]].rank = static_cast<std::int64_t>(r + 1);

    if (truth_id) {
        auto it = std::find_if(report.per_doc.begin(), report.per_doc.end(),
                               [&](const OutlierEntry& e) { return e.id == *truth_id; });
        if (it == report.per_doc.end())
            throw error("outlier_rank: no document with id '" + *truth_id + "'");
        report.outlier_id = *truth_id;
        report.score = outlier_score(static_cast<std::int64_t>(n), it->rank);
    }
    return report;
}

} // namespace stylescope
