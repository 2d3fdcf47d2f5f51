#include "stylescope/json_io.hpp"

namespace stylescope {

json to_json(const VariabilityReport& r) {
    return {{"label", r.label},
            {"K", r.K},
            {"J", r.J},
            {"mean_words_per_doc", r.mean_words_per_doc},
            {"V1", r.V1},
            {"V2", r.V2},
            {"V3", r.V3},
            {"chisq", r.chisq},
            {"df", r.df},
            {"V4", r.V4},
            {"v3_omitted_terms", r.v3_omitted_terms},
            {"chisq_omitted_cells", r.chisq_omitted_cells}};
}

json to_json(const CellStats& s) {
    return {{"n_cells", s.n_cells},
            {"frac_expected_below_1", s.frac_expected_below_1},
            {"frac_observed_below_1", s.frac_observed_below_1},
            {"mean_expected", s.mean_expected},
            {"median_expected", s.median_expected},
            {"mean_observed", s.mean_observed},
            {"median_observed", s.median_observed}};
}

json to_json(const TrendFit& t) {
    return {{"slope", t.slope},
            {"intercept", t.intercept},
            {"p_value", t.p_value},
            {"n_points", t.n_points}};
}

json to_json(const BootstrapParams& p) {
    return {{"sample_size", p.sample_size},
            {"replicates", p.replicates},
            {"with_replacement", p.with_replacement},
            {"seed", p.seed}};
}

json to_json(const BootstrapComparison& c) {
    return {{"params", to_json(c.params)},
            {"mean_a", c.mean_a},
            {"mean_b", c.mean_b},
            {"prob_a_gt_b", c.prob_a_gt_b},
            {"prob_b_gt_a", c.prob_b_gt_a},
            {"prob_tie", c.prob_tie},
            {"ci_lo", c.ci_lo},
            {"ci_hi", c.ci_hi},
            {"n_pairs", c.n_pairs}};
}

json to_json(const CrossValReport& r) {
    return {{"classifier", std::string(to_string(r.classifier))},
            {"success_a", r.success_a},
            {"total_a", r.total_a},
            {"success_b", r.success_b},
            {"total_b", r.total_b}};
}

json to_json(const OutlierReport& r) {
    json per_doc = json::array();
    for (const OutlierEntry& e : r.per_doc)
        per_doc.push_back({{"id", e.id}, {"loglike", e.loglike}, {"rank", e.rank}});
    json out{{"per_doc", std::move(per_doc)}};
    out["outlier_id"] = r.outlier_id ? json(*r.outlier_id) : json(nullptr);
    out["score"] = r.score ? json(*r.score) : json(nullptr);
    return out;
}

json to_json(const NullExperiment& e) {
    return {{"mean_v4", e.mean_v4}, {"sd_v4", e.sd_v4}, {"per_run", e.per_run}};
}

json to_json(const NbModel& m) {
    return {{"label", m.label}, {"m", m.m}, {"v", m.v}, {"n_train", m.n_train}};
}

json to_json(const LinearModel& m) {
    return {{"label_neg", m.label_neg},
            {"label_pos", m.label_pos},
            {"beta", m.beta},
            {"n_train", m.n_train}};
}

} // namespace stylescope
