#include <doctest.h>

#include <algorithm>
#include <map>

#include "stylescope/bootstrap.hpp"
#include "stylescope/errors.hpp"
#include "stylescope/json_io.hpp"
#include "stylescope/synth.hpp"
#include "stylescope/variability.hpp"

#include "test_helpers.hpp"

using namespace stylescope;
using doctest::Approx;

namespace {

// Two-style mixture: half the documents bend the first half of the lexicon
// up and the rest down, the other half mirrored. eps controls the contrast.
Collection mixture_collection(std::uint64_t seed, double eps, std::int64_t docs_per_side,
                              std::int64_t words = 2000, std::string label = "mixture") {
    const auto& lex = FunctionWordLexicon::default_lexicon();
    const std::size_t J = lex.size();
    std::vector<double> up(J), down(J);
    double base = 0.30 / static_cast<double>(J);
    for (std::size_t j = 0; j < J; ++j) {
        bool first_half = j < J / 2;
        up[j] = base * (first_half ? 1.0 + eps : 1.0 - eps);
        down[j] = base * (first_half ? 1.0 - eps : 1.0 + eps);
    }
    SynthParams a;
    a.n_docs = docs_per_side;
    a.words_per_doc = words;
    a.seed = seed;
    a.propensity_override = up;
    a.label = label + "-up";
    SynthParams b = a;
    b.seed = seed + 1;
    b.propensity_override = down;
    b.label = label + "-down";
    return merge({gen_collection(a), gen_collection(b)}, label);
}

} // namespace

TEST_CASE("resample is a pure function of seed, label and index") {
    auto c = helpers::random_collection(1, 20, 4);
    BootstrapParams params{.sample_size = 10, .replicates = 1, .seed = 99};
    auto r1 = resample(c, params, 5);
    auto r2 = resample(c, params, 5);
    CHECK(r1 == r2);
    auto r3 = resample(c, params, 6);
    CHECK(r1.docs() != r3.docs());
}

TEST_CASE("resampling a singleton with replacement copies it") {
    Collection c("single", helpers::tiny_lexicon(), {helpers::make_doc("d", 10, {3, 2})});
    BootstrapParams params{.sample_size = 100, .replicates = 1, .seed = 1};
    auto r = resample(c, params, 0);
    CHECK(r.size() == 100);
    for (const auto& d : r.docs()) {
        CHECK(d.total_words == 10);
        CHECK(d.counts == std::vector<std::int64_t>{3, 2});
    }
}

TEST_CASE("without replacement at full size is a permutation") {
    auto c = helpers::random_collection(2, 12, 3);
    BootstrapParams params{
        .sample_size = 12, .replicates = 1, .with_replacement = false, .seed = 7};
    auto r = resample(c, params, 0);
    REQUIRE(r.size() == c.size());
    std::vector<std::string> original, sampled;
    for (const auto& d : c.docs()) original.push_back(d.id);
    for (const auto& d : r.docs()) sampled.push_back(d.id);
    std::sort(original.begin(), original.end());
    std::sort(sampled.begin(), sampled.end());
    CHECK(original == sampled);
}

TEST_CASE("without replacement cannot oversample") {
    auto c = helpers::random_collection(3, 5, 3);
    BootstrapParams params{
        .sample_size = 6, .replicates = 1, .with_replacement = false, .seed = 7};
    CHECK_THROWS_AS(resample(c, params, 0), error);
}

TEST_CASE("bootstrap parameters are validated") {
    BootstrapParams bad_sample{.sample_size = 1};
    CHECK_THROWS_AS(bad_sample.validate(), error);
    BootstrapParams bad_reps{.sample_size = 2, .replicates = 0};
    CHECK_THROWS_AS(bad_reps.validate(), error);
}

TEST_CASE("identical documents keep V4 at zero through resampling") {
    std::vector<Document> docs;
    for (int i = 0; i < 5; ++i) docs.push_back(helpers::make_doc("d" + std::to_string(i), 10, {2, 1}));
    Collection c("same", helpers::tiny_lexicon(), std::move(docs));
    BootstrapParams params{.sample_size = 4, .replicates = 20, .seed = 3};
    auto dist = v4_distribution(c, params);
    REQUIRE(dist.size() == 20);
    for (double v : dist) CHECK(v == 0.0);
}

TEST_CASE("v4_distribution with one replicate") {
    auto c = mixture_collection(11, 0.25, 10, 500);
    BootstrapParams params{.sample_size = 5, .replicates = 1, .seed = 17};
    auto dist = v4_distribution(c, params);
    REQUIRE(dist.size() == 1);
    CHECK(dist[0] == chisq_v4(resample(c, params, 0)).V4);
}

TEST_CASE("compare on all-tied distributions") {
    std::vector<double> a(10, 2.5), b(10, 2.5);
    auto cmp = compare(a, b);
    CHECK(cmp.prob_a_gt_b == 0.0);
    CHECK(cmp.prob_b_gt_a == 0.0);
    CHECK(cmp.prob_tie == 1.0);
    CHECK(cmp.ci_lo == 0.0);
    CHECK(cmp.ci_hi == 0.0);
    CHECK(cmp.n_pairs == 100);
}

TEST_CASE("compare on fully separated distributions") {
    std::vector<double> a{5.0, 6.0, 7.0}, b{1.0, 2.0};
    auto cmp = compare(a, b);
    CHECK(cmp.prob_a_gt_b == 1.0);
    CHECK(cmp.ci_lo > 0.0);
    CHECK(cmp.ci_hi == 6.0); // max difference 7-1, rank ceil(.975*6)=6 of 6
    CHECK(cmp.n_pairs == 6);
}

TEST_CASE("exceedance probabilities partition the pair set") {
    rng::Stream stream(21, "compare-prop", 0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> a, b;
        for (int i = 0; i < 40; ++i) a.push_back(stream.next_below(12) * 0.5);
        for (int i = 0; i < 25; ++i) b.push_back(stream.next_below(12) * 0.5);
        auto cmp = compare(a, b);
        CHECK(cmp.prob_a_gt_b + cmp.prob_b_gt_a + cmp.prob_tie ==
              Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("comparison antisymmetry") {
    // 37*41 pairs: 0.025*N is never an integer, so the nearest-rank CI of
    // B-A is exactly the negated, reversed CI of A-B.
    rng::Stream stream(22, "antisym", 0);
    std::vector<double> a, b;
    for (int i = 0; i < 37; ++i) a.push_back(stream.next_double());
    for (int i = 0; i < 41; ++i) b.push_back(stream.next_double() + 0.2);
    auto ab = compare(a, b);
    auto ba = compare(b, a);
    CHECK(ab.prob_a_gt_b == ba.prob_b_gt_a);
    CHECK(ab.prob_tie == ba.prob_tie);
    CHECK(ba.ci_lo == Approx(-ab.ci_hi).epsilon(1e-15));
    CHECK(ba.ci_hi == Approx(-ab.ci_lo).epsilon(1e-15));
}

TEST_CASE("confidence interval matches the materialized reference") {
    rng::Stream stream(23, "ci-ref", 0);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<double> a, b;
        std::size_t na = 5 + stream.next_below(40);
        std::size_t nb = 5 + stream.next_below(40);
        for (std::size_t i = 0; i < na; ++i) a.push_back(stream.next_gauss());
        for (std::size_t i = 0; i < nb; ++i) b.push_back(stream.next_gauss() * 0.5);
        auto n = static_cast<std::int64_t>(na * nb);
        auto k_lo = static_cast<std::int64_t>(std::ceil(0.025 * n));
        auto k_hi = static_cast<std::int64_t>(std::ceil(0.975 * n));
        auto cmp = compare(a, b);
        CHECK(cmp.ci_lo == oracle::cross_diff_kth(a, b, k_lo));
        CHECK(cmp.ci_hi == oracle::cross_diff_kth(a, b, k_hi));
    }
}

TEST_CASE("counting path agrees with the direct path") {
    rng::Stream stream(24, "paths", 0);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<double> a, b;
        std::size_t na = 3 + stream.next_below(30);
        std::size_t nb = 3 + stream.next_below(30);
        for (std::size_t i = 0; i < na; ++i)
            a.push_back(stream.next_below(6) * 0.25); // plenty of ties
        for (std::size_t i = 0; i < nb; ++i) b.push_back(stream.next_below(6) * 0.25);
        auto direct = compare(a, b, {}, 1u << 30);
        auto counting = compare(a, b, {}, 1); // force the counting path
        CHECK(direct.ci_lo == counting.ci_lo);
        CHECK(direct.ci_hi == counting.ci_hi);
        CHECK(direct.prob_a_gt_b == counting.prob_a_gt_b);
    }
}

TEST_CASE("kth cross difference covers the extremes") {
    std::vector<double> a{1.0, 2.0, 4.0};
    std::vector<double> b{0.5, 3.0};
    // differences sorted: -2, -1, 0.5, 1, 1.5, 3.5
    CHECK(detail::kth_cross_difference(a, b, 1) == -2.0);
    CHECK(detail::kth_cross_difference(a, b, 2) == -1.0);
    CHECK(detail::kth_cross_difference(a, b, 4) == 1.0);
    CHECK(detail::kth_cross_difference(a, b, 6) == 3.5);
    CHECK_THROWS_AS(detail::kth_cross_difference(a, b, 0), error);
    CHECK_THROWS_AS(detail::kth_cross_difference(a, b, 7), error);
}

TEST_CASE("identical params give bit-identical comparisons") {
    auto c = mixture_collection(31, 0.25, 15, 800);
    BootstrapParams params{.sample_size = 10, .replicates = 50, .seed = 77};
    auto run = [&] {
        auto da = v4_distribution(c, params);
        auto db = v4_distribution(c, params);
        return to_json(compare(da, db, params)).dump();
    };
    CHECK(run() == run());
}

TEST_CASE("self-comparison with independent streams is balanced") {
    auto c = mixture_collection(41, 0.25, 20, 800);
    BootstrapParams pa{.sample_size = 20, .replicates = 300, .seed = 1001};
    BootstrapParams pb{.sample_size = 20, .replicates = 300, .seed = 2002};
    auto cmp = compare(v4_distribution(c, pa), v4_distribution(c, pb), pa);
    CHECK(cmp.prob_a_gt_b > 0.40);
    CHECK(cmp.prob_a_gt_b < 0.60);
}

TEST_CASE("results are insensitive to collection size imbalance") {
    auto c = mixture_collection(51, 0.25, 15, 800);
    // duplicate every document of one side
    std::vector<Document> doubled = c.docs();
    for (const auto& d : c.docs()) {
        Document copy = d;
        copy.id += "+dup";
        doubled.push_back(std::move(copy));
    }
    Collection c2(c.label(), c.lexicon(), std::move(doubled));

    auto reference = mixture_collection(52, 0.25, 15, 800, "ref");
    BootstrapParams params{.sample_size = 25, .replicates = 400, .seed = 5};
    auto dist_ref = v4_distribution(reference, params);
    auto p1 = compare(v4_distribution(c, params), dist_ref, params).prob_a_gt_b;
    auto p2 = compare(v4_distribution(c2, params), dist_ref, params).prob_a_gt_b;
    CHECK(std::fabs(p1 - p2) < 0.02);
}
