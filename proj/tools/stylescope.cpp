// stylescope: function-word stylometry toolkit.
//
// Subcommands: ingest, stats, merge, bootstrap, classify (crossval, predict,
// outlier), synth, trend. All reports are JSON by default; --format table
// renders aligned text. Stochastic subcommands require an explicit --seed
// and are bit-reproducible from it.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stylescope/bootstrap.hpp"
#include "stylescope/classify.hpp"
#include "stylescope/corpus.hpp"
#include "stylescope/errors.hpp"
#include "stylescope/json_io.hpp"
#include "stylescope/synth.hpp"
#include "stylescope/tokenize.hpp"
#include "stylescope/variability.hpp"

namespace fs = std::filesystem;
using stylescope::json;

namespace {

// Flag-combination problems found after CLI11's own parse; exit code 2 like
// any other usage error.
struct usage_error {
    std::string message;
};

struct OutputOptions {
    std::string format = "json";
    std::string out_path; // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    cmd->add_option("-o,--out", opts.out_path, "Write the report here instead of stdout");
}

void write_output(const OutputOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw stylescope::io_error("cannot write '" + opts.out_path + "'");
    out << text;
    if (!out) throw stylescope::io_error("error writing '" + opts.out_path + "'");
}

void emit_json(const OutputOptions& opts, const json& j) {
    write_output(opts, j.dump(2) + "\n");
}

std::optional<stylescope::FunctionWordLexicon> optional_lexicon(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return stylescope::FunctionWordLexicon::load(path);
}

stylescope::Collection load_counts_checked(const std::string& path,
                                           const std::string& lexicon_path,
                                           std::optional<std::string> label = {}) {
    return stylescope::load_counts(path, optional_lexicon(lexicon_path),
                                   std::move(label));
}

std::string fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

// --- stats ----------------------------------------------------------------

std::string stats_table(const std::vector<stylescope::VariabilityReport>& reports) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"", "# judgments", "words/judgment", "V1", "V2", "V3", "V4"});
    for (const auto& r : reports)
        rows.push_back({r.label, std::to_string(r.K),
                        fixed(r.mean_words_per_doc, 0), fixed(r.V1, 3), fixed(r.V2, 2),
                        fixed(r.V3, 1), fixed(r.V4, 2)});
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            out += row[c];
            out += std::string(width[c] - row[c].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

struct StatsArgs {
    std::vector<std::string> collections;
    std::string lexicon_path;
    double min_expected = 0.0;
    bool with_cell_stats = false;
    OutputOptions output;
};

void run_stats(const StatsArgs& args) {
    std::vector<stylescope::VariabilityReport> reports;
    std::vector<stylescope::CellStats> cells;
    for (const std::string& path : args.collections) {
        stylescope::Collection c = load_counts_checked(path, args.lexicon_path);
        reports.push_back(stylescope::chisq_v4(c, args.min_expected));
        if (args.with_cell_stats) cells.push_back(stylescope::cell_stats(c));
    }
    if (args.output.format == "table") {
        write_output(args.output, stats_table(reports));
        return;
    }
    json out = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        json entry = to_json(reports[i]);
        if (args.with_cell_stats) entry["cell_stats"] = to_json(cells[i]);
        out.push_back(std::move(entry));
    }
    emit_json(args.output, out.size() == 1 ? out.front() : out);
}

// --- ingest ---------------------------------------------------------------

struct IngestArgs {
    std::string manifest_path;
    std::string dir_path;
    std::vector<std::string> files;
    std::string out_path;
    std::string exclusions_path;
    std::string lexicon_path;
    std::string label;
    std::string author;
    std::string kind = "other";
    std::int64_t min_words = 250;
    std::size_t chunk_size = 0;
    std::string strip_start;
    std::string strip_end;
};

void run_ingest(const IngestArgs& args) {
    if (args.manifest_path.empty() && args.dir_path.empty() && args.files.empty())
        throw usage_error{"ingest needs input files, --dir, or --manifest"};
    stylescope::LoadOptions options;
    options.min_words = args.min_words;
    options.chunk_size = args.chunk_size;
    options.strip_start = args.strip_start;
    options.strip_end = args.strip_end;

    stylescope::LoadResult result = [&] {
        if (!args.manifest_path.empty()) {
            auto lex = optional_lexicon(args.lexicon_path);
            return stylescope::load_collection(args.manifest_path, lex, options);
        }
        stylescope::Manifest m;
        std::vector<std::string> paths = args.files;
        if (!args.dir_path.empty()) {
            if (!fs::is_directory(args.dir_path))
                throw stylescope::io_error("'" + args.dir_path + "' is not a directory");
            for (const auto& entry : fs::directory_iterator(args.dir_path))
                if (entry.is_regular_file() && entry.path().extension() == ".txt")
                    paths.push_back(entry.path().string());
            std::sort(paths.begin(), paths.end());
        }
        for (const std::string& p : paths) {
            stylescope::ManifestEntry e;
            e.path = p;
            e.id = fs::path(p).stem().string();
            e.author = args.author;
            e.kind = stylescope::kind_from_string(args.kind);
            m.documents.push_back(std::move(e));
        }
        m.label = args.label.empty()
                      ? (m.documents.size() == 1 ? m.documents[0].id : "collection")
                      : args.label;
        auto lex = args.lexicon_path.empty()
                       ? stylescope::FunctionWordLexicon::default_lexicon()
                       : stylescope::FunctionWordLexicon::load(args.lexicon_path);
        return stylescope::load_collection(m, lex, options);
    }();

    std::string csv = stylescope::counts_to_csv(result.collection);
    OutputOptions out{.format = "json", .out_path = args.out_path};
    write_output(out, csv);

    std::string log;
    for (const auto& ex : result.excluded)
        log += "excluded " + ex.id + " (" + ex.path + "): " + std::to_string(ex.words) +
               " words < min_words=" + std::to_string(ex.min_words) + "\n";
    if (!args.exclusions_path.empty()) {
        std::ofstream exf(args.exclusions_path, std::ios::binary);
        if (!exf)
            throw stylescope::io_error("cannot write '" + args.exclusions_path + "'");
        exf << log;
    } else {
        std::cerr << log;
    }
}

// --- merge ----------------------------------------------------------------

struct MergeArgs {
    std::vector<std::string> inputs;
    std::string out_path;
    std::string label;
    std::string lexicon_path;
};

void run_merge(const MergeArgs& args) {
    std::vector<stylescope::Collection> collections;
    for (const std::string& p : args.inputs)
        collections.push_back(load_counts_checked(p, args.lexicon_path));
    stylescope::Collection merged = stylescope::merge(collections, args.label);
    OutputOptions out{.format = "json", .out_path = args.out_path};
    write_output(out, stylescope::counts_to_csv(merged));
}

// --- bootstrap ------------------------------------------------------------

struct BootstrapArgs {
    std::string a_path, b_path;
    std::string within_path;
    std::string a_years, b_years;
    std::string a_months, b_months;
    std::string lexicon_path;
    stylescope::BootstrapParams params;
    bool no_replacement = false;
    std::size_t pair_cap = 1000000;
    OutputOptions output;
};

std::pair<int, int> parse_range(const std::string& s, const char* what) {
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        try {
            return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
        } catch (const std::exception&) {
        }
    }
    throw usage_error{std::string(what) + ": want LO:HI, got '" + s + "'"};
}

stylescope::Collection filter_by_predicate(const stylescope::Collection& c,
                                           const std::string& years,
                                           const std::string& months,
                                           const std::string& side_label) {
    std::vector<stylescope::Document> kept;
    if (!years.empty()) {
        auto [lo, hi] = parse_range(years, "--a-years/--b-years");
        for (const auto& d : c.docs())
            if (d.date && d.date->year >= lo && d.date->year <= hi)
                kept.push_back(d);
    } else {
        auto [lo, hi] = parse_range(months, "--a-months/--b-months");
        for (const auto& d : c.docs()) {
            if (!d.date || d.date->month == 0) continue;
            int m = d.date->month;
            bool in = lo <= hi ? (m >= lo && m <= hi) : (m >= lo || m <= hi);
            if (in) kept.push_back(d);
        }
    }
    if (kept.empty())
        throw stylescope::empty_collection_error(
            "predicate " + side_label + " selects no documents of '" + c.label() + "'");
    return stylescope::Collection(c.label() + "[" + side_label + "]", c.lexicon(),
                                  std::move(kept));
}

std::string bootstrap_table(const stylescope::BootstrapComparison& c,
                            const std::string& name_a, const std::string& name_b) {
    std::string out;
    out += "mean(" + name_a + ") = " + fixed(c.mean_a, 2) + "\n";
    out += "mean(" + name_b + ") = " + fixed(c.mean_b, 2) + "\n";
    out += "P(" + name_a + " > " + name_b + ") = " + fixed(c.prob_a_gt_b, 5) + "\n";
    out += "95% CI for " + name_a + " - " + name_b + " = (" + fixed(c.ci_lo, 2) +
           ", " + fixed(c.ci_hi, 2) + ")\n";
    return out;
}

void run_bootstrap(BootstrapArgs& args) {
    if (args.within_path.empty()) {
        if (args.a_path.empty() || args.b_path.empty())
            throw usage_error{"bootstrap needs --a and --b (or --within)"};
    } else {
        bool years = !args.a_years.empty() && !args.b_years.empty();
        bool months = !args.a_months.empty() && !args.b_months.empty();
        if (!years && !months)
            throw usage_error{"--within needs --a-years/--b-years or "
                              "--a-months/--b-months"};
        // fail on malformed predicates before any file I/O
        for (const auto* s : {&args.a_years, &args.b_years})
            if (!s->empty()) parse_range(*s, "--a-years/--b-years");
        for (const auto* s : {&args.a_months, &args.b_months})
            if (!s->empty()) parse_range(*s, "--a-months/--b-months");
    }
    args.params.with_replacement = !args.no_replacement;
    stylescope::Collection a = [&] {
        if (!args.within_path.empty()) {
            auto whole = load_counts_checked(args.within_path, args.lexicon_path);
            return filter_by_predicate(whole, args.a_years, args.a_months, "A");
        }
        return load_counts_checked(args.a_path, args.lexicon_path);
    }();
    stylescope::Collection b = [&] {
        if (!args.within_path.empty()) {
            auto whole = load_counts_checked(args.within_path, args.lexicon_path);
            return filter_by_predicate(whole, args.b_years, args.b_months, "B");
        }
        return load_counts_checked(args.b_path, args.lexicon_path);
    }();

    std::vector<double> dist_a = stylescope::v4_distribution(a, args.params);
    std::vector<double> dist_b = stylescope::v4_distribution(b, args.params);
    stylescope::BootstrapComparison cmp =
        stylescope::compare(dist_a, dist_b, args.params, args.pair_cap);

    if (args.output.format == "table")
        write_output(args.output, bootstrap_table(cmp, a.label(), b.label()));
    else
        emit_json(args.output, to_json(cmp));
}

// --- classify -------------------------------------------------------------

struct CrossvalArgs {
    std::string a_path, b_path;
    std::vector<std::string> pairs;
    std::string method = "linear";
    std::string lexicon_path;
    OutputOptions output;
};

std::string ratio(std::int64_t success, std::int64_t total) {
    double frac = total ? static_cast<double>(success) / static_cast<double>(total) : 0.0;
    return std::to_string(success) + "/" + std::to_string(total) + " = " + fixed(frac, 3);
}

void run_crossval(const CrossvalArgs& args) {
    stylescope::Classifier method = stylescope::classifier_from_string(args.method);
    if (args.pairs.empty() && (args.a_path.empty() || args.b_path.empty()))
        throw usage_error{"crossval needs --a and --b (or --pairs)"};

    if (!args.pairs.empty()) {
        std::vector<stylescope::Collection> collections;
        for (const std::string& p : args.pairs)
            collections.push_back(load_counts_checked(p, args.lexicon_path));
        json out = json::array();
        std::string table;
        for (std::size_t i = 0; i < collections.size(); ++i) {
            for (std::size_t j = i + 1; j < collections.size(); ++j) {
                auto r = stylescope::loo_crossval(collections[i], collections[j], method);
                json entry = to_json(r);
                entry["a"] = collections[i].label();
                entry["b"] = collections[j].label();
                out.push_back(std::move(entry));
                table += collections[i].label() + " vs " + collections[j].label() +
                         ": success(A) " + ratio(r.success_a, r.total_a) +
                         ", success(B) " + ratio(r.success_b, r.total_b) + "\n";
            }
        }
        if (args.output.format == "table")
            write_output(args.output, table);
        else
            emit_json(args.output, out);
        return;
    }

    stylescope::Collection a = load_counts_checked(args.a_path, args.lexicon_path);
    stylescope::Collection b = load_counts_checked(args.b_path, args.lexicon_path);
    auto r = stylescope::loo_crossval(a, b, method);
    if (args.output.format == "table") {
        write_output(args.output, a.label() + " vs " + b.label() + ": success(A) " +
                                      ratio(r.success_a, r.total_a) + ", success(B) " +
                                      ratio(r.success_b, r.total_b) + "\n");
    } else {
        json entry = to_json(r);
        entry["a"] = a.label();
        entry["b"] = b.label();
        emit_json(args.output, entry);
    }
}

struct PredictArgs {
    std::string a_path, b_path, test_path;
    std::string method = "linear";
    std::string lexicon_path;
    std::string model_out;
    OutputOptions output;
};

void run_predict(const PredictArgs& args) {
    stylescope::Classifier method = stylescope::classifier_from_string(args.method);
    stylescope::Collection a = load_counts_checked(args.a_path, args.lexicon_path);
    stylescope::Collection b = load_counts_checked(args.b_path, args.lexicon_path);
    stylescope::Collection test = load_counts_checked(args.test_path, args.lexicon_path);
    if (!(test.lexicon() == a.lexicon()))
        throw stylescope::lexicon_mismatch_error(
            "test collection uses a different lexicon than the training sides");

    stylescope::Matrix f = stylescope::fractions(test);
    json predictions = json::array();
    json model_json;

    if (method == stylescope::Classifier::naive_bayes) {
        auto ma = stylescope::nb_train(a);
        auto mb = stylescope::nb_train(b);
        model_json = json{{"a", to_json(ma)}, {"b", to_json(mb)}};
        for (std::size_t i = 0; i < test.size(); ++i) {
            double la = stylescope::nb_loglike(ma, f.row(i));
            double lb = stylescope::nb_loglike(mb, f.row(i));
            predictions.push_back({{"id", test.doc(i).id},
                                   {"predicted", la > lb ? ma.label : mb.label},
                                   {"margin_a", la - lb}});
        }
    } else {
        auto model = stylescope::lin_train(a, b);
        model_json = to_json(model);
        if (model.rank_deficient)
            std::cerr << "warning: rank-deficient design; minimum-norm solution used\n";
        for (std::size_t i = 0; i < test.size(); ++i) {
            double ell = stylescope::lin_value(model, f.row(i));
            predictions.push_back({{"id", test.doc(i).id},
                                   {"predicted", ell < 0.0 ? model.label_neg
                                                           : model.label_pos},
                                   {"margin_a", -ell}});
        }
    }

    if (!args.model_out.empty()) {
        std::ofstream mf(args.model_out, std::ios::binary);
        if (!mf) throw stylescope::io_error("cannot write '" + args.model_out + "'");
        mf << model_json.dump(2) << "\n";
    }
    emit_json(args.output, json{{"method", args.method},
                                {"a", a.label()},
                                {"b", b.label()},
                                {"predictions", std::move(predictions)}});
}

struct OutlierArgs {
    std::string collection_path;
    std::string truth_id;
    std::string lexicon_path;
    OutputOptions output;
};

void run_outlier(const OutlierArgs& args) {
    stylescope::Collection c = load_counts_checked(args.collection_path,
                                                   args.lexicon_path);
    auto report = stylescope::outlier_rank(
        c, args.truth_id.empty() ? std::nullopt
                                 : std::optional<std::string>(args.truth_id));
    if (args.output.format == "table") {
        std::vector<const stylescope::OutlierEntry*> by_rank;
        for (const auto& e : report.per_doc) by_rank.push_back(&e);
        std::sort(by_rank.begin(), by_rank.end(),
                  [](auto* x, auto* y) { return x->rank < y->rank; });
        std::string out;
        for (const auto* e : by_rank)
            out += std::to_string(e->rank) + "  " + e->id + "  " +
                   fixed(e->loglike, 4) + "\n";
        if (report.score)
            out += "score(" + *report.outlier_id + ") = " + fixed(*report.score, 2) + "\n";
        write_output(args.output, out);
    } else {
        emit_json(args.output, to_json(report));
    }
}

// --- synth ----------------------------------------------------------------

struct SynthArgs {
    stylescope::SynthParams params;
    std::int64_t runs = 10;
    std::string emit_dir;
    std::string propensity_path;
    OutputOptions output;
};

void run_synth(SynthArgs& args) {
    if (!args.propensity_path.empty()) {
        std::ifstream in(args.propensity_path);
        if (!in)
            throw stylescope::io_error("cannot open '" + args.propensity_path + "'");
        std::vector<double> p;
        double v;
        while (in >> v) p.push_back(v);
        args.params.propensity_override = std::move(p);
    }
    auto experiment = stylescope::null_experiment(args.params, args.runs);
    if (!args.emit_dir.empty()) {
        fs::create_directories(args.emit_dir);
        stylescope::Collection c = stylescope::gen_collection(args.params);
        stylescope::save_counts(c, fs::path(args.emit_dir) /
                                       (args.params.label + ".csv"));
    }
    if (args.output.format == "table") {
        std::string out = "mean(V4) = " + fixed(experiment.mean_v4, 6) +
                          "\nsd(V4) = " + fixed(experiment.sd_v4, 8) + "\n";
        write_output(args.output, out);
    } else {
        emit_json(args.output, to_json(experiment));
    }
}

// --- trend ----------------------------------------------------------------

struct TrendArgs {
    std::string points_path;
    OutputOptions output;
};

void run_trend(const TrendArgs& args) {
    std::ifstream in(args.points_path);
    if (!in) throw stylescope::io_error("cannot open '" + args.points_path + "'");
    std::vector<std::pair<double, double>> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& c : line)
            if (c == ',' || c == '\t') c = ' ';
        std::istringstream fields(line);
        double x, y;
        if (fields >> x >> y) {
            points.emplace_back(x, y);
        } else if (line_no > 1 && line.find_first_not_of(" \r\n") != std::string::npos) {
            throw stylescope::parse_error("points file line " + std::to_string(line_no) +
                                          ": expected 'x,y'");
        }
        // a non-numeric first line is treated as a header
    }
    auto fit = stylescope::trend_fit(points);
    if (args.output.format == "table") {
        write_output(args.output,
                     "slope = " + fixed(fit.slope, 6) + " per decade\nintercept = " +
                         fixed(fit.intercept, 6) + "\np = " + fixed(fit.p_value, 6) +
                         "\nn = " + std::to_string(fit.n_points) + "\n");
    } else {
        emit_json(args.output, to_json(fit));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stylescope: function-word stylometry toolkit"};
    app.require_subcommand(1);

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "Variability statistics V1-V4");
    stats->add_option("--collection", stats_args.collections, "Count table CSV")
        ->required();
    stats->add_option("--lexicon", stats_args.lexicon_path,
                      "Lexicon file the tables must match");
    stats->add_option("--min-expected", stats_args.min_expected,
                      "Also skip cells with expected count below this");
    stats->add_flag("--cell-stats", stats_args.with_cell_stats,
                    "Include contingency cell statistics");
    add_output_flags(stats, stats_args.output);

    IngestArgs ingest_args;
    CLI::App* ingest = app.add_subcommand("ingest", "Count texts into a CSV table");
    ingest->add_option("files", ingest_args.files, "Plain-text files");
    ingest->add_option("--manifest", ingest_args.manifest_path, "JSON manifest");
    ingest->add_option("--dir", ingest_args.dir_path, "Directory of .txt files");
    ingest->add_option("-o,--out", ingest_args.out_path, "CSV output path");
    ingest->add_option("--exclusions-out", ingest_args.exclusions_path,
                       "Write the exclusion log here (default stderr)");
    ingest->add_option("--lexicon", ingest_args.lexicon_path, "Lexicon file");
    ingest->add_option("--label", ingest_args.label, "Collection label");
    ingest->add_option("--author", ingest_args.author, "Author for all files");
    ingest->add_option("--kind", ingest_args.kind, "majority|dissent|other")
        ->check(CLI::IsMember({"majority", "dissent", "other"}));
    ingest->add_option("--min-words", ingest_args.min_words,
                       "Exclude documents shorter than this")
        ->capture_default_str();
    ingest->add_option("--chunk-size", ingest_args.chunk_size,
                       "Split each text into chunks of this many tokens");
    ingest->add_option("--strip-start", ingest_args.strip_start,
                       "Text before (and including) this marker is dropped");
    ingest->add_option("--strip-end", ingest_args.strip_end,
                       "Text from this marker on is dropped");

    MergeArgs merge_args;
    CLI::App* merge = app.add_subcommand("merge", "Concatenate count tables");
    merge->add_option("inputs", merge_args.inputs, "Count table CSVs")
        ->required()
        ->expected(1, -1);
    merge->add_option("-o,--out", merge_args.out_path, "CSV output path");
    merge->add_option("--label", merge_args.label, "Merged label");
    merge->add_option("--lexicon", merge_args.lexicon_path,
                      "Lexicon file the tables must match");

    BootstrapArgs bootstrap_args;
    CLI::App* bootstrap = app.add_subcommand("bootstrap",
                                             "Bootstrap comparison of V4");
    bootstrap->add_option("--a", bootstrap_args.a_path, "Count table for side A");
    bootstrap->add_option("--b", bootstrap_args.b_path, "Count table for side B");
    bootstrap->add_option("--within", bootstrap_args.within_path,
                          "Split one count table by date predicates instead");
    bootstrap->add_option("--a-years", bootstrap_args.a_years, "Side A year range LO:HI");
    bootstrap->add_option("--b-years", bootstrap_args.b_years, "Side B year range LO:HI");
    bootstrap->add_option("--a-months", bootstrap_args.a_months,
                          "Side A month range LO:HI (wraps across December)");
    bootstrap->add_option("--b-months", bootstrap_args.b_months,
                          "Side B month range LO:HI (wraps across December)");
    bootstrap->add_option("--lexicon", bootstrap_args.lexicon_path,
                          "Lexicon file the tables must match");
    bootstrap->add_option("--sample-size", bootstrap_args.params.sample_size)
        ->capture_default_str();
    bootstrap->add_option("--replicates", bootstrap_args.params.replicates)
        ->capture_default_str();
    bootstrap->add_option("--seed", bootstrap_args.params.seed, "RNG seed")->required();
    bootstrap->add_flag("--no-replacement", bootstrap_args.no_replacement,
                        "Sample without replacement");
    bootstrap->add_option("--pair-cap", bootstrap_args.pair_cap,
                          "Materialize at most this many cross differences")
        ->capture_default_str();
    add_output_flags(bootstrap, bootstrap_args.output);

    CLI::App* classify = app.add_subcommand("classify", "Authorship classification");
    classify->require_subcommand(1);

    CrossvalArgs crossval_args;
    CLI::App* crossval = classify->add_subcommand("crossval",
                                                  "Leave-one-out cross-validation");
    crossval->add_option("--a", crossval_args.a_path, "Count table for side A");
    crossval->add_option("--b", crossval_args.b_path, "Count table for side B");
    crossval->add_option("--pairs", crossval_args.pairs,
                         "Run every pairing of these count tables")
        ->expected(2, -1);
    crossval->add_option("--method", crossval_args.method, "nb|linear")
        ->check(CLI::IsMember({"nb", "naive_bayes", "linear"}))
        ->capture_default_str();
    crossval->add_option("--lexicon", crossval_args.lexicon_path,
                         "Lexicon file the tables must match");
    add_output_flags(crossval, crossval_args.output);

    PredictArgs predict_args;
    CLI::App* predict = classify->add_subcommand("predict", "Classify fresh documents");
    predict->add_option("--a", predict_args.a_path, "Count table for side A")->required();
    predict->add_option("--b", predict_args.b_path, "Count table for side B")->required();
    predict->add_option("--test", predict_args.test_path, "Count table to classify")
        ->required();
    predict->add_option("--method", predict_args.method, "nb|linear")
        ->check(CLI::IsMember({"nb", "naive_bayes", "linear"}))
        ->capture_default_str();
    predict->add_option("--model-out", predict_args.model_out,
                        "Write the trained model JSON here");
    predict->add_option("--lexicon", predict_args.lexicon_path,
                        "Lexicon file the tables must match");
    add_output_flags(predict, predict_args.output);

    OutlierArgs outlier_args;
    CLI::App* outlier = classify->add_subcommand("outlier",
                                                 "Leave-one-out outlier ranking");
    outlier->add_option("--collection", outlier_args.collection_path, "Count table CSV")
        ->required();
    outlier->add_option("--truth", outlier_args.truth_id,
                        "Id of the known outlier (enables the 0-100 score)");
    outlier->add_option("--lexicon", outlier_args.lexicon_path,
                        "Lexicon file the tables must match");
    add_output_flags(outlier, outlier_args.output);

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand("synth", "Null-model random text experiment");
    synth->add_option("--docs", synth_args.params.n_docs)->capture_default_str();
    synth->add_option("--words", synth_args.params.words_per_doc)->capture_default_str();
    synth->add_option("--p-fn", synth_args.params.p_function,
                      "Probability that a word is a function word")
        ->capture_default_str();
    synth->add_option("--seed", synth_args.params.seed, "RNG seed")->required();
    synth->add_option("--runs", synth_args.runs)->capture_default_str();
    synth->add_option("--label", synth_args.params.label)->capture_default_str();
    synth->add_option("--propensity", synth_args.propensity_path,
                      "File of J per-word probabilities replacing the uniform split");
    synth->add_option("--emit", synth_args.emit_dir,
                      "Also write the generated corpus (count table) here");
    add_output_flags(synth, synth_args.output);

    TrendArgs trend_args;
    CLI::App* trend = app.add_subcommand("trend", "Least-squares trend of V4 over years");
    trend->add_option("--points", trend_args.points_path,
                      "CSV of year,V4 rows (header optional)")
        ->required();
    add_output_flags(trend, trend_args.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (stats->parsed()) run_stats(stats_args);
        if (ingest->parsed()) run_ingest(ingest_args);
        if (merge->parsed()) run_merge(merge_args);
        if (bootstrap->parsed()) run_bootstrap(bootstrap_args);
        if (classify->parsed()) {
            if (crossval->parsed()) run_crossval(crossval_args);
            if (predict->parsed()) run_predict(predict_args);
            if (outlier->parsed()) run_outlier(outlier_args);
        }
        if (synth->parsed()) run_synth(synth_args);
        if (trend->parsed()) run_trend(trend_args);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
