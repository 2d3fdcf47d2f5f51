// Python bindings for the stylescope core. Reports come back as plain dicts
// (via the JSON layer) so the python side stays schema-identical to the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "stylescope/bootstrap.hpp"
#include "stylescope/classify.hpp"
#include "stylescope/corpus.hpp"
#include "stylescope/errors.hpp"
#include "stylescope/json_io.hpp"
#include "stylescope/synth.hpp"
#include "stylescope/tokenize.hpp"
#include "stylescope/variability.hpp"

namespace py = pybind11;
using namespace stylescope;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

std::vector<double> doc_fractions(const Document& d) {
    if (d.total_words == 0) throw error("document '" + d.id + "' has zero words");
    std::vector<double> f(d.counts.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        f[j] = static_cast<double>(d.counts[j]) / static_cast<double>(d.total_words);
    return f;
}

} // namespace

PYBIND11_MODULE(_stylescope, m) {
    m.doc() = "Function-word stylometry: variability statistics, bootstrap "
              "comparisons, and authorship classifiers";

    py::register_exception<error>(m, "StylescopeError");

    py::enum_<DocKind>(m, "DocKind")
        .value("majority", DocKind::majority)
        .value("dissent", DocKind::dissent)
        .value("other", DocKind::other);

    py::class_<FunctionWordLexicon>(m, "Lexicon")
        .def_static("default", [] { return FunctionWordLexicon::default_lexicon(); })
        .def_static("from_words",
                    [](std::vector<std::string> w) {
                        return FunctionWordLexicon::from_words(std::move(w));
                    })
        .def_static("load", &FunctionWordLexicon::load)
        .def_property_readonly("words", &FunctionWordLexicon::words)
        .def("__len__", &FunctionWordLexicon::size)
        .def("__eq__", [](const FunctionWordLexicon& a,
                          const FunctionWordLexicon& b) { return a == b; });

    py::class_<Document>(m, "Document")
        .def(py::init([](std::string id, std::int64_t w, std::vector<std::int64_t> counts,
                         std::string author, DocKind kind) {
                 Document d;
                 d.id = std::move(id);
                 d.total_words = w;
                 d.counts = std::move(counts);
                 d.author = std::move(author);
                 d.kind = kind;
                 return d;
             }),
             py::arg("id"), py::arg("total_words"), py::arg("counts"),
             py::arg("author") = "", py::arg("kind") = DocKind::other)
        .def_readonly("id", &Document::id)
        .def_readonly("author", &Document::author)
        .def_readonly("total_words", &Document::total_words)
        .def_readonly("counts", &Document::counts)
        .def_property_readonly("remainder", &Document::remainder)
        .def_property_readonly("fractions", &doc_fractions);

    py::class_<Collection>(m, "Collection")
        .def(py::init<std::string, FunctionWordLexicon, std::vector<Document>>(),
             py::arg("label"), py::arg("lexicon"), py::arg("docs"))
        .def_property_readonly("label", &Collection::label)
        .def_property_readonly("lexicon", &Collection::lexicon)
        .def_property_readonly("docs", &Collection::docs)
        .def("__len__", &Collection::size);

    m.def("tokenize", [](const std::string& s) { return tokenize(s); });
    m.def("strip_boilerplate",
          [](const std::string& text, const std::string& start, const std::string& end) {
              return strip_boilerplate(text, start, end);
          },
          py::arg("text"), py::arg("start_marker") = "", py::arg("end_marker") = "");
    m.def("chunk", &chunk, py::arg("tokens"), py::arg("chunk_size"));
    m.def("count_document",
          [](const std::vector<std::string>& tokens, const FunctionWordLexicon& lex,
             std::string id, std::string author) {
              return count_document(tokens, lex, std::move(id), std::move(author));
          },
          py::arg("tokens"), py::arg("lexicon"), py::arg("id"), py::arg("author") = "");

    m.def("load_counts",
          [](const std::filesystem::path& p) { return load_counts(p); });
    m.def("save_counts", &save_counts, py::arg("collection"), py::arg("path"));
    m.def("counts_to_csv", &counts_to_csv);

    m.def("fractions", [](const Collection& c) {
        Matrix f = fractions(c);
        std::vector<std::vector<double>> rows(f.rows());
        for (std::size_t i = 0; i < f.rows(); ++i)
            rows[i].assign(f.row(i).begin(), f.row(i).end());
        return rows;
    });
    m.def("pooled_rates", &pooled_rates);
    m.def("chisq_v4",
          [](const Collection& c, double min_expected) {
              return json_to_py(to_json(chisq_v4(c, min_expected)));
          },
          py::arg("collection"), py::arg("min_expected") = 0.0);
    m.def("cell_stats",
          [](const Collection& c) { return json_to_py(to_json(cell_stats(c))); });
    m.def("merge",
          [](const std::vector<Collection>& cs, std::string label) {
              return merge(cs, std::move(label));
          },
          py::arg("collections"), py::arg("label") = "");
    m.def("trend_fit", [](const std::vector<std::pair<double, double>>& pts) {
        return json_to_py(to_json(trend_fit(pts)));
    });

    py::class_<BootstrapParams>(m, "BootstrapParams")
        .def(py::init([](std::int64_t sample_size, std::int64_t replicates,
                         bool with_replacement, std::uint64_t seed) {
                 BootstrapParams p{sample_size, replicates, with_replacement, seed};
                 p.validate();
                 return p;
             }),
             py::arg("sample_size") = 100, py::arg("replicates") = 1000,
             py::arg("with_replacement") = true, py::arg("seed") = 0)
        .def_readonly("sample_size", &BootstrapParams::sample_size)
        .def_readonly("replicates", &BootstrapParams::replicates)
        .def_readonly("with_replacement", &BootstrapParams::with_replacement)
        .def_readonly("seed", &BootstrapParams::seed);

    m.def("resample", &resample, py::arg("collection"), py::arg("params"),
          py::arg("replicate_index"));
    m.def("v4_distribution", &v4_distribution, py::arg("collection"), py::arg("params"));
    m.def("bootstrap_compare",
          [](const std::vector<double>& a, const std::vector<double>& b,
             const BootstrapParams& params) {
              return json_to_py(to_json(compare(a, b, params)));
          },
          py::arg("dist_a"), py::arg("dist_b"),
          py::arg("params") = BootstrapParams{});

    m.def("nb_train", &nb_train);
    m.def("nb_loglike", [](const NbModel& model, const std::vector<double>& f) {
        return nb_loglike(model, f);
    });
    py::class_<NbModel>(m, "NbModel")
        .def_readonly("label", &NbModel::label)
        .def_readonly("m", &NbModel::m)
        .def_readonly("v", &NbModel::v)
        .def_readonly("n_train", &NbModel::n_train);
    py::class_<LinearModel>(m, "LinearModel")
        .def_readonly("beta", &LinearModel::beta)
        .def_readonly("label_neg", &LinearModel::label_neg)
        .def_readonly("label_pos", &LinearModel::label_pos)
        .def_readonly("rank_deficient", &LinearModel::rank_deficient);
    m.def("lin_train", &lin_train);
    m.def("lin_value", [](const LinearModel& model, const std::vector<double>& f) {
        return lin_value(model, f);
    });
    m.def("loo_crossval",
          [](const Collection& a, const Collection& b, const std::string& method) {
              return json_to_py(
                  to_json(loo_crossval(a, b, classifier_from_string(method))));
          },
          py::arg("collection_a"), py::arg("collection_b"), py::arg("method"));
    m.def("outlier_rank",
          [](const Collection& c, std::optional<std::string> truth) {
              return json_to_py(to_json(outlier_rank(c, std::move(truth))));
          },
          py::arg("collection"), py::arg("truth_id") = py::none());
    m.def("outlier_score", &outlier_score, py::arg("n"), py::arg("rank"));

    py::class_<SynthParams>(m, "SynthParams")
        .def(py::init([](std::int64_t n_docs, std::int64_t words_per_doc,
                         double p_function, std::uint64_t seed,
                         std::optional<std::vector<double>> propensity,
                         std::string label) {
                 SynthParams p;
                 p.n_docs = n_docs;
                 p.words_per_doc = words_per_doc;
                 p.p_function = p_function;
                 p.seed = seed;
                 p.propensity_override = std::move(propensity);
                 p.label = std::move(label);
                 p.validate();
                 return p;
             }),
             py::arg("n_docs") = 200, py::arg("words_per_doc") = 2000,
             py::arg("p_function") = 0.30, py::arg("seed") = 0,
             py::arg("propensity_override") = py::none(),
             py::arg("label") = "synthetic");
    m.def("gen_document", &gen_document, py::arg("params"), py::arg("doc_index"));
    m.def("gen_collection", &gen_collection);
    m.def("null_experiment",
          [](const SynthParams& p, std::int64_t runs) {
              return json_to_py(to_json(null_experiment(p, runs)));
          },
          py::arg("params"), py::arg("runs") = 10);
}
