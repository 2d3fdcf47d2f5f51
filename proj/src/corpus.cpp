#include "stylescope/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "stylescope/errors.hpp"
#include "stylescope/parallel.hpp"
#include "stylescope/tokenize.hpp"

namespace stylescope {

Document count_document(const std::vector<std::string>& tokens,
                        const FunctionWordLexicon& lexicon, std::string id,
                        std::string author, DocKind kind, std::optional<Date> date) {
    Document doc;
    doc.id = std::move(id);
    doc.author = std::move(author);
    doc.kind = kind;
    doc.date = date;
    doc.total_words = static_cast<std::int64_t>(tokens.size());
    doc.counts.assign(lexicon.size(), 0);
    for (const std::string& t : tokens) {
        if (auto j = lexicon.index_of(t)) ++doc.counts[*j];
    }
    return doc;
}

Manifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("manifest: cannot open '" + path.string() + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("manifest '" + path.string() + "': " + e.what());
    }
    Manifest m;
    m.label = j.value("label", path.stem().string());
    if (j.contains("lexicon") && !j["lexicon"].is_null())
        m.lexicon_path = j["lexicon"].get<std::string>();
    if (!j.contains("documents") || !j["documents"].is_array())
        throw parse_error("manifest '" + path.string() + "': missing 'documents' array");
    for (const auto& e : j["documents"]) {
        ManifestEntry entry;
        if (e.is_string()) {
            entry.path = e.get<std::string>();
        } else {
            if (!e.contains("path"))
                throw parse_error("manifest '" + path.string() +
                                  "': document entry without 'path'");
            entry.path = e["path"].get<std::string>();
            entry.id = e.value("id", std::string{});
            entry.author = e.value("author", std::string{});
            entry.kind = kind_from_string(e.value("kind", std::string{}));
            entry.date = date_from_string(e.value("date", std::string{}));
        }
        if (entry.id.empty())
            entry.id = std::filesystem::path(entry.path).stem().string();
        m.documents.push_back(std::move(entry));
    }
    return m;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("error reading '" + path.string() + "'");
    return std::move(buf).str();
}

std::string chunk_id(const std::string& base, std::size_t index, std::size_t total) {
    std::size_t width = 1;
    for (std::size_t t = total; t >= 10; t /= 10) ++width;
    std::ostringstream out;
    out << base << '.';
    std::string num = std::to_string(index + 1);
    out << std::string(width > num.size() ? width - num.size() : 0, '0') << num;
    return out.str();
}

} // namespace

LoadResult load_collection(const Manifest& manifest, const FunctionWordLexicon& lexicon,
                           const LoadOptions& options,
                           const std::filesystem::path& base_dir) {
    // Per-entry outputs, assembled in manifest order after the parallel pass.
    std::vector<std::vector<Document>> loaded(manifest.documents.size());
    std::vector<std::vector<Exclusion>> dropped(manifest.documents.size());

    parallel_for(manifest.documents.size(), [&](std::size_t i) {
        const ManifestEntry& entry = manifest.documents[i];
        std::filesystem::path p(entry.path);
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        std::string text = read_file(p);
        std::string body = strip_boilerplate(text, options.strip_start, options.strip_end);
        std::vector<std::string> tokens = tokenize(body);

        auto admit = [&](std::vector<std::string> unit_tokens, std::string id) {
            Document d = count_document(unit_tokens, lexicon, std::move(id),
                                        entry.author, entry.kind, entry.date);
            if (d.total_words < options.min_words) {
                dropped[i].push_back(
                    {d.id, entry.path, d.total_words, options.min_words});
            } else {
                loaded[i].push_back(std::move(d));
            }
        };

        if (options.chunk_size > 0) {
            auto chunks = chunk(tokens, options.chunk_size);
            if (chunks.empty()) {
                // shorter than one chunk: the whole file is discarded
                dropped[i].push_back({entry.id, entry.path,
                                      static_cast<std::int64_t>(tokens.size()),
                                      static_cast<std::int64_t>(options.chunk_size)});
            }
            for (std::size_t c = 0; c < chunks.size(); ++c)
                admit(std::move(chunks[c]), chunk_id(entry.id, c, chunks.size()));
        } else {
            admit(std::move(tokens), entry.id);
        }
    });

    std::vector<Document> docs;
    std::vector<Exclusion> excluded;
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        std::move(loaded[i].begin(), loaded[i].end(), std::back_inserter(docs));
        std::move(dropped[i].begin(), dropped[i].end(), std::back_inserter(excluded));
    }
    if (docs.empty())
        throw empty_collection_error("collection '" + manifest.label +
                                     "' is empty after the " +
                                     std::to_string(options.min_words) +
                                     "-word filter");
    return {Collection(manifest.label, lexicon, std::move(docs)), std::move(excluded)};
}

LoadResult load_collection(const std::filesystem::path& manifest_path,
                           std::optional<FunctionWordLexicon> lexicon,
                           const LoadOptions& options) {
    Manifest m = read_manifest(manifest_path);
    std::filesystem::path base = manifest_path.parent_path();
    FunctionWordLexicon lex = lexicon             ? std::move(*lexicon)
                              : m.lexicon_path
                                  ? FunctionWordLexicon::load(
                                        std::filesystem::path(*m.lexicon_path)
                                                .is_relative()
                                            ? base / *m.lexicon_path
                                            : std::filesystem::path(*m.lexicon_path))
                                  : FunctionWordLexicon::default_lexicon();
    return load_collection(m, lex, options, base);
}

namespace {

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

void append_csv_field(std::string& out, const std::string& s) {
    if (!needs_quoting(s)) {
        out += s;
        return;
    }
    out += '"';
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

// One CSV record, handling quoted fields; returns false at end of input.
// Tracks the 1-based line number of the record start for error messages.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& line_no, std::size_t& record_line) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;
    record_line = line_no;
    int ch;
    while ((ch = in.get()) != EOF) {
        any = true;
        char c = static_cast<char>(ch);
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field += '"';
                    in.get();
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line_no;
                field += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            ++line_no;
            fields.push_back(std::move(field));
            return true;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (!any) return false;
    fields.push_back(std::move(field));
    return true;
}

std::int64_t parse_count(const std::string& s, std::size_t line,
                         const std::string& what) {
    if (s.empty())
        throw parse_error("count table line " + std::to_string(line) + ": empty " +
                          what);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw parse_error("count table line " + std::to_string(line) + ": '" + s +
                          "' is not an integer " + what);
    if (value < 0)
        throw parse_error("count table line " + std::to_string(line) +
                          ": negative " + what + " '" + s + "'");
    return value;
}

} // namespace

std::string counts_to_csv(const Collection& collection) {
    std::string out = "id,author,kind,date,w";
    for (const std::string& w : collection.lexicon().words()) {
        out += ',';
        out += w;
    }
    out += '\n';
    for (const Document& d : collection.docs()) {
        append_csv_field(out, d.id);
        out += ',';
        append_csv_field(out, d.author);
        out += ',';
        out += to_string(d.kind);
        out += ',';
        if (d.date) out += to_string(*d.date);
        out += ',';
        out += std::to_string(d.total_words);
        for (std::int64_t c : d.counts) {
            out += ',';
            out += std::to_string(c);
        }
        out += '\n';
    }
    return out;
}

void save_counts(const Collection& collection, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write '" + path.string() + "'");
    out << counts_to_csv(collection);
    if (!out) throw io_error("error writing '" + path.string() + "'");
}

Collection load_counts(const std::filesystem::path& path,
                       std::optional<FunctionWordLexicon> expect,
                       std::optional<std::string> label) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path.string() + "'");

    std::size_t line_no = 1, record_line = 0;
    std::vector<std::string> fields;
    if (!read_csv_record(in, fields, line_no, record_line))
        throw parse_error("count table '" + path.string() + "': empty file");
    if (fields.size() < 6 || fields[0] != "id" || fields[1] != "author" ||
        fields[2] != "kind" || fields[3] != "date" || fields[4] != "w")
        throw parse_error("count table '" + path.string() +
                          "' line 1: bad header (want id,author,kind,date,w,<words>)");
    FunctionWordLexicon lexicon = FunctionWordLexicon::from_words(
        std::vector<std::string>(fields.begin() + 5, fields.end()));
    if (expect && !(lexicon == *expect))
        throw lexicon_mismatch_error("count table '" + path.string() +
                                     "': header lexicon differs from the active lexicon");

    std::vector<Document> docs;
    while (read_csv_record(in, fields, line_no, record_line)) {
        if (fields.size() == 1 && fields[0].empty()) continue; // trailing newline
        if (fields.size() != 5 + lexicon.size())
            throw parse_error("count table line " + std::to_string(record_line) +
                              ": expected " + std::to_string(5 + lexicon.size()) +
                              " fields, got " + std::to_string(fields.size()));
        Document d;
        d.id = fields[0];
        d.author = fields[1];
        try {
            d.kind = kind_from_string(fields[2]);
            d.date = date_from_string(fields[3]);
        } catch (const error& e) {
            throw parse_error("count table line " + std::to_string(record_line) +
                              ": " + e.what());
        }
        d.total_words = parse_count(fields[4], record_line, "word count");
        d.counts.reserve(lexicon.size());
        for (std::size_t j = 0; j < lexicon.size(); ++j)
            d.counts.push_back(parse_count(fields[5 + j], record_line, "count"));
        if (d.remainder() < 0)
            throw parse_error("count table line " + std::to_string(record_line) +
                              ": function-word counts exceed w");
        docs.push_back(std::move(d));
    }
    if (docs.empty())
        throw empty_collection_error("count table '" + path.string() +
                                     "' has no document rows");
    std::string lbl = label ? std::move(*label) : path.stem().string();
    return Collection(std::move(lbl), std::move(lexicon), std::move(docs));
}

} // namespace stylescope
