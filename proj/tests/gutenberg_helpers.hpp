// Ingestion helpers for the public-domain test corpora: banner stripping,
// fixed-size chunking into collections, and chapter splitting for texts that
// stay in their authored units. Shared by the acceptance suite and its unit
// tests.

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stylescope/corpus.hpp"
#include "stylescope/tokenize.hpp"

namespace gutenberg {

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Gutenberg banner first, then any extra terminal marker (e.g. a second work
// bundled into the same file). The tail cut uses the marker's last
// occurrence so a table-of-contents mention does not truncate the body.
inline std::vector<std::string> body_tokens(const std::filesystem::path& p,
                                            const std::string& cut_tail = {}) {
    std::string body =
        stylescope::strip_boilerplate(read_file(p), "*** START", "*** END");
    if (!cut_tail.empty()) {
        auto pos = body.rfind(cut_tail);
        if (pos != std::string::npos) body.resize(pos);
    }
    return stylescope::tokenize(body);
}

inline stylescope::Collection chunked_collection(const std::string& label,
                                                 const std::filesystem::path& p,
                                                 std::size_t chunk_size,
                                                 const std::string& cut_tail = {}) {
    auto chunks = stylescope::chunk(body_tokens(p, cut_tail), chunk_size);
    const auto& lexicon = stylescope::FunctionWordLexicon::default_lexicon();
    std::vector<stylescope::Document> docs;
    for (std::size_t i = 0; i < chunks.size(); ++i)
        docs.push_back(stylescope::count_document(
            chunks[i], lexicon, label + "." + std::to_string(i + 1)));
    return stylescope::Collection(label, lexicon, std::move(docs));
}

// Splits a stripped text into its authored chapters: segments start at
// INTRODUCTION or CHAPTER headings, a GLOSSARY/INDEX tail ends the last
// chapter, and fragments under min_words (contents entries and the like)
// are dropped.
inline stylescope::Collection chapter_collection(const std::string& label,
                                                 const std::filesystem::path& p,
                                                 std::int64_t min_words = 250) {
    std::string body =
        stylescope::strip_boilerplate(read_file(p), "*** START", "*** END");
    std::istringstream lines(body);
    std::string line;
    std::vector<std::string> segments;
    std::string current;
    bool in_segment = false;
    bool done = false;
    while (!done && std::getline(lines, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        bool heading = trimmed.rfind("CHAPTER ", 0) == 0 ||
                       trimmed.rfind("INTRODUCTION", 0) == 0;
        bool tail = trimmed.rfind("GLOSSARY", 0) == 0 || trimmed.rfind("INDEX", 0) == 0;
        if (tail && in_segment) {
            done = true;
        } else if (heading) {
            if (in_segment && !current.empty()) segments.push_back(std::move(current));
            current.clear();
            in_segment = true;
        } else if (in_segment) {
            current += line;
            current += '\n';
        }
    }
    if (in_segment && !current.empty()) segments.push_back(std::move(current));

    const auto& lexicon = stylescope::FunctionWordLexicon::default_lexicon();
    std::vector<stylescope::Document> docs;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        auto d = stylescope::count_document(stylescope::tokenize(segments[i]), lexicon,
                                            label + "." + std::to_string(i + 1));
        if (d.total_words >= min_words) docs.push_back(std::move(d));
    }
    return stylescope::Collection(label, lexicon, std::move(docs));
}

} // namespace gutenberg
