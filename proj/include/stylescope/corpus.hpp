#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stylescope/document.hpp"
#include "stylescope/lexicon.hpp"

namespace stylescope {

// Exact occurrence counts of each lexicon word over the token list;
// total_words counts every token.
Document count_document(const std::vector<std::string>& tokens,
                        const FunctionWordLexicon& lexicon, std::string id,
                        std::string author = {}, DocKind kind = DocKind::other,
                        std::optional<Date> date = {});

struct ManifestEntry {
    std::string path;
    std::string id;     // defaults to the path stem
    std::string author;
    DocKind kind = DocKind::other;
    std::optional<Date> date;
};

struct Manifest {
    std::string label;
    std::optional<std::string> lexicon_path;
    std::vector<ManifestEntry> documents;
};

// JSON manifest: {"label": ..., "lexicon": optional path,
//                 "documents": [{"path","id","author","kind","date"}, ...]}
Manifest read_manifest(const std::filesystem::path& path);

struct LoadOptions {
    std::int64_t min_words = 250;
    std::size_t chunk_size = 0; // 0 = whole file is one document
    std::string strip_start;    // empty = no start marker
    std::string strip_end;
};

struct Exclusion {
    std::string id;
    std::string path;
    std::int64_t words = 0;
    std::int64_t min_words = 0;
};

struct LoadResult {
    Collection collection;
    std::vector<Exclusion> excluded;
};

// Strips, tokenizes and counts every manifest entry; entries below min_words
// are excluded and reported. Relative paths resolve against base_dir. Files
// load in parallel but the collection is assembled in manifest order.
// Throws io_error naming any unreadable file and empty_collection_error when
// nothing survives the filter.
LoadResult load_collection(const Manifest& manifest,
                           const FunctionWordLexicon& lexicon,
                           const LoadOptions& options = {},
                           const std::filesystem::path& base_dir = {});

// Convenience overload: reads the manifest file, then resolves the lexicon
// as (explicit argument) > (manifest "lexicon" path) > (default 63 words).
LoadResult load_collection(const std::filesystem::path& manifest_path,
                           std::optional<FunctionWordLexicon> lexicon = {},
                           const LoadOptions& options = {});

// Count-table CSV. Header row: id,author,kind,date,w,<lexicon words...>;
// one row per document, integer count cells. Deterministic bytes for a given
// collection, so repeated saves of unchanged data are identical.
std::string counts_to_csv(const Collection& collection);
void save_counts(const Collection& collection, const std::filesystem::path& path);

// Parses a count table. The header names the lexicon; when `expect` is given
// and differs from the header, throws lexicon_mismatch_error. Malformed rows
// throw parse_error with the 1-based line number. The collection label is
// the file stem unless `label` is given.
Collection load_counts(const std::filesystem::path& path,
                       std::optional<FunctionWordLexicon> expect = {},
                       std::optional<std::string> label = {});

} // namespace stylescope
