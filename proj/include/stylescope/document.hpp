#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylescope/lexicon.hpp"

namespace stylescope {

enum class DocKind { majority, dissent, other };

std::string_view to_string(DocKind k);
DocKind kind_from_string(std::string_view s); // throws stylescope::error on unknown

// Calendar date with optional month/day (0 = unknown). Collections built
// from year-only metadata still support decade predicates.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    bool operator==(const Date&) const = default;
    auto operator<=>(const Date&) const = default;
};

std::string to_string(const Date& d);                 // "1995-10-03", "1995-10", "1995"
std::optional<Date> date_from_string(std::string_view s); // empty string -> nullopt; throws on garbage

// One text unit. `counts[j]` is the number of occurrences of lexicon word j;
// `total_words` counts every token, function word or not, so the remainder
// (non-function-word count) is total_words - sum(counts).
struct Document {
    std::string id;
    std::string author;
    DocKind kind = DocKind::other;
    std::optional<Date> date;
    std::int64_t total_words = 0;
    std::vector<std::int64_t> counts;

    std::int64_t function_words() const;
    std::int64_t remainder() const; // c0 >= 0 by construction

    bool operator==(const Document&) const = default;
};

// K documents counted against one lexicon, treated as a single corpus.
// Construction validates: K >= 1, unique ids, counts length J, nonnegative
// counts, remainder >= 0.
class Collection {
public:
    Collection(std::string label, FunctionWordLexicon lexicon,
               std::vector<Document> docs);

    const std::string& label() const { return label_; }
    const FunctionWordLexicon& lexicon() const { return lexicon_; }
    const std::vector<Document>& docs() const { return docs_; }
    const Document& doc(std::size_t i) const { return docs_[i]; }
    std::size_t size() const { return docs_.size(); } // K

    std::int64_t total_word_count() const; // sum of w_i

    bool operator==(const Collection&) const = default;

private:
    std::string label_;
    FunctionWordLexicon lexicon_;
    std::vector<Document> docs_;
};

} // namespace stylescope
