#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stylescope {

// An ordered, deduplicated list of lowercase function words. The position of
// a word is its column identity everywhere downstream (count tables,
// fraction matrices, model coefficients), so the order is fixed at
// construction and never changes.
class FunctionWordLexicon {
public:
    // The 63-word default list. Built once, shared.
    static const FunctionWordLexicon& default_lexicon();

    // Validates and adopts the given word order. Throws stylescope::error on
    // duplicates, empty entries, or non-lowercase-ASCII characters.
    static FunctionWordLexicon from_words(std::vector<std::string> words);

    // Plain-text lexicon file: one word per line, '#' starts a comment,
    // blank lines ignored.
    static FunctionWordLexicon load(const std::filesystem::path& path);

    std::size_t size() const { return words_.size(); } // J
    const std::vector<std::string>& words() const { return words_; }
    const std::string& word(std::size_t j) const { return words_[j]; }

    std::optional<std::size_t> index_of(std::string_view w) const;

    bool operator==(const FunctionWordLexicon& other) const {
        return words_ == other.words_;
    }

private:
    FunctionWordLexicon() = default;

    std::vector<std::string> words_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace stylescope
