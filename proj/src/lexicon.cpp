#include "stylescope/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stylescope/errors.hpp"

namespace stylescope {

namespace {

// The default 63-word list, in its fixed column order.
const char* const kDefaultWords[] = {
    "a",    "all",   "also",  "an",    "and",   "any",   "are",   "as",
    "at",   "be",    "been",  "but",   "by",    "can",   "do",    "down",
    "even", "for",   "from",  "had",   "has",   "have",  "her",   "his",
    "if",   "in",    "into",  "is",    "it",    "its",   "may",   "more",
    "must", "no",    "not",   "now",   "of",    "on",    "one",   "only",
    "or",   "our",   "so",    "some",  "such",  "than",  "that",  "the",
    "their", "then", "there", "things", "this", "to",    "up",    "was",
    "were", "what",  "when",  "which", "who",   "with",  "would",
};

bool is_lower_ascii_word(const std::string& w) {
    if (w.empty()) return false;
    return std::all_of(w.begin(), w.end(),
                       [](unsigned char c) { return c >= 'a' && c <= 'z'; });
}

} // namespace

const FunctionWordLexicon& FunctionWordLexicon::default_lexicon() {
    static const FunctionWordLexicon instance = from_words(
        std::vector<std::string>(std::begin(kDefaultWords), std::end(kDefaultWords)));
    return instance;
}

FunctionWordLexicon FunctionWordLexicon::from_words(std::vector<std::string> words) {
    FunctionWordLexicon lex;
    lex.words_ = std::move(words);
    if (lex.words_.empty()) throw error("lexicon: empty word list");
    lex.index_.reserve(lex.words_.size());
    for (std::size_t j = 0; j < lex.words_.size(); ++j) {
        const std::string& w = lex.words_[j];
        if (!is_lower_ascii_word(w))
            throw error("lexicon: entry '" + w + "' is not a lowercase ASCII word");
        if (!lex.index_.emplace(w, j).second)
            throw error("lexicon: duplicate entry '" + w + "'");
    }
    return lex;
}

FunctionWordLexicon FunctionWordLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("lexicon: cannot open '" + path.string() + "'");
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string w;
        while (fields >> w) words.push_back(w);
    }
    if (words.empty())
        throw parse_error("lexicon: no words in '" + path.string() + "'");
    return from_words(std::move(words));
}

std::optional<std::size_t> FunctionWordLexicon::index_of(std::string_view w) const {
    auto it = index_.find(std::string(w));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace stylescope
