#include "stylescope/document.hpp"

#include <charconv>
#include <numeric>
#include <unordered_set>

#include "stylescope/errors.hpp"

namespace stylescope {

std::string_view to_string(DocKind k) {
    switch (k) {
        case DocKind::majority: return "majority";
        case DocKind::dissent: return "dissent";
        case DocKind::other: return "other";
    }
    return "other";
}

DocKind kind_from_string(std::string_view s) {
    if (s == "majority") return DocKind::majority;
    if (s == "dissent") return DocKind::dissent;
    if (s == "other" || s.empty()) return DocKind::other;
    throw error("unknown document kind '" + std::string(s) + "'");
}

std::string to_string(const Date& d) {
    char buf[16];
    std::string out;
    std::snprintf(buf, sizeof buf, "%04d", d.year);
    out = buf;
    if (d.month > 0) {
        std::snprintf(buf, sizeof buf, "-%02d", d.month);
        out += buf;
        if (d.day > 0) {
            std::snprintf(buf, sizeof buf, "-%02d", d.day);
            out += buf;
        }
    }
    return out;
}

namespace {

int parse_int_field(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw error("bad date " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

} // namespace

std::optional<Date> date_from_string(std::string_view s) {
    if (s.empty()) return std::nullopt;
    Date d;
    auto dash1 = s.find('-');
    if (dash1 == std::string_view::npos) {
        d.year = parse_int_field(s, "year");
        return d;
    }
    d.year = parse_int_field(s.substr(0, dash1), "year");
    auto rest = s.substr(dash1 + 1);
    auto dash2 = rest.find('-');
    if (dash2 == std::string_view::npos) {
        d.month = parse_int_field(rest, "month");
    } else {
        d.month = parse_int_field(rest.substr(0, dash2), "month");
        d.day = parse_int_field(rest.substr(dash2 + 1), "day");
    }
    if (d.month < 0 || d.month > 12 || d.day < 0 || d.day > 31)
        throw error("bad date '" + std::string(s) + "'");
    if (d.month == 0 && d.day > 0)
        throw error("bad date '" + std::string(s) + "': day without month");
    return d;
}

std::int64_t Document::function_words() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t Document::remainder() const { return total_words - function_words(); }

Collection::Collection(std::string label, FunctionWordLexicon lexicon,
                       std::vector<Document> docs)
    : label_(std::move(label)), lexicon_(std::move(lexicon)), docs_(std::move(docs)) {
    if (docs_.empty())
        throw empty_collection_error("collection '" + label_ + "' has no documents");
    std::unordered_set<std::string_view> seen;
    seen.reserve(docs_.size());
    for (const Document& d : docs_) {
        if (d.counts.size() != lexicon_.size())
            throw error("collection '" + label_ + "': document '" + d.id +
                        "' counted against a different lexicon size");
        if (!seen.insert(d.id).second)
            throw error("collection '" + label_ + "': duplicate document id '" +
                        d.id + "'");
        std::int64_t sum = 0;
        for (std::int64_t c : d.counts) {
            if (c < 0)
                throw error("collection '" + label_ + "': negative count in document '" +
                            d.id + "'");
            sum += c;
        }
        if (d.total_words < sum)
            throw error("collection '" + label_ + "': document '" + d.id +
                        "' has more function words than total words");
    }
}

std::int64_t Collection::total_word_count() const {
    std::int64_t total = 0;
    for (const Document& d : docs_) total += d.total_words;
    return total;
}

} // namespace stylescope
