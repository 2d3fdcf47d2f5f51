#include "stylescope/tokenize.hpp"

#include <cstdint>

#include "stylescope/errors.hpp"

namespace stylescope {

namespace {

// Letter test over the ranges that occur in Latin-script plain text:
// ASCII, Latin-1 Supplement (minus the multiplication/division signs) and
// Latin Extended-A/B.
bool is_letter(char32_t cp) {
    if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
    if (cp >= 0x00C0 && cp <= 0x00FF) return cp != 0x00D7 && cp != 0x00F7;
    if (cp >= 0x0100 && cp <= 0x024F) return true;
    return false;
}

char32_t fold_case(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

// Decodes one UTF-8 code point at position i (advancing it). Malformed
// bytes decode as U+FFFD, which is a delimiter, so bad input degrades to
// token breaks instead of failing.
char32_t next_codepoint(std::string_view text, std::size_t& i) {
    const auto byte = [&](std::size_t k) {
        return static_cast<std::uint8_t>(text[k]);
    };
    std::uint8_t b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + len > text.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        std::uint8_t bk = byte(i + k);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += len;
    return cp;
}

} // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = next_codepoint(text, i);
        if (is_letter(cp)) {
            append_utf8(current, fold_case(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::string strip_boilerplate(std::string_view text, std::string_view start_marker,
                              std::string_view end_marker) {
    std::size_t begin = 0;
    if (!start_marker.empty()) {
        if (auto pos = text.find(start_marker); pos != std::string_view::npos)
            begin = pos + start_marker.size();
    }
    std::size_t end = text.size();
    if (!end_marker.empty()) {
        if (auto pos = text.find(end_marker, begin); pos != std::string_view::npos)
            end = pos;
    }
    return std::string(text.substr(begin, end - begin));
}

std::vector<std::vector<std::string>> chunk(const std::vector<std::string>& tokens,
                                            std::size_t chunk_size) {
    if (chunk_size == 0) throw error("chunk: chunk_size must be >= 1");
    std::vector<std::vector<std::string>> chunks;
    std::size_t n_chunks = tokens.size() / chunk_size;
    chunks.reserve(n_chunks);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        auto first = tokens.begin() + static_cast<std::ptrdiff_t>(c * chunk_size);
        chunks.emplace_back(first, first + static_cast<std::ptrdiff_t>(chunk_size));
    }
    return chunks;
}

} // namespace stylescope
