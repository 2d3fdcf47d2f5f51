#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stylescope {

// Splits text into lowercased maximal runs of alphabetic characters. Every
// other byte (digits, punctuation, apostrophes, hyphens, whitespace, invalid
// UTF-8) is a delimiter, so "don't" tokenizes as {don, t} and "cat-of" as
// {cat, of}. Alphabetic covers ASCII letters plus the Latin-1 Supplement and
// Latin Extended-A/B letter ranges; case folding is applied to the ASCII and
// Latin-1 ranges (the lexicon itself is pure lowercase ASCII, so folding of
// rarer letters never affects counts).
std::vector<std::string> tokenize(std::string_view text);

// Returns the text strictly between the first occurrence of start_marker and
// the first subsequent occurrence of end_marker. An empty marker, or a
// marker absent from the text, leaves that boundary at the text edge.
// Intended for Project Gutenberg style "*** START ..." / "*** END ..."
// banners.
std::string strip_boilerplate(std::string_view text,
                              std::string_view start_marker = {},
                              std::string_view end_marker = {});

// Consecutive non-overlapping chunks of exactly chunk_size tokens; the
// trailing remainder is discarded. Throws stylescope::error when
// chunk_size == 0.
std::vector<std::vector<std::string>> chunk(const std::vector<std::string>& tokens,
                                            std::size_t chunk_size);

} // namespace stylescope
