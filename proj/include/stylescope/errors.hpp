#pragma once

#include <stdexcept>
#include <string>

namespace stylescope {

// Base for all data-level failures (I/O, parsing, invariant violations on
// user input). The CLI maps these to exit code 1.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A referenced file is missing or unreadable. Message names the file.
class io_error : public error {
public:
    explicit io_error(const std::string& what) : error(what) {}
};

// Malformed persisted data. Message carries the line number when known.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

// A collection ended up with zero documents after filtering.
class empty_collection_error : public error {
public:
    explicit empty_collection_error(const std::string& what) : error(what) {}
};

// Two collections (or a count table and the active lexicon) disagree on
// the function-word lexicon.
class lexicon_mismatch_error : public error {
public:
    explicit lexicon_mismatch_error(const std::string& what) : error(what) {}
};

} // namespace stylescope
