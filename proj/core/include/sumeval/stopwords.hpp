#pragma once

#include <memory>
#include <string>
#include <unordered_set>

#include "sumeval/tokenize.hpp"

namespace sumeval {

class StopwordSet {
public:
    StopwordSet() = default;
    explicit StopwordSet(std::unordered_set<std::string> words) : words_(std::move(words)) {}

    bool contains(const std::string& token) const { return words_.count(token) > 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Parses a stopword list: UTF-8, one token per line, '#'-prefixed comment
// lines ignored, surrounding whitespace trimmed.
StopwordSet load_stopword_list(const std::string& path);

// Resolves the stopword file for a config. An explicit path is used as-is.
// Otherwise the bundled English list is located via the SUMEVAL_RESOURCES
// environment variable or the compiled-in resource directory, and its
// SHA-256 checksum is verified against the recorded value.
std::string resolve_stopword_path(const TokenizerConfig& cfg);

// Cached, shared, read-only. When cfg.stem is set the returned set contains
// the stemmed stopwords, since removal runs after stemming.
const StopwordSet& stopword_set_for(const TokenizerConfig& cfg);

// SHA-256 of a file's contents as a lowercase hex string.
std::string sha256_file_hex(const std::string& path);

}  // namespace sumeval
