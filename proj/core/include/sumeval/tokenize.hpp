#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumeval/types.hpp"

namespace sumeval {

// Preprocessing knobs for the ROUGE text pipeline.
struct TokenizerConfig {
    bool lowercase = true;
    bool stem = false;
    bool remove_stopwords = false;
    std::optional<std::string> stopword_list_path;

    bool operator==(const TokenizerConfig&) const = default;
};

// Lowercases (per config), splits on every maximal run of non-alphanumeric
// codepoints, then applies stemming and stopword removal in that order.
// Empty input yields an empty list.
std::vector<std::string> normalize_tokenize(std::string_view text, const TokenizerConfig& cfg);

// List form is returned unchanged; raw form is split on newlines with
// surrounding whitespace trimmed and blank lines dropped.
std::vector<std::string> to_sentences(const SummaryText& s);

// Codepoint classification used by the tokenizer. Letters and digits are
// determined by Unicode category over the major scripts; everything else is
// a separator.
bool is_word_codepoint(char32_t cp);
char32_t fold_codepoint(char32_t cp);

}  // namespace sumeval
