#include "sumeval/tokenize.hpp"

#include <algorithm>
#include <array>

#include "sumeval/porter.hpp"
#include "sumeval/stopwords.hpp"

namespace sumeval {

namespace {

struct Range {
    char32_t lo;
    char32_t hi;
};

// Letter/digit ranges for the major scripts. Codepoints outside these ranges
// act as token separators.
constexpr std::array<Range, 28> kWordRanges = {{
    {U'0', U'9'},
    {U'A', U'Z'},
    {U'a', U'z'},
    {0x00AA, 0x00AA},  // feminine ordinal
    {0x00B5, 0x00B5},  // micro sign
    {0x00BA, 0x00BA},  // masculine ordinal
    {0x00C0, 0x00D6},  // Latin-1 letters
    {0x00D8, 0x00F6},
    {0x00F8, 0x02AF},  // Latin Extended-A/B, IPA
    {0x0370, 0x0373},  // Greek
    {0x0376, 0x0377},
    {0x037B, 0x037D},
    {0x037F, 0x037F},
    {0x0386, 0x0386},
    {0x0388, 0x03FF},
    {0x0400, 0x0481},  // Cyrillic
    {0x048A, 0x052F},
    {0x05D0, 0x05EA},  // Hebrew
    {0x0620, 0x064A},  // Arabic
    {0x0660, 0x0669},  // Arabic-Indic digits
    {0x0671, 0x06D3},
    {0x0904, 0x0939},  // Devanagari
    {0x0966, 0x096F},
    {0x3041, 0x3096},  // Hiragana
    {0x30A1, 0x30FA},  // Katakana
    {0x3400, 0x4DBF},  // CJK ext A
    {0x4E00, 0x9FFF},  // CJK unified
    {0xAC00, 0xD7A3},  // Hangul
}};

// Decodes one UTF-8 codepoint starting at `i`; advances `i`. Malformed bytes
// decode as U+FFFD, which is a separator.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
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
    if (i + len > s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        const unsigned char b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += len;
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

bool is_word_codepoint(char32_t cp) {
    auto it = std::lower_bound(kWordRanges.begin(), kWordRanges.end(), cp,
                               [](const Range& r, char32_t c) { return r.hi < c; });
    return it != kWordRanges.end() && cp >= it->lo;
}

char32_t fold_codepoint(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;  // Latin-1
    if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;  // Latin Ext-A
    if (cp >= 0x0139 && cp <= 0x0147) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178) return 0x00FF;
    if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;  // Greek
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;  // Cyrillic
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
    return cp;
}

std::vector<std::string> normalize_tokenize(std::string_view text, const TokenizerConfig& cfg) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = decode_utf8(text, i);
        if (is_word_codepoint(cp)) {
            encode_utf8(cfg.lowercase ? fold_codepoint(cp) : cp, current);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }

    if (cfg.stem) {
        for (auto& tok : tokens) {
            tok = porter_stem(tok);
        }
    }
    if (cfg.remove_stopwords) {
        const StopwordSet& stopwords = stopword_set_for(cfg);
        std::erase_if(tokens, [&](const std::string& tok) { return stopwords.contains(tok); });
    }
    return tokens;
}

std::vector<std::string> to_sentences(const SummaryText& s) {
    if (s.is_sentence_form()) {
        return s.sentence_list();
    }
    std::vector<std::string> sentences;
    const std::string& raw = s.raw_text();
    std::size_t start = 0;
    while (start <= raw.size()) {
        std::size_t end = raw.find('\n', start);
        if (end == std::string::npos) end = raw.size();
        std::string_view line(raw.data() + start, end - start);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t' || line.front() == '\r')) {
            line.remove_prefix(1);
        }
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
            line.remove_suffix(1);
        }
        if (!line.empty()) {
            sentences.emplace_back(line);
        }
        if (end == raw.size()) break;
        start = end + 1;
    }
    return sentences;
}

}  // namespace sumeval
