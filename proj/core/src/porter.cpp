#include "sumeval/porter.hpp"

#include <array>
#include <cstddef>

namespace sumeval {

namespace {

// The algorithm works on a mutable buffer `w` holding the current word.
// Conditions are evaluated on the stem w[0..len), i.e. the word with the
// candidate suffix already excluded.

bool is_consonant(const std::string& w, std::size_t i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') {
        // y preceded by a consonant is a vowel; otherwise it is a consonant.
        return i == 0 || !is_consonant(w, i - 1);
    }
    return true;
}

// m in the [C](VC)^m[V] decomposition of w[0..len).
int measure(const std::string& w, std::size_t len) {
    int m = 0;
    std::size_t i = 0;
    while (i < len && is_consonant(w, i)) ++i;  // optional initial C run
    while (i < len) {
        while (i < len && !is_consonant(w, i)) ++i;  // V run
        if (i == len) break;
        while (i < len && is_consonant(w, i)) ++i;  // C run
        ++m;
    }
    return m;
}

bool contains_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        if (!is_consonant(w, i)) return true;
    }
    return false;
}

// *d: stem ends with a double consonant.
bool ends_double_consonant(const std::string& w, std::size_t len) {
    if (len < 2) return false;
    return w[len - 1] == w[len - 2] && is_consonant(w, len - 1);
}

// *o: stem ends consonant-vowel-consonant where the final consonant is not
// w, x or y.
bool ends_cvc(const std::string& w, std::size_t len) {
    if (len < 3) return false;
    if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) || !is_consonant(w, len - 1)) {
        return false;
    }
    char last = w[len - 1];
    return last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void replace_suffix(std::string& w, std::size_t suffix_len, std::string_view replacement) {
    w.resize(w.size() - suffix_len);
    w.append(replacement);
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Applies the longest-matching rule of the list if the stem measure exceeds
// `min_measure`; a failed condition on the longest match ends the step.
void apply_rule_list(std::string& w, std::initializer_list<Rule> rules, int min_measure) {
    const Rule* best = nullptr;
    for (const Rule& rule : rules) {
        if (ends_with(w, rule.suffix) && (!best || rule.suffix.size() > best->suffix.size())) {
            best = &rule;
        }
    }
    if (!best) return;
    std::size_t stem_len = w.size() - best->suffix.size();
    if (measure(w, stem_len) > min_measure) {
        replace_suffix(w, best->suffix.size(), best->replacement);
    }
}

void step_1a(std::string& w) {
    if (ends_with(w, "sses")) {
        replace_suffix(w, 4, "ss");
    } else if (ends_with(w, "ies")) {
        replace_suffix(w, 3, "i");
    } else if (ends_with(w, "ss")) {
        // unchanged
    } else if (ends_with(w, "s")) {
        replace_suffix(w, 1, "");
    }
}

void step_1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) {
            replace_suffix(w, 1, "");
        }
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed") && contains_vowel(w, w.size() - 2)) {
        replace_suffix(w, 2, "");
        stripped = true;
    } else if (ends_with(w, "ing") && contains_vowel(w, w.size() - 3)) {
        replace_suffix(w, 3, "");
        stripped = true;
    }
    if (!stripped) return;

    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w, w.size())) {
        char last = w.back();
        if (last != 'l' && last != 's' && last != 'z') {
            w.pop_back();
        }
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
        w.push_back('e');
    }
}

void step_1c(std::string& w) {
    if (ends_with(w, "y") && contains_vowel(w, w.size() - 1)) {
        w.back() = 'i';
    }
}

void step_2(std::string& w) {
    apply_rule_list(w,
                    {
                        {"ational", "ate"},
                        {"tional", "tion"},
                        {"enci", "ence"},
                        {"anci", "ance"},
                        {"izer", "ize"},
                        {"abli", "able"},
                        {"alli", "al"},
                        {"entli", "ent"},
                        {"eli", "e"},
                        {"ousli", "ous"},
                        {"ization", "ize"},
                        {"ation", "ate"},
                        {"ator", "ate"},
                        {"alism", "al"},
                        {"iveness", "ive"},
                        {"fulness", "ful"},
                        {"ousness", "ous"},
                        {"aliti", "al"},
                        {"iviti", "ive"},
                        {"biliti", "ble"},
                    },
                    0);
}

void step_3(std::string& w) {
    apply_rule_list(w,
                    {
                        {"icate", "ic"},
                        {"ative", ""},
                        {"alize", "al"},
                        {"iciti", "ic"},
                        {"ical", "ic"},
                        {"ful", ""},
                        {"ness", ""},
                    },
                    0);
}

void step_4(std::string& w) {
    static constexpr std::array<std::string_view, 19> suffixes = {
        "al",  "ance", "ence", "er",  "ic",   "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ou",   "ism", "ate",  "iti",  "ous",  "ive", "ize",
    };
    std::string_view best;
    for (std::string_view suffix : suffixes) {
        if (ends_with(w, suffix) && suffix.size() > best.size()) {
            best = suffix;
        }
    }
    if (best.empty()) return;
    std::size_t stem_len = w.size() - best.size();
    if (measure(w, stem_len) <= 1) return;
    if (best == "ion") {
        char before = w[stem_len - 1];
        if (before != 's' && before != 't') return;
    }
    w.resize(stem_len);
}

void step_5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    std::size_t stem_len = w.size() - 1;
    int m = measure(w, stem_len);
    if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) {
        w.pop_back();
    }
}

void step_5b(std::string& w) {
    if (measure(w, w.size()) > 1 && ends_double_consonant(w, w.size()) && w.back() == 'l') {
        w.pop_back();
    }
}

}  // namespace

std::string porter_stem(std::string_view token) {
    std::string w(token);
    if (w.size() <= 2) return w;
    step_1a(w);
    step_1b(w);
    step_1c(w);
    step_2(w);
    step_3(w);
    step_4(w);
    step_5a(w);
    step_5b(w);
    return w;
}

}  // namespace sumeval
