#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sumeval/errors.hpp"

namespace sumeval {

// A summary payload: either one raw text blob or a pre-split sentence list.
class SummaryText {
public:
    SummaryText() : content_(std::string{}) {}

    static SummaryText raw(std::string text) {
        SummaryText s;
        s.content_ = std::move(text);
        return s;
    }

    static SummaryText sentences(std::vector<std::string> sents) {
        for (const auto& sent : sents) {
            if (sent.empty()) {
                throw ValidationError("sentence list contains an empty sentence");
            }
        }
        SummaryText s;
        s.content_ = std::move(sents);
        return s;
    }

    bool is_sentence_form() const {
        return std::holds_alternative<std::vector<std::string>>(content_);
    }

    const std::string& raw_text() const { return std::get<std::string>(content_); }

    const std::vector<std::string>& sentence_list() const {
        return std::get<std::vector<std::string>>(content_);
    }

    bool operator==(const SummaryText&) const = default;

private:
    std::variant<std::string, std::vector<std::string>> content_;
};

struct ReferenceSummary {
    std::string summarizer_id;
    SummaryText text;

    bool operator==(const ReferenceSummary&) const = default;
};

struct Document {
    std::string doc_id;
    std::string text;

    bool operator==(const Document&) const = default;
};

struct SummaryField {
    SummaryText summary;

    bool operator==(const SummaryField&) const = default;
};

struct ReferencesField {
    std::vector<ReferenceSummary> references;  // summarizer_ids unique

    bool operator==(const ReferencesField&) const = default;
};

struct DocumentsField {
    std::vector<Document> documents;  // doc_ids unique

    bool operator==(const DocumentsField&) const = default;
};

using Field = std::variant<SummaryField, ReferencesField, DocumentsField>;

enum class SummarizerType { Peer, Reference };

std::string to_string(SummarizerType type);
SummarizerType summarizer_type_from_string(const std::string& s);

// One summary to evaluate: identity plus a name -> Field mapping. Field names
// are drawn from the closed set {"summary", "references", "documents"} and
// "summary" is always present.
struct EvalInstance {
    std::string instance_id;
    std::string summarizer_id;
    SummarizerType summarizer_type = SummarizerType::Peer;
    std::map<std::string, Field> fields;

    const SummaryText& summary() const;
    const ReferencesField* references() const;  // nullptr when absent
    const DocumentsField* documents() const;    // nullptr when absent

    bool operator==(const EvalInstance&) const = default;
};

// Checks all structural invariants of a single instance. `warn` (optional)
// receives non-fatal observations, e.g. a reference instance whose summary
// text differs from its entry in the references field.
void validate_instance(const EvalInstance& inst,
                       const std::function<void(const std::string&)>& warn = {});

const std::vector<std::string>& known_field_names();

}  // namespace sumeval
