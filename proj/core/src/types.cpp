#include "sumeval/types.hpp"

#include <algorithm>
#include <set>

namespace sumeval {

std::string to_string(SummarizerType type) {
    return type == SummarizerType::Peer ? "peer" : "reference";
}

SummarizerType summarizer_type_from_string(const std::string& s) {
    if (s == "peer") return SummarizerType::Peer;
    if (s == "reference") return SummarizerType::Reference;
    throw ValidationError("unknown summarizer_type \"" + s + "\" (expected \"peer\" or \"reference\")");
}

const SummaryText& EvalInstance::summary() const {
    auto it = fields.find("summary");
    if (it == fields.end()) {
        throw ValidationError("instance \"" + instance_id + "\" has no summary field");
    }
    return std::get<SummaryField>(it->second).summary;
}

const ReferencesField* EvalInstance::references() const {
    auto it = fields.find("references");
    if (it == fields.end()) return nullptr;
    return &std::get<ReferencesField>(it->second);
}

const DocumentsField* EvalInstance::documents() const {
    auto it = fields.find("documents");
    if (it == fields.end()) return nullptr;
    return &std::get<DocumentsField>(it->second);
}

const std::vector<std::string>& known_field_names() {
    static const std::vector<std::string> names = {"summary", "references", "documents"};
    return names;
}

namespace {

bool field_matches_name(const std::string& name, const Field& field) {
    if (name == "summary") return std::holds_alternative<SummaryField>(field);
    if (name == "references") return std::holds_alternative<ReferencesField>(field);
    if (name == "documents") return std::holds_alternative<DocumentsField>(field);
    return false;
}

}  // namespace

void validate_instance(const EvalInstance& inst,
                       const std::function<void(const std::string&)>& warn) {
    if (inst.instance_id.empty()) {
        throw ValidationError("instance_id must be non-empty");
    }
    if (inst.summarizer_id.empty()) {
        throw ValidationError("summarizer_id must be non-empty (instance \"" + inst.instance_id + "\")");
    }
    const auto& known = known_field_names();
    for (const auto& [name, field] : inst.fields) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw ValidationError("instance \"" + inst.instance_id + "\" has unknown field \"" + name + "\"");
        }
        if (!field_matches_name(name, field)) {
            throw ValidationError("instance \"" + inst.instance_id + "\" field \"" + name +
                                  "\" holds the wrong field variant");
        }
    }
    if (!inst.fields.count("summary")) {
        throw ValidationError("instance \"" + inst.instance_id + "\" is missing the summary field");
    }
    if (const ReferencesField* refs = inst.references()) {
        std::set<std::string> ids;
        for (const auto& ref : refs->references) {
            if (ref.summarizer_id.empty()) {
                throw ValidationError("instance \"" + inst.instance_id +
                                      "\" has a reference with an empty summarizer_id");
            }
            if (!ids.insert(ref.summarizer_id).second) {
                throw ValidationError("instance \"" + inst.instance_id +
                                      "\" has duplicate reference summarizer_id \"" + ref.summarizer_id + "\"");
            }
        }
        if (inst.summarizer_type == SummarizerType::Reference) {
            auto self = std::find_if(refs->references.begin(), refs->references.end(),
                                     [&](const ReferenceSummary& r) {
                                         return r.summarizer_id == inst.summarizer_id;
                                     });
            if (self == refs->references.end()) {
                throw ValidationError("reference instance \"" + inst.instance_id + "\"/\"" +
                                      inst.summarizer_id +
                                      "\" does not appear in its own references field");
            }
            if (warn && !(self->text == inst.summary())) {
                warn("reference instance \"" + inst.instance_id + "\"/\"" + inst.summarizer_id +
                     "\": summary text differs from its entry in the references field");
            }
        }
    }
    if (const DocumentsField* docs = inst.documents()) {
        std::set<std::string> ids;
        for (const auto& doc : docs->documents) {
            if (doc.doc_id.empty()) {
                throw ValidationError("instance \"" + inst.instance_id + "\" has a document with an empty doc_id");
            }
            if (!ids.insert(doc.doc_id).second) {
                throw ValidationError("instance \"" + inst.instance_id + "\" has duplicate doc_id \"" +
                                      doc.doc_id + "\"");
            }
        }
    }
    // SummaryText list-form validity is enforced at construction.
}

}  // namespace sumeval
