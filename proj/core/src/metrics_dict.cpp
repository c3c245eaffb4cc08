#include "sumeval/metrics_dict.hpp"

#include <cmath>

namespace sumeval {

void MetricsDict::check_key(const std::string& key) {
    if (key.find('/') != std::string::npos) {
        throw SchemaError("metric key must not contain '/': \"" + key + "\"");
    }
}

void MetricsDict::set(const std::string& key, double value) {
    check_key(key);
    if (!std::isfinite(value)) {
        throw SchemaError("metric value for \"" + key + "\" is not finite");
    }
    entries_[key] = value;
}

void MetricsDict::set(const std::string& key, MetricsDict child) {
    check_key(key);
    entries_[key] = std::move(child);
}

void MetricsDict::set_path(const std::string& path, double value) {
    auto slash = path.find('/');
    if (slash == std::string::npos) {
        set(path, value);
        return;
    }
    std::string head = path.substr(0, slash);
    check_key(head);
    auto it = entries_.find(head);
    if (it == entries_.end()) {
        MetricsDict child;
        child.set_path(path.substr(slash + 1), value);
        entries_[head] = std::move(child);
    } else if (auto* child = std::get_if<MetricsDict>(&it->second)) {
        child->set_path(path.substr(slash + 1), value);
    } else {
        throw SchemaError("path \"" + path + "\" descends through a leaf");
    }
}

const MetricsDict::Node& MetricsDict::at(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        throw SchemaError("no metric entry named \"" + key + "\"");
    }
    return it->second;
}

double MetricsDict::leaf_at(const std::string& key) const {
    const Node& node = at(key);
    if (const double* v = std::get_if<double>(&node)) return *v;
    throw SchemaError("metric entry \"" + key + "\" is not a leaf");
}

const MetricsDict& MetricsDict::child_at(const std::string& key) const {
    const Node& node = at(key);
    if (const MetricsDict* child = std::get_if<MetricsDict>(&node)) return *child;
    throw SchemaError("metric entry \"" + key + "\" is not nested");
}

namespace {

void flatten_into(const MetricsDict& m, const std::string& prefix,
                  std::map<std::string, double>& out) {
    for (const auto& [key, node] : m.entries()) {
        std::string path = prefix.empty() ? key : prefix + "/" + key;
        if (const double* v = std::get_if<double>(&node)) {
            out[path] = *v;
        } else {
            flatten_into(std::get<MetricsDict>(node), path, out);
        }
    }
}

}  // namespace

std::map<std::string, double> MetricsDict::flatten() const {
    std::map<std::string, double> out;
    flatten_into(*this, "", out);
    return out;
}

MetricsDict MetricsDict::unflatten(const std::map<std::string, double>& flat) {
    MetricsDict m;
    for (const auto& [path, value] : flat) {
        m.set_path(path, value);
    }
    return m;
}

MetricsDict aggregate_macro(const std::vector<MetricsDict>& ms) {
    if (ms.empty()) {
        throw UsageError("aggregate_macro requires at least one MetricsDict");
    }
    std::map<std::string, double> sums = ms.front().flatten();
    for (std::size_t i = 1; i < ms.size(); ++i) {
        auto flat = ms[i].flatten();
        if (flat.size() != sums.size()) {
            // Name one offending path for the message.
            for (const auto& [path, _] : flat) {
                if (!sums.count(path)) {
                    throw SchemaError("aggregate_macro key-set mismatch at path \"" + path + "\"");
                }
            }
            for (const auto& [path, _] : sums) {
                if (!flat.count(path)) {
                    throw SchemaError("aggregate_macro key-set mismatch at path \"" + path + "\"");
                }
            }
        }
        for (const auto& [path, value] : flat) {
            auto it = sums.find(path);
            if (it == sums.end()) {
                throw SchemaError("aggregate_macro key-set mismatch at path \"" + path + "\"");
            }
            it->second += value;
        }
    }
    const double n = static_cast<double>(ms.size());
    for (auto& [path, sum] : sums) {
        sum /= n;
    }
    return MetricsDict::unflatten(sums);
}

MetricsDict suffix_metric_names(const MetricsDict& m, const std::string& suffix) {
    if (suffix.empty()) {
        throw UsageError("suffix_metric_names requires a non-empty suffix");
    }
    MetricsDict out;
    for (const auto& [key, node] : m.entries()) {
        std::string renamed = key + suffix;
        // A renamed key that shadows another original key would make raw and
        // suffixed scores indistinguishable once merged.
        if (m.contains(renamed)) {
            throw SchemaError("suffixed key \"" + renamed + "\" collides with an existing key");
        }
        if (const double* v = std::get_if<double>(&node)) {
            out.set(renamed, *v);
        } else {
            out.set(renamed, std::get<MetricsDict>(node));
        }
    }
    return out;
}

MetricsDict merge_metrics(const MetricsDict& a, const MetricsDict& b) {
    MetricsDict out = a;
    for (const auto& [key, node] : b.entries()) {
        if (out.contains(key)) {
            throw SchemaError("merge collision on metric key \"" + key + "\"");
        }
        if (const double* v = std::get_if<double>(&node)) {
            out.set(key, *v);
        } else {
            out.set(key, std::get<MetricsDict>(node));
        }
    }
    return out;
}

}  // namespace sumeval
