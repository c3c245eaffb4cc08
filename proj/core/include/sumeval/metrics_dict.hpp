#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sumeval/errors.hpp"

namespace sumeval {

// Nested mapping of metric names to numeric values, e.g.
// {"rouge-1": {"precision": 1.0, "recall": 0.43, "f1": 0.6}}.
// Leaves are finite doubles; keys never contain '/' so flattened
// "a/b" paths are unambiguous.
class MetricsDict {
public:
    using Node = std::variant<double, MetricsDict>;

    MetricsDict() = default;

    // Leaf insertion; rejects '/' in keys and non-finite values.
    void set(const std::string& key, double value);
    void set(const std::string& key, MetricsDict child);

    // Dotted-path convenience: set_path("rouge-1/f1", 0.6).
    void set_path(const std::string& path, double value);

    bool contains(const std::string& key) const { return entries_.count(key) > 0; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    const Node& at(const std::string& key) const;
    double leaf_at(const std::string& key) const;
    const MetricsDict& child_at(const std::string& key) const;

    // Sorted by key (std::map order).
    const std::map<std::string, Node>& entries() const { return entries_; }

    bool operator==(const MetricsDict& other) const { return entries_ == other.entries_; }

    // Every leaf under its '/'-joined path, sorted.
    std::map<std::string, double> flatten() const;

    static MetricsDict unflatten(const std::map<std::string, double>& flat);

private:
    static void check_key(const std::string& key);

    std::map<std::string, Node> entries_;
};

// Leaf-wise arithmetic mean over a non-empty list whose members share an
// identical flattened key set.
MetricsDict aggregate_macro(const std::vector<MetricsDict>& ms);

// Appends `suffix` to every top-level key; values untouched.
MetricsDict suffix_metric_names(const MetricsDict& m, const std::string& suffix);

// Merges two dicts with disjoint top-level keys.
MetricsDict merge_metrics(const MetricsDict& a, const MetricsDict& b);

}  // namespace sumeval
