#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skossim/context.hpp"
#include "skossim/rdf_store.hpp"

namespace skossim {

using FeatureId = std::uint32_t;

/// Sorted, duplicate-free set of interned features.
class FeatureSet {
public:
    FeatureSet() = default;
    explicit FeatureSet(std::vector<FeatureId> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(FeatureId id) const noexcept;
    const std::vector<FeatureId>& ids() const noexcept { return ids_; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    friend bool operator==(const FeatureSet&, const FeatureSet&) = default;

private:
    std::vector<FeatureId> ids_;
};

/// |a ∩ b| by merging the two sorted id lists.
std::size_t intersection_size(const FeatureSet& a, const FeatureSet& b) noexcept;

/// Interns (predicate, object) pairs selected by a context and memoizes the
/// feature set of every resource it is asked about.
///
/// The store and spec must outlive the table and stay unmodified while it is
/// in use. features() is thread safe; each resource is extracted at most once
/// for the lifetime of the table.
class FeatureTable {
public:
    FeatureTable(const TripleStore& store, const ContextSpec& spec);

    FeatureTable(const FeatureTable&) = delete;
    FeatureTable& operator=(const FeatureTable&) = delete;

    /// F(resource): { (p, o) | p a context relation, (resource, p, o) in store }.
    /// Unknown resources have the empty set.
    const FeatureSet& features(std::string_view resource_iri);

    /// The (predicate, object) pair a feature id stands for.
    std::pair<TermId, TermId> feature(FeatureId id) const;
    std::size_t feature_count() const;

    std::size_t extraction_count(std::string_view resource_iri) const;
    /// Total extractions performed; equals the number of distinct resources
    /// queried so far.
    std::size_t total_extractions() const noexcept { return total_extractions_.load(); }

    const TripleStore& store() const noexcept { return store_; }
    const ContextSpec& spec() const noexcept { return spec_; }

private:
    struct Slot {
        std::once_flag once;
        FeatureSet set;
        std::atomic<std::size_t> extractions{0};
    };

    FeatureSet extract(std::string_view resource_iri);
    FeatureId intern(TermId predicate, TermId object);
    Slot& slot_for(std::string_view resource_iri);

    const TripleStore& store_;
    const ContextSpec& spec_;
    std::vector<TermId> predicates_;

    mutable std::mutex slots_mutex_;
    std::unordered_map<std::string, std::unique_ptr<Slot>> slots_;

    mutable std::mutex intern_mutex_;
    std::unordered_map<std::uint64_t, FeatureId> ids_;
    std::vector<std::pair<TermId, TermId>> pairs_;

    std::atomic<std::size_t> total_extractions_{0};
};

}  // namespace skossim
