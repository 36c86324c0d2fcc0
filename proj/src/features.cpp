#include "skossim/features.hpp"

#include <algorithm>
#include <stdexcept>

namespace skossim {

FeatureSet::FeatureSet(std::vector<FeatureId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool FeatureSet::contains(FeatureId id) const noexcept {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t intersection_size(const FeatureSet& a, const FeatureSet& b) noexcept {
    auto i = a.begin();
    auto j = b.begin();
    std::size_t count = 0;
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

FeatureTable::FeatureTable(const TripleStore& store, const ContextSpec& spec) : store_(store), spec_(spec) {
    for (const auto& rel : spec.relations()) {
        if (auto id = store.lookup_iri(rel.predicate)) {
            predicates_.push_back(*id);
        }
    }
}

FeatureId FeatureTable::intern(TermId predicate, TermId object) {
    std::uint64_t key = (static_cast<std::uint64_t>(predicate) << 32) | object;
    std::lock_guard lock(intern_mutex_);
    auto [it, inserted] = ids_.try_emplace(key, static_cast<FeatureId>(pairs_.size()));
    if (inserted) {
        pairs_.emplace_back(predicate, object);
    }
    return it->second;
}

std::pair<TermId, TermId> FeatureTable::feature(FeatureId id) const {
    std::lock_guard lock(intern_mutex_);
    return pairs_.at(id);
}

std::size_t FeatureTable::feature_count() const {
    std::lock_guard lock(intern_mutex_);
    return pairs_.size();
}

FeatureSet FeatureTable::extract(std::string_view resource_iri) {
    std::vector<FeatureId> ids;
    if (auto subject = store_.lookup_iri(resource_iri)) {
        for (TermId p : predicates_) {
            for (TermId o : store_.object_ids(*subject, p)) {
                ids.push_back(intern(p, o));
            }
        }
    }
    return FeatureSet(std::move(ids));
}

FeatureTable::Slot& FeatureTable::slot_for(std::string_view resource_iri) {
    std::lock_guard lock(slots_mutex_);
    auto it = slots_.find(std::string(resource_iri));
    if (it == slots_.end()) {
        it = slots_.emplace(std::string(resource_iri), std::make_unique<Slot>()).first;
    }
    return *it->second;
}

const FeatureSet& FeatureTable::features(std::string_view resource_iri) {
    Slot& slot = slot_for(resource_iri);
    std::call_once(slot.once, [&] {
        slot.set = extract(resource_iri);
        slot.extractions.fetch_add(1);
        total_extractions_.fetch_add(1);
    });
    return slot.set;
}

std::size_t FeatureTable::extraction_count(std::string_view resource_iri) const {
    std::lock_guard lock(slots_mutex_);
    auto it = slots_.find(std::string(resource_iri));
    return it == slots_.end() ? 0 : it->second->extractions.load();
}

}  // namespace skossim
