#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace skossim {

/// Prefix label (possibly empty) to namespace IRI. Rebinding replaces.
class PrefixMap {
public:
    void bind(std::string prefix, std::string namespace_iri) {
        bindings_[std::move(prefix)] = std::move(namespace_iri);
    }
    std::optional<std::string> find(std::string_view prefix) const;
    const std::map<std::string, std::string, std::less<>>& bindings() const noexcept { return bindings_; }
    bool empty() const noexcept { return bindings_.empty(); }

    friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

private:
    std::map<std::string, std::string, std::less<>> bindings_;
};

/// Expands `prefix:local` through `prefixes`, or unwraps `<iri>`. Throws
/// ValidationError naming the prefix when it is unbound.
std::string resolve_curie(const PrefixMap& prefixes, std::string_view token);

}  // namespace skossim
