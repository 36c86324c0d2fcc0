#include "skossim/prefix_map.hpp"

#include "skossim/error.hpp"
#include "skossim/term.hpp"

namespace skossim {

std::optional<std::string> PrefixMap::find(std::string_view prefix) const {
    if (auto it = bindings_.find(prefix); it != bindings_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::string resolve_curie(const PrefixMap& prefixes, std::string_view token) {
    if (token.size() >= 2 && token.front() == '<' && token.back() == '>') {
        std::string iri(token.substr(1, token.size() - 2));
        if (!is_valid_iri_chars(iri)) {
            throw ValidationError("invalid IRI reference '" + std::string(token) + "'");
        }
        return iri;
    }
    auto colon = token.find(':');
    if (colon == std::string_view::npos) {
        throw ValidationError("'" + std::string(token) + "' is neither a CURIE nor an <IRI>");
    }
    auto prefix = token.substr(0, colon);
    auto ns = prefixes.find(prefix);
    if (!ns) {
        throw ValidationError("unbound prefix '" + std::string(prefix) + "' in '" + std::string(token) + "'");
    }
    std::string iri = *ns + std::string(token.substr(colon + 1));
    if (!is_valid_iri_chars(iri)) {
        throw ValidationError("CURIE '" + std::string(token) + "' expands to an invalid IRI");
    }
    return iri;
}

}  // namespace skossim
