#pragma once

#include <string_view>

namespace skossim::vocab {

inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

inline constexpr std::string_view skos_ns = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view skos_concept = "http://www.w3.org/2004/02/skos/core#Concept";
inline constexpr std::string_view skos_broader = "http://www.w3.org/2004/02/skos/core#broader";
inline constexpr std::string_view skos_related_match =
    "http://www.w3.org/2004/02/skos/core#relatedMatch";
inline constexpr std::string_view skos_pref_label = "http://www.w3.org/2004/02/skos/core#prefLabel";

}  // namespace skossim::vocab
