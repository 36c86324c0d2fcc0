#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skossim/rdf_store.hpp"
#include "skossim/term.hpp"

namespace skossim {

/// Parses an N-Triples document. Triples come back in file order. The first
/// syntax error throws ParseError with its 1-based line and column.
std::vector<Triple> parse_ntriples(std::string_view text);

/// Parses `text` and inserts every triple into `store`. Returns the number of
/// triples that were new.
std::size_t load_ntriples(std::string_view text, TripleStore& store);

/// Canonical N-Triples: one statement per line, lines sorted bytewise, LF
/// terminated, no comments.
std::string serialize_ntriples(const TripleStore& store);

}  // namespace skossim
