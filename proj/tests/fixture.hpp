#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "skossim/closure.hpp"
#include "skossim/context.hpp"
#include "skossim/ntriples.hpp"
#include "skossim/rdf_store.hpp"
#include "skossim/vocab.hpp"

namespace skossim::testing {

inline std::string data_path(const std::string& name) {
    return std::string(SKOSSIM_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
    std::ifstream in(data_path(name), std::ios::binary);
    if (!in) {
        throw std::runtime_error("missing test data " + name);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string habitat(const std::string& code) { return "urn:eunis:habitat:" + code; }
inline std::string species(const std::string& slug) { return "urn:eunis:species:" + slug; }

/// The EUNIS fixture as shipped: hierarchy plus habitat -> species links.
inline TripleStore table1_store() {
    TripleStore store;
    load_ntriples(read_data("table1.nt"), store);
    return store;
}

/// The EUNIS fixture with relatedMatch made symmetric (species -> habitat links added).
inline TripleStore table1_linked() {
    TripleStore store = table1_store();
    symmetric_closure(store, vocab::skos_related_match);
    return store;
}

/// The EUNIS fixture with skos:broader transitive and reflexive over skos:Concept.
inline TripleStore table1_taxonomy() {
    TripleStore store = table1_store();
    transitive_closure(store, vocab::skos_broader);
    reflexive_closure(store, vocab::skos_broader, ReflexiveScope::of_class(std::string(vocab::skos_concept)));
    return store;
}

}  // namespace skossim::testing
