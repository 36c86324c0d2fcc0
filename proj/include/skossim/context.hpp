#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skossim/prefix_map.hpp"

namespace skossim {

/// Relation entry as written: resolved predicate IRI plus the operator name.
struct RawRelationSpec {
    std::string predicate;
    std::string operator_name;

    friend bool operator==(const RawRelationSpec&, const RawRelationSpec&) = default;
};

/// A parsed, not yet validated, context file.
///
///     PREFIX skos: <http://www.w3.org/2004/02/skos/core#>
///     [skos:Concept]->{ },{(skos:broader, Inter)}
///
/// The class and relation references are resolved to absolute IRIs. Items of
/// the attribute block are kept verbatim and never resolved.
struct RawContext {
    PrefixMap prefixes;
    std::string class_iri;
    std::vector<std::string> attribute_specs;
    std::vector<RawRelationSpec> relation_specs;

    friend bool operator==(const RawContext&, const RawContext&) = default;
};

enum class Operator { Inter };

std::string_view to_string(Operator op) noexcept;

struct RelationSpec {
    std::string predicate;
    Operator op = Operator::Inter;

    friend bool operator==(const RelationSpec&, const RelationSpec&) = default;
};

/// A validated context: no attribute comparisons, one or more relations, all
/// operators supported. Immutable once built.
class ContextSpec {
public:
    const PrefixMap& prefixes() const noexcept { return prefixes_; }
    const std::string& class_iri() const noexcept { return class_iri_; }
    const std::vector<RelationSpec>& relations() const noexcept { return relations_; }

    friend bool operator==(const ContextSpec&, const ContextSpec&) = default;

private:
    friend ContextSpec validate_context(const RawContext& raw);
    ContextSpec() = default;

    PrefixMap prefixes_;
    std::string class_iri_;
    std::vector<RelationSpec> relations_;
};

/// Parses a context file. Whitespace between tokens is insignificant and `#`
/// starts a comment that runs to end of line. Throws ParseError with the
/// line/column of the offending token, including for unbound prefixes.
RawContext parse_context(std::string_view text);

/// Reads only the leading PREFIX declarations of `text`; anything after them is
/// ignored.
PrefixMap parse_prefixes(std::string_view text);

/// Throws ValidationError for attribute blocks ("attribute comparison
/// unsupported"), unknown operators ("unsupported operator X") and empty
/// relation blocks.
ContextSpec validate_context(const RawContext& raw);

/// parse_context + validate_context.
ContextSpec load_context(std::string_view text);

/// Renders `ctx` back to context syntax using absolute `<IRI>` references.
/// Parsing the result yields `ctx` again.
std::string to_string(const RawContext& ctx);

}  // namespace skossim
