#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace skossim {

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// An RDF term: IRI, blank node or literal.
///
/// IRIs are stored decoded (no `\u` escapes) and must not contain control
/// characters, space or any of `<>"{}|^`\`. A literal carries at most one of
/// datatype IRI and language tag.
class Term {
public:
    static Term iri(std::string value);
    static Term blank(std::string label);
    static Term literal(std::string lexical, std::string datatype = {}, std::string language = {});

    TermKind kind() const noexcept { return kind_; }
    bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
    bool is_blank() const noexcept { return kind_ == TermKind::BlankNode; }
    bool is_literal() const noexcept { return kind_ == TermKind::Literal; }

    /// IRI string, blank node label (without `_:`) or literal lexical form.
    const std::string& value() const noexcept { return value_; }
    const std::string& datatype() const noexcept { return datatype_; }
    const std::string& language() const noexcept { return language_; }

    /// Canonical N-Triples rendering of this term.
    std::string to_ntriples() const;

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

private:
    Term(TermKind kind, std::string value, std::string datatype, std::string language)
        : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)),
          language_(std::move(language)) {}

    TermKind kind_;
    std::string value_;
    std::string datatype_;
    std::string language_;
};

/// True when `iri` is usable as an IRI term value.
bool is_valid_iri_chars(std::string_view iri) noexcept;

/// True when `iri` has a scheme (`[A-Za-z][A-Za-z0-9+.-]*:`) and valid characters.
bool is_absolute_iri(std::string_view iri) noexcept;

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    /// One N-Triples statement, without trailing newline.
    std::string to_ntriples() const;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

}  // namespace skossim
