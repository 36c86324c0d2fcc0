#include "skossim/term.hpp"

#include <cstdio>
#include <functional>
#include <stdexcept>

namespace skossim {

namespace {

bool forbidden_iri_char(unsigned char c) noexcept {
    if (c <= 0x20) {
        return true;
    }
    switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
        return true;
    default:
        return false;
    }
}

void append_uchar(std::string& out, unsigned char c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
    out += buf;
}

std::string escape_literal(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        auto c = static_cast<unsigned char>(ch);
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        default:
            if (c < 0x20 || c == 0x7F) {
                append_uchar(out, c);
            } else {
                out += ch;
            }
        }
    }
    return out;
}

}  // namespace

bool is_valid_iri_chars(std::string_view iri) noexcept {
    if (iri.empty()) {
        return false;
    }
    for (char ch : iri) {
        if (forbidden_iri_char(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

bool is_absolute_iri(std::string_view iri) noexcept {
    if (!is_valid_iri_chars(iri)) {
        return false;
    }
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(iri.front())) {
        return false;
    }
    std::size_t i = 1;
    while (i < iri.size() && (alpha(iri[i]) || digit(iri[i]) || iri[i] == '+' || iri[i] == '-' || iri[i] == '.')) {
        ++i;
    }
    return i < iri.size() && iri[i] == ':' && i + 1 < iri.size();
}

Term Term::iri(std::string value) {
    if (!is_valid_iri_chars(value)) {
        throw std::invalid_argument("invalid IRI '" + value + "'");
    }
    return Term(TermKind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
    if (label.empty()) {
        throw std::invalid_argument("empty blank node label");
    }
    return Term(TermKind::BlankNode, std::move(label), {}, {});
}

Term Term::literal(std::string lexical, std::string datatype, std::string language) {
    if (!datatype.empty() && !language.empty()) {
        throw std::invalid_argument("literal cannot carry both a datatype and a language tag");
    }
    if (!datatype.empty() && !is_valid_iri_chars(datatype)) {
        throw std::invalid_argument("invalid datatype IRI '" + datatype + "'");
    }
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype), std::move(language));
}

std::string Term::to_ntriples() const {
    switch (kind_) {
    case TermKind::Iri:
        return "<" + value_ + ">";
    case TermKind::BlankNode:
        return "_:" + value_;
    case TermKind::Literal: {
        std::string out = "\"" + escape_literal(value_) + "\"";
        if (!datatype_.empty()) {
            out += "^^<" + datatype_ + ">";
        } else if (!language_.empty()) {
            out += "@" + language_;
        }
        return out;
    }
    }
    return {};
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
    std::size_t h = std::hash<std::string>{}(t.value());
    h ^= static_cast<std::size_t>(t.kind()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    if (t.is_literal()) {
        h ^= std::hash<std::string>{}(t.datatype()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.language()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Triple::to_ntriples() const {
    return subject.to_ntriples() + " " + predicate.to_ntriples() + " " + object.to_ntriples() + " .";
}

}  // namespace skossim
