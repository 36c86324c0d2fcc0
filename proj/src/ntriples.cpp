#include "skossim/ntriples.hpp"

#include <algorithm>
#include <optional>

#include "skossim/error.hpp"

namespace skossim {

namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Cursor over a single line. Columns are 1-based byte offsets.
class LineParser {
public:
    LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

    // Empty for blank and comment-only lines.
    std::optional<Triple> parse() {
        skip_ws();
        if (at_end() || peek() == '#') {
            return std::nullopt;
        }
        Term subject = parse_subject();
        skip_ws();
        Term predicate = parse_predicate();
        skip_ws();
        Term object = parse_object();
        skip_ws();
        expect('.', "expected '.' at end of statement");
        skip_ws();
        if (!at_end() && peek() != '#') {
            fail("unexpected content after '.'");
        }
        return Triple{std::move(subject), std::move(predicate), std::move(object)};
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no_, pos_ + 1); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const {
        throw ParseError(what, line_no_, pos + 1);
    }

    bool at_end() const { return pos_ >= line_.size(); }
    char peek() const { return line_[pos_]; }

    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) {
            ++pos_;
        }
    }

    void expect(char c, const char* what) {
        if (at_end() || peek() != c) {
            fail(what);
        }
        ++pos_;
    }

    Term parse_subject() {
        if (at_end()) {
            fail("missing subject");
        }
        if (peek() == '<') {
            return Term::iri(parse_iriref());
        }
        if (peek() == '_') {
            return Term::blank(parse_blank_label());
        }
        fail("subject must be an IRI or blank node");
    }

    Term parse_predicate() {
        if (at_end()) {
            fail("missing predicate");
        }
        if (peek() != '<') {
            fail("predicate must be an IRI");
        }
        return Term::iri(parse_iriref());
    }

    Term parse_object() {
        if (at_end() || peek() == '.') {
            fail("missing object");
        }
        switch (peek()) {
        case '<': return Term::iri(parse_iriref());
        case '_': return Term::blank(parse_blank_label());
        case '"': return parse_literal();
        default: fail("object must be an IRI, blank node or literal");
        }
    }

    std::uint32_t parse_hex(int digits) {
        std::uint32_t value = 0;
        for (int i = 0; i < digits; ++i) {
            if (at_end()) {
                fail("truncated unicode escape");
            }
            char c = peek();
            std::uint32_t d;
            if (is_digit(c)) {
                d = static_cast<std::uint32_t>(c - '0');
            } else if (c >= 'a' && c <= 'f') {
                d = static_cast<std::uint32_t>(c - 'a' + 10);
            } else if (c >= 'A' && c <= 'F') {
                d = static_cast<std::uint32_t>(c - 'A' + 10);
            } else {
                fail("invalid hex digit in unicode escape");
            }
            value = value * 16 + d;
            ++pos_;
        }
        return value;
    }

    // Positioned after the backslash, at 'u' or 'U'.
    void parse_uchar(std::string& out) {
        std::size_t start = pos_ - 1;
        char kind = peek();
        ++pos_;
        std::uint32_t cp = parse_hex(kind == 'u' ? 4 : 8);
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            fail_at("unicode escape is not a valid code point", start);
        }
        append_utf8(out, cp);
    }

    std::string parse_iriref() {
        std::size_t start = pos_;
        ++pos_;  // '<'
        std::string iri;
        while (true) {
            if (at_end()) {
                fail_at("unterminated IRI", start);
            }
            char c = peek();
            if (c == '>') {
                ++pos_;
                break;
            }
            if (c == '\\') {
                ++pos_;
                if (at_end() || (peek() != 'u' && peek() != 'U')) {
                    fail("only \\u and \\U escapes are allowed in IRIs");
                }
                parse_uchar(iri);
                continue;
            }
            auto uc = static_cast<unsigned char>(c);
            if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
                c == '`') {
                fail("invalid character in IRI");
            }
            iri += c;
            ++pos_;
        }
        if (!is_absolute_iri(iri)) {
            fail_at("IRI must be absolute and free of forbidden characters", start);
        }
        return iri;
    }

    std::string parse_blank_label() {
        std::size_t start = pos_;
        if (line_.substr(pos_, 2) != "_:") {
            fail("expected '_:' blank node prefix");
        }
        pos_ += 2;
        auto label_char = [](char c) {
            return is_alpha(c) || is_digit(c) || c == '_' || c == ':' || c == '-' || c == '.' ||
                   static_cast<unsigned char>(c) >= 0x80;
        };
        if (at_end() || !label_char(peek()) || peek() == '.' || peek() == '-') {
            fail("invalid blank node label");
        }
        std::size_t label_start = pos_;
        while (!at_end() && label_char(peek())) {
            ++pos_;
        }
        // A label may not end with '.', which belongs to the statement.
        while (pos_ > label_start && line_[pos_ - 1] == '.') {
            --pos_;
        }
        if (pos_ == label_start) {
            fail_at("invalid blank node label", start);
        }
        return std::string(line_.substr(label_start, pos_ - label_start));
    }

    Term parse_literal() {
        std::size_t start = pos_;
        ++pos_;  // '"'
        std::string lexical;
        while (true) {
            if (at_end()) {
                fail_at("unterminated string literal", start);
            }
            char c = peek();
            if (c == '"') {
                ++pos_;
                break;
            }
            if (c == '\r') {
                fail("raw carriage return in literal");
            }
            if (c != '\\') {
                lexical += c;
                ++pos_;
                continue;
            }
            ++pos_;
            if (at_end()) {
                fail("truncated escape sequence");
            }
            switch (peek()) {
            case 't': lexical += '\t'; break;
            case 'b': lexical += '\b'; break;
            case 'n': lexical += '\n'; break;
            case 'r': lexical += '\r'; break;
            case 'f': lexical += '\f'; break;
            case '"': lexical += '"'; break;
            case '\'': lexical += '\''; break;
            case '\\': lexical += '\\'; break;
            case 'u':
            case 'U':
                parse_uchar(lexical);
                continue;
            default:
                fail("invalid escape sequence");
            }
            ++pos_;
        }
        if (!at_end() && peek() == '^') {
            if (line_.substr(pos_, 2) != "^^") {
                fail("expected '^^' before datatype IRI");
            }
            pos_ += 2;
            if (at_end() || peek() != '<') {
                fail("expected datatype IRI");
            }
            return Term::literal(std::move(lexical), parse_iriref());
        }
        if (!at_end() && peek() == '@') {
            ++pos_;
            std::size_t tag_start = pos_;
            if (at_end() || !is_alpha(peek())) {
                fail("invalid language tag");
            }
            while (!at_end() && is_alpha(peek())) {
                ++pos_;
            }
            while (!at_end() && peek() == '-') {
                ++pos_;
                if (at_end() || !(is_alpha(peek()) || is_digit(peek()))) {
                    fail("invalid language tag subtag");
                }
                while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) {
                    ++pos_;
                }
            }
            return Term::literal(std::move(lexical), {}, std::string(line_.substr(tag_start, pos_ - tag_start)));
        }
        return Term::literal(std::move(lexical));
    }

    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Triple> parse_ntriples(std::string_view text) {
    std::vector<Triple> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (auto t = LineParser(line, line_no).parse()) {
            out.push_back(std::move(*t));
        }
        start = end + 1;
    }
    return out;
}

std::size_t load_ntriples(std::string_view text, TripleStore& store) {
    std::size_t added = 0;
    for (const auto& t : parse_ntriples(text)) {
        added += store.insert(t) ? 1 : 0;
    }
    return added;
}

std::string serialize_ntriples(const TripleStore& store) {
    std::vector<std::string> lines;
    lines.reserve(store.size());
    for (const auto& t : store.id_triples()) {
        lines.push_back(Triple{store.term(t[0]), store.term(t[1]), store.term(t[2])}.to_ntriples());
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace skossim
