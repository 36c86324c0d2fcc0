#include "skossim/context.hpp"

#include <optional>

#include "skossim/error.hpp"

namespace skossim {

namespace {

enum class TokenKind { Word, IriRef, LBracket, RBracket, LBrace, RBrace, LParen, RParen, Comma, Arrow, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool is_word_char(char c) {
    auto uc = static_cast<unsigned char>(c);
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-' || c == '.' || c == ':' || uc >= 0x80;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t line_start = 0;
    std::size_t i = 0;
    auto column = [&](std::size_t pos) { return pos - line_start + 1; };

    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++i;
            ++line;
            line_start = i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
            continue;
        }
        std::size_t start = i;
        auto single = [&](TokenKind kind) {
            tokens.push_back({kind, std::string(1, c), line, column(start)});
            ++i;
        };
        switch (c) {
        case '[': single(TokenKind::LBracket); continue;
        case ']': single(TokenKind::RBracket); continue;
        case '{': single(TokenKind::LBrace); continue;
        case '}': single(TokenKind::RBrace); continue;
        case '(': single(TokenKind::LParen); continue;
        case ')': single(TokenKind::RParen); continue;
        case ',': single(TokenKind::Comma); continue;
        default: break;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            tokens.push_back({TokenKind::Arrow, "->", line, column(start)});
            i += 2;
            continue;
        }
        if (c == '<') {
            std::size_t end = text.find('>', i);
            std::size_t newline = text.find('\n', i);
            if (end == std::string_view::npos || (newline != std::string_view::npos && newline < end)) {
                throw ParseError("unterminated IRI reference", line, column(start));
            }
            tokens.push_back({TokenKind::IriRef, std::string(text.substr(i, end - i + 1)), line, column(start)});
            i = end + 1;
            continue;
        }
        if (is_word_char(c)) {
            while (i < text.size() && is_word_char(text[i])) {
                ++i;
            }
            tokens.push_back({TokenKind::Word, std::string(text.substr(start, i - start)), line, column(start)});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, column(start));
    }
    // End of input is reported just past the last token, not after trailing blank lines.
    std::size_t end_line = 1, end_column = 1;
    if (!tokens.empty()) {
        end_line = tokens.back().line;
        end_column = tokens.back().column + tokens.back().text.size();
    }
    tokens.push_back({TokenKind::End, "end of input", end_line, end_column});
    return tokens;
}

class ContextParser {
public:
    explicit ContextParser(std::string_view text) : tokens_(tokenize(text)) {}

    PrefixMap parse_prefix_decls() {
        PrefixMap prefixes;
        while (peek().kind == TokenKind::Word && peek().text == "PREFIX") {
            next();
            const Token& name = next();
            if (name.kind != TokenKind::Word || name.text.back() != ':' ||
                name.text.find(':') != name.text.size() - 1) {
                fail(name, "expected prefix name ending in ':'");
            }
            const Token& iri = expect(TokenKind::IriRef, "expected <IRI> in PREFIX declaration");
            prefixes.bind(name.text.substr(0, name.text.size() - 1), resolve(prefixes, iri));
        }
        return prefixes;
    }

    RawContext parse_context() {
        RawContext ctx;
        ctx.prefixes = parse_prefix_decls();
        expect(TokenKind::LBracket, "expected '[' before class reference");
        ctx.class_iri = resolve(ctx.prefixes, expect_ref());
        expect(TokenKind::RBracket, "expected ']' after class reference");
        expect(TokenKind::Arrow, "expected '->'");
        expect(TokenKind::LBrace, "expected '{' opening attribute block");
        ctx.attribute_specs = parse_attribute_items();
        expect(TokenKind::RBrace, "expected '}' closing attribute block");
        expect(TokenKind::Comma, "expected ',' between attribute and relation blocks");
        expect(TokenKind::LBrace, "expected '{' opening relation block");
        if (peek().kind != TokenKind::RBrace) {
            ctx.relation_specs.push_back(parse_relation(ctx.prefixes));
            while (peek().kind == TokenKind::Comma) {
                next();
                ctx.relation_specs.push_back(parse_relation(ctx.prefixes));
            }
        }
        expect(TokenKind::RBrace, "expected '}' closing relation block");
        if (peek().kind != TokenKind::End) {
            fail(peek(), "unexpected '" + peek().text + "' after context");
        }
        return ctx;
    }

private:
    [[noreturn]] static void fail(const Token& at, const std::string& what) {
        throw ParseError(what, at.line, at.column);
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::End) {
            ++pos_;
        }
        return t;
    }
    const Token& expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) {
            fail(peek(), std::string(what) + ", found '" + peek().text + "'");
        }
        return next();
    }

    const Token& expect_ref() {
        const Token& t = peek();
        bool curie = t.kind == TokenKind::Word && t.text.find(':') != std::string::npos;
        if (!curie && t.kind != TokenKind::IriRef) {
            fail(t, "expected CURIE or <IRI>, found '" + t.text + "'");
        }
        return next();
    }

    static std::string resolve(const PrefixMap& prefixes, const Token& t) {
        try {
            return resolve_curie(prefixes, t.text);
        } catch (const ValidationError& e) {
            fail(t, e.what());
        }
    }

    RawRelationSpec parse_relation(const PrefixMap& prefixes) {
        expect(TokenKind::LParen, "expected '(' opening relation spec");
        RawRelationSpec rel;
        rel.predicate = resolve(prefixes, expect_ref());
        expect(TokenKind::Comma, "expected ',' between relation and operator");
        const Token& op = expect(TokenKind::Word, "expected operator name");
        if (op.text.find(':') != std::string::npos) {
            fail(op, "operator name must be an identifier, found '" + op.text + "'");
        }
        rel.operator_name = op.text;
        expect(TokenKind::RParen, "expected ')' closing relation spec");
        return rel;
    }

    // Items are comma separated at parenthesis depth 0; each is kept as the
    // concatenation of its token texts.
    std::vector<std::string> parse_attribute_items() {
        std::vector<std::string> items;
        std::string current;
        int depth = 0;
        while (true) {
            const Token& t = peek();
            if (t.kind == TokenKind::End) {
                fail(t, "unterminated attribute block");
            }
            if (t.kind == TokenKind::RBrace && depth == 0) {
                break;
            }
            if (t.kind == TokenKind::LBrace || t.kind == TokenKind::RBrace || t.kind == TokenKind::LBracket ||
                t.kind == TokenKind::RBracket || t.kind == TokenKind::Arrow) {
                fail(t, "unexpected '" + t.text + "' in attribute block");
            }
            if (t.kind == TokenKind::LParen) {
                ++depth;
            } else if (t.kind == TokenKind::RParen) {
                if (--depth < 0) {
                    fail(t, "unbalanced ')' in attribute block");
                }
            }
            if (t.kind == TokenKind::Comma && depth == 0) {
                if (current.empty()) {
                    fail(t, "empty attribute item");
                }
                items.push_back(std::move(current));
                current.clear();
            } else {
                current += t.text;
            }
            next();
        }
        if (depth != 0) {
            fail(peek(), "unbalanced '(' in attribute block");
        }
        if (!current.empty()) {
            items.push_back(std::move(current));
        } else if (!items.empty()) {
            fail(peek(), "trailing ',' in attribute block");
        }
        return items;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(Operator op) noexcept {
    switch (op) {
    case Operator::Inter: return "Inter";
    }
    return "?";
}

RawContext parse_context(std::string_view text) {
    return ContextParser(text).parse_context();
}

PrefixMap parse_prefixes(std::string_view text) {
    return ContextParser(text).parse_prefix_decls();
}

ContextSpec validate_context(const RawContext& raw) {
    if (!raw.attribute_specs.empty()) {
        throw ValidationError("attribute comparison unsupported: " + raw.attribute_specs.front());
    }
    if (raw.relation_specs.empty()) {
        throw ValidationError("context has no relation specs");
    }
    ContextSpec spec;
    spec.prefixes_ = raw.prefixes;
    spec.class_iri_ = raw.class_iri;
    for (const auto& rel : raw.relation_specs) {
        if (rel.operator_name != "Inter") {
            throw ValidationError("unsupported operator " + rel.operator_name);
        }
        spec.relations_.push_back({rel.predicate, Operator::Inter});
    }
    return spec;
}

ContextSpec load_context(std::string_view text) {
    return validate_context(parse_context(text));
}

std::string to_string(const RawContext& ctx) {
    std::string out;
    for (const auto& [prefix, ns] : ctx.prefixes.bindings()) {
        out += "PREFIX " + prefix + ": <" + ns + ">\n";
    }
    out += "[<" + ctx.class_iri + ">]->{ ";
    for (std::size_t i = 0; i < ctx.attribute_specs.size(); ++i) {
        out += (i ? ", " : "") + ctx.attribute_specs[i];
    }
    out += ctx.attribute_specs.empty() ? "}," : " },";
    out += "{";
    for (std::size_t i = 0; i < ctx.relation_specs.size(); ++i) {
        const auto& rel = ctx.relation_specs[i];
        out += (i ? "," : "") + std::string("(<") + rel.predicate + ">, " + rel.operator_name + ")";
    }
    out += "}\n";
    return out;
}

}  // namespace skossim
