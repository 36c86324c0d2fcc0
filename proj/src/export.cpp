#include "skossim/export.hpp"

#include <stdexcept>

#include "skossim/error.hpp"

namespace skossim {

ValueFormat parse_value_format(std::string_view text) {
    if (text == "decimal") {
        return ValueFormat::Decimal;
    }
    if (text == "rational") {
        return ValueFormat::Rational;
    }
    throw ValidationError("values must be 'decimal' or 'rational', got '" + std::string(text) + "'");
}

std::string format_value(const Rational& value, ValueFormat format) {
    return format == ValueFormat::Decimal ? value.to_decimal(6) : value.to_string();
}

std::string export_csv(const SimilarityMatrix& matrix, ValueFormat format) {
    const auto& pop = matrix.population();
    std::string out = "sim";
    for (const auto& iri : pop) {
        out += ',';
        out += iri;
    }
    out += '\n';
    for (std::size_t r = 0; r < pop.size(); ++r) {
        out += pop[r];
        for (const Rational& v : matrix.row(r)) {
            out += ',';
            out += format_value(v, format);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            return fields;
        }
        start = comma + 1;
    }
}

}  // namespace

SimilarityMatrix parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = std::min(text.find('\n', start), text.size());
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (lines.empty()) {
        throw ParseError("empty CSV", 1, 1);
    }
    auto header = split_fields(lines[0]);
    if (header.front() != "sim") {
        throw ParseError("CSV header must start with 'sim'", 1, 1);
    }
    std::vector<std::string> population(header.begin() + 1, header.end());
    const std::size_t n = population.size();
    if (lines.size() != n + 1) {
        throw ParseError("expected " + std::to_string(n) + " data rows", lines.size(), 1);
    }
    std::vector<Rational> values;
    values.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        auto fields = split_fields(lines[r + 1]);
        if (fields.size() != n + 1 || fields.front() != population[r]) {
            throw ParseError("malformed row for " + population[r], r + 2, 1);
        }
        for (std::size_t c = 1; c <= n; ++c) {
            try {
                values.push_back(Rational::parse(fields[c]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), r + 2, c + 1);
            }
        }
    }
    return SimilarityMatrix(std::move(population), std::move(values), EmptyPolicy::One, {});
}

std::uint8_t pgm_gray(const Rational& value) noexcept {
    __extension__ typedef unsigned __int128 wide;
    const wide num = value.numerator();
    const wide den = value.denominator();
    const wide dark = num >= den ? 0 : den - num;
    return static_cast<std::uint8_t>((dark * 255 * 2 + den) / (den * 2));
}

std::string render_pgm(const SimilarityMatrix& matrix) {
    const std::size_t n = matrix.size();
    std::string out = "P2\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i) {
                out += ' ';
            }
            out += std::to_string(pgm_gray(matrix.at(i, j)));
        }
        out += '\n';
    }
    return out;
}

}  // namespace skossim
