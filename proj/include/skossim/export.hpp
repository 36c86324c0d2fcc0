#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "skossim/rational.hpp"
#include "skossim/similarity.hpp"

namespace skossim {

enum class ValueFormat { Decimal, Rational };

ValueFormat parse_value_format(std::string_view text);

/// `value` rendered as six-digit decimal or `num/den`.
std::string format_value(const Rational& value, ValueFormat format);

/// Header `sim,<iri_0>,...`, then one row per population member:
/// `<iri_r>,SIM(r,0),...`. LF line endings.
std::string export_csv(const SimilarityMatrix& matrix, ValueFormat format);

/// Reads a rational-mode CSV back. Policy and fingerprint are not stored in the
/// file, so the result carries EmptyPolicy::One and an empty fingerprint.
SimilarityMatrix parse_csv(std::string_view text);

/// Gray level for a similarity value: round(255 * (1 - value)), half away from zero.
std::uint8_t pgm_gray(const Rational& value) noexcept;

/// Plain PGM (P2), maxval 255. Pixel (row j, col i) is the gray of
/// SIM(pop[i], pop[j]): columns index the first argument, so this image is the
/// transpose of the CSV layout. Black means 1.
std::string render_pgm(const SimilarityMatrix& matrix);

}  // namespace skossim
