#pragma once

#include <optional>
#include <string>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/monoid.hpp"

namespace hopfkit {

/// JSON interchange.
///
/// Bialgebra documents:
///   {"schema": 1, "kind": "bialgebra", "field": "Q" | "F<p>", "dim": d,
///    "labels": [...], "mult": [[i, j, k, num, den], ...],
///    "comult": [[k, i, j, num, den], ...], "unit": [[i, num, den], ...],
///    "counit": [[i, num, den], ...]}
/// Monoid documents:
///   {"schema": 1, "kind": "monoid", "size": n, "identity": e,
///    "table": [[...], ...], "labels": [...]}
///
/// Numerators and denominators are JSON integers or decimal strings. Omitted
/// sparse entries are zero. Malformed input raises ParseError naming the
/// offending member.
struct Document {
  enum class Kind { bialgebra, monoid };
  Kind kind = Kind::bialgebra;
  std::optional<Bialgebra> bialgebra;
  std::optional<FiniteMonoid> monoid;
};

/// `field` overrides the document's field; rational entries are then reduced
/// into it (ParseError if a denominator vanishes there).
Document parse_document(const std::string& text, std::optional<Field> field = std::nullopt);
Document load_document(const std::string& path, std::optional<Field> field = std::nullopt);

Bialgebra parse_bialgebra(const std::string& text, std::optional<Field> field = std::nullopt);
FiniteMonoid parse_monoid(const std::string& text);

/// Canonical serialization: sparse entries sorted by index, zero entries omitted.
std::string to_json(const Bialgebra& b);
std::string to_json(const FiniteMonoid& m);

}  // namespace hopfkit
