#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfkit/bialgebra.hpp"

namespace hopfkit {

/// Finite monoid given by its multiplication table: table[g][h] = g·h.
struct FiniteMonoid {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<std::string> labels;

  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
};

struct MonoidValidation {
  bool ok = true;
  /// "shape", "identity" or "associativity".
  std::string failure;
  /// Offending elements: (g, h, k) for associativity, (g) for identity.
  std::vector<std::size_t> witness;
};

MonoidValidation validate(const FiniteMonoid& m);
/// Throws VerificationError carrying the witness.
void require_monoid(const FiniteMonoid& m);

/// ⟨x | x^{index + period} = x^{index}⟩ on elements x^0, ..., x^{index+period-1}.
FiniteMonoid monogenic(std::size_t index, std::size_t period);
FiniteMonoid cyclic_group(std::size_t order);
/// Componentwise product; element (g, h) has index g * n.size + h.
FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n);

struct UnitsReport {
  /// g with gh = 1 for some h.
  std::vector<std::size_t> left_units;
  std::vector<std::size_t> units;
  /// x with x y x = x for some y.
  std::vector<std::size_t> regulars;
  /// Smallest y with x y x = x, for regular x.
  std::vector<std::optional<std::size_t>> pseudoinverse;
};

/// Exhaustive scan; throws InvariantViolation if left units and units differ.
UnitsReport units_and_left_units(const FiniteMonoid& m);

/// 𝕜M with Δ(g) = g⊗g and ε(g) = 1.
Bialgebra monoid_bialgebra(const FiniteMonoid& m, Field field);

struct CancellativityReport {
  bool right_cancellative = false;
  bool unique_right_inverses = false;
  bool is_group = false;
};

CancellativityReport cancellativity_report(const FiniteMonoid& m);
/// The report above, after checking right cancellativity ⇔ i_B injective,
/// unique right inverses ⇔ p_B injective and group ⇔ p_B surjective on 𝕜M.
CancellativityReport cancellativity_cross_check(const FiniteMonoid& m, Field field);

struct EnvelopingGroup {
  FiniteMonoid group;
  /// quotient_map[g] = image of g in the group.
  std::vector<std::size_t> quotient_map;
};

/// G(M) read off from the group-like images of M in H(𝕜M).
EnvelopingGroup enveloping_group(const FiniteMonoid& m, Field field = Field::rationals());

/// Relabels and compares two tables up to the given bijection.
bool is_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b, const std::vector<std::size_t>& map);
/// Finds a monoid isomorphism by brute force over bijections (small sizes only).
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b);

/// Monoid of self-maps of {0, ..., degree-1} generated by `generators` under
/// composition (f·g applies f first). Element 0 is the identity map; the rest
/// follow breadth-first discovery, so the result depends only on the input.
FiniteMonoid transformation_monoid(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators);

/// A random transformation monoid with at most `max_size` elements, drawn by
/// rejection from one or two random self-maps of a set of size ≤ 3.
FiniteMonoid random_monoid(std::mt19937_64& rng, std::size_t max_size);

}  // namespace hopfkit
