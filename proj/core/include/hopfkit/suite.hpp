#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/monoid.hpp"

namespace hopfkit {

/// Outcome of every structural invariant on one verified bialgebra.
/// Each flag is computed independently; a thrown InvariantViolation inside a
/// stage clears that stage's flag and is recorded in `failures`.
struct SuiteReport {
  std::size_t dim = 0;
  std::size_t oslash_dim = 0;
  std::size_t ker_i_dim = 0;
  std::size_t boxslash_dim = 0;
  std::size_t envelope_dim = 0;
  std::size_t cofree_dim = 0;
  std::size_t left_index = 0;
  std::size_t right_index = 0;
  std::size_t central_index = 0;

  bool axioms = false;
  bool i_surjective = false;
  bool p_injective = false;
  bool frobenius_coincide = false;
  bool envelope_hopf = false;
  bool cofree_hopf = false;
  bool q_stable = false;
  bool k_stable = false;
  bool s_residuals = false;
  bool t_identities = false;
  bool duality = false;
  bool indices_agree = false;
  /// Set for monoid bialgebras: table predicates match the i/p diagnostics.
  std::optional<bool> monoid_cross_check;

  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// `monoid`, when given, must be the monoid whose bialgebra is `b`.
SuiteReport run_suite(const Bialgebra& b, const std::optional<FiniteMonoid>& monoid = std::nullopt);

/// True when S*Id = u∘ε = Id*S, recomputed from scratch.
bool antipode_identities(const Bialgebra& h, const Matrix& s);

}  // namespace hopfkit
