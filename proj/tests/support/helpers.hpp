#pragma once

#include <initializer_list>
#include <utility>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/convolution.hpp"
#include "hopfkit/linear.hpp"

namespace testing_support {

using namespace hopfkit;

/// Basis positions of the six-dimensional skew plane quotient.
namespace qqp {
constexpr std::size_t one = 0, x = 1, x2 = 2, y = 3, xy = 4, x2y = 5;
}

inline Vector basis(const Bialgebra& b, std::size_t i) { return unit_vector(b.field(), b.dim(), i); }

/// Σ c·e_i over the listed (index, coefficient) pairs.
inline Vector combo(const Bialgebra& b, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vector v = zero_vector(b.field(), b.dim());
  for (const auto& [i, c] : terms) v[i] += Scalar(b.field(), c);
  return v;
}

inline Subspace span_of(const Bialgebra& b, std::initializer_list<Vector> vs) {
  const std::vector<Vector> gens(vs);
  return Subspace::span(b.field(), b.dim(), gens);
}

inline Matrix identity_of(const Bialgebra& b) { return Matrix::identity(b.field(), b.dim()); }

/// 2·Id − Id^{*3}.
inline Matrix skew_plane_witness(const Bialgebra& b) {
  return Scalar(b.field(), 2) * identity_of(b) - conv_power(b, 3);
}

}  // namespace testing_support
