#pragma once

#include <cstddef>
#include <optional>

#include "hopfkit/bialgebra.hpp"

namespace hopfkit {

/// Linear endomorphisms of B are plain d×d matrices acting on coordinate columns.
using Endo = Matrix;

/// u∘ε, the unit of the convolution algebra.
Endo conv_unit(const Bialgebra& b);

/// f * g = m∘(f⊗g)∘Δ on End(B).
Endo conv(const Bialgebra& b, const Endo& f, const Endo& g);

/// Convolution in Hom(source, target): m_target∘(f⊗g)∘Δ_source. Matrices are
/// target.dim() × source.dim(); only the coalgebra of source and the algebra of
/// target are used.
Matrix conv_hom(const Bialgebra& source, const Bialgebra& target, const Matrix& f, const Matrix& g);
/// u_target∘ε_source.
Matrix conv_unit_hom(const Bialgebra& source, const Bialgebra& target);

/// f^{*k} by repeated squaring; f^{*0} = u∘ε.
Endo conv_power(const Bialgebra& b, const Endo& f, std::size_t k);
/// Id^{*k}.
Endo conv_power(const Bialgebra& b, std::size_t k);

/// Which equation a solve targets: `right` finds g with f * g = rhs, `left`
/// finds g with g * f = rhs, `two_sided` requires both.
/// conv_inverse(b, Id, Side::right) is therefore a right antipode.
std::optional<Matrix> conv_solve_hom(const Bialgebra& source, const Bialgebra& target, const Matrix& f,
                                     const Matrix& rhs, Side side);
std::optional<Endo> conv_inverse(const Bialgebra& b, const Endo& f, Side side);
std::optional<Matrix> conv_inverse_hom(const Bialgebra& source, const Bialgebra& target, const Matrix& f,
                                       Side side);

/// Two-sided convolution inverse of Id, if b is a Hopf algebra.
std::optional<Endo> antipode(const Bialgebra& b);

struct NAntipodeResult {
  std::size_t n = 0;
  Endo s;
  Side side = Side::left;
  /// s lies in the subalgebra generated by Id.
  bool central = false;
};

/// Smallest n with some S such that S * Id^{*(n+1)} = Id^{*n}.
NAntipodeResult minimal_left_n_antipode(const Bialgebra& b);
/// Smallest n with some S such that Id^{*(n+1)} * S = Id^{*n}.
NAntipodeResult minimal_right_n_antipode(const Bialgebra& b);
/// n-antipode inside 𝕜[Id]; it commutes with Id and is two-sided. Its index is
/// checked to agree with the one-sided minimal indices.
NAntipodeResult central_n_antipode(const Bialgebra& b);

/// Basis Id^{*0}, ..., Id^{*(r-1)} of 𝕜[Id], stopping before the first power
/// that depends linearly on the earlier ones.
std::vector<Endo> identity_power_basis(const Bialgebra& b);

/// True iff S * Id^{*(n+1)} = Id^{*n} (left) or Id^{*(n+1)} * S = Id^{*n} (right);
/// two_sided checks both.
bool is_n_antipode(const Bialgebra& b, const Endo& s, std::size_t n, Side side);

struct AntipodeShape {
  /// S(ab) = S(b)S(a) and S(1) = 1.
  bool anti_algebra = false;
  /// (S⊗S)Δ = Δ^cop S and εS = ε.
  bool anti_coalgebra = false;
};

AntipodeShape antipode_shape_check(const Bialgebra& b, const Endo& s);

}  // namespace hopfkit
