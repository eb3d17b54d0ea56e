#include "hopfkit/suite.hpp"

#include <functional>

#include "hopfkit/canonical_maps.hpp"
#include "hopfkit/cofree.hpp"
#include "hopfkit/convolution.hpp"
#include "hopfkit/envelope.hpp"

namespace hopfkit {

bool antipode_identities(const Bialgebra& h, const Matrix& s) {
  const Matrix id = Matrix::identity(h.field(), h.dim());
  const Matrix unit = conv_unit(h);
  return conv(h, s, id) == unit && conv(h, id, s) == unit;
}

SuiteReport run_suite(const Bialgebra& b, const std::optional<FiniteMonoid>& monoid) {
  SuiteReport r;
  r.dim = b.dim();
  auto stage = [&](const char* name, const std::function<bool()>& body) {
    try {
      if (!body()) r.failures.push_back(std::string(name) + ": check returned false");
    } catch (const InvariantViolation& e) {
      r.failures.push_back(std::string(name) + ": " + e.what());
    }
  };

  r.axioms = verify_axioms(b).all_ok();
  if (!r.axioms) {
    r.failures.push_back("axioms: input is not a bialgebra");
    return r;
  }

  std::optional<OslashSpace> os;
  std::optional<BoxslashSpace> bs;
  stage("oslash", [&] {
    os = build_oslash(b);
    r.oslash_dim = os->quotient_dim;
    r.ker_i_dim = os->ker_i.dim();
    r.i_surjective = os->surjective;
    return r.i_surjective;
  });
  stage("boxslash", [&] {
    bs = build_boxslash(b);
    r.boxslash_dim = bs->dim();
    r.p_injective = bs->injective;
    return r.p_injective;
  });
  if (!os || !bs) return r;

  stage("frobenius", [&] {
    const FrobeniusReport f = frobenius_report(*os, *bs);
    r.frobenius_coincide = f.consistent && f.i_bijective == f.p_bijective &&
                           f.i_bijective == f.right_antipode.has_value();
    return r.frobenius_coincide;
  });
  stage("s-witness", [&] { return r.s_residuals = s_witness_residuals_in_kernel(*os, S_witness(*os)); });
  stage("t-witness", [&] { return r.t_identities = t_witness_identities(*bs, T_witness(*bs)); });
  stage("envelope", [&] {
    const HopfResult h = hopf_envelope(*os);
    r.envelope_dim = h.hopf.dim();
    r.envelope_hopf = verify_axioms(h.hopf).all_ok() && antipode_identities(h.hopf, h.antipode) &&
                      h.structure_map.is_bialgebra_map();
    return r.envelope_hopf;
  });
  stage("cofree", [&] {
    const HopfResult c = cofree_hopf(*bs);
    r.cofree_dim = c.hopf.dim();
    r.cofree_hopf = verify_axioms(c.hopf).all_ok() && antipode_identities(c.hopf, c.antipode) &&
                    c.structure_map.is_bialgebra_map();
    return r.cofree_hopf;
  });
  stage("iterate-q", [&] { return r.q_stable = iterate_Q(b).steps <= 1; });
  stage("iterate-k", [&] { return r.k_stable = iterate_K(b).steps <= 1; });
  stage("duality", [&] { return r.duality = duality_report(b).ok(); });
  stage("n-antipode", [&] {
    r.left_index = minimal_left_n_antipode(b).n;
    r.right_index = minimal_right_n_antipode(b).n;
    r.central_index = central_n_antipode(b).n;
    r.indices_agree = r.left_index == r.central_index && r.right_index == r.central_index;
    return r.indices_agree;
  });
  if (monoid) {
    stage("monoid", [&] {
      r.monoid_cross_check = false;
      cancellativity_cross_check(*monoid, b.field());
      r.monoid_cross_check = true;
      return true;
    });
  }
  return r;
}

}  // namespace hopfkit
