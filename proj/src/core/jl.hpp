#pragma once

#include <vector>

#include "core/aq_catalog.hpp"
#include "core/rational.hpp"

namespace coh {

// The rank-one building blocks of the archimedean correspondence:
//   D(u,l) = D(l) (x) |det|^{-u/2}        (GL_2(R) discrete series)
//   SgnDet = sgn^eps |det|^s              (GL_2(R) character)
//   F(u,l) = Sym^{l-1} C^2 (x) det'^{-u/2} (GL_1(H))
//   DetPrime = det'^s                      (GL_1(H) character)
struct BasicRep {
  enum class Tag { D, F, SgnDet, DetPrime };
  Tag tag;
  Rat u;        // u for D/F, the exponent s for the characters
  long long l;  // dimension parameter, >= 1 (D/F only)
  int eps;      // SgnDet only

  static BasicRep make_D(Rat u, long long l);
  static BasicRep make_F(Rat u, long long l);
  static BasicRep sgn_det(int eps, Rat s);
  static BasicRep det_prime(Rat s);

  friend bool operator==(const BasicRep& a, const BasicRep& b) {
    return a.tag == b.tag && a.u == b.u && a.l == b.l && a.eps == b.eps;
  }
};

// |LJ| on building blocks: D(u,l) -> F(u,l), sgn^eps|det|^s -> det'^s.
// Quaternionic-side input is InvalidDirection.
BasicRep lj_basic(const BasicRep& r);

// the Langlands factors of langlands_data(m) as BasicReps, with the global
// det^{-w/2} twist folded into every factor
std::vector<BasicRep> induction_factors(const AqModule& m);

// |LJ| on catalog modules: halve the partition (parts must be even),
// canonicalize, drop the sgn twist. lambda and w are unchanged.
AqModule transfer(const AqModule& m);

// All split modules in Coh_mu(GL_{2k}(R)) mapping onto m, by exhaustive
// transfer over the enumerated catalog. Non-empty for every m in
// Coh_mu(GL_k(H)).
std::vector<AqModule> fiber(const AqModule& m, const Weight& mu);

}  // namespace coh
