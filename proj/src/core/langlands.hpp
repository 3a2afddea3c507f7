#pragma once

#include <optional>
#include <vector>

#include "core/aq_catalog.hpp"
#include "core/jl.hpp"
#include "core/rational.hpp"

namespace coh {

// Restriction to C^* of a local Langlands parameter: a multiset of
// exponent pairs (p, q), each character acting by z^p zbar^q. Entries are
// half-integers; no symmetry is imposed, complex-place parameters are
// supplied by the user as-is.
struct WeilParameter {
  std::vector<std::pair<Rat, Rat>> pairs;

  int n() const { return static_cast<int>(pairs.size()); }
  void validate() const;  // half-integrality

  // multiset comparison
  bool same_as(const WeilParameter& o) const;
};

// Parameter of a split catalog module, assembled from its Langlands
// factors: D(u,l) contributes ((l-u)/2, (-l-u)/2) and its swap, a GL_1(R)
// character sgn^e |.|^t contributes (t, t). extra_twist shifts every
// exponent (a |det|^extra twist).
WeilParameter parameter_of(const AqModule& m, Rat extra_twist = Rat(0));

// all exponents lie in (n-1)/2 + Z
bool is_algebraic(const WeilParameter& t);

// pairwise distinct p-exponents; only defined for algebraic parameters,
// throws NotAlgebraic otherwise
bool is_regular(const WeilParameter& t);

// The common value of p + q + 2*shift across every pair of every place, if
// there is one. shift is the normalization exponent applied to each of p
// and q before summing; the artifact's convention is shift = 0, which makes
// the tempered J(w,l) parameter come out at -w. All parameters must be
// algebraic.
std::optional<long long> purity_weight(const std::vector<WeilParameter>& params,
                                       Rat shift = Rat(0));

}  // namespace coh
