#pragma once

#include <vector>

#include "core/cyclotomic.hpp"

namespace coh {

// Satake parameters of an unramified representation at a split place: the
// multiset of normalized character values alpha_j at a uniformizer. The
// |varpi|^{(n-1)/2} normalization is the caller's responsibility; arithmetic
// here stays inside one cyclotomic field. All entries share one conductor.
struct SatakeParams {
  std::vector<CyclotomicNumber> alphas;

  // lifts every entry to the lcm of the conductors
  static SatakeParams make(std::vector<CyclotomicNumber> alphas);
  int n() const { return static_cast<int>(alphas.size()); }
  int conductor() const { return alphas.empty() ? 1 : alphas.front().N; }

  // multiset equality
  bool same_as(const SatakeParams& o) const;
};

// Eigenvalues of the Hecke operators T_{v,j} = diag(varpi,...,varpi,1,...,1)
// (j uniformizers) on the spherical vector: the elementary symmetric
// polynomials f_1(alpha), ..., f_n(alpha).
std::vector<CyclotomicNumber> hecke_eigenvalues(const SatakeParams& s);

// Q(Pi_v) = Q(f_1(alpha), ..., f_n(alpha))
CyclotomicSubfield local_rationality_field(const SatakeParams& s);

// entrywise sigma_a on the multiset
SatakeParams sigma_twist_satake(const SatakeParams& s, long long a);

}  // namespace coh
