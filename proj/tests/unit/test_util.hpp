#pragma once

#include <random>
#include <vector>

#include "core/jl.hpp"
#include "core/weights.hpp"

namespace coh::testutil {

// Random dominant essentially-self-dual weight for GL_{2k}: pick a dominant
// lambda with all entries of one parity and a matching w, then
// mu_j = (w + lambda_j)/2 mirrored.
inline Weight random_selfdual_weight(std::mt19937& rng, int k, long long max_entry = 6) {
  std::uniform_int_distribution<long long> parity_dist(0, 1);
  const long long parity = parity_dist(rng);
  std::uniform_int_distribution<long long> step_dist(0, max_entry);
  std::vector<long long> lambda(k);
  long long cur = 2 * step_dist(rng) + parity;
  for (int j = k - 1; j >= 0; --j) {
    lambda[j] = cur;
    cur += 2 * step_dist(rng);
  }
  std::uniform_int_distribution<long long> w_dist(-max_entry, max_entry);
  const long long w = 2 * w_dist(rng) + parity;
  Weight mu(2 * k);
  for (int j = 0; j < k; ++j) {
    mu[j] = (w + lambda[j]) / 2;
    mu[2 * k - 1 - j] = (w - lambda[j]) / 2;
  }
  return mu;
}

// F(u,1) is the character det'^{-u/2}; fold it for comparisons across an
// equivalence pair
inline BasicRep normalized_h_factor(const BasicRep& r) {
  if (r.tag == BasicRep::Tag::F && r.l == 1)
    return BasicRep::det_prime(-r.u / Rat(2));
  return r;
}

inline std::vector<BasicRep> normalized_h_factors(std::vector<BasicRep> v) {
  for (auto& r : v) r = normalized_h_factor(r);
  return v;
}

}  // namespace coh::testutil
