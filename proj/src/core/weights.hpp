#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/partitions.hpp"

namespace coh {

// Highest weight of a finite-dimensional coefficient module at a real
// place: integers mu_1 >= ... >= mu_n.
using Weight = std::vector<long long>;

bool is_dominant(const Weight& mu);

// Returns w when mu_i + mu_{n-i+1} is one and the same integer for all i.
std::optional<long long> essentially_selfdual(const Weight& mu);

// strictly decreasing entries
bool is_regular_weight(const Weight& mu);

// The self-dual part and the residual determinant twist of an essentially
// self-dual weight with n = 2k: lambda_j = mu_j - mu_{n+1-j} (a dominant
// k-vector with lambda_k >= 0) and mu_j + mu_{n+1-j} = w. lambda is the
// weight the cohomological induction sees; w only enters through the
// det^{-w/2} twist.
struct SelfDualData {
  long long w = 0;
  std::vector<long long> lambda;

  friend bool operator==(const SelfDualData& a, const SelfDualData& b) {
    return a.w == b.w && a.lambda == b.lambda;
  }
  friend bool operator<(const SelfDualData& a, const SelfDualData& b) {
    return std::tie(a.w, a.lambda) < std::tie(b.w, b.lambda);
  }
};

// throws NotSelfDual when essentially_selfdual fails or n is odd
SelfDualData selfdual_data(const Weight& mu);

// lambda extends to an admissible character of the Levi of the partition's
// parabolic: constant on every block and zero on the anisotropic block.
bool is_admissible(const SelfDualData& lambda_data, const OrderedPartition& p);

// ell_i = mu_i - mu_{n-i+1} + (n-2i+1); strictly decreasing with ell_k >= 1
struct EllData {
  long long w = 0;
  std::vector<long long> ell;
};

EllData ell_vector(const Weight& mu);

// Archimedean weight tuples for sigma-twisting. A real place stores one
// weight, a complex place the pair (mu_iota, mu_iotabar).
struct PlaceWeight {
  Weight first;
  std::optional<Weight> second;

  friend bool operator==(const PlaceWeight& a, const PlaceWeight& b) {
    return a.first == b.first && a.second == b.second;
  }
};

using WeightTuple = std::map<std::string, PlaceWeight>;

// component at v of the result is the input component at sigma^{-1}(v);
// sigma maps place labels to place labels and must be a bijection
WeightTuple sigma_twist_weight(const WeightTuple& mu,
                               const std::map<std::string, std::string>& sigma);

}  // namespace coh
