#include "core/weights.hpp"

#include <cassert>

#include "core/error.hpp"
#include "core/roots.hpp"

namespace coh {

bool is_dominant(const Weight& mu) {
  for (size_t i = 1; i < mu.size(); ++i)
    if (mu[i - 1] < mu[i]) return false;
  return !mu.empty();
}

std::optional<long long> essentially_selfdual(const Weight& mu) {
  if (mu.empty()) return std::nullopt;
  const size_t n = mu.size();
  const long long w = mu[0] + mu[n - 1];
  for (size_t i = 0; i < n; ++i)
    if (mu[i] + mu[n - 1 - i] != w) return std::nullopt;
  return w;
}

bool is_regular_weight(const Weight& mu) {
  for (size_t i = 1; i < mu.size(); ++i)
    if (mu[i - 1] <= mu[i]) return false;
  return !mu.empty();
}

SelfDualData selfdual_data(const Weight& mu) {
  if (!is_dominant(mu)) fail(errc::invalid_input, "weight is not dominant");
  if (mu.size() % 2 != 0) fail(errc::not_self_dual, "selfdual_data needs even n");
  auto w = essentially_selfdual(mu);
  if (!w) fail(errc::not_self_dual, "weight is not essentially self-dual");
  const size_t n = mu.size();
  SelfDualData out;
  out.w = *w;
  out.lambda.resize(n / 2);
  for (size_t j = 0; j < n / 2; ++j) out.lambda[j] = mu[j] - mu[n - 1 - j];
  assert(out.lambda.back() >= 0);
  return out;
}

bool is_admissible(const SelfDualData& lambda_data, const OrderedPartition& p) {
  const auto& lambda = lambda_data.lambda;
  if (!p.valid() || static_cast<int>(lambda.size()) != p.total())
    fail(errc::invalid_input, "lambda length does not match partition");
  const std::vector<int> b = block_assignment(p);
  const int k = p.total();
  for (int i = 0; i < k; ++i) {
    if (b[i] == 0 && lambda[i] != 0) return false;
    if (i + 1 < k && b[i] == b[i + 1] && lambda[i] != lambda[i + 1]) return false;
  }
  // dominant block-constant lambda automatically pairs non-negatively with
  // every u-root under this coordinate convention; keep the check live
  for (const Root& alpha : u_roots(p, GroupKind::quaternionic(k))) {
    long long pairing = 0;
    for (int i = 0; i < k; ++i) pairing += alpha.e[i] * lambda[i];
    assert(pairing >= 0);
    (void)pairing;
  }
  return true;
}

EllData ell_vector(const Weight& mu) {
  SelfDualData sd = selfdual_data(mu);
  const long long n = static_cast<long long>(mu.size());
  EllData out;
  out.w = sd.w;
  out.ell.resize(n / 2);
  for (long long i = 1; i <= n / 2; ++i) out.ell[i - 1] = sd.lambda[i - 1] + (n - 2 * i + 1);
  for (size_t i = 1; i < out.ell.size(); ++i) assert(out.ell[i - 1] > out.ell[i]);
  assert(out.ell.back() >= 1);
  return out;
}

WeightTuple sigma_twist_weight(const WeightTuple& mu,
                               const std::map<std::string, std::string>& sigma) {
  // invert sigma, checking bijectivity on the place set
  std::map<std::string, std::string> inv;
  for (auto& [from, to] : sigma) {
    if (!mu.count(from) || !mu.count(to))
      fail(errc::invalid_input, "sigma mentions unknown place " + from + "->" + to);
    if (!inv.emplace(to, from).second)
      fail(errc::invalid_input, "sigma is not injective at " + to);
  }
  if (inv.size() != mu.size()) fail(errc::invalid_input, "sigma is not a bijection of the places");
  WeightTuple out;
  for (auto& [v, comp] : mu) {
    (void)comp;
    out[v] = mu.at(inv.at(v));
  }
  return out;
}

}  // namespace coh
