#include "core/hecke.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace coh {

SatakeParams SatakeParams::make(std::vector<CyclotomicNumber> alphas) {
  if (alphas.empty()) fail(errc::invalid_input, "empty Satake parameter");
  const int N = common_conductor(alphas);
  for (auto& a : alphas) a = a.lifted(N);
  return SatakeParams{std::move(alphas)};
}

bool SatakeParams::same_as(const SatakeParams& o) const {
  if (n() != o.n()) return false;
  const int N = std::lcm(conductor(), o.conductor());
  auto key = [N](const SatakeParams& s) {
    std::vector<std::vector<BigRat>> v;
    for (const auto& a : s.alphas) v.push_back(a.lifted(N).coords);
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(*this) == key(o);
}

std::vector<CyclotomicNumber> hecke_eigenvalues(const SatakeParams& s) {
  const int N = s.conductor();
  const int n = s.n();
  // coefficients of prod_i (T + alpha_i)
  std::vector<CyclotomicNumber> e(n + 1, CyclotomicNumber::zero(N));
  e[0] = CyclotomicNumber::from_rational(N, 1);
  int used = 0;
  for (const auto& alpha : s.alphas) {
    ++used;
    for (int j = used; j >= 1; --j) e[j] += alpha * e[j - 1];
  }
  return std::vector<CyclotomicNumber>(e.begin() + 1, e.end());
}

CyclotomicSubfield local_rationality_field(const SatakeParams& s) {
  return generated_subfield(hecke_eigenvalues(s));
}

SatakeParams sigma_twist_satake(const SatakeParams& s, long long a) {
  SatakeParams out = s;
  for (auto& alpha : out.alphas) alpha = alpha.galois(a);
  return out;
}

}  // namespace coh
