#include "core/aq_catalog.hpp"

#include <cassert>

#include "core/error.hpp"

namespace coh {

std::vector<AqModule> enumerate_coh(GroupKind kind, const Weight& mu) {
  const int n = kind.ambient_n();
  if (static_cast<int>(mu.size()) != n)
    fail(errc::invalid_input, "mu must have " + std::to_string(n) + " entries for " + kind.str());
  if (!is_dominant(mu)) fail(errc::invalid_input, "mu is not dominant");
  if (!essentially_selfdual(mu)) return {};  // no self-dual twist, empty dual

  const SelfDualData sd = selfdual_data(mu);
  const int k = kind.rank_k();
  std::vector<AqModule> out;
  for (const OrderedPartition& p : enumerate_partitions(k)) {
    if (!is_admissible(sd, p)) continue;
    if (kind.is_split()) {
      const OrderedPartition np = doubled(p);
      out.push_back(AqModule{kind, np, sd, 0});
      if (np.k0() > 0) out.push_back(AqModule{kind, np, sd, 1});
    } else {
      out.push_back(AqModule{kind, canonical_representative(p), sd, 0});
    }
  }
  return out;
}

bool is_tempered(const AqModule& m) {
  return m.partition == tempered_partition(m.kind.rank_k(), m.kind.is_split() ? 2 : 1);
}

IntPoly poincare(const AqModule& m) {
  const OrderedPartition kp = rank_partition(m.partition, m.kind);
  if (m.kind.is_split() && m.partition.k0() > 0)
    fail(errc::unsupported_split_partition,
         "no closed Poincare formula for split partition " + m.partition.str() +
             " with n_0 > 0");
  IntPoly poly = IntPoly::x_pow(dim_u_cap_p(m.partition, m.kind));
  for (int i = 1; i <= kp.r(); ++i)
    for (int j = 1; j <= kp.parts[i]; ++j) poly *= IntPoly::one_plus_xpow(2 * j - 1);
  if (!m.kind.is_split())
    for (int j = 1; j <= kp.k0(); ++j) poly *= IntPoly::one_plus_xpow(4 * j - 3);
  poly = poly.divide_exact(IntPoly::one_plus_xpow(1));
  if (m.kind.is_split() && is_tempered(m)) poly *= IntPoly(2);
  return poly;
}

std::map<int, long long> cohomology_dims(const AqModule& m, const Weight& mu) {
  if (selfdual_data(mu) != m.lambda)
    fail(errc::invalid_input, "mu does not match the module's lambda data");
  std::map<int, long long> dims;
  for (auto& [d, c] : poincare(m).coeffs()) dims[d] = c;
  return dims;
}

InductionDatum langlands_data(const AqModule& m) {
  return langlands_data_for(m.kind, m.partition, m.lambda, m.epsilon);
}

InductionDatum langlands_data_for(GroupKind kind, const OrderedPartition& partition,
                                  const SelfDualData& sd, int eps) {
  const OrderedPartition kp = rank_partition(partition, kind);
  const int k = kp.total();
  const int k0 = kp.k0();
  const std::vector<long long> rho = rho_u(partition, kind);
  const auto& lambda = sd.lambda;
  assert(static_cast<int>(lambda.size()) == k);

  InductionDatum d;
  d.kind = kind;
  d.w = sd.w;
  d.e_lambda = kind.is_split() ? eps : 0;

  // e-coordinates 1..k-k_0 run through the complex blocks, largest label
  // first; within a block of size s the nu-shifts are the rho of gl_s(C),
  // i.e. u = -(s-1), -(s-3), ..., s-1
  int coord = 0;
  for (int label = kp.r(); label >= 1; --label) {
    const int s = kp.parts[label];
    for (int t = 0; t < s; ++t, ++coord) {
      ComplexBlock b;
      b.l = lambda[coord] + rho[coord];
      b.u = -(s - 1) + 2 * t;
      assert(b.l >= 1);
      d.blocks.push_back(b);
    }
  }
  // the anisotropic block decomposes into k_0 scalar factors with
  // |det|-exponents k_0-1, k_0-3, ..., -(k_0-1)
  for (int t = 1; t <= k0; ++t) {
    assert(lambda[coord] == 0 && rho[coord] == 0);
    ++coord;
    d.scalars.push_back(ScalarBlock{k0 - 2 * t + 1, d.e_lambda});
  }
  assert(coord == k);
  return d;
}

}  // namespace coh
