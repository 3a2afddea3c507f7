#include "core/roots.hpp"

#include <cassert>

#include "core/error.hpp"

namespace coh {

GroupKind GroupKind::split_real(int n) {
  if (n < 2 || n % 2 != 0) fail(errc::invalid_input, "split_real: n must be even and >= 2");
  return GroupKind{Tag::split_real, n};
}

GroupKind GroupKind::quaternionic(int k) {
  if (k < 1) fail(errc::invalid_input, "quaternionic: k must be >= 1");
  return GroupKind{Tag::quaternionic, k};
}

std::string GroupKind::str() const {
  return is_split() ? "GL_" + std::to_string(size) + "(R)" : "GL_" + std::to_string(size) + "(H)";
}

OrderedPartition rank_partition(const OrderedPartition& p, GroupKind kind) {
  if (!p.valid()) fail(errc::invalid_input, "invalid partition " + p.str());
  const int k = kind.rank_k();
  if (p.total() == k) return p;
  if (kind.is_split() && p.total() == kind.size) return halved(p);
  fail(errc::invalid_input,
       "partition " + p.str() + " does not match " + kind.str());
}

std::vector<Root> all_roots(int k) {
  std::vector<Root> roots;
  auto evec = [&](int i, int ci, int j, int cj) {
    std::vector<int> e(k, 0);
    e[i] = ci;
    if (j >= 0) e[j] = cj;
    return e;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          for (int f : {1, -1}) roots.push_back(Root{evec(i, si, j, sj), f});
  for (int i = 0; i < k; ++i)
    for (int s : {2, -2}) roots.push_back(Root{evec(i, s, -1, 0), 0});
  return roots;
}

std::vector<Root> u_roots(const OrderedPartition& p, GroupKind kind) {
  const OrderedPartition kp = rank_partition(p, kind);
  const std::vector<int> b = block_assignment(kp);
  const int k = kp.total();
  std::vector<Root> roots;
  auto evec = [&](int i, int ci, int j, int cj) {
    std::vector<int> e(k, 0);
    e[i] = ci;
    if (j >= 0) e[j] = cj;
    return e;
  };
  // alpha(x) only sees the e-part: e_i - e_j is positive iff b(i) > b(j),
  // e_i + e_j iff b(i) + b(j) > 0, 2e_i iff b(i) > 0
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (b[i] > b[j])
        for (int f : {1, -1}) roots.push_back(Root{evec(i, 1, j, -1), f});
      if (b[i] + b[j] > 0)
        for (int f : {1, -1}) roots.push_back(Root{evec(i, 1, j, 1), f});
    }
  for (int i = 0; i < k; ++i)
    if (b[i] > 0) roots.push_back(Root{evec(i, 2, -1, 0), 0});
  return roots;
}

int dim_u_cap_p(const OrderedPartition& p, GroupKind kind) {
  const OrderedPartition kp = rank_partition(p, kind);
  const std::vector<int> b = block_assignment(kp);
  const int k = kp.total();
  int dim = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (b[i] > b[j]) ++dim;
      if (b[i] + b[j] > 0) ++dim;
    }
  if (kind.is_split()) {
    for (int i = 0; i < k; ++i)
      if (b[i] > 0) ++dim;
  }
  return dim;
}

std::vector<long long> rho_u(const OrderedPartition& p, GroupKind kind) {
  const OrderedPartition kp = rank_partition(p, kind);
  const std::vector<int> b = block_assignment(kp);
  const int k = kp.total();
  // Each e_i +- e_j weight of u comes with both f-variants, each 2e_i once;
  // halving the sum leaves integers.
  std::vector<long long> rho(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (b[i] > b[j]) {
        rho[i] += 1;
        rho[j] -= 1;
      }
      if (b[i] + b[j] > 0) {
        rho[i] += 1;
        rho[j] += 1;
      }
    }
  for (int i = 0; i < k; ++i)
    if (b[i] > 0) rho[i] += 1;
  return rho;
}

}  // namespace coh
