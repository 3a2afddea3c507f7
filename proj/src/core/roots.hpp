#pragma once

#include <string>
#include <vector>

#include "core/partitions.hpp"

namespace coh {

// GL_n(R) (split) or GL_k(H) (non-split), n = 2k whenever the two interact.
struct GroupKind {
  enum class Tag { split_real, quaternionic };
  Tag tag;
  int size;  // n for split_real, k for quaternionic

  static GroupKind split_real(int n);
  static GroupKind quaternionic(int k);

  bool is_split() const { return tag == Tag::split_real; }
  // common rank: k = n/2 on the split side, k on the quaternionic side
  int rank_k() const { return is_split() ? size / 2 : size; }
  int ambient_n() const { return is_split() ? size : 2 * size; }

  std::string str() const;

  friend bool operator==(const GroupKind& a, const GroupKind& b) {
    return a.tag == b.tag && a.size == b.size;
  }
};

// A root of gl_n(C) w.r.t. the theta-stable Cartan, in the e/f coordinates:
// either e_i - e_j or e_i + e_j (i < j) together with an (f_i - f_j)-variant
// sign, or 2e_i (f-part 0). Both group kinds share this root system; only
// the compact/non-compact split differs.
struct Root {
  std::vector<int> e;  // length k, entries in {-2,...,2}
  int f;               // -1, 0, +1

  friend bool operator==(const Root& a, const Root& b) { return a.e == b.e && a.f == b.f; }
};

std::vector<Root> all_roots(int k);

// Roots alpha with alpha(x) > 0 for the cone point x of the partition.
// Accepts the k-partition directly, or the n-partition (even parts) when
// kind is split.
std::vector<Root> u_roots(const OrderedPartition& p, GroupKind kind);

// Number of u-weights lying in the non-compact part, with multiplicity.
// Quaternionic: one copy of each e_i +- e_j, no 2e_i. Split: one copy of
// each e_i +- e_j and each 2e_i.
int dim_u_cap_p(const OrderedPartition& p, GroupKind kind);

// e-coordinates of half the sum of u_roots counted with multiplicity; the
// f-parts cancel in pairs. Integral for every partition.
std::vector<long long> rho_u(const OrderedPartition& p, GroupKind kind);

// normalizes an n- or k-partition argument to the k-partition
OrderedPartition rank_partition(const OrderedPartition& p, GroupKind kind);

}  // namespace coh
