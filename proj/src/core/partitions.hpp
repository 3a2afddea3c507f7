#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coh {

// Ordered partition [k_0, k_1, ..., k_r] of a positive integer: k_0 >= 0,
// k_i > 0 for i >= 1. These index conjugacy classes of theta-stable
// parabolic subalgebras; k_0 is the anisotropic block, the k_i are the
// complex blocks.
struct OrderedPartition {
  std::vector<int> parts;

  int total() const;
  int r() const { return static_cast<int>(parts.size()) - 1; }
  int k0() const { return parts.empty() ? 0 : parts[0]; }
  bool valid() const;
  bool all_parts_even() const;

  std::string str() const;  // "[0,1,1]"

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.parts == b.parts;
  }
  friend bool operator<(const OrderedPartition& a, const OrderedPartition& b) {
    return a.parts < b.parts;
  }
};

// every ordered partition of k, each exactly once, lexicographic by parts
std::vector<OrderedPartition> enumerate_partitions(int k);

// block labels along the e-coordinates: length-k vector, non-increasing,
// coordinate 1 carries the largest label r and the final k_0 coordinates
// carry 0. (The paper's x-vector is the reverse of this; its j-th entry is
// dual to e_{k-j+1}.)
std::vector<int> block_assignment(const OrderedPartition& p);

// The K'-conjugacy equivalence pairing on the non-split side:
// [0,1,k_2,...,k_r] <-> [1,k_2,...,k_r]. Returns the partner when p has one
// of the two shapes, nothing otherwise.
std::optional<OrderedPartition> equivalent_partition(const OrderedPartition& p);

// representative of p's equivalence class, the [0,1,...]-shaped member
OrderedPartition canonical_representative(const OrderedPartition& p);

// part-wise halving of a split-side partition; throws OddPart
OrderedPartition halved(const OrderedPartition& p);
OrderedPartition doubled(const OrderedPartition& p);

// the tempered shapes [0,1,...,1] and [0,2,...,2]
OrderedPartition tempered_partition(int k, int part);

}  // namespace coh
