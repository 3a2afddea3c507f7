#include "core/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "core/error.hpp"

namespace coh {

int OrderedPartition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool OrderedPartition::valid() const {
  if (parts.empty()) return false;
  if (parts[0] < 0) return false;
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] <= 0) return false;
  return total() >= 1;
}

bool OrderedPartition::all_parts_even() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

std::string OrderedPartition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

namespace {

void compositions_into(int rest, std::vector<int>& head, std::vector<OrderedPartition>& out) {
  if (rest == 0) {
    out.push_back(OrderedPartition{head});
    return;
  }
  for (int part = 1; part <= rest; ++part) {
    head.push_back(part);
    compositions_into(rest - part, head, out);
    head.pop_back();
  }
}

}  // namespace

std::vector<OrderedPartition> enumerate_partitions(int k) {
  if (k < 1) fail(errc::invalid_input, "enumerate_partitions: k must be >= 1");
  if (k > 20) fail(errc::invalid_input, "enumerate_partitions: k > 20 not supported");
  std::vector<OrderedPartition> out;
  out.reserve(1u << k);
  for (int k0 = 0; k0 <= k; ++k0) {
    std::vector<int> head{k0};
    compositions_into(k - k0, head, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> block_assignment(const OrderedPartition& p) {
  assert(p.valid());
  std::vector<int> b;
  b.reserve(p.total());
  for (int label = p.r(); label >= 1; --label)
    for (int c = 0; c < p.parts[label]; ++c) b.push_back(label);
  for (int c = 0; c < p.parts[0]; ++c) b.push_back(0);
  return b;
}

std::optional<OrderedPartition> equivalent_partition(const OrderedPartition& p) {
  assert(p.valid());
  if (p.parts[0] == 1) {
    // [1,k_2,...] -> [0,1,k_2,...]
    std::vector<int> q{0, 1};
    q.insert(q.end(), p.parts.begin() + 1, p.parts.end());
    return OrderedPartition{q};
  }
  if (p.parts.size() >= 2 && p.parts[0] == 0 && p.parts[1] == 1) {
    // [0,1,k_2,...] -> [1,k_2,...]
    std::vector<int> q{1};
    q.insert(q.end(), p.parts.begin() + 2, p.parts.end());
    return OrderedPartition{q};
  }
  return std::nullopt;
}

OrderedPartition canonical_representative(const OrderedPartition& p) {
  if (p.parts[0] == 1) return *equivalent_partition(p);
  return p;
}

OrderedPartition halved(const OrderedPartition& p) {
  OrderedPartition q;
  q.parts.reserve(p.parts.size());
  for (int part : p.parts) {
    if (part % 2 != 0) fail(errc::odd_part, "partition part " + std::to_string(part) + " is odd");
    q.parts.push_back(part / 2);
  }
  return q;
}

OrderedPartition doubled(const OrderedPartition& p) {
  OrderedPartition q;
  q.parts.reserve(p.parts.size());
  for (int part : p.parts) q.parts.push_back(2 * part);
  return q;
}

OrderedPartition tempered_partition(int k, int part) {
  OrderedPartition p;
  p.parts.assign(k + 1, part);
  p.parts[0] = 0;
  return p;
}

}  // namespace coh
