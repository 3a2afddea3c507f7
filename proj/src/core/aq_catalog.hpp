#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "core/partitions.hpp"
#include "core/polynomial.hpp"
#include "core/rational.hpp"
#include "core/roots.hpp"
#include "core/weights.hpp"

namespace coh {

// One cohomological irreducible unitary module: A_q(lambda) twisted by
// det^{-w/2}, and by sgn^eps on the split side. Quaternionic partitions are
// stored as canonical representatives of their equivalence class; split
// partitions are n-partitions with every part even.
struct AqModule {
  GroupKind kind;
  OrderedPartition partition;
  SelfDualData lambda;
  int epsilon = 0;  // used only when kind is split and n_0 > 0

  friend bool operator==(const AqModule& a, const AqModule& b) {
    return a.kind == b.kind && a.partition == b.partition && a.lambda == b.lambda &&
           a.epsilon == b.epsilon;
  }
  friend bool operator<(const AqModule& a, const AqModule& b) {
    return std::tie(a.kind.tag, a.kind.size, a.partition.parts, a.lambda, a.epsilon) <
           std::tie(b.kind.tag, b.kind.size, b.partition.parts, b.lambda, b.epsilon);
  }
};

// All modules cohomological with respect to E_mu, one row per admissible
// partition. On the quaternionic side the stored partition is canonical, so
// the two members of an equivalence pair yield equal rows; on the split
// side an admissible partition with n_0 > 0 contributes eps = 0 and 1,
// while for n_0 = 0 the sgn twist changes nothing and only eps = 0 is kept.
// A non-self-dual mu admits no such module and gives the empty list.
std::vector<AqModule> enumerate_coh(GroupKind kind, const Weight& mu);

// the unique tempered member: [0,1,...,1] resp. [0,2,...,2]
bool is_tempered(const AqModule& m);

// Poincare polynomial of H^*(g, K^0; m (x) E_mu). Quaternionic:
//   X^dim(u cap p) / (1+X) * prod_i prod_{j<=k_i} (1+X^{2j-1})
//                          * prod_{j<=k_0} (1+X^{4j-3}).
// Split with n_0 = 0: the same Levi product over the halved partition, with
// an overall factor 2 exactly for the tempered partition. Split with
// n_0 > 0 is not covered by a closed formula and throws
// UnsupportedSplitPartition.
IntPoly poincare(const AqModule& m);

// coefficients of poincare(m); mu must reproduce m's lambda data
std::map<int, long long> cohomology_dims(const AqModule& m, const Weight& mu);

// Langlands quotient data: m is the unique irreducible quotient of the
// representation induced from these factors along the minimal parabolic.
// Complex blocks are F(u,l) / D(u,l) factors by kind; scalar factors come
// from the anisotropic block (det'^{shift} over GL_1(H), resp.
// sgn^{e}|det|^{shift} over a GL_2(R) pair). u/shift here are the nu-shifts
// only; the global det^{-w/2} twist is carried separately in w.
struct ComplexBlock {
  long long l = 0;  // l >= 1, equals lambda_j + rho^u_j
  long long u = 0;  // -(size-1), -(size-3), ..., (size-1) within each block

  friend bool operator==(const ComplexBlock& a, const ComplexBlock& b) {
    return a.l == b.l && a.u == b.u;
  }
};

struct ScalarBlock {
  long long shift = 0;  // |det|-exponent: k_0-1, k_0-3, ..., -(k_0-1)
  int eps = 0;          // split side only

  friend bool operator==(const ScalarBlock& a, const ScalarBlock& b) {
    return a.shift == b.shift && a.eps == b.eps;
  }
};

struct InductionDatum {
  GroupKind kind;
  std::vector<ComplexBlock> blocks;   // k - k_0 of them, in e-coordinate order
  std::vector<ScalarBlock> scalars;   // k_0 of them
  long long w = 0;                    // global twist det^{-w/2}
  int e_lambda = 0;                   // split sign exponent on the n_0-block
};

InductionDatum langlands_data(const AqModule& m);

// same computation for an explicit (possibly non-canonical) partition; the
// table renderer shows both members of an equivalence pair under their own
// labels
InductionDatum langlands_data_for(GroupKind kind, const OrderedPartition& partition,
                                  const SelfDualData& lambda, int eps);

// effective u of a complex block with the w twist folded in: F(u + w, l)
inline long long folded_u(const InductionDatum& d, const ComplexBlock& b) { return b.u + d.w; }
// same folding for a scalar factor, in the F(u,1)-style u convention
inline long long folded_scalar_u(const InductionDatum& d, const ScalarBlock& s) {
  return -2 * s.shift + d.w;
}

}  // namespace coh
