#include <doctest.h>

#include <map>
#include <set>

#include "core/aq_catalog.hpp"
#include "core/error.hpp"
#include "core/tables.hpp"
#include "test_util.hpp"

using namespace coh;

namespace {

const Weight mu0_4{0, 0, 0, 0};

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumerate_coh quaternionic k=2, trivial coefficients") {
  auto rows = enumerate_coh(GroupKind::quaternionic(2), mu0_4);
  REQUIRE(rows.size() == 4);  // one row per admissible partition
  std::multiset<std::vector<int>> parts;
  std::set<AqModule> classes;
  for (auto& m : rows) {
    parts.insert(m.partition.parts);
    classes.insert(m);
  }
  // [1,1] lands on its canonical representative [0,1,1]
  CHECK(parts.count({0, 1, 1}) == 2);
  CHECK(parts.count({0, 2}) == 1);
  CHECK(parts.count({2}) == 1);
  CHECK(classes.size() == 3);
}

TEST_CASE("enumerate_coh split n=4, trivial coefficients") {
  auto rows = enumerate_coh(GroupKind::split_real(4), mu0_4);
  REQUIRE(rows.size() == 6);
  std::map<std::vector<int>, int> count;
  for (auto& m : rows) count[m.partition.parts] += 1;
  CHECK(count[{0, 2, 2}] == 1);  // sgn twist collapses when n_0 = 0
  CHECK(count[{2, 2}] == 2);
  CHECK(count[{0, 4}] == 1);
  CHECK(count[{4}] == 2);
  std::set<AqModule> classes(rows.begin(), rows.end());
  CHECK(classes.size() == 6);
}

TEST_CASE("enumerate_coh with a regular weight") {
  auto rows = enumerate_coh(GroupKind::quaternionic(2), {3, 1, -1, -3});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].partition == OrderedPartition{{0, 1, 1}});
  CHECK(is_tempered(rows[0]));
}

TEST_CASE("non-self-dual mu gives the empty catalog") {
  CHECK(enumerate_coh(GroupKind::quaternionic(2), {2, 1, 0, 0}).empty());
  CHECK(enumerate_coh(GroupKind::split_real(4), {2, 1, 0, 0}).empty());
}

TEST_CASE("is_tempered") {
  const SelfDualData zero2{0, {0, 0}};
  CHECK(is_tempered(AqModule{GroupKind::quaternionic(2), {{0, 1, 1}}, zero2, 0}));
  CHECK(!is_tempered(AqModule{GroupKind::split_real(4), {{0, 4}}, zero2, 0}));
  CHECK(!is_tempered(AqModule{GroupKind::quaternionic(2), {{2}}, zero2, 0}));
  CHECK(is_tempered(AqModule{GroupKind::split_real(4), {{0, 2, 2}}, zero2, 0}));
}

TEST_CASE("poincare golden values") {
  const SelfDualData zero2{0, {0, 0}};
  CHECK(poincare(AqModule{GroupKind::quaternionic(2), {{0, 1, 1}}, zero2, 0}) ==
        IntPoly::x_pow(2) + IntPoly::x_pow(3));
  CHECK(poincare(AqModule{GroupKind::quaternionic(2), {{2}}, zero2, 0}) ==
        IntPoly::one_plus_xpow(5));
  CHECK(poincare(AqModule{GroupKind::split_real(4), {{0, 4}}, zero2, 0}) ==
        IntPoly::x_pow(3) + IntPoly::x_pow(6));
  CHECK(poincare(AqModule{GroupKind::split_real(4), {{0, 2, 2}}, zero2, 0}) ==
        IntPoly::x_pow(4, 2) + IntPoly::x_pow(5, 2));
}

TEST_CASE("poincare closed forms for the tempered and trivial members") {
  for (int k = 1; k <= 8; ++k) {
    const SelfDualData zero{0, std::vector<long long>(k, 0)};
    // X^{k(k-1)} (1+X)^{k-1}
    IntPoly expected_h = IntPoly::x_pow(k * (k - 1));
    for (int i = 1; i < k; ++i) expected_h *= IntPoly::one_plus_xpow(1);
    CHECK(poincare(AqModule{GroupKind::quaternionic(k), tempered_partition(k, 1), zero, 0}) ==
          expected_h);
    // 2 X^{k^2} (1+X)^{k-1}
    IntPoly expected_r = IntPoly::x_pow(k * k, 2);
    for (int i = 1; i < k; ++i) expected_r *= IntPoly::one_plus_xpow(1);
    CHECK(poincare(AqModule{GroupKind::split_real(2 * k), tempered_partition(k, 2), zero, 0}) ==
          expected_r);
    // trivial module: prod_{j=2}^k (1 + X^{4j-3})
    IntPoly expected_triv = IntPoly::one();
    for (int j = 2; j <= k; ++j) expected_triv *= IntPoly::one_plus_xpow(4 * j - 3);
    CHECK(poincare(AqModule{GroupKind::quaternionic(k), {{k}}, zero, 0}) == expected_triv);
  }
}

TEST_CASE("poincare is defined on every quaternionic partition (exact division)") {
  for (int k = 1; k <= 8; ++k) {
    const SelfDualData zero{0, std::vector<long long>(k, 0)};
    for (const auto& p : enumerate_partitions(k)) {
      const IntPoly poly =
          poincare(AqModule{GroupKind::quaternionic(k), canonical_representative(p), zero, 0});
      CHECK(!poly.is_zero());
      CHECK(poly.min_degree() == dim_u_cap_p(p, GroupKind::quaternionic(k)));
    }
  }
}

TEST_CASE("split partitions with n_0 > 0 have no Poincare formula") {
  const SelfDualData zero2{0, {0, 0}};
  CHECK_THROWS_AS(poincare(AqModule{GroupKind::split_real(4), {{2, 2}}, zero2, 0}), error);
  try {
    poincare(AqModule{GroupKind::split_real(4), {{4}}, zero2, 0});
    FAIL("expected UnsupportedSplitPartition");
  } catch (const error& e) {
    CHECK(e.code() == errc::unsupported_split_partition);
  }
}

TEST_CASE("cohomology_dims") {
  const SelfDualData zero3{0, {0, 0, 0}};
  const Weight mu0_6{0, 0, 0, 0, 0, 0};
  auto dims = cohomology_dims(
      AqModule{GroupKind::quaternionic(3), tempered_partition(3, 1), zero3, 0}, mu0_6);
  for (int q = 6; q <= 8; ++q) CHECK(dims[q] == binomial(2, q - 6));
  CHECK(dims.size() == 3);

  const SelfDualData zero2{0, {0, 0}};
  auto dims_r = cohomology_dims(
      AqModule{GroupKind::split_real(4), tempered_partition(2, 2), zero2, 0}, mu0_4);
  CHECK(dims_r[4] == 2);
  CHECK(dims_r[5] == 2);

  auto dims_triv =
      cohomology_dims(AqModule{GroupKind::quaternionic(2), {{2}}, zero2, 0}, mu0_4);
  CHECK(dims_triv[0] == 1);
}

TEST_CASE("langlands_data examples from the k = 2 tables") {
  const SelfDualData zero2{0, {0, 0}};

  InductionDatum d = langlands_data(AqModule{GroupKind::quaternionic(2), {{0, 2}}, zero2, 0});
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0] == ComplexBlock{2, -1});  // F(-1,2)
  CHECK(d.blocks[1] == ComplexBlock{2, 1});   // F(1,2)
  CHECK(d.scalars.empty());

  InductionDatum r = langlands_data(AqModule{GroupKind::split_real(4), {{0, 4}}, zero2, 0});
  REQUIRE(r.blocks.size() == 2);
  CHECK(r.blocks[0] == ComplexBlock{2, -1});  // D(-1,2)
  CHECK(r.blocks[1] == ComplexBlock{2, 1});   // D(1,2)

  InductionDatum t = langlands_data(AqModule{GroupKind::quaternionic(2), {{0, 1, 1}}, zero2, 0});
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.blocks[0] == ComplexBlock{3, 0});  // F(0,3)
  CHECK(t.blocks[1] == ComplexBlock{1, 0});  // F(0,1)

  // the [2,2] split row: D(0,3) (x) the GL_2(R) character
  InductionDatum s = langlands_data(AqModule{GroupKind::split_real(4), {{2, 2}}, zero2, 1});
  REQUIRE(s.blocks.size() == 1);
  CHECK(s.blocks[0] == ComplexBlock{3, 0});
  REQUIRE(s.scalars.size() == 1);
  CHECK(s.scalars[0].shift == 0);
  CHECK(s.scalars[0].eps == 1);
}

TEST_CASE("tempered langlands data reproduces (w, ell)") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const Weight mu = testutil::random_selfdual_weight(rng, k);
    const EllData e = ell_vector(mu);
    const AqModule m{GroupKind::quaternionic(k), tempered_partition(k, 1), selfdual_data(mu), 0};
    const InductionDatum d = langlands_data(m);
    CHECK(d.w == e.w);
    REQUIRE(d.blocks.size() == static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
      CHECK(d.blocks[j].l == e.ell[j]);
      CHECK(d.blocks[j].u == 0);
      CHECK(folded_u(d, d.blocks[j]) == e.w);  // F(w, ell_j)
    }
  }
}

TEST_CASE("equivalence pair members agree where both are admissible") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const Weight mu = testutil::random_selfdual_weight(rng, k);
    const SelfDualData sd = selfdual_data(mu);
    for (const auto& p : enumerate_partitions(k)) {
      auto q = equivalent_partition(p);
      if (!q || !is_admissible(sd, p) || !is_admissible(sd, *q)) continue;
      const GroupKind H = GroupKind::quaternionic(k);
      const AqModule mp{H, canonical_representative(p), sd, 0};
      CHECK(poincare(AqModule{H, p, sd, 0}) == poincare(AqModule{H, *q, sd, 0}));
      // F(.,1) is the trivial character: both members induce the same data
      const auto a = testutil::normalized_h_factors(induction_factors(mp));
      AqModule raw{H, p, sd, 0};
      const auto b = testutil::normalized_h_factors(induction_factors(raw));
      CHECK(a == b);
    }
  }
}

TEST_CASE("catalog rows dedup against fingerprints for k <= 4") {
  for (int k = 1; k <= 4; ++k) {
    const Weight mu(2 * k, 0);
    auto rows = enumerate_coh(GroupKind::quaternionic(k), mu);
    CHECK(rows.size() == (1u << k));  // every partition is admissible at mu = 0
    std::set<AqModule> classes(rows.begin(), rows.end());
    // fingerprint by (poincare, langlands label) must give the same count
    std::set<std::pair<std::string, std::string>> prints;
    for (const auto& m : rows)
      prints.insert({poincare(m).pretty(),
                     langlands_label(m.kind, m.partition, m.lambda, m.epsilon)});
    CHECK(prints.size() == classes.size());
    const size_t expected_pairs = k >= 2 ? (1u << (k - 2)) : 1;
    CHECK(classes.size() == (1u << k) - expected_pairs);
  }
}
