#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/roots.hpp"
#include "core/weights.hpp"
#include "test_util.hpp"

using namespace coh;

TEST_CASE("essentially_selfdual") {
  CHECK(essentially_selfdual({3, 1, -1, -3}) == 0);
  CHECK(essentially_selfdual({2, 2, -2, -2}) == 0);
  CHECK(!essentially_selfdual({2, 1, 0, 0}).has_value());
  CHECK(essentially_selfdual({2, 1, 1, 0}) == 2);
}

TEST_CASE("is_regular_weight") {
  CHECK(is_regular_weight({3, 1, -1, -3}));
  CHECK(!is_regular_weight({0, 0, 0, 0}));
  CHECK(!is_regular_weight({2, 2, -2, -2}));
}

TEST_CASE("selfdual_data") {
  SelfDualData z = selfdual_data({0, 0, 0, 0});
  CHECK(z.w == 0);
  CHECK(z.lambda == std::vector<long long>{0, 0});

  SelfDualData a = selfdual_data({3, 1, -1, -3});
  CHECK(a.w == 0);
  CHECK(a.lambda == std::vector<long long>{6, 2});

  SelfDualData b = selfdual_data({2, 1, 1, 0});
  CHECK(b.w == 2);
  CHECK(b.lambda == std::vector<long long>{2, 0});

  CHECK_THROWS_AS(selfdual_data({2, 1, 0, 0}), error);
}

TEST_CASE("is_admissible") {
  const SelfDualData zero{0, {0, 0}};
  for (const auto& p : enumerate_partitions(2)) CHECK(is_admissible(zero, p));

  const SelfDualData lam{0, {6, 2}};
  CHECK(is_admissible(lam, OrderedPartition{{0, 1, 1}}));
  CHECK(!is_admissible(lam, OrderedPartition{{0, 2}}));  // not block-constant
  CHECK(!is_admissible(lam, OrderedPartition{{2}}));     // nonzero on the zero block
  CHECK(!is_admissible(lam, OrderedPartition{{1, 1}}));  // lambda_2 = 2 on the zero block
}

TEST_CASE("ell_vector") {
  EllData e0 = ell_vector({0, 0, 0, 0});
  CHECK(e0.w == 0);
  CHECK(e0.ell == std::vector<long long>{3, 1});

  for (int k = 1; k <= 8; ++k) {
    Weight mu(2 * k, 0);
    EllData e = ell_vector(mu);
    for (int i = 1; i <= k; ++i) CHECK(e.ell[i - 1] == 2 * (k - i) + 1);
  }

  EllData e2 = ell_vector({2, 1, 1, 0});
  CHECK(e2.w == 2);
  CHECK(e2.ell == std::vector<long long>{5, 1});
}

TEST_CASE("ell is strictly decreasing with ell_k >= 1 on random weights") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const Weight mu = testutil::random_selfdual_weight(rng, k);
    REQUIRE(is_dominant(mu));
    REQUIRE(essentially_selfdual(mu).has_value());
    const EllData e = ell_vector(mu);
    for (size_t i = 1; i < e.ell.size(); ++i) CHECK(e.ell[i - 1] > e.ell[i]);
    CHECK(e.ell.back() >= 1);
  }
}

TEST_CASE("tempered identity lambda_j + rho_j = ell_j") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const Weight mu = testutil::random_selfdual_weight(rng, k);
    const SelfDualData sd = selfdual_data(mu);
    const EllData e = ell_vector(mu);
    const auto rho = rho_u(tempered_partition(k, 1), GroupKind::quaternionic(k));
    for (int j = 0; j < k; ++j) CHECK(sd.lambda[j] + rho[j] == e.ell[j]);
  }
}

TEST_CASE("sigma_twist_weight") {
  WeightTuple mu{{"v1", PlaceWeight{{2, 0, 0, -2}, std::nullopt}},
                 {"v2", PlaceWeight{{1, 1, -1, -1}, std::nullopt}}};

  std::map<std::string, std::string> id{{"v1", "v1"}, {"v2", "v2"}};
  CHECK(sigma_twist_weight(mu, id) == mu);

  std::map<std::string, std::string> swap{{"v1", "v2"}, {"v2", "v1"}};
  WeightTuple swapped = sigma_twist_weight(mu, swap);
  CHECK(swapped.at("v1") == mu.at("v2"));
  CHECK(swapped.at("v2") == mu.at("v1"));

  // equal components are fixed by every sigma
  WeightTuple eq{{"v1", PlaceWeight{{1, 0, 0, -1}, std::nullopt}},
                 {"v2", PlaceWeight{{1, 0, 0, -1}, std::nullopt}}};
  CHECK(sigma_twist_weight(eq, swap) == eq);

  // the stabilizer is closed under composition: both generators of the
  // stabilizer of eq (id and swap) compose back into it
  WeightTuple once = sigma_twist_weight(eq, swap);
  CHECK(sigma_twist_weight(once, swap) == eq);

  std::map<std::string, std::string> bad{{"v1", "v2"}, {"v2", "v2"}};
  CHECK_THROWS_AS(sigma_twist_weight(mu, bad), error);
}

TEST_CASE("complex place pairs ride along in sigma twists") {
  WeightTuple mu{{"v1", PlaceWeight{{2, 0}, Weight{1, -1}}},
                 {"v2", PlaceWeight{{0, 0}, Weight{3, 1}}}};
  std::map<std::string, std::string> swap{{"v1", "v2"}, {"v2", "v1"}};
  WeightTuple out = sigma_twist_weight(mu, swap);
  CHECK(out.at("v1").second == Weight{3, 1});
  CHECK(out.at("v2").second == Weight{1, -1});
}
