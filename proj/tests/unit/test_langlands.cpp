#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/error.hpp"
#include "core/langlands.hpp"
#include "test_util.hpp"

using namespace coh;

namespace {

const SelfDualData zero2{0, {0, 0}};

WeilParameter pairs_of(std::vector<std::pair<Rat, Rat>> v) { return WeilParameter{std::move(v)}; }

// the parameter of the residual representation built from two twisted
// copies of the weight-2 discrete series
WeilParameter grobner_parameter(long long k) {
  return pairs_of({{half(k + 3), -half(k + 1)},
                   {-half(k + 1), half(k + 3)},
                   {half(k + 1), -half(k + 3)},
                   {-half(k + 3), half(k + 1)}});
}

bool param_has_pair(const WeilParameter& t, Rat p, Rat q) {
  return std::find(t.pairs.begin(), t.pairs.end(), std::make_pair(p, q)) != t.pairs.end();
}

}  // namespace

TEST_CASE("parameter_of the [0,4] module") {
  const AqModule m{GroupKind::split_real(4), {{0, 4}}, zero2, 0};
  const WeilParameter t = parameter_of(m);
  REQUIRE(t.n() == 4);
  CHECK(param_has_pair(t, half(3), -half(1)));
  CHECK(param_has_pair(t, -half(1), half(3)));
  CHECK(param_has_pair(t, half(1), -half(3)));
  CHECK(param_has_pair(t, -half(3), half(1)));
  CHECK(is_algebraic(t));
  CHECK(is_regular(t));
}

TEST_CASE("parameter_of the tempered [0,2,2] module") {
  const AqModule m{GroupKind::split_real(4), {{0, 2, 2}}, zero2, 0};
  const WeilParameter t = parameter_of(m);
  CHECK(param_has_pair(t, half(3), -half(3)));
  CHECK(param_has_pair(t, -half(3), half(3)));
  CHECK(param_has_pair(t, half(1), -half(1)));
  CHECK(param_has_pair(t, -half(1), half(1)));
}

TEST_CASE("parameter of a [2,...,2]-shaped module has the norm characters") {
  // partition [2,2], lambda = (a, 0): blocks D(w, ell_1) and the GL_2(R)
  // character, giving (z zbar)^{(1-w)/2 +- 0} style pairs with ell_k = 1
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    Weight mu = testutil::random_selfdual_weight(rng, k);
    SelfDualData sd = selfdual_data(mu);
    if (sd.lambda[k - 1] != 0) {  // admissibility of [2,...,2] forces lambda_k = 0
      mu = Weight(2 * k, 0);
      sd = selfdual_data(mu);
    }
    OrderedPartition np;
    np.parts.assign(k, 2);  // [2,2,...,2]: n_0 = 2 and k-1 complex blocks
    const AqModule m{GroupKind::split_real(2 * k), np, sd, 0};
    const WeilParameter t = parameter_of(m);
    const EllData e = ell_vector(mu);
    for (int i = 0; i < k - 1; ++i) {
      CHECK(param_has_pair(t, half(e.ell[i] - e.w), half(-e.ell[i] - e.w)));
      CHECK(param_has_pair(t, half(-e.ell[i] - e.w), half(e.ell[i] - e.w)));
    }
    // ell_k = 1 always; the anisotropic block contributes the two norm
    // characters (z zbar)^{(+-1 - w)/2}
    CHECK(e.ell[k - 1] == 1);
    CHECK(param_has_pair(t, half(1 - e.w), half(1 - e.w)));
    CHECK(param_has_pair(t, half(-1 - e.w), half(-1 - e.w)));
  }
}

TEST_CASE("is_algebraic") {
  const AqModule m04{GroupKind::split_real(4), {{0, 4}}, zero2, 0};
  CHECK(is_algebraic(parameter_of(m04)));

  for (long long k = 0; k <= 10; ++k)
    CHECK(is_algebraic(grobner_parameter(k)) == (k % 2 == 0));

  // all-integer exponents in dimension 4 are not in 3/2 + Z
  CHECK(!is_algebraic(pairs_of({{1, 0}, {0, 1}, {2, 0}, {0, 2}})));
}

TEST_CASE("is_regular") {
  for (long long k = 0; k <= 10; k += 2) CHECK(is_regular(grobner_parameter(k)));

  WeilParameter rep = pairs_of({{half(1), half(1)}, {half(1), half(1)}});
  CHECK(!is_regular(rep));

  WeilParameter non_alg = pairs_of({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}});
  CHECK_THROWS_AS(is_regular(non_alg), error);
}

TEST_CASE("purity_weight") {
  const AqModule t022{GroupKind::split_real(4), {{0, 2, 2}}, zero2, 0};
  auto w = purity_weight({parameter_of(t022)});
  REQUIRE(w.has_value());
  CHECK(*w == 0);

  // sums 1 and -1 never agree
  for (long long k = 0; k <= 10; k += 2)
    CHECK(!purity_weight({grobner_parameter(k)}).has_value());

  auto single = purity_weight({pairs_of({{half(1), half(3)}})});
  REQUIRE(single.has_value());
  CHECK(*single == 2);

  // the shift argument moves the value by 2*shift, never the existence
  auto shifted = purity_weight({parameter_of(t022)}, half(-3));
  REQUIRE(shifted.has_value());
  CHECK(*shifted == -3);
}

TEST_CASE("tempered parameters: algebraic iff ell_i - w odd, always regular, purity -w") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const Weight mu = testutil::random_selfdual_weight(rng, k);
    const EllData e = ell_vector(mu);
    const AqModule m{GroupKind::split_real(2 * k), tempered_partition(k, 2), selfdual_data(mu), 0};
    const WeilParameter t = parameter_of(m);
    const bool all_odd = std::all_of(e.ell.begin(), e.ell.end(),
                                     [&](long long l) { return (l - e.w) % 2 != 0; });
    CHECK(is_algebraic(t) == all_odd);
    // the parity identity ell_i - w = 2(-mu_{n-i+1} + k - i) + 1 makes
    // every tempered parameter algebraic
    CHECK(all_odd);
    CHECK(is_regular(t));
    auto w = purity_weight({t});
    REQUIRE(w.has_value());
    CHECK(*w == -e.w);
  }
}

TEST_CASE("swapping (p,q) in every pair preserves the predicates") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const Weight mu = testutil::random_selfdual_weight(rng, k);
    const AqModule m{GroupKind::split_real(2 * k), tempered_partition(k, 2), selfdual_data(mu), 0};
    WeilParameter t = parameter_of(m);
    WeilParameter swapped = t;
    for (auto& [p, q] : swapped.pairs) std::swap(p, q);
    CHECK(is_algebraic(t) == is_algebraic(swapped));
    CHECK(purity_weight({t}) == purity_weight({swapped}));
  }
}
