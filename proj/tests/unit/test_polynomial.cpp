#include <doctest.h>

#include "core/error.hpp"
#include "core/polynomial.hpp"

using namespace coh;

TEST_CASE("polynomial arithmetic") {
  IntPoly p = IntPoly::one_plus_xpow(1) * IntPoly::one_plus_xpow(5);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(5) == 1);
  CHECK(p.coeff(6) == 1);
  CHECK(p.sum_of_coeffs() == 4);
  CHECK(p.max_degree() == 6);

  IntPoly q = p.divide_exact(IntPoly::one_plus_xpow(1));
  CHECK(q == IntPoly::one_plus_xpow(5));
}

TEST_CASE("inexact division throws") {
  IntPoly p = IntPoly::one_plus_xpow(2);  // 1 + X^2
  CHECK_THROWS_AS(p.divide_exact(IntPoly::one_plus_xpow(1)), error);
}

TEST_CASE("pretty printing") {
  CHECK(IntPoly::one_plus_xpow(5).pretty() == "1 + X^5");
  CHECK((IntPoly::x_pow(2) + IntPoly::x_pow(3)).pretty() == "X^2 + X^3");
  CHECK((IntPoly::x_pow(4, 2) + IntPoly::x_pow(5, 2)).pretty() == "2X^4 + 2X^5");
  CHECK(IntPoly().pretty() == "0");
  CHECK(IntPoly::x_pow(1).pretty() == "X");
}

TEST_CASE("cancellation removes zero coefficients") {
  IntPoly p = IntPoly::x_pow(3);
  IntPoly minus = IntPoly::x_pow(3, -1);
  p += minus;
  CHECK(p.is_zero());
}
