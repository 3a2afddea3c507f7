#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace coh {

// Integer-coefficient polynomial in one variable X, sparse and exact.
// Division is available only when the remainder vanishes; Poincare series
// of the catalogs are built out of products of (1 + X^odd) factors and one
// exact division by (1 + X).
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::int64_t c) {
    if (c != 0) coeffs_[0] = c;
  }

  static IntPoly one() { return IntPoly(1); }
  static IntPoly x_pow(int d, std::int64_t c = 1);
  static IntPoly one_plus_xpow(int d);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int d) const;
  int min_degree() const;  // 0 on the zero polynomial
  int max_degree() const;
  std::int64_t sum_of_coeffs() const;

  const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }
  void set_coeff(int d, std::int64_t c);

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  // exact division; throws invalid_input if a nonzero remainder is left
  IntPoly divide_exact(const IntPoly& divisor) const;

  std::string pretty() const;  // e.g. "X^2 + X^3", "1 + X^5", "2X^4"

private:
  std::map<int, std::int64_t> coeffs_;
};

}  // namespace coh
