#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace coh {

// Small exact rational. The representation-theoretic layer only ever needs
// halves of integers (Langlands exponents, determinant twists), so a plain
// int64 fraction is plenty; cyclotomic arithmetic uses multiprecision
// rationals separately.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    assert(den != 0);
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  // member of (1/2)Z
  bool is_half_integer() const { return den == 1 || den == 2; }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a) { return Rat(-a.num, a.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) {
    assert(b.num != 0);
    return Rat(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat half(std::int64_t n) { return Rat(n, 2); }

}  // namespace coh
