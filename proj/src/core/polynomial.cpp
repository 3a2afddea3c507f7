#include "core/polynomial.hpp"

#include <cassert>

#include "core/error.hpp"

namespace coh {

IntPoly IntPoly::x_pow(int d, std::int64_t c) {
  assert(d >= 0);
  IntPoly p;
  if (c != 0) p.coeffs_[d] = c;
  return p;
}

IntPoly IntPoly::one_plus_xpow(int d) {
  IntPoly p(1);
  p.coeffs_[d] += 1;
  return p;
}

std::int64_t IntPoly::coeff(int d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? 0 : it->second;
}

int IntPoly::min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

int IntPoly::max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

std::int64_t IntPoly::sum_of_coeffs() const {
  std::int64_t s = 0;
  for (auto& [d, c] : coeffs_) s += c;
  return s;
}

void IntPoly::set_coeff(int d, std::int64_t c) {
  if (c == 0)
    coeffs_.erase(d);
  else
    coeffs_[d] = c;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (auto& [d, c] : o.coeffs_) {
    auto it = coeffs_.find(d);
    if (it == coeffs_.end()) {
      coeffs_[d] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  std::map<int, std::int64_t> out;
  for (auto& [d1, c1] : coeffs_)
    for (auto& [d2, c2] : o.coeffs_) out[d1 + d2] += c1 * c2;
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  coeffs_ = std::move(out);
  return *this;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) fail(errc::invalid_input, "division by zero polynomial");
  IntPoly rem = *this;
  IntPoly quot;
  const int dd = divisor.max_degree();
  const std::int64_t dc = divisor.coeffs_.rbegin()->second;
  while (!rem.is_zero() && rem.max_degree() >= dd) {
    const int rd = rem.max_degree();
    const std::int64_t rc = rem.coeffs_.rbegin()->second;
    if (rc % dc != 0) fail(errc::invalid_input, "polynomial division is not exact");
    IntPoly term = x_pow(rd - dd, rc / dc);
    quot += term;
    IntPoly sub = term * divisor;
    for (auto& [d, c] : sub.coeffs_) sub.coeffs_[d] = -c;
    rem += sub;
  }
  if (!rem.is_zero()) fail(errc::invalid_input, "polynomial division is not exact");
  return quot;
}

std::string IntPoly::pretty() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [d, c] : coeffs_) {
    std::int64_t a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (d == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a);
      out += d == 1 ? "X" : "X^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace coh
