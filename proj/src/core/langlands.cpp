#include "core/langlands.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace coh {

void WeilParameter::validate() const {
  if (pairs.empty()) fail(errc::invalid_input, "empty parameter");
  for (auto& [p, q] : pairs)
    if (!p.is_half_integer() || !q.is_half_integer())
      fail(errc::invalid_input, "parameter exponents must be half-integers");
}

bool WeilParameter::same_as(const WeilParameter& o) const {
  auto key = [](const WeilParameter& t) {
    std::vector<std::pair<Rat, Rat>> v = t.pairs;
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
      return std::tie(a.first.num, a.first.den, a.second.num, a.second.den) <
             std::tie(b.first.num, b.first.den, b.second.num, b.second.den);
    });
    return v;
  };
  return key(*this) == key(o);
}

WeilParameter parameter_of(const AqModule& m, Rat extra_twist) {
  if (!m.kind.is_split())
    fail(errc::invalid_direction, "parameter_of expects a split module");
  WeilParameter t;
  for (const BasicRep& f : induction_factors(m)) {
    if (f.tag == BasicRep::Tag::D) {
      // tau(D(l) (x) |det|^s)|_{C^*} = z^{l/2+s} zbar^{-l/2+s} (+) swap,
      // with s = -u/2
      const Rat s = -f.u / Rat(2);
      const Rat p = half(f.l) + s, q = -half(f.l) + s;
      t.pairs.emplace_back(p + extra_twist, q + extra_twist);
      t.pairs.emplace_back(q + extra_twist, p + extra_twist);
    } else {
      // sgn^e |det|^s over GL_2(R): two GL_1(R) characters |.|^{s +- 1/2}
      const Rat hi = f.u + half(1), lo = f.u - half(1);
      t.pairs.emplace_back(hi + extra_twist, hi + extra_twist);
      t.pairs.emplace_back(lo + extra_twist, lo + extra_twist);
    }
  }
  t.validate();
  return t;
}

bool is_algebraic(const WeilParameter& t) {
  t.validate();
  // p, q in (n-1)/2 + Z
  const Rat offset = half(t.n() - 1);
  auto ok = [&](const Rat& x) { return (x - offset).is_integer(); };
  for (auto& [p, q] : t.pairs)
    if (!ok(p) || !ok(q)) return false;
  return true;
}

bool is_regular(const WeilParameter& t) {
  if (!is_algebraic(t))
    fail(errc::not_algebraic, "regularity is defined for algebraic parameters only");
  for (size_t i = 0; i < t.pairs.size(); ++i)
    for (size_t j = i + 1; j < t.pairs.size(); ++j)
      if (t.pairs[i].first == t.pairs[j].first) return false;
  return true;
}

std::optional<long long> purity_weight(const std::vector<WeilParameter>& params, Rat shift) {
  if (params.empty()) fail(errc::invalid_input, "purity_weight needs at least one parameter");
  std::optional<Rat> w;
  for (const WeilParameter& t : params) {
    if (!is_algebraic(t)) fail(errc::not_algebraic, "purity_weight needs algebraic parameters");
    for (auto& [p, q] : t.pairs) {
      const Rat sum = p + q + shift + shift;
      if (!w)
        w = sum;
      else if (*w != sum)
        return std::nullopt;
    }
  }
  if (!w->is_integer()) return std::nullopt;
  return w->num;
}

}  // namespace coh
