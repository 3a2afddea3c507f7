#include "core/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "core/error.hpp"

namespace coh {

namespace {

// exact division of integer polynomials, divisor monic; used only for
// (x^N - 1) / prod Phi_d
std::vector<long long> divide_monic(const std::vector<long long>& num,
                                    const std::vector<long long>& den) {
  assert(!den.empty() && den.back() == 1);
  std::vector<long long> rem = num;
  std::vector<long long> quot(num.size() - den.size() + 1, 0);
  for (int d = static_cast<int>(rem.size()) - 1; d >= static_cast<int>(den.size()) - 1; --d) {
    const long long c = rem[d];
    if (c == 0) continue;
    const int shift = d - (static_cast<int>(den.size()) - 1);
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
  }
  for (long long c : rem) {
    assert(c == 0);
    (void)c;
  }
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int N) {
  assert(N >= 1);
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(N); it != cache.end()) return it->second;

  std::function<std::vector<long long>(int)> phi = [&](int n) -> std::vector<long long> {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<long long> poly(n + 1, 0);  // x^n - 1
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) poly = divide_monic(poly, phi(d));
    cache[n] = poly;
    return poly;
  };
  return phi(N);
}

CycloField::CycloField(int N) : N_(N) {
  const std::vector<long long> phi = cyclotomic_polynomial(N);
  degree_ = static_cast<int>(phi.size()) - 1;
  // x^e mod Phi_N for e = 0..N-1, by repeated multiplication by x
  rows_.assign(N == 1 ? 1 : N, std::vector<long long>(degree_, 0));
  std::vector<long long> cur(degree_, 0);
  cur[0] = 1;
  rows_[0] = cur;
  for (int e = 1; e < static_cast<int>(rows_.size()); ++e) {
    std::vector<long long> next(degree_, 0);
    for (int i = 0; i + 1 < degree_; ++i) next[i + 1] = cur[i];
    const long long top = cur[degree_ - 1];
    if (top != 0)
      for (int i = 0; i < degree_; ++i) next[i] -= top * phi[i];
    rows_[e] = next;
    cur = std::move(next);
  }
  for (long long a = 0; a < N; ++a)
    if (std::gcd(a, static_cast<long long>(N)) == 1) units_.push_back(a);
  if (N == 1) units_ = {0};
}

const CycloField& CycloField::get(int N) {
  if (N < 1) fail(errc::invalid_input, "conductor must be >= 1");
  if (N > 1000) fail(errc::invalid_input, "conductor too large");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) slot.reset(new CycloField(N));
  return *slot;
}

const std::vector<long long>& CycloField::power_row(long long e) const {
  long long r = e % N_;
  if (r < 0) r += N_;
  return rows_[static_cast<size_t>(r)];
}

CyclotomicNumber CyclotomicNumber::zero(int N) {
  CyclotomicNumber x;
  x.N = N;
  x.coords.assign(CycloField::get(N).degree(), BigRat(0));
  return x;
}

CyclotomicNumber CyclotomicNumber::from_rational(int N, const BigRat& r) {
  CyclotomicNumber x = zero(N);
  x.coords[0] = r;
  return x;
}

CyclotomicNumber CyclotomicNumber::zeta_pow(int N, long long e) {
  CyclotomicNumber x = zero(N);
  const auto& row = CycloField::get(N).power_row(e);
  for (size_t i = 0; i < row.size(); ++i) x.coords[i] = row[i];
  return x;
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const BigRat& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < coords.size(); ++i)
    if (coords[i] != 0) return false;
  return true;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (N != o.N) fail(errc::invalid_input, "conductor mismatch; lift first");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  if (N != o.N) fail(errc::invalid_input, "conductor mismatch; lift first");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (N != o.N) fail(errc::invalid_input, "conductor mismatch; lift first");
  const CycloField& F = CycloField::get(N);
  const int d = F.degree();
  std::vector<BigRat> conv(2 * d - 1, BigRat(0));
  for (int i = 0; i < d; ++i) {
    if (coords[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coords[j] == 0) continue;
      conv[i + j] += coords[i] * o.coords[j];
    }
  }
  std::vector<BigRat> out(d, BigRat(0));
  for (int e = 0; e < 2 * d - 1; ++e) {
    if (conv[e] == 0) continue;
    const auto& row = F.power_row(e);
    for (int i = 0; i < d; ++i)
      if (row[i] != 0) out[i] += conv[e] * row[i];
  }
  coords = std::move(out);
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.N == b.N) return a.coords == b.coords;
  const int M = static_cast<int>(std::lcm(a.N, b.N));
  return a.lifted(M).coords == b.lifted(M).coords;
}

CyclotomicNumber CyclotomicNumber::galois(long long a) const {
  const CycloField& F = CycloField::get(N);
  if (std::gcd(a % N, static_cast<long long>(N)) != 1 && N > 1)
    fail(errc::invalid_input, "galois: " + std::to_string(a) + " is not a unit mod " +
                                  std::to_string(N));
  CyclotomicNumber out = zero(N);
  for (int i = 0; i < F.degree(); ++i) {
    if (coords[i] == 0) continue;
    const auto& row = F.power_row(a * i);
    for (int j = 0; j < F.degree(); ++j)
      if (row[j] != 0) out.coords[j] += coords[i] * row[j];
  }
  return out;
}

CyclotomicNumber CyclotomicNumber::lifted(int M) const {
  if (M == N) return *this;
  if (M % N != 0) fail(errc::invalid_input, "lift target must be a multiple of the conductor");
  const CycloField& F = CycloField::get(M);
  const long long step = M / N;  // zeta_N = zeta_M^step
  CyclotomicNumber out = zero(M);
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    const auto& row = F.power_row(step * static_cast<long long>(i));
    for (int j = 0; j < F.degree(); ++j)
      if (row[j] != 0) out.coords[j] += coords[i] * row[j];
  }
  return out;
}

int common_conductor(const std::vector<CyclotomicNumber>& xs) {
  long long N = 1;
  for (const auto& x : xs) N = std::lcm(N, static_cast<long long>(x.N));
  return static_cast<int>(N);
}

CyclotomicSubfield CyclotomicSubfield::from_generators(int N, const std::vector<long long>& gens) {
  const CycloField& F = CycloField::get(N);
  std::set<long long> H{N == 1 ? 0 : 1};
  for (long long g : gens) {
    long long r = g % N;
    if (r < 0) r += N;
    if (N > 1 && std::gcd(r, static_cast<long long>(N)) != 1)
      fail(errc::invalid_input, "subgroup generator " + std::to_string(g) + " is not a unit mod " +
                                    std::to_string(N));
    H.insert(r);
  }
  // close under multiplication
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<long long> cur(H.begin(), H.end());
    for (long long a : cur)
      for (long long b : cur)
        if (H.insert((a * b) % N).second) grew = true;
  }
  (void)F;
  CyclotomicSubfield out;
  out.N = N;
  out.elements.assign(H.begin(), H.end());
  return out;
}

CyclotomicSubfield CyclotomicSubfield::rationals(int N) {
  CyclotomicSubfield out;
  out.N = N;
  out.elements = CycloField::get(N).units();
  return out;
}

CyclotomicSubfield CyclotomicSubfield::full_cyclotomic(int N) {
  return from_generators(N, {});
}

bool CyclotomicSubfield::is_rationals() const {
  return elements.size() == CycloField::get(N).units().size();
}

std::vector<long long> CyclotomicSubfield::generators() const {
  std::vector<long long> gens;
  CyclotomicSubfield span = from_generators(N, {});
  for (long long a : elements) {
    if (std::binary_search(span.elements.begin(), span.elements.end(), a)) continue;
    gens.push_back(a);
    std::vector<long long> g = gens;
    span = from_generators(N, g);
    if (span.elements.size() == elements.size()) break;
  }
  return gens;
}

CyclotomicSubfield CyclotomicSubfield::lifted(int M) const {
  if (M == N) return *this;
  if (M % N != 0) fail(errc::invalid_input, "lift target must be a multiple of the conductor");
  CyclotomicSubfield out;
  out.N = M;
  for (long long a : CycloField::get(M).units())
    if (std::binary_search(elements.begin(), elements.end(), N == 1 ? 0 : a % N))
      out.elements.push_back(a);
  return out;
}

long long CyclotomicSubfield::field_degree() const {
  return static_cast<long long>(CycloField::get(N).units().size() / elements.size());
}

bool subfield_equal(const CyclotomicSubfield& a, const CyclotomicSubfield& b) {
  const int M = static_cast<int>(std::lcm(a.N, b.N));
  return a.lifted(M).elements == b.lifted(M).elements;
}

CyclotomicSubfield compositum(const std::vector<CyclotomicSubfield>& fields) {
  if (fields.empty()) return CyclotomicSubfield::rationals(1);
  long long M = 1;
  for (const auto& f : fields) M = std::lcm(M, static_cast<long long>(f.N));
  const int N = static_cast<int>(M);
  CyclotomicSubfield out = fields.front().lifted(N);
  for (size_t i = 1; i < fields.size(); ++i) {
    const CyclotomicSubfield g = fields[i].lifted(N);
    std::vector<long long> inter;
    std::set_intersection(out.elements.begin(), out.elements.end(), g.elements.begin(),
                          g.elements.end(), std::back_inserter(inter));
    out.elements = std::move(inter);
  }
  return out;
}

CyclotomicSubfield generated_subfield(const std::vector<CyclotomicNumber>& gens) {
  if (gens.empty()) return CyclotomicSubfield::rationals(1);
  const int N = common_conductor(gens);
  std::vector<CyclotomicNumber> lifted;
  lifted.reserve(gens.size());
  for (const auto& g : gens) lifted.push_back(g.lifted(N));
  CyclotomicSubfield out;
  out.N = N;
  for (long long a : CycloField::get(N).units()) {
    bool fixes_all = true;
    for (const auto& g : lifted)
      if (!(g.galois(a) == g)) {
        fixes_all = false;
        break;
      }
    if (fixes_all) out.elements.push_back(a);
  }
  return out;
}

std::string bigrat_str(const BigRat& r) {
  return r.str();
}

BigRat bigrat_parse(const std::string& s) {
  try {
    return BigRat(s);
  } catch (const std::exception&) {
    fail(errc::invalid_input, "cannot parse rational '" + s + "'");
  }
}

}  // namespace coh
