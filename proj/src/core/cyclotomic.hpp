#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace coh {

using BigRat = boost::multiprecision::cpp_rational;

// Per-conductor data for Q(zeta_N) = Q[x]/Phi_N(x): the cyclotomic
// polynomial, reduction rows for every power zeta^e, and the unit group
// (Z/N)^*. Built once per N and cached.
class CycloField {
public:
  static const CycloField& get(int N);

  int conductor() const { return N_; }
  int degree() const { return degree_; }  // phi(N)
  // coords of zeta^e over the basis 1, zeta, ..., zeta^{phi(N)-1}
  const std::vector<long long>& power_row(long long e) const;
  const std::vector<long long>& units() const { return units_; }  // sorted

private:
  explicit CycloField(int N);
  int N_;
  int degree_;
  std::vector<std::vector<long long>> rows_;  // index e in [0, N)
  std::vector<long long> units_;
};

// coefficients of Phi_N, constant term first
std::vector<long long> cyclotomic_polynomial(int N);

// Exact element of Q(zeta_N) in the power basis. Equality of coordinate
// vectors is equality of numbers; all arithmetic re-reduces mod Phi_N.
struct CyclotomicNumber {
  int N = 1;
  std::vector<BigRat> coords;  // size phi(N)

  static CyclotomicNumber zero(int N);
  static CyclotomicNumber from_rational(int N, const BigRat& r);
  static CyclotomicNumber zeta_pow(int N, long long e);

  bool is_zero() const;
  bool is_rational() const;
  BigRat rational_part() const { return coords.empty() ? BigRat(0) : coords[0]; }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  // sigma_a: zeta -> zeta^a, gcd(a, N) = 1
  CyclotomicNumber galois(long long a) const;
  // image in Q(zeta_M), N | M
  CyclotomicNumber lifted(int M) const;
};

// common conductor (lcm) for a set of elements
int common_conductor(const std::vector<CyclotomicNumber>& xs);

// Subfield of Q(zeta_N) as the fixed field of a subgroup H of (Z/N)^*,
// stored as the sorted element list of H. H = (Z/N)^* is Q itself.
struct CyclotomicSubfield {
  int N = 1;
  std::vector<long long> elements;

  static CyclotomicSubfield from_generators(int N, const std::vector<long long>& gens);
  static CyclotomicSubfield rationals(int N = 1);  // fixed field Q
  static CyclotomicSubfield full_cyclotomic(int N);  // H = {1}, the whole Q(zeta_N)

  bool is_rationals() const;
  // a small generating set of H (greedy), for serialization
  std::vector<long long> generators() const;
  // preimage of H under (Z/M)^* -> (Z/N)^*, N | M; same fixed field
  CyclotomicSubfield lifted(int M) const;
  long long field_degree() const;  // [fixed field : Q]
};

bool subfield_equal(const CyclotomicSubfield& a, const CyclotomicSubfield& b);

// Galois-correspondence compositum: lift everything to the lcm conductor
// and intersect the subgroups. Empty input gives Q.
CyclotomicSubfield compositum(const std::vector<CyclotomicSubfield>& fields);

// fixed field of the stabilizer of a set of elements, i.e. the subfield
// they generate
CyclotomicSubfield generated_subfield(const std::vector<CyclotomicNumber>& gens);

std::string bigrat_str(const BigRat& r);
BigRat bigrat_parse(const std::string& s);

}  // namespace coh
