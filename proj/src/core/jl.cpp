#include "core/jl.hpp"

#include <cassert>

#include "core/error.hpp"

namespace coh {

BasicRep BasicRep::make_D(Rat u, long long l) {
  assert(l >= 1);
  return BasicRep{Tag::D, u, l, 0};
}

BasicRep BasicRep::make_F(Rat u, long long l) {
  assert(l >= 1);
  return BasicRep{Tag::F, u, l, 0};
}

BasicRep BasicRep::sgn_det(int eps, Rat s) { return BasicRep{Tag::SgnDet, s, 0, eps}; }

BasicRep BasicRep::det_prime(Rat s) { return BasicRep{Tag::DetPrime, s, 0, 0}; }

BasicRep lj_basic(const BasicRep& r) {
  switch (r.tag) {
    case BasicRep::Tag::D:
      return BasicRep::make_F(r.u, r.l);
    case BasicRep::Tag::SgnDet:
      return BasicRep::det_prime(r.u);
    case BasicRep::Tag::F:
    case BasicRep::Tag::DetPrime:
      fail(errc::invalid_direction, "lj_basic expects a split-side building block");
  }
  fail(errc::invalid_direction, "unreachable");
}

std::vector<BasicRep> induction_factors(const AqModule& m) {
  const InductionDatum d = langlands_data(m);
  std::vector<BasicRep> out;
  for (const ComplexBlock& b : d.blocks) {
    const Rat u(folded_u(d, b));
    out.push_back(m.kind.is_split() ? BasicRep::make_D(u, b.l) : BasicRep::make_F(u, b.l));
  }
  for (const ScalarBlock& s : d.scalars) {
    const Rat shift = Rat(s.shift) - half(d.w);  // |det|^{shift - w/2}
    out.push_back(m.kind.is_split() ? BasicRep::sgn_det(s.eps, shift)
                                    : BasicRep::det_prime(shift));
  }
  return out;
}

AqModule transfer(const AqModule& m) {
  if (!m.kind.is_split()) fail(errc::invalid_direction, "transfer expects a split module");
  const OrderedPartition kp = halved(m.partition);  // throws OddPart
  AqModule out;
  out.kind = GroupKind::quaternionic(m.kind.rank_k());
  out.partition = canonical_representative(kp);
  out.lambda = m.lambda;
  out.epsilon = 0;
  return out;
}

std::vector<AqModule> fiber(const AqModule& m, const Weight& mu) {
  if (m.kind.is_split()) fail(errc::invalid_direction, "fiber expects a quaternionic module");
  std::vector<AqModule> out;
  for (const AqModule& cand : enumerate_coh(GroupKind::split_real(m.kind.ambient_n()), mu))
    if (transfer(cand) == m) out.push_back(cand);
  return out;
}

}  // namespace coh
