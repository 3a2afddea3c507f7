#include "core/global.hpp"

#include <algorithm>
#include <set>

#include "core/error.hpp"
#include "core/jl.hpp"

namespace coh {

void PlacesModel::validate() const {
  if (d < 1 || m < 1) fail(errc::invalid_input, "d and m must be positive");
  std::set<std::string> labels;
  for (const auto& p : arch) {
    if (!labels.insert(p.label).second)
      fail(errc::invalid_input, "duplicate place label " + p.label);
    if (p.kind == ArchPlaceKind::Kind::real_nonsplit && d % 2 != 0)
      fail(errc::invalid_input, "real non-split place " + p.label + " requires even d");
  }
  for (const auto& p : finite)
    if (!labels.insert(p.label).second)
      fail(errc::invalid_input, "duplicate place label " + p.label);
}

void GlobalRepDescriptor::validate() const {
  places.validate();
  const int n = places.n();
  for (const auto& p : places.arch) {
    auto it = arch.find(p.label);
    if (it == arch.end()) fail(errc::invalid_input, "missing component at place " + p.label);
    const ArchComponent& c = it->second;
    switch (p.kind) {
      case ArchPlaceKind::Kind::real_split:
        if (!c.module || c.module->kind.is_split() == false ||
            c.module->kind.ambient_n() != n)
          fail(errc::invalid_input, "place " + p.label + " needs a split GL_" +
                                        std::to_string(n) + "(R) module");
        break;
      case ArchPlaceKind::Kind::real_nonsplit:
        if (!c.module || c.module->kind.is_split() || c.module->kind.ambient_n() != n)
          fail(errc::invalid_input, "place " + p.label + " needs a GL_" +
                                        std::to_string(n / 2) + "(H) module");
        break;
      case ArchPlaceKind::Kind::complex_place:
        if (!c.parameter || c.parameter->n() != n)
          fail(errc::invalid_input,
               "place " + p.label + " needs an n-dimensional Weil parameter");
        break;
    }
  }
  for (const auto& p : places.finite) {
    auto it = finite.find(p.label);
    if (it == finite.end()) fail(errc::invalid_input, "missing component at place " + p.label);
    const FiniteComponent& c = it->second;
    if (p.split && !p.ramified) {
      if (!c.satake) fail(errc::invalid_input, "split unramified place " + p.label +
                                                   " needs Satake parameters");
      if (c.satake->n() != n)
        fail(errc::invalid_input, "Satake dimension at " + p.label + " must be n = " +
                                      std::to_string(n));
    } else if (!c.opaque) {
      fail(errc::invalid_input,
           "ramified or non-split place " + p.label + " must carry an opaque tag");
    }
  }
}

const ArchPlaceKind& GlobalRepDescriptor::arch_place(const std::string& label) const {
  for (const auto& p : places.arch)
    if (p.label == label) return p;
  fail(errc::invalid_input, "unknown archimedean place " + label);
}

IntPoly kunneth_poincare(const std::vector<IntPoly>& locals) {
  if (locals.empty()) fail(errc::invalid_input, "kunneth_poincare needs at least one factor");
  IntPoly out = IntPoly::one();
  for (const IntPoly& p : locals) out *= p;
  return out;
}

IntPoly kunneth_poincare(const GlobalRepDescriptor& desc) {
  desc.validate();
  std::vector<IntPoly> locals;
  for (const auto& p : desc.places.arch) {
    if (p.kind == ArchPlaceKind::Kind::complex_place)
      fail(errc::complex_place_unsupported,
           "no cohomology model at complex place " + p.label);
    locals.push_back(poincare(*desc.arch.at(p.label).module));
  }
  return kunneth_poincare(locals);
}

namespace {

// J'(w,l) -> J(w,l): same lambda and w, partition [0,1,...,1] -> [0,2,...,2]
AqModule tempered_lift(const AqModule& m) {
  AqModule out;
  out.kind = GroupKind::split_real(m.kind.ambient_n());
  out.partition = tempered_partition(m.kind.rank_k(), 2);
  out.lambda = m.lambda;
  out.epsilon = 0;
  return out;
}

}  // namespace

GlobalRepDescriptor global_jl(const GlobalRepDescriptor& desc) {
  desc.validate();
  GlobalRepDescriptor out = desc;
  for (const auto& p : desc.places.arch) {
    if (p.kind != ArchPlaceKind::Kind::real_nonsplit) continue;
    if (!desc.jl_cuspidal)
      fail(errc::invalid_input,
           "global_jl at a non-split place needs the asserted cuspidality flag");
    const AqModule& m = *desc.arch.at(p.label).module;
    if (!is_tempered(m))
      fail(errc::non_tempered_nonsplit,
           "component at " + p.label + " has non-tempered partition " + m.partition.str() +
               "; the fiber is ambiguous");
    out.arch[p.label].module = tempered_lift(m);
  }
  return out;
}

std::vector<WeilParameter> descriptor_parameters(const GlobalRepDescriptor& desc) {
  desc.validate();
  std::vector<WeilParameter> params;
  for (const auto& p : desc.places.arch) {
    const ArchComponent& c = desc.arch.at(p.label);
    switch (p.kind) {
      case ArchPlaceKind::Kind::real_split:
        params.push_back(parameter_of(*c.module));
        break;
      case ArchPlaceKind::Kind::real_nonsplit: {
        const AqModule& m = *c.module;
        if (!is_tempered(m))
          fail(errc::non_tempered_nonsplit,
               "no parameter for non-tempered component at " + p.label);
        params.push_back(parameter_of(tempered_lift(m)));
        break;
      }
      case ArchPlaceKind::Kind::complex_place:
        params.push_back(*c.parameter);
        break;
    }
  }
  return params;
}

std::optional<long long> global_purity(const GlobalRepDescriptor& desc) {
  return purity_weight(descriptor_parameters(desc));
}

CyclotomicSubfield global_rationality_field(const GlobalRepDescriptor& desc) {
  desc.validate();
  std::vector<CyclotomicSubfield> fields;
  for (const auto& p : desc.places.finite) {
    if (!p.split || p.ramified) continue;  // any finite S of bad places gives the same field
    fields.push_back(local_rationality_field(*desc.finite.at(p.label).satake));
  }
  if (fields.empty()) fail(errc::no_unramified_places, "no unramified split finite place");
  return compositum(fields);
}

bool jl_field_equality_check(const GlobalRepDescriptor& desc) {
  const CyclotomicSubfield before = global_rationality_field(desc);
  const CyclotomicSubfield after = global_rationality_field(global_jl(desc));
  return subfield_equal(before, after);
}

CheckReport check_regular_algebraic(const GlobalRepDescriptor& desc) {
  desc.validate();
  CheckReport report;
  report.pass = true;
  std::vector<WeilParameter> params;
  try {
    params = descriptor_parameters(desc);
  } catch (const error& e) {
    report.pass = false;
    report.reasons.push_back(e.what());
    return report;
  }
  size_t i = 0;
  for (const auto& p : desc.places.arch) {
    const WeilParameter& t = params[i++];
    if (!is_algebraic(t)) {
      report.pass = false;
      report.reasons.push_back("parameter at " + p.label + " is not algebraic");
      continue;
    }
    if (!is_regular(t)) {
      report.pass = false;
      report.reasons.push_back("parameter at " + p.label + " is not regular");
    }
  }
  return report;
}

}  // namespace coh
