#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/aq_catalog.hpp"
#include "core/hecke.hpp"
#include "core/langlands.hpp"
#include "core/polynomial.hpp"

namespace coh {

// Desk-scale model of the number field and the division algebra: a finite
// list of labelled places plus the index/rank data (d, m, n = dm). The only
// structural constraint the bookkeeping needs is d even wherever a real
// place is non-split.
struct ArchPlaceKind {
  enum class Kind { real_split, real_nonsplit, complex_place };
  std::string label;
  Kind kind;
};

struct FinitePlaceDesc {
  std::string label;
  bool split = true;
  bool ramified = false;
};

struct PlacesModel {
  int d = 1;
  int m = 1;
  std::vector<ArchPlaceKind> arch;
  std::vector<FinitePlaceDesc> finite;

  int n() const { return d * m; }
  void validate() const;
};

// Per-place representation data. Real places carry catalog modules, complex
// places carry a raw parameter, finite split unramified places carry Satake
// parameters, everything else is an opaque tag.
struct ArchComponent {
  std::optional<AqModule> module;
  std::optional<WeilParameter> parameter;
};

struct FiniteComponent {
  std::optional<SatakeParams> satake;
  std::optional<std::string> opaque;
};

struct GlobalRepDescriptor {
  PlacesModel places;
  bool jl_cuspidal = false;  // user-asserted cuspidality of the transfer
  std::map<std::string, ArchComponent> arch;
  std::map<std::string, FiniteComponent> finite;

  void validate() const;
  const ArchPlaceKind& arch_place(const std::string& label) const;
};

// product of local Poincare polynomials (Kunneth rule); real places only
IntPoly kunneth_poincare(const std::vector<IntPoly>& locals);
// same, over the real archimedean components of a descriptor; a complex
// place is ComplexPlaceUnsupported
IntPoly kunneth_poincare(const GlobalRepDescriptor& desc);

// The split-group descriptor of the global transfer: J'(w,l) -> J(w,l) at
// real non-split places (requires the tempered module and the asserted
// cuspidality flag), identity at split places, opaque data passed through.
GlobalRepDescriptor global_jl(const GlobalRepDescriptor& desc);

// Langlands parameters of all archimedean components, in place order:
// real split directly, real non-split through the J(w,l) lift, complex
// places as stored.
std::vector<WeilParameter> descriptor_parameters(const GlobalRepDescriptor& desc);

// purity_weight across the parameters of all archimedean places
std::optional<long long> global_purity(const GlobalRepDescriptor& desc);

// compositum of the local rationality fields over the unramified split
// finite places; NoUnramifiedPlaces if there are none
CyclotomicSubfield global_rationality_field(const GlobalRepDescriptor& desc);

// the finite-place field equality across the transfer, as an executable
// assertion: compares global_rationality_field on both sides
bool jl_field_equality_check(const GlobalRepDescriptor& desc);

// the regular-algebraic predicate pipeline over a descriptor
struct CheckReport {
  bool pass = false;
  std::vector<std::string> reasons;
};

CheckReport check_regular_algebraic(const GlobalRepDescriptor& desc);

}  // namespace coh
